// Copyright 2026 The extremal-primes Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "extremal/checkpoint.hpp"

#include <zlib.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <nlohmann/json.hpp>

#include "extremal/errors.hpp"

namespace extremal {

using nlohmann::json;

namespace {

std::string exact_decimal(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

double parse_decimal(const std::string& s) {
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || *end != '\0') throw CorruptCheckpoint("checkpoint corrupt: bad number '" + s + "'");
  return v;
}

json sum_state(const CompensatedSum& s) {
  return json::array({exact_decimal(s.sum()), exact_decimal(s.compensation())});
}

CompensatedSum sum_from(const json& j) {
  return CompensatedSum(parse_decimal(j.at(0).get<std::string>()),
                        parse_decimal(j.at(1).get<std::string>()));
}

std::string crc_hex(const std::string& text) {
  const uLong crc = crc32(0L, reinterpret_cast<const Bytef*>(text.data()),
                          static_cast<uInt>(text.size()));
  std::ostringstream os;
  os << std::hex << std::setw(8) << std::setfill('0') << crc;
  return os.str();
}

json body_of(const Checkpoint& cp) {
  const auto& st = cp.state;
  json stack = json::array();
  for (const auto& v : st.stack) {
    json ties = json::array();
    for (const auto& t : v.collinear_predecessors) ties.push_back({t.p, t.pi});
    stack.push_back({{"p", v.point.p}, {"pi", v.point.pi}, {"ties", ties}});
  }
  json j;
  j["format_version"] = kCheckpointFormatVersion;
  j["limit_processed"] = st.last_processed;
  j["pi_at_limit"] = st.pi_at_last;
  j["confirmed_count"] = st.confirmed_prefix_len;
  j["stack"] = stack;
  j["sum_inv_state"] = sum_state(cp.sums.sum_inv);
  j["sum_invlog_state"] = sum_state(cp.sums.sum_invlog);
  j["config_echo"] = {{"limit", cp.config.limit},
                      {"segment_size", cp.config.segment_size},
                      {"workers", cp.config.workers}};
  return j;
}

}  // namespace

Checkpoint make_checkpoint(const HullState& state, const SieveConfig& config) {
  Checkpoint cp;
  cp.state = state;
  cp.config = config;
  for (std::size_t i = 0; i < state.confirmed_prefix_len; ++i) cp.sums.add(state.stack[i].point.p);
  return cp;
}

std::string checkpoint_to_string(const Checkpoint& cp) {
  json j = body_of(cp);
  const std::string body = j.dump();
  j["integrity"] = "crc32:" + crc_hex(body);
  return j.dump(1) + "\n";
}

Checkpoint checkpoint_from_string(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw CorruptCheckpoint(std::string("checkpoint corrupt: ") + e.what());
  }
  if (!j.is_object() || !j.contains("format_version") || !j["format_version"].is_number_integer()) {
    throw CorruptCheckpoint("checkpoint corrupt: missing format_version");
  }
  const int version = j["format_version"].get<int>();
  if (version != kCheckpointFormatVersion) {
    throw VersionMismatch("checkpoint format_version " + std::to_string(version) +
                          " is not supported (expected " +
                          std::to_string(kCheckpointFormatVersion) + ")");
  }
  if (!j.contains("integrity") || !j["integrity"].is_string()) {
    throw CorruptCheckpoint("checkpoint corrupt: missing integrity field");
  }
  const std::string stored = j["integrity"].get<std::string>();
  j.erase("integrity");
  if (stored != "crc32:" + crc_hex(j.dump())) {
    throw CorruptCheckpoint("checkpoint corrupt: checksum mismatch");
  }

  Checkpoint cp;
  try {
    auto& st = cp.state;
    st.last_processed = j.at("limit_processed").get<std::uint64_t>();
    st.pi_at_last = j.at("pi_at_limit").get<std::uint64_t>();
    st.confirmed_prefix_len = j.at("confirmed_count").get<std::size_t>();
    for (const auto& v : j.at("stack")) {
      HullVertex hv;
      hv.point = {v.at("p").get<std::uint64_t>(), v.at("pi").get<std::uint64_t>()};
      for (const auto& t : v.at("ties")) {
        hv.collinear_predecessors.push_back({t.at(0).get<std::uint64_t>(), t.at(1).get<std::uint64_t>()});
      }
      st.stack.push_back(std::move(hv));
    }
    cp.sums.sum_inv = sum_from(j.at("sum_inv_state"));
    cp.sums.sum_invlog = sum_from(j.at("sum_invlog_state"));
    cp.sums.count = st.confirmed_prefix_len;
    const auto& cfg = j.at("config_echo");
    cp.config.limit = cfg.at("limit").get<std::uint64_t>();
    cp.config.segment_size = cfg.at("segment_size").get<std::uint64_t>();
    cp.config.workers = cfg.at("workers").get<unsigned>();
  } catch (const json::exception& e) {
    throw CorruptCheckpoint(std::string("checkpoint corrupt: ") + e.what());
  }

  auto& st = cp.state;
  if (st.confirmed_prefix_len > st.stack.size()) {
    throw CorruptCheckpoint("checkpoint corrupt: confirmed_count exceeds stack size");
  }
  for (std::size_t i = 0; i < st.stack.size(); ++i) {
    st.stack[i].status = i < st.confirmed_prefix_len ? VertexStatus::confirmed : VertexStatus::provisional;
    if (i > 0 && !(st.stack[i - 1].point.p < st.stack[i].point.p &&
                   st.stack[i - 1].point.pi < st.stack[i].point.pi)) {
      throw CorruptCheckpoint("checkpoint corrupt: stack is not increasing");
    }
  }
  if (!st.stack.empty() && st.stack.back().point.p > st.last_processed) {
    throw CorruptCheckpoint("checkpoint corrupt: stack extends past limit_processed");
  }
  if (!(make_checkpoint(st, cp.config).sums == cp.sums)) {
    throw CorruptCheckpoint("checkpoint corrupt: sums disagree with confirmed prefix");
  }
  return cp;
}

void save_checkpoint(const Checkpoint& cp, const std::filesystem::path& path) {
  const auto tmp = std::filesystem::path(path.string() + ".tmp");
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << checkpoint_to_string(cp);
    out.flush();
    if (!out) throw std::runtime_error("write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

Checkpoint load_checkpoint(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read checkpoint " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return checkpoint_from_string(ss.str());
}

}  // namespace extremal
