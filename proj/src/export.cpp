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

#include "extremal/export.hpp"

#include <cmath>
#include <cstdio>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "extremal/analysis.hpp"

namespace extremal {

using nlohmann::json;

namespace {

constexpr const char* kHeader = "k,e_k,pi_e,delta_num,delta_den,lens_len,ratio_next,sum_inv,sum_invlog,ties";

const char* status_name(VertexStatus s) {
  return s == VertexStatus::confirmed ? "confirmed" : "provisional";
}

VertexStatus parse_status(const std::string& s) {
  if (s == "confirmed") return VertexStatus::confirmed;
  if (s == "provisional") return VertexStatus::provisional;
  throw std::invalid_argument("unknown status '" + s + "'");
}

std::string join(const std::vector<std::uint64_t>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ';';
    out += std::to_string(v[i]);
  }
  return out;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::uint64_t parse_u64(const std::string& s) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
    throw std::invalid_argument("expected a natural number, got '" + s + "'");
  }
  return std::stoull(s);
}

std::int64_t parse_i64(const std::string& s) {
  std::size_t pos = 0;
  const long long v = std::stoll(s, &pos);
  if (pos != s.size()) throw std::invalid_argument("expected an integer, got '" + s + "'");
  return v;
}

template <class T>
std::string opt(const std::optional<T>& v) {
  return v ? std::to_string(*v) : std::string();
}

// Fills the successor-derived fields of records[i] from records[i + 1].
void link_successors(std::vector<ExtremalRecord>& recs, std::size_t i) {
  auto& r = recs[i];
  if (!r.lens_len) return;
  r.ratio_next = static_cast<double>(r.e + *r.lens_len) / static_cast<double>(r.e);
  if (i + 1 < recs.size()) {
    r.successor_confirmed = recs[i + 1].status == VertexStatus::confirmed;
  } else {
    // A successor absent from a confirmed-only export is provisional.
    r.successor_confirmed = false;
  }
}

std::string reduced(std::uint64_t num, std::uint64_t den) {
  const std::uint64_t g = std::gcd(num, den);
  return std::to_string(num / g) + "/" + std::to_string(den / g);
}

}  // namespace

std::string format_real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%#.12g", v);
  return buf;
}

std::string records_to_csv(std::span<const ExtremalRecord> records, bool include_status) {
  std::ostringstream os;
  os << kHeader << (include_status ? ",status" : "") << '\n';
  ConjectureSums sums;
  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto& r = records[i];
    sums.add(r.e);
    os << r.k << ',' << r.e << ',' << r.pi_e << ',';
    if (r.delta) {
      os << r.delta->dpi << ',' << r.delta->dp;
    } else {
      os << ',';
    }
    os << ',' << opt(r.lens_len) << ',' << (r.ratio_next ? format_real(*r.ratio_next) : "") << ','
       << format_real(sums.sum_inv.value()) << ',' << format_real(sums.sum_invlog.value()) << ','
       << (i + 1 < records.size() ? join(records[i + 1].ties) : std::string());
    if (include_status) os << ',' << status_name(r.status);
    os << '\n';
  }
  return os.str();
}

std::vector<ExtremalRecord> records_from_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) throw std::invalid_argument("empty CSV");
  bool has_status = false;
  if (line == std::string(kHeader) + ",status") {
    has_status = true;
  } else if (line != kHeader) {
    throw std::invalid_argument("unexpected CSV header: " + line);
  }
  std::vector<ExtremalRecord> recs;
  std::vector<std::vector<std::uint64_t>> lens_ties;
  std::vector<std::string> printed_ratio;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto f = split(line, ',');
    if (f.size() != (has_status ? 11u : 10u)) {
      throw std::invalid_argument("wrong field count in CSV row: " + line);
    }
    ExtremalRecord r;
    r.k = parse_u64(f[0]);
    r.e = parse_u64(f[1]);
    r.pi_e = parse_u64(f[2]);
    if (!f[3].empty() || !f[4].empty()) r.delta = ExactSlope{parse_i64(f[3]), parse_i64(f[4])};
    if (!f[5].empty()) r.lens_len = parse_u64(f[5]);
    r.status = has_status ? parse_status(f[10]) : VertexStatus::confirmed;
    std::vector<std::uint64_t> ties;
    if (!f[9].empty()) {
      for (const auto& t : split(f[9], ';')) ties.push_back(parse_u64(t));
    }
    if (r.k != recs.size() + 1) throw std::invalid_argument("CSV rows out of order at k=" + f[0]);
    if (r.delta.has_value() != r.lens_len.has_value()) {
      throw std::invalid_argument("incomplete successor fields at k=" + f[0]);
    }
    lens_ties.push_back(std::move(ties));
    printed_ratio.push_back(f[6]);
    recs.push_back(std::move(r));
  }
  for (std::size_t i = 0; i < recs.size(); ++i) {
    if (i > 0) recs[i].ties = lens_ties[i - 1];
    link_successors(recs, i);
    const std::string expect = recs[i].ratio_next ? format_real(*recs[i].ratio_next) : "";
    if (expect != printed_ratio[i]) {
      throw std::invalid_argument("ratio_next disagrees with e_k and lens_len at k=" +
                                  std::to_string(recs[i].k));
    }
  }
  return recs;
}

std::string records_to_json(std::span<const ExtremalRecord> records, std::uint64_t limit,
                            bool include_status) {
  json arr = json::array();
  ConjectureSums sums;
  std::size_t confirmed = 0;
  for (const auto& r : records) {
    sums.add(r.e);
    confirmed += r.status == VertexStatus::confirmed;
    json j{{"k", r.k}, {"e_k", r.e}, {"pi_e", r.pi_e}, {"ties", r.ties}};
    if (r.delta) {
      j["delta_num"] = r.delta->dpi;
      j["delta_den"] = r.delta->dp;
      j["lens_len"] = *r.lens_len;
      j["ratio_next"] = *r.ratio_next;
      j["successor_confirmed"] = r.successor_confirmed;
    }
    j["sum_inv"] = sums.sum_inv.value();
    j["sum_invlog"] = sums.sum_invlog.value();
    if (include_status) j["status"] = status_name(r.status);
    arr.push_back(std::move(j));
  }
  json doc{{"metadata",
            {{"limit", limit}, {"records", records.size()}, {"confirmed", confirmed},
             {"columns", split(kHeader, ',')}}},
           {"records", arr}};
  return doc.dump(1) + "\n";
}

std::vector<ExtremalRecord> records_from_json(const std::string& text) {
  std::vector<ExtremalRecord> recs;
  try {
    const json doc = json::parse(text);
    for (const auto& j : doc.at("records")) {
      ExtremalRecord r;
      r.k = j.at("k").get<std::size_t>();
      r.e = j.at("e_k").get<std::uint64_t>();
      r.pi_e = j.at("pi_e").get<std::uint64_t>();
      r.ties = j.at("ties").get<std::vector<std::uint64_t>>();
      r.status = j.contains("status") ? parse_status(j["status"].get<std::string>())
                                      : VertexStatus::confirmed;
      if (j.contains("delta_num")) {
        r.delta = ExactSlope{j.at("delta_num").get<std::int64_t>(), j.at("delta_den").get<std::int64_t>()};
        r.lens_len = j.at("lens_len").get<std::uint64_t>();
        r.ratio_next = j.at("ratio_next").get<double>();
        r.successor_confirmed = j.at("successor_confirmed").get<bool>();
      }
      recs.push_back(std::move(r));
    }
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed records JSON: ") + e.what());
  }
  return recs;
}

std::vector<ExtremalRecord> parse_records(const std::string& text) {
  const auto pos = text.find_first_not_of(" \t\r\n");
  if (pos != std::string::npos && text[pos] == '{') return records_from_json(text);
  return records_from_csv(text);
}

void export_records(std::span<const ExtremalRecord> records, ExportFormat format,
                    std::uint64_t limit, bool include_status, std::ostream& out) {
  if (records.empty()) throw std::invalid_argument("nothing to export");
  out << (format == ExportFormat::csv ? records_to_csv(records, include_status)
                                      : records_to_json(records, limit, include_status));
  if (!out) throw std::runtime_error("write failed");
}

std::string m_records_to_csv(std::span<const MRecord> records) {
  std::ostringstream os;
  os << "k,m_k,pi_m,value,delta_num,delta_den,lens_len,ratio_next,ties,status\n";
  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto& r = records[i];
    os << r.k << ',' << r.m << ',' << r.pi << ',' << reduced(r.m, r.pi) << ',';
    if (r.delta) {
      os << r.delta->num.str() << ',' << r.delta->den.str();
    } else {
      os << ',';
    }
    os << ',' << opt(r.lens_len) << ',' << (r.ratio_next ? format_real(*r.ratio_next) : "") << ','
       << (i + 1 < records.size() ? join(records[i + 1].ties) : std::string()) << ','
       << status_name(r.status) << '\n';
  }
  return os.str();
}

std::string lens_profiles_to_csv(std::span<const lens::LensProfile> rows, lens::Real alpha) {
  auto cell = [](const std::optional<lens::Real>& v) {
    return v ? format_real(static_cast<double>(*v)) : std::string();
  };
  std::ostringstream os;
  os << "x,alpha,theta_minus,theta_plus,nearest_minus,nearest_plus,h_minus_over_x,"
        "h_plus_over_x,H_over_x,sandwich\n";
  for (const auto& r : rows) {
    const auto& n = r.nearest;
    std::optional<lens::Real> tm, tp;
    if (r.theta) {
      tm = r.theta->theta_minus;
      tp = r.theta->theta_plus;
    }
    os << format_real(static_cast<double>(r.x)) << ',' << format_real(static_cast<double>(alpha))
       << ',' << cell(tm) << ',' << cell(tp) << ',' << cell(n.minus) << ',' << cell(n.plus) << ','
       << format_real(static_cast<double>(r.exact.h_minus / r.x)) << ','
       << format_real(static_cast<double>(r.exact.h_plus / r.x)) << ','
       << format_real(static_cast<double>(r.H_over_x)) << ',' << (r.sandwich ? "yes" : "no") << '\n';
  }
  return os.str();
}

}  // namespace extremal
