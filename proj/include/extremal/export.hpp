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

#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "extremal/lens_bounds.hpp"
#include "extremal/m_variant.hpp"
#include "extremal/records.hpp"

namespace extremal {

enum class ExportFormat { csv, json };

/// k,e_k,pi_e,delta_num,delta_den,lens_len,ratio_next,sum_inv,sum_invlog,ties
/// plus a trailing status column when include_status is set.
///
/// Row k describes the lens [e_k, e_{k+1}]: its slope, its length, and the
/// primes lying exactly on the chord (semicolon separated, empty when none).
/// sum_inv and sum_invlog are the running sums through row k. Reals use 12
/// significant digits; absent values are empty cells; lines end in LF.
std::string records_to_csv(std::span<const ExtremalRecord> records, bool include_status);

/// Inverse of records_to_csv. Ratios are recomputed from e_k and lens_len
/// and checked against the printed digits. Throws std::invalid_argument.
std::vector<ExtremalRecord> records_from_csv(const std::string& text);

/// The same fields per record under "records", with run metadata.
std::string records_to_json(std::span<const ExtremalRecord> records, std::uint64_t limit,
                            bool include_status);
std::vector<ExtremalRecord> records_from_json(const std::string& text);

/// Detects the format from the first non-blank character.
std::vector<ExtremalRecord> parse_records(const std::string& text);

/// Throws std::invalid_argument for empty input.
void export_records(std::span<const ExtremalRecord> records, ExportFormat format,
                    std::uint64_t limit, bool include_status, std::ostream& out);

/// k,m_k,pi_m,value,delta_num,delta_den,lens_len,ratio_next,ties,status with
/// value the reduced rational M(m_k) as "num/den".
std::string m_records_to_csv(std::span<const MRecord> records);

/// x,alpha,theta_minus,theta_plus,nearest_minus,nearest_plus,h_minus_over_x,
/// h_plus_over_x,H_over_x,sandwich. theta_* come from the alpha-restricted
/// solve and are empty when its preconditions fail; nearest_* are the
/// unrestricted roots h*/x; h_*_over_x are the exact roots.
std::string lens_profiles_to_csv(std::span<const lens::LensProfile> rows, lens::Real alpha);

/// printf("%#.12g").
std::string format_real(double v);

}  // namespace extremal
