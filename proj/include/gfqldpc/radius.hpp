/**************************************************************************
 * radius.hpp
 *
 * Copyright 2026 The gfqldpc authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 **************************************************************************/

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "gfqldpc/decoder.hpp"

namespace gfqldpc {

/// Syndrome-weight level that guarantees progress: while the syndrome weight
/// of an error of weight `error_weight` exceeds error_weight*(ell+theta)/2,
/// some single-symbol replacement clears the threshold-theta test and drops
/// the weight by at least theta+1.
double threshold_bound(std::uint32_t theta, double error_weight, std::uint32_t var_degree);

/// Fraction of the certified weight that a single-threshold (theta = 0)
/// decode corrects: (ell+2) / (2(ell+1)).
double alpha_single(std::uint32_t var_degree);

/// Same fraction for the full schedule 0..ell-1, as the telescoped product
/// prod_{i=0}^{ell-1} (ell+3i+2)/(ell+3i+3). Evaluated with a compensated
/// product (fma error terms carried separately) so the relative error stays
/// under 1e-12 out to ell = 10^6. The product decreases towards 2^(-2/3)
/// as ell grows.
double alpha_multi(std::uint32_t var_degree);

/// Cross-check of alpha_multi through exact big-rational arithmetic,
/// rounded to double once at the end. Intended for ell small enough that
/// the exact product stays cheap (the tests use it up to ell = 64).
double alpha_multi_exact(std::uint32_t var_degree);

/// Weights correctable at each stage of a schedule, starting from a code
/// certified to weight w_star. Element 0 is w_star itself; element i+1 is
/// what the phase at thetas[i] hands to the next phase:
///
///   w[i+1] = w[i] * (ell + 3*thetas[i] + 2) / (ell + 2*thetas[i] + next + 2)
///
/// where `next` is thetas[i+1] for inner stages and ell for the last one.
/// The final element is the guaranteed decoding weight of the schedule.
/// Degenerations: the one-element schedule {0} ends at alpha_single(ell) *
/// w_star bit-for-bit, and the full schedule ends within 1e-10 relative of
/// alpha_multi(ell) * w_star.
std::vector<double> w_sequence(double w_star, const ThresholdSchedule& schedule,
                               std::uint32_t var_degree);

/// w_sequence evaluated in exact rational arithmetic, each element rounded
/// to double independently.
std::vector<double> w_sequence_exact(double w_star, const ThresholdSchedule& schedule,
                                     std::uint32_t var_degree);

/// Largest integer error weight covered by w_sequence(w_star, ...), computed
/// on exact rationals so floor decisions never ride on floating-point slop.
std::uint64_t guaranteed_weight_floor(std::uint64_t w_star, const ThresholdSchedule& schedule,
                                      std::uint32_t var_degree);

/// One input row of a radius table: code rate, variable degree, and the
/// relative weight omega_star up to which the ensemble is certified.
struct RadiusRow {
    double rate = 0;
    std::uint32_t var_degree = 0;
    double omega_star = 0;
};

/// Input row with both decoding radii attached, raw and rounded to four
/// decimals (half away from zero).
struct RadiusEntry {
    RadiusRow row;
    double rho_single = 0;
    double rho_multi = 0;
    double rho_single_rounded = 0;
    double rho_multi_rounded = 0;
};

double round_to_4(double x);

std::vector<RadiusEntry> radius_table(const std::vector<RadiusRow>& rows);

/// Bundled (rate, ell, omega_star) rows for the two shipped field orders.
const std::vector<RadiusRow>& builtin_radius_rows_q16();
const std::vector<RadiusRow>& builtin_radius_rows_q64();

/// CSV with header "R,ell,omega_star"; comment lines start with '#'.
std::vector<RadiusRow> parse_radius_rows(std::istream& in);
std::vector<RadiusRow> load_radius_rows(const std::string& path);

/// CSV with header R,ell,omega_star,rho_s,rho_s_rounded,rho_m,rho_m_rounded.
std::string radius_table_csv(const std::vector<RadiusEntry>& entries);

} // namespace gfqldpc
