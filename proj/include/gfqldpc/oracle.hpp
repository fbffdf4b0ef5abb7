/**************************************************************************
 * oracle.hpp
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
#include <vector>

#include "gfqldpc/code.hpp"
#include "gfqldpc/decoder.hpp"

namespace gfqldpc {

/// Brute-force census of the subgraph an error pattern induces on the
/// checks. Every check touched by at least one erroneous symbol lands in
/// exactly one class: unsatisfied with i erroneous neighbors (counted in
/// detected_by_edge_count[i-1]) or satisfied despite the errors (hidden).
/// The per-symbol vectors line up with error_positions.
struct SubgraphCensus {
    std::uint32_t error_weight = 0;
    std::uint32_t syndrome_weight = 0;
    /// a[i-1] = number of unsatisfied checks with exactly i erroneous
    /// neighbors, i = 1..check_degree.
    std::vector<std::uint64_t> detected_by_edge_count;
    std::uint64_t hidden_check_count = 0;
    std::vector<std::uint32_t> error_positions;
    /// Per erroneous symbol: adjacent checks that are its sole erroneous
    /// neighbor (singly-detected) and adjacent hidden checks.
    std::vector<std::uint32_t> edges_to_singly_detected;
    std::vector<std::uint32_t> edges_to_hidden;

    std::uint64_t singly_detected() const {
        return detected_by_edge_count.empty() ? 0 : detected_by_edge_count[0];
    }
    std::uint64_t multiply_detected() const {
        std::uint64_t n = 0;
        for (std::size_t i = 1; i < detected_by_edge_count.size(); ++i)
            n += detected_by_edge_count[i];
        return n;
    }
};

/// Counts every class directly from the graph, recomputing each check's
/// value with a plain row sum (no incremental bookkeeping).
SubgraphCensus subgraph_census(const LdpcCode& code, const Word& error);

/// A single-symbol change and the syndrome-weight drop it achieves.
struct Replacement {
    std::uint32_t position = 0;
    Symbol value = 0;
    std::int64_t drop = 0;
};

/// Exhaustive scan of all positions times all q-1 alternative values for the
/// change with the largest syndrome-weight drop. Ties break to the lowest
/// position, then the lowest replacement value. The drop can be negative
/// (a codeword input yields -var_degree at every position).
Replacement best_single_replacement(const LdpcCode& code, const Word& word);

enum class Verdict {
    pass,    // premise held and the guaranteed replacement exists
    vacuous, // premise did not apply to this instance
    fail,    // premise held but no replacement achieves the drop: a bug
};

/// Checks the replacement guarantee on one error pattern: whenever
/// 2*|syndrome| > weight*(ell+theta), some single-symbol change must drop
/// the syndrome weight by at least theta+1. A fail verdict is a genuine
/// counterexample to the decoder's progress argument and must abort any
/// suite that sees it.
Verdict verify_lemma2(const LdpcCode& code, std::uint32_t theta, const Word& error);

/// Default cap on exhaustively enumerated patterns (1e8), overridable via
/// the GFQ_LDPC_BUDGET environment variable.
std::uint64_t enumeration_budget();

/// Number of nonzero patterns of weight 1..max_weight on `length` positions
/// over GF(q), saturating at uint64 max.
std::uint64_t count_error_patterns(std::uint32_t length, std::uint32_t field_order,
                                   std::uint32_t max_weight);

/// Visits every error pattern of exact weight `weight`: supports in
/// lexicographic order, values in ascending odometer order (last position
/// fastest). The visitor gets parallel vectors of positions and values.
template <class Visitor>
void for_each_error_pattern(std::uint32_t length, std::uint32_t field_order,
                            std::uint32_t weight, Visitor&& visit) {
    if (weight == 0 || weight > length || field_order < 2)
        return;
    std::vector<std::uint32_t> support(weight);
    for (std::uint32_t i = 0; i < weight; ++i)
        support[i] = i;
    std::vector<Symbol> values(weight, 1);
    const Symbol top = Symbol(field_order - 1);
    for (;;) {
        visit(static_cast<const std::vector<std::uint32_t>&>(support),
              static_cast<const std::vector<Symbol>&>(values));
        // next value assignment
        std::uint32_t k = weight;
        while (k > 0 && values[k - 1] == top)
            values[--k] = 1;
        if (k > 0) {
            ++values[k - 1];
            continue;
        }
        // next support combination
        std::int64_t i = std::int64_t(weight) - 1;
        while (i >= 0 && support[std::size_t(i)] == length - weight + std::uint32_t(i))
            --i;
        if (i < 0)
            return;
        ++support[std::size_t(i)];
        for (std::size_t j = std::size_t(i) + 1; j < weight; ++j)
            support[j] = support[j - 1] + 1;
    }
}

/// Result of scanning every pattern up to max_weight for the smallest
/// syndrome weight per error weight. certified_weight is the largest W
/// such that 2*min_syndrome_weight[w-1] > w*ell for every w <= W.
struct RadiusCertificate {
    std::uint32_t max_weight = 0;
    std::vector<std::uint32_t> min_syndrome_weight; // index w-1
    std::uint32_t certified_weight = 0;
    std::uint64_t patterns_enumerated = 0;
};

/// Exhaustive certification; throws BudgetExceeded if the enumeration would
/// pass `budget` patterns.
RadiusCertificate certify_code_radius(const LdpcCode& code, std::uint32_t max_weight,
                                      std::uint64_t budget);

/// Outcome of decoding every pattern inside the guaranteed radius.
struct CorrectionCheck {
    double guaranteed_weight = 0;        // final element of the w_sequence
    std::uint32_t enumerated_weight = 0; // floor of it, the largest weight tested
    std::uint64_t patterns_tested = 0;   // 0 means the check was vacuous
    std::uint64_t failures = 0;          // patterns not decoded back to zero
};

/// Decodes every pattern of weight up to the schedule's guaranteed radius
/// (computed from `certified_weight` on exact rationals) against the zero
/// word and counts failures. A nonzero failure count contradicts the
/// decoding guarantee for a genuinely certified weight.
CorrectionCheck verify_guaranteed_correction(const LdpcCode& code,
                                             std::uint32_t certified_weight,
                                             const ThresholdSchedule& schedule,
                                             std::uint64_t budget);

} // namespace gfqldpc
