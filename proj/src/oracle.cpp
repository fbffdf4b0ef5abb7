/**************************************************************************
 * oracle.cpp
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

#include "gfqldpc/oracle.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

#include "gfqldpc/errors.hpp"
#include "gfqldpc/radius.hpp"

namespace gfqldpc {

SubgraphCensus subgraph_census(const LdpcCode& code, const Word& error) {
    if (error.size() != code.length())
        throw std::invalid_argument("error word length does not match the code");
    const Field& f = code.field();

    SubgraphCensus census;
    census.detected_by_edge_count.assign(code.check_degree(), 0);
    for (std::uint32_t i = 0; i < code.length(); ++i)
        if (error[i] != 0)
            census.error_positions.push_back(i);
    census.error_weight = std::uint32_t(census.error_positions.size());
    census.edges_to_singly_detected.assign(census.error_positions.size(), 0);
    census.edges_to_hidden.assign(census.error_positions.size(), 0);

    // classify every touched check: 0 = untouched, 1 = unsatisfied with one
    // erroneous neighbor, 2 = unsatisfied with several, 3 = hidden
    std::vector<std::uint8_t> klass(code.check_count(), 0);
    for (std::uint32_t j = 0; j < code.check_count(); ++j) {
        std::uint32_t touched = 0;
        Symbol sum = 0;
        for (const CheckEdge& e : code.check_row(j)) {
            if (error[e.position] == 0)
                continue;
            ++touched;
            sum = f.add(sum, f.mul(e.coeff, error[e.position]));
        }
        if (touched == 0)
            continue;
        if (sum != 0) {
            ++census.syndrome_weight;
            ++census.detected_by_edge_count[touched - 1];
            klass[j] = touched == 1 ? 1 : 2;
        } else {
            ++census.hidden_check_count;
            klass[j] = 3;
        }
    }

    for (std::size_t k = 0; k < census.error_positions.size(); ++k) {
        for (const VarEdge& e : code.var_row(census.error_positions[k])) {
            if (klass[e.check] == 1)
                ++census.edges_to_singly_detected[k];
            else if (klass[e.check] == 3)
                ++census.edges_to_hidden[k];
        }
    }
    return census;
}

Replacement best_single_replacement(const LdpcCode& code, const Word& word) {
    if (word.size() != code.length())
        throw std::invalid_argument("word length does not match the code");
    const Field& f = code.field();
    const Syndrome syndrome = compute_syndrome(code, word);

    Replacement best{0, word.empty() ? Symbol(0) : word[0], INT64_MIN};
    // scanning positions ascending and values ascending means a strict
    // improvement test lands exactly on the documented tie-break
    for (std::uint32_t i = 0; i < code.length(); ++i) {
        for (std::uint32_t x = 0; x < code.params().field_order; ++x) {
            if (Symbol(x) == word[i])
                continue;
            const Symbol delta = f.sub(Symbol(x), word[i]);
            std::int64_t drop = 0;
            for (const VarEdge& e : code.var_row(i)) {
                const Symbol before = syndrome.values[e.check];
                const Symbol after = f.add(before, f.mul(e.coeff, delta));
                drop += (before != 0);
                drop -= (after != 0);
            }
            if (drop > best.drop)
                best = Replacement{i, Symbol(x), drop};
        }
    }
    if (best.drop == INT64_MIN)
        throw std::invalid_argument("the field has no alternative values");
    return best;
}

Verdict verify_lemma2(const LdpcCode& code, std::uint32_t theta, const Word& error) {
    if (theta >= code.var_degree())
        throw std::invalid_argument("threshold must be below the variable degree");
    std::uint64_t weight = 0;
    for (Symbol s : error)
        weight += (s != 0);
    const Syndrome syndrome = compute_syndrome(code, error);
    // premise, kept in integers: |S| > weight * (ell + theta) / 2
    const bool premise =
        2ull * syndrome.weight > weight * (std::uint64_t(code.var_degree()) + theta);
    if (!premise)
        return Verdict::vacuous;
    const Replacement r = best_single_replacement(code, error);
    return r.drop >= std::int64_t(theta) + 1 ? Verdict::pass : Verdict::fail;
}

std::uint64_t enumeration_budget() {
    const char* env = std::getenv("GFQ_LDPC_BUDGET");
    if (!env || !*env)
        return 100000000ull; // 1e8
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0' || v == 0)
        throw std::invalid_argument("GFQ_LDPC_BUDGET must be a positive integer");
    return v;
}

std::uint64_t count_error_patterns(std::uint32_t length, std::uint32_t field_order,
                                   std::uint32_t max_weight) {
    // sum over w of C(length, w) * (q-1)^w, saturating
    const std::uint64_t cap = UINT64_MAX;
    unsigned __int128 total = 0;
    for (std::uint32_t w = 1; w <= max_weight && w <= length; ++w) {
        unsigned __int128 term = 1;
        for (std::uint32_t i = 0; i < w; ++i) {
            term = term * (length - i) / (i + 1); // exact: product of i+1 consecutive ints
            if (term > cap)
                return cap;
        }
        for (std::uint32_t i = 0; i < w; ++i) {
            term *= (field_order - 1);
            if (term > cap)
                return cap;
        }
        total += term;
        if (total > cap)
            return cap;
    }
    return std::uint64_t(total);
}

RadiusCertificate certify_code_radius(const LdpcCode& code, std::uint32_t max_weight,
                                      std::uint64_t budget) {
    if (max_weight == 0 || max_weight > code.length())
        throw std::invalid_argument("max weight must be in 1..length");
    const std::uint64_t needed = count_error_patterns(code.length(), code.params().field_order,
                                                      max_weight);
    if (needed > budget)
        throw BudgetExceeded("certification needs " + std::to_string(needed) +
                             " patterns, budget is " + std::to_string(budget));

    RadiusCertificate cert;
    cert.max_weight = max_weight;
    cert.min_syndrome_weight.assign(max_weight, 0);
    cert.patterns_enumerated = needed;

    const Field& f = code.field();
    std::vector<Symbol> acc(code.check_count(), 0);
    std::vector<std::uint32_t> touched;
    touched.reserve(std::size_t(max_weight) * code.var_degree());

    for (std::uint32_t w = 1; w <= max_weight; ++w) {
        std::uint32_t min_weight = UINT32_MAX;
        for_each_error_pattern(
            code.length(), code.params().field_order, w,
            [&](const std::vector<std::uint32_t>& support, const std::vector<Symbol>& values) {
                touched.clear();
                for (std::size_t k = 0; k < support.size(); ++k) {
                    for (const VarEdge& e : code.var_row(support[k])) {
                        if (acc[e.check] == 0)
                            touched.push_back(e.check);
                        acc[e.check] = f.add(acc[e.check], f.mul(e.coeff, values[k]));
                    }
                }
                std::uint32_t syn = 0;
                for (std::uint32_t j : touched) {
                    syn += (acc[j] != 0);
                    acc[j] = 0;
                }
                if (syn < min_weight)
                    min_weight = syn;
            });
        cert.min_syndrome_weight[w - 1] = min_weight;
    }

    // certified weight: largest W with 2*min|S|(w) > w*ell for every w <= W
    for (std::uint32_t w = 1; w <= max_weight; ++w) {
        if (2ull * cert.min_syndrome_weight[w - 1] >
            std::uint64_t(w) * code.var_degree())
            cert.certified_weight = w;
        else
            break;
    }
    return cert;
}

CorrectionCheck verify_guaranteed_correction(const LdpcCode& code,
                                             std::uint32_t certified_weight,
                                             const ThresholdSchedule& schedule,
                                             std::uint64_t budget) {
    if (certified_weight == 0)
        throw std::invalid_argument("certified weight must be positive");
    schedule.validate_for(code.var_degree());

    CorrectionCheck check;
    check.guaranteed_weight =
        w_sequence(double(certified_weight), schedule, code.var_degree()).back();
    const std::uint64_t floor_weight =
        guaranteed_weight_floor(certified_weight, schedule, code.var_degree());
    check.enumerated_weight =
        std::uint32_t(floor_weight > code.length() ? code.length() : floor_weight);
    if (check.enumerated_weight == 0)
        return check; // radius below one symbol: nothing to test

    const std::uint64_t needed = count_error_patterns(code.length(), code.params().field_order,
                                                      check.enumerated_weight);
    if (needed > budget)
        throw BudgetExceeded("correction check needs " + std::to_string(needed) +
                             " patterns, budget is " + std::to_string(budget));

    const Word zero(code.length(), 0);
    Word pattern(code.length(), 0);
    for (std::uint32_t w = 1; w <= check.enumerated_weight; ++w) {
        for_each_error_pattern(
            code.length(), code.params().field_order, w,
            [&](const std::vector<std::uint32_t>& support, const std::vector<Symbol>& values) {
                for (std::size_t k = 0; k < support.size(); ++k)
                    pattern[support[k]] = values[k];
                DecodeResult res = decode_multi(code, pattern, schedule);
                ++check.patterns_tested;
                if (res.failure || res.word != zero)
                    ++check.failures;
                for (std::uint32_t pos : support)
                    pattern[pos] = 0;
            });
    }
    return check;
}

} // namespace gfqldpc
