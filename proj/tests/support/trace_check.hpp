/**************************************************************************
 * trace_check.hpp
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

// Replays a decode trace event by event and checks every law the decoder
// promises:
//   - each event's acceptance margin clears its phase threshold,
//   - the syndrome weight drops by exactly (agreeing - satisfied) checks,
//     hence by at least threshold + 1,
//   - per phase, the replacement count never exceeds what the entry
//     syndrome weight allows,
//   - the reported per-event syndrome weights and true-error weights match
//     a from-scratch recount,
//   - at the end no position still clears the final phase's threshold, and
//     the failure flag agrees with the final syndrome.
// Returns an empty string on success, else a description of the first
// violated law.

#include <cstdint>
#include <string>
#include <vector>

#include "gfqldpc/code.hpp"
#include "gfqldpc/decoder.hpp"

namespace trace_check {

using namespace gfqldpc;

struct Margin {
    std::uint32_t agree = 0;
    std::uint32_t zeros = 0;
    Symbol value = 0;
};

// independent margin computation: group the per-check error estimates by
// brute force over the adjacency, no incremental state
inline Margin margin_at(const LdpcCode& code, const Word& word,
                        const std::vector<Symbol>& syndrome, std::uint32_t position) {
    const Field& f = code.field();
    Margin m;
    std::vector<Symbol> estimates;
    for (const VarEdge& e : code.var_row(position)) {
        if (syndrome[e.check] == 0)
            ++m.zeros;
        else
            estimates.push_back(f.div(syndrome[e.check], e.coeff));
    }
    Symbol best = 0;
    for (Symbol e : estimates) {
        std::uint32_t count = 0;
        for (Symbol o : estimates)
            count += (o == e);
        if (count > m.agree || (count == m.agree && e < best)) {
            m.agree = count;
            best = e;
        }
    }
    if (m.agree > 0)
        m.value = f.sub(word[position], best);
    return m;
}

inline std::vector<Symbol> replay_syndrome(const LdpcCode& code, const Word& word) {
    const Field& f = code.field();
    std::vector<Symbol> s(code.check_count(), 0);
    for (std::uint32_t j = 0; j < code.check_count(); ++j)
        for (const CheckEdge& e : code.check_row(j))
            s[j] = f.add(s[j], f.mul(e.coeff, word[e.position]));
    return s;
}

inline std::uint32_t nonzero_count(const std::vector<Symbol>& v) {
    std::uint32_t n = 0;
    for (Symbol x : v)
        n += (x != 0);
    return n;
}

/// Validates `result` as a decode of `received` under `descending_thetas`
/// (largest first; a single-threshold decode passes {theta}).
inline std::string validate(const LdpcCode& code, const Word& received,
                            const std::vector<std::uint32_t>& descending_thetas,
                            const DecodeResult& result, const Word* reference = nullptr) {
    auto fail = [](const std::string& msg) { return msg; };

    Word word = received;
    std::vector<Symbol> syndrome = replay_syndrome(code, word);
    std::uint32_t syn_weight = nonzero_count(syndrome);

    std::uint32_t distance = 0;
    if (reference)
        for (std::uint32_t i = 0; i < code.length(); ++i)
            distance += (word[i] != (*reference)[i]);

    // phase boundaries: events must use thresholds in the given order
    std::size_t phase = 0;
    std::uint32_t phase_entry_weight = syn_weight;
    std::uint64_t phase_replacements = 0;
    std::uint64_t total_replacements = 0;

    for (std::size_t k = 0; k < result.trace.size(); ++k) {
        const TraceEvent& ev = result.trace[k];
        while (phase < descending_thetas.size() && ev.threshold != descending_thetas[phase]) {
            ++phase;
            phase_entry_weight = syn_weight;
            phase_replacements = 0;
        }
        if (phase >= descending_thetas.size())
            return fail("event " + std::to_string(k) + " uses a threshold outside the schedule");
        const std::uint32_t theta = descending_thetas[phase];

        if (ev.position >= code.length())
            return fail("event " + std::to_string(k) + " has an out-of-range position");
        if (word[ev.position] != ev.old_value)
            return fail("event " + std::to_string(k) + " disagrees on the old value");

        Margin m = margin_at(code, word, syndrome, ev.position);
        if (m.agree <= std::uint64_t(m.zeros) + theta)
            return fail("event " + std::to_string(k) + " does not clear its threshold");
        if (m.value != ev.new_value)
            return fail("event " + std::to_string(k) + " replaces with the wrong value");

        // apply and compare against the exact drop law
        word[ev.position] = ev.new_value;
        syndrome = replay_syndrome(code, word);
        const std::uint32_t new_weight = nonzero_count(syndrome);
        if (std::int64_t(new_weight) != std::int64_t(syn_weight) + m.zeros - m.agree)
            return fail("event " + std::to_string(k) +
                        ": syndrome drop is not zeros minus agreers");
        if (std::int64_t(syn_weight) - std::int64_t(new_weight) < std::int64_t(theta) + 1)
            return fail("event " + std::to_string(k) + ": drop below threshold + 1");
        if (ev.syndrome_weight_after != new_weight)
            return fail("event " + std::to_string(k) + " reports a wrong syndrome weight");
        syn_weight = new_weight;

        if (reference) {
            const Symbol ref = (*reference)[ev.position];
            distance += (ev.new_value != ref);
            distance -= (ev.old_value != ref);
            if (!ev.true_error_weight_after || *ev.true_error_weight_after != distance)
                return fail("event " + std::to_string(k) + " reports a wrong error weight");
        }

        ++phase_replacements;
        ++total_replacements;
        // every replacement in this phase freed at least theta+1 syndrome
        // weight, so the entry weight bounds the count
        if (phase_replacements * (std::uint64_t(theta) + 1) > phase_entry_weight)
            return fail("phase at threshold " + std::to_string(theta) +
                        " has more replacements than its entry weight allows");
    }

    if (word != result.word)
        return fail("final word does not match the trace replay");
    if (total_replacements != result.replacements)
        return fail("replacement count does not match the trace length");
    if (result.failure != (syn_weight != 0))
        return fail("failure flag disagrees with the final syndrome");

    // terminal condition: nothing clears the last phase's threshold any more
    const std::uint32_t final_theta = descending_thetas.back();
    for (std::uint32_t i = 0; i < code.length(); ++i) {
        Margin m = margin_at(code, word, syndrome, i);
        if (m.agree > std::uint64_t(m.zeros) + final_theta)
            return fail("decoder stopped although position " + std::to_string(i) +
                        " still clears the final threshold");
    }
    return {};
}

} // namespace trace_check
