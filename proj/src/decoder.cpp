/**************************************************************************
 * decoder.cpp
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

#include "gfqldpc/decoder.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "gfqldpc/errors.hpp"

namespace gfqldpc {

ThresholdSchedule::ThresholdSchedule(std::vector<std::uint32_t> thetas)
    : thetas_(std::move(thetas)) {
    if (thetas_.empty())
        throw std::invalid_argument("a schedule needs at least one threshold");
    if (thetas_[0] != 0)
        throw std::invalid_argument("the smallest threshold must be 0");
    for (std::size_t i = 1; i < thetas_.size(); ++i)
        if (thetas_[i] <= thetas_[i - 1])
            throw std::invalid_argument("thresholds must be strictly increasing");
}

ThresholdSchedule ThresholdSchedule::parse(const std::string& text) {
    std::vector<std::uint32_t> thetas;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        std::size_t pos = 0;
        unsigned long v = 0;
        try {
            v = std::stoul(token, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad threshold '" + token + "'");
        }
        while (pos < token.size() && std::isspace(static_cast<unsigned char>(token[pos])))
            ++pos;
        if (pos != token.size())
            throw std::invalid_argument("bad threshold '" + token + "'");
        thetas.push_back(std::uint32_t(v));
    }
    return ThresholdSchedule(std::move(thetas));
}

ThresholdSchedule ThresholdSchedule::full(std::uint32_t var_degree) {
    if (var_degree < 1)
        throw std::invalid_argument("variable degree must be positive");
    std::vector<std::uint32_t> thetas(var_degree);
    for (std::uint32_t i = 0; i < var_degree; ++i)
        thetas[i] = i;
    return ThresholdSchedule(std::move(thetas));
}

void ThresholdSchedule::validate_for(std::uint32_t var_degree) const {
    if (thetas_.back() >= var_degree)
        throw std::invalid_argument("largest threshold " + std::to_string(thetas_.back()) +
                                    " must be below the variable degree " +
                                    std::to_string(var_degree));
}

std::string ThresholdSchedule::str() const {
    std::string s;
    for (std::size_t i = 0; i < thetas_.size(); ++i) {
        if (i)
            s += ',';
        s += std::to_string(thetas_[i]);
    }
    return s;
}

MessageSummary compute_messages(const LdpcCode& code, const Word& word,
                                const Syndrome& syndrome, std::uint32_t position) {
    const Field& f = code.field();
    MessageSummary ms;
    // error estimates proposed by the unsatisfied adjacent checks
    std::vector<Symbol> estimates;
    estimates.reserve(code.var_degree());
    for (const VarEdge& e : code.var_row(position)) {
        Symbol s = syndrome.values[e.check];
        if (s == 0) {
            ++ms.zero_count;
            continue;
        }
        estimates.push_back(f.div(s, e.coeff));
    }
    std::sort(estimates.begin(), estimates.end());
    // longest run wins; the scan keeps the first ( = smallest) on ties
    Symbol best_estimate = 0;
    std::size_t i = 0;
    while (i < estimates.size()) {
        std::size_t j = i;
        while (j < estimates.size() && estimates[j] == estimates[i])
            ++j;
        if (j - i > ms.agree_count) {
            ms.agree_count = std::uint32_t(j - i);
            best_estimate = estimates[i];
        }
        i = j;
    }
    if (ms.agree_count > 0)
        ms.replacement_value = f.sub(word[position], best_estimate);
    return ms;
}

std::optional<Symbol> replacement_decision(const MessageSummary& messages,
                                           std::uint32_t threshold) {
    if (messages.agree_count > std::uint64_t(messages.zero_count) + threshold)
        return messages.replacement_value;
    return std::nullopt;
}

namespace {

struct PhaseContext {
    const LdpcCode& code;
    Word& word;
    Syndrome& syndrome;
    const Word* reference;
    std::uint32_t distance_to_reference; // maintained only when reference != nullptr
    std::vector<TraceEvent>& trace;
    std::uint32_t sweep_budget;
};

void apply_replacement(PhaseContext& ctx, std::uint32_t position, Symbol value,
                       std::uint32_t threshold, PhaseStats& stats) {
    Symbol old = ctx.word[position];
    ctx.word[position] = value;
    apply_symbol_change(ctx.code, ctx.syndrome, position, old, value);
    TraceEvent ev{position, old, value, threshold, ctx.syndrome.weight, std::nullopt};
    if (ctx.reference) {
        const Symbol ref = (*ctx.reference)[position];
        ctx.distance_to_reference += (value != ref);
        ctx.distance_to_reference -= (old != ref);
        ev.true_error_weight_after = ctx.distance_to_reference;
    }
    ctx.trace.push_back(ev);
    ++stats.replacements;
}

PhaseStats run_phase(PhaseContext& ctx, std::uint32_t threshold, SweepOrder order) {
    PhaseStats stats;
    stats.threshold = threshold;
    const std::uint32_t n = ctx.code.length();

    if (order == SweepOrder::sequential) {
        bool changed = true;
        while (changed) {
            if (stats.sweeps >= ctx.sweep_budget)
                throw InternalError("sweep cap exceeded: the syndrome weight must drop with "
                                    "every replacement, so this cannot terminate normally");
            ++stats.sweeps;
            changed = false;
            for (std::uint32_t i = 0; i < n; ++i) {
                MessageSummary ms = compute_messages(ctx.code, ctx.word, ctx.syndrome, i);
                if (auto v = replacement_decision(ms, threshold)) {
                    apply_replacement(ctx, i, *v, threshold, stats);
                    changed = true;
                }
            }
        }
        return stats;
    }

    // best_first: every scan picks the position with the largest margin
    for (;;) {
        if (stats.sweeps >= ctx.sweep_budget)
            throw InternalError("scan cap exceeded in best-first order");
        ++stats.sweeps;
        std::int64_t best_margin = INT64_MIN;
        std::uint32_t best_pos = 0;
        Symbol best_value = 0;
        for (std::uint32_t i = 0; i < n; ++i) {
            MessageSummary ms = compute_messages(ctx.code, ctx.word, ctx.syndrome, i);
            std::int64_t margin = std::int64_t(ms.agree_count) - ms.zero_count;
            if (margin > best_margin && ms.agree_count > 0) {
                best_margin = margin;
                best_pos = i;
                best_value = ms.replacement_value;
            }
        }
        if (best_margin <= std::int64_t(threshold))
            return stats;
        apply_replacement(ctx, best_pos, best_value, threshold, stats);
    }
}

DecodeResult run_schedule(const LdpcCode& code, Word received,
                          const std::vector<std::uint32_t>& descending_thetas,
                          const Word* reference, const DecodeOptions& options) {
    if (received.size() != code.length())
        throw std::invalid_argument("received word length does not match the code");
    if (reference && reference->size() != code.length())
        throw std::invalid_argument("reference word length does not match the code");

    DecodeResult result;
    result.word = std::move(received);
    Syndrome syndrome = compute_syndrome(code, result.word);

    std::uint32_t distance = 0;
    if (reference)
        for (std::uint32_t i = 0; i < code.length(); ++i)
            distance += (result.word[i] != (*reference)[i]);

    const std::uint64_t cap64 = std::uint64_t(options.sweep_cap_factor) * code.length();
    const std::uint32_t cap = cap64 > UINT32_MAX ? UINT32_MAX : std::uint32_t(cap64);
    PhaseContext ctx{code, result.word, syndrome, reference, distance, result.trace, cap};

    for (std::uint32_t theta : descending_thetas) {
        PhaseStats stats = run_phase(ctx, theta, options.order);
        ctx.sweep_budget -= stats.sweeps;
        result.passes += stats.sweeps;
        result.replacements += stats.replacements;
        result.phases.push_back(stats);
    }

    result.failure = syndrome.weight != 0;
    return result;
}

} // namespace

DecodeResult decode_single(const LdpcCode& code, Word received, std::uint32_t threshold,
                           const Word* reference, const DecodeOptions& options) {
    if (threshold >= code.var_degree())
        throw std::invalid_argument("threshold must be below the variable degree");
    return run_schedule(code, std::move(received), {threshold}, reference, options);
}

DecodeResult decode_multi(const LdpcCode& code, Word received,
                          const ThresholdSchedule& schedule, const Word* reference,
                          const DecodeOptions& options) {
    schedule.validate_for(code.var_degree());
    std::vector<std::uint32_t> descending(schedule.thetas().rbegin(), schedule.thetas().rend());
    return run_schedule(code, std::move(received), descending, reference, options);
}

} // namespace gfqldpc
