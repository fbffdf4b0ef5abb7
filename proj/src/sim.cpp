/**************************************************************************
 * sim.cpp
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

#include "gfqldpc/sim.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "gfqldpc/errors.hpp"
#include "gfqldpc/rng.hpp"

namespace gfqldpc {

Word sample_error_word(std::uint32_t length, const Field& field, std::uint32_t weight,
                       std::uint64_t seed, std::uint32_t weight_tag, std::uint32_t trial) {
    if (weight > length)
        throw std::invalid_argument("error weight exceeds the code length");
    SplitMix64 rng(derive_stream(seed, weight_tag, trial));

    // partial Fisher-Yates: after `weight` steps the prefix is a uniform
    // weight-subset of the positions
    std::vector<std::uint32_t> idx(length);
    std::iota(idx.begin(), idx.end(), 0u);
    for (std::uint32_t j = 0; j < weight; ++j) {
        std::uint32_t k = j + std::uint32_t(rng.below(length - j));
        std::swap(idx[j], idx[k]);
    }
    std::vector<std::uint32_t> support(idx.begin(), idx.begin() + weight);
    std::sort(support.begin(), support.end());

    Word word(length, 0);
    for (std::uint32_t pos : support)
        word[pos] = Symbol(1 + rng.below(field.order() - 1));
    return word;
}

std::uint64_t pattern_hash(const Word& word) {
    std::uint64_t h = 1469598103934665603ull; // FNV-1a offset basis
    auto eat = [&h](std::uint64_t v, int bytes) {
        for (int b = 0; b < bytes; ++b) {
            h ^= (v >> (8 * b)) & 0xff;
            h *= 1099511628211ull;
        }
    };
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (word[i] == 0)
            continue;
        eat(i, 4);
        eat(word[i], 2);
    }
    return h;
}

namespace {

void validate_config(const LdpcCode& code, const SimConfig& config) {
    if (config.trials == 0)
        throw std::invalid_argument("trial count must be positive");
    if (config.weights.empty())
        throw std::invalid_argument("weight list must not be empty");
    for (std::uint32_t w : config.weights)
        if (w == 0 || w > code.length())
            throw std::invalid_argument("error weights must be in 1..length");
    config.schedule.validate_for(code.var_degree());
}

SimRecord run_trial(const LdpcCode& code, const ThresholdSchedule& schedule,
                    std::uint64_t seed, std::uint32_t weight, std::uint32_t trial) {
    const Word error = sample_error_word(code.length(), code.field(), weight, seed, weight, trial);
    const Word zero(code.length(), 0);
    DecodeResult res = decode_multi(code, error, schedule, &zero);

    SimRecord rec;
    rec.weight = weight;
    rec.trial = trial;
    rec.success = !res.failure && res.word == zero;
    rec.replacements = res.replacements;
    rec.passes = res.passes;
    rec.final_syndrome_weight = compute_syndrome(code, res.word).weight;
    for (const PhaseStats& ph : res.phases)
        rec.phase_replacements.emplace_back(ph.threshold, ph.replacements);
    rec.pattern_hash = pattern_hash(error);
    return rec;
}

} // namespace

std::vector<SimRecord> run_simulation(const LdpcCode& code, const SimConfig& config) {
    validate_config(code, config);
    std::vector<SimRecord> records;
    records.reserve(std::size_t(config.weights.size()) * config.trials);
    for (std::uint32_t weight : config.weights)
        for (std::uint32_t trial = 0; trial < config.trials; ++trial)
            records.push_back(run_trial(code, config.schedule, config.seed, weight, trial));
    return records;
}

ScheduleComparison compare_schedules(const LdpcCode& code, const SimConfig& base,
                                     const std::vector<ThresholdSchedule>& schedules) {
    if (schedules.size() < 2)
        throw std::invalid_argument("a comparison needs at least two schedules");

    ScheduleComparison cmp;
    cmp.weights = base.weights;
    cmp.trials = base.trials;
    cmp.schedules = schedules;

    std::vector<std::vector<SimRecord>> all;
    for (const ThresholdSchedule& schedule : schedules) {
        SimConfig config = base;
        config.schedule = schedule;
        all.push_back(run_simulation(code, config));
    }

    // same seed, same substreams: every schedule must have decoded the very
    // same patterns, and the hashes prove it
    for (std::size_t s = 1; s < all.size(); ++s)
        for (std::size_t r = 0; r < all[s].size(); ++r)
            if (all[s][r].pattern_hash != all[0][r].pattern_hash)
                throw InternalError("paired runs diverged on trial inputs");

    cmp.successes.assign(schedules.size(), std::vector<std::uint32_t>(base.weights.size(), 0));
    for (std::size_t s = 0; s < all.size(); ++s)
        for (std::size_t w = 0; w < base.weights.size(); ++w)
            for (std::uint32_t t = 0; t < base.trials; ++t)
                cmp.successes[s][w] += all[s][w * base.trials + t].success;
    return cmp;
}

} // namespace gfqldpc
