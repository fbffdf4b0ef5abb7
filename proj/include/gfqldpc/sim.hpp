/**************************************************************************
 * sim.hpp
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
#include <utility>
#include <vector>

#include "gfqldpc/code.hpp"
#include "gfqldpc/decoder.hpp"

namespace gfqldpc {

/// A batch of decode trials: for every weight in `weights`, `trials` random
/// error patterns are decoded with `schedule` against the zero word.
struct SimConfig {
    std::vector<std::uint32_t> weights;
    std::uint32_t trials = 0;
    ThresholdSchedule schedule{std::vector<std::uint32_t>{0}};
    std::uint64_t seed = 0;
};

/// Outcome of one trial. pattern_hash fingerprints the error pattern so
/// paired runs can prove they saw the same inputs.
struct SimRecord {
    std::uint32_t weight = 0;
    std::uint32_t trial = 0;
    bool success = false;
    std::uint64_t replacements = 0;
    std::uint32_t passes = 0;
    std::uint32_t final_syndrome_weight = 0;
    std::vector<std::pair<std::uint32_t, std::uint64_t>> phase_replacements; // (threshold, count)
    std::uint64_t pattern_hash = 0;
};

/// Uniform error pattern of exact `weight`: the support is a uniform
/// weight-subset of the positions, values are i.i.d. uniform nonzero.
/// Drawn from the substream (seed, weight, trial), so any (weight, trial)
/// cell reproduces independently of every other.
Word sample_error_word(std::uint32_t length, const Field& field, std::uint32_t weight,
                       std::uint64_t seed, std::uint32_t weight_tag, std::uint32_t trial);

/// FNV-1a over (position, value) pairs in ascending position order.
std::uint64_t pattern_hash(const Word& word);

/// Runs every (weight, trial) cell and returns the records in (weight,
/// trial) order. Fully deterministic given the seed; trials are independent
/// (each has its own substream), so the order of execution cannot matter.
std::vector<SimRecord> run_simulation(const LdpcCode& code, const SimConfig& config);

/// Success counts of several schedules on identical inputs.
struct ScheduleComparison {
    std::vector<std::uint32_t> weights;
    std::uint32_t trials = 0;
    std::vector<ThresholdSchedule> schedules;
    /// successes[s][w] = successful trials of schedules[s] at weights[w].
    std::vector<std::vector<std::uint32_t>> successes;
};

/// Paired comparison: every schedule decodes the same error patterns
/// (asserted via pattern hashes). `base.schedule` is ignored.
ScheduleComparison compare_schedules(const LdpcCode& code, const SimConfig& base,
                                     const std::vector<ThresholdSchedule>& schedules);

} // namespace gfqldpc
