/**************************************************************************
 * decoder.hpp
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
#include <optional>
#include <string>
#include <vector>

#include "gfqldpc/code.hpp"

namespace gfqldpc {

/// Strictly increasing thresholds starting at 0, all below the variable
/// degree. A multi-threshold decode runs them from the largest down to 0;
/// the single-threshold decoder is the one-element schedule.
class ThresholdSchedule {
  public:
    explicit ThresholdSchedule(std::vector<std::uint32_t> thetas);

    /// "0,1,2" with optional spaces.
    static ThresholdSchedule parse(const std::string& text);

    /// The finest schedule for a given variable degree: 0,1,...,ell-1.
    static ThresholdSchedule full(std::uint32_t var_degree);

    const std::vector<std::uint32_t>& thetas() const { return thetas_; }
    std::size_t size() const { return thetas_.size(); }

    /// Checks the largest threshold against the variable degree.
    void validate_for(std::uint32_t var_degree) const;

    std::string str() const;

    friend bool operator==(const ThresholdSchedule&, const ThresholdSchedule&) = default;

  private:
    std::vector<std::uint32_t> thetas_;
};

/// What the adjacent checks say about one position. Each unsatisfied check
/// proposes the unique error estimate that would satisfy it; satisfied
/// checks propose "no change" (a zero message).
struct MessageSummary {
    std::uint32_t agree_count = 0;    // size of the largest set of equal nonzero estimates
    Symbol replacement_value = 0;     // current symbol minus that common estimate
    std::uint32_t zero_count = 0;     // number of satisfied adjacent checks
};

/// One accepted replacement. Positions are 0-based in memory (the CLI trace
/// output is 1-based, matching the code file format).
struct TraceEvent {
    std::uint32_t position;
    Symbol old_value;
    Symbol new_value;
    std::uint32_t threshold;               // phase the event happened in
    std::uint32_t syndrome_weight_after;
    // Hamming distance to the reference word after the event; present only
    // when a reference was supplied.
    std::optional<std::uint32_t> true_error_weight_after;
};

/// Per-phase tallies of a decode.
struct PhaseStats {
    std::uint32_t threshold = 0;
    std::uint64_t replacements = 0;
    std::uint32_t sweeps = 0;
};

struct DecodeResult {
    Word word;
    bool failure = false;           // nonzero final syndrome
    std::vector<TraceEvent> trace;
    std::uint32_t passes = 0;       // full sweeps executed, quiet final sweep included
    std::uint64_t replacements = 0;
    std::vector<PhaseStats> phases; // in execution order (largest threshold first)
};

enum class SweepOrder {
    /// Positions 0..N-1 in order, repeat until a full sweep changes nothing.
    sequential,
    /// Repeatedly replace at the position with the largest agree-minus-zero
    /// margin (ties to the lowest position) while the margin clears the
    /// threshold. Same guarantees, different event order; off by default.
    best_first,
};

struct DecodeOptions {
    SweepOrder order = SweepOrder::sequential;
    /// A decode is allowed this many sweeps per position before it is
    /// declared stuck; every accepted replacement strictly drops the
    /// syndrome weight, so hitting the cap means a bug, not bad data.
    std::uint32_t sweep_cap_factor = 10;
};

/// Messages for one position given the current word and its syndrome.
/// The largest group of equal nonzero estimates wins; among equal-sized
/// groups the smallest estimate (as an integer) wins. With no unsatisfied
/// adjacent check, agree_count is 0 and replacement_value is meaningless.
MessageSummary compute_messages(const LdpcCode& code, const Word& word,
                                const Syndrome& syndrome, std::uint32_t position);

/// The replacement to apply at a position, or nothing. A replacement is
/// accepted exactly when agree_count - zero_count > threshold, which makes
/// the syndrome weight drop by agree_count - zero_count >= threshold + 1.
std::optional<Symbol> replacement_decision(const MessageSummary& messages,
                                           std::uint32_t threshold);

/// One-threshold decode of `received`. Pass `reference` (the sent word) to
/// annotate trace events with the true error weight.
DecodeResult decode_single(const LdpcCode& code, Word received, std::uint32_t threshold,
                           const Word* reference = nullptr, const DecodeOptions& options = {});

/// Multi-threshold decode: phases run from the largest threshold down to 0,
/// each phase continuing from the previous word. The syndrome is maintained
/// incrementally across all phases.
DecodeResult decode_multi(const LdpcCode& code, Word received,
                          const ThresholdSchedule& schedule, const Word* reference = nullptr,
                          const DecodeOptions& options = {});

} // namespace gfqldpc
