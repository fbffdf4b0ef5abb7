/**************************************************************************
 * test_decoder.cpp
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

#include <doctest.h>

#include <stdexcept>

#include "gfqldpc/decoder.hpp"
#include "gfqldpc/rng.hpp"
#include "gfqldpc/sim.hpp"

#include "../support/straightline.hpp"
#include "../support/trace_check.hpp"

using namespace gfqldpc;

TEST_CASE("schedule construction enforces shape") {
    CHECK_THROWS_AS(ThresholdSchedule(std::vector<std::uint32_t>{}), std::invalid_argument);
    CHECK_THROWS_AS(ThresholdSchedule({1, 2}), std::invalid_argument);    // must start at 0
    CHECK_THROWS_AS(ThresholdSchedule({0, 2, 2}), std::invalid_argument); // strictly increasing
    CHECK_THROWS_AS(ThresholdSchedule({0, 2, 1}), std::invalid_argument);

    ThresholdSchedule s({0, 1, 3});
    CHECK(s.str() == "0,1,3");
    CHECK(ThresholdSchedule::parse("0, 1,3") == s);
    CHECK_THROWS_AS(ThresholdSchedule::parse("0,x"), std::invalid_argument);
    CHECK(ThresholdSchedule::full(4) == ThresholdSchedule({0, 1, 2, 3}));
    CHECK_NOTHROW(s.validate_for(4));
    CHECK_THROWS_AS(s.validate_for(3), std::invalid_argument);
}

TEST_CASE("messages on a single-error word point back at the error") {
    LdpcCode code = sample_regular_code(CodeParams{16, 3, 4, 16}, 11);
    Word word(code.length(), 0);
    word[7] = 9;
    Syndrome syn = compute_syndrome(code, word);

    // at the erroneous position every adjacent check agrees on the error
    MessageSummary at_error = compute_messages(code, word, syn, 7);
    CHECK(at_error.agree_count == code.var_degree());
    CHECK(at_error.zero_count == 0);
    CHECK(at_error.replacement_value == 0);

    // the decision clears any threshold below the degree
    for (std::uint32_t theta = 0; theta < code.var_degree(); ++theta) {
        auto v = replacement_decision(at_error, theta);
        REQUIRE(v.has_value());
        CHECK(*v == 0);
    }
}

TEST_CASE("no replacement is proposed without unsatisfied checks") {
    LdpcCode code = sample_regular_code(CodeParams{16, 3, 4, 16}, 11);
    Word zero(code.length(), 0);
    Syndrome syn = compute_syndrome(code, zero);
    for (std::uint32_t i = 0; i < code.length(); ++i) {
        MessageSummary ms = compute_messages(code, zero, syn, i);
        CHECK(ms.agree_count == 0);
        CHECK(ms.zero_count == code.var_degree());
        CHECK_FALSE(replacement_decision(ms, 0).has_value());
    }
}

TEST_CASE("a single error is corrected at every threshold") {
    LdpcCode code = sample_regular_code(CodeParams{24, 3, 4, 16}, 21);
    const Word zero(code.length(), 0);
    for (std::uint32_t theta = 0; theta < 3; ++theta) {
        Word word = zero;
        word[5] = 11;
        DecodeResult res = decode_single(code, word, theta, &zero);
        CHECK_FALSE(res.failure);
        CHECK(res.word == zero);
        CHECK(res.replacements == 1);
        REQUIRE(res.trace.size() == 1);
        CHECK(res.trace[0].position == 5);
        CHECK(res.trace[0].old_value == 11);
        CHECK(res.trace[0].new_value == 0);
        CHECK(res.trace[0].syndrome_weight_after == 0);
        CHECK(res.trace[0].true_error_weight_after == 0);
    }
}

TEST_CASE("thresholds at or above the degree are rejected") {
    LdpcCode code = sample_regular_code(CodeParams{16, 3, 4, 16}, 1);
    CHECK_THROWS_AS(decode_single(code, Word(code.length(), 0), 3), std::invalid_argument);
    CHECK_THROWS_AS(decode_multi(code, Word(code.length(), 0), ThresholdSchedule({0, 3})),
                    std::invalid_argument);
}

TEST_CASE("every accepted replacement obeys the drop law") {
    SplitMix64 rng(314);
    int checked = 0;
    for (int round = 0; round < 60; ++round) {
        const std::uint32_t q = (round % 2) ? 16 : 4;
        LdpcCode code = sample_regular_code(CodeParams{24, 3, 4, q}, rng.next());
        const std::uint32_t weight = 1 + std::uint32_t(rng.below(5));
        Word error = sample_error_word(code.length(), code.field(), weight, rng.next(), 0, 0);
        const Word zero(code.length(), 0);

        // single threshold
        {
            const std::uint32_t theta = std::uint32_t(rng.below(3));
            DecodeResult res = decode_single(code, error, theta, &zero);
            std::string err = trace_check::validate(code, error, {theta}, res, &zero);
            REQUIRE_MESSAGE(err.empty(), err);
            checked += int(res.trace.size());
        }
        // full schedule
        {
            DecodeResult res = decode_multi(code, error, ThresholdSchedule::full(3), &zero);
            std::string err = trace_check::validate(code, error, {2, 1, 0}, res, &zero);
            REQUIRE_MESSAGE(err.empty(), err);
            checked += int(res.trace.size());
        }
    }
    CHECK(checked > 50); // the rounds actually produced replacements
}

TEST_CASE("multi-threshold decode chains phases and carries the syndrome") {
    SplitMix64 rng(2718);
    for (int round = 0; round < 20; ++round) {
        LdpcCode code = sample_regular_code(CodeParams{20, 4, 5, 16}, rng.next());
        Word error = sample_error_word(code.length(), code.field(), 3, rng.next(), 0, 0);

        DecodeResult multi = decode_multi(code, error, ThresholdSchedule({0, 2}));
        REQUIRE(multi.phases.size() == 2);
        CHECK(multi.phases[0].threshold == 2);
        CHECK(multi.phases[1].threshold == 0);

        // phase chaining equals running the single decoder twice by hand
        DecodeResult first = decode_single(code, error, 2);
        DecodeResult second = decode_single(code, first.word, 0);
        CHECK(multi.word == second.word);
        CHECK(multi.failure == second.failure);
        CHECK(multi.replacements == first.replacements + second.replacements);
    }
}

TEST_CASE("decode results are internally consistent") {
    SplitMix64 rng(55);
    for (int round = 0; round < 30; ++round) {
        LdpcCode code = sample_regular_code(CodeParams{24, 3, 6, 4}, rng.next());
        Word error = sample_error_word(code.length(), code.field(), 4, rng.next(), 0, 0);
        const std::uint32_t initial = compute_syndrome(code, error).weight;
        DecodeResult res = decode_multi(code, error, ThresholdSchedule::full(3));
        CHECK(res.replacements <= initial); // each replacement drops the weight by >= 1
        CHECK(res.failure == (compute_syndrome(code, res.word).weight != 0));
        CHECK(res.trace.size() == res.replacements);
        std::uint32_t pass_sum = 0;
        for (const PhaseStats& ph : res.phases)
            pass_sum += ph.sweeps;
        CHECK(res.passes == pass_sum);
    }
}

TEST_CASE("sequential trace matches the straight-line reference") {
    SplitMix64 rng(424242);
    int events = 0;
    for (int round = 0; round < 40; ++round) {
        const std::uint32_t q = (round % 2) ? 16 : 4;
        LdpcCode code = sample_regular_code(CodeParams{16, 3, 4, q}, rng.next());
        const std::uint32_t theta = std::uint32_t(rng.below(3));
        Word error = sample_error_word(code.length(), code.field(), 1 + std::uint32_t(rng.below(4)),
                                       rng.next(), 0, 0);

        Word mine = error;
        DecodeResult res = decode_single(code, mine, theta);

        Word theirs = error;
        std::vector<straightline::Event> expected = straightline::decode_single(code, theirs, theta);

        REQUIRE(res.trace.size() == expected.size());
        for (std::size_t k = 0; k < expected.size(); ++k) {
            REQUIRE(res.trace[k].position == expected[k].position);
            REQUIRE(res.trace[k].old_value == expected[k].old_value);
            REQUIRE(res.trace[k].new_value == expected[k].new_value);
            REQUIRE(res.trace[k].syndrome_weight_after == expected[k].syndrome_weight_after);
        }
        CHECK(res.word == theirs);
        events += int(expected.size());
    }
    CHECK(events > 30);
}

TEST_CASE("best-first order also satisfies the laws and fixes single errors") {
    DecodeOptions opt;
    opt.order = SweepOrder::best_first;
    SplitMix64 rng(77);
    for (int round = 0; round < 20; ++round) {
        LdpcCode code = sample_regular_code(CodeParams{20, 3, 4, 16}, rng.next());
        Word error = sample_error_word(code.length(), code.field(), 2, rng.next(), 0, 0);
        const Word zero(code.length(), 0);
        DecodeResult res = decode_single(code, error, 0, &zero, opt);
        std::string err = trace_check::validate(code, error, {0}, res, &zero);
        REQUIRE_MESSAGE(err.empty(), err);
    }
    // single error: exactly one replacement, straight to the codeword
    LdpcCode code = sample_regular_code(CodeParams{20, 3, 4, 16}, 9);
    Word error(code.length(), 0);
    error[3] = 7;
    DecodeResult res = decode_single(code, error, 0, nullptr, opt);
    CHECK_FALSE(res.failure);
    CHECK(res.replacements == 1);
}
