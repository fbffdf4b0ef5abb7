/**************************************************************************
 * rational.hpp
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

#include <numeric>
#include <stdexcept>
#include <string>

namespace gfqldpc {

/// Exact rational with 64-bit terms, kept normalized (den > 0, gcd(num, den) == 1).
/// Used where an interface promises an exact value rather than a rounded double.
struct Ratio {
    long long num = 0;
    long long den = 1;

    Ratio() = default;

    Ratio(long long n, long long d) : num(n), den(d) {
        if (den == 0)
            throw std::invalid_argument("Ratio: zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }

    explicit Ratio(long long n) : num(n), den(1) {}

    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

    std::string str() const {
        return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
    }

    friend bool operator==(const Ratio&, const Ratio&) = default;
};

} // namespace gfqldpc
