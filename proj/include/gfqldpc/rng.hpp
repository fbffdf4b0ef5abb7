/**************************************************************************
 * rng.hpp
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

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace gfqldpc {

/// SplitMix64 (Steele, Lea, Flood): the state advances by the golden-ratio
/// increment and the output is the finalizing mix of the new state.
/// Chosen because it is tiny, fast, and bit-identical on every platform,
/// which keeps sampled codes and error patterns reproducible from a seed.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform draw from [0, bound), bound >= 1. Rejection over the top
    /// 2^64 mod bound outputs keeps the result exactly uniform.
    std::uint64_t below(std::uint64_t bound) {
        std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            std::uint64_t r = next();
            if (r >= threshold)
                return r % bound;
        }
    }

  private:
    std::uint64_t state_;
};

/// Finalizer of SplitMix64, used as the mixing step when deriving substreams.
inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Seed for an independent substream identified by up to three tags.
/// Every (weight, trial) pair of a simulation gets its own stream, so
/// trial outcomes do not depend on execution order. The additive
/// constants are fixed arbitrary odd numbers; they only keep the tag
/// positions from cancelling each other.
inline std::uint64_t derive_stream(std::uint64_t seed, std::uint64_t tag0,
                                   std::uint64_t tag1 = 0, std::uint64_t tag2 = 0) {
    std::uint64_t h = mix64(seed + 0x9e3779b97f4a7c15ULL);
    h = mix64(h ^ (tag0 + 0xd1b54a32d192ed03ULL));
    h = mix64(h ^ (tag1 + 0x8cb92ba72f3d8dd7ULL));
    h = mix64(h ^ (tag2 + 0x2545f4914f6cdd1dULL));
    return h;
}

/// In-place Fisher-Yates shuffle driven by rng.below().
template <class T>
void shuffle(std::vector<T>& v, SplitMix64& rng) {
    for (std::size_t i = v.size(); i > 1; --i) {
        std::size_t j = static_cast<std::size_t>(rng.below(i));
        std::swap(v[i - 1], v[j]);
    }
}

} // namespace gfqldpc
