// Copyright 2026 The Tessera Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace tessera {

/// Stateless 64-bit mixing function (splitmix64 finalizer).
inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// Deterministic random stream.
///
/// Every sampling operation in the library takes one of these explicitly.
/// Child streams are derived from the creating seed plus integer tags, so a
/// single 64-bit experiment seed expands into an addressable tree of
/// independent streams: shots, sweep points and bootstrap resamples can be
/// evaluated in any order (or in parallel) and still reproduce bit-identical
/// results. Floating-point variates are produced from raw 64-bit draws
/// rather than std distributions, which keeps the byte stream independent of
/// the standard-library implementation.
class RngStream {
  public:
    explicit RngStream(std::uint64_t seed) : seed_(seed), gen_(seed) {}

    std::uint64_t seed() const { return seed_; }

    /// Independent child stream keyed by up to three integer tags.
    RngStream derive(std::uint64_t a, std::uint64_t b = 0,
                     std::uint64_t c = 0) const {
        std::uint64_t h = seed_;
        h = mix64(h ^ mix64(a ^ 0x517CC1B727220A95ULL));
        h = mix64(h ^ mix64(b ^ 0x2545F4914F6CDD1DULL));
        h = mix64(h ^ mix64(c ^ 0x6C62272E07BB0142ULL));
        return RngStream(h);
    }

    std::uint64_t next_u64() { return gen_(); }

    /// Uniform double in [0, 1), 53 bits of entropy.
    double uniform() { return (gen_() >> 11) * 0x1.0p-53; }

    /// Standard normal variate (Box-Muller; one value per call so the draw
    /// count is predictable).
    double normal() {
        double u1 = 1.0 - uniform(); // (0, 1]
        double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) *
               std::cos(2.0 * std::numbers::pi * u2);
    }

    /// Index sampled from an unnormalized cumulative scan of `weights`.
    template <typename Container>
    int categorical(const Container& weights) {
        double total = 0.0;
        for (double w : weights) total += w;
        double u = uniform() * total;
        double acc = 0.0;
        int last = 0;
        int i = 0;
        for (double w : weights) {
            acc += w;
            if (u < acc) return i;
            if (w > 0) last = i;
            ++i;
        }
        return last; // u landed on the top edge from rounding
    }

  private:
    std::uint64_t seed_;
    std::mt19937_64 gen_;
};

} // namespace tessera
