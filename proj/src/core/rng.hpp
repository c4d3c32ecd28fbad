// Copyright 2026 The qhelab authors
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
#include <random>
#include <string_view>

namespace qhelab::core {

/// Seedable random source. All stochastic operations in the library take one
/// of these explicitly; the raw engine outputs are consumed directly (no
/// std::*_distribution) so that streams are reproducible bit-for-bit.
class Rng {
  public:
    explicit Rng(uint64_t seed) : eng_(mix(seed)) {}

    /// Derives an independent stream from (seed, tag), e.g. one per party.
    Rng(uint64_t seed, std::string_view tag) : eng_(mix(seed ^ fold(tag))) {}

    uint64_t next_u64() { return eng_(); }

    /// Uniform double in [0, 1).
    double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    int bit() { return static_cast<int>(eng_() >> 63); }

    /// Uniform integer in [0, n).
    uint64_t below(uint64_t n) {
        // Rejection sampling over the top multiple of n.
        const uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        uint64_t x = eng_();
        while (x >= limit) {
            x = eng_();
        }
        return x % n;
    }

    /// Standard normal via Box-Muller.
    double gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u = 0.0;
        while (u <= 0.0) {
            u = uniform();
        }
        const double v = uniform();
        const double r = std::sqrt(-2.0 * std::log(u));
        const double a = 6.283185307179586476925286766559 * v;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

  private:
    static uint64_t mix(uint64_t x) {
        // splitmix64 finalizer; spreads small seeds over the full state.
        x += 0x9e3779b97f4a7c15ULL;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    }

    static uint64_t fold(std::string_view tag) {
        uint64_t h = 0xcbf29ce484222325ULL;
        for (const char c : tag) {
            h = (h ^ static_cast<unsigned char>(c)) * 0x100000001b3ULL;
        }
        return h;
    }

    std::mt19937_64 eng_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace qhelab::core
