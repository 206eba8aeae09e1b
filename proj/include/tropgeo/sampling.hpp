#pragma once

#include <cstdint>
#include <random>

#include "tropgeo/rational.hpp"

namespace tropgeo {

/// Deterministic source of small random rationals. The same seed always
/// produces the same stream, independent of platform library details.
class Sampler {
  public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    std::uint64_t bits() { return rng_(); }

    /// Uniform-ish integer in [lo, hi].
    long long int_in(long long lo, long long hi);

    /// Random rational p/q with p/q in [lo, hi] and 1 <= q <= max_den.
    Rat rat_in(long long lo, long long hi, long long max_den = 4);

    RatVec point(int n, long long lo = -10, long long hi = 10, long long max_den = 4);

  private:
    std::mt19937_64 rng_;
};

} // namespace tropgeo
