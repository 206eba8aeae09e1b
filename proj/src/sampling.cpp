#include "tropgeo/sampling.hpp"

namespace tropgeo {

long long Sampler::int_in(long long lo, long long hi) {
    if (hi < lo) throw PreconditionError("int_in: empty range");
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long long>(rng_() % span);
}

Rat Sampler::rat_in(long long lo, long long hi, long long max_den) {
    const long long q = int_in(1, max_den);
    const long long p = int_in(lo * q, hi * q);
    Rat r(static_cast<long>(p), static_cast<long>(q));
    r.canonicalize();
    return r;
}

RatVec Sampler::point(int n, long long lo, long long hi, long long max_den) {
    RatVec x(n);
    for (int i = 0; i < n; ++i) x[i] = rat_in(lo, hi, max_den);
    return x;
}

} // namespace tropgeo
