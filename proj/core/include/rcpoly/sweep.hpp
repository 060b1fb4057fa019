#pragma once

#include <cstdint>
#include <vector>

#include "rcpoly/report.hpp"

namespace rcpoly {

/// Fixed 64-bit mixing generator (splitmix64). All sweep randomness flows
/// through this so runs reproduce bit-for-bit across platforms.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        state += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform-ish draw in [0, n); n must be positive.
    std::uint64_t below(std::uint64_t n) { return next() % n; }
};

struct SweepOptions {
    long max_bound = -1;  // -1: identity default
    long cases = -1;      // -1: identity default
    std::uint64_t seed = 0;
    int jobs = 1;
};

/// Deterministic grid for the identity plus seeded random tuples; reports in
/// grid order regardless of the number of worker threads.
std::vector<VerificationReport> sweep(IdentityId id, const SweepOptions& options = {});

/// The grid bound and random-case count used when SweepOptions leaves them
/// at -1.
long sweep_default_max(IdentityId id);
long sweep_default_cases(IdentityId id);

/// The two halves of the oracle sweep, runnable on their own: the
/// parallelogram index property over random half-open cones, and the
/// polygon pipeline against the brute-force scan.
std::vector<VerificationReport> sweep_parallelogram_cases(long count, std::uint64_t seed,
                                                          int jobs = 1);
std::vector<VerificationReport> sweep_polygon_cases(long count, std::uint64_t seed, int jobs = 1);

}  // namespace rcpoly
