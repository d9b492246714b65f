#pragma once

#include "operjet/rational.hpp"

#include <cstdint>

namespace operjet {

// splitmix64: tiny deterministic generator, identical output on every
// platform, which is what the byte-reproducibility contract needs.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [lo, hi] (inclusive); ranges here are tiny so modulo bias is
    // irrelevant next to determinism.
    long long range(long long lo, long long hi) {
        return lo + static_cast<long long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    // Bounded rational with |numerator| <= 100 and denominator <= 100, the
    // sampling contract for every seeded check in the suite.
    Rational rational(long long num_bound = 100, long long den_bound = 100) {
        long long num = range(-num_bound, num_bound);
        long long den = range(1, den_bound);
        return Rational(num, den);
    }

    Rational nonzero_rational(long long num_bound = 100, long long den_bound = 100) {
        Rational q = rational(num_bound, den_bound);
        while (q == 0) q = rational(num_bound, den_bound);
        return q;
    }

private:
    std::uint64_t state_;
};

}  // namespace operjet
