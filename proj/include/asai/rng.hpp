#ifndef ASAI_RNG_HPP
#define ASAI_RNG_HPP

#include <cstdint>
#include <random>

#include "asai/rational.hpp"

namespace asai {

// Seeded random source for the property suite. mt19937_64 output is fixed
// by the standard and the samplers below avoid std distributions, so a
// seed pins the whole stream on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t raw() { return engine_(); }

    // uniform in [0, n)
    std::uint64_t below(std::uint64_t n) {
        // modulo with rejection of the biased tail
        std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return x % n;
    }

    // uniform integer in [lo, hi]
    long range(long lo, long hi) {
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    bool coin() { return (engine_() & 1) != 0; }

    // nonzero rational with small numerator/denominator
    Rational nonzero_rational(long bound = 20) {
        long num = 0;
        while (num == 0)
            num = range(-bound, bound);
        long den = range(1, bound);
        return make_rational(Integer(num), Integer(den));
    }

    Rational rational(long bound = 20) {
        return make_rational(Integer(range(-bound, bound)), Integer(range(1, bound)));
    }

    long pick(const std::vector<long>& values) {
        return values[below(values.size())];
    }

private:
    std::mt19937_64 engine_;
};

} // namespace asai

#endif
