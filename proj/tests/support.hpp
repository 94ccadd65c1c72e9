#ifndef LITTLEWOOD_TESTS_SUPPORT_HPP
#define LITTLEWOOD_TESTS_SUPPORT_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "littlewood/rational.hpp"

namespace lwtest {

using littlewood::Integer;
using littlewood::Rational;

// Fixed-seed generators so failures reproduce.
class Gen {
   public:
    explicit Gen(std::uint64_t seed = 0x5eed) : rng_(seed) {}

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

    // Uniform numerator over a random denominator in [1, max_den], scaled into [lo, hi].
    Rational rational(const Rational& lo, const Rational& hi, long max_den = 97) {
        const long den = integer(1, max_den);
        const long num = integer(0, den);
        Rational t(num, den);
        t.canonicalize();
        return Rational(lo + (hi - lo) * t);
    }

    std::vector<Integer> littlewood(std::size_t n) {
        std::vector<Integer> a(n);
        for (auto& x : a) x = integer(0, 1) ? 1 : -1;
        return a;
    }

    std::vector<Integer> integers(std::size_t n, long bound) {
        std::vector<Integer> a(n);
        for (auto& x : a) x = integer(-bound, bound);
        return a;
    }

    std::mt19937_64& engine() { return rng_; }

   private:
    std::mt19937_64 rng_;
};

inline Rational R(long n, long d = 1) {
    Rational r(n, d);
    r.canonicalize();
    return r;
}

}  // namespace lwtest

#endif
