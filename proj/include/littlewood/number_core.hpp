#ifndef LITTLEWOOD_NUMBER_CORE_HPP
#define LITTLEWOOD_NUMBER_CORE_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "littlewood/rational.hpp"

namespace littlewood {

/// Immutable integer sequence indexed from 1.
class IntSeq {
   public:
    IntSeq() = default;
    explicit IntSeq(std::vector<Integer> values) : values_(std::move(values)) {}

    /// 1-based access; throws std::out_of_range.
    const Integer& at(std::size_t k) const;
    std::size_t size() const noexcept { return values_.size(); }
    std::span<const Integer> values() const noexcept { return values_; }

    bool operator==(const IntSeq&) const = default;

   private:
    std::vector<Integer> values_;
};

/// n! (memoized).
Integer factorial(unsigned n);

/// C(a, b) for integer arguments, 0 when b < 0 or a < b. Negative a with
/// 0 <= b <= a is impossible, so every a < 0 yields 0 as well.
Integer binomial(long a, long b);

/// Signed tangent numbers T(1..kmax): the coefficients of log cosh(z)
/// scaled by (2k)!. Computed by
///   T(k) = 1 - sum_{j<k} C(2k-1, 2j-1) T(j).
IntSeq tangent_numbers(unsigned kmax);
Integer tangent_number(unsigned k);

/// Signed Carlitz numbers C(1..kmax), from
///   C(k) = 1 - sum_{j<k} C(k, j) C(k-1, j-1) C(j).
IntSeq carlitz_numbers(unsigned kmax);
Integer carlitz_number(unsigned k);

/// Generalised Eulerian number <n over x> for rational x:
///   sum_{j=0}^{floor(x+1)} (-1)^j C(n+1, j) (x+1-j)^n.
/// Zero outside the open interval (-1, n).
Rational eulerian_general(unsigned n, const Rational& x);

/// Coefficients c[0..2N-1] of A_N(x) = sum_{a=1}^{2N-1} <2N-1 over a-1> x^a.
std::vector<Rational> eulerian_polynomial(unsigned N);

/// Number of tuples (j_1..j_N) in [0, n)^N summing to m, via inclusion-exclusion.
Integer composition_count(unsigned N, unsigned n, long m);

/// Pre-populates the factorial and special-number caches up to the given size.
void seed_tables(unsigned kmax);

}  // namespace littlewood

#endif
