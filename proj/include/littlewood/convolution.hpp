#ifndef LITTLEWOOD_CONVOLUTION_HPP
#define LITTLEWOOD_CONVOLUTION_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "littlewood/rational.hpp"

namespace littlewood {

/// Operand length at or below which multiply() uses schoolbook convolution.
inline constexpr std::size_t kSchoolbookThreshold = 48;

/// Exact product of integer coefficient sequences.
///
/// Short operands use schoolbook multiplication. Otherwise the product is
/// computed by number-theoretic transforms over up to four NTT-friendly primes
/// and reconstructed with Garner's algorithm; the number of primes is chosen
/// from the a-priori bound min(len) * max|a| * max|b| on the output. Inputs
/// whose bound exceeds the four-prime range fall back to schoolbook.
std::vector<Integer> multiply(std::span<const Integer> a, std::span<const Integer> b);

std::vector<Integer> multiply_schoolbook(std::span<const Integer> a, std::span<const Integer> b);

/// a^e by binary powering; a^0 = [1].
std::vector<Integer> power(std::span<const Integer> a, unsigned e);

}  // namespace littlewood

#endif
