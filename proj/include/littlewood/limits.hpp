#ifndef LITTLEWOOD_LIMITS_HPP
#define LITTLEWOOD_LIMITS_HPP

#include <map>
#include <string_view>
#include <vector>

#include "littlewood/piecewise.hpp"
#include "littlewood/rational.hpp"

namespace littlewood {

enum class LimitFamily { fekete, galois };

std::string_view to_string(LimitFamily family);

/// Row k of the integer triangle (2k-1)! * F(k, m) (or G(k, m)), m = 1..2k-1.
struct TriangleRow {
    unsigned k = 0;
    std::vector<Integer> values;
    /// m is 1-based.
    const Integer& at(unsigned m) const { return values.at(m - 1); }
};

struct LimitTable {
    LimitFamily family = LimitFamily::fekete;
    std::map<unsigned, Rational> entries;
};

/// Limit of (||f_p||_2q / sqrt p)^2q over Fekete polynomials, F(q, q), from
/// the triangle recursion.
Rational fekete_limit_recursive(unsigned q);
TriangleRow fekete_triangle_row(unsigned k);

/// Galois counterpart G(q, q).
Rational galois_limit_recursive(unsigned q);
TriangleRow galois_triangle_row(unsigned k);

LimitTable limit_table(LimitFamily family, unsigned qmax);

/// Largest q accepted by the partition-sum evaluators.
inline constexpr unsigned kMaxDirectQ = 10;
inline constexpr unsigned kMaxShiftedQ = 8;
inline constexpr unsigned kMaxSymbolicQ = 6;

/// The same limits summed over even (resp. all) set partitions, grouped by
/// block-size profile, with the composition sum taken explicitly.
Rational fekete_limit_direct(unsigned q);
Rational galois_limit_direct(unsigned q);

/// phi_q(R): limit for shifted Fekete polynomials with r/p -> R.
Rational shifted_fekete_limit(unsigned q, const Rational& R);

/// phi_q on [0, 1/2] as an exact piecewise polynomial (zero outside).
PiecewisePoly phi_piecewise(unsigned q);

struct PhiMinimum {
    Interval argmin;
    Interval value;
    bool alternative = false;
};

/// Global minimum of phi_q over [0, 1/2].
PhiMinimum phi_min(unsigned q, const Rational& eps);

}  // namespace littlewood

#endif
