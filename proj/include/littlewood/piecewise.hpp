#ifndef LITTLEWOOD_PIECEWISE_HPP
#define LITTLEWOOD_PIECEWISE_HPP

#include <vector>

#include "littlewood/polynomial.hpp"
#include "littlewood/rational.hpp"

namespace littlewood {

/// Exact piecewise polynomial on the real line.
///
/// Breakpoints b_0 < ... < b_k carry k pieces; piece i is valid on
/// [b_i, b_{i+1}). At the rightmost breakpoint the last piece is used (its
/// left limit). Outside [b_0, b_k] the function equals the exterior constant,
/// which is 0 for every compactly supported value. With no breakpoints the
/// value is the exterior constant everywhere.
///
/// Values are always canonical: adjacent pieces differ, and pieces at either
/// end that coincide with the exterior constant are dropped.
class PiecewisePoly {
   public:
    /// The zero function.
    PiecewisePoly() = default;
    PiecewisePoly(std::vector<Rational> breakpoints, std::vector<Polynomial> pieces, Rational exterior = 0);
    /// The function equal to c on all of R.
    static PiecewisePoly everywhere(const Rational& c);
    /// p on [lo, hi], zero elsewhere.
    static PiecewisePoly window(const Polynomial& p, const Rational& lo, const Rational& hi);

    const std::vector<Rational>& breakpoints() const noexcept { return breaks_; }
    const std::vector<Polynomial>& pieces() const noexcept { return pieces_; }
    const Rational& exterior() const noexcept { return exterior_; }
    bool is_everywhere_constant() const noexcept { return pieces_.empty(); }
    bool is_zero() const noexcept { return pieces_.empty() && exterior_ == 0; }

    Rational operator()(const Rational& x) const;
    /// Polynomial valid on the half-open cell starting at x (exterior constant
    /// outside the breakpoint range).
    Polynomial piece_at(const Rational& x) const;

    friend bool operator==(const PiecewisePoly&, const PiecewisePoly&) = default;

   private:
    void canonicalize();

    std::vector<Rational> breaks_;
    std::vector<Polynomial> pieces_;
    Rational exterior_ = 0;
};

/// <n over x> as a function of x: pieces on [j-1, j) for j = 0..n.
PiecewisePoly eulerian_spline(unsigned n);

PiecewisePoly pw_add(const PiecewisePoly& f, const PiecewisePoly& g);
PiecewisePoly pw_mul(const PiecewisePoly& f, const PiecewisePoly& g);
PiecewisePoly pw_scale(const PiecewisePoly& f, const Rational& c);
/// x -> f(alpha * x + beta). alpha = 0 yields the everywhere-constant f(beta).
PiecewisePoly pw_affine(const PiecewisePoly& f, const Rational& alpha, const Rational& beta);
/// f on [lo, hi], zero elsewhere.
PiecewisePoly pw_restrict(const PiecewisePoly& f, const Rational& lo, const Rational& hi);

struct MinimizeResult {
    /// Encloses a global minimiser; degenerate when it was located exactly.
    Interval argmin;
    /// Encloses the minimum value.
    Interval value;
    /// Another candidate (critical point or cell endpoint away from the
    /// reported one) has a value enclosure overlapping the minimum.
    bool alternative = false;
};

/// Global minimum of f on [lo, hi].
///
/// Candidates are cell endpoints and the real critical points of every piece.
/// Critical points are isolated with Sturm sequences of the squarefree part of
/// the derivative and bisected to width <= eps; rational midpoints that hit a
/// root are recorded exactly. Value enclosures for inexact candidates use the
/// centred form p(m) + [-1,1] * r * max|p'| over the isolating interval.
/// Candidates whose enclosures overlap the best upper bound are refined by
/// further bisection before `alternative` is decided.
MinimizeResult pw_minimize(const PiecewisePoly& f, const Rational& lo, const Rational& hi, const Rational& eps);

}  // namespace littlewood

#endif
