#ifndef LITTLEWOOD_POLYNOMIAL_HPP
#define LITTLEWOOD_POLYNOMIAL_HPP

#include <initializer_list>
#include <ostream>
#include <utility>
#include <vector>

#include "littlewood/rational.hpp"

namespace littlewood {

/// Dense univariate polynomial over the rationals, coefficients in ascending
/// order. Leading zeros are always trimmed, so the zero polynomial has no
/// coefficients and equality is coefficient-wise.
class Polynomial {
   public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs);
    Polynomial(std::initializer_list<Rational> coeffs);
    static Polynomial constant(const Rational& c);
    /// x - root
    static Polynomial linear_factor(const Rational& root);

    const std::vector<Rational>& coeffs() const noexcept { return c_; }
    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
    const Rational& leading() const { return c_.back(); }

    Rational operator()(const Rational& x) const;

    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    Polynomial& operator*=(const Polynomial& rhs);
    Polynomial& operator*=(const Rational& s);
    Polynomial operator-() const;

    friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
    friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
    friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
    friend Polynomial operator*(Polynomial lhs, const Rational& s) { return lhs *= s; }
    friend Polynomial operator*(const Rational& s, Polynomial rhs) { return rhs *= s; }
    friend bool operator==(const Polynomial&, const Polynomial&) = default;

   private:
    void trim();
    std::vector<Rational> c_;
};

Polynomial pow(const Polynomial& p, unsigned exponent);
Polynomial derivative(const Polynomial& p);
/// q(x) = p(alpha * x + beta)
Polynomial compose_affine(const Polynomial& p, const Rational& alpha, const Rational& beta);
/// Euclidean division; throws std::domain_error on a zero divisor.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& num, const Polynomial& den);
/// Monic gcd (zero if both zero).
Polynomial gcd(const Polynomial& a, const Polynomial& b);
/// p / gcd(p, p'), scaled to be primitive with positive leading coefficient.
Polynomial squarefree_part(const Polynomial& p);
/// Positive multiple of p with coprime integer coefficients.
Polynomial primitive_part(const Polynomial& p);

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

/// Sturm sequence p, p', -rem(p, p'), ... with each member scaled by a
/// positive factor to primitive integer form.
class SturmSequence {
   public:
    explicit SturmSequence(const Polynomial& p);
    /// Sign changes of the sequence evaluated at x (zeros skipped).
    int sign_changes(const Rational& x) const;
    /// Distinct real roots in (a, b]; requires a < b.
    int count_roots(const Rational& a, const Rational& b) const;
    const std::vector<Polynomial>& chain() const noexcept { return chain_; }

   private:
    std::vector<Polynomial> chain_;
};

/// Closed rational interval, used for sound enclosures.
struct Interval {
    Rational lo;
    Rational hi;
};

/// Enclosure of p over [lo, hi] by interval Horner evaluation.
Interval enclose(const Polynomial& p, const Interval& x);

}  // namespace littlewood

#endif
