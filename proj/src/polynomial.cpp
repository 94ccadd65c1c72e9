#include "littlewood/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace littlewood {

Polynomial::Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Polynomial::Polynomial(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::linear_factor(const Rational& root) { return Polynomial({Rational(-root), Rational(1)}); }

void Polynomial::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational Polynomial::operator()(const Rational& x) const {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc *= x;
        acc += *it;
    }
    return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
    if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size());
    for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] += rhs.c_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
    if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size());
    for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] -= rhs.c_[i];
    trim();
    return *this;
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return {};
    std::vector<Rational> out(lhs.c_.size() + rhs.c_.size() - 1);
    for (std::size_t i = 0; i < lhs.c_.size(); ++i) {
        if (lhs.c_[i] == 0) continue;
        for (std::size_t j = 0; j < rhs.c_.size(); ++j) out[i + j] += lhs.c_[i] * rhs.c_[j];
    }
    return Polynomial(std::move(out));
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) { return *this = *this * rhs; }

Polynomial& Polynomial::operator*=(const Rational& s) {
    if (s == 0) {
        c_.clear();
        return *this;
    }
    for (auto& c : c_) c *= s;
    return *this;
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

Polynomial pow(const Polynomial& p, unsigned exponent) {
    Polynomial result = Polynomial::constant(1);
    Polynomial base = p;
    while (exponent) {
        if (exponent & 1u) result *= base;
        exponent >>= 1u;
        if (exponent) base *= base;
    }
    return result;
}

Polynomial derivative(const Polynomial& p) {
    if (p.degree() < 1) return {};
    std::vector<Rational> d(p.coeffs().size() - 1);
    for (std::size_t i = 1; i < p.coeffs().size(); ++i) d[i - 1] = p.coeffs()[i] * static_cast<unsigned long>(i);
    return Polynomial(std::move(d));
}

Polynomial compose_affine(const Polynomial& p, const Rational& alpha, const Rational& beta) {
    // Horner in the polynomial ring: acc = acc * (alpha x + beta) + c_i.
    const Polynomial inner({beta, alpha});
    Polynomial acc;
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
        acc = acc * inner + Polynomial::constant(*it);
    }
    return acc;
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& num, const Polynomial& den) {
    if (den.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<Rational> rem = num.coeffs();
    const int dd = den.degree();
    if (num.degree() < dd) return {Polynomial{}, num};
    std::vector<Rational> quo(num.degree() - dd + 1);
    const Rational lead_inv = 1 / den.leading();
    for (int i = num.degree(); i >= dd; --i) {
        if (rem[i] == 0) continue;
        Rational f = rem[i] * lead_inv;
        quo[i - dd] = f;
        for (int j = 0; j <= dd; ++j) rem[i - dd + j] -= f * den.coeffs()[j];
    }
    rem.resize(dd);
    return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
    Polynomial x = a, y = b;
    while (!y.is_zero()) {
        auto r = divmod(x, y).second;
        x = std::move(y);
        y = std::move(r);
    }
    if (x.is_zero()) return x;
    return x * Rational(1 / x.leading());
}

Polynomial primitive_part(const Polynomial& p) {
    if (p.is_zero()) return p;
    Integer den_lcm = 1;
    for (const auto& c : p.coeffs()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
    Integer num_gcd = 0;
    for (const auto& c : p.coeffs()) {
        Integer scaled = c.get_num() * (den_lcm / c.get_den());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
    }
    return p * make_rational(den_lcm, num_gcd);
}

Polynomial squarefree_part(const Polynomial& p) {
    if (p.degree() < 1) return primitive_part(p);
    Polynomial g = gcd(p, derivative(p));
    Polynomial s = divmod(p, g).first;
    s = primitive_part(s);
    if (s.leading() < 0) s = -s;
    return s;
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
    if (p.is_zero()) return os << "0";
    bool first = true;
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        const auto& c = p.coeffs()[i];
        if (c == 0) continue;
        if (!first) os << " + ";
        os << "(" << to_string(c) << ")";
        if (i >= 1) os << "*x";
        if (i >= 2) os << "^" << i;
        first = false;
    }
    return os;
}

SturmSequence::SturmSequence(const Polynomial& p) {
    if (p.is_zero()) throw std::invalid_argument("Sturm sequence of the zero polynomial");
    chain_.push_back(primitive_part(p));
    Polynomial d = derivative(p);
    if (d.is_zero()) return;
    chain_.push_back(primitive_part(d));
    while (true) {
        const auto& a = chain_[chain_.size() - 2];
        const auto& b = chain_.back();
        Polynomial r = divmod(a, b).second;
        if (r.is_zero()) break;
        chain_.push_back(primitive_part(-r));
    }
}

int SturmSequence::sign_changes(const Rational& x) const {
    int changes = 0;
    int last = 0;
    for (const auto& p : chain_) {
        const int s = sgn(p(x));
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

int SturmSequence::count_roots(const Rational& a, const Rational& b) const {
    if (!(a < b)) throw std::invalid_argument("count_roots requires a < b");
    return sign_changes(a) - sign_changes(b);
}

namespace {

Interval mul(const Interval& a, const Interval& b) {
    Rational p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
    return {*std::min_element(p, p + 4), *std::max_element(p, p + 4)};
}

}  // namespace

Interval enclose(const Polynomial& p, const Interval& x) {
    Interval acc{0, 0};
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
        acc = mul(acc, x);
        acc.lo += *it;
        acc.hi += *it;
    }
    return acc;
}

}  // namespace littlewood
