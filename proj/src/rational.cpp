#include "littlewood/rational.hpp"

#include <cctype>
#include <stdexcept>
#include <vector>

namespace littlewood {

namespace {

bool is_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

[[noreturn]] void bad_rational(std::string_view text) {
    throw std::invalid_argument("not a rational number: '" + std::string(text) + "'");
}

}  // namespace

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational parse_rational(std::string_view text) {
    std::string_view s = text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    if (s.empty()) bad_rational(text);

    bool negative = false;
    std::string_view body = s;
    if (body.front() == '-' || body.front() == '+') {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }

    Rational value;
    if (auto slash = body.find('/'); slash != std::string_view::npos) {
        auto num = body.substr(0, slash);
        auto den = body.substr(slash + 1);
        if (!is_digits(num) || !is_digits(den)) bad_rational(text);
        Integer d(std::string(den), 10);
        if (d == 0) bad_rational(text);
        value = make_rational(Integer(std::string(num), 10), d);
    } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
        auto whole = body.substr(0, dot);
        auto frac = body.substr(dot + 1);
        if (whole.empty() && frac.empty()) bad_rational(text);
        if ((!whole.empty() && !is_digits(whole)) || (!frac.empty() && !is_digits(frac))) {
            bad_rational(text);
        }
        std::string digits = std::string(whole) + std::string(frac);
        Integer den;
        mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
        value = make_rational(Integer(digits, 10), den);
    } else {
        if (!is_digits(body)) bad_rational(text);
        value = Rational(Integer(std::string(body), 10));
    }
    return negative ? Rational(-value) : value;
}

std::string to_string(const Rational& x) { return x.get_str(10); }

std::string to_string(const Integer& x) { return x.get_str(10); }

std::string to_decimal(const Rational& x, int significant_digits) {
    // 64 extra bits beyond what the requested digits need.
    const auto bits = static_cast<mp_bitcnt_t>(significant_digits * 4 + 64);
    mpf_class f(x, bits);
    std::vector<char> buf(static_cast<size_t>(significant_digits) + 64);
    int n = gmp_snprintf(buf.data(), buf.size(), "%.*Fg", significant_digits, f.get_mpf_t());
    if (n < 0) throw std::runtime_error("decimal rendering failed");
    if (static_cast<size_t>(n) >= buf.size()) {
        buf.resize(static_cast<size_t>(n) + 1);
        gmp_snprintf(buf.data(), buf.size(), "%.*Fg", significant_digits, f.get_mpf_t());
    }
    return std::string(buf.data());
}

Integer floor(const Rational& x) {
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return r;
}

Integer ceil(const Rational& x) {
    Integer r;
    mpz_cdiv_q(r.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return r;
}

Rational pow(const Rational& base, unsigned long exponent) {
    Integer num, den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), exponent);
    mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), exponent);
    // Powers of coprime integers stay coprime; no canonicalization needed.
    Rational r;
    mpq_set_num(r.get_mpq_t(), num.get_mpz_t());
    mpq_set_den(r.get_mpq_t(), den.get_mpz_t());
    return r;
}

}  // namespace littlewood
