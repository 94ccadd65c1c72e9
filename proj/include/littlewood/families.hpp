#ifndef LITTLEWOOD_FAMILIES_HPP
#define LITTLEWOOD_FAMILIES_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "littlewood/gf2k.hpp"
#include "littlewood/rational.hpp"

namespace littlewood {

/// Coefficients a_0..a_{n-1} of a polynomial with integer coefficients.
struct CoefVector {
    std::vector<Integer> coeffs;

    std::size_t size() const noexcept { return coeffs.size(); }
    const Integer& operator[](std::size_t i) const { return coeffs[i]; }
    bool operator==(const CoefVector&) const = default;
};

/// Deterministic Miller-Rabin, exact for n < 3.3e24.
bool is_prime(std::uint64_t n);

/// Legendre symbol (a / p) by Euler's criterion. Throws std::invalid_argument
/// unless p is an odd prime.
int legendre(std::int64_t a, std::uint64_t p);

/// f_p: a_0 = 0, a_j = (j / p).
CoefVector fekete(std::uint64_t p);
/// f_p^r: a_j = ((j + r) / p), j = 0..p-1. The single zero coefficient is kept.
CoefVector shifted_fekete(std::uint64_t p, std::int64_t r);

/// g_n with n = 2^k - 1: a_j = (-1)^Tr(beta * theta^j). beta = 0 is rejected.
CoefVector galois(unsigned k, std::uint32_t beta = 1);
CoefVector galois(const FieldGF2k& field, std::uint32_t beta = 1);

/// ||f||_2q^2q computed exactly as the sum of squared coefficients of f^q.
Integer norm_2q_exact(const CoefVector& f, unsigned q);

/// Mean of |f|^2q over M = 2q deg(f) + 1 roots of unity (exact in exact
/// arithmetic; here in long double).
double norm_2q_quadrature(const CoefVector& f, unsigned q);

enum class Family { fekete, shifted_fekete, galois };

std::string_view to_string(Family family);
/// Accepts "fekete", "shifted", "shifted_fekete", "galois".
std::optional<Family> parse_family(std::string_view name);

/// Shift choice for the shifted family: a fixed r, or r = nearest integer to R p.
struct ShiftRule {
    std::optional<std::int64_t> fixed;
    std::optional<Rational> ratio;

    std::int64_t shift_for(std::uint64_t p) const;
    /// Limiting value of r / p.
    Rational limit_ratio() const;
};

struct ConvergenceRow {
    Family family = Family::fekete;
    unsigned q = 0;
    std::uint64_t size_param = 0;  // p, or k for the Galois family
    std::uint64_t n = 0;           // normalising length: p or 2^k - 1
    std::int64_t shift = 0;
    Integer exact_norm;
    Rational ratio;  // exact_norm / n^q
    Rational limit;
    double abs_err = 0;
    double rel_err = 0;
};

/// One row per requested size, in input order. Rows may be evaluated on up
/// to LITTLEWOOD_THREADS worker threads.
std::vector<ConvergenceRow> convergence_table(Family family, unsigned q, std::span<const std::uint64_t> sizes,
                                              const ShiftRule& rule = {});

/// Worker count from LITTLEWOOD_THREADS, defaulting to hardware concurrency.
unsigned worker_threads();

}  // namespace littlewood

#endif
