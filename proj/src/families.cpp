#include "littlewood/families.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <stdexcept>
#include <string>
#include <thread>

#include "littlewood/convolution.hpp"
#include "littlewood/limits.hpp"

namespace littlewood {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 pow_mod(u64 b, u64 e, u64 m) {
    u64 r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) r = mul_mod(r, b, m);
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    return r;
}

void require_odd_prime(u64 p) {
    if (p < 3 || p % 2 == 0 || !is_prime(p)) {
        throw std::invalid_argument("p=" + std::to_string(p) + " is not an odd prime (Miller-Rabin primality check failed)");
    }
}

}  // namespace

bool is_prime(u64 n) {
    if (n < 2) return false;
    static constexpr u64 kWitnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (u64 p : kWitnesses) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : kWitnesses) {
        u64 x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

int legendre(std::int64_t a, u64 p) {
    require_odd_prime(p);
    const auto pm = static_cast<std::int64_t>(p);
    std::int64_t r = a % pm;
    if (r < 0) r += pm;
    if (r == 0) return 0;
    const u64 e = pow_mod(static_cast<u64>(r), (p - 1) / 2, p);
    return e == 1 ? 1 : -1;
}

CoefVector fekete(u64 p) { return shifted_fekete(p, 0); }

CoefVector shifted_fekete(u64 p, std::int64_t r) {
    require_odd_prime(p);
    // Quadratic character table, then read it cyclically.
    std::vector<int> chi(p, -1);
    chi[0] = 0;
    for (u64 x = 1; x <= (p - 1) / 2; ++x) chi[mul_mod(x, x, p)] = 1;
    const auto pm = static_cast<std::int64_t>(p);
    std::int64_t start = r % pm;
    if (start < 0) start += pm;
    CoefVector f;
    f.coeffs.reserve(p);
    for (u64 j = 0; j < p; ++j) f.coeffs.emplace_back(chi[(static_cast<u64>(start) + j) % p]);
    return f;
}

CoefVector galois(const FieldGF2k& field, std::uint32_t beta) {
    if (beta == 0) throw std::invalid_argument("galois: beta = 0 gives the trivial additive character");
    if (beta >= field.size()) throw std::invalid_argument("galois: beta is not an element of the field");
    CoefVector g;
    g.coeffs.reserve(field.order());
    for (std::uint32_t j = 0; j < field.order(); ++j) {
        g.coeffs.emplace_back(field.trace(field.mul(beta, field.antilog()[j])) ? -1 : 1);
    }
    return g;
}

CoefVector galois(unsigned k, std::uint32_t beta) { return galois(build_gf2k(k), beta); }

Integer norm_2q_exact(const CoefVector& f, unsigned q) {
    if (q == 0) throw std::invalid_argument("norm_2q_exact: q must be >= 1");
    const auto pw = power(f.coeffs, q);
    Integer total = 0;
    for (const auto& c : pw) mpz_addmul(total.get_mpz_t(), c.get_mpz_t(), c.get_mpz_t());
    return total;
}

double norm_2q_quadrature(const CoefVector& f, unsigned q) {
    if (q == 0) throw std::invalid_argument("norm_2q_quadrature: q must be >= 1");
    if (f.size() == 0) return 0.0;
    const std::size_t deg = f.size() - 1;
    const std::size_t M = 2 * q * deg + 1;
    std::vector<long double> re(M), im(M);
    const long double two_pi = 2 * std::numbers::pi_v<long double>;
    for (std::size_t t = 0; t < M; ++t) {
        const long double angle = two_pi * static_cast<long double>(t) / static_cast<long double>(M);
        re[t] = std::cos(angle);
        im[t] = std::sin(angle);
    }
    std::vector<long double> a(f.size());
    for (std::size_t j = 0; j < f.size(); ++j) a[j] = f.coeffs[j].get_d();

    long double sum = 0;
    for (std::size_t m = 0; m < M; ++m) {
        long double x = 0, y = 0;
        std::size_t idx = 0;  // m * j mod M
        for (std::size_t j = 0; j < f.size(); ++j) {
            x += a[j] * re[idx];
            y += a[j] * im[idx];
            idx += m;
            if (idx >= M) idx -= M;
        }
        const long double mag2 = x * x + y * y;
        long double v = 1;
        for (unsigned i = 0; i < q; ++i) v *= mag2;
        sum += v;
    }
    return static_cast<double>(sum / static_cast<long double>(M));
}

std::string_view to_string(Family family) {
    switch (family) {
        case Family::fekete:
            return "fekete";
        case Family::shifted_fekete:
            return "shifted";
        case Family::galois:
            return "galois";
    }
    return "unknown";
}

std::optional<Family> parse_family(std::string_view name) {
    if (name == "fekete") return Family::fekete;
    if (name == "shifted" || name == "shifted_fekete") return Family::shifted_fekete;
    if (name == "galois") return Family::galois;
    return std::nullopt;
}

std::int64_t ShiftRule::shift_for(u64 p) const {
    if (fixed) return *fixed;
    if (ratio) {
        // Nearest integer to R p, ties rounded up.
        return floor(Rational(*ratio * Rational(Integer(std::to_string(p))) + Rational(1, 2))).get_si();
    }
    return 0;
}

Rational ShiftRule::limit_ratio() const { return ratio ? *ratio : Rational(0); }

unsigned worker_threads() {
    if (const char* env = std::getenv("LITTLEWOOD_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v >= 1) return static_cast<unsigned>(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

std::vector<ConvergenceRow> convergence_table(Family family, unsigned q, std::span<const u64> sizes,
                                              const ShiftRule& rule) {
    if (q == 0) throw std::invalid_argument("convergence_table: q must be >= 1");
    for (u64 s : sizes) {
        if (family == Family::galois) {
            if (s < FieldGF2k::kMinDegree || s > FieldGF2k::kMaxDegree) {
                throw std::invalid_argument("galois sizes are field degrees k in 2..24, got " + std::to_string(s));
            }
        } else {
            require_odd_prime(s);
        }
    }

    Rational limit;
    switch (family) {
        case Family::fekete:
            limit = fekete_limit_recursive(q);
            break;
        case Family::galois:
            limit = galois_limit_recursive(q);
            break;
        case Family::shifted_fekete:
            limit = shifted_fekete_limit(q, rule.limit_ratio());
            break;
    }

    std::vector<ConvergenceRow> rows(sizes.size());
    auto compute = [&](std::size_t i) {
        ConvergenceRow row;
        row.family = family;
        row.q = q;
        row.size_param = sizes[i];
        CoefVector f;
        if (family == Family::galois) {
            f = galois(static_cast<unsigned>(sizes[i]));
            row.n = (u64{1} << sizes[i]) - 1;
        } else {
            row.n = sizes[i];
            row.shift = family == Family::shifted_fekete ? rule.shift_for(sizes[i]) : 0;
            f = shifted_fekete(sizes[i], row.shift);
        }
        row.exact_norm = norm_2q_exact(f, q);
        Integer denom;
        mpz_ui_pow_ui(denom.get_mpz_t(), row.n, q);
        row.ratio = make_rational(row.exact_norm, denom);
        row.limit = limit;
        const Rational diff = abs(row.ratio - row.limit);
        row.abs_err = diff.get_d();
        row.rel_err = row.limit == 0 ? row.abs_err : Rational(diff / abs(row.limit)).get_d();
        rows[i] = std::move(row);
    };

    const unsigned threads = std::min<unsigned>(worker_threads(), static_cast<unsigned>(sizes.size()));
    if (threads <= 1) {
        for (std::size_t i = 0; i < sizes.size(); ++i) compute(i);
        return rows;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(threads);
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&, t] {
            try {
                for (std::size_t i = next++; i < sizes.size(); i = next++) compute(i);
            } catch (...) {
                errors[t] = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
    return rows;
}

}  // namespace littlewood
