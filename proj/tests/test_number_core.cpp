#include <doctest.h>

#include <functional>
#include <thread>
#include <vector>

#include "littlewood/number_core.hpp"
#include "support.hpp"

using namespace littlewood;
using lwtest::R;

namespace {

// Coefficients of log(1 + g_1 w + g_2 w^2 + ...) up to w^n, from n l_n = n g_n - sum k l_k g_{n-k}.
std::vector<Rational> log_series(const std::vector<Rational>& g, unsigned n) {
    std::vector<Rational> l(n + 1, Rational(0));
    for (unsigned m = 1; m <= n; ++m) {
        Rational acc = Rational(m) * g[m];
        for (unsigned k = 1; k < m; ++k) acc -= Rational(k) * l[k] * g[m - k];
        l[m] = acc / Rational(m);
    }
    return l;
}

Integer brute_compositions(unsigned N, unsigned n, long m) {
    Integer count = 0;
    std::vector<unsigned> j(N, 0);
    std::function<void(unsigned, long)> rec = [&](unsigned i, long sum) {
        if (i == N) {
            if (sum == m) ++count;
            return;
        }
        for (unsigned v = 0; v < n; ++v) rec(i + 1, sum + v);
    };
    rec(0, 0);
    return count;
}

}  // namespace

TEST_CASE("factorial and binomial") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(10) == 3628800);
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(5, -1) == 0);
    CHECK(binomial(3, 5) == 0);
    CHECK(binomial(-2, 1) == 0);
    CHECK(binomial(300, 150) == factorial(300) / (factorial(150) * factorial(150)));
}

TEST_CASE("tangent numbers") {
    const auto t = tangent_numbers(4);
    REQUIRE(t.size() == 4);
    CHECK(t.at(1) == 1);
    CHECK(t.at(2) == -2);
    CHECK(t.at(3) == 16);
    CHECK(t.at(4) == -272);
    CHECK(tangent_number(5) == 7936);
    CHECK(tangent_number(6) == -353792);
}

TEST_CASE("carlitz numbers") {
    const auto c = carlitz_numbers(4);
    CHECK(c.at(1) == 1);
    CHECK(c.at(2) == -1);
    CHECK(c.at(3) == 4);
    CHECK(c.at(4) == -33);
    CHECK(carlitz_number(5) == 456);
    CHECK(carlitz_number(6) == -9460);
}

TEST_CASE("tangent numbers from log cosh series") {
    const unsigned K = 10;
    std::vector<Rational> cosh(K + 1);
    for (unsigned k = 0; k <= K; ++k) cosh[k] = Rational(1) / Rational(factorial(2 * k));
    const auto l = log_series(cosh, K);
    for (unsigned k = 1; k <= K; ++k) {
        CAPTURE(k);
        CHECK(Rational(l[k] * Rational(factorial(2 * k))) == Rational(tangent_number(k)));
    }
}

TEST_CASE("carlitz numbers from log J0(2 sqrt z) series") {
    const unsigned K = 10;
    std::vector<Rational> j0(K + 1);
    for (unsigned k = 0; k <= K; ++k) {
        const Integer f = factorial(k);
        j0[k] = Rational((k % 2 ? -1 : 1), 1) / Rational(f * f);
    }
    const auto l = log_series(j0, K);
    for (unsigned k = 1; k <= K; ++k) {
        CAPTURE(k);
        const Integer f = factorial(k);
        const Rational expected = Rational(l[k] * Rational(f * f) * Rational(k % 2 ? -1 : 1));
        CHECK(expected == Rational(carlitz_number(k)));
    }
}

TEST_CASE("eulerian_general examples") {
    CHECK(eulerian_general(3, R(1)) == 4);
    CHECK(eulerian_general(5, R(-1)) == 0);
    CHECK(eulerian_general(1, R(1, 2)) == R(1, 2));
    CHECK(eulerian_general(4, R(4)) == 0);
    CHECK(eulerian_general(4, R(-7, 3)) == 0);
    CHECK(eulerian_general(4, R(11, 2)) == 0);
}

TEST_CASE("eulerian_general partition of unity, symmetry, support") {
    for (unsigned n = 1; n <= 9; ++n) {
        const Integer nf = factorial(n);
        for (long t = -6; t < 7 * static_cast<long>(n); ++t) {
            const Rational x = R(t, 7);
            CAPTURE(n);
            CAPTURE(to_string(x));
            Rational total = 0;
            for (long a = -static_cast<long>(n) - 2; a <= static_cast<long>(n) + 2; ++a) {
                total += eulerian_general(n, Rational(x + a));
            }
            CHECK(total == Rational(nf));
            CHECK(eulerian_general(n, x) == eulerian_general(n, Rational(Rational(n - 1) - x)));
            CHECK(eulerian_general(n, x) > 0);
        }
        CHECK(eulerian_general(n, R(-1)) == 0);
        CHECK(eulerian_general(n, Rational(n)) == 0);
        CHECK(eulerian_general(n, Rational(n) + R(1, 3)) == 0);
        CHECK(eulerian_general(n, R(-4, 3)) == 0);
    }
}

TEST_CASE("eulerian_polynomial") {
    CHECK(eulerian_polynomial(1) == std::vector<Rational>{R(0), R(1)});
    CHECK(eulerian_polynomial(2) == std::vector<Rational>{R(0), R(1), R(4), R(1)});
    for (unsigned N = 1; N <= 8; ++N) {
        const auto c = eulerian_polynomial(N);
        CHECK(c.size() == 2 * N);
        CHECK(c[0] == 0);
        Rational sum = 0;
        for (const auto& x : c) {
            CHECK(x >= 0);
            CHECK(x.get_den() == 1);
            sum += x;
        }
        CHECK(sum == Rational(factorial(2 * N - 1)));
    }
}

TEST_CASE("composition_count examples") {
    CHECK(composition_count(2, 3, 2) == 3);
    CHECK(composition_count(3, 2, 7) == 0);
    CHECK(composition_count(4, 5, 8) == brute_compositions(4, 5, 8));
    CHECK(composition_count(3, 4, -1) == 0);
}

TEST_CASE("composition_count matches exhaustive enumeration") {
    for (unsigned N = 1; N <= 4; ++N) {
        for (unsigned n = 1; n <= 6; ++n) {
            for (long m = 0; m <= static_cast<long>(N * (n - 1)); ++m) {
                CAPTURE(N);
                CAPTURE(n);
                CAPTURE(m);
                CHECK(composition_count(N, n, m) == brute_compositions(N, n, m));
            }
        }
    }
}

TEST_CASE("composition_count scaled limit") {
    const unsigned N = 3, n = 1000;
    const Rational M = R(3, 2);
    const Integer c = composition_count(N, n, floor(Rational(M * n)).get_si());
    const Rational scaled = Rational(c) / Rational(Integer(n) * n);
    const Rational target = Rational(eulerian_general(N - 1, Rational(M - 1)) / Rational(factorial(N - 1)));
    const double rel = std::abs(Rational((scaled - target) / target).get_d());
    CHECK(rel < 0.05);
}

TEST_CASE("memoised sequences are consistent across threads") {
    seed_tables(8);
    std::vector<std::thread> pool;
    std::vector<Integer> got(4);
    for (int t = 0; t < 4; ++t) {
        pool.emplace_back([&, t] { got[t] = tangent_number(20 + t) + carlitz_number(20 + t) + factorial(100 + t); });
    }
    for (auto& th : pool) th.join();
    for (int t = 0; t < 4; ++t) {
        CHECK(got[t] == tangent_number(20 + t) + carlitz_number(20 + t) + factorial(100 + t));
    }
}
