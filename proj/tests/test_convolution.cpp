#include <doctest.h>

#include "littlewood/convolution.hpp"
#include "support.hpp"

using namespace littlewood;

TEST_CASE("small products") {
    const std::vector<Integer> a{1, -1, 2};
    const std::vector<Integer> b{3, 0, 1};
    const std::vector<Integer> expect{3, -3, 7, -1, 2};
    CHECK(multiply(a, b) == expect);
    CHECK(multiply_schoolbook(a, b) == expect);
    CHECK(multiply(a, std::vector<Integer>{}).empty());
    CHECK(power(a, 0) == std::vector<Integer>{1});
    CHECK(power(a, 1) == a);
}

TEST_CASE("transform path matches schoolbook") {
    lwtest::Gen gen(29);
    for (int t = 0; t < 20; ++t) {
        const auto n = static_cast<std::size_t>(gen.integer(40, 900));
        const auto m = static_cast<std::size_t>(gen.integer(40, 900));
        const long bound = t % 3 == 0 ? 1 : t % 3 == 1 ? 1000 : 1000000000;
        const auto a = gen.integers(n, bound);
        const auto b = gen.integers(m, bound);
        CHECK(multiply(a, b) == multiply_schoolbook(a, b));
    }
}

TEST_CASE("huge coefficients fall back correctly") {
    lwtest::Gen gen(31);
    auto a = gen.integers(200, 5);
    auto b = gen.integers(200, 5);
    Integer big;
    mpz_ui_pow_ui(big.get_mpz_t(), 10, 80);
    a[7] = big;
    b[3] = -big;
    CHECK(multiply(a, b) == multiply_schoolbook(a, b));
}

TEST_CASE("powers of Littlewood polynomials") {
    lwtest::Gen gen(37);
    const auto f = gen.littlewood(300);
    auto expect = std::vector<Integer>{1};
    for (unsigned q = 1; q <= 5; ++q) {
        expect = multiply_schoolbook(expect, f);
        CHECK(power(f, q) == expect);
    }
    // (1 + x)^n gives binomials.
    const auto b = power(std::vector<Integer>{1, 1}, 64);
    CHECK(b[32] == Integer("1832624140942590534"));
}
