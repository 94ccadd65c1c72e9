#include <doctest.h>

#include "littlewood/polynomial.hpp"
#include "support.hpp"

using namespace littlewood;
using lwtest::R;

namespace {

Polynomial random_poly(lwtest::Gen& gen, int degree) {
    std::vector<Rational> c;
    for (int i = 0; i <= degree; ++i) c.push_back(gen.rational(R(-5), R(5), 9));
    return Polynomial(c);
}

Polynomial from_roots(const std::vector<Rational>& roots) {
    Polynomial p = Polynomial::constant(1);
    for (const auto& r : roots) p *= Polynomial::linear_factor(r);
    return p;
}

}  // namespace

TEST_CASE("trimming and degree") {
    CHECK(Polynomial({R(1), R(0), R(0)}).degree() == 0);
    CHECK(Polynomial({R(0)}).is_zero());
    CHECK(Polynomial().degree() == -1);
    CHECK((Polynomial({R(1), R(2)}) - Polynomial({R(1), R(2)})).is_zero());
}

TEST_CASE("ring identities on random polynomials") {
    lwtest::Gen gen(3);
    for (int t = 0; t < 50; ++t) {
        const auto a = random_poly(gen, static_cast<int>(gen.integer(0, 6)));
        const auto b = random_poly(gen, static_cast<int>(gen.integer(0, 6)));
        const auto x = gen.rational(R(-3), R(3));
        CHECK((a + b)(x) == a(x) + b(x));
        CHECK((a * b)(x) == a(x) * b(x));
        CHECK(pow(a, 3)(x) == pow(a(x), 3));
        const auto s = gen.rational(R(-2), R(2));
        const auto be = gen.rational(R(-2), R(2));
        CHECK(compose_affine(a, s, be)(x) == a(Rational(s * x + be)));
        if (!b.is_zero()) {
            const auto [quo, rem] = divmod(a, b);
            CHECK(quo * b + rem == a);
            CHECK(rem.degree() < b.degree());
        }
    }
}

TEST_CASE("derivative") {
    CHECK(derivative(Polynomial({R(3), R(2), R(5)})) == Polynomial({R(2), R(10)}));
    CHECK(derivative(Polynomial::constant(4)).is_zero());
}

TEST_CASE("gcd and squarefree part") {
    const auto p = from_roots({R(1, 2), R(1, 2), R(-3), R(2)});
    const auto q = from_roots({R(1, 2), R(2), R(5)});
    CHECK(gcd(p, q) == from_roots({R(1, 2), R(2)}));
    const auto sf = squarefree_part(p);
    CHECK(sf.degree() == 3);
    CHECK(sf(R(1, 2)) == 0);
    CHECK(sf(R(-3)) == 0);
    CHECK(sf.leading() > 0);
    CHECK_THROWS(divmod(p, Polynomial()));
}

TEST_CASE("primitive part has coprime integer coefficients") {
    const auto p = primitive_part(Polynomial({R(-2, 3), R(4, 9), R(-8, 3)}));
    CHECK(p == Polynomial({R(6), R(-4), R(24)}) * R(-1, 2));
}

TEST_CASE("Sturm counts match known rational roots") {
    const auto p = from_roots({R(-2), R(1, 3), R(1, 2), R(7, 4)});
    const SturmSequence s(p);
    CHECK(s.count_roots(R(-10), R(10)) == 4);
    CHECK(s.count_roots(R(0), R(1)) == 2);
    CHECK(s.count_roots(R(1, 3), R(1, 2)) == 1);  // (a, b]
    CHECK(s.count_roots(R(1, 2), R(7, 4) - R(1, 100)) == 0);
    // x^2 - 2: irrational roots.
    const SturmSequence t(Polynomial({R(-2), R(0), R(1)}));
    CHECK(t.count_roots(R(1), R(2)) == 1);
    CHECK(t.count_roots(R(1414, 1000), R(1415, 1000)) == 1);
    CHECK(t.count_roots(R(-1, 1), R(1)) == 0);
}

TEST_CASE("Sturm count ignores multiplicity") {
    const auto p = from_roots({R(1), R(1), R(1), R(3)});
    CHECK(SturmSequence(p).count_roots(R(0), R(4)) == 2);
}

TEST_CASE("interval Horner encloses sampled values") {
    lwtest::Gen gen(5);
    for (int t = 0; t < 30; ++t) {
        const auto p = random_poly(gen, 5);
        const Rational lo = gen.rational(R(-2), R(1));
        const Rational hi = lo + gen.rational(R(0), R(1));
        const Interval e = enclose(p, {lo, hi});
        for (int i = 0; i <= 8; ++i) {
            const Rational x = lo + (hi - lo) * R(i, 8);
            CHECK(e.lo <= p(x));
            CHECK(p(x) <= e.hi);
        }
    }
}
