#include <doctest.h>

#include "periods/quad.hpp"

using namespace periods;

namespace {
// Small deterministic generator for property checks.
struct Lcg {
    unsigned long long s = 0x9e3779b97f4a7c15ull;
    long next(long lo, long hi) {
        s = s * 6364136223846793005ull + 1442695040888963407ull;
        return lo + static_cast<long>((s >> 33) % static_cast<unsigned long long>(hi - lo + 1));
    }
    Rational rat() {
        long n = next(-40, 40);
        long d = next(1, 23);
        return Rational(n, d);
    }
};
} // namespace

TEST_CASE("rationals are canonical") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(3, -6) == Rational(-1, 2));
    CHECK(Rational(-4, -2).str() == "2");
    CHECK(Rational(0, 7).str_slash() == "0/1");
    CHECK(Rational::from_string("22/7") == Rational(22, 7));
    CHECK(Rational::from_string("-5") == Rational(-5));
    CHECK_THROWS_AS(Rational(1, 0), DivisionByZero);
}

TEST_CASE("rational arithmetic is exact") {
    Lcg g;
    for (int i = 0; i < 200; ++i) {
        Rational p = g.rat(), q = g.rat(), r = g.rat();
        CHECK((p + q) + r == p + (q + r));
        CHECK(p * (q + r) == p * q + p * r);
        if (!q.is_zero()) CHECK((p / q) * q == p);
    }
    CHECK(Rational::int_pow(2, -5) == Rational(1, 32));
    CHECK(Rational::pow(Rational(3, 2), 3) == Rational(27, 8));
}

TEST_CASE("quadratic field arithmetic") {
    Quad s19 = Quad::sqrt_d(19);
    Quad x = Quad(Rational(1)) + s19;        // 1 + sqrt(19)
    Quad y = Quad(Rational(1)) - s19;        // 1 - sqrt(19)
    CHECK(x * y == Quad(-18));
    Quad l1 = Quad(Rational(10), Rational(2), 19);
    CHECK(l1 + l1.conj() == Quad(20));
    CHECK((Quad(0) * x) == Quad(0));

    Quad inv = x.inverse();
    CHECK(inv * x == Quad(1));

    Quad s5 = Quad::sqrt_d(5);
    CHECK_THROWS_AS(s19 + s5, MismatchedField);
    CHECK_THROWS_AS(x / Quad(0), DivisionByZero);

    // rationals embed with wildcard tag
    CHECK(Quad(Rational(3, 4)) * s19 == Quad(Rational(0), Rational(3, 4), 19));
}

TEST_CASE("conjugation is a ring involution") {
    Lcg g;
    for (int i = 0; i < 100; ++i) {
        Quad x(g.rat(), g.rat(), 19);
        Quad y(g.rat(), g.rat(), 19);
        CHECK(conj_scalar(x * y) == conj_scalar(x) * conj_scalar(y));
        CHECK(conj_scalar(x + y) == conj_scalar(x) + conj_scalar(y));
        CHECK(conj_scalar(conj_scalar(x)) == x);
    }
}

TEST_CASE("solve_quadratic extracts squarefree discriminants") {
    // lambda^2 - 20 lambda + 24: roots 10 +- 2 sqrt(19)
    auto [r1, r2] = solve_quadratic(Rational(1), Rational(-20), Rational(24));
    CHECK(r1 == Quad(Rational(10), Rational(2), 19));
    CHECK(r2 == Quad(Rational(10), Rational(-2), 19));

    auto [s1, s2] = solve_quadratic(Rational(1), Rational(0), Rational(-1));
    CHECK(s1 == Quad(1));
    CHECK(s2 == Quad(-1));

    auto [d1, d2] = solve_quadratic(Rational(1), Rational(-2), Rational(1));
    CHECK(d1 == Quad(1));
    CHECK(d2 == d1);

    // re-evaluation at each root is exactly zero
    auto check_root = [&](const Quad& r, Rational c2, Rational c1, Rational c0) {
        Quad v = Quad(c2) * r * r + Quad(c1) * r + Quad(c0);
        CHECK(v.is_zero());
    };
    check_root(r1, Rational(1), Rational(-20), Rational(24));
    check_root(r2, Rational(1), Rational(-20), Rational(24));
}

TEST_CASE("squarefree splitting") {
    auto sp = squarefree_split(mpz_class(76)); // 4 * 19
    CHECK(sp.s == 2);
    CHECK(sp.d == 19);
    auto sp2 = squarefree_split(mpz_class(228)); // 4 * 57
    CHECK(sp2.s == 2);
    CHECK(sp2.d == 57);
    auto sp3 = squarefree_split(mpz_class(-12));
    CHECK(sp3.s == 2);
    CHECK(sp3.d == -3);
}
