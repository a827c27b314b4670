#include <doctest.h>

#include "periods/thetafun.hpp"

using namespace periods;

TEST_CASE("reduced theta series") {
    long uprec = 12, qprec = 10;
    USeries th = theta_reduced(uprec, qprec);
    // vanishes at u = 0, odd in u
    CHECK(th.c[0].is_zero());
    for (long i = 0; i < uprec; i += 2) CHECK(th.c[static_cast<size_t>(i)].is_zero());
    // coefficient of u^1 q^0 is 1
    CHECK(th.c[1].coeff(0) == Rational(1));
    // theta'(0) = prod (1-q^n)^3: check against the eta-cube expansion
    QS eta3 = QS::constant(Rational(1), qprec);
    for (long n = 1; n < qprec; ++n) {
        QS f = QS::constant(Rational(1), qprec) - QS::monomial(Rational(1), n, qprec);
        eta3 *= f * f * f;
    }
    CHECK(th.c[1] == eta3);
    // q -> 0 slice: theta(u)|_{q=0} = 2 sinh(u/2)
    for (long i = 1; i < uprec; i += 2)
        CHECK(th.c[static_cast<size_t>(i)].coeff(0) == Rational(1) / (Rational::int_pow(2, i - 1) * factorial(i)));
}

TEST_CASE("g-table values") {
    FKernel f = fkernel_via_g(8, 3, 8);
    // g_{4,0} constant term: -2 G4(inf)/3! = -1/720
    CHECK(f.g(4, 0).coeff(0) == Rational(-1, 720));
    // g_{2,0} = -2 G2: constant 1/12
    CHECK(f.g(2, 0).coeff(0) == Rational(1, 12));
    CHECK(f.g(2, 0) == eis_G(2, 8) * Rational(-2));
}

TEST_CASE("theta-quotient route reproduces the g-table") {
    long degmax = 10, qprec = 14;
    FTable F = fkernel_via_theta(degmax, qprec);
    FKernel g = fkernel_via_g(degmax + 2, degmax / 2, qprec);

    // Laurent head 1/u + 1/v
    const QS* f10 = F.find(-1, 0);
    REQUIRE(f10 != nullptr);
    CHECK(*f10 == QS::constant(Rational(1), qprec));
    CHECK(*F.find(0, -1) == QS::constant(Rational(1), qprec));
    CHECK(F.find(-1, -1) == nullptr);

    for (auto& [ij, s] : F.terms()) {
        long i = ij.first, j = ij.second;
        if (s.is_zero()) continue;
        // structural pattern: only (u^{k-1}+v^{k-1})(uv)^m monomials appear
        CHECK((i + j) % 2 != 0);
        long m = std::min(i, j);
        long k = std::max(i, j) - m + 1;
        CHECK(k % 2 == 0);
        if (m >= 0) {
            CHECK(s == g.g(k, m));
        }
        // swap symmetry
        const QS* sw = F.find(j, i);
        REQUIRE(sw != nullptr);
        CHECK(*sw == s);
    }
    // every g-table entry in range is hit
    for (long k = 2; k <= 8; k += 2)
        for (long m = 0; k - 1 + 2 * m <= degmax - 1; ++m) {
            const QS* e = F.find(k - 1 + m, m);
            if (g.g(k, m).is_zero()) continue;
            REQUIRE(e != nullptr);
            CHECK(*e == g.g(k, m));
        }
}
