#include <doctest.h>

#include "periods/slash.hpp"

using namespace periods;
using LP = LaurentPoly<Rational>;

namespace {
struct Lcg {
    unsigned long long s = 99;
    long next(long lo, long hi) {
        s = s * 6364136223846793005ull + 1442695040888963407ull;
        return lo + static_cast<long>((s >> 33) % static_cast<unsigned long long>(hi - lo + 1));
    }
    LP poly(long w) {
        LP p;
        for (long e = 0; e <= w; ++e) p.add(e, Rational(next(-9, 9), next(1, 4)));
        return p;
    }
};
} // namespace

TEST_CASE("monomial slash under the Fricke involution") {
    // X^n |_{2-k} W_N = (-1)^n N^{k/2-1-n} X^{k-2-n}
    for (long N : {2L, 5L}) {
        for (long k : {8L, 12L}) {
            long w = k - 2;
            for (long n = 0; n <= w; ++n) {
                LP xn = LP::monomial(Rational(1), n);
                LP img = slash(xn, GroupWord::fricke(N), w);
                LP expect = LP::monomial(Rational((n % 2 == 0) ? 1 : -1) * Rational::int_pow(N, k / 2 - 1 - n), w - n);
                CHECK(img == expect);
            }
        }
    }
}

TEST_CASE("slash basics") {
    Lcg g;
    LP p = g.poly(6);
    CHECK(slash(p, GroupWord::identity(), 6) == p);

    // (5X^2-1)|_{-2} W_5 = -(5X^2-1): anti-invariant vector
    LP v;
    v.add(2, Rational(5));
    v.add(0, Rational(-1));
    CHECK(slash(v, GroupWord::fricke(5), 2) == -v);

    // Laurent tails only move under monomial-type columns
    LP tail = LP::monomial(Rational(1), -1);
    CHECK_NOTHROW(slash(tail, GroupWord::fricke(5), 2));
    CHECK_THROWS_AS(slash(tail, GroupWord::translation(), 2), NonPolynomialResult);
}

TEST_CASE("slash is a right action with additive character exponents") {
    Lcg g;
    for (long p : {2L, 3L, 5L}) {
        GroupWord U = GroupWord::up(p);
        GroupWord W = GroupWord::fricke(p);
        GroupWord T = GroupWord::translation();
        long w = 6;
        for (int eps : {1, -1}) {
            for (int i = 0; i < 6; ++i) {
                LP P = g.poly(w);
                GroupWord g1 = (i % 3 == 0) ? U : (i % 3 == 1 ? W : T * W);
                GroupWord g2 = (i % 2 == 0) ? W : U;
                CHECK(slash(slash(P, g1, w, eps), g2, w, eps) == slash(P, g1 * g2, w, eps));
            }
        }
    }
}

TEST_CASE("pairing on V_w") {
    long w = 6;
    CHECK(pair_vw(LP::monomial(Rational(1), 0), LP::monomial(Rational(1), w), w) == Rational(1));
    // zero unless the exponents are complementary
    CHECK(pair_vw(LP::monomial(Rational(1), 1), LP::monomial(Rational(1), 3), w) == Rational(0));
    CHECK(pair_vw(LP::monomial(Rational(1), 1), LP::monomial(Rational(1), 1), 2) == Rational(-1, 2));

    // ((X-a)^w, P) = P(a)
    Lcg g;
    Rational a(3, 2);
    LP xa;
    xa.add(1, Rational(1));
    xa.add(0, -a);
    LP pw = LP::monomial(Rational(1), 0);
    for (long i = 0; i < w; ++i) pw = pw * xa;
    for (int i = 0; i < 10; ++i) {
        LP P = g.poly(w);
        CHECK(pair_vw(pw, P, w) == P.eval(a));
    }

    LP tail = LP::monomial(Rational(1), -1);
    CHECK_THROWS_AS(pair_vw(tail, pw, w), LaurentTailPresent);
}

TEST_CASE("pairing is SL2-invariant") {
    Lcg g;
    long w = 8;
    std::vector<GroupWord> gens = {GroupWord::translation(), {0, -1, 1, 0, 0}, {1, 0, 1, 1, 0}};
    for (const GroupWord& m : gens) {
        for (int i = 0; i < 8; ++i) {
            LP P = g.poly(w), Q = g.poly(w);
            CHECK(pair_vw(slash(P, m, w), slash(Q, m, w), w) == pair_vw(P, Q, w));
        }
    }
}

TEST_CASE("lambda operator on polynomials") {
    // Lambda(1 - X^{k-2}) = (1 - eps(N) N^{k/2-1} X^{k-2}) prod_p (1 + eps(p) p^{1-k/2})
    for (long N : {2L, 6L}) {
        for (long k : {8L, 12L}) {
            for (const DivisorChar& eps : all_characters(N)) {
                LP p;
                p.add(0, Rational(1));
                p.add(k - 2, Rational(-1));
                LP got = lambda_poly(p, N, eps, k);
                Rational prod(1);
                for (long pr : prime_divisors(N))
                    prod *= Rational(1) + Rational(eps(pr)) * Rational::int_pow(pr, 1 - k / 2);
                LP expect;
                expect.add(0, prod);
                expect.add(k - 2, -Rational(eps(N)) * Rational::int_pow(N, k / 2 - 1) * prod);
                CHECK(got == expect);

                // constants scale by the product
                LP c = LP::monomial(Rational(7), 0);
                CHECK(lambda_poly(c, N, eps, k) == LP::monomial(Rational(7) * prod, 0));
            }
        }
    }
    // N2 = 1 leaves the polynomial unchanged
    Lcg g;
    LP p = g.poly(5);
    CHECK(lambda_poly(p, 1, DivisorChar(1, {}), 8) == p);
}

TEST_CASE("group-ring application and A_p") {
    Lcg g;
    LP x = LP::monomial(Rational(1), 1);
    auto a2 = atkin_lehner_element<Rational>(2);
    LP r = apply_group_ring(x, a2, 2, 1);
    // A_2 = U~_2 - U_2 on X with w=2: exact evaluation
    LP byhand = slash(x, GroupWord::up_tilde(2), 2, 1) - slash(x, GroupWord::up(2), 2, 1);
    CHECK(r == byhand);
    CHECK(apply_group_ring(x, {}, 2, 1).is_zero());
    CHECK(apply_group_ring(x, {{Rational(1), GroupWord::identity()}}, 2, 1) == x);
}

TEST_CASE("delta conjugation swaps U and U~") {
    // slash(P(-X), U_p) evaluated at -X equals slash(P, U~_p)
    Lcg g;
    for (long p : {2L, 3L, 5L}) {
        for (int eps : {1, -1}) {
            for (int i = 0; i < 6; ++i) {
                LP P = g.poly(6);
                LP lhs = slash(P.neg_arg(), GroupWord::up(p), 6, eps).neg_arg();
                LP rhs = slash(P, GroupWord::up_tilde(p), 6, eps);
                CHECK(lhs == rhs);
            }
        }
    }
}

TEST_CASE("A_p is anti-self-adjoint on the eps-symmetric subspace") {
    // random elements of V^eps_{w,p} = Ker(1 + eps W_p)
    Lcg g;
    long w = 6;
    for (long p : {2L, 3L, 5L}) {
        auto ap = atkin_lehner_element<Rational>(p);
        for (int eps : {1, -1}) {
            auto sample = [&]() {
                LP v;
                for (long n = 0; n < w / 2; ++n) {
                    Rational c(g.next(-9, 9), g.next(1, 4));
                    v.add(n, c);
                    v.add(w - n, -Rational(n % 2 == 0 ? 1 : -1) * Rational(eps) *
                                     Rational::int_pow(p, w / 2 - n) * c);
                }
                if ((w / 2 % 2 == 0 ? 1 : -1) * eps == -1)
                    v.add(w / 2, Rational(g.next(-9, 9)));
                return v;
            };
            for (int i = 0; i < 6; ++i) {
                LP P = sample(), Q = sample();
                // membership check first
                CHECK((slash(P, GroupWord::fricke(p), w) + Rational(eps) * P).is_zero());
                Rational lhs = pair_vw(apply_group_ring(P, ap, w, eps), Q, w);
                Rational rhs = pair_vw(P, apply_group_ring(Q, ap, w, eps), w);
                CHECK(lhs == -rhs);
            }
        }
    }
}

TEST_CASE("coset detection by determinant") {
    GroupWord u2 = word_in_level(2, -1, 2, 0, 2);
    CHECK(u2.chi == 1);
    GroupWord sq = word_in_level(2, -2, 4, -2, 2); // det 4: square, plain coset
    CHECK(sq.chi == 0);
    GroupWord g8 = word_in_level(4, -2, 4, 0, 2); // det 8 = 2 * 4
    CHECK(g8.chi == 1);
}
