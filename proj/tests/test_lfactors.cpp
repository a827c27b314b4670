#include <doctest.h>

#include "periods/lfactors.hpp"

using namespace periods;

namespace {
// Pade reconstruction over Q for numeric Euler factors: find num/den of the
// given degrees matching the series, then compare with the source.
bool pade_roundtrip(const EulerFactor& ef_formal, const Rational& ap_value, long dn, long dd) {
    // substitute the numeric a_p
    auto subst = [&](const XPoly& p) {
        std::vector<Rational> out;
        for (long i = 0; i <= p.degree(); ++i) out.push_back(p.coeff(i).eval(ap_value));
        return Poly<Rational>(out);
    };
    Poly<Rational> num = subst(ef_formal.num), den = subst(ef_formal.den);
    long order = dn + dd + 2;
    LocalSeries s_formal = ef_formal.expand(order);
    std::vector<Rational> s;
    for (long i = 0; i < order; ++i) s.push_back(s_formal.coeff(i).eval(ap_value));
    // solve for q_0..q_dd (q_0 = 1), p_0..p_dn with p = s * q mod x^{dn+dd+1}
    long rows = dn + dd + 1, cols = dn + 1 + dd;
    std::vector<std::vector<Rational>> A(rows, std::vector<Rational>(cols + 1, Rational(0)));
    for (long r = 0; r < rows; ++r) {
        if (r <= dn) A[r][r] = Rational(-1);
        for (long j = 1; j <= dd && j <= r; ++j) A[r][dn + j] = s[r - j];
        A[r][cols] = -s[r];
    }
    // gaussian elimination
    long row = 0;
    std::vector<long> piv(cols, -1);
    for (long c = 0; c < cols && row < rows; ++c) {
        long pr = -1;
        for (long r = row; r < rows; ++r)
            if (!A[r][c].is_zero()) { pr = r; break; }
        if (pr < 0) continue;
        std::swap(A[pr], A[row]);
        Rational d = A[row][c].inverse();
        for (long j = 0; j <= cols; ++j) A[row][j] *= d;
        for (long r = 0; r < rows; ++r) {
            if (r == row || A[r][c].is_zero()) continue;
            Rational f = A[r][c];
            for (long j = 0; j <= cols; ++j) A[r][j] -= f * A[row][j];
        }
        piv[c] = row++;
    }
    std::vector<Rational> pq(cols, Rational(0));
    for (long c = 0; c < cols; ++c)
        if (piv[c] >= 0) pq[c] = A[piv[c]][cols];
    std::vector<Rational> pnum(pq.begin(), pq.begin() + dn + 1);
    std::vector<Rational> pden{Rational(1)};
    for (long j = 0; j < dd; ++j) pden.push_back(pq[dn + 1 + j]);
    Poly<Rational> rn(pnum), rd(pden);
    return rn * den == num * rd;
}
} // namespace

TEST_CASE("euler factor shapes") {
    // new, p | N
    EulerFactor f = lf_new_ramified(3, 8, -1);
    LocalSeries s = f.expand(5);
    // 1/(1 - 27 x): geometric with ratio +27 (eps = -1, p^{k/2-1} = 27)
    for (long i = 0; i < 5; ++i) CHECK(s.coeff(i) == ap_const(Rational::int_pow(27, i)));

    // old step multiplies by (1 + eps2 p^{k/2} x)
    EulerFactor os = lf_old_step(2, 12, 1);
    CHECK(os.num.coeff(1) == ap_const(Rational(64)));
    CHECK(os.den == detail::xp_one());

    // G_k level-one factor expands through divisor sums: coefficient of x^i is
    // sigma_{k-1}(p^i) = (p^{(k-1)(i+1)} - 1)/(p^{k-1} - 1)
    EulerFactor z = lf_zeta_like(2, 4);
    LocalSeries zs = z.expand(5);
    for (long i = 0; i < 5; ++i) {
        Rational expect = (Rational::int_pow(2, 3 * (i + 1)) - Rational(1)) / (Rational::int_pow(2, 3) - Rational(1));
        CHECK(zs.coeff(i) == ap_const(expect));
    }

    CHECK(lf_build(LfKind::New, {.p = 3, .k = 8, .eps = -1, .ramified = true}) == f);
}

TEST_CASE("hadamard basics") {
    // hadamard(geometric(alpha), B) = B(alpha x)
    EulerFactor geo(detail::xp_one(), detail::xp_linear(APoly(1), ap_const(Rational(-5))));
    EulerFactor b = lf_new_unramified(2, 4);
    LocalSeries had = hadamard(geo.expand(8), b.expand(8));
    CHECK(had == b.subst_scale(Rational(5)).expand(8));

    // hadamard with the constant series truncates to the constant
    LocalSeries one(3);
    one.coeff_ref(0) = APoly(1);
    LocalSeries t = hadamard(one, b.expand(3));
    CHECK(t.coeff(0) == APoly(1));
    CHECK(t.coeff(1).is_zero());
    CHECK(t.coeff(2).is_zero());
}

TEST_CASE("pade reconstruction recovers built factors") {
    CHECK(pade_roundtrip(lf_new_unramified(3, 12), Rational(10), 0, 2));
    CHECK(pade_roundtrip(lf_new_ramified(2, 8, 1), Rational(0), 0, 1));
    CHECK(pade_roundtrip(lf_geps(2, 4, 6, -1), Rational(0), 1, 2));
    CHECK(pade_roundtrip(lf_new_unramified(2, 12) * lf_old_step(2, 12, -1), Rational(-24), 1, 2));
}

TEST_CASE("convolution lemma, all cases on the full grid") {
    for (long p : {2L, 3L, 5L}) {
        for (long k1 : {2L, 4L, 6L}) {
            for (long k2 : {2L, 4L, 6L}) {
                for (long m : {0L, 1L, 2L}) {
                    for (int eps : {1, -1}) {
                        for (ConvCase cs : {ConvCase::Generic, ConvCase::PNew, ConvCase::POld}) {
                            ConvReport rep = verify_conv_lemma(p, k1, k2, m, cs, eps, 10);
                            CAPTURE(p);
                            CAPTURE(k1);
                            CAPTURE(k2);
                            CAPTURE(m);
                            CAPTURE(eps);
                            CAPTURE(static_cast<int>(cs));
                            CHECK(rep.series_ok);
                            CHECK(rep.exact_ok);
                            CHECK(rep.critical_ok);
                        }
                    }
                }
            }
        }
    }
}

TEST_CASE("oldform factor matches the two-step description per prime") {
    // L(f,X)_p for f = Lambda(f1), p | N2: L(f1,X)_p (1 + eps2 p^{k/2} X)
    for (long p : {2L, 3L}) {
        for (int eps2 : {1, -1}) {
            EulerFactor lhs = lf_new_unramified(p, 12) * lf_old_step(p, 12, eps2);
            XPoly expect_num = detail::xp_linear(APoly(1), ap_const(Rational(eps2) * Rational::int_pow(p, 6)));
            CHECK(lhs.num == expect_num);
            CHECK(lhs == EulerFactor(expect_num, lf_new_unramified(p, 12).den));
        }
    }
}
