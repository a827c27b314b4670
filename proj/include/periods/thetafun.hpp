#pragma once

#include "periods/eisenstein.hpp"

namespace periods {

using QS = QSeries<Rational>;

// Bivariate truncated series in u and q: coefficient of u^i is a q-series.
struct USeries {
    long uprec;
    std::vector<QS> c; // c[i] = coefficient of u^i

    USeries(long up, long qp) : uprec(up), c(static_cast<size_t>(up), QS(qp)) {}
    long qprec() const { return c.empty() ? 1 : c[0].prec(); }
};

namespace detail {
// Multiplies s in place by (1 - q^n * E(u)), E given by u-coefficients.
inline void mul_one_minus_qn_expu(USeries& s, long n, const std::vector<Rational>& E) {
    long qp = s.qprec();
    if (n >= qp) return;
    // Work highest q-power downward so updated entries are not reused.
    for (long i = s.uprec - 1; i >= 0; --i) {
        for (long m = qp - 1; m >= n; --m) {
            Rational acc(0);
            long jmax = i;
            for (long j = 0; j <= jmax; ++j) {
                if (E[static_cast<size_t>(j)].is_zero()) continue;
                acc += E[static_cast<size_t>(j)] * s.c[static_cast<size_t>(i - j)].coeff(m - n);
            }
            if (!acc.is_zero())
                s.c[static_cast<size_t>(i)].coeff_ref(m) -= acc;
        }
    }
}

inline std::vector<Rational> exp_u_coeffs(const Rational& a, long uprec) {
    // coefficients of e^{a u}
    std::vector<Rational> e(static_cast<size_t>(uprec));
    e[0] = Rational(1);
    for (long i = 1; i < uprec; ++i) e[static_cast<size_t>(i)] = e[static_cast<size_t>(i - 1)] * a / Rational(i);
    return e;
}
} // namespace detail

// theta_tau(u) / q^{1/8} as a (u,q)-series:
//   2 sinh(u/2) prod_{n>=1} (1-q^n)(1-q^n e^u)(1-q^n e^{-u}),
// where the n = 1 factor (1 - e^{-u}) of the classical product has been
// combined into the sinh. Odd in u and vanishing at u = 0.
inline USeries theta_reduced(long uprec, long qprec) {
    if (uprec < 1 || qprec < 1) throw std::invalid_argument("theta_reduced: precisions must be >= 1");
    USeries s(uprec, qprec);
    // 2 sinh(u/2): coefficient of u^i is 1/(2^{i-1} i!) for odd i
    for (long i = 1; i < uprec; i += 2)
        s.c[static_cast<size_t>(i)].coeff_ref(0) = Rational(1) / (Rational::int_pow(2, i - 1) * factorial(i));
    std::vector<Rational> one(static_cast<size_t>(uprec), Rational(0));
    one[0] = Rational(1);
    std::vector<Rational> ep = detail::exp_u_coeffs(Rational(1), uprec);
    std::vector<Rational> em = detail::exp_u_coeffs(Rational(-1), uprec);
    for (long n = 1; n < qprec; ++n) {
        detail::mul_one_minus_qn_expu(s, n, one);
        detail::mul_one_minus_qn_expu(s, n, ep);
        detail::mul_one_minus_qn_expu(s, n, em);
    }
    return s;
}

// Laurent-coefficient table of the two-variable kernel
// F_tau(u,v) = theta'(0) theta(u+v) / (theta(u) theta(v)):
// F = 1/u + 1/v + sum_{k even, m>=0} g_{k,m} (u^{k-1}+v^{k-1})(uv)^m,
// g_{k,m} = -2 D^m G_k / (m! (m+k-1)!).
struct FKernel {
    long kmax, mmax, qprec;
    // g[(k-2)/2][m]
    std::vector<std::vector<QS>> table;

    const QS& g(long k, long m) const {
        return table[static_cast<size_t>((k - 2) / 2)][static_cast<size_t>(m)];
    }
};

inline FKernel fkernel_via_g(long kmax, long mmax, long qprec) {
    if (kmax < 2 || kmax % 2 != 0) throw std::invalid_argument("fkernel_via_g: kmax must be even");
    FKernel f{kmax, mmax, qprec, {}};
    for (long k = 2; k <= kmax; k += 2) {
        std::vector<QS> row;
        QS gk = eis_G(k, qprec);
        QS d = gk;
        for (long m = 0; m <= mmax; ++m) {
            if (m > 0) d = derive(d);
            Rational scale = Rational(-2) / (factorial(m) * factorial(m + k - 1));
            row.push_back(d * scale);
        }
        f.table.push_back(std::move(row));
    }
    return f;
}

// Bivariate Laurent table of F with entries indexed by (i,j), i,j >= -1.
// Only i+j odd occurs.
using FTable = BiLaurent<QS>;

// Independent construction of F by exact series division of theta quotients:
// write theta~(u) = u h(u) with h a unit, then
// F(u,v) = (1/u + 1/v) * theta~'(0) h(u+v) / (h(u) h(v)).
// Total (u,v)-degree of returned entries: i+j <= degmax.
inline FTable fkernel_via_theta(long degmax, long qprec) {
    long hdeg = degmax + 1;                // h-coefficients h_0..h_{hdeg}
    USeries th = theta_reduced(hdeg + 2, qprec);
    // h_j = coefficient of u^{j+1} in theta~
    std::vector<QS> h;
    for (long j = 0; j <= hdeg; ++j) h.push_back(th.c[static_cast<size_t>(j + 1)]);
    const QS& dtheta0 = h[0]; // theta~'(0)
    // invert h as a u-series over the q-series ring
    std::vector<QS> hi;
    hi.push_back(div(QS::constant(Rational(1), qprec), h[0]));
    for (long j = 1; j <= hdeg; ++j) {
        QS acc(qprec);
        for (long i = 1; i <= j; ++i) acc += h[static_cast<size_t>(i)] * hi[static_cast<size_t>(j - i)];
        hi.push_back(-div(acc, h[0]));
    }
    // G[a][b] = coefficient of u^a v^b in theta~'(0) h(u+v) / (h(u) h(v)),
    // needed for a+b <= hdeg.
    std::vector<std::vector<QS>> G(static_cast<size_t>(hdeg + 1),
                                   std::vector<QS>(static_cast<size_t>(hdeg + 1), QS(qprec)));
    for (long a = 0; a <= hdeg; ++a)
        for (long b = 0; a + b <= hdeg; ++b)
            G[static_cast<size_t>(a)][static_cast<size_t>(b)] = h[static_cast<size_t>(a + b)] * binom(a + b, a);
    // multiply by hi along u then along v
    auto convolve_axis = [&](bool along_u) {
        std::vector<std::vector<QS>> out(static_cast<size_t>(hdeg + 1),
                                         std::vector<QS>(static_cast<size_t>(hdeg + 1), QS(qprec)));
        for (long a = 0; a <= hdeg; ++a)
            for (long b = 0; a + b <= hdeg; ++b) {
                QS acc(qprec);
                long n = along_u ? a : b;
                for (long i = 0; i <= n; ++i) {
                    const QS& gi = along_u ? G[static_cast<size_t>(a - i)][static_cast<size_t>(b)]
                                           : G[static_cast<size_t>(a)][static_cast<size_t>(b - i)];
                    if (gi.is_zero() || hi[static_cast<size_t>(i)].is_zero()) continue;
                    acc += gi * hi[static_cast<size_t>(i)];
                }
                out[static_cast<size_t>(a)][static_cast<size_t>(b)] = acc;
            }
        G = std::move(out);
    };
    convolve_axis(true);
    convolve_axis(false);
    for (long a = 0; a <= hdeg; ++a)
        for (long b = 0; a + b <= hdeg; ++b)
            G[static_cast<size_t>(a)][static_cast<size_t>(b)] =
                G[static_cast<size_t>(a)][static_cast<size_t>(b)] * dtheta0;

    FTable F;
    for (long i = -1; i <= degmax + 1; ++i)
        for (long j = -1; i + j <= degmax; ++j) {
            if (j < -1) continue;
            QS acc(qprec);
            if (i + 1 <= hdeg && j >= 0 && i + 1 + j <= hdeg) acc += G[static_cast<size_t>(i + 1)][static_cast<size_t>(j)];
            if (j + 1 <= hdeg && i >= 0 && i + j + 1 <= hdeg) acc += G[static_cast<size_t>(i)][static_cast<size_t>(j + 1)];
            F.add(i, j, acc);
        }
    return F;
}

} // namespace periods
