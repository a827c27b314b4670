#pragma once

#include <map>
#include <mutex>

#include "periods/slash.hpp"

namespace periods {

// Exact Bernoulli numbers from the defining convolution recurrence
// sum_{j=0}^{n} binom(n+1,j) B_j = 0 (n >= 1). Cache is append-only.
inline const Rational& bernoulli(long n) {
    static std::vector<Rational> cache{Rational(1)};
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    while (static_cast<long>(cache.size()) <= n) {
        long m = static_cast<long>(cache.size());
        Rational acc(0);
        for (long j = 0; j < m; ++j) acc += binom(m + 1, j) * cache[j];
        cache.push_back(-acc / binom(m + 1, m));
    }
    return cache[static_cast<size_t>(n)];
}

// G_k = -B_k/2k + sum sigma_{k-1}(n) q^n, the normalized level-1 Eisenstein
// series (quasimodular for k = 2).
inline QSeries<Rational> eis_G(long k, long qprec) {
    if (k < 2 || k % 2 != 0) throw std::invalid_argument("eis_G: k must be even and >= 2");
    QSeries<Rational> s = sigma_series(k - 1, qprec);
    s.coeff_ref(0) = -bernoulli(k) / Rational(2 * k);
    return s;
}

inline Rational eis_G_const(long k) { return -bernoulli(k) / Rational(2 * k); }

// E_k = G_k / G_k(inf), normalized to 1 at infinity.
inline QSeries<Rational> eis_E(long k, long qprec) {
    Rational c = eis_G_const(k);
    return eis_G(k, qprec) * c.inverse();
}

// G^eps_{k,N} = sum_{d|N} eps(d) d^{k/2} (G_k o d). For k = 2 this is modular
// precisely when eps is nontrivial.
inline QSeries<Rational> eis_Geps(long k, long N, const DivisorChar& eps, long qprec) {
    if (!is_squarefree(N)) throw UnsupportedLevel("eis_Geps: level must be squarefree");
    if (k == 2 && eps.is_trivial())
        throw QuasimodularWeightTwo("eis_Geps: trivial character at weight 2 is only quasimodular");
    QSeries<Rational> gk = eis_G(k, qprec);
    QSeries<Rational> acc(qprec);
    for (long d : divisors(N))
        acc += dilate(gk, d) * (Rational::int_pow(d, k / 2) * Rational(eps(d)));
    return acc;
}

// E^{(inf)}_{k,N}: the Eisenstein series equal to 1 at the cusp infinity and 0
// at every other cusp of Gamma_0(N).
inline QSeries<Rational> eis_Einf(long k, long N, long qprec) {
    if (!is_squarefree(N)) throw UnsupportedLevel("eis_Einf: level must be squarefree");
    if (k == 2)
        throw QuasimodularWeightTwo("eis_Einf: no weight-2 cusp indicator on Gamma_0(N)");
    QSeries<Rational> ek = eis_E(k, qprec);
    QSeries<Rational> acc(qprec);
    Rational denom(1);
    for (long p : prime_divisors(N)) denom *= Rational::int_pow(p, k) - Rational(1);
    for (long d : divisors(N)) {
        long mu = mobius(N / d);
        if (mu == 0) continue;
        acc += dilate(ek, d) * (Rational(mu) * Rational::int_pow(d, k));
    }
    return acc * denom.inverse();
}

// Q_k(X) = sum_{r+s=k, r,s >= 0 even} (B_r/r!)(B_s/s!) X^{r-1}, an odd Laurent
// polynomial with exponents in [-1, k-1].
inline LaurentPoly<Rational> qk_poly(long k) {
    if (k < 2 || k % 2 != 0) throw std::invalid_argument("qk_poly: k must be even and >= 2");
    LaurentPoly<Rational> q;
    for (long r = 0; r <= k; r += 2) {
        long s = k - r;
        q.add(r - 1, (bernoulli(r) / factorial(r)) * (bernoulli(s) / factorial(s)));
    }
    return q;
}

// Rankin-Cohen bracket [F,G]_m for weights (k1,k2):
// sum_{m1+m2=m} (-1)^{m2} binom(k1+m-1,m2) binom(k2+m-1,m1) D^{m1}F D^{m2}G.
template <class K>
QSeries<K> rc_bracket(const QSeries<K>& F, const QSeries<K>& G, long k1, long k2, long m) {
    if (m < 0) throw std::invalid_argument("rc_bracket: m must be >= 0");
    long prec = std::min(F.prec(), G.prec());
    QSeries<K> acc(prec);
    for (long m1 = 0; m1 <= m; ++m1) {
        long m2 = m - m1;
        Rational c = binom(k1 + m - 1, m2) * binom(k2 + m - 1, m1);
        if (m2 % 2 != 0) c = -c;
        acc += (derive_iter(F, m1) * derive_iter(G, m2)) * K(c);
    }
    return acc;
}

// Modified bracket [G_{k1}, G_{k2} o d2]_m: the plain bracket plus the
// quasimodular completion terms when k1 or k2 equals 2. The second argument is
// the d2-dilated G_{k2}; its completion 1/(8 pi d2 y) carries the extra 1/d2
// on the delta_{k2,2} correction, which is exactly what makes the bracket both
// modular on Gamma_0(d2) and equal to the unit-term double sum of the kernel
// expansion.
inline QSeries<Rational> rc_modified(long k1, long k2, long d2, long m, long qprec) {
    if (k1 < 2 || k2 < 2 || k1 % 2 != 0 || k2 % 2 != 0)
        throw std::invalid_argument("rc_modified: weights must be even and >= 2");
    QSeries<Rational> F = eis_G(k1, qprec);
    QSeries<Rational> Gd = dilate(eis_G(k2, qprec), d2);
    QSeries<Rational> acc = rc_bracket(F, Gd, k1, k2, m);
    if (k2 == 2)
        acc += derive_iter(F, m + 1) * (Rational(1, 2 * d2) / Rational(m + k1));
    if (k1 == 2) {
        Rational c = Rational(1, 2) / Rational(m + k2);
        if (m % 2 != 0) c = -c;
        acc += derive_iter(Gd, m + 1) * c;
    }
    return acc;
}

// g^{(N)}_{k1,k2,m} = 4 [G_{k1}, G_{k2} o N]_m / ((k1+m-1)! (k2+m-1)!), the
// scaled bracket whose coefficient in the kernel-product expansion is
// (X^{k1-1}+Y^{k1-1})(1-(NXY)^{k2-1})(XY)^m.
inline QSeries<Rational> g_bracket(long k1, long k2, long N, long m, long qprec) {
    QSeries<Rational> b = rc_modified(k1, k2, N, m, qprec);
    Rational scale = Rational(4) / (factorial(k1 + m - 1) * factorial(k2 + m - 1));
    return b * scale;
}

// Petersson norm ratio between an oldform lift over N2 and its source:
// prod_{p|N2} 2 (p + eps2(p) a_p p^{1-k/2} + 1), a_p = coefficient of the
// source form.
inline Rational oldform_psp_ratio(long k, long N2, const DivisorChar& eps2,
                                  const std::map<long, Rational>& ap_source) {
    if (k % 2 != 0) throw OddWeight("oldform_psp_ratio: weight must be even");
    Rational acc(1);
    for (long p : prime_divisors(N2)) {
        auto it = ap_source.find(p);
        if (it == ap_source.end())
            throw std::invalid_argument("oldform_psp_ratio: missing a_p for p = " + std::to_string(p));
        Rational term = Rational(p) + Rational(eps2(p)) * it->second * Rational::int_pow(p, 1 - k / 2) + Rational(1);
        acc *= Rational(2) * term;
    }
    return acc;
}

} // namespace periods
