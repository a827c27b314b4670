#pragma once

#include "periods/thetafun.hpp"

namespace periods {

using BiQ = BiLaurent<QS>;
using BiR = BiLaurent<Rational>;

// Coefficient of T^{k-2} in the four-variable generating function, one slice
// per even weight, plus the universal T^{-2} head stored as a scalar
// bi-Laurent polynomial.
struct GenFunSlices {
    long N = 1;
    long kmax = 2;
    long qprec = 1;
    BiR head;
    std::map<long, BiQ> body; // even k -> slice
};

// (X+Y)(NXY-1)/(N X^2 Y^2) expanded as a Laurent polynomial.
inline BiR t_head(long N) {
    BiR h;
    h.add(-1, 0, Rational(1));
    h.add(0, -1, Rational(1));
    h.add(-1, -2, Rational(-1, N));
    h.add(-2, -1, Rational(-1, N));
    return h;
}

namespace detail {

// All (k,m) index pairs of the kernel expansion with T-degree k-1+2m = d,
// including the unit term (2,-1) when d = -1.
inline std::vector<std::pair<long, long>> kernel_terms_of_degree(long d) {
    std::vector<std::pair<long, long>> out;
    if (d == -1) {
        out.emplace_back(2, -1);
        return out;
    }
    if (d < 1 || d % 2 == 0) return out;
    for (long k = 2; k - 1 <= d; k += 2) {
        long twice_m = d - (k - 1);
        out.emplace_back(k, twice_m / 2);
    }
    return out;
}

// Adds  series * (X^{i0} Y^{j0}) * [ (-N)^{m2} (XY)^{m2} - N^{k2-1}(-N)^{m2}(XY)^{m2+k2-1} ]
// into the slice (the second-factor monomial structure of the kernel product).
template <class AddFn>
void add_second_factor(AddFn&& add, long i0, long j0, long k2, long m2, long N) {
    Rational c = Rational::int_pow(-N, m2);
    add(i0 + m2, j0 + m2, c);
    add(i0 + m2 + k2 - 1, j0 + m2 + k2 - 1, -Rational::int_pow(N, k2 - 1) * c);
}

} // namespace detail

// Expands B_N(X,Y,tau,T) = F_tau(XT, YT) * F_{N tau}(T, -NXY T) through the
// kernel coefficient table and collects the T^{k-2} slices for even k <= kmax.
inline GenFunSlices bn_expand(long N, long kmax, long qprec) {
    if (!is_squarefree(N)) throw UnsupportedLevel("bn_expand: level must be squarefree");
    if (kmax < 2 || kmax % 2 != 0) throw std::invalid_argument("bn_expand: kmax must be even and >= 2");
    FKernel F = fkernel_via_g(kmax, (kmax - 2) / 2, qprec);

    GenFunSlices out;
    out.N = N;
    out.kmax = kmax;
    out.qprec = qprec;
    out.head = t_head(N);

    for (long k = 2; k <= kmax; k += 2) {
        BiQ slice;
        for (long d1 = -1; d1 <= k - 1; d1 += 2) {
            long d2 = k - 2 - d1;
            for (auto [k1, m1] : detail::kernel_terms_of_degree(d1)) {
                for (auto [k2, m2] : detail::kernel_terms_of_degree(d2)) {
                    QS s1 = (m1 == -1) ? QS::constant(Rational(1), qprec) : F.g(k1, m1);
                    QS s2 = (m2 == -1) ? QS::constant(Rational(1), qprec) : dilate(F.g(k2, m2), N);
                    QS prod = s1 * s2;
                    if (prod.is_zero()) continue;
                    auto add = [&](long i, long j, const Rational& c) { slice.add(i, j, prod * c); };
                    // first factor (u,v) = (XT, YT): monomials X^{k1-1+m1} Y^{m1} and its swap
                    detail::add_second_factor(add, k1 - 1 + m1, m1, k2, m2, N);
                    detail::add_second_factor(add, m1, k1 - 1 + m1, k2, m2, N);
                }
            }
        }
        out.body.emplace(k, std::move(slice));
    }
    return out;
}

// Same slices assembled from the Rankin-Cohen bracket route:
// B_{k,N} = sum_{k1+k2+2m=k} (X^{k1-1}+Y^{k1-1})(1-(NXY)^{k2-1})(XY)^m g^(N)_{k1,k2,m}.
// The m = -1 layer carries the kernel unit terms and is built from G-series
// directly.
inline BiQ bn_via_rc(long N, long k, long qprec) {
    if (!is_squarefree(N)) throw UnsupportedLevel("bn_via_rc: level must be squarefree");
    BiQ slice;
    for (long k1 = 2; k1 <= k + 2; k1 += 2) {
        for (long k2 = 2; k1 + k2 <= k + 2; k2 += 2) {
            if ((k - k1 - k2) % 2 != 0) continue;
            long m = (k - k1 - k2) / 2;
            if (m < -1) continue;
            QS series(qprec);
            if (m >= 0) {
                series = g_bracket(k1, k2, N, m, qprec);
            } else {
                // unit-term layer
                if (k1 == 2)
                    series += dilate(eis_G(k2, qprec), N) * (Rational(-2) / factorial(k2 - 1));
                if (k2 == 2)
                    series += eis_G(k1, qprec) * (Rational(2, N) / factorial(k1 - 1));
            }
            if (series.is_zero()) continue;
            auto add = [&](long i, long j, const Rational& c) { slice.add(i, j, series * c); };
            // structure (X^{k1-1}+Y^{k1-1})(1 - (NXY)^{k2-1})(XY)^m
            auto spot = [&](long i0, long j0) {
                add(i0 + m, j0 + m, Rational(1));
                add(i0 + m + k2 - 1, j0 + m + k2 - 1, -Rational::int_pow(N, k2 - 1));
            };
            spot(k1 - 1, 0);
            spot(0, k1 - 1);
        }
    }
    return slice;
}

// Slices recomputed from the theta-quotient table (the cross-check oracle for
// the g-table route).
inline GenFunSlices bn_via_theta(long N, long kmax, long qprec) {
    FTable F = fkernel_via_theta(kmax, qprec);
    FTable FN = F.map<QS>([&](const QS& s) { return dilate(s, N); });

    GenFunSlices out;
    out.N = N;
    out.kmax = kmax;
    out.qprec = qprec;
    out.head = t_head(N);
    for (long k = 2; k <= kmax; k += 2) out.body.emplace(k, BiQ());

    for (auto& [ij1, s1] : F.terms()) {
        long i1 = ij1.first, j1 = ij1.second;
        long d1 = i1 + j1;
        if (s1.is_zero()) continue;
        for (auto& [ij2, s2] : FN.terms()) {
            long i2 = ij2.first, j2 = ij2.second;
            long d2 = i2 + j2;
            long k = d1 + d2 + 2;
            if (k < 2 || k > kmax || k % 2 != 0) continue;
            if (s2.is_zero()) continue;
            // first factor: u=XT, v=YT contributes X^{i1} Y^{j1};
            // second factor: u=T, v=-NXYT contributes (-N)^{j2} (XY)^{j2}.
            QS prod = s1 * s2 * Rational::int_pow(-N, j2);
            out.body[k].add(i1 + j2, j1 + j2, prod);
        }
    }
    return out;
}

// One epsilon-summand of the Eisenstein part of the generating function: the
// even-odd polynomial piece together with its q-series.
struct EisSummand {
    DivisorChar eps;
    BiR poly;  // (X,Y)-ordered piece
    QS series; // G^eps_{k,N} / G_k(inf)
};

struct EisPart {
    long N, k;
    std::vector<EisSummand> summands;

    // Full Eisenstein slice: sum over eps of poly + poly(Y,X), times series.
    BiQ total() const {
        BiQ acc;
        for (const auto& s : summands) {
            BiR full = s.poly + s.poly.swap_xy();
            for (auto& [ij, c] : full.terms()) acc.add(ij.first, ij.second, s.series * c);
        }
        return acc;
    }
};

// Eisenstein part of the T^{k-2} slice by the closed formula: for each sign
// character eps of the divisor group,
//   [1 - eps(N) N^{k/2-1} X^{k-2}] Lambda^eps_{2-k,N}(Q_k)(Y)
//     / (2^t prod_{p|N} (1 + eps(p) p^{k/2}))
// paired with G^eps_{k,N}/G_k(inf).
inline EisPart eis_part(long N, long k, long qprec) {
    if (!is_squarefree(N)) throw UnsupportedLevel("eis_part: level must be squarefree");
    if (k < 2 || k % 2 != 0) throw std::invalid_argument("eis_part: k must be even and >= 2");
    EisPart out{N, k, {}};
    LaurentPoly<Rational> qk = qk_poly(k);
    long t = static_cast<long>(prime_divisors(N).size());
    for (const DivisorChar& eps : all_characters(N)) {
        // bracket [1 - eps(N) N^{k/2-1} X^{k-2}]
        LaurentPoly<Rational> bracket;
        bracket.add(0, Rational(1));
        bracket.add(k - 2, -Rational(eps(N)) * Rational::int_pow(N, k / 2 - 1));
        if (bracket.is_zero()) continue; // k = 2 with eps(N) = 1
        Rational denom = Rational::int_pow(2, t);
        for (long p : prime_divisors(N)) denom *= Rational(1) + Rational(eps(p)) * Rational::int_pow(p, k / 2);
        LaurentPoly<Rational> lam = lambda_poly(qk, N, eps, k);
        BiR poly = tensor(denom.inverse() * bracket, lam); // X-part (x) Y-part
        QS series = eis_Geps(k, N, eps, qprec) * eis_G_const(k).inverse();
        out.summands.push_back({eps, poly, series});
    }
    return out;
}

// Cuspidal slice: the full slice minus its Eisenstein part. The difference
// must be a true polynomial part (exponents within [0, k-2]) with vanishing
// constant q-coefficients; anything else signals an upstream bug.
inline BiQ cusp_part(const BiQ& slice, const EisPart& eis, long k) {
    BiQ diff = slice - eis.total();
    if (!diff.exponents_within(0, k - 2))
        throw LaurentResidueNonzero("cusp_part: Laurent tails fail to cancel at (N,k) = (" +
                                    std::to_string(eis.N) + "," + std::to_string(k) + ")");
    for (auto& [ij, s] : diff.terms()) {
        (void)ij;
        if (!s.coeff(0).is_zero())
            throw LaurentResidueNonzero("cusp_part: nonzero constant term in cuspidal slice");
    }
    return diff;
}

// One M-summand of the Atkin-Lehner eigencomponent formula:
//   F_{M tau}(sqrt(M) XT, sqrt(M) YT) * F_{(N/M) tau}(T/sqrt(M), -NXYT/sqrt(M)).
// Half powers of M are tracked per term as twice-exponents; they always pair
// to integers for T^{even} coefficients, which is asserted.
inline GenFunSlices eigencomponent_summand(long N, long M, long kmax, long qprec) {
    if (N % M != 0) throw std::invalid_argument("eigencomponent_summand: M must divide N");
    FKernel F = fkernel_via_g(kmax, (kmax - 2) / 2, qprec);

    GenFunSlices out;
    out.N = N;
    out.kmax = kmax;
    out.qprec = qprec;
    out.head = t_head(N);

    for (long k = 2; k <= kmax; k += 2) {
        BiQ slice;
        for (long d1 = -1; d1 <= k - 1; d1 += 2) {
            long d2 = k - 2 - d1;
            if ((d1 - d2) % 2 != 0)
                throw OddHalfPower("eigencomponent: unresolved sqrt(M) power");
            Rational mpow = Rational::pow(Rational(M), (d1 - d2) / 2);
            for (auto [k1, m1] : detail::kernel_terms_of_degree(d1)) {
                for (auto [k2, m2] : detail::kernel_terms_of_degree(d2)) {
                    QS s1 = (m1 == -1) ? QS::constant(Rational(1), qprec) : dilate(F.g(k1, m1), M);
                    QS s2 = (m2 == -1) ? QS::constant(Rational(1), qprec) : dilate(F.g(k2, m2), N / M);
                    QS prod = s1 * s2 * mpow;
                    if (prod.is_zero()) continue;
                    auto add = [&](long i, long j, const Rational& c) { slice.add(i, j, prod * c); };
                    detail::add_second_factor(add, k1 - 1 + m1, m1, k2, m2, N);
                    detail::add_second_factor(add, m1, k1 - 1 + m1, k2, m2, N);
                }
            }
        }
        out.body.emplace(k, std::move(slice));
    }
    return out;
}

// Atkin-Lehner eigencomponent of the generating function (Theorem-3-style
// average): 2^{-t} sum_{M|N} eps(M) * summand_M. The T^{-2} head belongs to
// the trivial character only.
inline GenFunSlices eigencomponent(long N, const DivisorChar& eps, long kmax, long qprec) {
    GenFunSlices out;
    out.N = N;
    out.kmax = kmax;
    out.qprec = qprec;
    if (eps.is_trivial()) out.head = t_head(N);
    for (long k = 2; k <= kmax; k += 2) out.body.emplace(k, BiQ());

    long t = static_cast<long>(prime_divisors(N).size());
    Rational scale = Rational(1) / Rational::int_pow(2, t);
    for (long M : divisors(N)) {
        GenFunSlices sm = eigencomponent_summand(N, M, kmax, qprec);
        Rational c = scale * Rational(eps(M));
        for (long k = 2; k <= kmax; k += 2)
            out.body[k] = out.body[k] + sm.body[k].map<QS>([&](const QS& s) { return s * c; });
    }
    return out;
}

// q -> 0 limit of an eigencomponent M-summand computed independently through
// hyperbolic-sine series: with t = sqrt(M) T,
//   sinh((X+Y)t/2) sinh((NXY-1)t/(2M))
//   / (4 sinh(Xt/2) sinh(Yt/2) sinh(t/(2M)) sinh(NXYt/(2M))).
// Returns coefficients of T^{k-2} for even k in [kmin..kmax]; k = 0 gives the
// T^{-2} head.
inline std::map<long, BiR> cusp_value_sinh(long N, long M, long kmax) {
    long J = kmax + 8; // work with t-powers < J (unit inverse needed through kmax+2)
    auto sinh_t = [&](const BiR& arg) {
        // sum_{j odd} arg^j t^j / j!  as vector indexed by t-power
        std::vector<BiR> s(static_cast<size_t>(J));
        BiR p = arg;
        for (long j = 1; j < J; j += 2) {
            Rational c = factorial(j).inverse();
            for (auto& [ij, v] : p.terms()) s[static_cast<size_t>(j)].add(ij.first, ij.second, v * c);
            if (j + 2 < J) p = mul_bilaurent(mul_bilaurent(p, arg), arg);
        }
        return s;
    };
    auto mul_t = [&](const std::vector<BiR>& a, const std::vector<BiR>& b) {
        std::vector<BiR> r(static_cast<size_t>(J));
        for (long i = 0; i < J; ++i)
            for (long j = 0; i + j < J; ++j) {
                if (a[static_cast<size_t>(i)].is_zero() || b[static_cast<size_t>(j)].is_zero()) continue;
                r[static_cast<size_t>(i + j)] =
                    r[static_cast<size_t>(i + j)] + mul_bilaurent(a[static_cast<size_t>(i)], b[static_cast<size_t>(j)]);
            }
        return r;
    };

    BiR xy_half, nxy1, xh, yh, unit_2m, nxy_2m;
    xy_half.add(1, 0, Rational(1, 2));
    xy_half.add(0, 1, Rational(1, 2));
    nxy1.add(1, 1, Rational(N, 2 * M));
    nxy1.add(0, 0, Rational(-1, 2 * M));
    xh.add(1, 0, Rational(1, 2));
    yh.add(0, 1, Rational(1, 2));
    unit_2m.add(0, 0, Rational(1, 2 * M));
    nxy_2m.add(1, 1, Rational(N, 2 * M));

    std::vector<BiR> num = mul_t(sinh_t(xy_half), sinh_t(nxy1));
    std::vector<BiR> den = mul_t(mul_t(sinh_t(xh), sinh_t(yh)), mul_t(sinh_t(unit_2m), sinh_t(nxy_2m)));
    // den = t^4 * (N/(16 M^2)) X^2 Y^2 * (1 + higher even terms)
    BiR mono_inv;
    mono_inv.add(-2, -2, Rational(16 * M * M, N));
    // unit part u_j := mono_inv * den[j+4], u_0 = 1
    std::vector<BiR> u(static_cast<size_t>(J));
    for (long j = 0; j + 4 < J; ++j) u[static_cast<size_t>(j)] = mul_bilaurent(mono_inv, den[static_cast<size_t>(j + 4)]);
    // invert unit series: v with u*v = 1
    std::vector<BiR> v(static_cast<size_t>(J));
    v[0].add(0, 0, Rational(1));
    for (long j = 1; j + 4 < J; ++j) {
        BiR acc;
        for (long i = 1; i <= j; ++i)
            acc = acc + mul_bilaurent(u[static_cast<size_t>(i)], v[static_cast<size_t>(j - i)]);
        v[static_cast<size_t>(j)] = -acc;
    }
    // R(t) = num * v * mono_inv * t^{-4} / 4
    std::vector<BiR> nv = mul_t(num, v);
    std::map<long, BiR> out;
    for (long k = 0; k <= kmax; k += 2) {
        long tj = k - 2 + 4; // t-exponent before the t^{-4} shift
        if (tj < 0 || tj >= J) continue;
        BiR r = mul_bilaurent(nv[static_cast<size_t>(tj)], mono_inv);
        // substitute t = sqrt(M) T and divide by the overall 4
        Rational mp = Rational::pow(Rational(M), (k - 2) / 2) * Rational(1, 4);
        BiR scaled;
        for (auto& [ij, c] : r.terms()) scaled.add(ij.first, ij.second, c * mp);
        out[k] = scaled;
    }
    return out;
}

} // namespace periods
