#pragma once

#include "periods/poly.hpp"
#include "periods/qseries.hpp"

namespace periods {

// Local L-factor algebra in x = p^{-s} over Q[a], with one formal parameter a
// standing for the Hecke eigenvalue a_p. Identities verified here are
// polynomial identities in a, which is stronger than numeric sampling.
using APoly = Poly<Rational>;  // polynomials in the formal a_p
using XPoly = Poly<APoly>;     // polynomials in x with APoly coefficients
using LocalSeries = QSeries<APoly>;

inline APoly ap_var() { return APoly::x(); }
inline APoly ap_const(const Rational& c) { return APoly(c); }

inline bool scalar_is_zero_apoly(const APoly& p) { return p.is_zero(); }

// Division needed by the series machinery: only exact division by a nonzero
// constant polynomial occurs (all series leads are units of Q[a]).
inline APoly operator/(const APoly& a, const APoly& b) {
    if (b.is_zero()) throw DivisionByZero("APoly: division by zero");
    if (b.degree() != 0) throw NonUnitDivisor("APoly: divisor must be a unit (constant)");
    Rational inv = b.coeff(0).inverse();
    std::vector<Rational> cs;
    for (long i = 0; i <= a.degree(); ++i) cs.push_back(a.coeff(i) * inv);
    return APoly(cs);
}

// Rational function in x over Q[a]; denominator normalized to constant term 1.
struct EulerFactor {
    XPoly num, den;

    EulerFactor() : num(1), den(1) {}
    EulerFactor(XPoly n, XPoly d) : num(std::move(n)), den(std::move(d)) {
        if (den.is_zero()) throw DivisionByZero("EulerFactor: zero denominator");
        APoly c0 = den.coeff(0);
        if (c0.degree() != 0 || c0.is_zero())
            throw NonUnitDivisor("EulerFactor: denominator constant term must be a nonzero rational");
        APoly inv = APoly(Rational(1)) / c0;
        num = inv * num;
        den = inv * den;
    }

    friend EulerFactor operator*(const EulerFactor& a, const EulerFactor& b) {
        return EulerFactor(a.num * b.num, a.den * b.den);
    }
    friend EulerFactor operator+(const EulerFactor& a, const EulerFactor& b) {
        return EulerFactor(a.num * b.den + b.num * a.den, a.den * b.den);
    }
    friend EulerFactor operator-(const EulerFactor& a, const EulerFactor& b) {
        return EulerFactor(a.num * b.den - b.num * a.den, a.den * b.den);
    }
    // equality of rational functions by cross-multiplication
    friend bool operator==(const EulerFactor& a, const EulerFactor& b) {
        return a.num * b.den == b.num * a.den;
    }

    // x -> c x
    EulerFactor subst_scale(const Rational& c) const {
        auto scale = [&](const XPoly& p) {
            std::vector<APoly> cs;
            Rational cp(1);
            for (long i = 0; i <= p.degree(); ++i) {
                cs.push_back(ap_const(cp) * p.coeff(i));
                cp *= c;
            }
            return XPoly(cs);
        };
        return EulerFactor(scale(num), scale(den));
    }

    // power-series expansion to the given order
    LocalSeries expand(long order) const {
        LocalSeries n(order), d(order);
        for (long i = 0; i < order; ++i) {
            n.coeff_ref(i) = num.coeff(i);
            d.coeff_ref(i) = den.coeff(i);
        }
        return div(n, d);
    }

    // evaluation at rational x as a rational function of a: (num(a), den(a))
    std::pair<APoly, APoly> eval_at(const Rational& x) const {
        APoly n(0), d(0);
        Rational xp(1);
        for (long i = 0; i <= std::max(num.degree(), den.degree()); ++i) {
            n += ap_const(xp) * num.coeff(i);
            d += ap_const(xp) * den.coeff(i);
            xp *= x;
        }
        return {n, d};
    }
};

namespace detail {
inline XPoly xp_linear(const APoly& c0, const APoly& c1) { return XPoly(std::vector<APoly>{c0, c1}); }
inline XPoly xp_one() { return XPoly(std::vector<APoly>{APoly(1)}); }
} // namespace detail

// 1/(1 - a x + p^{k-1} x^2): local factor of a newform at an unramified prime
// (a formal).
inline EulerFactor lf_new_unramified(long p, long k) {
    XPoly den(std::vector<APoly>{APoly(1), -ap_var(), ap_const(Rational::int_pow(p, k - 1))});
    return EulerFactor(detail::xp_one(), den);
}

// 1/(1 + eps p^{k/2-1} x): local factor of a newform at p | N.
inline EulerFactor lf_new_ramified(long p, long k, int eps) {
    return EulerFactor(detail::xp_one(),
                       detail::xp_linear(APoly(1), ap_const(Rational(eps) * Rational::int_pow(p, k / 2 - 1))));
}

// (1 + eps2 p^{k/2} x): the extra factor an oldform lift acquires at p | N2.
inline EulerFactor lf_old_step(long p, long k, int eps2) {
    return EulerFactor(detail::xp_linear(APoly(1), ap_const(Rational(eps2) * Rational::int_pow(p, k / 2))), detail::xp_one());
}

// (1 + eps p^{(k1-k2)/2} x)/((1-x)(1-p^{k1-1} x)): local factor of the tuned
// Eisenstein series at p | N.
inline EulerFactor lf_geps(long p, long k1, long k2, int eps) {
    XPoly den = detail::xp_linear(APoly(1), ap_const(Rational(-1))) *
                detail::xp_linear(APoly(1), ap_const(-Rational::int_pow(p, k1 - 1)));
    return EulerFactor(detail::xp_linear(APoly(1), ap_const(Rational(eps) * Rational::int_pow(p, (k1 - k2) / 2))), den);
}

// 1/((1-x)(1-p^{k-1}x)): local factor of G_k (level one).
inline EulerFactor lf_zeta_like(long p, long k) {
    XPoly den = detail::xp_linear(APoly(1), ap_const(Rational(-1))) *
                detail::xp_linear(APoly(1), ap_const(-Rational::int_pow(p, k - 1)));
    return EulerFactor(detail::xp_one(), den);
}

enum class LfKind { New, OldStep, EisensteinGeps, ZetaLike };

struct LfParams {
    long p = 2;
    long k = 12;    // weight (or k1 for the Eisenstein kind)
    long k2 = 0;    // second weight for the Eisenstein kind
    int eps = 1;
    bool ramified = false;
};

inline EulerFactor lf_build(LfKind kind, const LfParams& pr) {
    switch (kind) {
        case LfKind::New: return pr.ramified ? lf_new_ramified(pr.p, pr.k, pr.eps) : lf_new_unramified(pr.p, pr.k);
        case LfKind::OldStep: return lf_old_step(pr.p, pr.k, pr.eps);
        case LfKind::EisensteinGeps: return lf_geps(pr.p, pr.k, pr.k2, pr.eps);
        case LfKind::ZetaLike: return lf_zeta_like(pr.p, pr.k);
    }
    throw std::invalid_argument("lf_build: unknown kind");
}

// Coefficientwise (Rankin-Selberg) product of local series.
inline LocalSeries hadamard(const LocalSeries& a, const LocalSeries& b) {
    long prec = std::min(a.prec(), b.prec());
    LocalSeries r(prec);
    for (long i = 0; i < prec; ++i) r.coeff_ref(i) = a.coeff(i) * b.coeff(i);
    return r;
}

// Closed form of hadamard(L(f,.), g) when g = c1/(1-x) + c2/(1-s x): the
// geometric rule gives c1 L(f,x) + c2 L(f,sx) exactly.
inline EulerFactor hadamard_with_two_geometrics(const EulerFactor& lf, const Rational& c1, const Rational& c2,
                                                const Rational& s) {
    EulerFactor t1 = lf;
    t1.num = ap_const(c1) * t1.num;
    EulerFactor t2 = lf.subst_scale(s);
    t2.num = ap_const(c2) * t2.num;
    return EulerFactor(t1.num * t2.den + t2.num * t1.den, t1.den * t2.den);
}

enum class ConvCase { Generic, PNew, POld };

struct ConvReport {
    bool series_ok = false;   // truncated-series identity (hadamard oracle)
    bool exact_ok = false;    // rational-function identity by cross-multiplication
    bool critical_ok = false; // correction factor equals 1 at x = p^{-(k-m-1)}
    std::string note;
    bool ok() const { return series_ok && exact_ok && critical_ok; }
};

// Verifies the convolution identity L(f * G^{eps,k2}_{k1}, x)_p against its
// closed form, in the three local situations, with a_p formal where the case
// allows it.
inline ConvReport verify_conv_lemma(long p, long k1, long k2, long m, ConvCase cs, int eps, long order = 10) {
    ConvReport rep;
    long k = k1 + k2 + 2 * m;
    if (k % 2 != 0) throw OddWeight("verify_conv_lemma: k1 + k2 must be even");
    Rational pk1 = Rational::int_pow(p, k1 - 1);
    EulerFactor zfac(XPoly(std::vector<APoly>{APoly(1), APoly(0), ap_const(-Rational::int_pow(p, k + k1 - 2))}),
                     detail::xp_one());

    // L(G, x)_p and its partial fractions c1/(1-x) + c2/(1-p^{k1-1}x):
    // c1 = num(1)/(1 - p^{k1-1}), c2 = num(p^{1-k1})/(1 - p^{1-k1}).
    Rational geps_shift = (cs == ConvCase::Generic) ? Rational(0) : Rational(eps) * Rational::int_pow(p, (k1 - k2) / 2);
    auto gnum = [&](const Rational& x) { return Rational(1) + geps_shift * x; };
    Rational c1 = gnum(Rational(1)) / (Rational(1) - pk1);
    Rational c2 = gnum(Rational::int_pow(p, 1 - k1)) / (Rational(1) - Rational::int_pow(p, 1 - k1));
    EulerFactor lg = (cs == ConvCase::Generic) ? lf_zeta_like(p, k1) : lf_geps(p, k1, k2, eps);

    EulerFactor lf;
    switch (cs) {
        case ConvCase::Generic: lf = lf_new_unramified(p, k); break;
        case ConvCase::PNew: lf = lf_new_ramified(p, k, eps); break;
        case ConvCase::POld: lf = lf_new_unramified(p, k) * lf_old_step(p, k, eps); break;
    }

    // left side, twice: series hadamard and closed form through partial fractions
    LocalSeries lhs_series = hadamard(lf.expand(order), lg.expand(order));
    EulerFactor lhs_closed = hadamard_with_two_geometrics(lf, c1, c2, pk1);

    // right side per case
    EulerFactor rhs;
    EulerFactor ll = lf * lf.subst_scale(pk1);
    switch (cs) {
        case ConvCase::Generic:
            rhs = zfac * ll;
            break;
        case ConvCase::PNew: {
            EulerFactor lin(detail::xp_linear(APoly(1), ap_const(-Rational::int_pow(p, k1 + m - 1))), detail::xp_one());
            rhs = lin * ll;
            break;
        }
        case ConvCase::POld: {
            EulerFactor first = zfac * ll;
            EulerFactor lf1 = lf_new_unramified(p, k);
            EulerFactor l1l1 = lf1 * lf1.subst_scale(pk1);
            // Q(x) = a + eps p^{k/2} - (p^{k1-1}+1) p^{k-1} x - eps p^{k1+3k/2-2} x^2
            XPoly Q(std::vector<APoly>{ap_var() + ap_const(Rational(eps) * Rational::int_pow(p, k / 2)),
                                       ap_const(-(pk1 + Rational(1)) * Rational::int_pow(p, k - 1)),
                                       ap_const(-Rational(eps) * Rational::int_pow(p, k1 + 3 * (k / 2) - 2))});
            XPoly pre = detail::xp_linear(APoly(0), ap_const(Rational(eps) * Rational::int_pow(p, (k1 - k2) / 2))) *
                        detail::xp_linear(APoly(1), ap_const(-Rational::int_pow(p, k - m - 1)));
            EulerFactor second(pre * Q, detail::xp_one());
            rhs = first + second * l1l1;
            break;
        }
    }

    rep.series_ok = (lhs_series == rhs.expand(order));
    rep.exact_ok = (lhs_closed == rhs);

    // critical-point correction factor at x_c = p^{-(k-m-1)}
    Rational xc = Rational::int_pow(p, -(k - m - 1));
    switch (cs) {
        case ConvCase::Generic:
            rep.critical_ok = true; // correction factor is identically 1
            break;
        case ConvCase::PNew: {
            Rational numv = Rational(1) - Rational::int_pow(p, k1 + m - 1) * xc;
            Rational denv = Rational(1) - Rational::int_pow(p, k + k1 - 2) * xc * xc;
            rep.critical_ok = !denv.is_zero() && numv / denv == Rational(1);
            break;
        }
        case ConvCase::POld: {
            // the second term carries the factor (1 - p^{k-m-1} x), which
            // vanishes exactly at x_c; the remaining factor is the Case-1 form
            Rational vanish = Rational(1) - Rational::int_pow(p, k - m - 1) * xc;
            rep.critical_ok = vanish.is_zero();
            break;
        }
    }
    if (!rep.ok()) {
        rep.note = "p=" + std::to_string(p) + " k1=" + std::to_string(k1) + " k2=" + std::to_string(k2) +
                   " m=" + std::to_string(m) + " eps=" + std::to_string(eps);
    }
    return rep;
}

} // namespace periods
