#pragma once

#include <algorithm>
#include <vector>

#include "periods/quad.hpp"

namespace periods {

// Truncated q-expansion over an exact scalar field K. Coefficients c_0..c_{P-1}
// are known, exponents >= P are unknown (not zero). Precision propagates
// pessimistically: every binary operation carries min precision, division by a
// series of valuation v additionally loses v terms.
template <class K>
class QSeries {
public:
    QSeries() : prec_(1), c_(1, K(0)) {}
    explicit QSeries(long prec) : prec_(prec), c_(static_cast<size_t>(prec), K(0)) {
        if (prec < 1) throw std::invalid_argument("QSeries: precision must be >= 1");
    }
    QSeries(std::vector<K> coeffs, long prec) : prec_(prec), c_(std::move(coeffs)) {
        if (prec < 1) throw std::invalid_argument("QSeries: precision must be >= 1");
        c_.resize(static_cast<size_t>(prec), K(0));
    }

    static QSeries constant(const K& v, long prec) {
        QSeries s(prec);
        s.c_[0] = v;
        return s;
    }
    static QSeries monomial(const K& v, long n, long prec) {
        QSeries s(prec);
        if (n < prec) s.c_[static_cast<size_t>(n)] = v;
        return s;
    }

    long prec() const { return prec_; }
    const K& coeff(long n) const {
        if (n < 0 || n >= prec_) throw std::out_of_range("QSeries: coefficient beyond precision");
        return c_[static_cast<size_t>(n)];
    }
    K& coeff_ref(long n) { return c_[static_cast<size_t>(n)]; }

    bool is_zero() const {
        for (const K& x : c_) if (!scalar_is_zero(x)) return false;
        return true;
    }

    // Smallest exponent with nonzero coefficient; prec() if none visible.
    long valuation() const {
        for (long n = 0; n < prec_; ++n)
            if (!scalar_is_zero(c_[static_cast<size_t>(n)])) return n;
        return prec_;
    }

    QSeries truncate(long p) const {
        if (p >= prec_) return *this;
        return QSeries(std::vector<K>(c_.begin(), c_.begin() + p), p);
    }

    QSeries operator-() const {
        QSeries r(prec_);
        for (long n = 0; n < prec_; ++n) r.c_[n] = -c_[n];
        return r;
    }

    friend QSeries operator+(const QSeries& a, const QSeries& b) {
        long p = std::min(a.prec_, b.prec_);
        QSeries r(p);
        for (long n = 0; n < p; ++n) r.c_[n] = a.c_[n] + b.c_[n];
        return r;
    }
    friend QSeries operator-(const QSeries& a, const QSeries& b) {
        long p = std::min(a.prec_, b.prec_);
        QSeries r(p);
        for (long n = 0; n < p; ++n) r.c_[n] = a.c_[n] - b.c_[n];
        return r;
    }

    // Cauchy product, truncated at min precision.
    friend QSeries operator*(const QSeries& a, const QSeries& b) {
        long p = std::min(a.prec_, b.prec_);
        QSeries r(p);
        for (long i = 0; i < p; ++i) {
            if (scalar_is_zero(a.c_[i])) continue;
            for (long j = 0; i + j < p; ++j) {
                if (scalar_is_zero(b.c_[j])) continue;
                r.c_[i + j] += a.c_[i] * b.c_[j];
            }
        }
        return r;
    }

    QSeries& operator+=(const QSeries& o) { *this = *this + o; return *this; }
    QSeries& operator-=(const QSeries& o) { *this = *this - o; return *this; }
    QSeries& operator*=(const QSeries& o) { *this = *this * o; return *this; }

    friend QSeries operator*(const K& s, const QSeries& a) {
        QSeries r(a.prec_);
        for (long n = 0; n < a.prec_; ++n) r.c_[n] = s * a.c_[n];
        return r;
    }
    friend QSeries operator*(const QSeries& a, const K& s) { return s * a; }

    // Equality up to common precision.
    friend bool operator==(const QSeries& a, const QSeries& b) {
        long p = std::min(a.prec_, b.prec_);
        for (long n = 0; n < p; ++n)
            if (!scalar_is_zero(a.c_[n] - b.c_[n])) return false;
        return true;
    }
    friend bool operator!=(const QSeries& a, const QSeries& b) { return !(a == b); }

    template <class K2, class F>
    QSeries<K2> map(F&& f) const {
        std::vector<K2> out;
        out.reserve(c_.size());
        for (const K& x : c_) out.push_back(f(x));
        return QSeries<K2>(std::move(out), prec_);
    }

    const std::vector<K>& coeffs() const { return c_; }

private:
    long prec_;
    std::vector<K> c_;
};

// Exact quotient a/b. Requires val(b) <= val(a) and invertible leading
// coefficient; the result loses val(b) terms of precision.
template <class K>
QSeries<K> div(const QSeries<K>& a, const QSeries<K>& b) {
    long p = std::min(a.prec(), b.prec());
    long vb = b.valuation();
    if (vb >= p) throw NonUnitDivisor("QSeries: divisor vanishes to working precision");
    if (a.valuation() < vb) throw NonUnitDivisor("QSeries: valuation(divisor) exceeds valuation(dividend)");
    long rp = p - vb;
    K lead = b.coeff(vb);
    K lead_inv = K(1) / lead;
    QSeries<K> r(rp);
    // Shifted long division: r[n] = (a[n+vb] - sum_{m<n} r[m] b[n-m+vb]) / b[vb]
    for (long n = 0; n < rp; ++n) {
        K acc = a.coeff(n + vb);
        for (long m = 0; m < n; ++m) {
            const K& rm = r.coeff(m);
            if (scalar_is_zero(rm)) continue;
            acc = acc - rm * b.coeff(n - m + vb);
        }
        r.coeff_ref(n) = acc * lead_inv;
    }
    return r;
}

// q -> q^d substitution; output keeps the input precision (coefficients at
// non-multiples of d are genuinely 0 below it).
template <class K>
QSeries<K> dilate(const QSeries<K>& a, long d) {
    if (d < 1) throw std::invalid_argument("dilate: d must be >= 1");
    if (d == 1) return a;
    QSeries<K> r(a.prec());
    for (long n = 0; n * d < a.prec(); ++n) r.coeff_ref(n * d) = a.coeff(n);
    return r;
}

// D = q d/dq.
template <class K>
QSeries<K> derive(const QSeries<K>& a) {
    QSeries<K> r(a.prec());
    for (long n = 0; n < a.prec(); ++n) r.coeff_ref(n) = K(n) * a.coeff(n);
    return r;
}

template <class K>
QSeries<K> derive_iter(const QSeries<K>& a, long m) {
    QSeries<K> r = a;
    for (long i = 0; i < m; ++i) r = derive(r);
    return r;
}

// sum_{n>=1} sigma_r(n) q^n with sigma_r(n) = sum_{d|n} d^r.
inline QSeries<Rational> sigma_series(long r, long prec) {
    QSeries<Rational> s(prec);
    for (long d = 1; d < prec; ++d) {
        Rational dr = Rational::int_pow(d, r);
        for (long n = d; n < prec; n += d) s.coeff_ref(n) += dr;
    }
    return s;
}

// Default working precision for level N, weight k: a Sturm-style bound
// ceil(k*N*prod_{p|N}(1+1/p)/12) plus slack for cross-checks.
inline long sturm_qprec(long N, long k) {
    long psi = N;
    long n = N;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            psi = psi / p * (p + 1);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) psi = psi / n * (n + 1);
    long num = k * psi;
    return (num + 11) / 12 + 8;
}

inline bool is_squarefree(long N) {
    if (N < 1) return false;
    for (long p = 2; p * p <= N; ++p)
        if (N % (p * p) == 0) return false;
    return true;
}

inline std::vector<long> prime_divisors(long N) {
    std::vector<long> ps;
    long n = N;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            ps.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) ps.push_back(n);
    return ps;
}

inline std::vector<long> divisors(long N) {
    std::vector<long> ds;
    for (long d = 1; d * d <= N; ++d) {
        if (N % d == 0) {
            ds.push_back(d);
            if (d != N / d) ds.push_back(N / d);
        }
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

inline long mobius(long n) {
    long mu = 1;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;
            mu = -mu;
        }
    }
    if (n > 1) mu = -mu;
    return mu;
}

} // namespace periods
