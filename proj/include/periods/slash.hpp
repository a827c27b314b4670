#pragma once

#include <cstdint>
#include <vector>

#include "periods/laurent.hpp"

namespace periods {

// Word in Gamma_0^*(N) represented by an integer matrix with positive
// determinant plus its character exponent (number of Atkin-Lehner letters
// mod 2). Matrices are projective: an overall scalar is irrelevant.
struct GroupWord {
    long long a, b, c, d;
    int chi; // epsilon-exponent of the word

    long long det() const { return a * d - b * c; }

    static GroupWord identity() { return {1, 0, 0, 1, 0}; }
    static GroupWord translation(long n = 1) { return {1, n, 0, 1, 0}; }
    // Fricke/Atkin-Lehner involution W_N = (0,-1;N,0).
    static GroupWord fricke(long N) { return {0, -1, N, 0, 1}; }
    // V_d = (d,0;0,1), index-d dilation (no character).
    static GroupWord dilation(long d) { return {d, 0, 0, 1, 0}; }
    // U_p = T W_p = (p,-1;p,0), order 2p in PGL2 for p = 2,3.
    static GroupWord up(long p) { return {p, -1, p, 0, 1}; }
    // U~_p = T^{-1} W_p = (-p,-1;p,0).
    static GroupWord up_tilde(long p) { return {-p, -1, p, 0, 1}; }

    friend GroupWord operator*(const GroupWord& x, const GroupWord& y) {
        return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
                x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d,
                (x.chi + y.chi) % 2};
    }

    GroupWord power(long n) const {
        GroupWord acc = identity();
        for (long i = 0; i < n; ++i) acc = acc * (*this);
        return acc;
    }

    // Strips the content so entries are coprime (projective normal form).
    GroupWord reduced() const {
        long long g = 0;
        for (long long v : {a, b, c, d}) {
            v = v < 0 ? -v : v;
            while (v) { long long t = g % v; g = v; v = t; }
        }
        if (g == 0 || g == 1) return *this;
        return {a / g, b / g, c / g, d / g, chi};
    }
};

// Coset detection for words in Gamma_0^*(p): the word lies in the W-coset
// exactly when det is p times a square (up to square factors).
inline GroupWord word_in_level(long long a, long long b, long long c, long long d, long p) {
    GroupWord g{a, b, c, d, 0};
    long long det = g.det();
    if (det <= 0) throw std::invalid_argument("word_in_level: determinant must be positive");
    SquarefreeSplit sp = squarefree_split(mpz_class(static_cast<long>(det)));
    g.chi = (sp.d % p == 0) ? 1 : 0;
    return g;
}

namespace detail {
// (a X + b)^n as a Laurent polynomial; n may be negative only when one of
// a, b vanishes (otherwise the result leaves the Laurent span).
template <class K>
LaurentPoly<K> linear_power(long long a, long long b, long n) {
    LaurentPoly<K> r;
    if (n >= 0) {
        for (long i = 0; i <= n; ++i) {
            if (a == 0 && i > 0) continue;
            if (b == 0 && i < n) continue;
            Rational co = binom(n, i) * Rational::int_pow(static_cast<long>(a), i) *
                          Rational::int_pow(static_cast<long>(b), n - i);
            r.add(i, K(co));
        }
        return r;
    }
    if (a == 0) {
        r.add(0, K(Rational::int_pow(static_cast<long>(b), n)));
        return r;
    }
    if (b == 0) {
        r.add(n, K(Rational::int_pow(static_cast<long>(a), n)));
        return r;
    }
    throw NonPolynomialResult("slash: negative power of a full linear form leaves the Laurent span");
}
} // namespace detail

// P |_{-w, eps} gamma = eps^chi * det^{-w/2} (cX+d)^w P((aX+b)/(cX+d)),
// computed exactly on Laurent polynomials. Monomial X^n maps to
// det^{-w/2} (aX+b)^n (cX+d)^{w-n}.
template <class K>
LaurentPoly<K> slash(const LaurentPoly<K>& P, const GroupWord& g0, long w, int eps = 1) {
    GroupWord g = g0.reduced();
    long long det = g.det();
    if (det <= 0) throw std::invalid_argument("slash: determinant must be positive");
    Rational detpow;
    if (w % 2 == 0) {
        detpow = Rational::int_pow(static_cast<long>(det), -(w / 2));
    } else {
        mpz_class d(static_cast<long>(det));
        if (!mpz_perfect_square_p(d.get_mpz_t()))
            throw OddHalfPower("slash: det^{w/2} irrational for odd w");
        mpz_class s;
        mpz_sqrt(s.get_mpz_t(), d.get_mpz_t());
        detpow = Rational::pow(Rational(s), -w);
    }
    K scale = K(detpow);
    if (eps == -1 && g.chi % 2 == 1) scale = -scale;

    LaurentPoly<K> out;
    for (auto& [n, c] : P.terms()) {
        LaurentPoly<K> num = detail::linear_power<K>(g.a, g.b, n);
        LaurentPoly<K> den = detail::linear_power<K>(g.c, g.d, w - n);
        LaurentPoly<K> term = num * den;
        out = out + (c * scale) * term;
    }
    return out;
}

// Invariant pairing on V_w: (X^r, X^s) = (-1)^r delta_{r+s,w} / binom(w,r).
template <class K>
K pair_vw(const LaurentPoly<K>& P, const LaurentPoly<K>& Q, long w) {
    if (!P.exponents_within(0, w) || !Q.exponents_within(0, w))
        throw LaurentTailPresent("pair_vw: arguments must lie in V_w");
    K acc(0);
    for (auto& [r, a] : P.terms()) {
        K b = Q.get(w - r);
        if (scalar_is_zero(b)) continue;
        Rational sign = (r % 2 == 0) ? Rational(1) : Rational(-1);
        acc = acc + a * b * K(sign / binom(w, r));
    }
    return acc;
}

// Sign character on the divisors of N, determined by its values on the prime
// factors: eps(d) = prod_{p | d} eps(p).
class DivisorChar {
public:
    DivisorChar() : N_(1) {}
    DivisorChar(long N, const std::vector<int>& signs) : N_(N), primes_(prime_divisors(N)), signs_(signs) {
        if (signs_.size() != primes_.size())
            throw std::invalid_argument("DivisorChar: one sign per prime divisor required");
    }

    long level() const { return N_; }
    int operator()(long d) const {
        int v = 1;
        for (size_t i = 0; i < primes_.size(); ++i)
            if (d % primes_[i] == 0) v *= signs_[i];
        return v;
    }
    bool is_trivial() const {
        for (int s : signs_) if (s != 1) return false;
        return true;
    }
    const std::vector<long>& primes() const { return primes_; }
    const std::vector<int>& signs() const { return signs_; }

    std::string name() const {
        if (primes_.empty()) return "triv";
        std::string s;
        for (size_t i = 0; i < primes_.size(); ++i)
            s += (signs_[i] > 0 ? "+" : "-");
        return s;
    }

private:
    long N_;
    std::vector<long> primes_;
    std::vector<int> signs_;
};

inline std::vector<DivisorChar> all_characters(long N) {
    std::vector<long> ps = prime_divisors(N);
    size_t t = ps.size();
    std::vector<DivisorChar> out;
    for (size_t mask = 0; mask < (size_t(1) << t); ++mask) {
        std::vector<int> signs(t, 1);
        for (size_t i = 0; i < t; ++i)
            if (mask & (size_t(1) << i)) signs[i] = -1;
        out.emplace_back(N, signs);
    }
    return out;
}

// Level-raising operator on polynomials:
// (Lambda^{eps2}_{2-k,N2} P)(X) = sum_{d | N2} eps2(d) d^{1-k/2} P(dX).
template <class K>
LaurentPoly<K> lambda_poly(const LaurentPoly<K>& P, long N2, const DivisorChar& eps2, long k) {
    if (k % 2 != 0) throw OddWeight("lambda_poly: weight must be even");
    LaurentPoly<K> out;
    for (long d : divisors(N2)) {
        Rational c = Rational::int_pow(d, 1 - k / 2) * Rational(eps2(d));
        LaurentPoly<K> term = P.subst_scale(K(Rational(static_cast<long>(d))));
        out = out + K(c) * term;
    }
    return out;
}

// sum_i c_i * (P | gamma_i)
template <class K>
LaurentPoly<K> apply_group_ring(const LaurentPoly<K>& P,
                                const std::vector<std::pair<K, GroupWord>>& elt, long w, int eps = 1) {
    LaurentPoly<K> out;
    for (auto& [c, g] : elt) out = out + c * slash(P, g, w, eps);
    return out;
}

// A_p = sum_{j=1}^{p-1} (p-j) (U~_p^j - U_p^j)
template <class K>
std::vector<std::pair<K, GroupWord>> atkin_lehner_element(long p) {
    std::vector<std::pair<K, GroupWord>> elt;
    for (long j = 1; j <= p - 1; ++j) {
        elt.emplace_back(K(p - j), GroupWord::up_tilde(p).power(j));
        elt.emplace_back(K(-(p - j)), GroupWord::up(p).power(j));
    }
    return elt;
}

} // namespace periods
