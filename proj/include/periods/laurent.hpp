#pragma once

#include <map>
#include <sstream>
#include <utility>
#include <vector>

#include "periods/qseries.hpp"

namespace periods {

template <class K>
inline bool coeff_is_zero(const K& x) { return scalar_is_zero(x); }
template <class K>
inline bool coeff_is_zero(const QSeries<K>& s) { return s.is_zero(); }

// Laurent polynomial in one variable, sparse; zero coefficients are not stored.
template <class K>
class LaurentPoly {
public:
    LaurentPoly() = default;

    static LaurentPoly monomial(const K& c, long e) {
        LaurentPoly p;
        p.add(e, c);
        return p;
    }

    void add(long e, const K& c) {
        if (scalar_is_zero(c)) return;
        auto it = t_.find(e);
        if (it == t_.end()) {
            t_.emplace(e, c);
        } else {
            it->second = it->second + c;
            if (scalar_is_zero(it->second)) t_.erase(it);
        }
    }

    K get(long e) const {
        auto it = t_.find(e);
        return it == t_.end() ? K(0) : it->second;
    }

    bool is_zero() const { return t_.empty(); }
    long min_exp() const { return t_.empty() ? 0 : t_.begin()->first; }
    long max_exp() const { return t_.empty() ? 0 : t_.rbegin()->first; }

    bool exponents_within(long lo, long hi) const {
        return t_.empty() || (min_exp() >= lo && max_exp() <= hi);
    }

    LaurentPoly operator-() const {
        LaurentPoly r;
        for (auto& [e, c] : t_) r.t_.emplace(e, -c);
        return r;
    }
    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r = a;
        for (auto& [e, c] : b.t_) r.add(e, c);
        return r;
    }
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r = a;
        for (auto& [e, c] : b.t_) r.add(e, -c);
        return r;
    }
    friend LaurentPoly operator*(const K& s, const LaurentPoly& a) {
        LaurentPoly r;
        for (auto& [e, c] : a.t_) r.add(e, s * c);
        return r;
    }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r;
        for (auto& [e1, c1] : a.t_)
            for (auto& [e2, c2] : b.t_) r.add(e1 + e2, c1 * c2);
        return r;
    }
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return (a - b).is_zero();
    }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    // P(cX)
    LaurentPoly subst_scale(const K& c) const {
        LaurentPoly r;
        for (auto& [e, co] : t_) {
            K cp = e >= 0 ? pow_k(c, e) : K(1) / pow_k(c, -e);
            r.add(e, co * cp);
        }
        return r;
    }

    K eval(const K& x) const {
        K acc(0);
        for (auto& [e, co] : t_) {
            K xp = e >= 0 ? pow_k(x, e) : K(1) / pow_k(x, -e);
            acc = acc + co * xp;
        }
        return acc;
    }

    LaurentPoly even_part() const {
        LaurentPoly r;
        for (auto& [e, c] : t_)
            if (e % 2 == 0) r.add(e, c);
        return r;
    }
    LaurentPoly odd_part() const {
        LaurentPoly r;
        for (auto& [e, c] : t_)
            if (e % 2 != 0) r.add(e, c);
        return r;
    }
    // P(-X)
    LaurentPoly neg_arg() const {
        LaurentPoly r;
        for (auto& [e, c] : t_) r.add(e, (e % 2 == 0) ? c : -c);
        return r;
    }

    template <class K2, class F>
    LaurentPoly<K2> map(F&& f) const {
        LaurentPoly<K2> r;
        for (auto& [e, c] : t_) r.add(e, f(c));
        return r;
    }

    const std::map<long, K>& terms() const { return t_; }

    static K pow_k(const K& x, long e) {
        K acc(1);
        for (long i = 0; i < e; ++i) acc = acc * x;
        return acc;
    }

private:
    std::map<long, K> t_;
};

// Divides a rational Laurent polynomial by its content and makes the leading
// (highest-degree) coefficient positive. Returns the applied scalar s with
// result = s * input.
inline Rational make_primitive(LaurentPoly<Rational>& p) {
    if (p.is_zero()) return Rational(1);
    mpz_class num_gcd = 0, den_lcm = 1;
    for (auto& [e, c] : p.terms()) {
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), num_gcd.get_mpz_t(), c.num().get_mpz_t());
        num_gcd = g;
        mpz_class l;
        mpz_lcm(l.get_mpz_t(), den_lcm.get_mpz_t(), c.den().get_mpz_t());
        den_lcm = l;
    }
    Rational s(den_lcm, num_gcd);
    s = s.abs();
    if (p.terms().rbegin()->second.sign() < 0) s = -s;
    p = s * p;
    return s;
}

// Laurent polynomial in X and Y; coefficients may be scalars or q-series.
template <class C>
class BiLaurent {
public:
    using Key = std::pair<long, long>;

    BiLaurent() = default;

    void add(long i, long j, const C& c) {
        if (coeff_is_zero(c)) return;
        Key k{i, j};
        auto it = t_.find(k);
        if (it == t_.end()) {
            t_.emplace(k, c);
        } else {
            it->second = it->second + c;
            if (coeff_is_zero(it->second)) t_.erase(it);
        }
    }

    bool has(long i, long j) const { return t_.count({i, j}) > 0; }
    const C* find(long i, long j) const {
        auto it = t_.find({i, j});
        return it == t_.end() ? nullptr : &it->second;
    }

    bool is_zero() const { return t_.empty(); }

    BiLaurent operator-() const {
        BiLaurent r;
        for (auto& [k, c] : t_) r.t_.emplace(k, -c);
        return r;
    }
    friend BiLaurent operator+(const BiLaurent& a, const BiLaurent& b) {
        BiLaurent r = a;
        for (auto& [k, c] : b.t_) r.add(k.first, k.second, c);
        return r;
    }
    friend BiLaurent operator-(const BiLaurent& a, const BiLaurent& b) {
        BiLaurent r = a;
        for (auto& [k, c] : b.t_) r.add(k.first, k.second, -c);
        return r;
    }
    friend bool operator==(const BiLaurent& a, const BiLaurent& b) { return (a - b).is_zero(); }
    friend bool operator!=(const BiLaurent& a, const BiLaurent& b) { return !(a == b); }

    BiLaurent swap_xy() const {
        BiLaurent r;
        for (auto& [k, c] : t_) r.add(k.second, k.first, c);
        return r;
    }

    // Even-odd component: restriction to even X-exponent (equals
    // (B(X,Y)+B(-X,Y))/2 termwise).
    BiLaurent even_x_part() const {
        BiLaurent r;
        for (auto& [k, c] : t_)
            if (k.first % 2 == 0) r.t_.emplace(k, c);
        return r;
    }

    // B(-X,-Y)
    BiLaurent neg_both() const {
        BiLaurent r;
        for (auto& [k, c] : t_) {
            if ((k.first + k.second) % 2 != 0)
                r.t_.emplace(k, -c);
            else
                r.t_.emplace(k, c);
        }
        return r;
    }

    bool exponents_within(long lo, long hi) const {
        for (auto& [k, c] : t_) {
            (void)c;
            if (k.first < lo || k.first > hi || k.second < lo || k.second > hi) return false;
        }
        return true;
    }

    template <class C2, class F>
    BiLaurent<C2> map(F&& f) const {
        BiLaurent<C2> r;
        for (auto& [k, c] : t_) r.add(k.first, k.second, f(c));
        return r;
    }

    const std::map<Key, C>& terms() const { return t_; }

private:
    std::map<Key, C> t_;
};

template <class K>
BiLaurent<K> mul_bilaurent(const BiLaurent<K>& a, const BiLaurent<K>& b) {
    BiLaurent<K> r;
    for (auto& [k1, c1] : a.terms())
        for (auto& [k2, c2] : b.terms())
            r.add(k1.first + k2.first, k1.second + k2.second, c1 * c2);
    return r;
}

// P(X) (x) Q(Y) as a scalar bi-polynomial.
template <class K>
BiLaurent<K> tensor(const LaurentPoly<K>& p, const LaurentPoly<K>& q) {
    BiLaurent<K> r;
    for (auto& [i, a] : p.terms())
        for (auto& [j, b] : q.terms()) r.add(i, j, a * b);
    return r;
}

// Paper-style rendering: "8X^6-34X^4+17X^2-1", descending exponents.
template <class K>
std::string render_poly(const LaurentPoly<K>& p, const std::string& var) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        long e = it->first;
        std::string c = scalar_str(it->second);
        bool neg = !c.empty() && c[0] == '-';
        if (first) {
            if (neg) { os << "-"; c = c.substr(1); }
        } else {
            os << (neg ? " - " : " + ");
            if (neg) c = c.substr(1);
        }
        first = false;
        bool unit = (c == "1");
        if (e == 0) {
            os << c;
        } else {
            if (!unit) os << c << "*";
            os << var;
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

} // namespace periods
