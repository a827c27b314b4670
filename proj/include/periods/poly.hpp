#pragma once

#include <vector>

#include "periods/quad.hpp"

namespace periods {

// Dense univariate polynomial over a commutative ring K.
template <class K>
class Poly {
public:
    Poly() : c_{} {}
    Poly(long v) { if (v != 0) c_.push_back(K(v)); }
    explicit Poly(const K& v) { if (!scalar_is_zero(v)) c_.push_back(v); }
    explicit Poly(std::vector<K> cs) : c_(std::move(cs)) { trim(); }

    static Poly monomial(const K& v, long n) {
        Poly p;
        if (scalar_is_zero(v)) return p;
        p.c_.assign(static_cast<size_t>(n + 1), K(0));
        p.c_[static_cast<size_t>(n)] = v;
        return p;
    }
    static Poly x() { return monomial(K(1), 1); }

    bool is_zero() const { return c_.empty(); }
    long degree() const { return static_cast<long>(c_.size()) - 1; } // -1 for zero
    K coeff(long n) const {
        if (n < 0 || n >= static_cast<long>(c_.size())) return K(0);
        return c_[static_cast<size_t>(n)];
    }
    const K& lead() const { return c_.back(); }

    Poly operator-() const {
        Poly r = *this;
        for (K& v : r.c_) v = -v;
        return r;
    }
    friend Poly operator+(const Poly& a, const Poly& b) {
        Poly r;
        r.c_.assign(std::max(a.c_.size(), b.c_.size()), K(0));
        for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a.coeff(static_cast<long>(i)) + b.coeff(static_cast<long>(i));
        r.trim();
        return r;
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        Poly r;
        r.c_.assign(a.c_.size() + b.c_.size() - 1, K(0));
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (scalar_is_zero(a.c_[i])) continue;
            for (size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
        }
        r.trim();
        return r;
    }
    friend Poly operator*(const K& s, const Poly& a) {
        Poly r = a;
        for (K& v : r.c_) v = s * v;
        r.trim();
        return r;
    }
    Poly& operator+=(const Poly& o) { *this = *this + o; return *this; }
    Poly& operator-=(const Poly& o) { *this = *this - o; return *this; }
    Poly& operator*=(const Poly& o) { *this = *this * o; return *this; }

    friend bool operator==(const Poly& a, const Poly& b) { return (a - b).is_zero(); }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    K eval(const K& x) const {
        K acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    const std::vector<K>& coeffs() const { return c_; }

private:
    void trim() {
        while (!c_.empty() && scalar_is_zero(c_.back())) c_.pop_back();
    }
    std::vector<K> c_;
};

template <class K>
inline bool scalar_is_zero(const Poly<K>& p) { return p.is_zero(); }

// Euclidean division over a field.
template <class K>
std::pair<Poly<K>, Poly<K>> poly_divmod(const Poly<K>& a, const Poly<K>& b) {
    if (b.is_zero()) throw DivisionByZero("poly_divmod: division by zero polynomial");
    Poly<K> r = a, q;
    while (!r.is_zero() && r.degree() >= b.degree()) {
        K c = r.lead() / b.lead();
        long d = r.degree() - b.degree();
        Poly<K> t = Poly<K>::monomial(c, d);
        q += t;
        r -= t * b;
    }
    return {q, r};
}

// Monic gcd over a field.
template <class K>
Poly<K> poly_gcd(Poly<K> a, Poly<K> b) {
    while (!b.is_zero()) {
        auto [q, r] = poly_divmod(a, b);
        (void)q;
        a = b;
        b = r;
    }
    if (!a.is_zero()) a = (K(1) / a.lead()) * a;
    return a;
}

} // namespace periods
