#pragma once

#include <string>
#include <utility>

#include "periods/rational.hpp"

namespace periods {

// Splits n = s^2 * d with d squarefree, by trial division up to `bound`.
// Throws IrrationalBeyondBound if squarefreeness cannot be certified.
struct SquarefreeSplit {
    mpz_class s;
    mpz_class d; // squarefree, carries the sign of n
};

inline SquarefreeSplit squarefree_split(mpz_class n, long bound = 1000000) {
    SquarefreeSplit out{1, 1};
    if (n == 0) { out.d = 0; return out; }
    if (n < 0) { out.d = -1; n = -n; }
    for (mpz_class p = 2; p <= bound && p * p <= n; p == 2 ? p = 3 : p += 2) {
        if (n % p != 0) continue;
        int e = 0;
        while (n % p == 0) { n /= p; ++e; }
        for (int i = 0; i + 1 < e; i += 2) out.s *= p;
        if (e % 2 == 1) out.d *= p;
    }
    // Leftover n has no prime factor <= bound. It is squarefree unless it is a
    // perfect square (or contains one), which only needs an explicit check when
    // n > bound^2.
    if (n > 1) {
        if (mpz_perfect_square_p(n.get_mpz_t())) {
            mpz_class r;
            mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
            // r itself could still contain square factors we cannot see.
            if (r > bound) throw IrrationalBeyondBound("squarefree_split: residue " + n.get_str() + " exceeds factoring bound");
            out.s *= r;
        } else {
            mpz_class b2 = mpz_class(bound) * bound;
            if (n > b2)
                throw IrrationalBeyondBound("squarefree_split: residue " + n.get_str() + " exceeds factoring bound");
            out.d *= n;
        }
    }
    return out;
}

// Element a + b*sqrt(D) of a real quadratic field Q(sqrt(D)), D > 1 squarefree.
// Plain rationals are represented with b = 0 and the wildcard tag D = 0, so
// they combine with any field; two elements with distinct nonzero D never mix.
class Quad {
public:
    Quad() : a_(0), b_(0), d_(0) {}
    Quad(long n) : a_(n), b_(0), d_(0) {}
    Quad(int n) : a_(static_cast<long>(n)), b_(0), d_(0) {}
    Quad(const Rational& a) : a_(a), b_(0), d_(0) {}
    Quad(const Rational& a, const Rational& b, long long d) : a_(a), b_(b), d_(d) {
        normalize();
    }

    static Quad sqrt_d(long long d) { return Quad(Rational(0), Rational(1), d); }

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    long long d() const { return d_; }

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool is_rational() const { return b_.is_zero(); }

    Quad conj() const { return Quad(a_, -b_, d_); }

    Quad operator-() const { return Quad(-a_, -b_, d_); }

    friend Quad operator+(const Quad& x, const Quad& y) {
        long long d = unify(x, y, "add");
        return Quad(x.a_ + y.a_, x.b_ + y.b_, d);
    }
    friend Quad operator-(const Quad& x, const Quad& y) {
        long long d = unify(x, y, "sub");
        return Quad(x.a_ - y.a_, x.b_ - y.b_, d);
    }
    friend Quad operator*(const Quad& x, const Quad& y) {
        long long d = unify(x, y, "mul");
        Rational dd(static_cast<long>(d));
        return Quad(x.a_ * y.a_ + dd * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_, d);
    }
    friend Quad operator/(const Quad& x, const Quad& y) {
        if (y.is_zero()) throw DivisionByZero("Quad: division by zero");
        long long d = unify(x, y, "div");
        Rational dd(static_cast<long>(d));
        Rational n = y.a_ * y.a_ - dd * y.b_ * y.b_; // field norm of the conjugate pair
        if (n.is_zero()) throw DivisionByZero("Quad: divisor has zero norm (D not squarefree?)");
        Quad num = x * y.conj();
        return Quad(num.a_ / n, num.b_ / n, d);
    }

    Quad& operator+=(const Quad& o) { *this = *this + o; return *this; }
    Quad& operator-=(const Quad& o) { *this = *this - o; return *this; }
    Quad& operator*=(const Quad& o) { *this = *this * o; return *this; }
    Quad& operator/=(const Quad& o) { *this = *this / o; return *this; }

    friend bool operator==(const Quad& x, const Quad& y) {
        if (x.a_ != y.a_ || x.b_ != y.b_) return false;
        return x.b_.is_zero() || x.d_ == y.d_;
    }
    friend bool operator!=(const Quad& x, const Quad& y) { return !(x == y); }

    Quad inverse() const { return Quad(Rational(1)) / *this; }

    std::string str() const {
        if (is_rational()) return a_.str();
        std::string s = "(" + a_.str();
        if (b_.sign() >= 0) s += "+";
        s += b_.str() + "*sqrt(" + std::to_string(d_) + "))";
        return s;
    }

    friend std::ostream& operator<<(std::ostream& os, const Quad& q) { return os << q.str(); }

private:
    void normalize() {
        if (b_.is_zero()) { d_ = 0; return; }
        if (d_ <= 1) throw std::invalid_argument("Quad: field tag D must be a squarefree integer > 1");
    }
    static long long unify(const Quad& x, const Quad& y, const char* op) {
        if (x.d_ == 0) return y.d_;
        if (y.d_ == 0 || x.d_ == y.d_) return x.d_;
        throw MismatchedField(std::string("Quad: ") + op + " across Q(sqrt(" + std::to_string(x.d_) +
                              ")) and Q(sqrt(" + std::to_string(y.d_) + "))");
    }

    Rational a_, b_;
    long long d_;
};

// Shared scalar-field interface: the series/polynomial templates are generic
// over Rational and Quad through these hooks.
inline Rational conj_scalar(const Rational& x) { return x; }
inline Quad conj_scalar(const Quad& x) { return x.conj(); }

inline Quad promote(const Rational& x) { return Quad(x); }

inline bool scalar_is_zero(const Rational& x) { return x.is_zero(); }
inline bool scalar_is_zero(const Quad& x) { return x.is_zero(); }

inline std::string scalar_str(const Rational& x) { return x.str(); }
inline std::string scalar_str(const Quad& x) { return x.str(); }

// Exact roots of c2*x^2 + c1*x + c0 = 0. Rational roots come back with
// field tag 0; irrational ones over Q(sqrt(D)) with discriminant split as
// s^2*D, D squarefree. First root has positive sqrt(D)-part.
inline std::pair<Quad, Quad> solve_quadratic(const Rational& c2, const Rational& c1, const Rational& c0) {
    if (c2.is_zero()) throw std::invalid_argument("solve_quadratic: leading coefficient is zero");
    Rational disc = c1 * c1 - Rational(4) * c2 * c0;
    Rational shift = -c1 / (Rational(2) * c2);
    if (disc.is_zero()) return {Quad(shift), Quad(shift)};
    if (disc.sign() < 0)
        throw std::domain_error("solve_quadratic: negative discriminant (complex roots unsupported)");
    // disc = num/den in lowest terms; sqrt(disc) = sqrt(num*den)/den.
    mpz_class nd = disc.num() * disc.den();
    SquarefreeSplit sp = squarefree_split(nd);
    Rational half = Rational(sp.s, disc.den()) / (Rational(2) * c2);
    if (sp.d == 1) {
        // Perfect square discriminant: two rational roots.
        return {Quad(shift + half), Quad(shift - half)};
    }
    long long d = sp.d.get_si();
    Rational habs = half.abs();
    return {Quad(shift, habs, d), Quad(shift, -habs, d)};
}

} // namespace periods
