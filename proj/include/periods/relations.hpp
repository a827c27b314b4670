#pragma once

#include "periods/extract.hpp"

namespace periods {

// Character-free form of the 2p-term period relation on Gamma_0^*(p),
// p = 2 or 3: with L = (1,0;-p,1) and g_i the determinant-one representative
// of U_p^{2i}, every period polynomial (any sign character) satisfies
//   sum_i  r | g_i  -  r | (L g_i)  =  0,
// which for p = 2 is the printed 4-term relation with substitutions
// X/(1-2X), (X-1)/(2X-1), X-1. Signs alternate + - + - ...
inline std::vector<std::pair<int, GroupWord>> cocycle_relation_terms(long p) {
    if (p != 2 && p != 3) throw UnsupportedLevel("cocycle relation implemented for p = 2, 3");
    GroupWord L{1, 0, -p, 1, 0};
    std::vector<std::pair<int, GroupWord>> out;
    GroupWord g = GroupWord::identity();
    GroupWord U2 = (GroupWord::up(p) * GroupWord::up(p)).reduced();
    for (long i = 0; i < p; ++i) {
        out.emplace_back(1, g);
        out.emplace_back(-1, (L * g).reduced());
        g = (g * U2).reduced();
    }
    return out;
}

// 2p-term relation on a single extracted period factor:
// sum_{j<2p} eps(p)^j v |_{2-k} U_p^j = 0.
inline bool twisted_cocycle_ok(const LaurentPoly<Quad>& v, long w, int eps, long p) {
    LaurentPoly<Quad> acc;
    GroupWord u = GroupWord::identity();
    for (long j = 0; j < 2 * p; ++j) {
        acc = acc + slash(v, u, w, eps);
        u = (u * GroupWord::up(p)).reduced();
    }
    return acc.is_zero();
}

namespace detail {

// X-side view of a slice: map from X-exponent to the (Y,q)-coefficient.
template <class C>
std::map<long, std::map<long, C>> by_x(const BiLaurent<C>& b) {
    std::map<long, std::map<long, C>> out;
    for (auto& [ij, c] : b.terms()) out[ij.first][ij.second] = c;
    return out;
}

} // namespace detail

// Verifies  sum_i s_i (c_i X + d_i)^{we} C((a_i X + b_i)/(c_i X + d_i)) = 0
// for a slice C (Laurent in X with arbitrary coefficient ring) by clearing
// all linear-form denominators: term i is multiplied by the product of every
// other term's pair (a X + b)(c X + d), turning the identity into an exact
// polynomial one. `we` is the effective weight exponent (k-2, or -2 for the
// head).
template <class C>
bool slice_relation_holds(const BiLaurent<C>& slice, long we,
                          const std::vector<std::pair<int, GroupWord>>& terms) {
    auto xview = detail::by_x(slice);
    // denominator-clearing multiplicity: X-exponents reach down to -mu
    long mu = 1;
    for (auto& [n, col] : xview) {
        (void)col;
        mu = std::max(mu, std::max(-n, n - we));
    }
    // cofactor polynomials: prod over all terms of ((a X + b)(c X + d))^mu,
    // with the i-th pair omitted for term i
    auto linear = [](long long a, long long b) {
        LaurentPoly<Rational> l;
        l.add(1, Rational(static_cast<long>(a)));
        l.add(0, Rational(static_cast<long>(b)));
        return l;
    };
    std::map<long, std::map<long, C>> acc; // X-exponent -> Y-exponent -> coeff
    auto add_at = [&](long xe, long ye, const C& v) {
        auto it = acc[xe].find(ye);
        if (it == acc[xe].end())
            acc[xe].emplace(ye, v);
        else
            it->second = it->second + v;
    };
    for (size_t i = 0; i < terms.size(); ++i) {
        const GroupWord& g = terms[i].second;
        if (g.det() != 1) throw std::invalid_argument("slice_relation_holds: terms must have det 1");
        LaurentPoly<Rational> cof = LaurentPoly<Rational>::monomial(Rational(terms[i].first), 0);
        for (size_t j = 0; j < terms.size(); ++j) {
            if (j == i) continue;
            const GroupWord& h = terms[j].second;
            LaurentPoly<Rational> pair = linear(h.a, h.b) * linear(h.c, h.d);
            for (long e = 0; e < mu; ++e) cof = cof * pair;
        }
        // term contribution: for X-exponent n with coefficient c_n(Y,q),
        //   cof(X) * (aX+b)^{n+mu} (cX+d)^{we+mu-n} * c_n
        for (auto& [n, ycol] : xview) {
            LaurentPoly<Rational> xpoly =
                cof * detail::linear_power<Rational>(g.a, g.b, n + mu) * detail::linear_power<Rational>(g.c, g.d, we + mu - n);
            for (auto& [xe, xc] : xpoly.terms())
                for (auto& [ye, yc] : ycol) add_at(xe, ye, yc * xc);
        }
    }
    for (auto& [xe, col] : acc) {
        (void)xe;
        for (auto& [ye, v] : col) {
            (void)ye;
            if (!coeff_is_zero(v)) return false;
        }
    }
    return true;
}

struct RelationReport {
    bool ok = true;
    std::vector<std::string> failures;

    void check(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            failures.push_back(what);
        }
    }
};

// Coefficientwise 2p-term relation (p = 2, 3) on cuspidal slices plus the
// full-series relation on the complete slices and head, denominators cleared.
inline RelationReport relation_check(long N, long kmax, long qprec) {
    if (N != 2 && N != 3) throw UnsupportedLevel("relation_check: N must be 2 or 3");
    RelationReport rep;
    auto terms = cocycle_relation_terms(N);
    GenFunSlices s = bn_expand(N, kmax, qprec);
    rep.check(slice_relation_holds(s.head, -2, terms), "head relation at N=" + std::to_string(N));
    for (long k = 2; k <= kmax; k += 2) {
        EisPart e = eis_part(N, k, qprec);
        BiQ cusp = cusp_part(s.body.at(k), e, k);
        rep.check(slice_relation_holds(cusp, k - 2, terms),
                  "cusp slice relation at (N,k)=(" + std::to_string(N) + "," + std::to_string(k) + ")");
        rep.check(slice_relation_holds(s.body.at(k), k - 2, terms),
                  "full slice relation at (N,k)=(" + std::to_string(N) + "," + std::to_string(k) + ")");
    }
    return rep;
}

} // namespace periods
