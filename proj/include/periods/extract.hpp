#pragma once

#include <optional>
#include <string>

#include "periods/genfun.hpp"
#include "periods/linalg.hpp"
#include "periods/poly.hpp"

namespace periods {

enum class Parity { Even, Odd };

// Basis of V^{parity,eps}_{w,N} = parity part of Ker(1 + eps(N) W_N, V_w):
// vectors X^n - (-1)^n eps N^{w/2-n} X^{w-n} for n < w/2 of the right parity,
// normalized integral-primitive with positive leading coefficient and ordered
// by descending degree, plus the middle monomial X^{w/2} when its sign allows.
inline std::vector<LaurentPoly<Rational>> parity_basis(long N, long w, int eps, Parity parity) {
    if (!is_squarefree(N) || N < 1) throw UnsupportedLevel("parity_basis: level must be squarefree");
    if (w < 0 || w % 2 != 0) throw UnsupportedLevel("parity_basis: w must be even and >= 0");
    std::vector<LaurentPoly<Rational>> out;
    long start = (parity == Parity::Even) ? 0 : 1;
    for (long n = start; n < w / 2; n += 2) {
        LaurentPoly<Rational> v;
        v.add(n, Rational(1));
        Rational c = -Rational((n % 2 == 0) ? 1 : -1) * Rational(eps) * Rational::int_pow(N, w / 2 - n);
        v.add(w - n, c);
        if (c.sign() < 0) v = Rational(-1) * v;
        out.push_back(v);
    }
    bool mid_parity_ok = (parity == Parity::Even) == (w / 2 % 2 == 0);
    bool mid_sign_ok = ((w / 2 % 2 == 0) ? eps : -eps) == -1;
    if (w >= 0 && mid_parity_ok && mid_sign_ok) out.push_back(LaurentPoly<Rational>::monomial(Rational(1), w / 2));
    return out;
}

// The even-odd cuspidal slice written over the tensor bases
// (V^{ev,+} + V^{ev,-})(X) x (V^{od,+} + V^{od,-})(Y): per epsilon-pair a
// matrix of q-series. Cross-sign blocks must vanish.
struct BlockDecomp {
    long N, k;
    std::vector<LaurentPoly<Rational>> xplus, xminus, yplus, yminus;
    Mat<QS> pp, pm, mp, mm; // (x-sign, y-sign) blocks
};

namespace detail {
inline Mat<Rational> basis_matrix(const std::vector<LaurentPoly<Rational>>& b1,
                                  const std::vector<LaurentPoly<Rational>>& b2,
                                  const std::vector<long>& exps) {
    Mat<Rational> e(static_cast<long>(exps.size()), static_cast<long>(b1.size() + b2.size()));
    for (size_t col = 0; col < b1.size() + b2.size(); ++col) {
        const auto& v = col < b1.size() ? b1[col] : b2[col - b1.size()];
        for (size_t row = 0; row < exps.size(); ++row) e.at(static_cast<long>(row), static_cast<long>(col)) = v.get(exps[row]);
    }
    return e;
}
} // namespace detail

inline BlockDecomp assemble_matrices(const BiQ& evenodd_cusp, long N, long k, long qprec) {
    long w = k - 2;
    BlockDecomp out;
    out.N = N;
    out.k = k;
    out.xplus = parity_basis(N, w, 1, Parity::Even);
    out.xminus = parity_basis(N, w, -1, Parity::Even);
    out.yplus = parity_basis(N, w, 1, Parity::Odd);
    out.yminus = parity_basis(N, w, -1, Parity::Odd);

    std::vector<long> xexps, yexps;
    for (long e = 0; e <= w; e += 2) xexps.push_back(e);
    for (long e = 1; e <= w; e += 2) yexps.push_back(e);
    long nx = static_cast<long>(xexps.size()), ny = static_cast<long>(yexps.size());
    if (nx != static_cast<long>(out.xplus.size() + out.xminus.size()) ||
        ny != static_cast<long>(out.yplus.size() + out.yminus.size()))
        throw SingularBasisChange("assemble_matrices: basis dimension mismatch");

    Mat<Rational> Einv = mat_inverse(detail::basis_matrix(out.xplus, out.xminus, xexps));
    Mat<Rational> Finv = mat_inverse(detail::basis_matrix(out.yplus, out.yminus, yexps));

    // monomial-coordinate matrix of series
    Mat<QS> M(nx, ny);
    for (long a = 0; a < nx; ++a)
        for (long b = 0; b < ny; ++b) {
            const QS* s = evenodd_cusp.find(xexps[static_cast<size_t>(a)], yexps[static_cast<size_t>(b)]);
            M.at(a, b) = s ? *s : QS(qprec);
        }
    // C = Einv * M * Finv^T
    Mat<QS> C(nx, ny);
    for (long u = 0; u < nx; ++u)
        for (long v = 0; v < ny; ++v) {
            QS acc(qprec);
            for (long a = 0; a < nx; ++a) {
                if (Einv.at(u, a).is_zero()) continue;
                for (long b = 0; b < ny; ++b) {
                    if (Finv.at(v, b).is_zero()) continue;
                    acc += M.at(a, b) * (Einv.at(u, a) * Finv.at(v, b));
                }
            }
            C.at(u, v) = acc;
        }

    long px = static_cast<long>(out.xplus.size()), py = static_cast<long>(out.yplus.size());
    auto block = [&](long r0, long r1, long c0, long c1) {
        Mat<QS> B(r1 - r0, c1 - c0);
        for (long i = r0; i < r1; ++i)
            for (long j = c0; j < c1; ++j) B.at(i - r0, j - c0) = C.at(i, j);
        return B;
    };
    out.pp = block(0, px, 0, py);
    out.pm = block(0, px, py, ny);
    out.mp = block(px, nx, 0, py);
    out.mm = block(px, nx, py, ny);
    return out;
}

inline bool block_is_zero(const Mat<QS>& b) {
    for (auto& row : b.a)
        for (auto& s : row)
            if (!s.is_zero()) return false;
    return true;
}

// Recovered Hecke form: q-expansion over Q or Q(sqrt(D)) plus the rank-one
// period tensor P(X) (x) Q(Y).
struct EigenformRecord {
    long N = 1;
    long k = 2;
    int fricke = 1;                    // eps(N)
    std::map<long, int> eps;           // per-prime signs where known
    long long D = 0;                   // 0 = rational coefficient field
    QSeries<Quad> q;                   // a_1 = 1
    LaurentPoly<Quad> P, Q;            // R~_f = P (x) Q

    BiLaurent<Quad> tensor() const { return periods::tensor(P, Q); }
};

inline EigenformRecord record_galois_conj(const EigenformRecord& r) {
    EigenformRecord c = r;
    auto cj = [](const Quad& x) { return x.conj(); };
    c.q = r.q.map<Quad>(cj);
    c.P = r.P.map<Quad>(cj);
    c.Q = r.Q.map<Quad>(cj);
    return c;
}

enum class FactorStatus { Empty, Ok, Degenerate, RankTooHigh, NotRankOne };

struct FactorResult {
    FactorStatus status = FactorStatus::Empty;
    int rank = 0;
    std::vector<EigenformRecord> forms;
    LaurentPoly<Rational> shared;      // populated for Degenerate blocks
    Poly<Rational> det_quadratic;      // first nonzero 2x2 minor of a(lambda), rank-2 case
    std::string note;
};

namespace detail {

inline LaurentPoly<Quad> combine_basis(const std::vector<LaurentPoly<Rational>>& basis,
                                       const std::vector<Quad>& coords) {
    LaurentPoly<Quad> out;
    for (size_t i = 0; i < basis.size(); ++i) {
        LaurentPoly<Quad> b = basis[i].map<Quad>([](const Rational& r) { return Quad(r); });
        out = out + coords[i] * b;
    }
    return out;
}

// Normalizes the split (P,Q) -> (cP, Q/c): rational tensors become
// integral-primitive with positive leading coefficient in P; quadratic ones
// get a monic leading coefficient in P.
inline void normalize_split(LaurentPoly<Quad>& P, LaurentPoly<Quad>& Q) {
    bool rational = true;
    for (auto& [e, c] : P.terms())
        if (!c.is_rational()) rational = false;
    Quad scale(1);
    if (rational) {
        LaurentPoly<Rational> pr;
        for (auto& [e, c] : P.terms()) pr.add(e, c.a());
        LaurentPoly<Rational> copy = pr;
        Rational s = make_primitive(copy);
        scale = Quad(s);
    } else {
        scale = P.terms().rbegin()->second.inverse();
    }
    P = scale * P;
    Q = scale.inverse() * Q;
}

// Rank-one factorization of a scalar matrix: M_uv = p_u q_v. Returns false if
// some 2x2 minor is nonzero.
inline bool rank_one_split(const Mat<Quad>& M, std::vector<Quad>& p, std::vector<Quad>& q) {
    long pr = -1, pc = -1;
    for (long i = 0; i < M.n && pr < 0; ++i)
        for (long j = 0; j < M.m; ++j)
            if (!M.at(i, j).is_zero()) { pr = i; pc = j; break; }
    if (pr < 0) return false;
    for (long i = 0; i < M.n; ++i)
        for (long j = 0; j < M.m; ++j) {
            Quad minor = M.at(i, j) * M.at(pr, pc) - M.at(i, pc) * M.at(pr, j);
            if (!minor.is_zero()) return false;
        }
    p.assign(static_cast<size_t>(M.n), Quad(0));
    q.assign(static_cast<size_t>(M.m), Quad(0));
    Quad piv = M.at(pr, pc);
    for (long i = 0; i < M.n; ++i) p[static_cast<size_t>(i)] = M.at(i, pc);
    for (long j = 0; j < M.m; ++j) q[static_cast<size_t>(j)] = M.at(pr, j) / piv;
    return true;
}

} // namespace detail

// Theorem-2-style factorization of one sign block. The q-series entries must
// span a space of dimension r <= 2; r = 1 gives a single eigenform, r = 2
// splits through the roots of det a(lambda) = det(M2 - lambda M1).
inline FactorResult factor_rank_one(const Mat<QS>& block0, long N, long k, int fricke,
                                    const std::vector<LaurentPoly<Rational>>& xbasis,
                                    const std::vector<LaurentPoly<Rational>>& ybasis,
                                    Rational prefactor) {
    FactorResult out;
    // rescale by (k-2)! so the block carries R~-coefficients directly
    Mat<QS> block = block0;
    for (auto& row : block.a)
        for (auto& s : row) s = s * prefactor;
    std::vector<QS> entries;
    for (auto& row : block.a)
        for (auto& s : row) entries.push_back(s);
    SeriesEchelon ech = echelonize_series(entries, 1);
    long r = static_cast<long>(ech.basis.size());
    out.rank = static_cast<int>(r);
    if (r == 0) {
        out.status = FactorStatus::Empty;
        return out;
    }
    if (r > 2) {
        out.status = FactorStatus::RankTooHigh;
        out.note = "series span has rank " + std::to_string(r);
        return out;
    }

    auto make_record = [&](long long D, const QSeries<Quad>& f, const Mat<Quad>& coeff) {
        EigenformRecord rec;
        rec.N = N;
        rec.k = k;
        rec.fricke = fricke;
        rec.D = D;
        if (is_squarefree(N) && prime_divisors(N).size() == 1) rec.eps[prime_divisors(N)[0]] = fricke;
        rec.q = f;
        std::vector<Quad> p, q;
        if (!detail::rank_one_split(coeff, p, q)) return std::optional<EigenformRecord>{};
        rec.P = detail::combine_basis(xbasis, p);
        rec.Q = detail::combine_basis(ybasis, q);
        detail::normalize_split(rec.P, rec.Q);
        return std::optional<EigenformRecord>{rec};
    };

    if (r == 1) {
        // every entry is c_uv * F1 with c_uv = coordinate in the echelon basis
        Mat<Quad> C(block.n, block.m);
        for (long i = 0; i < block.n; ++i)
            for (long j = 0; j < block.m; ++j)
                C.at(i, j) = Quad(ech.coords[static_cast<size_t>(i * block.m + j)][0]);
        if (ech.pivots[0] != 1) {
            out.status = FactorStatus::NotRankOne;
            out.note = "spanning series vanishes at q^1";
            return out;
        }
        QSeries<Quad> f = ech.basis[0].map<Quad>([](const Rational& x) { return Quad(x); });
        auto rec = make_record(0, f, C);
        if (!rec) {
            out.status = FactorStatus::NotRankOne;
            out.note = "rank-1 block fails the proportionality test";
            return out;
        }
        out.status = FactorStatus::Ok;
        out.forms.push_back(*rec);
        return out;
    }

    // r = 2
    if (block.n < 2 || block.m < 2) {
        out.status = FactorStatus::Degenerate;
        out.note = "two eigenforms share the single " + std::string(block.m < 2 ? "Y" : "X") +
                   "-side factor; the rank-one decomposition is not unique";
        out.shared = (block.m < 2) ? ybasis[0] : xbasis[0];
        return out;
    }
    if (ech.pivots[0] != 1) {
        out.status = FactorStatus::NotRankOne;
        out.note = "echelon basis does not start at q^1";
        return out;
    }
    Mat<Quad> M1(block.n, block.m), M2(block.n, block.m);
    for (long i = 0; i < block.n; ++i)
        for (long j = 0; j < block.m; ++j) {
            const auto& co = ech.coords[static_cast<size_t>(i * block.m + j)];
            M1.at(i, j) = Quad(co[0]);
            M2.at(i, j) = Quad(co[1]);
        }
    // a(lambda) = M2 - lambda M1; rank <= 1 at the eigenvalues: gcd of all
    // 2x2 minors is the characteristic quadratic.
    Poly<Rational> gcd;
    for (long i1 = 0; i1 < block.n; ++i1)
        for (long i2 = i1 + 1; i2 < block.n; ++i2)
            for (long j1 = 0; j1 < block.m; ++j1)
                for (long j2 = j1 + 1; j2 < block.m; ++j2) {
                    auto lin = [&](long i, long j) {
                        return Poly<Rational>(std::vector<Rational>{M2.at(i, j).a(), -M1.at(i, j).a()});
                    };
                    Poly<Rational> minor = lin(i1, j1) * lin(i2, j2) - lin(i1, j2) * lin(i2, j1);
                    if (out.det_quadratic.is_zero() && !minor.is_zero()) out.det_quadratic = minor;
                    gcd = poly_gcd(gcd, minor);
                }
    if (gcd.degree() != 2) {
        out.status = FactorStatus::Degenerate;
        out.note = "minor gcd has degree " + std::to_string(gcd.degree()) +
                   "; eigenvalues are not pinned by the rank-one condition";
        return out;
    }
    auto [l1, l2] = solve_quadratic(gcd.coeff(2), gcd.coeff(1), gcd.coeff(0));
    if (l1 == l2) {
        out.status = FactorStatus::Degenerate;
        out.note = "double eigenvalue";
        return out;
    }
    long long D = l1.d();
    auto promote_mat = [&](const Mat<Quad>& m) { return m; };
    (void)promote_mat;
    QSeries<Quad> F1 = ech.basis[0].map<Quad>([](const Rational& x) { return Quad(x); });
    QSeries<Quad> F2 = ech.basis[1].map<Quad>([](const Rational& x) { return Quad(x); });
    Quad lam[2] = {l1, l2};
    for (int t = 0; t < 2; ++t) {
        Quad li = lam[t], lo = lam[1 - t];
        Mat<Quad> coeff(block.n, block.m);
        Quad denom = li - lo;
        for (long i = 0; i < block.n; ++i)
            for (long j = 0; j < block.m; ++j)
                coeff.at(i, j) = (M2.at(i, j) - lo * M1.at(i, j)) / denom;
        QSeries<Quad> f = F1 + li * F2;
        auto rec = make_record(D, f, coeff);
        if (!rec) {
            out.status = FactorStatus::NotRankOne;
            out.note = "a(lambda) is not rank one at an eigenvalue";
            return out;
        }
        out.forms.push_back(*rec);
    }
    out.status = FactorStatus::Ok;
    return out;
}

// Blind extraction of all Hecke eigenforms visible in one weight of the
// cuspidal generating function.
struct WeightExtraction {
    long N, k;
    FactorResult plus, minus;
    bool cross_blocks_zero = true;
    std::vector<EigenformRecord> forms;
};

inline WeightExtraction extract_weight(const BiQ& cusp, long N, long k, long qprec) {
    WeightExtraction out{N, k, {}, {}, true, {}};
    BlockDecomp bd = assemble_matrices(cusp.even_x_part(), N, k, qprec);
    out.cross_blocks_zero = block_is_zero(bd.pm) && block_is_zero(bd.mp);
    Rational pref = factorial(k - 2); // slice carries R~/(k-2)!
    out.plus = factor_rank_one(bd.pp, N, k, 1, bd.xplus, bd.yplus, pref);
    out.minus = factor_rank_one(bd.mm, N, k, -1, bd.xminus, bd.yminus, pref);
    for (auto& f : out.plus.forms) out.forms.push_back(f);
    for (auto& f : out.minus.forms) out.forms.push_back(f);
    return out;
}

// ---------------------------------------------------------------------------
// Haberland-type pairings (levels 2, 3) and the level-5 cocycle machinery.

// Phi[r1(X) r2(Y)] = (1/2p) (r1 | A_p, r2)_{V_w} with the eps-twisted action.
inline Quad phi_pairing(long p, const LaurentPoly<Quad>& P, const LaurentPoly<Quad>& Q, long w, int eps) {
    auto ap = atkin_lehner_element<Quad>(p);
    LaurentPoly<Quad> Pa = apply_group_ring(P, ap, w, eps);
    return pair_vw(Pa, Q, w) * Quad(Rational(1, 2 * p));
}

// Companion polynomial r* of r on Gamma_0^*(5): the unique (odd case) or
// m-parameterized (even case with eps = (-1)^{k/2}) solution of
// (r(X) - r*(2X-1)) | (1 + A) = 0 inside V^{parity,eps}_{w,5}.
struct RStarSolution {
    LaurentPoly<Quad> particular;
    std::vector<LaurentPoly<Quad>> kernel; // directions inside the basis span
};

namespace detail {
// P(aX + b) for a true polynomial P.
template <class K>
LaurentPoly<K> subst_affine(const LaurentPoly<K>& P, long a, long b) {
    if (!P.exponents_within(0, 1 << 20))
        throw NonPolynomialResult("subst_affine: Laurent tails unsupported");
    LaurentPoly<K> out;
    for (auto& [n, c] : P.terms()) {
        LaurentPoly<K> pw = linear_power<K>(a, b, n);
        out = out + c * pw;
    }
    return out;
}
} // namespace detail

inline RStarSolution solve_rstar(const LaurentPoly<Quad>& r, long w, int eps, Parity parity) {
    GroupWord A{2, -1, 5, -2, 0};
    std::vector<LaurentPoly<Rational>> basis = parity_basis(5, w, eps, parity);
    if (basis.empty()) throw NoSolution("solve_rstar: empty basis");
    // unknown coordinates x: sum_v x_v 2^{-w/2} (b_v(2X-1) | (1+A)) = r | (1+A);
    // the companion is taken with respect to the determinant-normalized change
    // of variable, which is the scaling of the printed coefficient relations.
    auto one_plus_a = [&](const LaurentPoly<Quad>& P) {
        return P + slash(P, A, w, 1);
    };
    std::vector<long> exps;
    for (long e = 0; e <= w; ++e) exps.push_back(e);
    Quad half_det = Quad(Rational::int_pow(2, -(w / 2)));
    Mat<Quad> Amat(static_cast<long>(exps.size()), static_cast<long>(basis.size()));
    for (size_t v = 0; v < basis.size(); ++v) {
        LaurentPoly<Quad> bq = basis[v].map<Quad>([](const Rational& x) { return Quad(x); });
        LaurentPoly<Quad> img = one_plus_a(half_det * detail::subst_affine(bq, 2, -1));
        for (size_t row = 0; row < exps.size(); ++row) Amat.at(static_cast<long>(row), static_cast<long>(v)) = img.get(exps[row]);
    }
    LaurentPoly<Quad> rhs_poly = one_plus_a(r);
    std::vector<Quad> rhs;
    for (long e : exps) rhs.push_back(rhs_poly.get(e));
    auto sol = solve_linear(Amat, rhs);
    if (!sol) throw NoSolution("solve_rstar: inconsistent system");
    // The companion carries the Atkin-Lehner character of the B-letter it
    // eliminates: r* is -eps times the raw solution.
    Quad sign(Rational(-eps));
    RStarSolution out;
    std::vector<Quad> pc(sol->particular.begin(), sol->particular.end());
    out.particular = sign * detail::combine_basis(basis, pc);
    for (auto& kv : sol->kernel) out.kernel.push_back(detail::combine_basis(basis, kv));
    return out;
}

// Level-5 Haberland-type pairing on a tensor P (x) Q (P even, Q odd):
//   -(1/2) [ (P, Q*|(T - T^{-1})) + (Q, P*|(T - T^{-1})) ],
// with the companions of solve_rstar. `m` shifts the even companion along its
// kernel direction when one exists. The analogous level-2/3 functional equals
// 1 on every Hecke tensor; here the value is reported as computed, see
// hab5_check.
inline Quad phi5_pairing(const LaurentPoly<Quad>& P, const LaurentPoly<Quad>& Q, long w, int eps,
                         const Rational& m = Rational(0)) {
    RStarSolution ps = solve_rstar(P, w, eps, Parity::Even);
    RStarSolution qs = solve_rstar(Q, w, eps, Parity::Odd);
    LaurentPoly<Quad> pstar = ps.particular;
    if (!ps.kernel.empty()) pstar = pstar + Quad(m) * ps.kernel[0];
    GroupWord T = GroupWord::translation(1), Ti = GroupWord::translation(-1);
    auto tmt = [&](const LaurentPoly<Quad>& R) { return slash(R, T, w, 1) - slash(R, Ti, w, 1); };
    Quad acc = pair_vw(P, tmt(qs.particular), w) + pair_vw(Q, tmt(pstar), w);
    return Quad(Rational(-1, 2)) * acc;
}

// Affine decomposition of the self-pairing in the kernel parameter:
// phi5(m) = base + slope * m.
struct Phi5Affine {
    Quad base;
    Quad slope;
    bool has_kernel = false;

    Quad at(const Quad& m) const { return base + slope * m; }
    // parameter normalizing the self-pairing to 1 (kernel case only)
    Quad normalizing_m() const {
        if (slope.is_zero()) throw NoSolution("phi5: no kernel parameter to normalize with");
        return (Quad(1) - base) / slope;
    }
};

inline Phi5Affine phi5_affine(const LaurentPoly<Quad>& P, const LaurentPoly<Quad>& Q, long w, int eps) {
    RStarSolution ps = solve_rstar(P, w, eps, Parity::Even);
    RStarSolution qs = solve_rstar(Q, w, eps, Parity::Odd);
    GroupWord T = GroupWord::translation(1), Ti = GroupWord::translation(-1);
    auto tmt = [&](const LaurentPoly<Quad>& R) { return slash(R, T, w, 1) - slash(R, Ti, w, 1); };
    Phi5Affine out;
    out.base = Quad(Rational(-1, 2)) * (pair_vw(P, tmt(qs.particular), w) + pair_vw(Q, tmt(ps.particular), w));
    out.has_kernel = !ps.kernel.empty();
    out.slope = out.has_kernel ? Quad(Rational(-1, 2)) * pair_vw(Q, tmt(ps.kernel[0]), w) : Quad(0);
    return out;
}

// Full symmetrized pairing between two forms of the same (k, eps):
// (r_f, r_g*|(T-T^{-1})) + (r_g, r_f*|(T-T^{-1})) on parity survivors, with the
// even companions shifted by the given kernel parameters.
inline Quad hab5_cross(const EigenformRecord& f, const EigenformRecord& g, int eps,
                       const Quad& mf, const Quad& mg) {
    long w = f.k - 2;
    GroupWord T = GroupWord::translation(1), Ti = GroupWord::translation(-1);
    auto tmt = [&](const LaurentPoly<Quad>& R) { return slash(R, T, w, 1) - slash(R, Ti, w, 1); };
    RStarSolution psF = solve_rstar(f.P, w, eps, Parity::Even);
    RStarSolution qsF = solve_rstar(f.Q, w, eps, Parity::Odd);
    RStarSolution psG = solve_rstar(g.P, w, eps, Parity::Even);
    RStarSolution qsG = solve_rstar(g.Q, w, eps, Parity::Odd);
    LaurentPoly<Quad> PstarF = psF.particular;
    if (!psF.kernel.empty()) PstarF = PstarF + mf * psF.kernel[0];
    LaurentPoly<Quad> PstarG = psG.particular;
    if (!psG.kernel.empty()) PstarG = PstarG + mg * psG.kernel[0];
    return pair_vw(f.P, tmt(qsG.particular), w) + pair_vw(f.Q, tmt(PstarG), w) +
           pair_vw(g.P, tmt(qsF.particular), w) + pair_vw(g.Q, tmt(PstarF), w);
}

} // namespace periods
