#pragma once

#include <optional>
#include <vector>

#include "periods/qseries.hpp"

namespace periods {

// Dense exact matrix over a field K with just enough operations for the
// basis changes and nullspace computations of the extraction pipeline.
template <class K>
struct Mat {
    long n = 0, m = 0;
    std::vector<std::vector<K>> a;

    Mat() = default;
    Mat(long rows, long cols) : n(rows), m(cols), a(static_cast<size_t>(rows), std::vector<K>(static_cast<size_t>(cols), K{})) {}

    K& at(long i, long j) { return a[static_cast<size_t>(i)][static_cast<size_t>(j)]; }
    const K& at(long i, long j) const { return a[static_cast<size_t>(i)][static_cast<size_t>(j)]; }

    static Mat identity(long n) {
        Mat r(n, n);
        for (long i = 0; i < n; ++i) r.at(i, i) = K(1);
        return r;
    }

    friend Mat operator*(const Mat& x, const Mat& y) {
        Mat r(x.n, y.m);
        for (long i = 0; i < x.n; ++i)
            for (long k = 0; k < x.m; ++k) {
                if (scalar_is_zero(x.at(i, k))) continue;
                for (long j = 0; j < y.m; ++j) r.at(i, j) += x.at(i, k) * y.at(k, j);
            }
        return r;
    }
};

template <class K>
Mat<K> mat_inverse(Mat<K> m) {
    if (m.n != m.m) throw SingularBasisChange("mat_inverse: not square");
    long n = m.n;
    Mat<K> inv = Mat<K>::identity(n);
    for (long col = 0; col < n; ++col) {
        long piv = -1;
        for (long r = col; r < n; ++r)
            if (!scalar_is_zero(m.at(r, col))) { piv = r; break; }
        if (piv < 0) throw SingularBasisChange("mat_inverse: singular matrix");
        std::swap(m.a[static_cast<size_t>(piv)], m.a[static_cast<size_t>(col)]);
        std::swap(inv.a[static_cast<size_t>(piv)], inv.a[static_cast<size_t>(col)]);
        K d = K(1) / m.at(col, col);
        for (long j = 0; j < n; ++j) { m.at(col, j) = m.at(col, j) * d; inv.at(col, j) = inv.at(col, j) * d; }
        for (long r = 0; r < n; ++r) {
            if (r == col || scalar_is_zero(m.at(r, col))) continue;
            K f = m.at(r, col);
            for (long j = 0; j < n; ++j) {
                m.at(r, j) = m.at(r, j) - f * m.at(col, j);
                inv.at(r, j) = inv.at(r, j) - f * inv.at(col, j);
            }
        }
    }
    return inv;
}

// Solves A x = b exactly. Returns particular solution and a nullspace basis,
// or nullopt when inconsistent.
template <class K>
struct LinSolve {
    std::vector<K> particular;
    std::vector<std::vector<K>> kernel;
};

template <class K>
std::optional<LinSolve<K>> solve_linear(Mat<K> A, std::vector<K> b) {
    long n = A.n, m = A.m;
    std::vector<long> pivot_col;
    long row = 0;
    for (long col = 0; col < m && row < n; ++col) {
        long piv = -1;
        for (long r = row; r < n; ++r)
            if (!scalar_is_zero(A.at(r, col))) { piv = r; break; }
        if (piv < 0) continue;
        std::swap(A.a[static_cast<size_t>(piv)], A.a[static_cast<size_t>(row)]);
        std::swap(b[static_cast<size_t>(piv)], b[static_cast<size_t>(row)]);
        K d = K(1) / A.at(row, col);
        for (long j = 0; j < m; ++j) A.at(row, j) = A.at(row, j) * d;
        b[static_cast<size_t>(row)] = b[static_cast<size_t>(row)] * d;
        for (long r = 0; r < n; ++r) {
            if (r == row || scalar_is_zero(A.at(r, col))) continue;
            K f = A.at(r, col);
            for (long j = 0; j < m; ++j) A.at(r, j) = A.at(r, j) - f * A.at(row, j);
            b[static_cast<size_t>(r)] = b[static_cast<size_t>(r)] - f * b[static_cast<size_t>(row)];
        }
        pivot_col.push_back(col);
        ++row;
    }
    for (long r = row; r < n; ++r)
        if (!scalar_is_zero(b[static_cast<size_t>(r)])) return std::nullopt;

    LinSolve<K> out;
    out.particular.assign(static_cast<size_t>(m), K(0));
    for (size_t i = 0; i < pivot_col.size(); ++i)
        out.particular[static_cast<size_t>(pivot_col[i])] = b[i];
    std::vector<bool> is_pivot(static_cast<size_t>(m), false);
    for (long c : pivot_col) is_pivot[static_cast<size_t>(c)] = true;
    for (long freec = 0; freec < m; ++freec) {
        if (is_pivot[static_cast<size_t>(freec)]) continue;
        std::vector<K> v(static_cast<size_t>(m), K(0));
        v[static_cast<size_t>(freec)] = K(1);
        for (size_t i = 0; i < pivot_col.size(); ++i)
            v[static_cast<size_t>(pivot_col[i])] = -A.at(static_cast<long>(i), freec);
        out.kernel.push_back(std::move(v));
    }
    return out;
}

// Reduced echelon basis of the span of exact q-series (coefficients from
// exponent `from` up to the common precision). `coords` expresses each input
// in the returned basis.
struct SeriesEchelon {
    std::vector<QSeries<Rational>> basis;
    std::vector<long> pivots;
    std::vector<std::vector<Rational>> coords;
};

inline SeriesEchelon echelonize_series(const std::vector<QSeries<Rational>>& in, long from = 1) {
    long prec = in.empty() ? 1 : in.front().prec();
    for (auto& s : in) prec = std::min(prec, s.prec());
    SeriesEchelon out;
    for (const auto& s0 : in) {
        QSeries<Rational> s = s0.truncate(prec);
        for (size_t i = 0; i < out.basis.size(); ++i) {
            Rational c = s.coeff(out.pivots[i]);
            if (!c.is_zero()) s -= out.basis[i] * c;
        }
        long piv = -1;
        for (long n = from; n < prec; ++n)
            if (!s.coeff(n).is_zero()) { piv = n; break; }
        if (piv < 0) continue;
        s = s * s.coeff(piv).inverse();
        // keep reduced: clear the new pivot from existing basis vectors
        for (size_t i = 0; i < out.basis.size(); ++i) {
            Rational c = out.basis[i].coeff(piv);
            if (!c.is_zero()) out.basis[i] -= s * c;
        }
        out.basis.push_back(s);
        out.pivots.push_back(piv);
        // maintain pivot order
        for (size_t i = out.basis.size() - 1; i > 0 && out.pivots[i] < out.pivots[i - 1]; --i) {
            std::swap(out.pivots[i], out.pivots[i - 1]);
            std::swap(out.basis[i], out.basis[i - 1]);
        }
    }
    for (const auto& s : in) {
        std::vector<Rational> co;
        for (size_t i = 0; i < out.basis.size(); ++i) co.push_back(s.coeff(out.pivots[i]));
        out.coords.push_back(std::move(co));
    }
    return out;
}

} // namespace periods
