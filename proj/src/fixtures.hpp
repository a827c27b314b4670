#pragma once

#include "periods/extract.hpp"

namespace periods::fixtures {

// One row of the period-polynomial tables: level, weight, Fricke sign of the
// eigenform, coefficient field, the factored two-variable period polynomial
// pref * P(X) * Q(Y), and the listed q-expansion prefix (index n = a_n).
struct TableRow {
    std::string label;
    long N;
    long k;
    int fricke;
    std::map<long, int> eps; // full character where the level is composite
    long long D;             // 0 = rational
    Quad pref;
    LaurentPoly<Quad> P, Q;
    std::vector<Quad> qexp; // qexp[0] unused

    BiLaurent<Quad> tensor() const {
        return periods::tensor(pref * P, Q);
    }
};

// Rows of the table for one level (2, 3, 5, 6 or 7). Level 7 includes the
// degenerate-family row for f6 (marked by `degenerate_family`).
std::vector<TableRow> table_rows(long N);

// The f6 family row at level 7 (weight 6, minus space): the printed tensor of
// f6; its conjugate pairs with f6^sigma. Exposed separately because the
// factorization is non-unique and verification goes through the Galois-trace
// system.
TableRow f6_row();

// Level-1 paper normalization of the discriminant-form period factors:
// P(X) = (36/691)(X^10-1) - X^2(X^2-1)^3, Q(Y) = Y(Y^2-1)^2(Y^2-4)(4Y^2-1).
LaurentPoly<Rational> delta_even_factor();
LaurentPoly<Rational> delta_odd_factor();

} // namespace periods::fixtures
