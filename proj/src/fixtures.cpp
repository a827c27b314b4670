#include "fixtures.hpp"

namespace periods::fixtures {

namespace {

LaurentPoly<Quad> to_quad(const LaurentPoly<Rational>& p) {
    return p.map<Quad>([](const Rational& r) { return Quad(r); });
}

LaurentPoly<Quad> combo(const std::vector<LaurentPoly<Rational>>& basis, std::vector<Quad> cs) {
    LaurentPoly<Quad> out;
    for (size_t i = 0; i < cs.size(); ++i) out = out + cs[i] * to_quad(basis[i]);
    return out;
}

std::vector<Quad> qs(std::initializer_list<long> v) {
    std::vector<Quad> out{Quad(0)};
    for (long x : v) out.emplace_back(x);
    return out;
}

Quad rq(long n, long d) { return Quad(Rational(n, d)); }

} // namespace

std::vector<TableRow> table_rows(long N) {
    std::vector<TableRow> rows;
    auto eb = [&](long w, int eps) { return parity_basis(N, w, eps, Parity::Even); };
    auto fb = [&](long w, int eps) { return parity_basis(N, w, eps, Parity::Odd); };

    if (N == 2) {
        rows.push_back({"Delta_8^+", 2, 8, 1, {{2, 1}}, 0, Quad(1),
                        combo(eb(6, 1), {rq(1, 17), Quad(-1)}),
                        combo(fb(6, 1), {Quad(1), Quad(-5)}),
                        qs({1, -8, 12, 64, -210, -96})});
        rows.push_back({"Delta_10^-", 2, 10, -1, {{2, -1}}, 0, rq(-2, 3),
                        combo(eb(8, -1), {rq(3, 31), Quad(-2), Quad(7)}),
                        combo(fb(8, -1), {Quad(1), Quad(-7)}),
                        qs({1, 16, -156, 256, 870, -2496})});
        rows.push_back({"Delta_12^+", 2, 12, 1, {{2, 1}}, 0, rq(1, 8),
                        combo(eb(10, 1), {rq(33, 691), Quad(-1), Quad(4)}),
                        combo(fb(10, 1), {Quad(17), Quad(-125), Quad(336)}),
                        qs({1, 40, 252, -3008, 4830})});
        rows.push_back({"Delta_12^-", 2, 12, -1, {{2, -1}}, 0, rq(1, 8),
                        combo(eb(10, -1), {rq(279, 691), Quad(-7), Quad(12)}),
                        combo(fb(10, -1), {Quad(1), Quad(-5)}),
                        qs({1, -88, 252, 64, 4830})});
        rows.push_back({"Delta_14^+", 2, 14, 1, {{2, 1}}, 0, rq(-1, 8),
                        combo(eb(12, 1), {rq(9, 43), Quad(-4), Quad(11)}),
                        combo(fb(12, 1), {Quad(9), Quad(-55), Quad(66)}),
                        qs({1, -64, -1836, 4096, 3990, 117504})});
        rows.push_back({"Delta_14^-", 2, 14, -1, {{2, -1}}, 0, rq(-11, 8),
                        combo(eb(12, -1), {rq(25, 127), Quad(-4), Quad(15), Quad(-32)}),
                        combo(fb(12, -1), {Quad(1), Quad(-7), Quad(18)}),
                        qs({1, 64, 1236, 4096, -57450, 79104})});
        rows.push_back({"Delta_16^+", 2, 16, 1, {{2, 1}}, 0, rq(77, 75),
                        combo(eb(14, 1), {rq(105, 257), Quad(-8), Quad(26), Quad(-39)}),
                        combo(fb(14, 1), {Quad(2), Quad(-13), Quad(26), Quad(-39)}),
                        qs({1, -128, 6252, 16384, 90510, -800256})});
    } else if (N == 3) {
        rows.push_back({"Delta_6^-", 3, 6, -1, {{3, -1}}, 0, rq(-2, 3),
                        combo(eb(4, -1), {rq(1, 13), Quad(-1)}),
                        combo(fb(4, -1), {Quad(1)}),
                        qs({1, -6, 9, 4, 6, -54, -40})});
        rows.push_back({"Delta_8^+", 3, 8, 1, {{3, 1}}, 0, rq(1, 3),
                        combo(eb(6, 1), {rq(2, 41), Quad(-1)}),
                        combo(fb(6, 1), {Quad(3), Quad(-20)}),
                        qs({1, 6, -27, -92, 390})});
        rows.push_back({"Delta_10^+", 3, 10, 1, {{3, 1}}, 0, rq(-4, 27),
                        combo(eb(8, 1), {rq(4, 61), Quad(-1)}),
                        combo(fb(8, 1), {Quad(2), Quad(-7)}),
                        qs({1, -36, -81, 784, -1314})});
        rows.push_back({"Delta_10^-", 3, 10, -1, {{3, -1}}, 0, rq(-14, 27),
                        combo(eb(8, -1), {rq(1, 11), Quad(-2), Quad(9)}),
                        combo(fb(8, -1), {Quad(1), Quad(-8)}),
                        qs({1, 18, 81, -188, -1530})});
    } else if (N == 5) {
        rows.push_back({"Delta_4^+", 5, 4, 1, {{5, 1}}, 0, rq(4, 65),
                        combo(eb(2, 1), {Quad(1)}),
                        combo(fb(2, 1), {Quad(1)}),
                        qs({1, -4, 2, 8, -5, -8, 6})});
        rows.push_back({"Delta_6^-", 5, 6, -1, {{5, -1}}, 0, rq(-6, 5),
                        combo(eb(4, -1), {rq(5, 93), Quad(-1)}),
                        combo(fb(4, -1), {Quad(1)}),
                        qs({1, 2, -4, -28, 25, -8, 192})});
        rows.push_back({"Delta_8^-", 5, 8, -1, {{5, -1}}, 0, rq(3, 25),
                        combo(eb(6, -1), {rq(6, 65), Quad(-1)}),
                        combo(fb(6, -1), {Quad(1)}),
                        qs({1, -14, -48, 68, 125, 672, -1644})});
        Quad s19 = Quad::sqrt_d(19);
        rows.push_back({"f_8", 5, 8, 1, {{5, 1}}, 19, (Quad(11) - Quad(7) / s19) / Quad(375),
                        combo(eb(6, 1), {Quad(4) / (Quad(97) + s19), Quad(-1)}),
                        combo(fb(6, 1), {Quad(15), -(Quad(137) + s19)}),
                        {Quad(0), Quad(1), Quad(10) + Quad(2) * s19, Quad(10) - Quad(16) * s19,
                         Quad(48) + Quad(40) * s19}});
    } else if (N == 6) {
        rows.push_back({"Delta_6^{-,+}", 6, 6, -1, {{2, -1}, {3, 1}}, 0, rq(-2, 63),
                        combo(eb(4, -1), {Quad(1), Quad(-21)}),
                        combo(fb(4, -1), {Quad(1)}),
                        qs({1, 4, -9, 16, -66, -36, 176})});
    } else if (N == 7) {
        // the weight-4 newform sits in the Fricke +1 eigenspace: its even
        // period factor 7X^2-1 is Ker(1+W_7)-symmetric and a_7 = -7
        rows.push_back({"Delta_4^-", 7, 4, 1, {{7, 1}}, 0, rq(4, 35),
                        combo(eb(2, 1), {Quad(1)}),
                        combo(fb(2, 1), {Quad(1)}),
                        qs({1, -1, -2, -7, 16, 2, -7})});
        rows.push_back({"Delta_6^+", 7, 6, 1, {{7, 1}}, 0, rq(-8, 43 * 49),
                        combo(eb(4, 1), {Quad(1)}),
                        combo(fb(4, 1), {Quad(1)}),
                        qs({1, -10, -14, 68, -56, 140, -49})});
    } else {
        throw UnsupportedLevel("table_rows: no table for level " + std::to_string(N));
    }
    return rows;
}

TableRow f6_row() {
    Quad s57 = Quad::sqrt_d(57);
    Quad s319 = s57 / Quad(19); // sqrt(3/19)
    auto eb = parity_basis(7, 4, -1, Parity::Even);
    auto fb = parity_basis(7, 4, -1, Parity::Odd);
    return {"f_6", 7, 6, -1, {{7, -1}}, 57, (Quad(5) - Quad(3) * s319) / Quad(7),
            combo(eb, {(Quad(-17) + s319) / Quad(392), Quad(1)}),
            combo(fb, {Quad(1)}),
            {Quad(0), Quad(1), (Quad(9) + s57) / Quad(2), Quad(-3) * (Quad(1) + s57),
             (Quad(5) + Quad(9) * s57) / Quad(2)}};
}

LaurentPoly<Rational> delta_even_factor() {
    // (36/691)(X^10 - 1) - X^2 (X^2-1)^3
    LaurentPoly<Rational> p;
    p.add(10, Rational(36, 691));
    p.add(0, Rational(-36, 691));
    LaurentPoly<Rational> x2 = LaurentPoly<Rational>::monomial(Rational(1), 2);
    LaurentPoly<Rational> f;
    f.add(2, Rational(1));
    f.add(0, Rational(-1));
    return p - x2 * f * f * f;
}

LaurentPoly<Rational> delta_odd_factor() {
    // Y (Y^2-1)^2 (Y^2-4)(4Y^2-1)
    LaurentPoly<Rational> y = LaurentPoly<Rational>::monomial(Rational(1), 1);
    LaurentPoly<Rational> a, b, c;
    a.add(2, Rational(1));
    a.add(0, Rational(-1));
    b.add(2, Rational(1));
    b.add(0, Rational(-4));
    c.add(2, Rational(4));
    c.add(0, Rational(-1));
    return y * a * a * b * c;
}

} // namespace periods::fixtures
