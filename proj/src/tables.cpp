#include "tables.hpp"

#include <numeric>
#include <set>
#include <sstream>

namespace periods::tables {

namespace {

using fixtures::TableRow;

long table_kmax(long N) {
    switch (N) {
        case 2: return 16;
        case 3: return 10;
        case 5: return 8;
        case 6: return 6;
        case 7: return 6;
        default: throw UnsupportedLevel("tables: supported levels are 2, 3, 5, 6, 7");
    }
}

LaurentPoly<Rational> to_rat_poly(const LaurentPoly<Quad>& p) {
    return p.map<Rational>([](const Quad& x) {
        if (!x.is_rational()) throw std::logic_error("expected rational polynomial");
        return x.a();
    });
}

QSeries<Rational> to_rat_series(const QSeries<Quad>& s) {
    return s.map<Rational>([](const Quad& x) {
        if (!x.is_rational()) throw std::logic_error("expected rational series");
        return x.a();
    });
}

std::string render_record(const Quad& pref, const LaurentPoly<Quad>& P, const LaurentPoly<Quad>& Q) {
    std::ostringstream os;
    if (!(pref == Quad(1))) os << pref.str() << " * ";
    os << "[" << render_poly(P, "X") << "] * [" << render_poly(Q, "Y") << "]";
    return os.str();
}

std::string render_qexp(const QSeries<Quad>& q, long upto) {
    std::ostringstream os;
    os << "q";
    for (long n = 2; n <= upto && n < q.prec(); ++n) {
        Quad c = q.coeff(n);
        if (c.is_zero()) continue;
        std::string s = c.str();
        if (!s.empty() && s[0] == '-')
            os << " - " << s.substr(1);
        else
            os << " + " << s;
        os << "*q^" << n;
    }
    os << " + ...";
    return os.str();
}

bool q_prefix_matches(const QSeries<Quad>& got, const std::vector<Quad>& expect, long qprec) {
    for (long n = 1; n < static_cast<long>(expect.size()) && n < qprec; ++n)
        if (!(got.coeff(n) == expect[static_cast<size_t>(n)])) return false;
    return true;
}

RowResult check_row_against(const TableRow& row, const EigenformRecord& rec, long qprec) {
    RowResult rr;
    rr.label = row.label;
    rr.k = row.k;
    rr.tensor_ok = (rec.tensor() == row.tensor());
    rr.q_ok = q_prefix_matches(rec.q, row.qexp, qprec);
    rr.computed = render_record(Quad(1), rec.P, rec.Q) + " ; " + render_qexp(rec.q, 7);
    rr.expected = render_record(row.pref, row.P, row.Q);
    return rr;
}

void match_rows(TableReport& rep, const std::vector<TableRow>& rows,
                const std::map<long, WeightExtraction>& extractions, long qprec) {
    for (const TableRow& row : rows) {
        auto it = extractions.find(row.k);
        if (it == extractions.end()) {
            rep.errors.push_back("no extraction at k = " + std::to_string(row.k));
            continue;
        }
        const EigenformRecord* found = nullptr;
        for (const EigenformRecord& rec : it->second.forms) {
            if (rec.fricke != row.fricke || rec.D != row.D) continue;
            if (q_prefix_matches(rec.q, row.qexp, qprec)) {
                found = &rec;
                break;
            }
        }
        if (!found) {
            rep.errors.push_back(row.label + ": no extracted eigenform matches the listed q-expansion");
            continue;
        }
        rep.rows.push_back(check_row_against(row, *found, qprec));
    }
}

// Level 6: the newform row is recovered after subtracting the two oldform
// contributions induced from level 3 through the level-raising map, with
// period tensors transported by Lambda and norms by the Petersson ratio.
void run_level6(TableReport& rep, const std::vector<TableRow>& rows, long qprec) {
    const long k = 6;
    GenFunSlices s3 = bn_expand(3, k, qprec);
    BiQ cusp3 = cusp_part(s3.body.at(k), eis_part(3, k, qprec), k);
    WeightExtraction e3 = extract_weight(cusp3, 3, k, qprec);
    if (e3.minus.forms.size() != 1) {
        rep.errors.push_back("level-3 source extraction failed");
        return;
    }
    const EigenformRecord& d3 = e3.minus.forms[0];
    LaurentPoly<Rational> P3 = to_rat_poly(d3.P);
    LaurentPoly<Rational> Q3 = to_rat_poly(d3.Q);
    QSeries<Rational> f3 = to_rat_series(d3.q);
    Rational a2 = f3.coeff(2);

    GenFunSlices s6 = bn_expand(6, k, qprec);
    BiQ remainder = cusp_part(s6.body.at(k), eis_part(6, k, qprec), k).even_x_part();
    Rational wfac = factorial(k - 2);

    for (int eps2 : {1, -1}) {
        DivisorChar chi(2, {eps2});
        LaurentPoly<Rational> Pold = lambda_poly(P3, 2, chi, k);
        LaurentPoly<Rational> Qold = lambda_poly(Q3, 2, chi, k);
        Rational ratio = oldform_psp_ratio(k, 2, chi, {{2, a2}});
        QSeries<Rational> fold = f3 + dilate(f3, 2) * (Rational(eps2) * Rational::int_pow(2, k / 2));
        BiLaurent<Rational> told = tensor(Pold, Qold);
        for (auto& [ij, c] : told.terms())
            remainder.add(ij.first, ij.second, -(fold * (c / ratio / wfac)));
    }

    WeightExtraction ex = extract_weight(remainder, 6, k, qprec);
    if (!ex.cross_blocks_zero) rep.errors.push_back("level-6 remainder has cross-sign components");
    if (ex.plus.status != FactorStatus::Empty)
        rep.errors.push_back("level-6 remainder has an unexpected Fricke-plus component");
    if (ex.minus.status != FactorStatus::Ok || ex.minus.forms.size() != 1) {
        rep.errors.push_back("level-6 remainder is not a single newform");
        return;
    }
    std::map<long, WeightExtraction> fake;
    fake.emplace(k, ex);
    match_rows(rep, rows, fake, qprec);
}

// Level 7, weight 6, minus space: the factorization is degenerate, so the f6
// row is verified through the Galois-trace system: the block column equals
// (1/(k-2)!) (u f6 + sigma(u) f6^sigma) for the printed tensor coordinates u.
void verify_f6_by_trace(TableReport& rep, const BiQ& cusp, long qprec) {
    const long k = 6;
    TableRow row = fixtures::f6_row();
    BlockDecomp bd = assemble_matrices(cusp.even_x_part(), 7, k, qprec);
    if (bd.mm.n != 2 || bd.mm.m != 1) {
        rep.errors.push_back("f6 block has unexpected shape");
        return;
    }
    // printed tensor coordinates over the minus bases:
    // t = sum_i u_i e_i (x) f_1
    BiLaurent<Quad> t = row.tensor();
    Quad u[2];
    {
        // read off two independent monomials of the x-basis
        Mat<Quad> E(2, 2);
        std::vector<long> probes{bd.xminus[0].max_exp(), bd.xminus[1].max_exp()};
        for (long i = 0; i < 2; ++i)
            for (long j = 0; j < 2; ++j) E.at(i, j) = Quad(bd.xminus[static_cast<size_t>(j)].get(probes[static_cast<size_t>(i)]));
        Mat<Quad> Einv = mat_inverse(E);
        long ymon = bd.yminus[0].max_exp();
        Quad ylead = Quad(bd.yminus[0].get(ymon));
        std::vector<Quad> rhs(2);
        for (long i = 0; i < 2; ++i) {
            const Quad* c = t.find(probes[static_cast<size_t>(i)], ymon);
            rhs[static_cast<size_t>(i)] = (c ? *c : Quad(0)) / ylead;
        }
        for (long i = 0; i < 2; ++i) u[i] = Einv.at(i, 0) * rhs[0] + Einv.at(i, 1) * rhs[1];
        // consistency: the reconstructed tensor must reproduce the fixture
        BiLaurent<Quad> re;
        LaurentPoly<Quad> fy = bd.yminus[0].map<Quad>([](const Rational& r) { return Quad(r); });
        for (long i = 0; i < 2; ++i) {
            LaurentPoly<Quad> ei = bd.xminus[static_cast<size_t>(i)].map<Quad>([](const Rational& r) { return Quad(r); });
            re = re + tensor(u[i] * ei, fy);
        }
        if (!(re == t)) {
            rep.errors.push_back("f6 printed tensor does not lie in the minus block span");
            return;
        }
    }
    // per-coefficient 2x2 solve: (k-2)! M_{i,n} = 2 (u_i^0 a_n + 57 u_i^1 b_n)
    Rational wfac = factorial(k - 2);
    long long D = row.D;
    Mat<Rational> S(2, 2);
    for (long i = 0; i < 2; ++i) {
        S.at(i, 0) = Rational(2) * u[i].a();
        S.at(i, 1) = Rational(2) * Rational(static_cast<long>(D)) * u[i].b();
    }
    Mat<Rational> Sinv = mat_inverse(S);
    QSeries<Quad> f6(qprec);
    for (long n = 0; n < qprec; ++n) {
        Rational m0 = bd.mm.at(0, 0).coeff(n) * wfac;
        Rational m1 = bd.mm.at(1, 0).coeff(n) * wfac;
        Rational a = Sinv.at(0, 0) * m0 + Sinv.at(0, 1) * m1;
        Rational b = Sinv.at(1, 0) * m0 + Sinv.at(1, 1) * m1;
        f6.coeff_ref(n) = Quad(a, b, D);
    }
    RowResult rr;
    rr.label = row.label;
    rr.k = k;
    rr.tensor_ok = true; // established through the span/reconstruction check above
    rr.q_ok = (f6.coeff(0).is_zero()) && q_prefix_matches(f6, row.qexp, qprec);
    // multiplicativity of the recovered expansion on coprime indices
    for (long m = 2; m < qprec && rr.q_ok; ++m)
        for (long n = 2; m * n < qprec; ++n) {
            if (std::gcd(m, n) != 1) continue;
            if (!(f6.coeff(m) * f6.coeff(n) == f6.coeff(m * n))) {
                rr.q_ok = false;
                break;
            }
        }
    rr.computed = render_qexp(f6, 4);
    rr.expected = render_record(row.pref, row.P, row.Q);
    rep.rows.push_back(rr);
}

} // namespace

TableReport run_tables(long N, long qprec_override) {
    TableReport rep;
    rep.N = N;
    long kmax = table_kmax(N);
    rep.qprec = qprec_override > 0 ? qprec_override : std::max(sturm_qprec(N, kmax), 9L);

    std::vector<TableRow> rows = fixtures::table_rows(N);

    if (N == 6) {
        run_level6(rep, rows, rep.qprec);
        return rep;
    }

    GenFunSlices slices = bn_expand(N, kmax, rep.qprec);
    std::set<long> weights;
    for (const TableRow& r : rows) weights.insert(r.k);

    std::map<long, WeightExtraction> extractions;
    std::map<long, BiQ> cusps;
    for (long k : weights) {
        BiQ cusp = cusp_part(slices.body.at(k), eis_part(N, k, rep.qprec), k);
        extractions.emplace(k, extract_weight(cusp, N, k, rep.qprec));
        cusps.emplace(k, std::move(cusp));
    }
    match_rows(rep, rows, extractions, rep.qprec);

    if (N == 7) {
        rep.degenerate_expected = true;
        const WeightExtraction& e6 = extractions.at(6);
        if (e6.minus.status == FactorStatus::Degenerate) {
            rep.degenerate_seen = true;
            LaurentPoly<Rational> shared;
            shared.add(3, Rational(7));
            shared.add(1, Rational(-1));
            if (e6.minus.shared != shared)
                rep.errors.push_back("degenerate shared factor is not 7Y^3 - Y");
            rep.degenerate_note = "S_{6,7} minus block is degenerate: " + e6.minus.note;
            verify_f6_by_trace(rep, cusps.at(6), rep.qprec);
        } else {
            rep.errors.push_back("expected a degenerate factorization in the S_{6,7} minus block");
        }
    }
    return rep;
}

std::string render_table_text(const TableReport& rep) {
    std::ostringstream os;
    os << "level " << rep.N << " table (qprec " << rep.qprec << ")\n";
    for (const RowResult& r : rep.rows) {
        os << "  [" << (r.ok() ? "ok" : "MISMATCH") << "] " << r.label << " (k=" << r.k << ")\n";
        os << "      R~ = " << r.expected << "\n";
        if (!r.ok()) os << "      computed: " << r.computed << "\n";
    }
    if (rep.degenerate_expected)
        os << "  [" << (rep.degenerate_seen ? "ok" : "MISSING") << "] " << rep.degenerate_note << "\n";
    for (const auto& e : rep.errors) os << "  [error] " << e << "\n";
    return os.str();
}

} // namespace periods::tables
