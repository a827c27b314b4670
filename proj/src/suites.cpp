#include "suites.hpp"

#include <sstream>

#include "fixtures.hpp"
#include "periods/lfactors.hpp"
#include "periods/relations.hpp"

namespace periods::suites {

namespace {

std::string nk(long N, long k) { return "(" + std::to_string(N) + "," + std::to_string(k) + ")"; }

BiQ cusp_slice(long N, long k, long qprec) {
    GenFunSlices s = bn_expand(N, k, qprec);
    return cusp_part(s.body.at(k), eis_part(N, k, qprec), k);
}

SuiteReport suite_crosscheck() {
    SuiteReport rep{"crosscheck", {}};
    const long kmax = 16;
    for (long N : {1L, 2L, 3L, 5L, 6L, 7L, 10L}) {
        long qprec = sturm_qprec(N, kmax);
        GenFunSlices a = bn_expand(N, kmax, qprec);
        GenFunSlices c = bn_via_theta(N, kmax, qprec);
        bool ok = a.head == c.head && a.head == t_head(N);
        std::string detail;
        for (long k = 2; k <= kmax && ok; k += 2) {
            if (!(a.body.at(k) == bn_via_rc(N, k, qprec))) {
                ok = false;
                detail = "bracket route differs at " + nk(N, k);
            } else if (!(a.body.at(k) == c.body.at(k))) {
                ok = false;
                detail = "theta route differs at " + nk(N, k);
            }
        }
        rep.add("three-way equality N=" + std::to_string(N) + " (qprec " + std::to_string(qprec) + ")", ok, detail);
    }
    return rep;
}

SuiteReport suite_cusps() {
    SuiteReport rep{"cusps", {}};
    const long kmax = 16;
    for (long N : {2L, 3L, 6L}) {
        for (long M : divisors(N)) {
            GenFunSlices sm = eigencomponent_summand(N, M, kmax, 2);
            std::map<long, BiR> oracle = cusp_value_sinh(N, M, kmax);
            bool ok = oracle.at(0) == t_head(N);
            std::string detail = ok ? "" : "head mismatch";
            for (long k = 2; k <= kmax && ok; k += 2) {
                BiR got;
                for (auto& [ij, s] : sm.body.at(k).terms()) got.add(ij.first, ij.second, s.coeff(0));
                if (!(got == oracle.at(k))) {
                    ok = false;
                    detail = "mismatch at " + nk(N, k);
                }
            }
            rep.add("cusp values N=" + std::to_string(N) + " M=" + std::to_string(M) + " through T^14", ok, detail);
        }
    }
    return rep;
}

SuiteReport suite_eigencomp() {
    SuiteReport rep{"eigencomp", {}};
    const long kmax = 12;
    for (long N : {2L, 3L, 5L}) {
        long qprec = sturm_qprec(N, kmax);
        GenFunSlices full = bn_expand(N, kmax, qprec);
        std::map<long, BiQ> sum;
        std::vector<std::pair<DivisorChar, GenFunSlices>> comps;
        for (const DivisorChar& eps : all_characters(N))
            comps.emplace_back(eps, eigencomponent(N, eps, kmax, qprec));
        bool partition_ok = true;
        std::string pdetail;
        for (long k = 2; k <= kmax; k += 2) {
            BiQ acc;
            for (auto& [eps, comp] : comps) acc = acc + comp.body.at(k);
            if (!(acc == full.body.at(k))) {
                partition_ok = false;
                pdetail = "partition fails at " + nk(N, k);
                break;
            }
        }
        rep.add("character partition N=" + std::to_string(N), partition_ok, pdetail);

        bool members_ok = true;
        std::string mdetail;
        for (auto& [eps, comp] : comps) {
            int s = eps(N);
            for (long k = 2; k <= kmax && members_ok; k += 2) {
                // cuspidal part of the eps-component: subtract this
                // character's Eisenstein summand
                EisPart e = eis_part(N, k, qprec);
                BiQ eis_eps;
                for (const auto& sm : e.summands) {
                    bool match = true;
                    for (long p : prime_divisors(N))
                        if (sm.eps(p) != eps(p)) match = false;
                    if (!match) continue;
                    BiR fullpoly = sm.poly + sm.poly.swap_xy();
                    for (auto& [ij, c] : fullpoly.terms()) eis_eps.add(ij.first, ij.second, sm.series * c);
                }
                BiQ cusp = comp.body.at(k) - eis_eps;
                if (cusp.is_zero()) continue;
                if (!cusp.exponents_within(0, k - 2)) {
                    members_ok = false;
                    mdetail = "Laurent tail in eps-component at " + nk(N, k);
                    break;
                }
                BlockDecomp bd = assemble_matrices(cusp.even_x_part(), N, k, qprec);
                bool clean = block_is_zero(bd.pm) && block_is_zero(bd.mp) &&
                             block_is_zero(s == 1 ? bd.mm : bd.pp);
                if (!clean) {
                    members_ok = false;
                    mdetail = "component " + eps.name() + " leaks outside its sign block at " + nk(N, k);
                }
            }
        }
        rep.add("per-sign cuspidal membership N=" + std::to_string(N) + " k<=12", members_ok, mdetail);
    }
    return rep;
}

SuiteReport suite_haberland() {
    SuiteReport rep{"haberland", {}};
    // Phi = 1 for every cusp-form row visible in the level 2 and 3 tables
    long count = 0;
    bool phi_ok = true;
    std::string pdetail;
    for (long N : {2L, 3L}) {
        long kmax = (N == 2) ? 16 : 10;
        long qprec = std::max(sturm_qprec(N, kmax), 9L);
        GenFunSlices slices = bn_expand(N, kmax, qprec);
        for (long k = 2; k <= kmax; k += 2) {
            BiQ cusp = cusp_part(slices.body.at(k), eis_part(N, k, qprec), k);
            if (cusp.is_zero()) continue;
            WeightExtraction ex = extract_weight(cusp, N, k, qprec);
            for (const EigenformRecord& f : ex.forms) {
                Quad v = phi_pairing(N, f.P, f.Q, k - 2, f.fricke);
                if (!(v == Quad(1))) {
                    phi_ok = false;
                    pdetail = "Phi != 1 at " + nk(N, k) + " fricke " + std::to_string(f.fricke);
                }
                ++count;
            }
        }
    }
    rep.add("Phi normalization = 1 on " + std::to_string(count) + " extracted cusp forms (levels 2, 3)",
            phi_ok && count >= 11, pdetail);

    // companion coefficient relations at level 5 (w = 6)
    {
        auto tq = [](const LaurentPoly<Rational>& p) {
            return p.map<Quad>([](const Rational& r) { return Quad(r); });
        };
        auto ebm = parity_basis(5, 6, -1, Parity::Even);
        auto fbm = parity_basis(5, 6, -1, Parity::Odd);
        bool ok = solve_rstar(tq(ebm[0]), 6, -1, Parity::Even).particular == Quad(8) * tq(ebm[0]);
        ok = ok && solve_rstar(tq(ebm[1]), 6, -1, Parity::Even).particular ==
                       Quad(Rational(33, 20)) * tq(ebm[0]) + Quad(Rational(-17, 4)) * tq(ebm[1]);
        ok = ok && solve_rstar(tq(fbm[0]), 6, -1, Parity::Odd).particular == Quad(-6) * tq(fbm[0]);
        rep.add("companion relations (8a0+33/20a2, -17/4a2, -6a1) at eps=-1", ok);

        auto ebp = parity_basis(5, 6, 1, Parity::Even);
        auto fbp = parity_basis(5, 6, 1, Parity::Odd);
        RStarSolution s0 = solve_rstar(tq(ebp[0]), 6, 1, Parity::Even);
        LaurentPoly<Quad> kdir = tq(ebp[0]) - Quad(15) * tq(ebp[1]); // (5X^2-1)^3
        bool okp = s0.kernel.size() == 1;
        if (okp) {
            Quad r = s0.kernel[0].get(6) / kdir.get(6);
            okp = s0.kernel[0] == r * kdir;
            LaurentPoly<Quad> diff = s0.particular - Quad(-8) * tq(ebp[0]);
            if (!diff.is_zero()) {
                Quad c = diff.get(6) / kdir.get(6);
                okp = okp && diff == c * kdir;
            }
        }
        okp = okp && solve_rstar(tq(fbp[0]), 6, 1, Parity::Odd).particular ==
                         Quad(Rational(149, 4)) * tq(fbp[0]) + Quad(Rational(-625, 2)) * tq(fbp[1]);
        okp = okp && solve_rstar(tq(fbp[1]), 6, 1, Parity::Odd).particular ==
                         Quad(Rational(15, 4)) * tq(fbp[0]) + Quad(Rational(-67, 2)) * tq(fbp[1]);
        rep.add("companion family (-8a0+m, -8a2-15m; 149/4a1+15/4a3, -625/2a1-67/2a3) at eps=+1", okp);
    }

    // level-5 pairing values
    {
        long qprec = 12;
        WeightExtraction e4 = extract_weight(cusp_slice(5, 4, qprec), 5, 4, qprec);
        WeightExtraction e8 = extract_weight(cusp_slice(5, 8, qprec), 5, 8, qprec);
        const EigenformRecord& d4 = e4.plus.forms[0];
        const EigenformRecord& f8 = e8.plus.forms[0];
        const EigenformRecord& g8 = e8.plus.forms[1];
        const EigenformRecord& d8 = e8.minus.forms[0];

        Phi5Affine a4 = phi5_affine(d4.P, d4.Q, 2, 1);
        Phi5Affine af = phi5_affine(f8.P, f8.Q, 6, 1);
        Phi5Affine ag = phi5_affine(g8.P, g8.Q, 6, 1);
        bool kernel_ok = a4.has_kernel && af.has_kernel && ag.has_kernel &&
                         af.normalizing_m().conj() == ag.normalizing_m() &&
                         a4.at(a4.normalizing_m()) == Quad(1) && af.at(af.normalizing_m()) == Quad(1);
        rep.add("level-5 self-pairing normalizable to 1 on the kernel families (Delta_4^+, f_8, f_8^sigma)",
                kernel_ok, "normalizing parameters are Galois-consistent");

        rep.add("level-5 pairing is independent of the kernel parameter", a4.slope.is_zero(),
                "it is not: slope " + a4.slope.str() + " for Delta_4^+ (reported, see ledger)");

        Phi5Affine am8 = phi5_affine(d8.P, d8.Q, 6, -1);
        rep.add("level-5 pinned self-pairing = 1 (eps = -1 forms)", am8.base == Quad(1),
                "Delta_8^-: " + am8.base.str() + " (printed identity and printed companions are inconsistent; see ledger)");

        Quad cross = hab5_cross(f8, g8, 1, af.normalizing_m(), ag.normalizing_m());
        rep.add("level-5 cross-pairing (f_8, f_8^sigma) = 0", cross.is_zero(),
                "value " + cross.str() + " at the self-normalizing parameters (see ledger)");

        // internal consistency: companion pairs annihilate the (A - WAW) pairing
        GroupWord A{2, -1, 5, -2, 0};
        GroupWord W = GroupWord::fricke(5);
        GroupWord A1 = (W * A * W).reduced();
        bool aident = true;
        for (const EigenformRecord* f : {&d8, &f8}) {
            long w = 6;
            RStarSolution ps = solve_rstar(f->P, w, f->fricke, Parity::Even);
            RStarSolution qs = solve_rstar(f->Q, w, f->fricke, Parity::Odd);
            auto amt = [&](const LaurentPoly<Quad>& R) {
                return slash(R, A, w, f->fricke) - slash(R, A1, w, f->fricke);
            };
            Quad v = pair_vw(f->P, amt(qs.particular), w) + pair_vw(f->Q, amt(ps.particular), w);
            if (!v.is_zero()) aident = false;
        }
        rep.add("companion pairs annihilate the (A - WAW) pairing", aident);
    }
    return rep;
}

SuiteReport suite_lfactors() {
    SuiteReport rep{"lfactors", {}};
    for (ConvCase cs : {ConvCase::Generic, ConvCase::PNew, ConvCase::POld}) {
        bool ok = true;
        std::string detail;
        for (long p : {2L, 3L, 5L}) {
            for (long k1 : {2L, 4L, 6L}) {
                for (long k2 : {2L, 4L, 6L}) {
                    for (long m : {0L, 1L, 2L}) {
                        for (int eps : {1, -1}) {
                            ConvReport r = verify_conv_lemma(p, k1, k2, m, cs, eps, 10);
                            if (!r.ok()) {
                                ok = false;
                                detail = r.note;
                            }
                        }
                    }
                }
            }
        }
        const char* name = cs == ConvCase::Generic ? "generic" : (cs == ConvCase::PNew ? "p-new" : "p-old");
        rep.add(std::string("convolution identity, case ") + name +
                    " (p in {2,3,5}, k1,k2 in {2,4,6}, m in {0,1,2}, a_p formal, order 10, critical point)",
                ok, detail);
    }
    return rep;
}

SuiteReport suite_relations() {
    SuiteReport rep{"relations", {}};
    for (long N : {2L, 3L}) {
        long kmax = 16;
        long qprec = sturm_qprec(N, kmax);
        RelationReport r = relation_check(N, kmax, qprec);
        std::string detail;
        for (auto& f : r.failures) detail += f + "; ";
        rep.add(std::to_string(2 * N) + "-term relation on slices and head, N=" + std::to_string(N) + ", k<=16",
                r.ok, detail);

        // twisted 2p-term relation on every extracted period factor
        bool fok = true;
        std::string fdetail;
        GenFunSlices slices = bn_expand(N, kmax, qprec);
        for (long k = 2; k <= kmax; k += 2) {
            BiQ cusp = cusp_part(slices.body.at(k), eis_part(N, k, qprec), k);
            if (cusp.is_zero()) continue;
            WeightExtraction ex = extract_weight(cusp, N, k, qprec);
            for (const EigenformRecord& f : ex.forms) {
                if (!twisted_cocycle_ok(f.P, k - 2, f.fricke, N) || !twisted_cocycle_ok(f.Q, k - 2, f.fricke, N)) {
                    fok = false;
                    fdetail = "factor relation fails at " + nk(N, k);
                }
            }
        }
        rep.add("2p-term relation on extracted period factors, p=" + std::to_string(N), fok, fdetail);
    }
    return rep;
}

SuiteReport suite_oldforms() {
    SuiteReport rep{"oldforms", {}};
    long qprec = 12;
    // level-1 weight-12 tensor
    WeightExtraction e1 = extract_weight(cusp_slice(1, 12, qprec), 1, 12, qprec);
    if (e1.plus.forms.size() != 1) {
        rep.add("level-1 weight-12 extraction", false, "unexpected rank");
        return rep;
    }
    const EigenformRecord& delta = e1.plus.forms[0];
    LaurentPoly<Rational> P = fixtures::delta_even_factor();
    LaurentPoly<Rational> Q = fixtures::delta_odd_factor();
    auto tq = [](const LaurentPoly<Rational>& p) {
        return p.map<Quad>([](const Rational& r) { return Quad(r); });
    };
    // R~_Delta = kappa P (x) Q
    BiLaurent<Quad> tl = delta.tensor();
    BiLaurent<Quad> pq = tensor(tq(P), tq(Q));
    const Quad* lead = tl.find(10, 9);
    const Quad* plead = pq.find(10, 9);
    bool kap_ok = lead && plead && !plead->is_zero();
    Quad kappa = kap_ok ? *lead / *plead : Quad(0);
    kap_ok = kap_ok && tl == pq.map<Quad>([&](const Quad& c) { return kappa * c; });
    rep.add("R~_Delta is proportional to the paper-normalized P (x) Q, kappa = " + kappa.str(), kap_ok);

    Rational a2 = delta.q.coeff(2).a();
    rep.add("a_2(Delta) = -24 from the extraction", a2 == Rational(-24));

    // level-2 weight-12 tensors
    WeightExtraction e2 = extract_weight(cusp_slice(2, 12, qprec), 2, 12, qprec);
    for (int eps2 : {1, -1}) {
        DivisorChar chi(2, {eps2});
        Rational ratio = oldform_psp_ratio(12, 2, chi, {{2, a2}});
        Rational expect_ratio = (eps2 == 1) ? Rational(9, 2) : Rational(15, 2);
        rep.add("Petersson ratio " + std::string(eps2 == 1 ? "+" : "-") + " = " + ratio.str(),
                ratio == expect_ratio);
        // the constants 1152 and 1920 are 2^8 times the Petersson ratios
        Rational c = Rational(256) * ratio;
        Rational expect_c = (eps2 == 1) ? Rational(1152) : Rational(1920);
        rep.add("oldform constant " + expect_c.str() + " = 2^8 * ratio recovered (got " + c.str() + ")",
                c == expect_c);

        // the full tensor transport: extracted = kappa * Lambda P (x) Lambda Q / ratio,
        // equivalently (kappa/1024) (P(2X)+-32P(X)) (x) (Q(2Y)+-32Q(Y)) / ratio.
        // With the exact kappa = 2 the displayed prefactor corresponds to
        // 1/2304 resp. 1/3840; the printed 1/1152, 1/1920 are double (a
        // factor-2 slip against the level-2 table, see the project notes).
        const FactorResult& block = (eps2 == 1) ? e2.plus : e2.minus;
        bool ok = block.status == FactorStatus::Ok && block.forms.size() == 1;
        if (ok) {
            LaurentPoly<Quad> LP = lambda_poly(tq(P), 2, chi, 12);
            LaurentPoly<Quad> LQ = lambda_poly(tq(Q), 2, chi, 12);
            BiLaurent<Quad> expect =
                tensor(LP, LQ).map<Quad>([&](const Quad& v) { return v * kappa / Quad(ratio); });
            ok = block.forms[0].tensor() == expect;
            // q-expansion transport: Delta(tau) + eps 64 Delta(2 tau)
            QSeries<Quad> fold = delta.q + Quad(Rational(eps2) * Rational(64)) * dilate(delta.q, 2);
            ok = ok && block.forms[0].q == fold;
        }
        rep.add("level-raising transport reproduces Delta_12^" + std::string(eps2 == 1 ? "+" : "-") +
                    " exactly (prefactor kappa/1024/ratio)",
                ok);
    }
    return rep;
}

} // namespace

std::vector<std::string> suite_names() {
    return {"crosscheck", "cusps", "eigencomp", "haberland", "lfactors", "relations", "oldforms"};
}

SuiteReport run_suite(const std::string& name) {
    if (name == "crosscheck") return suite_crosscheck();
    if (name == "cusps") return suite_cusps();
    if (name == "eigencomp") return suite_eigencomp();
    if (name == "haberland") return suite_haberland();
    if (name == "lfactors") return suite_lfactors();
    if (name == "relations") return suite_relations();
    if (name == "oldforms") return suite_oldforms();
    throw std::invalid_argument("unknown suite '" + name + "'");
}

std::string render_suite_text(const SuiteReport& rep) {
    std::ostringstream os;
    os << "suite " << rep.suite << ":\n";
    for (const auto& c : rep.checks) {
        os << "  [" << (c.pass ? "pass" : "FAIL") << "] " << c.name << "\n";
        if (!c.pass && !c.detail.empty()) os << "         " << c.detail << "\n";
    }
    return os.str();
}

} // namespace periods::suites
