#include <CLI11.hpp>

#include <iostream>

#include "../src/suites.hpp"
#include "../src/tables.hpp"
#include "periods/json_io.hpp"

using namespace periods;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct Options {
    long level = 1;
    long kmax = 12;
    long weight = 0; // 0 = all
    long qprec = 0;  // 0 = Sturm default
    bool unsafe_qprec = false;
    std::string format = "text";
    std::string suite = "all";
};

long effective_qprec(const Options& opt, long level, long kmax) {
    long sturm = sturm_qprec(level, kmax);
    if (opt.qprec == 0) return sturm;
    if (opt.qprec < sturm && !opt.unsafe_qprec) {
        std::cerr << "error: requested qprec " << opt.qprec << " is below the Sturm default " << sturm
                  << " for level " << level << "; pass --unsafe-qprec to override\n";
        std::exit(kExitUsage);
    }
    return opt.qprec;
}

int cmd_expand(const Options& opt) {
    if (!is_squarefree(opt.level)) {
        std::cerr << "error: level must be squarefree\n";
        return kExitUsage;
    }
    if (opt.kmax < 2 || opt.kmax % 2 != 0) {
        std::cerr << "error: kmax must be even and >= 2\n";
        return kExitUsage;
    }
    if (opt.weight != 0 && (opt.weight % 2 != 0 || opt.weight < 2 || opt.weight > opt.kmax)) {
        std::cerr << "error: weight must be an even integer in [2, kmax]\n";
        return kExitUsage;
    }
    long qprec = effective_qprec(opt, opt.level, opt.kmax);
    GenFunSlices slices = bn_expand(opt.level, opt.kmax, qprec);
    if (opt.format == "json") {
        Json out = Json::array();
        for (auto& [k, body] : slices.body) {
            if (opt.weight != 0 && k != opt.weight) continue;
            out.push_back(slice_json(opt.level, k, slices.head, body));
        }
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "generating function slices, level " << opt.level << ", qprec " << qprec << "\n";
        std::cout << "T^-2 head: ";
        bool first = true;
        for (auto& [ij, c] : slices.head.terms()) {
            std::cout << (first ? "" : " + ") << c.str() << "*X^" << ij.first << "*Y^" << ij.second;
            first = false;
        }
        std::cout << "\n";
        for (auto& [k, body] : slices.body) {
            if (opt.weight != 0 && k != opt.weight) continue;
            std::cout << "T^" << (k - 2) << " slice: " << body.terms().size() << " (X,Y)-monomials\n";
            for (auto& [ij, s] : body.terms()) {
                std::cout << "  X^" << ij.first << " Y^" << ij.second << ": ";
                bool f2 = true;
                for (long n = 0; n < std::min<long>(s.prec(), 6); ++n) {
                    if (!f2) std::cout << ", ";
                    std::cout << s.coeff(n).str();
                    f2 = false;
                }
                std::cout << ", ...\n";
            }
        }
    }
    return kExitOk;
}

int cmd_tables(const Options& opt) {
    if (opt.level != 2 && opt.level != 3 && opt.level != 5 && opt.level != 6 && opt.level != 7) {
        std::cerr << "error: tables exist for levels 2, 3, 5, 6, 7\n";
        return kExitUsage;
    }
    long qprec = opt.qprec; // 0 = per-table default, validated inside
    tables::TableReport rep = tables::run_tables(opt.level, qprec);
    if (opt.format == "json") {
        Json rows = Json::array();
        for (auto& r : rep.rows)
            rows.push_back(Json{{"label", r.label},
                                {"k", r.k},
                                {"tensor_ok", r.tensor_ok},
                                {"q_ok", r.q_ok},
                                {"expected", r.expected},
                                {"computed", r.computed}});
        Json out{{"N", rep.N},
                 {"qprec", rep.qprec},
                 {"rows", rows},
                 {"degenerate_expected", rep.degenerate_expected},
                 {"degenerate_seen", rep.degenerate_seen},
                 {"errors", rep.errors},
                 {"ok", rep.all_ok()}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << tables::render_table_text(rep);
    }
    return rep.all_ok() ? kExitOk : kExitCheckFailed;
}

int cmd_verify(const Options& opt) {
    std::vector<std::string> names;
    if (opt.suite == "all")
        names = suites::suite_names();
    else {
        auto known = suites::suite_names();
        if (std::find(known.begin(), known.end(), opt.suite) == known.end()) {
            std::cerr << "error: unknown suite '" << opt.suite << "'\n";
            return kExitUsage;
        }
        names.push_back(opt.suite);
    }
    bool all = true;
    Json jreports = Json::array();
    for (const auto& name : names) {
        suites::SuiteReport rep = suites::run_suite(name);
        all = all && rep.all_pass();
        if (opt.format == "json") {
            Json checks = Json::array();
            for (auto& c : rep.checks)
                checks.push_back(Json{{"name", c.name}, {"status", c.pass ? "pass" : "fail"}, {"detail", c.detail}});
            jreports.push_back(Json{{"suite", rep.suite}, {"ok", rep.all_pass()}, {"checks", checks}});
        } else {
            std::cout << suites::render_suite_text(rep);
        }
    }
    if (opt.format == "json") std::cout << jreports.dump(2) << "\n";
    return all ? kExitOk : kExitCheckFailed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact generating-function engine for periods of modular forms on Gamma_0(N)"};
    app.require_subcommand(1);

    Options opt;

    auto* expand = app.add_subcommand("expand", "expand the theta-product generating function into weight slices");
    expand->add_option("--level", opt.level, "squarefree level N")->required();
    expand->add_option("--kmax", opt.kmax, "largest weight (even)");
    expand->add_option("--weight", opt.weight, "restrict output to one weight");
    expand->add_option("--qprec", opt.qprec, "q-expansion precision (default: Sturm rule)");
    expand->add_flag("--unsafe-qprec", opt.unsafe_qprec, "allow qprec below the Sturm default");
    expand->add_option("--format", opt.format, "text or json")->check(CLI::IsMember({"text", "json"}));

    auto* tables = app.add_subcommand("tables", "recompute the period-polynomial tables and compare exactly");
    tables->add_option("--level", opt.level, "table level (2, 3, 5, 6 or 7)")->required();
    tables->add_option("--qprec", opt.qprec, "q-expansion precision override");
    tables->add_option("--format", opt.format, "text or json")->check(CLI::IsMember({"text", "json"}));

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("--suite", opt.suite,
                       "crosscheck|cusps|eigencomp|haberland|lfactors|relations|oldforms|all");
    verify->add_option("--format", opt.format, "text or json")->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (expand->parsed()) return cmd_expand(opt);
        if (tables->parsed()) return cmd_tables(opt);
        if (verify->parsed()) return cmd_verify(opt);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
