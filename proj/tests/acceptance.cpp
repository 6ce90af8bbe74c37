// Acceptance suite: one line per criterion, exact tolerances, nonzero exit
// on any failure. Run `qd_acceptance --with-p7` to include the optional
// p = 7 witness (budget ~10 minutes).

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "qd/bounds.hpp"
#include "qd/double_indicators.hpp"
#include "qd/partition_lemma.hpp"
#include "qd/report.hpp"

using namespace qd;

namespace {

int g_failures = 0;

void report(const char* name, bool pass, const std::string& detail = "") {
    std::printf("%-4s %s%s%s\n", name, pass ? "PASS" : "FAIL",
                detail.empty() ? "" : "  ", detail.c_str());
    if (!pass)
        ++g_failures;
}

const std::vector<std::string> kTheoremGroups = {
    "wreath:2,cyclic:2",   // S_2 x| (Z/2)^2
    "wreath:3,cyclic:2",   // S_3 x| (Z/2)^3
    "wreath:2,cyclic:3",   // S_2 x| (Z/3)^2
    "sym:3",
    "sym:4",
    "wreath:2,cyclic:2x2", // S_2 x| (Z/2 x Z/2)^2
};

const std::vector<std::string> kIdentityGroups = {
    "sym:3",
    "sym:4",
    "permgen:8;(1,2,3,4)(5,6,7,8);(1,5,3,7)(2,8,4,6)", // Q_8
    "wreath:2,cyclic:2",                               // dihedral of order 8
};

std::string run_cli_capture(const std::string& args) {
    std::string path = "acc_cli_out.txt";
    std::string cmd = std::string(QD_CLI_PATH) + " " + args + " > " + path;
    if (std::system(cmd.c_str()) != 0)
        return "<nonzero exit>";
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    std::remove(path.c_str());
    return ss.str();
}

void ac1_integrality() {
    bool pass = true;
    std::string detail;
    for (const auto& spec : kTheoremGroups) {
        auto ctx = make_double_context(make_group(spec));
        auto table = integrality_report(ctx, ctx.group_exponent);
        if (!table.all_integral) {
            pass = false;
            detail += spec + " has non-integral entries; ";
        }
    }
    report("AC1", pass, detail.empty() ? "nu_n integral on all six groups, n = 1..exp(G)" : detail);
}

void ac2_identity() {
    bool pass = true;
    std::string detail;
    for (const auto& spec : kIdentityGroups) {
        auto ctx = make_double_context(make_group(spec));
        for (std::uint32_t ci = 0; ci < ctx.classes->classes.size() && pass; ++ci)
            for (long long n = 1; n <= 12 && pass; ++n)
                if (!identity_check(ctx, ci, n)) {
                    pass = false;
                    detail = spec + " fails at class " + std::to_string(ci) + ", n = " +
                             std::to_string(n);
                }
    }
    report("AC2", pass, pass ? "sum_W nu_n conj(chi_W) = f_y on all base points, n <= 12" : detail);
}

void ac3_two_paths() {
    bool pass = true;
    std::string detail;
    std::set<std::string> specs(kTheoremGroups.begin(), kTheoremGroups.end());
    specs.insert(kIdentityGroups.begin(), kIdentityGroups.end());
    for (const auto& spec : specs) {
        auto ctx = make_double_context(make_group(spec));
        long long nmax = std::max<long long>(12, ctx.group_exponent);
        for (std::uint32_t ci = 0; ci < ctx.classes->classes.size() && pass; ++ci)
            for (long long n = 1; n <= nmax && pass; ++n) {
                auto via_f = indicators_via_f(ctx, ci, n);
                for (std::uint32_t w = 0; w < via_f.size() && pass; ++w) {
                    DoubleIrrep v{ci, ctx.classes->classes[ci].representative, w, 0};
                    if (indicator(ctx, v, n) != via_f[w]) {
                        pass = false;
                        detail = spec + " mismatch at class " + std::to_string(ci);
                    }
                }
            }
    }
    report("AC3", pass, pass ? "direct formula agrees with the <f_y, chi> path everywhere" : detail);
}

void ac4_galois() {
    bool pass = true;
    std::string detail;
    for (const auto& spec : kTheoremGroups) {
        if (spec.rfind("wreath:", 0) != 0)
            continue;
        auto ctx = make_double_context(make_group(spec));
        for (std::uint32_t ci = 0; ci < ctx.classes->classes.size() && pass; ++ci)
            for (long long n = 1; n <= 12 && pass; ++n)
                if (!galois_check(ctx, ci, n)) {
                    pass = false;
                    detail = spec + " violates f_y(z) = f_y(z^s)";
                }
    }
    report("AC4", pass, pass ? "f_y(z) = f_y(z^s) on the wreath groups, n <= 12" : detail);
}

void ac5_lemma() {
    std::mt19937_64 rng(20250809);
    std::vector<FinAbGroup> pool = {
        FinAbGroup::from_invariant_factors({2}), FinAbGroup::from_invariant_factors({3}),
        FinAbGroup::from_invariant_factors({4}), FinAbGroup::from_moduli({2, 2}),
        FinAbGroup::from_moduli({6})};
    int cases = 1000, agree = 0, counts = 0;
    for (int i = 0; i < cases; ++i) {
        int r = 1 + static_cast<int>(rng() % 4);
        auto& b = pool[rng() % pool.size()];
        auto s = random_partition_system(rng, r, b);
        auto sys = partition_system_to_ab(s);
        auto brute = brute_force_count(sys);
        auto exact = solve_ab_system(sys);
        agree += lemma_solvable(s) == brute.solvable && exact.solvable == brute.solvable;
        counts += exact.count == brute.count;
    }
    bool pass = agree == cases && counts == cases;
    report("AC5", pass,
           std::to_string(agree) + "/" + std::to_string(cases) + " solvability, " +
               std::to_string(counts) + "/" + std::to_string(cases) + " count agreements");
}

void ac6_witness_p3() {
    auto rep = centralizer_report(3);
    long long pairs = k_double_via_pairs(make_group("truncseries:3"));
    bool pass = rep.group_order == 27 && rep.class_count == 11 && rep.class_count <= 27 &&
                rep.centralizer_order == 9 && rep.centralizer_abelian &&
                rep.k_double_value == 105 && pairs == 105;
    report("AC6", pass,
           "order " + std::to_string(rep.group_order) + ", k(G) = " +
               std::to_string(rep.class_count) + ", |Z_g| = " +
               std::to_string(rep.centralizer_order) + ", k(D(G)) = " +
               std::to_string(rep.k_double_value) + " (pair orbits: " + std::to_string(pairs) +
               ")");
}

void ac7_witness_p5(bool with_p7) {
    auto rep = centralizer_report(5);
    double expect = 3.0 * std::log(5.0);
    bool pass = rep.group_order == 3125 && rep.class_count <= 125 &&
                rep.centralizer_order == 125 && rep.centralizer_abelian &&
                std::abs(rep.witness_log - expect) < 1e-12;
    std::string detail = "order 3125, k(G) = " + std::to_string(rep.class_count) +
                         ", |Z_g| = " + std::to_string(rep.centralizer_order);
    if (with_p7) {
        auto rep7 = centralizer_report(7);
        pass = pass && rep7.group_order == 823543ull && rep7.class_count <= 343 &&
               rep7.centralizer_order == 2401 && rep7.centralizer_abelian;
        detail += "; p = 7: |Z_g| = " + std::to_string(rep7.centralizer_order) + ", k(D(G)) = " +
                  std::to_string(rep7.k_double_value);
    }
    report("AC7", pass, detail);
}

void ac8_sindep() {
    std::mt19937_64 rng(424242);
    std::vector<FinAbGroup> pool = {
        FinAbGroup::from_moduli({2}),  FinAbGroup::from_moduli({3}),
        FinAbGroup::from_moduli({4}),  FinAbGroup::from_moduli({6}),
        FinAbGroup::from_moduli({12}), FinAbGroup::from_moduli({2, 2}),
        FinAbGroup::from_moduli({2, 4}), FinAbGroup::from_moduli({3, 3})};
    std::vector<long long> ns = {2, 3, 4, 6, 8, 12};
    int templates = 200, ok = 0, with_cbar = 0;
    for (int i = 0; i < templates; ++i) {
        int r = 1 + static_cast<int>(rng() % 5);
        auto& b = pool[rng() % pool.size()];
        long long n = ns[rng() % ns.size()];
        auto t = random_wreath_template(rng, r, b, n);
        auto res = s_independence_check(t);
        ok += res.ok;
        with_cbar += res.cbar_exists;
    }
    bool pass = ok == templates;
    report("AC8", pass,
           std::to_string(ok) + "/" + std::to_string(templates) +
               " templates constant over s (" + std::to_string(with_cbar) +
               " with valid cbar)");
}

void ac9_soundness() {
    bool pass = true;
    std::string detail;
    std::set<std::string> specs(kTheoremGroups.begin(), kTheoremGroups.end());
    specs.insert(kIdentityGroups.begin(), kIdentityGroups.end());
    try {
        for (const auto& spec : specs) {
            auto g = make_group(spec);
            auto ctx = make_double_context(g); // builds every centralizer table
            auto t = character_table(g);
            verify_orthogonality(t);
            long long degsq = 0;
            for (long long d : t.degrees)
                degsq += d * d;
            if (degsq != static_cast<long long>(g.order())) {
                pass = false;
                detail = spec + ": sum of degree squares is off";
            }
            for (const auto& cent : ctx.cents)
                verify_orthogonality(cent.table);
        }
        // abelian tables against the dual construction
        for (auto moduli : {std::vector<long long>{6}, std::vector<long long>{2, 4}}) {
            AbelianSpec a{moduli};
            auto g = abelian_group(a);
            auto cd = std::make_shared<ClassData>(conjugacy_classes(g));
            auto t = character_table(g, cd);
            std::vector<std::vector<Cyclotomic>> dual;
            for (std::uint32_t j = 0; j < g.order(); ++j) {
                auto jv = a.decode(j);
                std::vector<Cyclotomic> row;
                for (std::size_t c = 0; c < cd->classes.size(); ++c) {
                    auto xv = a.decode(cd->classes[c].representative);
                    long long expo = 0;
                    for (std::size_t i = 0; i < moduli.size(); ++i)
                        expo += (t.exponent / moduli[i]) * jv[i] * xv[i];
                    row.push_back(Cyclotomic::zeta_power(t.exponent, expo));
                }
                dual.push_back(std::move(row));
            }
            std::sort(dual.begin(), dual.end());
            auto lib = t.values;
            std::sort(lib.begin(), lib.end());
            if (lib != dual) {
                pass = false;
                detail = "abelian dual mismatch";
            }
        }
    } catch (const std::exception& e) {
        pass = false;
        detail = e.what();
    }
    report("AC9", pass,
           pass ? "orthogonality + degree identities on every emitted table" : detail);
}

void ac10_determinism() {
    auto a1 = run_cli_capture("lemma --fuzz 100 --r 4 --B cyclic:2x4 --seed 7 --format json");
    auto a2 = run_cli_capture("lemma --fuzz 100 --r 4 --B cyclic:2x4 --seed 7 --format json");
    auto b1 = run_cli_capture("indicators --group wreath:2,cyclic:2 --nmax 8 --format json");
    auto b2 = run_cli_capture("indicators --group wreath:2,cyclic:2 --nmax 8 --format json");
    auto c1 = run_cli_capture("lemma --sindep --fuzz 30 --r 5 --B cyclic:6 --n 12 --seed 9 --format json");
    auto c2 = run_cli_capture("lemma --sindep --fuzz 30 --r 5 --B cyclic:6 --n 12 --seed 9 --format json");
    bool pass = !a1.empty() && a1 == a2 && !b1.empty() && b1 == b2 && !c1.empty() && c1 == c2 &&
                a1.find("<nonzero exit>") == std::string::npos;
    report("AC10", pass, "byte-identical JSON on repeated seeded runs");
}

} // namespace

int main(int argc, char** argv) {
    bool with_p7 = false;
    for (int i = 1; i < argc; ++i)
        if (std::strcmp(argv[i], "--with-p7") == 0)
            with_p7 = true;

    ac1_integrality();
    ac2_identity();
    ac3_two_paths();
    ac4_galois();
    ac5_lemma();
    ac6_witness_p3();
    ac7_witness_p5(with_p7);
    ac8_sindep();
    ac9_soundness();
    ac10_determinism();

    if (g_failures) {
        std::printf("%d criterion(s) FAILED\n", g_failures);
        return 1;
    }
    std::printf("all acceptance criteria passed\n");
    return 0;
}
