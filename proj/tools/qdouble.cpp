// Command-line front end: higher indicators of D(G), Galois invariance of
// f_y, the two-partition lemma harness, and the lower-bound witness tables.

#include <chrono>
#include <cstdio>
#include <iostream>

#include <CLI11.hpp>

#include "qd/errors.hpp"
#include "qd/report.hpp"

namespace {

enum ExitCode { kOk = 0, kUsage = 1, kResource = 2, kVerification = 3 };

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations for quantum doubles of finite groups"};
    app.require_subcommand(1);

    qd::RunConfig cfg;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", cfg.format, "output format")
            ->check(CLI::IsMember({"json", "csv", "text"}))
            ->capture_default_str();
        sub->add_option("--jobs", cfg.jobs, "parallelism degree")->capture_default_str();
        sub->add_option("--cap-order", cfg.cap_order, "group order cap")->capture_default_str();
    };

    auto* ind = app.add_subcommand("indicators",
                                   "higher Frobenius-Schur indicators of all irreducibles of D(G)");
    ind->add_option("--group", cfg.group_spec, "group spec")->required();
    ind->add_option("--nmax", cfg.nmax, "largest n")->capture_default_str();
    add_common(ind);

    auto* gal = app.add_subcommand("galois", "check f_y(z) = f_y(z^s) on every base point");
    gal->add_option("--group", cfg.group_spec, "group spec")->required();
    gal->add_option("--nmax", cfg.nmax, "largest n")->capture_default_str();
    add_common(gal);

    auto* bnd = app.add_subcommand("bounds", "lower-bound witness for k(D(G))");
    bnd->add_option("--p", cfg.p, "odd prime, at most 7")->required();
    add_common(bnd);

    auto* lem = app.add_subcommand("lemma", "two-partition lemma fuzz / s-independence");
    lem->add_option("--B", cfg.b_spec, "abelian group spec")->capture_default_str();
    lem->add_option("--r", cfg.r, "ground set size")->capture_default_str();
    lem->add_option("--fuzz", cfg.fuzz, "number of cases/templates");
    lem->add_flag("--sindep", cfg.sindep, "check s-independence of the wreath system");
    lem->add_option("--n", cfg.n, "power exponent n for --sindep")->capture_default_str();
    lem->add_option("--seed", cfg.seed, "RNG seed (required: runs are reproducible)")
        ->required();
    add_common(lem);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kOk : kUsage;
    }

    try {
        auto start = std::chrono::steady_clock::now();
        qd::ReportDocument doc;
        if (ind->parsed()) {
            cfg.command = "indicators";
            doc = qd::cmd_indicators(cfg);
        } else if (gal->parsed()) {
            cfg.command = "galois";
            doc = qd::cmd_galois(cfg);
        } else if (bnd->parsed()) {
            cfg.command = "bounds";
            doc = qd::cmd_bounds(cfg);
        } else {
            cfg.command = "lemma";
            doc = qd::cmd_lemma(cfg);
        }
        doc.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::cout << qd::render(doc, cfg.format);
        return doc.verification_ok ? kOk : kVerification;
    } catch (const qd::SpecParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const qd::ResourceError& e) {
        std::cerr << "resource error: " << e.what() << "\n";
        return kResource;
    } catch (const std::exception& e) {
        std::cerr << "verification error: " << e.what() << "\n";
        return kVerification;
    }
}
