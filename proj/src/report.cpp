#include "qd/report.hpp"

#include <chrono>
#include <sstream>

#include "qd/bounds.hpp"
#include "qd/double_indicators.hpp"
#include "qd/partition_lemma.hpp"

namespace qd {

namespace {

using nlohmann::json;

json config_echo(const RunConfig& cfg) {
    json j;
    j["command"] = cfg.command;
    if (!cfg.group_spec.empty())
        j["group"] = cfg.group_spec;
    j["format"] = cfg.format;
    j["jobs"] = cfg.jobs;
    j["cap_order"] = cfg.cap_order;
    switch (cfg.command.empty() ? ' ' : cfg.command[0]) {
    default:
        break;
    }
    if (cfg.command == "indicators" || cfg.command == "galois")
        j["nmax"] = cfg.nmax;
    if (cfg.command == "bounds")
        j["p"] = cfg.p;
    if (cfg.command == "lemma") {
        j["B"] = cfg.b_spec;
        j["r"] = cfg.r;
        j["seed"] = cfg.seed;
        if (cfg.sindep) {
            j["sindep"] = true;
            j["n"] = cfg.n;
        } else {
            j["fuzz"] = cfg.fuzz;
        }
    }
    return j;
}

json envelope(const RunConfig& cfg) {
    json j;
    j["tool"] = "qdouble";
    j["version"] = kToolVersion;
    j["config"] = config_echo(cfg);
    return j;
}

json coeffs_json(const Cyclotomic& v) { return json(v.coeffs()); }

std::string fmt_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", x);
    return buf;
}

} // namespace

ReportDocument cmd_indicators(const RunConfig& cfg) {
    GroupLimits lim{cfg.cap_order};
    FiniteGroup g = make_group(cfg.group_spec, lim);
    DoubleContext ctx = make_double_context(g, cfg.jobs);
    IndicatorTable table = integrality_report(ctx, cfg.nmax);

    ReportDocument out;
    out.doc = envelope(cfg);
    json payload;
    payload["group_spec"] = cfg.group_spec;
    payload["group_order"] = g.order();
    payload["group_exponent"] = ctx.group_exponent;
    payload["n_range"] = {1, cfg.nmax};

    json irreps = json::array();
    for (std::size_t i = 0; i < table.irreps.size(); ++i) {
        const auto& v = table.irreps[i];
        irreps.push_back({{"class", v.class_index},
                          {"irrep", v.irrep_index},
                          {"dim", v.dim},
                          {"ring_order", table.ring_orders[i]}});
    }
    payload["irreps"] = irreps;

    json rows = json::array();
    for (std::size_t i = 0; i < table.values.size(); ++i) {
        json row = json::array();
        for (std::size_t t = 0; t < table.values[i].size(); ++t)
            row.push_back({coeffs_json(table.values[i][t]), bool(table.integral[i][t])});
        rows.push_back(std::move(row));
    }
    payload["indicators"] = rows;

    // orthogonality identity on every base point, the module's master oracle
    bool identity_ok = true;
    json checks = json::array();
    for (std::uint32_t ci = 0; ci < ctx.classes->classes.size(); ++ci) {
        for (long long n = 1; n <= cfg.nmax; ++n) {
            bool ok = identity_check(ctx, ci, n);
            identity_ok = identity_ok && ok;
            if (!ok)
                checks.push_back({{"class", ci}, {"n", n}, {"pass", false}});
        }
    }
    payload["identity_check_failures"] = checks;
    payload["verdict"] = table.all_integral ? "all-integral" : "non-integral-entries";
    out.doc["payload"] = payload;
    out.verification_ok = identity_ok;

    std::ostringstream text;
    text << "group " << cfg.group_spec << "  order " << g.order() << "  exponent "
         << ctx.group_exponent << "  irreps of D(G): " << table.irreps.size() << "\n";
    for (std::size_t i = 0; i < table.irreps.size(); ++i) {
        const auto& v = table.irreps[i];
        text << "V(class=" << v.class_index << ", w=" << v.irrep_index << ", dim=" << v.dim
             << "): ";
        for (std::size_t t = 0; t < table.values[i].size(); ++t) {
            if (t)
                text << ", ";
            text << table.values[i][t].to_string();
        }
        text << "\n";
    }
    text << "verdict: " << payload["verdict"].get<std::string>()
         << (identity_ok ? "" : "  [identity-check FAILED]") << "\n";
    out.text = text.str();

    std::ostringstream csv;
    csv << "irrep_index,class,irrep,dim,ring_order,n,value,is_integer\n";
    for (std::size_t i = 0; i < table.irreps.size(); ++i)
        for (std::size_t t = 0; t < table.values[i].size(); ++t) {
            const auto& v = table.irreps[i];
            csv << i << ',' << v.class_index << ',' << v.irrep_index << ',' << v.dim << ','
                << table.ring_orders[i] << ',' << (t + 1) << ",\"";
            const auto& cvec = table.values[i][t].coeffs();
            for (std::size_t c = 0; c < cvec.size(); ++c)
                csv << (c ? " " : "") << cvec[c];
            csv << "\"," << (table.integral[i][t] ? 1 : 0) << "\n";
        }
    out.csv = csv.str();
    return out;
}

ReportDocument cmd_galois(const RunConfig& cfg) {
    GroupLimits lim{cfg.cap_order};
    FiniteGroup g = make_group(cfg.group_spec, lim);
    DoubleContext ctx = make_double_context(g, cfg.jobs);

    ReportDocument out;
    out.doc = envelope(cfg);
    json payload;
    payload["group_spec"] = cfg.group_spec;
    payload["group_order"] = g.order();
    payload["n_range"] = {1, cfg.nmax};

    bool all = true;
    json results = json::array();
    for (std::uint32_t ci = 0; ci < ctx.classes->classes.size(); ++ci)
        for (long long n = 1; n <= cfg.nmax; ++n) {
            bool ok = galois_check(ctx, ci, n);
            all = all && ok;
            results.push_back({{"class", ci},
                               {"base_point", ctx.classes->classes[ci].representative},
                               {"n", n},
                               {"pass", ok}});
        }
    payload["results"] = results;
    payload["verdict"] = all ? "galois-invariant" : "violations-found";
    out.doc["payload"] = payload;

    std::ostringstream text;
    text << "group " << cfg.group_spec << "  f_y(z) = f_y(z^s) for all y, n <= " << cfg.nmax
         << ": " << (all ? "PASS" : "FAIL") << "\n";
    if (!all)
        for (const auto& r : results)
            if (!r["pass"].get<bool>())
                text << "  violation at class " << r["class"] << ", n = " << r["n"] << "\n";
    out.text = text.str();
    out.csv = "class,n,pass\n";
    for (const auto& r : results)
        out.csv += std::to_string(r["class"].get<int>()) + "," +
                   std::to_string(r["n"].get<long long>()) + "," +
                   (r["pass"].get<bool>() ? "1" : "0") + "\n";
    return out;
}

ReportDocument cmd_bounds(const RunConfig& cfg) {
    BoundsLimits lim;
    lim.group.max_order = cfg.cap_order;
    BoundsReport rep = centralizer_report(cfg.p, lim);

    ReportDocument out;
    out.doc = envelope(cfg);
    json payload;
    payload["p"] = rep.p;
    payload["group_order"] = rep.group_order;
    payload["class_count"] = rep.class_count;
    payload["p_cubed"] = rep.p_cubed;
    payload["class_count_le_p_cubed"] = rep.class_count <= rep.p_cubed;
    payload["witness_element"] = rep.witness_element;
    payload["centralizer_order"] = rep.centralizer_order;
    payload["centralizer_order_expected"] = rep.centralizer_order_expected;
    payload["centralizer_abelian"] = rep.centralizer_abelian;
    payload["centralizer_exponent_p"] = rep.centralizer_exponent_p;
    payload["k_double"] = rep.k_double_value;
    payload["witness_log"] = fmt_double(rep.witness_log);
    out.doc["payload"] = payload;
    out.verification_ok = rep.centralizer_abelian && rep.centralizer_exponent_p &&
                          rep.class_count <= rep.p_cubed &&
                          rep.centralizer_order == rep.centralizer_order_expected;

    std::ostringstream text;
    text << "p     |G|      k(G)  p^3   |Z_g|  p^((p+1)/2)  k(D(G))  ((p+1)/2)ln p\n";
    text << rep.p << "     " << rep.group_order << "      " << rep.class_count << "    "
         << rep.p_cubed << "   " << rep.centralizer_order << "     "
         << rep.centralizer_order_expected << "          " << rep.k_double_value << "      "
         << fmt_double(rep.witness_log) << "\n";
    out.text = text.str();
    out.csv = "p,order,k_g,p_cubed,z_g,z_g_expected,k_double,witness_log\n" +
              std::to_string(rep.p) + "," + std::to_string(rep.group_order) + "," +
              std::to_string(rep.class_count) + "," + std::to_string(rep.p_cubed) + "," +
              std::to_string(rep.centralizer_order) + "," +
              std::to_string(rep.centralizer_order_expected) + "," +
              std::to_string(rep.k_double_value) + "," + fmt_double(rep.witness_log) + "\n";
    return out;
}

ReportDocument cmd_lemma(const RunConfig& cfg) {
    FinAbGroup b = FinAbGroup::from_moduli(parse_abelian_spec(cfg.b_spec).moduli);
    Rng rng(cfg.seed);

    ReportDocument out;
    out.doc = envelope(cfg);
    json payload;
    payload["B"] = b.to_string();
    payload["r"] = cfg.r;

    if (cfg.sindep) {
        long long templates = cfg.fuzz > 0 ? cfg.fuzz : 200;
        long long ok_count = 0;
        json failures = json::array();
        for (long long i = 0; i < templates; ++i) {
            auto t = random_wreath_template(rng, cfg.r, b, cfg.n);
            auto rep = s_independence_check(t);
            if (rep.ok)
                ++ok_count;
            else
                failures.push_back({{"template", i}});
        }
        payload["n"] = cfg.n;
        payload["templates"] = templates;
        payload["constant_over_s"] = ok_count;
        payload["failures"] = failures;
        payload["verdict"] = ok_count == templates ? "s-independent" : "violations-found";
        out.verification_ok = ok_count == templates;
        out.text = "s-independence: " + std::to_string(ok_count) + "/" +
                   std::to_string(templates) + " templates constant over s (B = " +
                   b.to_string() + ", r = " + std::to_string(cfg.r) + ", n = " +
                   std::to_string(cfg.n) + ")\n";
    } else {
        long long cases = cfg.fuzz > 0 ? cfg.fuzz : 1000;
        long long agree = 0, count_agree = 0;
        json failures = json::array();
        for (long long i = 0; i < cases; ++i) {
            auto sys = random_partition_system(rng, cfg.r, b);
            bool lemma = lemma_solvable(sys);
            auto ab = partition_system_to_ab(sys);
            auto exact = solve_ab_system(ab);
            auto brute = brute_force_count(ab);
            if (lemma == brute.solvable && exact.solvable == brute.solvable)
                ++agree;
            else
                failures.push_back({{"case", i}});
            if (exact.count == brute.count)
                ++count_agree;
        }
        payload["cases"] = cases;
        payload["solvability_agreements"] = agree;
        payload["count_agreements"] = count_agree;
        payload["failures"] = failures;
        payload["verdict"] = (agree == cases && count_agree == cases) ? "oracle-agreement"
                                                                      : "violations-found";
        out.verification_ok = agree == cases && count_agree == cases;
        out.text = "lemma fuzz: " + std::to_string(agree) + "/" + std::to_string(cases) +
                   " solvability agreements, " + std::to_string(count_agree) + "/" +
                   std::to_string(cases) + " count agreements (B = " + b.to_string() + ", r = " +
                   std::to_string(cfg.r) + ")\n";
    }
    out.doc["payload"] = payload;
    out.csv = out.text;
    return out;
}

std::string render(const ReportDocument& doc, const std::string& format) {
    if (format == "json")
        return doc.doc.dump(2) + "\n";
    if (format == "csv")
        return doc.csv;
    return doc.text + "elapsed: " + fmt_double(doc.seconds) + " s\n";
}

nlohmann::json table_json(const CharacterTable& t) {
    json j;
    j["e"] = t.exponent;
    j["degrees"] = t.degrees;
    json rows = json::array();
    for (const auto& row : t.values) {
        json r = json::array();
        for (const auto& v : row)
            r.push_back(coeffs_json(v));
        rows.push_back(std::move(r));
    }
    j["values"] = rows;
    return j;
}

} // namespace qd
