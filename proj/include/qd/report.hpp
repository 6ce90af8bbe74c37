#pragma once

#include <string>

#include <json.hpp>

#include "qd/chartab.hpp"

namespace qd {

inline constexpr const char* kToolVersion = "0.1.0";

struct RunConfig {
    std::string command;
    std::string group_spec;
    long long nmax = 8;
    int p = 3;
    std::string format = "text"; // json | csv | text
    int jobs = 1;
    std::uint64_t seed = 0;
    std::uint64_t cap_order = 2'000'000;
    long long fuzz = 0;
    bool sindep = false;
    int r = 4;
    std::string b_spec = "cyclic:2";
    long long n = 12;
};

/// `doc` is the canonical JSON payload; it carries no timing or timestamps so
/// identical (config, seed) reruns are byte-identical. Timing goes into the
/// text rendering only.
struct ReportDocument {
    nlohmann::json doc;
    bool verification_ok = true;
    double seconds = 0;
    std::string text;
    std::string csv;
};

ReportDocument cmd_indicators(const RunConfig& cfg);
ReportDocument cmd_galois(const RunConfig& cfg);
ReportDocument cmd_bounds(const RunConfig& cfg);
ReportDocument cmd_lemma(const RunConfig& cfg);

std::string render(const ReportDocument& doc, const std::string& format);

/// dump format: {e, degrees, values = per-irrep coefficient vectors}
nlohmann::json table_json(const CharacterTable& t);

} // namespace qd
