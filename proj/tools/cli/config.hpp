#pragma once

#include <nlohmann/json.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <string>

namespace rlwstab::cli {

struct Axis {
    double lo = 0.0, hi = 1.0;
    int n = 2;
    bool operator==(const Axis&) const = default;
};

// Everything a run depends on. `out_dir`, `format`, `jobs`, `plot` and `cache`
// only steer where and how results land; they are left out of the content hash.
struct RunConfig {
    std::string command;
    std::string name; // subdirectory for multi-run recipes
    std::string model;
    std::map<std::string, double> params;

    int nk = 100;
    int tau_points = 200;
    int k_min = 20;
    int samples = 256;

    Axis x, y; // map grid

    std::string profile = "cos"; // gkdv-check: cos | zero | file
    std::string coeff_file;
    int k_report = 20;
    int n_edges = 12;

    std::string out_dir = ".";
    std::string format = "both";
    int jobs = 0;
    bool plot = false;
    bool cache = true;

    bool operator==(const RunConfig&) const = default;

    double param(const std::string& key) const;
    double param_or(const std::string& key, double fallback) const;
    bool writes_csv() const { return format != "json"; }
    bool writes_json() const { return format != "csv"; }
};

void to_json(nlohmann::json& j, const Axis& a);
void from_json(const nlohmann::json& j, Axis& a);
void to_json(nlohmann::json& j, const RunConfig& c);
void from_json(const nlohmann::json& j, RunConfig& c);

// Key over the fields that determine the numbers, as 16 hex digits.
std::string content_hash(const RunConfig& c);

// One config object, or {"runs": [...]} / a bare array for multi-panel recipes.
std::vector<RunConfig> load_configs(const std::string& path);

void validate(const RunConfig& c);

} // namespace rlwstab::cli
