#include "config.hpp"

#include "rlwstab/errors.hpp"

#include <fstream>
#include <set>

namespace rlwstab::cli {

using nlohmann::json;

double RunConfig::param(const std::string& key) const
{
    auto it = params.find(key);
    if (it == params.end())
        throw ConfigError("missing parameter '" + key + "' for " + command + " " + model);
    return it->second;
}

double RunConfig::param_or(const std::string& key, double fallback) const
{
    auto it = params.find(key);
    return it == params.end() ? fallback : it->second;
}

void to_json(json& j, const Axis& a) { j = json{{"lo", a.lo}, {"hi", a.hi}, {"n", a.n}}; }

void from_json(const json& j, Axis& a)
{
    a.lo = j.at("lo").get<double>();
    a.hi = j.at("hi").get<double>();
    a.n = j.at("n").get<int>();
}

void to_json(json& j, const RunConfig& c)
{
    j = json{{"command", c.command}, {"name", c.name},         {"model", c.model},
             {"params", c.params},   {"nk", c.nk},             {"tau_points", c.tau_points},
             {"k_min", c.k_min},     {"samples", c.samples},   {"x", c.x},
             {"y", c.y},             {"profile", c.profile},   {"coeff_file", c.coeff_file},
             {"k_report", c.k_report}, {"n_edges", c.n_edges}, {"out_dir", c.out_dir},
             {"format", c.format},   {"jobs", c.jobs},         {"plot", c.plot},
             {"cache", c.cache}};
}

void from_json(const json& j, RunConfig& c)
{
    static const std::set<std::string> known{
        "command", "name",    "model",      "params",  "nk",      "tau_points", "k_min",
        "samples", "x",       "y",          "profile", "coeff_file", "k_report", "n_edges",
        "out_dir", "format",  "jobs",       "plot",    "cache",   "note"};
    for (auto it = j.begin(); it != j.end(); ++it)
        if (!known.contains(it.key()))
            throw ConfigError("unknown config key '" + it.key() + "'");

    RunConfig d;
    c.command = j.value("command", d.command);
    c.name = j.value("name", d.name);
    c.model = j.value("model", d.model);
    c.params = j.value("params", d.params);
    c.nk = j.value("nk", d.nk);
    c.tau_points = j.value("tau_points", d.tau_points);
    c.k_min = j.value("k_min", d.k_min);
    c.samples = j.value("samples", d.samples);
    c.x = j.value("x", d.x);
    c.y = j.value("y", d.y);
    c.profile = j.value("profile", d.profile);
    c.coeff_file = j.value("coeff_file", d.coeff_file);
    c.k_report = j.value("k_report", d.k_report);
    c.n_edges = j.value("n_edges", d.n_edges);
    c.out_dir = j.value("out_dir", d.out_dir);
    c.format = j.value("format", d.format);
    c.jobs = j.value("jobs", d.jobs);
    c.plot = j.value("plot", d.plot);
    c.cache = j.value("cache", d.cache);
}

std::string content_hash(const RunConfig& c)
{
    json j = c;
    for (const char* k : {"name", "out_dir", "format", "jobs", "plot", "cache"})
        j.erase(k);
    // FNV-1a over the canonical dump (keys sorted, shortest round-trip doubles)
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : j.dump()) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::vector<RunConfig> load_configs(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot open config file " + path);
    json j;
    try {
        j = json::parse(in);
        std::vector<RunConfig> runs;
        const json& list = j.is_array() ? j : j.contains("runs") ? j.at("runs") : json::array({j});
        for (const auto& item : list)
            runs.push_back(item.get<RunConfig>());
        if (runs.empty())
            throw ConfigError(path + ": no runs");
        return runs;
    } catch (const json::exception& e) {
        throw ConfigError(path + ": " + e.what());
    }
}

void validate(const RunConfig& c)
{
    static const std::set<std::string> commands{"wave", "spectrum", "map", "monodromy", "gkdv-check", "bands"};
    static const std::set<std::string> models{"rbou", "bl", "bbm"};
    if (!commands.contains(c.command))
        throw ConfigError("unknown command '" + c.command + "'");
    if (c.command != "gkdv-check" && !models.contains(c.model))
        throw ConfigError("unknown model '" + c.model + "' (expected rbou, bl or bbm)");
    if (c.format != "csv" && c.format != "json" && c.format != "both")
        throw ConfigError("format must be csv, json or both");
    if (c.nk < 1 || c.tau_points < 1 || c.samples < 2 || c.jobs < 0)
        throw ConfigError("nk, tau_points, samples and jobs must be positive");
    if (c.command == "map" && (c.x.n < 2 || c.y.n < 2))
        throw ConfigError("map grids need at least 2 points per axis");
    if (c.command == "gkdv-check" && c.profile != "cos" && c.profile != "zero" && c.profile != "file")
        throw ConfigError("profile must be cos, zero or file");
}

} // namespace rlwstab::cli
