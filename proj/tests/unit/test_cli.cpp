#include "doctest.h"

#include "commands.hpp"
#include "config.hpp"
#include "output.hpp"

#include "rlwstab/errors.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace rlwstab;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p)
{
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

cli::RunConfig spectrum_config(const std::string& out)
{
    cli::RunConfig c;
    c.command = "spectrum";
    c.model = "rbou";
    c.params = {{"alpha", -0.7872}, {"beta", -0.006403}, {"gamma", 1.0}};
    c.nk = 30;
    c.tau_points = 6;
    c.out_dir = out;
    c.jobs = 2;
    return c;
}

} // namespace

TEST_CASE("config round trip")
{
    cli::RunConfig c = spectrum_config("x");
    c.x = {-2.5, 0.0, 11};
    c.plot = true;
    c.params["gamma"] = 0.1 + 0.2; // not exactly representable in short decimal
    const json j = c;
    const auto back = json::parse(j.dump()).get<cli::RunConfig>();
    CHECK(back == c);
    CHECK_THROWS_AS(json({{"command", "wave"}, {"modle", "bl"}}).get<cli::RunConfig>(), ConfigError);
}

TEST_CASE("content hash ignores output placement")
{
    auto a = spectrum_config("one");
    auto b = spectrum_config("two");
    b.jobs = 7;
    b.format = "csv";
    CHECK(cli::content_hash(a) == cli::content_hash(b));
    b.nk = 31;
    CHECK(cli::content_hash(a) != cli::content_hash(b));
}

TEST_CASE("csv number formatting")
{
    CHECK(cli::csv_number(0.1) == "0.10000000000000001");
    CHECK(cli::csv_number(-0.0) == "0");
    CHECK(std::stod(cli::csv_number(1.0 / 3)) == 1.0 / 3);
}

TEST_CASE("validation")
{
    cli::RunConfig c;
    c.command = "wave";
    c.model = "kdv";
    CHECK_THROWS_AS(cli::validate(c), ConfigError);
    c.model = "bl";
    c.format = "xml";
    CHECK_THROWS_AS(cli::validate(c), ConfigError);
    c.format = "json";
    c.command = "map";
    c.x.n = 1;
    CHECK_THROWS_AS(cli::validate(c), ConfigError);
}

TEST_CASE("wave summaries")
{
    cli::RunConfig c;
    c.command = "wave";
    c.out_dir = "cli_wave";
    c.model = "rbou";
    c.params = {{"alpha", -1.246}, {"beta", -1.149}, {"gamma", 1}};
    auto j = cli::run(c, c.out_dir);
    CHECK(j.at("m").get<double>() == doctest::Approx(0.95681).epsilon(1e-5));
    CHECK(slurp("cli_wave/profile.csv").rfind("x,u,v\n", 0) == 0);

    c.model = "bbm";
    c.params = {{"c", 3}, {"b1", 0}, {"b2", -2}};
    j = cli::run(c, "cli_wave_bbm");
    CHECK(j.at("one_plus_eta_mean").get<double>() == doctest::Approx(-0.70875).epsilon(1e-4));
    CHECK(slurp("cli_wave_bbm/profile.csv").rfind("x,u,eta\n", 0) == 0);

    c.model = "bl";
    c.params = {{"m", 0.995}, {"a", 10}};
    CHECK_THROWS_AS(cli::run(c, "cli_wave_bad"), DomainError);
}

TEST_CASE("spectrum output is deterministic and the cache reproduces it")
{
    fs::remove_all("cli_spec");
    auto c = spectrum_config("cli_spec");
    c.cache = false;
    const auto j1 = cli::run(c, "cli_spec/a");
    c.jobs = 1;
    cli::run(c, "cli_spec/b");
    CHECK(slurp("cli_spec/a/spectrum.csv") == slurp("cli_spec/b/spectrum.csv"));
    CHECK(j1.at("rows").get<std::size_t>() == 6u * 2 * (2 * 30 + 1));
    CHECK(j1.at("summary").at("gap_sigma").get<double>() == doctest::Approx(0.006726).epsilon(3e-3));
    CHECK(slurp("cli_spec/a/spectrum.csv").rfind("tau,re_lambda,im_lambda,edge_flag\n", 0) == 0);

    c.cache = true;
    const auto miss = cli::run(c, "cli_spec/c");
    const auto hit = cli::run(c, "cli_spec/d");
    CHECK_FALSE(miss.at("cache_hit").get<bool>());
    CHECK(hit.at("cache_hit").get<bool>());
    CHECK(slurp("cli_spec/c/spectrum.csv") == slurp("cli_spec/d/spectrum.csv"));
    CHECK(slurp("cli_spec/a/spectrum.csv") == slurp("cli_spec/d/spectrum.csv"));
}

TEST_CASE("maps")
{
    cli::RunConfig c;
    c.command = "map";
    c.format = "csv";
    c.model = "rbou";
    c.x = {-2.5, 0.99, 30};
    c.y = {-1.5, 0.99, 30};
    cli::run(c, "cli_map_rbou");
    const auto rbou_csv = slurp("cli_map_rbou/map.csv");
    for (const char* absent : {",g0\n", ",g1\n", ",b1\n", ",b2\n"})
        CHECK(rbou_csv.find(absent) == std::string::npos);
    CHECK(rbou_csv.find(",g2\n") != std::string::npos);

    c.model = "bl";
    c.x = {0.05, 0.995, 12};
    c.y = {0.2, 3.0, 12};
    cli::run(c, "cli_map_bl");
    CHECK(slurp("cli_map_bl/map.csv").find(",b1\n") == std::string::npos);

    c.model = "bbm";
    c.x = {0, 1, 2};
    c.y = {0, 40, 2};
    cli::run(c, "cli_map_bbm");
    const auto bbm_csv = slurp("cli_map_bbm/map.csv");
    CHECK(bbm_csv.find("0,0,4\n") != std::string::npos);
    CHECK(bbm_csv.find("0,40,2\n") != std::string::npos);
}

TEST_CASE("monodromy and gkdv-check")
{
    cli::RunConfig c;
    c.command = "monodromy";
    c.format = "json";
    c.model = "rbou";
    c.params = {{"alpha", -0.7872}, {"beta", -0.006403}};
    auto j = cli::run(c, "cli_mono");
    CHECK(j.at("kind") == "gap");
    CHECK(j.at("sigma").get<double>() == doctest::Approx(0.006726).epsilon(3e-3));
    c.model = "bl";
    c.params = {{"m", 0.995}, {"a", 0.628}};
    j = cli::run(c, "cli_mono");
    CHECK(j.at("kind") == "band");
    CHECK(j.at("location") == "b3");

    c.command = "gkdv-check";
    c.nk = 64;
    c.profile = "cos";
    c.params = {{"c", 1}};
    CHECK(cli::run(c, "cli_gkdv").at("passed").get<bool>());
    c.params = {{"c", -1}};
    CHECK_THROWS_AS(cli::run(c, "cli_gkdv"), DomainError);
}

TEST_CASE("recipes parse")
{
    const fs::path dir = fs::path(RLWSTAB_SOURCE_DIR) / "recipes";
    int n = 0;
    for (const auto& e : fs::directory_iterator(dir)) {
        CAPTURE(e.path().string());
        const auto runs = cli::load_configs(e.path().string());
        for (const auto& r : runs)
            CHECK_NOTHROW(cli::validate(r));
        ++n;
    }
    CHECK(n == 17);
}
