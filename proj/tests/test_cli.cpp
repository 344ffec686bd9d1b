#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "helpers.hpp"
#include "oracle_values.hpp"

#ifndef SPDCTOOL_BIN
#error "SPDCTOOL_BIN must point at the command-line binary"
#endif

using namespace spdc;
namespace fs = std::filesystem;

namespace {

std::string scratch(const std::string& name) {
    static const fs::path dir = [] {
        fs::path p = fs::temp_directory_path() / "spdc_cli_tests";
        fs::create_directories(p);
        return p;
    }();
    return (dir / name).string();
}

std::string q(const std::string& s) { return "\"" + s + "\""; }

const std::string tool = q(SPDCTOOL_BIN);
const std::string db = q(MATERIAL_DB_PATH);

int run(const std::string& cmd) {
    const int st = std::system(cmd.c_str());
    REQUIRE(st != -1);
    REQUIRE(WIFEXITED(st));
    return WEXITSTATUS(st);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(bool(in));
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

std::string benchmark_target_flags() {
    return " --lambda-s-um 0.8 --lambda-i-um 1.5 --lc-s-m 1e-3 --lc-i-m 1e-2";
}

// first run writes the benchmark recipe used by the later cases
const std::string& recipe_path() {
    static const std::string path = [] {
        const auto p = scratch("recipe.json");
        const auto log = scratch("design.log");
        const int rc = run(tool + " design --material " + db + benchmark_target_flags() +
                           " --pump-branch extraordinary --out " + q(p) + " > " + q(log) +
                           " 2>&1");
        REQUIRE(rc == 0);
        return p;
    }();
    return path;
}

} // namespace

TEST_CASE("design prints the recipe table and writes the json") {
    const auto& p = recipe_path();
    const auto out = slurp(scratch("design.log"));
    CHECK(contains(out, "A(1e12rad/s)"));
    CHECK(contains(out, "pump center"));

    const auto r = recipe_from_json(load_json(p));
    CHECK(helpers::rel_err(r.spectral_bandwidth, oracle::z_A) < 1e-10);
    CHECK(helpers::rel_err(r.spatial_bandwidth, oracle::z_B) < 1e-10);
    CHECK(helpers::rel_err(r.shear, oracle::z_C) < 1e-10);
    CHECK(r.convention == "2pi_c_over_lc");
    CHECK(r.targets.branches.pump == index_branch::extraordinary);
}

TEST_CASE("design accepts direct frequency targets") {
    const auto t = helpers::benchmark_targets_z();
    char cmd[1024];
    std::snprintf(cmd, sizeof cmd,
                  " design --omega-s %.17g --omega-i %.17g --sigma-s %.17g --sigma-i %.17g"
                  " --out ",
                  t.omega_s0, t.omega_i0, t.sigma_s, t.sigma_i);
    const auto p = scratch("recipe_direct.json");
    REQUIRE(run(tool + cmd + q(p) + " --material " + db + " > /dev/null 2>&1") == 0);
    const auto r = recipe_from_json(load_json(p));
    CHECK(r.convention == "direct");
    CHECK(helpers::rel_err(r.spectral_bandwidth, oracle::z_A) < 1e-10);
}

TEST_CASE("design rejects mixed or missing target styles") {
    CHECK(run(tool + " design --material " + db +
              " --lambda-s-um 0.8 --sigma-s 1e12 > /dev/null 2>&1") == 2);
    CHECK(run(tool + " design --material " + db + " > /dev/null 2>&1") == 2);
    CHECK(run(tool + " design --material " + db + benchmark_target_flags() +
              " --convention half_c > /dev/null 2>&1") == 2);
}

TEST_CASE("design covers both pump components when asked") {
    const auto p = scratch("design.json");
    const int rc = run(tool + " design --material " + db + benchmark_target_flags() +
                       " --entangled --phi 0.75 --out " + q(p) + " > /dev/null 2>&1");
    REQUIRE(rc == 0);
    const auto d = design_from_json(load_json(p));
    CHECK(d.power_ratio == Catch::Approx(oracle::balance_ratio_bbo).epsilon(1e-9));
    CHECK(d.relative_phase == 0.75);
    CHECK(helpers::rel_err(d.recipe_z.spatial_bandwidth, oracle::z_B) < 1e-10);
    CHECK(helpers::rel_err(d.recipe_y.spatial_bandwidth, oracle::y_B) < 1e-10);
}

TEST_CASE("config file fills in what the flags leave unset") {
    const auto cfg = scratch("targets.json");
    save_json(cfg, json{{"lambda_s_um", 0.8},
                        {"lambda_i_um", 1.5},
                        {"lc_s_m", 1.0e-3},
                        {"lc_i_m", 1.0e-2},
                        {"material", std::string(MATERIAL_DB_PATH)}});
    const auto p = scratch("recipe_cfg.json");
    REQUIRE(run(tool + " design --config " + q(cfg) + " --out " + q(p) +
                " > /dev/null 2>&1") == 0);
    const auto r = recipe_from_json(load_json(p));
    CHECK(helpers::rel_err(r.spectral_bandwidth, oracle::z_A) < 1e-10);

    // a flag beats the config value: shift the signal coherence length
    const auto p2 = scratch("recipe_cfg2.json");
    REQUIRE(run(tool + " design --config " + q(cfg) + " --lc-s-m 2e-3 --out " + q(p2) +
                " > /dev/null 2>&1") == 0);
    const auto r2 = recipe_from_json(load_json(p2));
    CHECK(r2.targets.sigma_s == Catch::Approx(r.targets.sigma_s / 2.0).epsilon(1e-12));
}

TEST_CASE("jsa writes the grid with its sidecar") {
    const auto csv = scratch("jsa.csv");
    const auto log = scratch("jsa.log");
    const int rc = run(tool + " jsa --recipe " + q(recipe_path()) +
                       " --mode closed-form --grid-size 64 --out " + q(csv) + " > " + q(log) +
                       " 2>&1");
    REQUIRE(rc == 0);
    CHECK(contains(slurp(log), "K = "));

    const auto j = read_grid_csv(csv);
    CHECK(j.grid.n_s() == 64);
    CHECK(j.grid.n_i() == 64);

    const auto meta = load_json(sidecar_path(csv));
    CHECK(meta.at("provenance") == "closed-form");
    CHECK(meta.at("schmidt").at("schmidt_number").get<double>() < 1.0 + 1e-6);
    CHECK(meta.at("origin").contains("A"));
}

TEST_CASE("jsa in full mode resolves the material from the environment") {
    const auto csv = scratch("jsa_full.csv");
    const int rc = run("SPDCTOOL_MATERIAL_DB=" + db + " " + tool + " jsa" +
                       benchmark_target_flags() + " --pump-branch extraordinary" +
                       " --mode full --grid-size 64 --out " + q(csv) + " > /dev/null 2>&1");
    REQUIRE(rc == 0);
    const auto meta = load_json(sidecar_path(csv));
    CHECK(meta.at("provenance") == "oracle-full");
    const double K = meta.at("schmidt").at("schmidt_number").get<double>();
    CHECK(K > 1.0 - 1e-9);
    CHECK(K < 1.01);
}

TEST_CASE("jsa draws the pump overlay on request") {
    const auto csv = scratch("jsa_ov.csv");
    const auto ov = scratch("overlay.csv");
    const int rc = run(tool + " jsa --recipe " + q(recipe_path()) + " --material " + db +
                       " --mode linearized --grid-size 64 --out " + q(csv) +
                       " --pump-overlay " + q(ov) + " > /dev/null 2>&1");
    REQUIRE(rc == 0);
    const auto o = read_grid_csv(ov);
    CHECK(o.values.maxCoeff() > 0.9);
    CHECK(o.values.maxCoeff() <= 1.0 + 1e-12);
}

TEST_CASE("jsa failure modes use distinct exit codes") {
    const auto csv = scratch("never.csv");
    // validation: bad grid, missing out, missing material, no targets
    CHECK(run(tool + " jsa --recipe " + q(recipe_path()) +
              " --mode closed-form --grid-size 8 --out " + q(csv) + " > /dev/null 2>&1") == 2);
    CHECK(run(tool + " jsa --recipe " + q(recipe_path()) +
              " --mode closed-form > /dev/null 2>&1") == 2);
    CHECK(run("env -u SPDCTOOL_MATERIAL_DB " + tool + " jsa --recipe " + q(recipe_path()) +
              " --mode full --out " + q(csv) + " > /dev/null 2>&1") == 2);
    CHECK(run(tool + " jsa --material " + db + " --out " + q(csv) + " > /dev/null 2>&1") == 2);
    // physics: targets outside the material validity range
    CHECK(run(tool + " jsa --material " + db +
              " --omega-s 1e16 --omega-i 1e15 --sigma-s 1e12 --sigma-i 1e12 --out " + q(csv) +
              " > /dev/null 2>&1") == 3);
    // io: unreadable material database
    CHECK(run(tool + " jsa --material " + q(scratch("nodb.json")) + benchmark_target_flags() +
              " --out " + q(csv) + " > /dev/null 2>&1") == 4);
}

TEST_CASE("analyze recomputes the report from a grid csv") {
    const auto csv = scratch("jsa.csv"); // written by the sidecar test
    if (!fs::exists(csv)) {
        REQUIRE(run(tool + " jsa --recipe " + q(recipe_path()) +
                    " --mode closed-form --grid-size 64 --out " + q(csv) +
                    " > /dev/null 2>&1") == 0);
    }
    const auto log = scratch("analyze.log");
    const auto rep = scratch("analysis.json");
    REQUIRE(run(tool + " analyze --in " + q(csv) + " --out " + q(rep) + " > " + q(log) +
                " 2>&1") == 0);
    const auto out = slurp(log);
    CHECK(contains(out, "provenance: closed-form"));
    CHECK(contains(out, "K = "));
    CHECK(contains(out, "pearson rho"));

    const auto meta = load_json(rep);
    CHECK(meta.at("schmidt").at("schmidt_number").get<double>() < 1.0 + 1e-6);

    CHECK(run(tool + " analyze --in " + q(scratch("missing.csv")) + " > /dev/null 2>&1") == 4);
    CHECK(run(tool + " analyze > /dev/null 2>&1") == 2);
}

TEST_CASE("map-coords inverts the pump carrier to the target centers") {
    const auto r = recipe_from_json(load_json(recipe_path()));
    char args[256];
    std::snprintf(args, sizeof args, " --k %.17g --omega %.17g", r.k_p / r.n_p, r.omega_p);
    const auto log = scratch("map.log");
    REQUIRE(run(tool + " map-coords --recipe " + q(recipe_path()) + args + " > " + q(log) +
                " 2>&1") == 0);
    const auto out = slurp(log);

    auto grab = [&](const std::string& key) {
        const auto pos = out.find(key + " = ");
        REQUIRE(pos != std::string::npos);
        return std::stod(out.substr(pos + key.size() + 3));
    };
    CHECK(helpers::rel_err(grab("omega_s"), r.targets.omega_s0) < 1e-12);
    CHECK(helpers::rel_err(grab("omega_i"), r.targets.omega_i0) < 1e-12);

    CHECK(run(tool + " map-coords --recipe " + q(recipe_path()) + " --k 0 > /dev/null 2>&1") ==
          2);
}

TEST_CASE("materials subcommand reports the database entry") {
    const auto log = scratch("materials.log");
    REQUIRE(run(tool + " materials --material " + db + " --at-um 0.5321 > " + q(log) +
                " 2>&1") == 0);
    const auto out = slurp(log);
    CHECK(contains(out, "BBO"));
    CHECK(contains(out, "n_o(0.5321"));
    CHECK(contains(out, "group index"));
    CHECK(contains(out, "chi2_yyy"));
}

TEST_CASE("benchmark reproduction passes its tolerances end to end") {
    const auto cal = scratch("calibration.json");
    const auto log = scratch("table.log");
    REQUIRE(run(tool + " reproduce-table1 --material " + db + " --out " + q(cal) + " > " +
                q(log) + " 2>&1") == 0);
    const auto out = slurp(log);
    CHECK(contains(out, "tolerances met"));
    CHECK(contains(out, "reference:"));

    const auto j = load_json(cal);
    CHECK(j.at("within_tolerance").get<bool>());
    CHECK(j.at("convention") == "2pi_c_over_lc");
}

TEST_CASE("top-level command line behavior") {
    CHECK(run(tool + " --help > /dev/null 2>&1") == 0);
    CHECK(run(tool + " design --help > /dev/null 2>&1") == 0);
    CHECK(run(tool + " > /dev/null 2>&1") == 2);
    CHECK(run(tool + " frobnicate > /dev/null 2>&1") == 2);
    CHECK(run(tool + " design --no-such-flag > /dev/null 2>&1") == 2);
}
