// spdctool: design pump pulses for frequency-uncorrelated photon pairs and
// verify them by simulating the joint spectral amplitude under real material
// dispersion.
//
// Exit codes: 0 ok, 2 input validation, 3 physics/domain, 4 I/O.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include <spdc/spdc.hpp>

namespace {

constexpr const char* material_env = "SPDCTOOL_MATERIAL_DB";

std::string resolve_material_path(const std::string& flag_value) {
    if (!flag_value.empty()) return flag_value;
    if (const char* env = std::getenv(material_env); env && *env) return env;
    throw spdc::validation_error(std::string("no material database: pass --material or set ") +
                                 material_env);
}

std::string fmt3(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%-10.3g", v);
    return buf;
}

std::string fmt17(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// One table row in the benchmark's units: A in 1e12 rad/s, B in 1e3 rad/m,
// C in 1e-9 s/m, theta in degrees.
void print_recipe_row(const std::string& label, const spdc::pump_recipe& r) {
    std::cout << label << std::string(label.size() < 11 ? 11 - label.size() : 1, ' ')
              << fmt3(r.spectral_bandwidth / 1e12) << fmt3(r.spatial_bandwidth / 1e3)
              << fmt3(r.shear / 1e-9) << fmt3(spdc::degrees(r.incidence_angle_rad)) << '\n';
}

void print_recipe_header() {
    std::cout << "component  A(1e12rad/s) B(1e3rad/m) C(1e-9s/m) theta(deg)\n";
}

// Targets come in exactly one of two styles: wavelengths plus coherence
// lengths, or center frequencies plus bandwidths.
struct target_options {
    double lambda_s_um = 0.0, lambda_i_um = 0.0;
    double lc_s_m = 0.0, lc_i_m = 0.0;
    double omega_s = 0.0, omega_i = 0.0;
    double sigma_s = 0.0, sigma_i = 0.0;
    std::string convention = spdc::to_string(spdc::calibrated_convention);

    CLI::Option *o_ls = nullptr, *o_li = nullptr, *o_lcs = nullptr, *o_lci = nullptr;
    CLI::Option *o_ws = nullptr, *o_wi = nullptr, *o_ss = nullptr, *o_si = nullptr;
    CLI::Option* o_conv = nullptr;

    void add_to(CLI::App* cmd) {
        o_ls = cmd->add_option("--lambda-s-um", lambda_s_um, "signal center wavelength, um");
        o_li = cmd->add_option("--lambda-i-um", lambda_i_um, "idler center wavelength, um");
        o_lcs = cmd->add_option("--lc-s-m", lc_s_m, "signal coherence length, m");
        o_lci = cmd->add_option("--lc-i-m", lc_i_m, "idler coherence length, m");
        o_ws = cmd->add_option("--omega-s", omega_s, "signal center frequency, rad/s");
        o_wi = cmd->add_option("--omega-i", omega_i, "idler center frequency, rad/s");
        o_ss = cmd->add_option("--sigma-s", sigma_s, "signal bandwidth, rad/s");
        o_si = cmd->add_option("--sigma-i", sigma_i, "idler bandwidth, rad/s");
        o_conv = cmd->add_option("--convention", convention,
                                 "coherence-length to bandwidth convention");
    }

    // config file fills in whatever the command line left unset; flags win
    void apply_config(const spdc::json& cfg) {
        auto fill = [&](CLI::Option* opt, const char* key, double& slot) {
            if (opt->count() == 0 && cfg.contains(key)) slot = cfg.at(key).get<double>();
        };
        fill(o_ls, "lambda_s_um", lambda_s_um);
        fill(o_li, "lambda_i_um", lambda_i_um);
        fill(o_lcs, "lc_s_m", lc_s_m);
        fill(o_lci, "lc_i_m", lc_i_m);
        fill(o_ws, "omega_s", omega_s);
        fill(o_wi, "omega_i", omega_i);
        fill(o_ss, "sigma_s", sigma_s);
        fill(o_si, "sigma_i", sigma_i);
        if (o_conv->count() == 0 && cfg.contains("convention"))
            convention = cfg.at("convention").get<std::string>();
    }

    bool any_given(const spdc::json* cfg) const {
        auto given = [&](const CLI::Option* o, const char* key) {
            return o->count() > 0 || (cfg && cfg->contains(key));
        };
        return given(o_ls, "lambda_s_um") || given(o_li, "lambda_i_um") ||
               given(o_lcs, "lc_s_m") || given(o_lci, "lc_i_m") || given(o_ws, "omega_s") ||
               given(o_wi, "omega_i") || given(o_ss, "sigma_s") || given(o_si, "sigma_i");
    }

    spdc::design_targets resolve(const spdc::axis_assignment& branches,
                                 std::string& convention_label_out) const {
        const bool style_wl = lambda_s_um > 0.0 || lambda_i_um > 0.0 || lc_s_m > 0.0 || lc_i_m > 0.0;
        const bool style_direct = omega_s > 0.0 || omega_i > 0.0 || sigma_s > 0.0 || sigma_i > 0.0;
        if (style_wl == style_direct)
            throw spdc::validation_error(
                "give targets in exactly one style: wavelengths + coherence lengths "
                "(--lambda-*-um, --lc-*-m) or frequencies + bandwidths (--omega-*, --sigma-*)");
        spdc::design_targets t;
        t.branches = branches;
        if (style_wl) {
            if (!(lambda_s_um > 0.0) || !(lambda_i_um > 0.0) || !(lc_s_m > 0.0) || !(lc_i_m > 0.0))
                throw spdc::validation_error(
                    "wavelength-style targets need all of --lambda-s-um, --lambda-i-um, "
                    "--lc-s-m, --lc-i-m positive");
            const auto conv = spdc::convention_from_string(convention);
            t.omega_s0 = spdc::omega_from_wavelength_um(lambda_s_um);
            t.omega_i0 = spdc::omega_from_wavelength_um(lambda_i_um);
            t.sigma_s = spdc::bandwidth_from_coherence_length(lc_s_m, conv);
            t.sigma_i = spdc::bandwidth_from_coherence_length(lc_i_m, conv);
            convention_label_out = convention;
        } else {
            t.omega_s0 = omega_s;
            t.omega_i0 = omega_i;
            t.sigma_s = sigma_s;
            t.sigma_i = sigma_i;
            convention_label_out = "direct";
        }
        spdc::validate(t);
        return t;
    }
};

struct branch_options {
    std::string pump = "extraordinary", signal = "ordinary", idler = "ordinary";
    std::string pump_y = "ordinary", pump_z = "extraordinary";
    std::string pump_label = "z";

    void add_to(CLI::App* cmd, bool entangled_flags) {
        cmd->add_option("--pump-branch", pump, "index branch of the pump (single-component design)");
        cmd->add_option("--signal-branch", signal, "index branch of the signal photon");
        cmd->add_option("--idler-branch", idler, "index branch of the idler photon");
        cmd->add_option("--pump-label", pump_label, "name of the pump polarization component");
        if (entangled_flags) {
            cmd->add_option("--pump-branch-y", pump_y, "pump branch of the y component");
            cmd->add_option("--pump-branch-z", pump_z, "pump branch of the z component");
        }
    }

    spdc::axis_assignment single() const {
        return {pump_label, spdc::branch_from_string(pump), spdc::branch_from_string(signal),
                spdc::branch_from_string(idler)};
    }
    spdc::axis_assignment for_y() const {
        return {"y", spdc::branch_from_string(pump_y), spdc::branch_from_string(signal),
                spdc::branch_from_string(idler)};
    }
    spdc::axis_assignment for_z() const {
        return {"z", spdc::branch_from_string(pump_z), spdc::branch_from_string(signal),
                spdc::branch_from_string(idler)};
    }
};

spdc::json maybe_config(const std::string& path) {
    if (path.empty()) return spdc::json::object();
    return spdc::load_json(path);
}

int cmd_materials(const std::string& material_path, double at_um) {
    const auto m = spdc::load_material(resolve_material_path(material_path));
    std::cout << "material: " << m.name << '\n';
    std::cout << "source:   " << m.source << '\n';
    for (auto b : {spdc::index_branch::ordinary, spdc::index_branch::extraordinary}) {
        const auto& sc = m.branch(b);
        std::cout << "  " << spdc::to_string(b) << ": form " << spdc::to_string(sc.form)
                  << ", valid [" << sc.lambda_min_um << ", " << sc.lambda_max_um << "] um\n";
    }
    for (const auto& [label, v] : m.chi2)
        std::cout << "  chi2_" << label << " = " << v * 1e12 << " pm/V\n";
    if (at_um > 0.0) {
        const double w = spdc::omega_from_wavelength_um(at_um);
        for (auto b : {spdc::index_branch::ordinary, spdc::index_branch::extraordinary})
            std::cout << "  n_" << (b == spdc::index_branch::ordinary ? 'o' : 'e') << '('
                      << at_um << " um) = " << spdc::refractive_index(m, b, w)
                      << "   group index " << spdc::group_index(m.branch(b), at_um) << '\n';
    }
    return 0;
}

int cmd_design(const std::string& material_path, const std::string& config_path,
               target_options& topt, const branch_options& bopt, bool entangled, double phi,
               const std::string& out_path) {
    const auto cfg = maybe_config(config_path);
    topt.apply_config(cfg);
    std::string mat_path = material_path;
    if (mat_path.empty() && cfg.contains("material"))
        mat_path = cfg.at("material").get<std::string>();
    const auto m = spdc::load_material(resolve_material_path(mat_path));

    std::string conv_label;
    if (entangled) {
        const auto targets = topt.resolve(bopt.for_z(), conv_label);
        const auto d = spdc::make_entangled_design(targets, m, bopt.for_y(), bopt.for_z(), phi,
                                                   spdc::benchmark::chi_label_y,
                                                   spdc::benchmark::chi_label_z, conv_label);
        print_recipe_header();
        print_recipe_row("z", d.recipe_z);
        print_recipe_row("y", d.recipe_y);
        std::cout << "power ratio P_z/P_y = " << d.power_ratio << ", relative phase "
                  << d.relative_phase << " rad\n";
        std::cout << "pump center: omega_p = " << fmt17(d.recipe_z.omega_p) << " rad/s (lambda_p "
                  << spdc::wavelength_um(d.recipe_z.omega_p) << " um)\n";
        if (!out_path.empty()) spdc::save_json(out_path, spdc::design_to_json(d));
    } else {
        const auto targets = topt.resolve(bopt.single(), conv_label);
        const auto r = spdc::make_recipe(targets, m, conv_label);
        print_recipe_header();
        print_recipe_row(targets.branches.pump_label, r);
        std::cout << "pump center: omega_p = " << fmt17(r.omega_p) << " rad/s (lambda_p "
                  << spdc::wavelength_um(r.omega_p) << " um), k_p = " << fmt17(r.k_p)
                  << " rad/m, n_p = " << r.n_p << '\n';
        if (!out_path.empty()) spdc::save_json(out_path, spdc::recipe_to_json(r));
    }
    return 0;
}

int cmd_jsa(const std::string& material_path, const std::string& config_path,
            const std::string& recipe_path, target_options& topt, const branch_options& bopt,
            const std::string& mode, std::size_t grid_size, double span_sigma,
            const std::string& out_path, const std::string& overlay_path) {
    const auto cfg = maybe_config(config_path);
    topt.apply_config(cfg);
    std::string mode_v = mode;
    if (mode_v.empty()) mode_v = cfg.value("mode", "full");
    std::string mat_path = material_path;
    if (mat_path.empty() && cfg.contains("material"))
        mat_path = cfg.at("material").get<std::string>();
    if (out_path.empty()) throw spdc::validation_error("--out is required for the grid CSV");

    std::optional<spdc::pump_recipe> recipe;
    std::optional<spdc::material> mat;
    std::string conv_label;
    if (!recipe_path.empty()) {
        recipe = spdc::recipe_from_json(spdc::load_json(recipe_path));
    } else if (topt.any_given(&cfg)) {
        // a recipe needs the material even for closed-form runs; branch flags
        // describe a single pathway here
        mat = spdc::load_material(resolve_material_path(mat_path));
        recipe = spdc::make_recipe(topt.resolve(bopt.single(), conv_label), *mat, conv_label);
    } else {
        throw spdc::validation_error("give --recipe or a target set");
    }

    spdc::joint_spectral_amplitude j;
    if (mode_v == "closed-form") {
        j = spdc::jsa_closed_form(recipe->targets,
                                  spdc::make_centered_grid(recipe->targets, grid_size, span_sigma));
    } else {
        const auto dm = spdc::dispersion_mode_from_string(mode_v);
        if (!mat) mat = spdc::load_material(resolve_material_path(mat_path));
        j = spdc::jsa_from_recipe(*mat, *recipe,
                                  spdc::make_centered_grid(recipe->targets, grid_size, span_sigma),
                                  dm);
    }

    const auto rep = spdc::schmidt_analysis(j);
    const auto marg = spdc::marginals(j);
    spdc::write_grid_csv(out_path, j);
    spdc::save_json(spdc::sidecar_path(out_path),
                    spdc::jsa_metadata(j, rep, marg, spdc::recipe_to_json(*recipe)));

    if (!overlay_path.empty()) {
        spdc::joint_spectral_amplitude ov;
        ov.grid = j.grid;
        ov.tag = j.tag;
        ov.values.resize(j.values.rows(), j.values.cols());
        for (std::size_t r = 0; r < ov.grid.n_i(); ++r)
            for (std::size_t c = 0; c < ov.grid.n_s(); ++c) {
                const auto pc = spdc::map_photon_to_pump_coords(*recipe, ov.grid.omega_s[c],
                                                                ov.grid.omega_i[r]);
                ov.values(Eigen::Index(r), Eigen::Index(c)) =
                    spdc::pump_envelope_factored(*recipe, pc.k, pc.omega);
            }
        spdc::write_grid_csv(overlay_path, ov);
    }

    std::cout << "grid " << j.grid.n_i() << "x" << j.grid.n_s() << " (" << spdc::to_string(j.tag)
              << ") -> " << out_path << '\n';
    std::cout << "K = " << fmt17(rep.schmidt_number) << ", purity = " << rep.purity
              << ", entropy = " << rep.entropy_bits << " bits, rho = " << fmt17(rep.pearson_rho)
              << '\n';
    std::cout << "signal: center " << fmt17(marg.center_s) << " width " << fmt17(marg.width_s)
              << '\n';
    std::cout << "idler:  center " << fmt17(marg.center_i) << " width " << fmt17(marg.width_i)
              << '\n';
    return 0;
}

int cmd_analyze(const std::string& in_path, const std::string& out_path) {
    spdc::provenance tag = spdc::provenance::closed_form;
    spdc::json origin = spdc::json::object();
    bool have_sidecar = false;
    const auto meta_path = spdc::sidecar_path(in_path);
    if (std::ifstream probe(meta_path); probe) {
        const auto meta = spdc::load_json(meta_path);
        if (meta.contains("provenance")) {
            tag = spdc::provenance_from_string(meta.at("provenance").get<std::string>());
            have_sidecar = true;
        }
        if (meta.contains("origin")) origin = meta.at("origin");
    }
    const auto j = spdc::read_grid_csv(in_path, tag);
    const auto rep = spdc::schmidt_analysis(j);
    const auto marg = spdc::marginals(j);
    if (have_sidecar) std::cout << "provenance: " << spdc::to_string(tag) << '\n';
    std::cout << "K = " << fmt17(rep.schmidt_number) << ", purity = " << fmt17(rep.purity)
              << ", entropy = " << rep.entropy_bits << " bits\n";
    std::cout << "pearson rho = " << fmt17(rep.pearson_rho) << '\n';
    std::cout << "signal: center " << fmt17(marg.center_s) << " width " << fmt17(marg.width_s)
              << '\n';
    std::cout << "idler:  center " << fmt17(marg.center_i) << " width " << fmt17(marg.width_i)
              << '\n';
    if (!out_path.empty())
        spdc::save_json(out_path, spdc::jsa_metadata(j, rep, marg, origin));
    return 0;
}

int cmd_map_coords(const std::string& recipe_path, double k, double omega) {
    const auto r = spdc::recipe_from_json(spdc::load_json(recipe_path));
    const auto pc = spdc::map_pump_to_photon_coords(r, k, omega);
    std::cout << "omega_s = " << fmt17(pc.omega_s) << '\n';
    std::cout << "omega_i = " << fmt17(pc.omega_i) << '\n';
    return 0;
}

int cmd_reproduce_table1(const std::string& material_path, const std::string& out_path) {
    const auto m = spdc::load_material(resolve_material_path(material_path));
    const auto cal = spdc::run_benchmark_calibration(m);
    const auto dev = spdc::benchmark_deviations(cal.recipe_z, cal.recipe_y);

    std::cout << "calibration: convention " << spdc::to_string(cal.convention) << ", pump z "
              << spdc::to_string(cal.pump_z) << ", pump y " << spdc::to_string(cal.pump_y)
              << ", photons " << spdc::to_string(cal.photons) << '\n';
    print_recipe_header();
    print_recipe_row("z", cal.recipe_z);
    print_recipe_row("y", cal.recipe_y);
    std::cout << "reference:\n";
    using namespace spdc::benchmark;
    std::cout << "z          " << fmt3(ref_A / 1e12) << fmt3(ref_B_z / 1e3) << fmt3(ref_C_z / 1e-9)
              << fmt3(ref_theta_z_deg) << '\n';
    std::cout << "y          " << fmt3(ref_A / 1e12) << fmt3(ref_B_y / 1e3) << fmt3(ref_C_y / 1e-9)
              << fmt3(ref_theta_y_deg) << '\n';
    char buf[160];
    std::cout << "relative deviations (theta absolute, deg):\n";
    std::snprintf(buf, sizeof buf, "z          %-10.3g%-10.3g%-10.3g%-10.3g", dev.rel_A_z,
                  dev.rel_B_z, dev.rel_C_z, dev.abs_theta_z_deg);
    std::cout << buf << '\n';
    std::snprintf(buf, sizeof buf, "y          %-10.3g%-10.3g%-10.3g%-10.3g", dev.rel_A_y,
                  dev.rel_B_y, dev.rel_C_y, dev.abs_theta_y_deg);
    std::cout << buf << '\n';
    std::cout << "max relative deviation " << cal.max_rel_deviation << ", tolerances "
              << (cal.within_tolerance ? "met" : "NOT met") << '\n';

    spdc::save_json(out_path.empty() ? "calibration.json" : out_path,
                    spdc::calibration_to_json(cal));
    return cal.within_tolerance ? 0 : 3;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"pump-pulse design and joint-spectrum verification for photon-pair sources"};
    app.require_subcommand(1);

    std::string material_path, config_path, recipe_path, out_path, overlay_path, in_path;
    std::string mode;
    double at_um = 0.0, phi = 0.0, k_in = 0.0, omega_in = 0.0;
    std::size_t grid_size = 256;
    double span_sigma = 5.0;
    bool entangled = false;
    // one per subcommand: add_to stores the created CLI::Option pointers
    target_options topt_design, topt_jsa;
    branch_options bopt;
    int rc = 0;

    auto* c_mat = app.add_subcommand("materials", "inspect a material database entry");
    c_mat->add_option("--material", material_path, "material database file");
    c_mat->add_option("--at-um", at_um, "also print indices at this wavelength, um");
    c_mat->callback([&] { rc = cmd_materials(material_path, at_um); });

    auto* c_design = app.add_subcommand("design", "compute the pump recipe for target photons");
    c_design->add_option("--material", material_path, "material database file");
    c_design->add_option("--config", config_path, "JSON config; command-line flags win");
    topt_design.add_to(c_design);
    bopt.add_to(c_design, true);
    c_design->add_flag("--entangled", entangled, "design both pump polarization components");
    c_design->add_option("--phi", phi, "relative phase between the two components, rad");
    c_design->add_option("--out", out_path, "write the recipe/design JSON here");
    c_design->callback([&] {
        rc = cmd_design(material_path, config_path, topt_design, bopt, entangled, phi, out_path);
    });

    auto* c_jsa = app.add_subcommand("jsa", "simulate the joint spectral amplitude");
    c_jsa->add_option("--material", material_path, "material database file");
    c_jsa->add_option("--config", config_path, "JSON config; command-line flags win");
    c_jsa->add_option("--recipe", recipe_path, "recipe JSON from 'design'");
    topt_jsa.add_to(c_jsa);
    bopt.add_to(c_jsa, false);
    c_jsa->add_option("--mode", mode, "full | linearized | closed-form (default full)");
    c_jsa->add_option("--grid-size", grid_size, "points per axis (default 256)");
    c_jsa->add_option("--span-sigma", span_sigma, "half-span in target bandwidths (default 5)");
    c_jsa->add_option("--out", out_path, "grid CSV path (sidecar metadata JSON alongside)");
    c_jsa->add_option("--pump-overlay", overlay_path,
                      "also write the pump envelope mapped onto the photon grid");
    c_jsa->callback([&] {
        rc = cmd_jsa(material_path, config_path, recipe_path, topt_jsa, bopt, mode, grid_size,
                     span_sigma, out_path, overlay_path);
    });

    auto* c_an = app.add_subcommand("analyze", "marginals and Schmidt report of a grid CSV");
    c_an->add_option("--in", in_path, "grid CSV")->required();
    c_an->add_option("--out", out_path, "write the report JSON here");
    c_an->callback([&] { rc = cmd_analyze(in_path, out_path); });

    auto* c_map = app.add_subcommand("map-coords",
                                     "map a pump-plane point (k, omega) to photon frequencies");
    c_map->add_option("--recipe", recipe_path, "recipe JSON")->required();
    c_map->add_option("--k", k_in, "pump-plane wavenumber, rad/m")->required();
    c_map->add_option("--omega", omega_in, "pump-plane frequency, rad/s")->required();
    c_map->callback([&] { rc = cmd_map_coords(recipe_path, k_in, omega_in); });

    auto* c_rep = app.add_subcommand("reproduce-table1",
                                     "reproduce the published benchmark table and calibrate");
    c_rep->add_option("--material", material_path, "material database file");
    c_rep->add_option("--out", out_path, "calibration JSON path (default calibration.json)");
    c_rep->callback([&] { rc = cmd_reproduce_table1(material_path, out_path); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const spdc::validation_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const spdc::physics_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const spdc::io_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return rc;
}
