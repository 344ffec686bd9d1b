#pragma once

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "calibration.hpp"
#include "errors.hpp"
#include "jsa.hpp"
#include "material.hpp"
#include "polarization.hpp"
#include "pump_design.hpp"
#include "schmidt.hpp"

namespace spdc {

using nlohmann::json;

inline json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot read '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw io_error("'" + path + "': " + e.what());
    }
}

inline void save_json(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw io_error("cannot write '" + path + "'");
    out << j.dump(2) << '\n';
    if (!out) throw io_error("write failed for '" + path + "'");
}

namespace detail {

inline sellmeier_coefficients sellmeier_from_json(const json& j, const std::string& label) {
    if (!j.contains("form") || !j.contains("coeffs") || !j.contains("range_um"))
        throw validation_error(label + ": entry needs form, coeffs and range_um");
    sellmeier_coefficients sc;
    sc.form = sellmeier_form_from_string(j.at("form").get<std::string>());
    sc.coeffs = j.at("coeffs").get<std::vector<double>>();
    const auto range = j.at("range_um").get<std::vector<double>>();
    if (range.size() != 2) throw validation_error(label + ": range_um needs two entries");
    sc.lambda_min_um = range[0];
    sc.lambda_max_um = range[1];
    return sc;
}

} // namespace detail

// Database schema: {name, ordinary:{form,coeffs,range_um}, extraordinary:{...},
// chi2:{label: value in pm/V}, source}. chi2 converts to m/V here; a missing
// source citation is rejected.
inline material load_material(const std::string& path) {
    const json j = load_json(path);
    material m;
    if (!j.contains("name")) throw validation_error("'" + path + "': material needs a name");
    m.name = j.at("name").get<std::string>();
    if (!j.contains("source") || j.at("source").get<std::string>().empty())
        throw validation_error("'" + path + "': material entry lacks a source citation");
    m.source = j.at("source").get<std::string>();
    if (!j.contains("ordinary") || !j.contains("extraordinary"))
        throw validation_error("'" + path + "': material needs ordinary and extraordinary entries");
    m.ordinary = detail::sellmeier_from_json(j.at("ordinary"), m.name + " ordinary");
    m.extraordinary = detail::sellmeier_from_json(j.at("extraordinary"), m.name + " extraordinary");
    if (j.contains("chi2"))
        for (const auto& [label, v] : j.at("chi2").items())
            m.chi2[label] = v.get<double>() * 1e-12;
    validate(m);
    return m;
}

inline json branches_to_json(const axis_assignment& a) {
    return {{"pump_label", a.pump_label},
            {"pump", to_string(a.pump)},
            {"signal", to_string(a.signal)},
            {"idler", to_string(a.idler)}};
}

inline axis_assignment branches_from_json(const json& j) {
    axis_assignment a;
    a.pump_label = j.value("pump_label", "z");
    a.pump = branch_from_string(j.at("pump").get<std::string>());
    a.signal = branch_from_string(j.at("signal").get<std::string>());
    a.idler = branch_from_string(j.at("idler").get<std::string>());
    return a;
}

inline json recipe_to_json(const pump_recipe& r) {
    return {{"omega_p", r.omega_p},
            {"k_p", r.k_p},
            {"n_p", r.n_p},
            {"beta_prime_s", r.beta_prime_s},
            {"beta_prime_i", r.beta_prime_i},
            {"A", r.spectral_bandwidth},
            {"B", r.spatial_bandwidth},
            {"C", r.shear},
            {"theta_deg", degrees(r.incidence_angle_rad)},
            {"convention", r.convention},
            {"material", r.material_name},
            {"branches", branches_to_json(r.targets.branches)},
            {"targets",
             {{"omega_s0", r.targets.omega_s0},
              {"omega_i0", r.targets.omega_i0},
              {"sigma_s", r.targets.sigma_s},
              {"sigma_i", r.targets.sigma_i}}}};
}

inline pump_recipe recipe_from_json(const json& j) {
    pump_recipe r;
    try {
        r.omega_p = j.at("omega_p").get<double>();
        r.k_p = j.at("k_p").get<double>();
        r.n_p = j.at("n_p").get<double>();
        r.beta_prime_s = j.at("beta_prime_s").get<double>();
        r.beta_prime_i = j.at("beta_prime_i").get<double>();
        r.spectral_bandwidth = j.at("A").get<double>();
        r.spatial_bandwidth = j.at("B").get<double>();
        r.shear = j.at("C").get<double>();
        r.incidence_angle_rad = radians(j.at("theta_deg").get<double>());
        r.convention = j.value("convention", "direct");
        r.material_name = j.value("material", "");
        r.targets.branches = branches_from_json(j.at("branches"));
        const auto& t = j.at("targets");
        r.targets.omega_s0 = t.at("omega_s0").get<double>();
        r.targets.omega_i0 = t.at("omega_i0").get<double>();
        r.targets.sigma_s = t.at("sigma_s").get<double>();
        r.targets.sigma_i = t.at("sigma_i").get<double>();
    } catch (const json::exception& e) {
        throw validation_error(std::string("bad recipe document: ") + e.what());
    }
    validate(r.targets);
    return r;
}

inline json design_to_json(const entangled_design& d) {
    return {{"material", d.recipe_z.material_name},
            {"chi2_y_m_per_V", d.chi_y},
            {"chi2_z_m_per_V", d.chi_z},
            {"power_ratio_z_over_y", d.power_ratio},
            {"relative_phase_rad", d.relative_phase},
            {"labels", {{"y", d.label_y}, {"z", d.label_z}}},
            {"recipe_y", recipe_to_json(d.recipe_y)},
            {"recipe_z", recipe_to_json(d.recipe_z)}};
}

inline entangled_design design_from_json(const json& j) {
    entangled_design d;
    try {
        d.recipe_y = recipe_from_json(j.at("recipe_y"));
        d.recipe_z = recipe_from_json(j.at("recipe_z"));
        d.chi_y = j.at("chi2_y_m_per_V").get<double>();
        d.chi_z = j.at("chi2_z_m_per_V").get<double>();
        d.power_ratio = j.at("power_ratio_z_over_y").get<double>();
        d.relative_phase = j.at("relative_phase_rad").get<double>();
        d.label_y = j.at("labels").value("y", "VV");
        d.label_z = j.at("labels").value("z", "HH");
    } catch (const json::exception& e) {
        throw validation_error(std::string("bad entangled-design document: ") + e.what());
    }
    return d;
}

inline json calibration_to_json(const calibration_result& c) {
    return {{"convention", to_string(c.convention)},
            {"branches",
             {{"pump_z", to_string(c.pump_z)},
              {"pump_y", to_string(c.pump_y)},
              {"signal", to_string(c.photons)},
              {"idler", to_string(c.photons)}}},
            {"max_relative_deviation", c.max_rel_deviation},
            {"within_tolerance", c.within_tolerance},
            {"recipe_z", recipe_to_json(c.recipe_z)},
            {"recipe_y", recipe_to_json(c.recipe_y)}};
}

// Grid CSV layout: first row holds the omega_s axis (corner cell empty), each
// following row starts with its omega_i value; the body is |phi|. Decimal,
// 17 significant digits.
inline void write_grid_csv(const std::string& path, const joint_spectral_amplitude& j) {
    std::ofstream out(path);
    if (!out) throw io_error("cannot write '" + path + "'");
    char buf[32];
    auto put = [&](double v) {
        std::snprintf(buf, sizeof buf, "%.17g", v);
        out << buf;
    };
    for (std::size_t c = 0; c < j.grid.n_s(); ++c) {
        out << ',';
        put(j.grid.omega_s[c]);
    }
    out << '\n';
    for (std::size_t r = 0; r < j.grid.n_i(); ++r) {
        put(j.grid.omega_i[r]);
        for (std::size_t c = 0; c < j.grid.n_s(); ++c) {
            out << ',';
            put(std::fabs(j.values(Eigen::Index(r), Eigen::Index(c))));
        }
        out << '\n';
    }
    if (!out) throw io_error("write failed for '" + path + "'");
}

inline joint_spectral_amplitude read_grid_csv(const std::string& path,
                                              provenance tag = provenance::closed_form) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot read '" + path + "'");
    std::string line;
    if (!std::getline(in, line)) throw io_error("'" + path + "': empty grid file");

    auto parse = [&path](const std::string& cell) {
        try {
            std::size_t used = 0;
            const double v = std::stod(cell, &used);
            if (used != cell.size()) throw std::invalid_argument(cell);
            return v;
        } catch (const std::exception&) {
            throw io_error("'" + path + "': bad number '" + cell + "' in grid file");
        }
    };

    joint_spectral_amplitude out;
    out.tag = tag;
    {
        std::istringstream ss(line);
        std::string cell;
        std::getline(ss, cell, ','); // corner
        while (std::getline(ss, cell, ',')) out.grid.omega_s.push_back(parse(cell));
    }
    std::vector<std::vector<double>> rows;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ss(line);
        std::string cell;
        std::getline(ss, cell, ',');
        out.grid.omega_i.push_back(parse(cell));
        std::vector<double> row;
        row.reserve(out.grid.n_s());
        while (std::getline(ss, cell, ',')) row.push_back(parse(cell));
        if (row.size() != out.grid.n_s())
            throw io_error("'" + path + "': ragged row in grid file");
        rows.push_back(std::move(row));
    }
    validate(out.grid);
    out.values.resize(Eigen::Index(rows.size()), Eigen::Index(out.grid.n_s()));
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < out.grid.n_s(); ++c)
            out.values(Eigen::Index(r), Eigen::Index(c)) = rows[r][c];
    return out;
}

inline json schmidt_to_json(const schmidt_report& s, std::size_t max_modes = 16) {
    json weights = json::array();
    for (std::size_t n = 0; n < s.mode_weights.size() && n < max_modes; ++n)
        weights.push_back(s.mode_weights[n]);
    return {{"schmidt_number", s.schmidt_number},
            {"purity", s.purity},
            {"entropy_bits", s.entropy_bits},
            {"pearson_rho", s.pearson_rho},
            {"leading_mode_weights", weights}};
}

inline json marginals_to_json(const marginal_report& m) {
    return {{"center_s", m.center_s},
            {"width_s", m.width_s},
            {"center_i", m.center_i},
            {"width_i", m.width_i},
            {"total_power", m.total_power}};
}

inline json grid_to_json(const frequency_grid& g) {
    return {{"n_s", g.n_s()},
            {"n_i", g.n_i()},
            {"omega_s_min", g.omega_s.front()},
            {"omega_s_max", g.omega_s.back()},
            {"omega_i_min", g.omega_i.front()},
            {"omega_i_max", g.omega_i.back()}};
}

// Sidecar for a grid CSV: provenance, what produced it, and the analysis.
inline json jsa_metadata(const joint_spectral_amplitude& j, const schmidt_report& s,
                         const marginal_report& m, const json& origin) {
    return {{"provenance", to_string(j.tag)},
            {"origin", origin},
            {"grid", grid_to_json(j.grid)},
            {"schmidt", schmidt_to_json(s)},
            {"marginals", marginals_to_json(m)}};
}

inline std::string sidecar_path(const std::string& csv_path) {
    const auto dot = csv_path.rfind('.');
    const auto slash = csv_path.rfind('/');
    if (dot == std::string::npos || (slash != std::string::npos && dot < slash))
        return csv_path + ".meta.json";
    return csv_path.substr(0, dot) + ".meta.json";
}

} // namespace spdc
