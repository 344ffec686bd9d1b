#pragma once

#include <random>
#include <string>

#include <spdc/spdc.hpp>

#ifndef MATERIAL_DB_PATH
#define MATERIAL_DB_PATH "data/materials/bbo.json"
#endif

namespace helpers {

inline const spdc::material& bbo() {
    static const spdc::material m = spdc::load_material(MATERIAL_DB_PATH);
    return m;
}

inline spdc::axis_assignment z_branches() {
    return {"z", spdc::index_branch::extraordinary, spdc::index_branch::ordinary,
            spdc::index_branch::ordinary};
}

inline spdc::axis_assignment y_branches() {
    return {"y", spdc::index_branch::ordinary, spdc::index_branch::ordinary,
            spdc::index_branch::ordinary};
}

inline spdc::design_targets benchmark_targets_z() {
    return spdc::benchmark_targets(spdc::calibrated_convention, z_branches());
}

inline spdc::design_targets benchmark_targets_y() {
    return spdc::benchmark_targets(spdc::calibrated_convention, y_branches());
}

inline spdc::pump_recipe benchmark_recipe_z() {
    return spdc::make_recipe(benchmark_targets_z(), bbo(),
                             spdc::to_string(spdc::calibrated_convention));
}

inline spdc::pump_recipe benchmark_recipe_y() {
    return spdc::make_recipe(benchmark_targets_y(), bbo(),
                             spdc::to_string(spdc::calibrated_convention));
}

// randomized but safely in-range BBO target sets, deterministic by seed
inline spdc::design_targets random_targets(std::mt19937& rng) {
    std::uniform_real_distribution<double> ls(0.72, 1.18);   // um
    std::uniform_real_distribution<double> li(1.26, 2.09);
    std::uniform_real_distribution<double> rel(1.0e-4, 2.0e-3);
    std::bernoulli_distribution coin(0.5);
    auto branch = [&] {
        return coin(rng) ? spdc::index_branch::extraordinary : spdc::index_branch::ordinary;
    };
    spdc::design_targets t;
    t.omega_s0 = spdc::omega_from_wavelength_um(ls(rng));
    t.omega_i0 = spdc::omega_from_wavelength_um(li(rng));
    t.sigma_s = t.omega_s0 * rel(rng);
    t.sigma_i = t.omega_i0 * rel(rng);
    t.branches = {"z", branch(), branch(), branch()};
    return t;
}

inline double rel_err(double v, double ref) { return std::fabs(v - ref) / std::fabs(ref); }

} // namespace helpers
