#pragma once

#include <cmath>
#include <string>

#include "errors.hpp"
#include "jsa.hpp"
#include "material.hpp"
#include "pump_design.hpp"
#include "schmidt.hpp"

namespace spdc {

// Two pump polarization components drive two chi2 pathways at once; their
// amplitudes superpose into a polarization-entangled pair state.
struct entangled_design {
    pump_recipe recipe_y;
    pump_recipe recipe_z;
    double chi_y = 0.0;         // m/V, element driven by the y pump component
    double chi_z = 0.0;         // m/V
    double power_ratio = 1.0;   // P_z / P_y
    double relative_phase = 0.0;
    std::string label_y = "VV"; // configuration strings, not physics
    std::string label_z = "HH";
};

// Power ratio that equalizes the two pathway amplitudes chi * sqrt(P).
inline double balance_power_ratio(double chi_y, double chi_z) {
    if (chi_y == 0.0 || chi_z == 0.0)
        throw validation_error("unusable pathway: chi2 element is zero");
    const double q = chi_y / chi_z;
    return q * q;
}

inline entangled_design make_entangled_design(const design_targets& base, const material& m,
                                              const axis_assignment& branches_y,
                                              const axis_assignment& branches_z,
                                              double relative_phase,
                                              const std::string& chi_label_y = "yyy",
                                              const std::string& chi_label_z = "zxx",
                                              const std::string& convention_label = "direct") {
    entangled_design d;
    design_targets ty = base;
    ty.branches = branches_y;
    design_targets tz = base;
    tz.branches = branches_z;
    try {
        d.recipe_y = make_recipe(ty, m, convention_label);
    } catch (const physics_error& e) {
        throw physics_error("pathway " + branches_y.pump_label + ": " + e.what());
    }
    try {
        d.recipe_z = make_recipe(tz, m, convention_label);
    } catch (const physics_error& e) {
        throw physics_error("pathway " + branches_z.pump_label + ": " + e.what());
    }
    d.chi_y = m.chi2_element(chi_label_y);
    d.chi_z = m.chi2_element(chi_label_z);
    d.power_ratio = balance_power_ratio(d.chi_y, d.chi_z);
    d.relative_phase = relative_phase;
    return d;
}

// L2 inner product of two amplitudes on a shared grid, each normalized.
inline double jsa_overlap(const joint_spectral_amplitude& a,
                          const joint_spectral_amplitude& b) {
    if (a.grid.omega_s != b.grid.omega_s || a.grid.omega_i != b.grid.omega_i)
        throw validation_error("overlap needs both amplitudes on the same grid");
    const auto ws = trapezoid_weights(a.grid.omega_s);
    const auto wi = trapezoid_weights(a.grid.omega_i);
    double ab = 0.0, aa = 0.0, bb = 0.0;
    for (std::size_t r = 0; r < a.grid.n_i(); ++r)
        for (std::size_t c = 0; c < a.grid.n_s(); ++c) {
            const double w = wi[r] * ws[c];
            const double va = a.values(Eigen::Index(r), Eigen::Index(c));
            const double vb = b.values(Eigen::Index(r), Eigen::Index(c));
            ab += w * va * vb;
            aa += w * va * va;
            bb += w * vb * vb;
        }
    if (!(aa > 0.0) || !(bb > 0.0))
        throw validation_error("degenerate joint amplitude: all values are zero");
    return std::fabs(ab) / std::sqrt(aa * bb);
}

struct polarization_report {
    double alpha_h = 0.0; // amplitude weight of the z-driven pathway
    double alpha_v = 0.0;
    double overlap = 0.0;     // |<phi_H|phi_V>| of the normalized pathway amplitudes
    double concurrence = 0.0; // 2 alpha_h alpha_v overlap
};

inline polarization_report report_from_amplitudes(double weight_h, double weight_v,
                                                  double overlap) {
    polarization_report rep;
    const double norm = std::sqrt(weight_h * weight_h + weight_v * weight_v);
    if (!(norm > 0.0)) throw validation_error("both pathway amplitudes are zero");
    rep.alpha_h = std::fabs(weight_h) / norm;
    rep.alpha_v = std::fabs(weight_v) / norm;
    rep.overlap = overlap;
    rep.concurrence = 2.0 * rep.alpha_h * rep.alpha_v * overlap;
    return rep;
}

inline polarization_report make_polarization_report(const entangled_design& d,
                                                    const material& m,
                                                    const frequency_grid& g,
                                                    dispersion_mode mode) {
    const auto jz = jsa_from_recipe(m, d.recipe_z, g, mode);
    const auto jy = jsa_from_recipe(m, d.recipe_y, g, mode);
    // pathway amplitudes scale as chi * sqrt(P); P_y = 1, P_z = power_ratio
    return report_from_amplitudes(d.chi_z * std::sqrt(d.power_ratio), d.chi_y,
                                  jsa_overlap(jz, jy));
}

} // namespace spdc
