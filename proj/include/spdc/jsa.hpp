#pragma once

#include <Eigen/Core>
#include <cmath>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "dispersion.hpp"
#include "errors.hpp"
#include "grid.hpp"
#include "material.hpp"
#include "pump_design.hpp"
#include "targets.hpp"

namespace spdc {

enum class provenance { oracle_full, oracle_linearized, closed_form };

inline std::string to_string(provenance p) {
    switch (p) {
        case provenance::oracle_full: return "oracle-full";
        case provenance::oracle_linearized: return "oracle-linearized";
        case provenance::closed_form: return "closed-form";
    }
    return "?";
}

inline provenance provenance_from_string(const std::string& s) {
    if (s == "oracle-full") return provenance::oracle_full;
    if (s == "oracle-linearized") return provenance::oracle_linearized;
    if (s == "closed-form") return provenance::closed_form;
    throw validation_error("unknown provenance tag '" + s + "'");
}

// Two-photon amplitude sampled on a rectangular frequency grid.
// Rows follow the idler axis, columns the signal axis. Values are real; the
// pump model carries no spectral phase.
struct joint_spectral_amplitude {
    frequency_grid grid;
    Eigen::MatrixXd values;
    provenance tag = provenance::closed_form;
};

enum class dispersion_mode { full, linearized };

inline dispersion_mode dispersion_mode_from_string(const std::string& s) {
    if (s == "full") return dispersion_mode::full;
    if (s == "linearized") return dispersion_mode::linearized;
    throw validation_error("unknown dispersion mode '" + s + "' (want full|linearized)");
}

// Pair creation driven by an arbitrary pump evaluator: the pump amplitude is
// sampled at (k, omega) = ((beta_i - beta_s)/n_p, omega_s + omega_i).
// In full mode beta and n_p come straight from the index data; in linearized
// mode beta is replaced by its first-order expansion about the target centers
// and n_p is frozen at omega_p.
template <class PumpFn>
joint_spectral_amplitude jsa_from_pump(PumpFn&& pump, const material& m,
                                       const pump_recipe& r, const frequency_grid& g,
                                       dispersion_mode mode) {
    validate(g);
    joint_spectral_amplitude out;
    out.grid = g;
    out.tag = mode == dispersion_mode::full ? provenance::oracle_full
                                            : provenance::oracle_linearized;
    out.values.resize(Eigen::Index(g.n_i()), Eigen::Index(g.n_s()));

    const auto& t = r.targets;
    std::size_t row = 0, col = 0;
    try {
        if (mode == dispersion_mode::full) {
            // beta_s depends only on the column; hoist it out of the row loop
            std::vector<double> beta_s(g.n_s());
            for (col = 0; col < g.n_s(); ++col)
                beta_s[col] = beta(m, t.branches.signal, g.omega_s[col]);
            for (row = 0; row < g.n_i(); ++row) {
                col = 0; // keep the reported grid point in range if beta throws here
                const double wi = g.omega_i[row];
                const double beta_i = beta(m, t.branches.idler, wi);
                for (col = 0; col < g.n_s(); ++col) {
                    const double w = g.omega_s[col] + wi;
                    const double np = refractive_index(m, t.branches.pump, w);
                    out.values(Eigen::Index(row), Eigen::Index(col)) =
                        pump((beta_i - beta_s[col]) / np, w);
                }
            }
        } else {
            for (row = 0; row < g.n_i(); ++row) {
                const double di = g.omega_i[row] - t.omega_i0;
                for (col = 0; col < g.n_s(); ++col) {
                    const double ds = g.omega_s[col] - t.omega_s0;
                    const double k =
                        (r.k_p + di * r.beta_prime_i - ds * r.beta_prime_s) / r.n_p;
                    out.values(Eigen::Index(row), Eigen::Index(col)) =
                        pump(k, g.omega_s[col] + g.omega_i[row]);
                }
            }
        }
    } catch (const physics_error& e) {
        std::ostringstream os;
        os << e.what() << " [grid point omega_s = " << g.omega_s[col]
           << ", omega_i = " << g.omega_i[row] << "]";
        throw physics_error(os.str());
    }
    return out;
}

inline joint_spectral_amplitude jsa_from_recipe(const material& m, const pump_recipe& r,
                                                const frequency_grid& g,
                                                dispersion_mode mode) {
    return jsa_from_pump([&r](double k, double w) { return pump_envelope(r, k, w); }, m, r,
                         g, mode);
}

// The state the design promises: a separable product of two Gaussians.
inline joint_spectral_amplitude jsa_closed_form(const design_targets& t,
                                                const frequency_grid& g) {
    validate(t);
    validate(g);
    joint_spectral_amplitude out;
    out.grid = g;
    out.tag = provenance::closed_form;
    out.values.resize(Eigen::Index(g.n_i()), Eigen::Index(g.n_s()));
    for (std::size_t row = 0; row < g.n_i(); ++row) {
        const double ei = (g.omega_i[row] - t.omega_i0) / (2.0 * t.sigma_i);
        const double gi = std::exp(-ei * ei);
        for (std::size_t col = 0; col < g.n_s(); ++col) {
            const double es = (g.omega_s[col] - t.omega_s0) / (2.0 * t.sigma_s);
            out.values(Eigen::Index(row), Eigen::Index(col)) = gi * std::exp(-es * es);
        }
    }
    return out;
}

struct marginal_report {
    std::vector<double> signal; // intensity spectrum over omega_s
    std::vector<double> idler;
    double center_s = 0.0, width_s = 0.0;
    double center_i = 0.0, width_i = 0.0;
    double total_power = 0.0; // 2D trapezoid integral of |phi|^2
};

inline marginal_report marginals(const joint_spectral_amplitude& j) {
    const auto& g = j.grid;
    const auto ws = trapezoid_weights(g.omega_s);
    const auto wi = trapezoid_weights(g.omega_i);

    marginal_report rep;
    rep.signal.assign(g.n_s(), 0.0);
    rep.idler.assign(g.n_i(), 0.0);
    for (std::size_t r = 0; r < g.n_i(); ++r)
        for (std::size_t c = 0; c < g.n_s(); ++c) {
            const double p = j.values(Eigen::Index(r), Eigen::Index(c)) *
                             j.values(Eigen::Index(r), Eigen::Index(c));
            rep.signal[c] += p * wi[r];
            rep.idler[r] += p * ws[c];
        }

    double norm = 0.0;
    for (std::size_t c = 0; c < g.n_s(); ++c) norm += rep.signal[c] * ws[c];
    if (!(norm > 0.0)) throw validation_error("degenerate joint amplitude: all values are zero");
    rep.total_power = norm;

    // moments on offsets from the grid center to dodge cancellation
    const double s_ref = 0.5 * (g.omega_s.front() + g.omega_s.back());
    const double i_ref = 0.5 * (g.omega_i.front() + g.omega_i.back());
    double m1 = 0.0, m2 = 0.0;
    for (std::size_t c = 0; c < g.n_s(); ++c) {
        const double d = g.omega_s[c] - s_ref;
        m1 += rep.signal[c] * ws[c] * d;
        m2 += rep.signal[c] * ws[c] * d * d;
    }
    m1 /= norm;
    m2 /= norm;
    rep.center_s = s_ref + m1;
    rep.width_s = std::sqrt(std::max(0.0, m2 - m1 * m1));

    m1 = m2 = 0.0;
    for (std::size_t r = 0; r < g.n_i(); ++r) {
        const double d = g.omega_i[r] - i_ref;
        m1 += rep.idler[r] * wi[r] * d;
        m2 += rep.idler[r] * wi[r] * d * d;
    }
    m1 /= norm;
    m2 /= norm;
    rep.center_i = i_ref + m1;
    rep.width_i = std::sqrt(std::max(0.0, m2 - m1 * m1));
    return rep;
}

struct photon_coords {
    double omega_s, omega_i;
};
struct pump_coords {
    double k, omega;
};

// Linearized forward map from a photon-frequency pair to the pump-plane point
// that feeds it.
inline pump_coords map_photon_to_pump_coords(const pump_recipe& r, double omega_s,
                                             double omega_i) {
    const double ds = omega_s - r.targets.omega_s0;
    const double di = omega_i - r.targets.omega_i0;
    return {(r.k_p + di * r.beta_prime_i - ds * r.beta_prime_s) / r.n_p, omega_s + omega_i};
}

// Exact inverse of the 2x2 linear system behind the forward map; lets pump
// features be drawn on the photon-frequency plane.
inline photon_coords map_pump_to_photon_coords(const pump_recipe& r, double k,
                                               double omega) {
    const double bp = r.beta_prime_s + r.beta_prime_i;
    if (bp == 0.0)
        throw physics_error("singular coordinate map: beta'_s + beta'_i = 0");
    const double u = r.n_p * k - r.k_p;
    const double v = omega - r.omega_p;
    return {r.targets.omega_s0 + (v * r.beta_prime_i - u) / bp,
            r.targets.omega_i0 + (u + v * r.beta_prime_s) / bp};
}

} // namespace spdc
