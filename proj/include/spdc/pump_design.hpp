#pragma once

#include <cmath>
#include <sstream>
#include <string>

#include "constants.hpp"
#include "dispersion.hpp"
#include "errors.hpp"
#include "material.hpp"
#include "targets.hpp"

namespace spdc {

// Everything needed to build and aim the pump pulse for one polarization
// pathway. A is the spectral bandwidth of the sheared pump, B the spatial
// (transverse-wavenumber) bandwidth, and the shear couples k to omega.
struct pump_recipe {
    design_targets targets;
    std::string material_name;
    std::string convention = "direct"; // how sigma was obtained, recorded for provenance

    double omega_p = 0.0;            // rad/s, pump carrier
    double k_p = 0.0;                // rad/m, longitudinal wavenumber offset
    double n_p = 0.0;                // pump index frozen at omega_p
    double beta_prime_s = 0.0;       // s/m, signal group slowness at its center
    double beta_prime_i = 0.0;       // s/m
    double spectral_bandwidth = 0.0; // rad/s  (serialized as "A")
    double spatial_bandwidth = 0.0;  // rad/m  (serialized as "B")
    double shear = 0.0;              // s/m    (serialized as "C")
    double incidence_angle_rad = 0.0;
};

struct center_params {
    double omega_p, k_p, n_p;
};

inline center_params derive_center_params(const design_targets& t, const material& m) {
    validate(t, m);
    const double omega_p = t.omega_s0 + t.omega_i0;
    const double k_p = beta(m, t.branches.idler, t.omega_i0) -
                       beta(m, t.branches.signal, t.omega_s0);
    return {omega_p, k_p, refractive_index(m, t.branches.pump, omega_p)};
}

struct abc_params {
    double spectral_bandwidth, spatial_bandwidth, shear;
};

inline abc_params compute_abc(const design_targets& t, const material& m) {
    const auto cp = derive_center_params(t, m);
    const double bps = beta_prime(m, t.branches.signal, t.omega_s0);
    const double bpi = beta_prime(m, t.branches.idler, t.omega_i0);
    const double bp = bps + bpi;
    const double ss2 = t.sigma_s * t.sigma_s;
    const double si2 = t.sigma_i * t.sigma_i;

    const double mismatch = bps * ss2 - bpi * si2;
    const double radicand = (bps / t.sigma_i) * (bps / t.sigma_i) +
                            (bpi / t.sigma_s) * (bpi / t.sigma_s) -
                            mismatch * mismatch / (ss2 * si2 * (ss2 + si2));
    if (!(radicand > 0.0)) {
        std::ostringstream os;
        os << "degenerate design: spectral-bandwidth radicand "
              "(b's/sigma_i)^2 + (b'i/sigma_s)^2 - (b's sigma_s^2 - b'i sigma_i^2)^2/"
              "((sigma_s sigma_i)^2 (sigma_s^2+sigma_i^2)) = "
           << radicand << " must be positive";
        throw physics_error(os.str());
    }

    abc_params out;
    out.spectral_bandwidth = bp / std::sqrt(radicand);
    out.spatial_bandwidth = bp / (cp.n_p * std::sqrt(1.0 / ss2 + 1.0 / si2));
    out.shear = mismatch / (cp.n_p * (ss2 + si2));
    return out;
}

// External plane-wave incidence angle that realizes the longitudinal
// wavenumber k_p; sign follows k_p.
inline double incidence_angle(double k_p, double n_p, double omega_p) {
    const double s = k_p * speed_of_light / (n_p * omega_p);
    if (std::fabs(s) > 1.0) {
        std::ostringstream os;
        os << "no real incidence angle: |k_p c| = " << std::fabs(k_p) * speed_of_light
           << " exceeds n_p omega_p = " << n_p * omega_p;
        throw physics_error(os.str());
    }
    return std::asin(s);
}

inline pump_recipe make_recipe(const design_targets& t, const material& m,
                               const std::string& convention_label = "direct") {
    pump_recipe r;
    r.targets = t;
    r.material_name = m.name;
    r.convention = convention_label;
    const auto cp = derive_center_params(t, m);
    r.omega_p = cp.omega_p;
    r.k_p = cp.k_p;
    r.n_p = cp.n_p;
    r.beta_prime_s = beta_prime(m, t.branches.signal, t.omega_s0);
    r.beta_prime_i = beta_prime(m, t.branches.idler, t.omega_i0);
    const auto abc = compute_abc(t, m);
    r.spectral_bandwidth = abc.spectral_bandwidth;
    r.spatial_bandwidth = abc.spatial_bandwidth;
    r.shear = abc.shear;
    r.incidence_angle_rad = incidence_angle(r.k_p, r.n_p, r.omega_p);
    return r;
}

// Engineered pump amplitude over (longitudinal wavenumber, frequency).
// Peak value 1 at (k_p/n_p, omega_p); unnormalized by design.
inline double pump_envelope(const pump_recipe& r, double k, double omega) {
    const double u = r.n_p * k - r.k_p;
    const double v = omega - r.omega_p;
    const double bp = r.beta_prime_s + r.beta_prime_i;
    const double e1 = (u + v * r.beta_prime_s) / (2.0 * bp * r.targets.sigma_i);
    const double e2 = (u - v * r.beta_prime_i) / (2.0 * bp * r.targets.sigma_s);
    return std::exp(-e1 * e1 - e2 * e2);
}

// Same amplitude through the bandwidth/shear parameterization.
inline double pump_envelope_factored(const pump_recipe& r, double k, double omega) {
    const double v = omega - r.omega_p;
    const double e1 = v / (2.0 * r.spectral_bandwidth);
    const double e2 = (k - r.k_p / r.n_p + r.shear * v) / (2.0 * r.spatial_bandwidth);
    return std::exp(-e1 * e1 - e2 * e2);
}

// Pulse-shaping plan: a product Gaussian plus the shear to imprint on it.
struct sheared_pulse_plan {
    double omega_center = 0.0;
    double k_center = 0.0;
    double spectral_bandwidth = 0.0;
    double spatial_bandwidth = 0.0;
    double shear = 0.0;
};

inline double eval_unsheared(const sheared_pulse_plan& p, double k, double omega) {
    const double e1 = (omega - p.omega_center) / (2.0 * p.spectral_bandwidth);
    const double e2 = (k - p.k_center) / (2.0 * p.spatial_bandwidth);
    return std::exp(-e1 * e1 - e2 * e2);
}

inline sheared_pulse_plan shear_substitution(const sheared_pulse_plan& base, double shear,
                                             double omega_center) {
    if (!std::isfinite(shear)) throw validation_error("shear coefficient must be finite");
    sheared_pulse_plan p = base;
    p.shear = shear;
    p.omega_center = omega_center;
    return p;
}

// Applies k -> k + shear * (omega - omega_center) to the base Gaussian.
inline double eval_plan(const sheared_pulse_plan& p, double k, double omega) {
    return eval_unsheared(p, k + p.shear * (omega - p.omega_center), omega);
}

inline sheared_pulse_plan pulse_plan(const pump_recipe& r) {
    sheared_pulse_plan base;
    base.omega_center = r.omega_p;
    base.k_center = r.k_p / r.n_p;
    base.spectral_bandwidth = r.spectral_bandwidth;
    base.spatial_bandwidth = r.spatial_bandwidth;
    base.shear = 0.0;
    return shear_substitution(base, r.shear, r.omega_p);
}

} // namespace spdc
