#pragma once

#include <cmath>
#include <limits>
#include <sstream>
#include <string>

#include "constants.hpp"
#include "errors.hpp"
#include "material.hpp"

namespace spdc {

inline double wavelength_um(double omega) {
    if (omega <= 0.0) return std::numeric_limits<double>::infinity();
    return 2.0 * pi * speed_of_light / omega * 1e6;
}

inline double omega_from_wavelength_um(double lambda_um) {
    if (!(lambda_um > 0.0)) throw validation_error("wavelength must be positive");
    return 2.0 * pi * speed_of_light / (lambda_um * 1e-6);
}

namespace detail {
inline void check_range(const material& m, index_branch b, double omega) {
    const auto& sc = m.branch(b);
    const double l = wavelength_um(omega);
    if (l < sc.lambda_min_um || l > sc.lambda_max_um) {
        std::ostringstream os;
        os << "wavelength " << l << " um (omega " << omega << " rad/s) outside the "
           << to_string(b) << " branch valid range [" << sc.lambda_min_um << ", "
           << sc.lambda_max_um << "] um of " << m.name;
        throw physics_error(os.str());
    }
}
} // namespace detail

inline double refractive_index(const material& m, index_branch b, double omega) {
    detail::check_range(m, b, omega);
    return std::sqrt(n_squared(m.branch(b), wavelength_um(omega)));
}

inline double beta(const material& m, index_branch b, double omega) {
    return refractive_index(m, b, omega) * omega / speed_of_light;
}

// Group slowness n_g/c, from the analytic wavelength derivative of the index
// model. Finite differences live only in the tests.
inline double beta_prime(const material& m, index_branch b, double omega) {
    detail::check_range(m, b, omega);
    return group_index(m.branch(b), wavelength_um(omega)) / speed_of_light;
}

} // namespace spdc
