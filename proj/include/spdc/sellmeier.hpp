#pragma once

#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "errors.hpp"

namespace spdc {

// Index models are functions of wavelength in micrometers.
//
// single_resonance: n^2(L) = a + b/(L^2 - c) - d L^2, coeffs = {a, b, c, d}
// constant_index:   n^2(L) = a,                       coeffs = {a}

enum class sellmeier_form { single_resonance, constant_index };

inline std::string to_string(sellmeier_form f) {
    return f == sellmeier_form::single_resonance ? "single_resonance" : "constant";
}

inline sellmeier_form sellmeier_form_from_string(const std::string& s) {
    if (s == "single_resonance") return sellmeier_form::single_resonance;
    if (s == "constant") return sellmeier_form::constant_index;
    throw validation_error("unknown index model form '" + s + "'");
}

struct sellmeier_coefficients {
    sellmeier_form form = sellmeier_form::constant_index;
    std::vector<double> coeffs;
    double lambda_min_um = 0.0;
    double lambda_max_um = std::numeric_limits<double>::infinity();
};

inline double n_squared(const sellmeier_coefficients& sc, double lambda_um) {
    if (sc.form == sellmeier_form::constant_index) return sc.coeffs[0];
    const double l2 = lambda_um * lambda_um;
    return sc.coeffs[0] + sc.coeffs[1] / (l2 - sc.coeffs[2]) - sc.coeffs[3] * l2;
}

inline double dn2_dlambda(const sellmeier_coefficients& sc, double lambda_um) {
    if (sc.form == sellmeier_form::constant_index) return 0.0;
    const double l2 = lambda_um * lambda_um;
    const double den = l2 - sc.coeffs[2];
    return -2.0 * sc.coeffs[1] * lambda_um / (den * den) - 2.0 * sc.coeffs[3] * lambda_um;
}

// n_g = n - lambda dn/dlambda; dimensionless, so the um scale cancels.
inline double group_index(const sellmeier_coefficients& sc, double lambda_um) {
    const double n = std::sqrt(n_squared(sc, lambda_um));
    return n - lambda_um * dn2_dlambda(sc, lambda_um) / (2.0 * n);
}

inline void validate(const sellmeier_coefficients& sc, const std::string& label) {
    const std::size_t need = sc.form == sellmeier_form::single_resonance ? 4 : 1;
    if (sc.coeffs.size() != need)
        throw validation_error(label + ": form '" + to_string(sc.form) + "' needs " +
                               std::to_string(need) + " coefficients, got " +
                               std::to_string(sc.coeffs.size()));
    for (double c : sc.coeffs)
        if (!std::isfinite(c))
            throw validation_error(label + ": non-finite coefficient");
    if (!(sc.lambda_min_um >= 0.0) || !(sc.lambda_max_um > sc.lambda_min_um))
        throw validation_error(label + ": bad wavelength range");

    if (sc.form == sellmeier_form::single_resonance) {
        if (!std::isfinite(sc.lambda_max_um))
            throw validation_error(label + ": resonance form needs a finite range");
        if (sc.coeffs[2] > 0.0) {
            const double pole = std::sqrt(sc.coeffs[2]);
            if (pole >= sc.lambda_min_um && pole <= sc.lambda_max_um)
                throw validation_error(label + ": index pole at " + std::to_string(pole) +
                                       " um lies inside the valid range");
        }
        // n^2 must stay above 1 across the range for a transparent medium
        for (int k = 0; k <= 64; ++k) {
            const double l = sc.lambda_min_um +
                             (sc.lambda_max_um - sc.lambda_min_um) * k / 64.0;
            if (!(n_squared(sc, l) > 1.0))
                throw validation_error(label + ": n^2 <= 1 at " + std::to_string(l) + " um");
        }
    } else if (!(sc.coeffs[0] > 1.0)) {
        throw validation_error(label + ": constant n^2 must exceed 1");
    }
}

} // namespace spdc
