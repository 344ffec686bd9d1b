#pragma once

#include <Eigen/SVD>
#include <cmath>
#include <vector>

#include "errors.hpp"
#include "grid.hpp"
#include "jsa.hpp"

namespace spdc {

// Quantifiers of frequency correlation. mode_weights are the squared singular
// values of the cell-measure-scaled amplitude grid, renormalized to sum to 1,
// which makes every derived number grid-spacing independent.
struct schmidt_report {
    std::vector<double> mode_weights;
    double purity = 0.0;
    double schmidt_number = 0.0;
    double entropy_bits = 0.0;
    double pearson_rho = 0.0;
};

inline schmidt_report schmidt_analysis(const joint_spectral_amplitude& j) {
    if (j.values.size() == 0 || j.values.cwiseAbs().maxCoeff() == 0.0)
        throw validation_error("degenerate joint amplitude: all values are zero");

    const double cell = std::sqrt(j.grid.step_s() * j.grid.step_i());
    Eigen::BDCSVD<Eigen::MatrixXd> svd(j.values * cell);
    const auto& sv = svd.singularValues();

    schmidt_report rep;
    double total = 0.0;
    for (Eigen::Index n = 0; n < sv.size(); ++n) total += sv[n] * sv[n];
    rep.mode_weights.reserve(std::size_t(sv.size()));
    for (Eigen::Index n = 0; n < sv.size(); ++n)
        rep.mode_weights.push_back(sv[n] * sv[n] / total);

    for (double l : rep.mode_weights) {
        rep.purity += l * l;
        if (l > 0.0) rep.entropy_bits -= l * std::log2(l);
    }
    rep.schmidt_number = 1.0 / rep.purity;

    // Pearson correlation of |phi|^2 as a joint density over (omega_s, omega_i),
    // trapezoid-weighted, moments taken about the grid centers.
    const auto& g = j.grid;
    const auto ws = trapezoid_weights(g.omega_s);
    const auto wi = trapezoid_weights(g.omega_i);
    const double s_ref = 0.5 * (g.omega_s.front() + g.omega_s.back());
    const double i_ref = 0.5 * (g.omega_i.front() + g.omega_i.back());
    double pn = 0.0, es = 0.0, ei = 0.0, ess = 0.0, eii = 0.0, esi = 0.0;
    for (std::size_t r = 0; r < g.n_i(); ++r) {
        const double di = g.omega_i[r] - i_ref;
        for (std::size_t c = 0; c < g.n_s(); ++c) {
            const double ds = g.omega_s[c] - s_ref;
            const double v = j.values(Eigen::Index(r), Eigen::Index(c));
            const double p = v * v * wi[r] * ws[c];
            pn += p;
            es += p * ds;
            ei += p * di;
            ess += p * ds * ds;
            eii += p * di * di;
            esi += p * ds * di;
        }
    }
    es /= pn;
    ei /= pn;
    const double var_s = ess / pn - es * es;
    const double var_i = eii / pn - ei * ei;
    const double cov = esi / pn - es * ei;
    rep.pearson_rho = (var_s > 0.0 && var_i > 0.0) ? cov / std::sqrt(var_s * var_i) : 0.0;
    return rep;
}

} // namespace spdc
