#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "errors.hpp"
#include "targets.hpp"

namespace spdc {

struct frequency_grid {
    std::vector<double> omega_s; // rad/s, strictly increasing, uniform
    std::vector<double> omega_i;

    std::size_t n_s() const { return omega_s.size(); }
    std::size_t n_i() const { return omega_i.size(); }
    double step_s() const { return (omega_s.back() - omega_s.front()) / double(n_s() - 1); }
    double step_i() const { return (omega_i.back() - omega_i.front()) / double(n_i() - 1); }
};

inline std::vector<double> uniform_axis(double lo, double hi, std::size_t n) {
    if (n < 16) throw validation_error("grid axis needs at least 16 points, got " + std::to_string(n));
    if (!(hi > lo)) throw validation_error("grid axis bounds must satisfy hi > lo");
    std::vector<double> ax(n);
    const double h = (hi - lo) / double(n - 1);
    for (std::size_t k = 0; k < n; ++k) ax[k] = lo + h * double(k);
    ax.back() = hi;
    return ax;
}

inline void validate(const frequency_grid& g) {
    for (const auto* ax : {&g.omega_s, &g.omega_i}) {
        if (ax->size() < 16) throw validation_error("grid axis needs at least 16 points");
        const double h = ((*ax).back() - (*ax).front()) / double(ax->size() - 1);
        if (!(h > 0.0)) throw validation_error("grid axis must be strictly increasing");
        for (std::size_t k = 1; k < ax->size(); ++k) {
            const double d = (*ax)[k] - (*ax)[k - 1];
            if (!(d > 0.0) || std::fabs(d - h) > 1e-6 * h)
                throw validation_error("grid axis must be uniform");
        }
    }
}

// Default simulation window: span_sigma amplitude widths either side of the
// target centers.
inline frequency_grid make_centered_grid(const design_targets& t, std::size_t n = 256,
                                         double span_sigma = 5.0) {
    validate(t);
    if (!(span_sigma > 0.0)) throw validation_error("span must be positive");
    frequency_grid g;
    g.omega_s = uniform_axis(t.omega_s0 - span_sigma * t.sigma_s,
                             t.omega_s0 + span_sigma * t.sigma_s, n);
    g.omega_i = uniform_axis(t.omega_i0 - span_sigma * t.sigma_i,
                             t.omega_i0 + span_sigma * t.sigma_i, n);
    return g;
}

// Trapezoid quadrature weights for a uniform axis: h everywhere, h/2 at the ends.
inline std::vector<double> trapezoid_weights(const std::vector<double>& ax) {
    const double h = (ax.back() - ax.front()) / double(ax.size() - 1);
    std::vector<double> w(ax.size(), h);
    w.front() *= 0.5;
    w.back() *= 0.5;
    return w;
}

} // namespace spdc
