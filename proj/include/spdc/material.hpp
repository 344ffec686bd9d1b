#pragma once

#include <cmath>
#include <limits>
#include <map>
#include <string>

#include "errors.hpp"
#include "sellmeier.hpp"

namespace spdc {

enum class index_branch { ordinary, extraordinary };

inline std::string to_string(index_branch b) {
    return b == index_branch::ordinary ? "ordinary" : "extraordinary";
}

inline index_branch branch_from_string(const std::string& s) {
    if (s == "ordinary" || s == "o") return index_branch::ordinary;
    if (s == "extraordinary" || s == "e") return index_branch::extraordinary;
    throw validation_error("unknown index branch '" + s + "' (want ordinary|extraordinary)");
}

// Which index branch serves each wave. The pump label ("y", "z", ...) names the
// pump polarization component this assignment belongs to; it is plumbing, not
// physics.
struct axis_assignment {
    std::string pump_label = "z";
    index_branch pump = index_branch::extraordinary;
    index_branch signal = index_branch::ordinary;
    index_branch idler = index_branch::ordinary;
};

struct material {
    std::string name;
    sellmeier_coefficients ordinary;
    sellmeier_coefficients extraordinary;
    std::map<std::string, double> chi2; // tensor-element label -> value in m/V
    std::string source;

    const sellmeier_coefficients& branch(index_branch b) const {
        return b == index_branch::ordinary ? ordinary : extraordinary;
    }

    double chi2_element(const std::string& label) const {
        auto it = chi2.find(label);
        if (it == chi2.end())
            throw validation_error("material '" + name + "' has no chi2 element '" + label + "'");
        return it->second;
    }
};

inline void validate(const material& m) {
    if (m.name.empty()) throw validation_error("material has no name");
    if (m.source.empty()) throw validation_error("material '" + m.name + "' has no source citation");
    validate(m.ordinary, m.name + " ordinary");
    validate(m.extraordinary, m.name + " extraordinary");
    bool any_nonzero = false;
    for (const auto& [label, v] : m.chi2) {
        if (!std::isfinite(v))
            throw validation_error("material '" + m.name + "': chi2 '" + label + "' is not finite");
        if (v != 0.0) any_nonzero = true;
    }
    if (!m.chi2.empty() && !any_nonzero)
        throw validation_error("material '" + m.name + "': every chi2 element is zero");
}

// Constant-index stand-in used by tests and degenerate-design checks.
inline material constant_index_material(double n, const std::string& name = "constant") {
    material m;
    m.name = name;
    m.source = "synthetic fixture";
    m.ordinary = {sellmeier_form::constant_index, {n * n}, 0.0,
                  std::numeric_limits<double>::infinity()};
    m.extraordinary = m.ordinary;
    m.chi2 = {{"yyy", 1.0e-12}, {"zxx", 1.0e-12}};
    return m;
}

} // namespace spdc
