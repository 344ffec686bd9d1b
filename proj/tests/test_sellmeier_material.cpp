#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "oracle_values.hpp"

using namespace spdc;

TEST_CASE("constant-index model evaluates to its constant") {
    const auto m = constant_index_material(1.5);
    CHECK(refractive_index(m, index_branch::ordinary, 2.0e15) == 1.5);
    CHECK(refractive_index(m, index_branch::extraordinary, 5.0e14) == 1.5);
    CHECK(group_index(m.ordinary, 0.8) == 1.5);
}

TEST_CASE("BBO indices match published table values") {
    const auto& m = helpers::bbo();
    auto n_at = [&](index_branch b, double lambda_um) {
        return refractive_index(m, b, omega_from_wavelength_um(lambda_um));
    };
    CHECK(std::fabs(n_at(index_branch::ordinary, 0.5321) - oracle::n_o_5321) < 1e-4);
    CHECK(std::fabs(n_at(index_branch::extraordinary, 0.5321) - oracle::n_e_5321) < 1e-4);
    CHECK(std::fabs(n_at(index_branch::ordinary, 1.0642) - oracle::n_o_10642) < 1e-4);
    CHECK(std::fabs(n_at(index_branch::extraordinary, 1.0642) - oracle::n_e_10642) < 1e-4);
    CHECK(std::fabs(n_at(index_branch::ordinary, 0.8) - oracle::n_o_800) < 1e-3);
}

TEST_CASE("out-of-range wavelength raises a domain error naming branch and range") {
    const auto& m = helpers::bbo();
    try {
        refractive_index(m, index_branch::ordinary, omega_from_wavelength_um(50.0));
        FAIL("expected a physics error");
    } catch (const physics_error& e) {
        const std::string msg = e.what();
        CHECK(msg.find("ordinary") != std::string::npos);
        CHECK(msg.find("3") != std::string::npos);
    }
    CHECK_THROWS_AS(refractive_index(m, index_branch::extraordinary, omega_from_wavelength_um(0.1)),
                    physics_error);
}

TEST_CASE("index evaluation is pure") {
    const auto& m = helpers::bbo();
    const double w = omega_from_wavelength_um(0.7331);
    const double a = refractive_index(m, index_branch::extraordinary, w);
    const double b = refractive_index(m, index_branch::extraordinary, w);
    CHECK(a == b);
}

TEST_CASE("index model validation rejects broken entries") {
    sellmeier_coefficients sc;
    sc.form = sellmeier_form::single_resonance;
    sc.coeffs = {2.7, 0.02, 0.25, 0.01}; // pole at 0.5 um
    sc.lambda_min_um = 0.3;
    sc.lambda_max_um = 2.0;
    CHECK_THROWS_AS(validate(sc, "broken"), validation_error);

    sc.coeffs = {2.7, 0.02};
    CHECK_THROWS_AS(validate(sc, "broken"), validation_error);

    sellmeier_coefficients thin;
    thin.form = sellmeier_form::constant_index;
    thin.coeffs = {0.81}; // n^2 < 1
    CHECK_THROWS_AS(validate(thin, "thin"), validation_error);
}

TEST_CASE("n^2 stays above 1 across the BBO range") {
    const auto& m = helpers::bbo();
    for (int k = 0; k <= 40; ++k) {
        const double l = 0.22 + (3.0 - 0.22) * k / 40.0;
        CHECK(n_squared(m.ordinary, l) > 1.0);
        CHECK(n_squared(m.extraordinary, l) > 1.0);
    }
}

TEST_CASE("chi2 lookup") {
    const auto& m = helpers::bbo();
    CHECK(m.chi2_element("yyy") == Catch::Approx(2.22e-12).epsilon(1e-14));
    CHECK(m.chi2_element("zxx") == Catch::Approx(0.16e-12).epsilon(1e-14));
    CHECK_THROWS_AS(m.chi2_element("xyz"), validation_error);
}
