#pragma once

// Reference numbers frozen from an independent implementation of the same
// physics (numpy + LAPACK, trapezoid quadrature identical to the library's).
// Tolerances are pinned where each value is used.

namespace oracle {

// benchmark targets: signal 0.8 um / 1 mm coherence length, idler 1.5 um /
// 1 cm, sigma = 2 pi c / l_c
inline constexpr double omega_s0 = 2.354564459136e15; // rad/s
inline constexpr double omega_i0 = 1.255767711539e15;
inline constexpr double omega_p = 3.610332170675e15;
inline constexpr double sigma_s = 1.883651567309e12;
inline constexpr double sigma_i = 1.883651567309e11;

// z pathway: pump extraordinary, photons ordinary
inline constexpr double z_k_p = -6.147847187252e6;   // rad/m
inline constexpr double z_n_p = 1.556175785905;
inline constexpr double z_beta_prime_s = 5.622750567834e-9; // s/m
inline constexpr double z_beta_prime_i = 5.582516241361e-9;
inline constexpr double z_A = 1.893046396498e12;     // rad/s
inline constexpr double z_B = 1.349594914183e3;      // rad/m
inline constexpr double z_C = 3.541892491852e-9;     // s/m
inline constexpr double z_theta_deg = -19.15036534792;

// y pathway: pump ordinary, photons ordinary
inline constexpr double y_n_p = 1.675897630944;
inline constexpr double y_B = 1.253183301566e3;
inline constexpr double y_C = 3.288868741341e-9;
inline constexpr double y_theta_deg = -17.73491147526;

// full-dispersion simulation of the benchmark design, 256^2, +-5 sigma
inline constexpr double z_schmidt_K_256 = 1.000568788279;
inline constexpr double z_schmidt_K_512 = 1.000568787513;
inline constexpr double z_pearson_rho = -3.371354780159e-2;
inline constexpr double y_schmidt_K_256 = 1.000964949869;
inline constexpr double y_pearson_rho = -4.389877835129e-2;
inline constexpr double pathway_overlap_256 = 0.9999866556863;

// index spot checks against published BBO tables (4 decimal places)
inline constexpr double n_o_5321 = 1.6749;
inline constexpr double n_e_5321 = 1.5555;
inline constexpr double n_o_10642 = 1.6551;
inline constexpr double n_e_10642 = 1.5425;
inline constexpr double n_o_800 = 1.661;
inline constexpr double beta_o_800 = 1.304838592213e7;      // rad/m
inline constexpr double beta_prime_o_800 = 5.622750567834e-9; // s/m

inline constexpr double balance_ratio_bbo = 192.515625; // (2.22/0.16)^2

// Schmidt numbers of exp[-(x^2+y^2)/4 - r x y / 2] for r = 0.3, 0.6, 0.9,
// from the geometric mode spectrum of that kernel
inline constexpr double hermite_K_03 = 1.048284836722;
inline constexpr double hermite_K_06 = 1.25;
inline constexpr double hermite_K_09 = 2.294157338706;

} // namespace oracle
