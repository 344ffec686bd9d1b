#pragma once

namespace spdc {

inline constexpr double speed_of_light = 299792458.0; // m/s, exact
inline constexpr double pi = 3.14159265358979323846;

} // namespace spdc
