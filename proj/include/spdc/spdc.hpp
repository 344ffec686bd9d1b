#pragma once

#include "calibration.hpp"
#include "constants.hpp"
#include "dispersion.hpp"
#include "errors.hpp"
#include "grid.hpp"
#include "io.hpp"
#include "jsa.hpp"
#include "material.hpp"
#include "polarization.hpp"
#include "pump_design.hpp"
#include "schmidt.hpp"
#include "sellmeier.hpp"
#include "targets.hpp"
