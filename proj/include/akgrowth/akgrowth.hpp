#pragma once

// Umbrella header for the whole library.

#include "akgrowth/asymptotics.hpp"
#include "akgrowth/circle.hpp"
#include "akgrowth/consumption.hpp"
#include "akgrowth/csv.hpp"
#include "akgrowth/errors.hpp"
#include "akgrowth/fd_solver.hpp"
#include "akgrowth/feasibility.hpp"
#include "akgrowth/field.hpp"
#include "akgrowth/fourier.hpp"
#include "akgrowth/greens.hpp"
#include "akgrowth/presets.hpp"
#include "akgrowth/profile.hpp"
#include "akgrowth/quadrature.hpp"
#include "akgrowth/scalar_path.hpp"
#include "akgrowth/scenario.hpp"
#include "akgrowth/scenario_io.hpp"
#include "akgrowth/spectral_solver.hpp"
#include "akgrowth/technology.hpp"
#include "akgrowth/tridiagonal.hpp"
