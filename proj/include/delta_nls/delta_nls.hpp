#pragma once

#include "delta_nls/classification.hpp"
#include "delta_nls/errors.hpp"
#include "delta_nls/model.hpp"
#include "delta_nls/phase.hpp"
#include "delta_nls/radial_grid.hpp"
#include "delta_nls/shooting.hpp"
#include "delta_nls/solver.hpp"
#include "delta_nls/specfun.hpp"
