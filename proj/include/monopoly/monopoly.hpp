#pragma once

// Umbrella header.

#include "monopoly/bell.hpp"
#include "monopoly/blowup.hpp"
#include "monopoly/blowup_series.hpp"
#include "monopoly/covering.hpp"
#include "monopoly/csv.hpp"
#include "monopoly/domain_analysis.hpp"
#include "monopoly/errors.hpp"
#include "monopoly/estimate.hpp"
#include "monopoly/exponent_vector.hpp"
#include "monopoly/int_matrix.hpp"
#include "monopoly/json_io.hpp"
#include "monopoly/measure.hpp"
#include "monopoly/monomial_series.hpp"
#include "monopoly/norms.hpp"
#include "monopoly/positive_bergman.hpp"
#include "monopoly/projection.hpp"
#include "monopoly/quadrature.hpp"
#include "monopoly/rational.hpp"
#include "monopoly/region_integrals.hpp"
#include "monopoly/reinhardt_set.hpp"
#include "monopoly/rng.hpp"
#include "monopoly/runner.hpp"
#include "monopoly/sublevel_volume.hpp"
#include "monopoly/suites.hpp"
