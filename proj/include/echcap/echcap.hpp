#pragma once

// Umbrella include for the whole library.

#include "analysis.hpp"
#include "capacities.hpp"
#include "capacity.hpp"
#include "convolution.hpp"
#include "counting.hpp"
#include "decide.hpp"
#include "ellipsoid.hpp"
#include "envelopes.hpp"
#include "epsilon.hpp"
#include "errors.hpp"
#include "polynomial.hpp"
#include "quadrature.hpp"
#include "quasiquadratic.hpp"
#include "rational.hpp"
#include "recurrence.hpp"
#include "series.hpp"
