#pragma once

// Umbrella header.
#include "herbst/errors.hpp"
#include "herbst/number.hpp"
#include "herbst/matrix.hpp"
#include "herbst/linalg.hpp"
#include "herbst/lattice.hpp"
#include "herbst/criterion.hpp"
#include "herbst/orbifold.hpp"
#include "herbst/polytope.hpp"
#include "herbst/splitmix.hpp"
#include "herbst/generator.hpp"
