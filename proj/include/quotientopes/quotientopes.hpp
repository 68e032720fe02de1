#pragma once

// Quotient fans of lattice congruences of the weak order on S_n, realized as
// polytopes with exact rational coordinates.

#include "quotientopes/braid_fan.hpp"
#include "quotientopes/commands.hpp"
#include "quotientopes/congruence.hpp"
#include "quotientopes/errors.hpp"
#include "quotientopes/permutation.hpp"
#include "quotientopes/quotientope.hpp"
#include "quotientopes/rational.hpp"
#include "quotientopes/serialization.hpp"
#include "quotientopes/shards.hpp"
#include "quotientopes/subset.hpp"
#include "quotientopes/weights.hpp"
