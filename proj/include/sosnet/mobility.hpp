#pragma once

#include <random>

#include "sosnet/world.hpp"

namespace sosnet {

/// Move `speed` units in a direction drawn uniformly from [0, 2pi), then wrap.
Position step_phone(Position pos, double speed, std::mt19937_64& rng, const WorldConfig& cfg);

/// Same displacement with the heading supplied by the caller.
Position step_heading(Position pos, double speed, double theta, const WorldConfig& cfg);

}  // namespace sosnet
