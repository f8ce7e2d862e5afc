#include "sosnet/mobility.hpp"

#include <cmath>

#include "sosnet/rng.hpp"

namespace sosnet {

Position step_heading(Position pos, double speed, double theta, const WorldConfig& cfg) {
  if (speed == 0.0) return pos;
  return wrap({pos.x + speed * std::cos(theta), pos.y + speed * std::sin(theta)}, cfg);
}

Position step_phone(Position pos, double speed, std::mt19937_64& rng, const WorldConfig& cfg) {
  // Draw even at zero speed so the stream position does not depend on speed.
  const double theta = 2.0 * M_PI * rng::uniform01(rng);
  return step_heading(pos, speed, theta, cfg);
}

}  // namespace sosnet
