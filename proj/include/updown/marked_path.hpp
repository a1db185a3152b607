#pragma once

#include <stdexcept>
#include <vector>

#include "updown/step_function.hpp"

namespace updown {

/// One jump of a marked path: at time `time` the path jumps from level
/// `preLevel` to `postLevel`, carrying an integer mark path whose lifetime
/// equals the jump height.
struct Jump {
  double time = 0.0;
  double preLevel = 0.0;   // B, birth level
  double postLevel = 0.0;  // D, death level
  StepFunction mark;
};

/// Piecewise-linear cadlag path of slope -1 with positive marked jumps.
/// `initialLevel` is the value just before `origin` (the first jump may sit
/// at the origin itself).
struct MarkedPath {
  double origin = 0.0;
  double horizon = 0.0;
  double initialLevel = 0.0;
  std::vector<Jump> jumps;
};

/// X_t reconstructed from the jumps and the unit downward drift (cadlag).
inline double pathAtTime(const MarkedPath& p, double t) {
  if (t < p.origin || t > p.horizon)
    throw std::out_of_range("pathAtTime: t outside [origin, horizon]");
  double level = p.initialLevel - (t - p.origin);
  for (const auto& jump : p.jumps) {
    if (jump.time > t) break;
    level += jump.postLevel - jump.preLevel;
  }
  return level;
}

inline void validateMarkedPath(const MarkedPath& p, double tolerance = 1e-9) {
  double lastTime = p.origin;
  double level = p.initialLevel;
  bool first = true;
  for (const auto& jump : p.jumps) {
    if (jump.time < lastTime || (!first && jump.time == lastTime))
      throw std::invalid_argument("MarkedPath: jump times must increase");
    if (jump.time > p.horizon) throw std::invalid_argument("MarkedPath: jump beyond horizon");
    const double expectedPre = level - (jump.time - lastTime);
    if (std::abs(jump.preLevel - expectedPre) > tolerance)
      throw std::invalid_argument("MarkedPath: slope -1 violated between jumps");
    const double height = jump.postLevel - jump.preLevel;
    if (!(height > 0.0)) throw std::invalid_argument("MarkedPath: jump height must be positive");
    if (jump.mark.closed && std::abs(height - jump.mark.zeta) > tolerance)
      throw std::invalid_argument("MarkedPath: jump height must equal mark lifetime");
    level = jump.postLevel;
    lastTime = jump.time;
    first = false;
  }
}

}  // namespace updown
