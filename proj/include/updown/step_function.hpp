#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace updown {

/// Right-continuous integer-valued path on [0, zeta).  Events record
/// (time, new value); a closed path ends with an explicit terminal event to
/// value 0 at time zeta, so zeta always equals the lifetime of the table the
/// path describes.  Paths truncated by a simulation horizon are left open.
struct StepFunction {
  std::int64_t initialValue = 0;
  std::vector<std::pair<double, std::int64_t>> events;  // strictly increasing times
  double zeta = 0.0;
  bool closed = true;  // false when truncated at a horizon before absorption

  bool empty() const { return initialValue == 0 && events.empty(); }
};

/// Value in force at time s under right-continuity.
inline std::int64_t evaluateStep(const StepFunction& f, double s) {
  if (s < 0.0 || s >= f.zeta)
    throw std::out_of_range("evaluateStep: s outside [0, zeta)");
  std::int64_t value = f.initialValue;
  for (const auto& [time, next] : f.events) {
    if (time > s) break;
    value = next;
  }
  return value;
}

/// Interior events lie strictly inside (0, zeta) with positive values; a
/// closed path carries the terminal absorption event (zeta, 0).
inline void validateStepFunction(const StepFunction& f) {
  if (f.zeta <= 0.0) throw std::invalid_argument("StepFunction: zeta must be positive");
  double last = 0.0;
  for (std::size_t i = 0; i < f.events.size(); ++i) {
    const auto& [time, value] = f.events[i];
    if (!(time > last)) throw std::invalid_argument("StepFunction: event times must increase");
    const bool isTerminal = f.closed && (i + 1 == f.events.size());
    if (isTerminal) {
      if (value != 0 || time != f.zeta)
        throw std::invalid_argument("StepFunction: closed path must end with (zeta, 0)");
    } else {
      if (value < 1 || time >= f.zeta)
        throw std::invalid_argument("StepFunction: interior events need value >= 1, time < zeta");
    }
    last = time;
  }
  if (f.closed && f.events.empty())
    throw std::invalid_argument("StepFunction: closed path must end with (zeta, 0)");
}

}  // namespace updown
