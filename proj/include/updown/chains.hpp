#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <vector>

#include <Eigen/Dense>

#include "updown/rng.hpp"
#include "updown/step_function.hpp"

namespace updown {

/// Finite distribution on {1, 2, ...} used for table entry sizes.
struct EntryDistribution {
  std::vector<std::pair<std::int64_t, double>> atoms;  // (value, probability)

  static EntryDistribution pointMass(std::int64_t value) { return {{{value, 1.0}}}; }
  std::int64_t sample(RandomSource& rng) const;
  double mean() const;
  bool isPointMass(std::int64_t value) const {
    return atoms.size() == 1 && atoms[0].first == value && atoms[0].second == 1.0;
  }
};

/// Q-matrix description on the nonnegative integers with 0 absorbing.
///
/// Qalpha(alpha):    q(m, m+1) = m - alpha, q(m, m-1) = m for m >= 1
/// TotalMass(theta): q(m, m+1) = m + theta, q(m, m-1) = m for m >= 0
/// General:          arbitrary row enumeration (targets with positive rates)
struct RateSpec {
  enum class Kind { Qalpha, TotalMass, General };

  Kind kind = Kind::Qalpha;
  double alpha = 0.5;
  double theta = 0.0;
  std::function<std::vector<std::pair<std::int64_t, double>>(std::int64_t)> generalRates;
  EntryDistribution entry = EntryDistribution::pointMass(1);      // p
  EntryDistribution leftEntry = EntryDistribution::pointMass(1);  // p^-

  static RateSpec qalpha(double alpha);
  static RateSpec totalMass(double theta);
  static RateSpec general(
      std::function<std::vector<std::pair<std::int64_t, double>>(std::int64_t)> rates,
      EntryDistribution entry = EntryDistribution::pointMass(1),
      EntryDistribution leftEntry = EntryDistribution::pointMass(1));

  /// Enabled transitions out of state m (empty at the absorbing 0 except for
  /// TotalMass, which moves up from 0 at rate theta).
  std::vector<std::pair<std::int64_t, double>> ratesFrom(std::int64_t m) const;
};

struct ChainRunOptions {
  double horizon = std::numeric_limits<double>::infinity();
  std::uint64_t eventBudget = 10'000'000;
};

/// Exact event-driven simulation: holding time Exp(row sum), jump targets
/// proportional to their rates.  Absorption closes the path at zeta; hitting
/// the horizon first truncates it (open path with zeta = horizon).
StepFunction simulateChain(const RateSpec& spec, std::int64_t start, const ChainRunOptions& options,
                           RandomSource& rng);

struct AbsorptionSample {
  double zeta = 0.0;
  bool absorbed = false;
  std::uint64_t steps = 0;
};

struct AbsorptionOptions {
  std::uint64_t eventBudget = 10'000'000;
  double timeCap = std::numeric_limits<double>::infinity();
};

/// Draw the absorption time of the chain from `start`.  TotalMass specs with
/// theta > 0 are rejected (no absorption guarantee); General specs are run
/// under the event budget and report a censored sample when it is exhausted.
AbsorptionSample sampleAbsorptionTime(const RateSpec& spec, std::int64_t start, RandomSource& rng,
                                      const AbsorptionOptions& options = {});

/// Absorption time of the linear birth-death chain with up-rate m - a and
/// down-rate m, drawn through the branching law of its edge-crossing counts:
/// down-crossings of consecutive edges form a branching recursion
/// (one crossing at edge 1->0, plus negative-binomial offspring per level),
/// and the total holding time per level is Gamma(visits)/rate.  Exact in law
/// and O(max level) per draw, which makes large starts tractable.  `a` may be
/// any value <= 1 (a = alpha for the single-table chain, a = 0 for the
/// critical case).  Returns a censored sample when the walk climbs above
/// levelCap.
AbsorptionSample absorptionTimeByCrossings(double a, std::int64_t start, RandomSource& rng,
                                           std::int64_t levelCap = 2'000'000);

/// Exact time-t marginal of the linear birth-death chain with immigration:
/// up-rate m + theta, down-rate m (theta = 0 gives the critical chain,
/// absorbed at 0).  Uses the branching/immigration decomposition of the
/// transition law; O(start) per draw.
std::int64_t linearBdMarginal(double theta, std::int64_t start, double t, RandomSource& rng);

/// Time-t marginal of the Qalpha chain by direct event simulation (tight
/// loop, no path storage).
std::int64_t qalphaMarginalDirect(double alpha, std::int64_t start, double t, RandomSource& rng);

/// Dense generator on {0, ..., cap} plus one absorbing overflow state that
/// lumps every transition beyond the cap.  Row sums are zero.
Eigen::MatrixXd truncatedGenerator(const RateSpec& spec, std::int64_t cap);

struct ExpmMarginal {
  std::vector<double> probabilities;  // states 0..cap, then overflow
  double overflowMass = 0.0;
};

/// exp(t Q_cap) row for `start`; throws when the lumped overflow mass
/// exceeds `overflowBound` (the truncation then no longer controls the
/// marginal to the requested accuracy).
ExpmMarginal marginalByExpm(const RateSpec& spec, std::int64_t start, std::int64_t cap, double t,
                            double overflowBound = 0.05);

}  // namespace updown
