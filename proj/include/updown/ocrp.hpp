#pragma once

#include <vector>

#include "updown/chains.hpp"
#include "updown/composition.hpp"
#include "updown/rng.hpp"

namespace updown {

/// Parameters of the composition-valued chain.  The defaults reproduce the
/// basic model: per-table size moves follow Qalpha(alpha), insertions carry a
/// single customer.
struct OcrpParams {
  double alpha = 0.5;
  double theta = 0.0;
  RateSpec spec = RateSpec::qalpha(0.5);

  static OcrpParams basic(double alpha, double theta) {
    OcrpParams params;
    params.alpha = alpha;
    params.theta = theta;
    params.spec = RateSpec::qalpha(alpha);
    return params;
  }
  static OcrpParams generalised(double alpha, double theta, RateSpec spec) {
    OcrpParams params;
    params.alpha = alpha;
    params.theta = theta;
    params.spec = std::move(spec);
    return params;
  }
  bool isBasic() const {
    return spec.kind == RateSpec::Kind::Qalpha && spec.alpha == alpha &&
           spec.entry.isPointMass(1) && spec.leftEntry.isPointMass(1);
  }
};

struct OcrpTransition {
  Composition next;
  double rate;
};

/// Complete enumeration of the enabled transitions and their rates: per-table
/// size moves via the spec's Q-matrix, a new table of size l right of table i
/// at rate alpha p_l, and a new left-most table at rate theta p^-_l.
std::vector<OcrpTransition> stepRates(const Composition& c, const OcrpParams& params);

/// One point of a level-indexed trajectory.
struct LevelState {
  double level;
  Composition composition;
};

/// Jump-chain/holding-time simulation of the composition chain up to
/// levelHorizon.  The trajectory starts with (0, start) and records every
/// state change.
std::vector<LevelState> simulateOcrp(const Composition& start, const OcrpParams& params,
                                     double levelHorizon, RandomSource& rng);

/// States of the chain at the given (sorted, nonnegative) query levels,
/// without storing the full trajectory.
std::vector<Composition> ocrpStatesAtLevels(const Composition& start, const OcrpParams& params,
                                            const std::vector<double>& levels, RandomSource& rng);

/// One transition of the discrete-time chain on compositions of n: an
/// up-step with the ordered-CRP probabilities followed by a uniform-customer
/// down-step.
Composition discreteUpDownStep(const Composition& c, double alpha, double theta, RandomSource& rng);

/// Uniform-customer down-step alone.
Composition uniformDownStep(const Composition& c, RandomSource& rng);

/// Stationary probability of a composition (left-to-right table order) under
/// the two-parameter law: the product over tables of r(prefix mass, size).
/// The defining product formula is stated for the reversed reading of the
/// composition; passing left-to-right order here applies that reversal.
double compositionProbability(const Composition& c, double alpha, double theta);

/// Exact stationary sample on compositions of n: n - 1 ordered-CRP up-steps
/// from (1).
Composition sampleStationary(std::int64_t n, double alpha, double theta, RandomSource& rng);

}  // namespace updown
