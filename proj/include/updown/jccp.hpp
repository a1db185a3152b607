#pragma once

#include <cstdint>
#include <vector>

#include "updown/composition.hpp"
#include "updown/marked_path.hpp"
#include "updown/ocrp.hpp"
#include "updown/rng.hpp"

namespace updown {

struct JccpBuildOptions {
  std::uint64_t eventBudget = 10'000'000;  // total chain events across all marks
};

/// Spectrally positive level process started by a jump of height zeta_0 at
/// time 0 (mark from n0), with unit downward drift, further jumps at rate
/// alpha carrying IID marks from the entry law, stopped at the first hit of
/// level 0.
struct ForwardJccp {
  MarkedPath marked;      // origin 0, initialLevel 0, first jump at time 0
  double stopTime = 0.0;  // T, equals marked.horizon when complete
  bool complete = true;   // false when the event budget ran out
};

ForwardJccp buildForward(std::int64_t n0, const OcrpParams& params, RandomSource& rng,
                         const JccpBuildOptions& options = {});

/// Independent copies, one per table of the start composition, left to right.
std::vector<ForwardJccp> buildConcatenated(const Composition& start, const OcrpParams& params,
                                           RandomSource& rng, const JccpBuildOptions& options = {});

/// Left-insertion side for theta > 0: excursions hung at the points of a
/// rate-theta Poisson process of levels, each an independent forward build
/// whose first mark starts from the left entry law.  Only insertion levels
/// <= levelHorizon are materialized; no jump of a higher excursion can cross
/// a level below its insertion point, so the skewer below the horizon is a
/// function of this finite portion.
struct NegativeExcursion {
  double insertionLevel = 0.0;  // A_{-j}
  ForwardJccp excursion;
};

struct NegativeJccp {
  double levelHorizon = 0.0;
  std::vector<NegativeExcursion> excursions;  // increasing insertion level
};

NegativeJccp buildNegative(const OcrpParams& params, double levelHorizon, RandomSource& rng,
                           const JccpBuildOptions& options = {});

/// Decomposition of a forward build along the running minimum of its level
/// process: the initial mark plus the marked excursions above the minimum,
/// listed by increasing start level (the order in which a rising level scan
/// meets them).
struct MarkedExcursion {
  double startLevel = 0.0;  // A_j, the running-minimum level under the excursion
  double startTime = 0.0;   // absolute time of the excursion's opening jump
  double endTime = 0.0;     // absolute time of the return to startLevel
  MarkedPath path;          // relative: origin 0, initialLevel 0
};

struct ExcursionDecomposition {
  StepFunction initialMark;  // Z^0
  std::vector<MarkedExcursion> excursions;
};

ExcursionDecomposition excursionDecomposition(const ForwardJccp& forward);

/// Monte Carlo estimate of mu = sum_n p_n E_n(zeta), the mean table lifetime
/// under the entry law; the construction requires mu <= 1/alpha.
struct CriticalityEstimate {
  double mu = 0.0;
  double standardError = 0.0;
  std::uint64_t censored = 0;  // lifetimes cut off by the event budget
  bool subcritical(double alpha) const {
    return alpha <= 0.0 || mu - 3.0 * standardError <= 1.0 / alpha + 3.0 * standardError;
  }
};

CriticalityEstimate estimateMeanLifetime(const OcrpParams& params, std::uint64_t samples,
                                         RandomSource& rng);

}  // namespace updown
