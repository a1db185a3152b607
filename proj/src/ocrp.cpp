#include "updown/ocrp.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace updown {

namespace {

Composition withPart(const Composition& c, std::size_t i, std::int64_t value) {
  Composition next = c;
  if (value == 0)
    next.erase(next.begin() + static_cast<std::ptrdiff_t>(i));
  else
    next[i] = value;
  return next;
}

Composition withInsert(const Composition& c, std::size_t position, std::int64_t size) {
  Composition next = c;
  next.insert(next.begin() + static_cast<std::ptrdiff_t>(position), size);
  return next;
}

// log of the rising factorial x (x+1) ... (x+k-1); -inf encodes a zero factor.
double logPochhammer(double x, std::int64_t k) {
  if (k == 0) return 0.0;
  if (x <= 0.0) return -std::numeric_limits<double>::infinity();
  return std::lgamma(x + static_cast<double>(k)) - std::lgamma(x);
}

double logBinomial(std::int64_t n, std::int64_t m) {
  return std::lgamma(static_cast<double>(n) + 1.0) - std::lgamma(static_cast<double>(m) + 1.0) -
         std::lgamma(static_cast<double>(n - m) + 1.0);
}

// log r(n, m) for 1 <= m <= n.  The m = n case is rewritten so that the
// theta factors cancel and theta = 0 stays finite.
double logR(std::int64_t n, std::int64_t m, double alpha, double theta) {
  if (m < 1 || m > n) throw std::invalid_argument("compositionProbability: bad part");
  if (m == n)
    return logPochhammer(1.0 - alpha, n - 1) - logPochhammer(1.0 + theta, n - 1);
  const double weight =
      (static_cast<double>(n - m) * alpha + static_cast<double>(m) * theta) / static_cast<double>(n);
  if (weight <= 0.0) return -std::numeric_limits<double>::infinity();
  return logBinomial(n, m) + std::log(weight) + logPochhammer(1.0 - alpha, m - 1) -
         logPochhammer(static_cast<double>(n - m) + theta, m);
}

struct UpMove {
  enum class Kind { Join, InsertRight, InsertLeft } kind;
  std::size_t table = 0;       // for Join / InsertRight
  std::int64_t entrySize = 1;  // for insertions
};

// Ordered-CRP up-step selection: join table i with weight n_i - alpha,
// open right of i with weight alpha, open left-most with weight theta.
UpMove sampleUpMove(const Composition& c, double alpha, double theta, RandomSource& rng) {
  const double mass = static_cast<double>(totalMass(c));
  const double total = mass + theta;
  if (!(total > 0.0)) throw std::invalid_argument("up-step: no enabled move at (0,0) from empty state");
  double u = rng.uniform01() * total;
  for (std::size_t i = 0; i < c.size(); ++i) {
    const double join = static_cast<double>(c[i]) - alpha;
    if (u < join) return {UpMove::Kind::Join, i, 0};
    u -= join;
    if (u < alpha) return {UpMove::Kind::InsertRight, i, 1};
    u -= alpha;
  }
  return {UpMove::Kind::InsertLeft, 0, 1};
}

Composition applyUpMove(const Composition& c, const UpMove& move) {
  switch (move.kind) {
    case UpMove::Kind::Join:
      return withPart(c, move.table, c[move.table] + 1);
    case UpMove::Kind::InsertRight:
      return withInsert(c, move.table + 1, move.entrySize);
    case UpMove::Kind::InsertLeft:
      return withInsert(c, 0, move.entrySize);
  }
  return c;
}

}  // namespace

std::vector<OcrpTransition> stepRates(const Composition& c, const OcrpParams& params) {
  if (!isValidComposition(c)) throw std::invalid_argument("stepRates: invalid composition");
  std::vector<OcrpTransition> transitions;
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (const auto& [target, rate] : params.spec.ratesFrom(c[i])) {
      if (rate > 0.0) transitions.push_back({withPart(c, i, target), rate});
    }
    if (params.alpha > 0.0) {
      for (const auto& [size, prob] : params.spec.entry.atoms) {
        const double rate = params.alpha * prob;
        if (rate > 0.0) transitions.push_back({withInsert(c, i + 1, size), rate});
      }
    }
  }
  if (params.theta > 0.0) {
    for (const auto& [size, prob] : params.spec.leftEntry.atoms) {
      const double rate = params.theta * prob;
      if (rate > 0.0) transitions.push_back({withInsert(c, 0, size), rate});
    }
  }
  return transitions;
}

namespace {

// One exact transition of the composition chain; returns the holding time
// drawn for the departed state, or +inf when no move is enabled.
double ocrpStepInPlace(Composition& c, const OcrpParams& params, RandomSource& rng) {
  if (params.isBasic()) {
    const double mass = static_cast<double>(totalMass(c));
    const double total = 2.0 * mass + params.theta;
    if (!(total > 0.0)) return std::numeric_limits<double>::infinity();
    const double hold = rng.exponential() / total;
    double u = rng.uniform01() * total;
    if (u >= 2.0 * mass) {
      c.insert(c.begin(), 1);
      return hold;
    }
    // Per-table block of width 2 n_i: up (n_i - alpha), down (n_i), right
    // insertion (alpha).
    for (std::size_t i = 0; i < c.size(); ++i) {
      const double ni = static_cast<double>(c[i]);
      const double block = 2.0 * ni;
      if (u < block) {
        if (u < ni - params.alpha) {
          c[i] += 1;
        } else if (u < 2.0 * ni - params.alpha) {
          if (c[i] == 1)
            c.erase(c.begin() + static_cast<std::ptrdiff_t>(i));
          else
            c[i] -= 1;
        } else {
          c.insert(c.begin() + static_cast<std::ptrdiff_t>(i) + 1, 1);
        }
        return hold;
      }
      u -= block;
    }
    // Numerical edge of the partition of [0, total): treat as left insertion
    // when theta > 0, otherwise as a down-step at the last table.
    if (params.theta > 0.0) {
      c.insert(c.begin(), 1);
    } else if (!c.empty()) {
      if (c.back() == 1)
        c.pop_back();
      else
        c.back() -= 1;
    }
    return hold;
  }

  const auto transitions = stepRates(c, params);
  double total = 0.0;
  for (const auto& transition : transitions) total += transition.rate;
  if (!(total > 0.0)) return std::numeric_limits<double>::infinity();
  const double hold = rng.exponential() / total;
  double u = rng.uniform01() * total;
  for (const auto& transition : transitions) {
    u -= transition.rate;
    if (u < 0.0) {
      c = transition.next;
      return hold;
    }
  }
  c = transitions.back().next;
  return hold;
}

}  // namespace

std::vector<LevelState> simulateOcrp(const Composition& start, const OcrpParams& params,
                                     double levelHorizon, RandomSource& rng) {
  if (!isValidComposition(start)) throw std::invalid_argument("simulateOcrp: invalid start");
  std::vector<LevelState> trajectory;
  trajectory.push_back({0.0, start});
  Composition state = start;
  double level = 0.0;
  for (;;) {
    Composition next = state;
    const double hold = ocrpStepInPlace(next, params, rng);
    level += hold;
    if (level >= levelHorizon) break;
    state = std::move(next);
    trajectory.push_back({level, state});
  }
  return trajectory;
}

std::vector<Composition> ocrpStatesAtLevels(const Composition& start, const OcrpParams& params,
                                            const std::vector<double>& levels, RandomSource& rng) {
  std::vector<Composition> states;
  states.reserve(levels.size());
  Composition state = start;
  double level = 0.0;
  for (double query : levels) {
    for (;;) {
      Composition next = state;
      const double hold = ocrpStepInPlace(next, params, rng);
      if (level + hold > query) {
        level = query;
        break;
      }
      level += hold;
      state = std::move(next);
    }
    states.push_back(state);
  }
  return states;
}

Composition uniformDownStep(const Composition& c, RandomSource& rng) {
  const std::int64_t mass = totalMass(c);
  if (mass < 1) throw std::invalid_argument("uniformDownStep: empty composition");
  auto pick = static_cast<std::int64_t>(rng.uniformBelow(static_cast<std::uint64_t>(mass)));
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (pick < c[i]) return withPart(c, i, c[i] - 1);
    pick -= c[i];
  }
  return withPart(c, c.size() - 1, c.back() - 1);
}

Composition discreteUpDownStep(const Composition& c, double alpha, double theta, RandomSource& rng) {
  if (c.empty()) throw std::invalid_argument("discreteUpDownStep: empty composition");
  const Composition up = applyUpMove(c, sampleUpMove(c, alpha, theta, rng));
  return uniformDownStep(up, rng);
}

double compositionProbability(const Composition& c, double alpha, double theta) {
  if (!isValidComposition(c) || c.empty())
    throw std::invalid_argument("compositionProbability: need a nonempty composition");
  if (alpha < 0.0 || alpha > 1.0 || theta < 0.0)
    throw std::invalid_argument("compositionProbability: bad parameters");
  double logProb = 0.0;
  std::int64_t prefix = 0;
  for (auto part : c) {
    prefix += part;
    logProb += logR(prefix, part, alpha, theta);
    if (logProb == -std::numeric_limits<double>::infinity()) return 0.0;
  }
  return std::exp(logProb);
}

Composition sampleStationary(std::int64_t n, double alpha, double theta, RandomSource& rng) {
  if (n < 1) throw std::invalid_argument("sampleStationary: n must be >= 1");
  Composition c{1};
  for (std::int64_t step = 1; step < n; ++step) c = applyUpMove(c, sampleUpMove(c, alpha, theta, rng));
  return c;
}

}  // namespace updown
