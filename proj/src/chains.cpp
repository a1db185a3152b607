#include "updown/chains.hpp"

#include <cmath>
#include <stdexcept>

#include <unsupported/Eigen/MatrixFunctions>

namespace updown {

std::int64_t EntryDistribution::sample(RandomSource& rng) const {
  if (atoms.empty()) throw std::logic_error("EntryDistribution: empty");
  if (atoms.size() == 1) return atoms[0].first;
  double u = rng.uniform01();
  for (const auto& [value, prob] : atoms) {
    u -= prob;
    if (u < 0.0) return value;
  }
  return atoms.back().first;
}

double EntryDistribution::mean() const {
  double m = 0.0;
  for (const auto& [value, prob] : atoms) m += static_cast<double>(value) * prob;
  return m;
}

RateSpec RateSpec::qalpha(double alpha) {
  if (alpha < 0.0 || alpha > 1.0) throw std::invalid_argument("qalpha: alpha must lie in [0,1]");
  RateSpec spec;
  spec.kind = Kind::Qalpha;
  spec.alpha = alpha;
  return spec;
}

RateSpec RateSpec::totalMass(double theta) {
  if (theta < 0.0) throw std::invalid_argument("totalMass: theta must be >= 0");
  RateSpec spec;
  spec.kind = Kind::TotalMass;
  spec.theta = theta;
  return spec;
}

RateSpec RateSpec::general(
    std::function<std::vector<std::pair<std::int64_t, double>>(std::int64_t)> rates,
    EntryDistribution entry, EntryDistribution leftEntry) {
  RateSpec spec;
  spec.kind = Kind::General;
  spec.generalRates = std::move(rates);
  spec.entry = std::move(entry);
  spec.leftEntry = std::move(leftEntry);
  return spec;
}

std::vector<std::pair<std::int64_t, double>> RateSpec::ratesFrom(std::int64_t m) const {
  std::vector<std::pair<std::int64_t, double>> out;
  switch (kind) {
    case Kind::Qalpha:
      if (m >= 1) {
        if (static_cast<double>(m) - alpha > 0.0) out.emplace_back(m + 1, static_cast<double>(m) - alpha);
        out.emplace_back(m - 1, static_cast<double>(m));
      }
      break;
    case Kind::TotalMass:
      if (static_cast<double>(m) + theta > 0.0) out.emplace_back(m + 1, static_cast<double>(m) + theta);
      if (m >= 1) out.emplace_back(m - 1, static_cast<double>(m));
      break;
    case Kind::General: {
      if (m == 0) break;  // 0 is absorbing for every admissible Q
      out = generalRates(m);
      for (const auto& [target, rate] : out) {
        if (rate < 0.0) throw std::invalid_argument("RateSpec: negative rate");
        if (target < 0 || target == m) throw std::invalid_argument("RateSpec: bad transition target");
      }
      break;
    }
  }
  return out;
}

StepFunction simulateChain(const RateSpec& spec, std::int64_t start, const ChainRunOptions& options,
                           RandomSource& rng) {
  if (start < 0) throw std::invalid_argument("simulateChain: start must be >= 0");
  StepFunction path;
  path.initialValue = start;

  std::int64_t state = start;
  double time = 0.0;

  const bool fastQalpha = spec.kind == RateSpec::Kind::Qalpha;
  const bool fastTotalMass = spec.kind == RateSpec::Kind::TotalMass;
  const bool zeroAbsorbing = !(fastTotalMass && spec.theta > 0.0);

  if (state == 0 && zeroAbsorbing) {
    path.zeta = 0.0;
    path.closed = true;
    return path;
  }

  for (std::uint64_t step = 0; step < options.eventBudget; ++step) {
    double total;
    if (fastQalpha) {
      total = 2.0 * static_cast<double>(state) - spec.alpha;
    } else if (fastTotalMass) {
      total = 2.0 * static_cast<double>(state) + spec.theta;
    } else {
      total = 0.0;
      for (const auto& [target, rate] : spec.ratesFrom(state)) total += rate;
    }
    if (!(total > 0.0)) {  // stuck without being at the absorbing state
      path.zeta = options.horizon;
      path.closed = false;
      return path;
    }
    if (!std::isfinite(total)) throw std::runtime_error("simulateChain: infinite row sum");

    time += rng.exponential() / total;
    if (time >= options.horizon) {
      path.zeta = options.horizon;
      path.closed = false;
      return path;
    }

    if (fastQalpha) {
      const double up = static_cast<double>(state) - spec.alpha;
      state += rng.uniform01() * total < up ? 1 : -1;
    } else if (fastTotalMass) {
      const double up = static_cast<double>(state) + spec.theta;
      state += rng.uniform01() * total < up ? 1 : -1;
    } else {
      double u = rng.uniform01() * total;
      std::int64_t next = state;
      for (const auto& [target, rate] : spec.ratesFrom(state)) {
        u -= rate;
        if (u < 0.0) {
          next = target;
          break;
        }
      }
      state = next;
    }

    path.events.emplace_back(time, state);
    if (state == 0 && zeroAbsorbing) {
      path.zeta = time;
      path.closed = true;
      return path;
    }
  }
  throw std::runtime_error("simulateChain: event budget exceeded");
}

AbsorptionSample sampleAbsorptionTime(const RateSpec& spec, std::int64_t start, RandomSource& rng,
                                      const AbsorptionOptions& options) {
  if (start < 1) throw std::invalid_argument("sampleAbsorptionTime: start must be >= 1");
  if (spec.kind == RateSpec::Kind::TotalMass && spec.theta > 0.0)
    throw std::invalid_argument("sampleAbsorptionTime: TotalMass with theta > 0 never absorbs");

  AbsorptionSample sample;
  const bool fastQalpha = spec.kind == RateSpec::Kind::Qalpha;
  const bool fastCritical = spec.kind == RateSpec::Kind::TotalMass;  // theta == 0 here
  std::int64_t state = start;
  double time = 0.0;

  for (std::uint64_t step = 0; step < options.eventBudget; ++step) {
    if (fastQalpha || fastCritical) {
      const double up = static_cast<double>(state) - (fastQalpha ? spec.alpha : 0.0);
      const double total = static_cast<double>(state) + std::max(up, 0.0);
      time += rng.exponential() / total;
      state += (up > 0.0 && rng.uniform01() * total < up) ? 1 : -1;
    } else {
      const auto rates = spec.ratesFrom(state);
      double total = 0.0;
      for (const auto& [target, rate] : rates) total += rate;
      if (!(total > 0.0))
        throw std::runtime_error("sampleAbsorptionTime: chain stuck in a rateless state");
      time += rng.exponential() / total;
      double u = rng.uniform01() * total;
      for (const auto& [target, rate] : rates) {
        u -= rate;
        if (u < 0.0) {
          state = target;
          break;
        }
      }
    }
    if (time >= options.timeCap) {
      sample.zeta = options.timeCap;
      sample.absorbed = false;
      sample.steps = step + 1;
      return sample;
    }
    if (state == 0) {
      sample.zeta = time;
      sample.absorbed = true;
      sample.steps = step + 1;
      return sample;
    }
  }
  sample.zeta = time;
  sample.absorbed = false;
  sample.steps = options.eventBudget;
  return sample;
}

AbsorptionSample absorptionTimeByCrossings(double a, std::int64_t start, RandomSource& rng,
                                           std::int64_t levelCap) {
  if (a > 1.0) throw std::invalid_argument("absorptionTimeByCrossings: need a <= 1");
  if (start < 0) throw std::invalid_argument("absorptionTimeByCrossings: start must be >= 0");
  AbsorptionSample sample;
  sample.absorbed = true;
  if (start == 0) return sample;

  double total = 0.0;
  double crossings = 1.0;  // edge 1 -> 0 is crossed exactly once
  std::uint64_t steps = 0;
  for (std::int64_t level = 1;; ++level) {
    if (level > levelCap) {
      sample.absorbed = false;
      sample.zeta = std::numeric_limits<double>::infinity();
      sample.steps = steps;
      return sample;
    }
    const double m = static_cast<double>(level);
    const double upRate = m - a;
    const double downProb = m / (m + upRate);
    // Up-moves at this level across all first-passage legs; each spawns one
    // leg at the next level up.
    double upMoves = 0.0;
    if (upRate > 0.0)
      upMoves = static_cast<double>(rng.negativeBinomial(crossings, downProb));
    const double visits = crossings + upMoves;
    total += rng.gammaVariate(visits) / (m + std::max(upRate, 0.0));
    steps += static_cast<std::uint64_t>(visits);

    crossings = upMoves + (level + 1 <= start ? 1.0 : 0.0);
    if (crossings == 0.0) break;
  }
  sample.zeta = total;
  sample.steps = steps;
  return sample;
}

std::int64_t linearBdMarginal(double theta, std::int64_t start, double t, RandomSource& rng) {
  if (theta < 0.0 || start < 0 || !(t >= 0.0))
    throw std::invalid_argument("linearBdMarginal: bad parameters");
  if (t == 0.0) return start;
  const double pAlive = 1.0 / (1.0 + t);
  std::int64_t result = 0;
  if (start > 0) {
    const auto survivors =
        static_cast<std::int64_t>(rng.binomial(static_cast<std::uint64_t>(start), pAlive));
    if (survivors > 0) {
      result += survivors;
      result += static_cast<std::int64_t>(
          rng.poisson(rng.gammaVariate(static_cast<double>(survivors)) * t));
    }
  }
  if (theta > 0.0) {
    result += static_cast<std::int64_t>(rng.poisson(rng.gammaVariate(theta) * t));
  }
  return result;
}

std::int64_t qalphaMarginalDirect(double alpha, std::int64_t start, double t, RandomSource& rng) {
  if (alpha < 0.0 || alpha > 1.0 || start < 0 || !(t >= 0.0))
    throw std::invalid_argument("qalphaMarginalDirect: bad parameters");
  std::int64_t state = start;
  double time = 0.0;
  while (state > 0) {
    const double up = static_cast<double>(state) - alpha;
    const double total = static_cast<double>(state) + std::max(up, 0.0);
    time += rng.exponential() / total;
    if (time > t) break;
    state += (up > 0.0 && rng.uniform01() * total < up) ? 1 : -1;
  }
  return state;
}

Eigen::MatrixXd truncatedGenerator(const RateSpec& spec, std::int64_t cap) {
  if (cap < 1) throw std::invalid_argument("truncatedGenerator: cap must be >= 1");
  const auto n = static_cast<Eigen::Index>(cap + 2);  // states 0..cap plus overflow
  Eigen::MatrixXd generator = Eigen::MatrixXd::Zero(n, n);
  const Eigen::Index overflow = n - 1;
  for (std::int64_t m = 0; m <= cap; ++m) {
    double rowSum = 0.0;
    for (const auto& [target, rate] : spec.ratesFrom(m)) {
      if (rate <= 0.0) continue;
      const Eigen::Index column = target > cap ? overflow : static_cast<Eigen::Index>(target);
      generator(m, column) += rate;
      rowSum += rate;
    }
    generator(m, m) -= rowSum;
  }
  return generator;
}

ExpmMarginal marginalByExpm(const RateSpec& spec, std::int64_t start, std::int64_t cap, double t,
                            double overflowBound) {
  if (start < 0 || start > cap) throw std::invalid_argument("marginalByExpm: start outside truncation");
  if (!(t >= 0.0)) throw std::invalid_argument("marginalByExpm: t must be >= 0");
  const Eigen::MatrixXd generator = truncatedGenerator(spec, cap);
  const Eigen::MatrixXd transition = (t * generator).exp();
  ExpmMarginal marginal;
  const auto n = generator.rows();
  marginal.probabilities.resize(static_cast<std::size_t>(n));
  for (Eigen::Index j = 0; j < n; ++j)
    marginal.probabilities[static_cast<std::size_t>(j)] = transition(start, j);
  marginal.overflowMass = marginal.probabilities.back();
  if (marginal.overflowMass > overflowBound)
    throw std::runtime_error("marginalByExpm: truncation overflow mass exceeds the configured bound");
  return marginal;
}

}  // namespace updown
