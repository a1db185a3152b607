#include "updown/analytics.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace updown::analytics {

namespace {

constexpr double kEps = 1e-15;
constexpr int kMaxIter = 10000;

// Lower regularized series: P(a,x) = x^a e^-x / Gamma(a+1) * sum x^n / (a+1)_n.
double gammaPSeries(double a, double x) {
  double term = 1.0 / a;
  double sum = term;
  double ap = a;
  for (int n = 0; n < kMaxIter; ++n) {
    ap += 1.0;
    term *= x / ap;
    sum += term;
    if (std::fabs(term) < std::fabs(sum) * kEps)
      return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
  }
  throw std::runtime_error("gammaPSeries: no convergence");
}

// Upper regularized continued fraction (modified Lentz).
double gammaQFraction(double a, double x) {
  const double tiny = std::numeric_limits<double>::min() / kEps;
  double b = x + 1.0 - a;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < kMaxIter; ++i) {
    const double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::fabs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) <= kEps)
      return std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
  }
  throw std::runtime_error("gammaQFraction: no convergence");
}

}  // namespace

double regularizedGammaP(double a, double x) {
  if (!(a > 0.0) || x < 0.0) throw std::domain_error("regularizedGammaP: need a > 0, x >= 0");
  if (x == 0.0) return 0.0;
  return x < a + 1.0 ? gammaPSeries(a, x) : 1.0 - gammaQFraction(a, x);
}

double regularizedGammaQ(double a, double x) {
  if (!(a > 0.0) || x < 0.0) throw std::domain_error("regularizedGammaQ: need a > 0, x >= 0");
  if (x == 0.0) return 1.0;
  return x < a + 1.0 ? 1.0 - gammaPSeries(a, x) : gammaQFraction(a, x);
}

double upperIncompleteGamma(double a, double z) {
  if (!(a > 0.0) || a > 3.0 || !(z > 0.0))
    throw std::domain_error("upperIncompleteGamma: need a in (0,3], z > 0");
  return regularizedGammaQ(a, z) * std::exp(std::lgamma(a));
}

double zetaLaplace(double alpha, double lambda) {
  if (!(alpha > 0.0) || alpha > 1.0)
    throw std::domain_error("zetaLaplace: alpha must lie in (0,1]; use birthDeathHittingCdf at 0");
  if (!(lambda > 0.0)) throw std::domain_error("zetaLaplace: lambda must be > 0");
  const double incomplete = upperIncompleteGamma(1.0 + alpha, lambda);
  return 1.0 - lambda / alpha +
         std::pow(lambda, 1.0 + alpha) / (alpha * std::exp(lambda) * incomplete);
}

double continuedFractionLaplace(double alpha, double lambda, int depth) {
  if (!(alpha > 0.0) || alpha > 1.0 || !(lambda > 0.0) || depth < 1)
    throw std::domain_error("continuedFractionLaplace: need alpha in (0,1], lambda > 0, depth >= 1");
  double f = 0.0;  // F_depth
  for (int r = depth - 1; r >= 0; --r) {
    f = (r + 1.0) / (2.0 * r + 2.0 - alpha + lambda - (r + 1.0 - alpha) * f);
  }
  return f;
}

double birthDeathHittingCdf(long m, double t) {
  if (m < 1 || !(t > 0.0)) throw std::domain_error("birthDeathHittingCdf: need m >= 1, t > 0");
  return std::exp(static_cast<double>(m) * (std::log(t) - std::log1p(t)));
}

double levyExponent(double alpha, double lambda) {
  if (!(alpha > 0.0) || alpha > 1.0 || !(lambda > 0.0))
    throw std::domain_error("levyExponent: need alpha in (0,1], lambda > 0");
  return std::pow(lambda, 1.0 + alpha) * std::exp(-lambda) /
         upperIncompleteGamma(1.0 + alpha, lambda);
}

double stableExponent(double alpha, double lambda) {
  if (!(alpha > 0.0) || alpha > 1.0 || !(lambda > 0.0))
    throw std::domain_error("stableExponent: need alpha in (0,1], lambda > 0");
  return std::pow(lambda, 1.0 + alpha) /
         (std::pow(2.0, alpha) * std::exp(std::lgamma(1.0 + alpha)));
}

double scaledLevyExponent(double alpha, double n, double lambda) {
  return 2.0 * std::pow(n, 1.0 + alpha) * levyExponent(alpha, lambda / (2.0 * n));
}

double besqAbsorptionCdf(double z, double delta, double t) {
  if (!(z > 0.0) || !(delta < 2.0) || !(t > 0.0))
    throw std::domain_error("besqAbsorptionCdf: need z > 0, delta < 2, t > 0");
  return regularizedGammaQ(0.5 * (2.0 - delta), z / (2.0 * t));
}

double besqAbsorptionTail(double z, double delta, double t) {
  if (!(z > 0.0) || !(delta < 2.0) || !(t > 0.0))
    throw std::domain_error("besqAbsorptionTail: need z > 0, delta < 2, t > 0");
  return regularizedGammaP(0.5 * (2.0 - delta), z / (2.0 * t));
}

double stableLevyTail(double alpha, double s, bool normalized) {
  if (!(alpha > 0.0) || alpha >= 1.0 || !(s > 0.0))
    throw std::domain_error("stableLevyTail: need alpha in (0,1), s > 0");
  const double tail = std::pow(s, -(1.0 + alpha)) /
                      (std::pow(2.0, 1.0 + alpha) * std::exp(std::lgamma(2.0 + alpha)));
  return normalized ? stableLevyConstant(alpha) * tail : tail;
}

double stableLevyConstant(double alpha) {
  if (!(alpha > 0.0) || alpha >= 1.0)
    throw std::domain_error("stableLevyConstant: need alpha in (0,1)");
  return 2.0 * alpha * (1.0 + alpha) / std::exp(std::lgamma(1.0 - alpha));
}

}  // namespace updown::analytics
