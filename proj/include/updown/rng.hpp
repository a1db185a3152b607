#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace updown {

inline std::uint64_t splitmix64_next(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// Seeded random source with independent streams: identical (seed, stream)
/// pairs reproduce the exact same draw sequence, distinct streams are
/// decorrelated.  Engine is xoshiro256++ seeded through splitmix64.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed, std::uint64_t stream = 0)
      : seed_(seed), stream_(stream) {
    std::uint64_t x = seed ^ (stream * 0x9E3779B97F4A7C15ULL + 0x632BE59BD9B4E019ULL);
    for (auto& word : state_) word = splitmix64_next(x);
    if ((state_[0] | state_[1] | state_[2] | state_[3]) == 0) state_[0] = 1;
  }

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream() const { return stream_; }

  std::uint64_t nextU64() {
    const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  /// Uniform on [0,1), 53 random bits.
  double uniform01() { return static_cast<double>(nextU64() >> 11) * 0x1.0p-53; }

  /// Uniform on (0,1], safe under log().
  double uniformPos() { return static_cast<double>((nextU64() >> 11) + 1) * 0x1.0p-53; }

  bool bernoulli(double p) { return uniform01() < p; }

  /// Uniform integer in {0, ..., n-1}.
  std::uint64_t uniformBelow(std::uint64_t n) {
    // Lemire's multiply-shift with rejection.
    std::uint64_t x = nextU64();
    __uint128_t m = static_cast<__uint128_t>(x) * n;
    auto lo = static_cast<std::uint64_t>(m);
    if (lo < n) {
      const std::uint64_t threshold = (0 - n) % n;
      while (lo < threshold) {
        x = nextU64();
        m = static_cast<__uint128_t>(x) * n;
        lo = static_cast<std::uint64_t>(m);
      }
    }
    return static_cast<std::uint64_t>(m >> 64);
  }

  double exponential();          // mean 1
  double exponential(double rate) { return exponential() / rate; }
  double normal();               // standard normal
  double normal(double mean, double sd) { return mean + sd * normal(); }
  double gammaVariate(double shape);                 // unit scale
  std::uint64_t poisson(double mean);
  std::uint64_t binomial(std::uint64_t n, double p);
  /// Failures before the r-th success, success probability q (r real > 0).
  std::uint64_t negativeBinomial(double r, double q);

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
  double exponentialOverflow(std::uint32_t layer, double x);
  double normalOverflow(std::uint32_t layer, double x, std::uint64_t raw);
  std::uint64_t poissonSmall(double mean);
  std::uint64_t poissonPtrd(double mean);

  std::uint64_t seed_;
  std::uint64_t stream_;
  std::array<std::uint64_t, 4> state_{};
};

namespace detail {

// Ziggurat tables for the standard exponential (256 layers) and the standard
// normal (128 layers), Marsaglia & Tsang layout adapted to 64-bit draws.
struct ExpZigTables {
  static constexpr int kLayers = 256;
  static constexpr double kTail = 7.69711747013104972;
  static constexpr double kArea = 3.9496598225815571993e-3;
  std::array<std::uint64_t, kLayers> k;
  std::array<double, kLayers> w;
  std::array<double, kLayers> f;
  ExpZigTables() {
    constexpr double m = 0x1.0p53;
    double d = kTail;
    double t = d;
    const double q = kArea / std::exp(-d);
    k[0] = static_cast<std::uint64_t>((d / q) * m);
    k[1] = 0;
    w[0] = q / m;
    w[kLayers - 1] = d / m;
    f[0] = 1.0;
    f[kLayers - 1] = std::exp(-d);
    for (int i = kLayers - 2; i >= 1; --i) {
      d = -std::log(kArea / d + std::exp(-d));
      k[i + 1] = static_cast<std::uint64_t>((d / t) * m);
      t = d;
      f[i] = std::exp(-d);
      w[i] = d / m;
    }
  }
};

struct NormalZigTables {
  static constexpr int kLayers = 128;
  static constexpr double kTail = 3.442619855899;
  static constexpr double kArea = 9.91256303526217e-3;
  std::array<std::uint64_t, kLayers> k;
  std::array<double, kLayers> w;
  std::array<double, kLayers> f;
  NormalZigTables() {
    constexpr double m = 0x1.0p52;  // 52 magnitude bits, 1 sign bit
    double d = kTail;
    double t = d;
    const double q = kArea / std::exp(-0.5 * d * d);
    k[0] = static_cast<std::uint64_t>((d / q) * m);
    k[1] = 0;
    w[0] = q / m;
    w[kLayers - 1] = d / m;
    f[0] = 1.0;
    f[kLayers - 1] = std::exp(-0.5 * d * d);
    for (int i = kLayers - 2; i >= 1; --i) {
      d = std::sqrt(-2.0 * std::log(kArea / d + std::exp(-0.5 * d * d)));
      k[i + 1] = static_cast<std::uint64_t>((d / t) * m);
      t = d;
      f[i] = std::exp(-0.5 * d * d);
      w[i] = d / m;
    }
  }
};

inline const ExpZigTables& expZig() {
  static const ExpZigTables tables;
  return tables;
}

inline const NormalZigTables& normalZig() {
  static const NormalZigTables tables;
  return tables;
}

}  // namespace detail

inline double RandomSource::exponential() {
  const auto& z = detail::expZig();
  for (;;) {
    const std::uint64_t raw = nextU64();
    const auto layer = static_cast<std::uint32_t>(raw & 255u);
    const std::uint64_t u = raw >> 11;
    const double x = static_cast<double>(u) * z.w[layer];
    if (u < z.k[layer]) return x;
    const double r = exponentialOverflow(layer, x);
    if (r >= 0.0) return r;
  }
}

inline double RandomSource::exponentialOverflow(std::uint32_t layer, double x) {
  const auto& z = detail::expZig();
  if (layer == 0) return detail::ExpZigTables::kTail - std::log(uniformPos());
  if (z.f[layer] + uniform01() * (z.f[layer - 1] - z.f[layer]) < std::exp(-x)) return x;
  return -1.0;  // retry
}

inline double RandomSource::normal() {
  const auto& z = detail::normalZig();
  for (;;) {
    const std::uint64_t raw = nextU64();
    const auto layer = static_cast<std::uint32_t>(raw & 127u);
    const std::uint64_t u = (raw >> 12);  // 52 bits
    const double mag = static_cast<double>(u) * z.w[layer];
    const bool negative = (raw >> 8) & 1u;
    const double x = negative ? -mag : mag;
    if (u < z.k[layer]) return x;
    const double r = normalOverflow(layer, x, raw);
    if (!std::isnan(r)) return r;
  }
}

inline double RandomSource::normalOverflow(std::uint32_t layer, double x, std::uint64_t) {
  const auto& z = detail::normalZig();
  if (layer == 0) {
    // Marsaglia tail method beyond kTail.
    const double r = detail::NormalZigTables::kTail;
    for (;;) {
      const double xt = -std::log(uniformPos()) / r;
      const double yt = -std::log(uniformPos());
      if (yt + yt > xt * xt) return x < 0 ? -(r + xt) : (r + xt);
    }
  }
  const double ax = std::fabs(x);
  if (z.f[layer] + uniform01() * (z.f[layer - 1] - z.f[layer]) < std::exp(-0.5 * ax * ax))
    return x;
  return std::nan("");  // retry
}

inline double RandomSource::gammaVariate(double shape) {
  if (!(shape > 0.0)) throw std::invalid_argument("gammaVariate: shape must be > 0");
  if (shape < 1.0) {
    // Boost by one and rescale (Marsaglia & Tsang).
    const double u = uniformPos();
    return gammaVariate(shape + 1.0) * std::pow(u, 1.0 / shape);
  }
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x, v;
    do {
      x = normal();
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = uniformPos();
    const double x2 = x * x;
    if (u < 1.0 - 0.0331 * x2 * x2) return d * v;
    if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) return d * v;
  }
}

inline std::uint64_t RandomSource::poissonSmall(double mean) {
  // Multiplication method (only used for small means).
  const double threshold = std::exp(-mean);
  std::uint64_t n = 0;
  double prod = uniform01();
  while (prod > threshold) {
    ++n;
    prod *= uniform01();
  }
  return n;
}

inline std::uint64_t RandomSource::poissonPtrd(double mean) {
  // Hoermann's transformed rejection (PTRD), exact for mean >= 10.
  const double smu = std::sqrt(mean);
  const double b = 0.931 + 2.53 * smu;
  const double a = -0.059 + 0.02483 * b;
  const double inv_alpha = 1.1239 + 1.1328 / (b - 3.4);
  const double vr = 0.9277 - 3.6224 / (b - 2.0);
  const double log_mu = std::log(mean);
  for (;;) {
    double v = uniform01();
    if (v <= 0.86 * vr) {
      const double u = v / vr - 0.43;
      return static_cast<std::uint64_t>(
          std::floor((2.0 * a / (0.5 - std::fabs(u)) + b) * u + mean + 0.445));
    }
    double u;
    if (v >= vr) {
      u = uniform01() - 0.5;
    } else {
      u = v / vr - 0.93;
      u = (u < 0 ? -0.5 : 0.5) - u;
      v = uniform01() * vr;
    }
    const double us = 0.5 - std::fabs(u);
    if (us < 0.013 && v > us) continue;
    const double kf = std::floor((2.0 * a / us + b) * u + mean + 0.445);
    if (kf < 0) continue;
    v = v * inv_alpha / (a / (us * us) + b);
    if (std::log(v) <= kf * log_mu - mean - std::lgamma(kf + 1.0)) {
      return static_cast<std::uint64_t>(kf);
    }
  }
}

inline std::uint64_t RandomSource::poisson(double mean) {
  if (!(mean >= 0.0)) throw std::invalid_argument("poisson: mean must be >= 0");
  if (mean == 0.0) return 0;
  if (mean < 10.0) return poissonSmall(mean);
  return poissonPtrd(mean);
}

inline std::uint64_t RandomSource::binomial(std::uint64_t n, double p) {
  if (n == 0 || p <= 0.0) return 0;
  if (p >= 1.0) return n;
  if (p > 0.5) return n - binomial(n, 1.0 - p);
  const double expected = static_cast<double>(n) * p;
  if (expected < 12.0) {
    // Geometric skips between successes.
    const double logq = std::log1p(-p);
    std::uint64_t count = 0;
    double position = 0;
    for (;;) {
      position += std::floor(std::log(uniformPos()) / logq) + 1.0;
      if (position > static_cast<double>(n)) return count;
      ++count;
    }
  }
  std::uint64_t count = 0;
  for (std::uint64_t i = 0; i < n; ++i) count += bernoulli(p);
  return count;
}

inline std::uint64_t RandomSource::negativeBinomial(double r, double q) {
  if (!(r > 0.0) || !(q > 0.0) || q > 1.0)
    throw std::invalid_argument("negativeBinomial: need r > 0, q in (0,1]");
  if (q == 1.0) return 0;
  // Gamma-Poisson mixture: failures ~ Poisson(Gamma(r) * (1-q)/q).
  const double lambda = gammaVariate(r) * (1.0 - q) / q;
  return poisson(lambda);
}

}  // namespace updown
