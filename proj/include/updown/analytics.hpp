#pragma once

namespace updown::analytics {

/// Upper incomplete gamma Gamma(a, z) = int_z^inf e^-t t^(a-1) dt for the
/// working domain a in (0, 3], z > 0.  Relative error ~1e-14.
double upperIncompleteGamma(double a, double z);

/// Regularized gamma functions Q(a,x) = Gamma(a,x)/Gamma(a) and P = 1 - Q,
/// valid for any a > 0 (also used for chi-square tail probabilities).
double regularizedGammaQ(double a, double x);
double regularizedGammaP(double a, double x);

/// Laplace transform E_1 exp(-lambda * zeta) of the absorption time of the
/// single-table chain with up-rate m - alpha, down-rate m; alpha in (0, 1].
double zetaLaplace(double alpha, double lambda);

/// Same transform evaluated by backward recursion of the continued fraction
/// F_r = (r+1) / (2r + 2 - alpha + lambda - (r+1-alpha) F_{r+1}), truncated
/// at F_depth = 0.
double continuedFractionLaplace(double alpha, double lambda, int depth);

/// P(zeta <= t) = (t/(t+1))^m for the alpha = 0 (critical birth-death) chain
/// started from m.
double birthDeathHittingCdf(long m, double t);

/// Laplace exponent of the drift-minus-compound-Poisson level process:
/// phi(lambda) = lambda^(1+alpha) e^-lambda / Gamma(1+alpha, lambda).
double levyExponent(double alpha, double lambda);

/// Laplace exponent of the spectrally positive stable limit:
/// psi(lambda) = lambda^(1+alpha) / (2^alpha Gamma(1+alpha)).
double stableExponent(double alpha, double lambda);

/// Scaled exponent 2 n^(1+alpha) phi(lambda / 2n), which converges to
/// stableExponent(alpha, lambda) as n grows.
double scaledLevyExponent(double alpha, double n, double lambda);

/// Squared-Bessel absorption law: P(zeta <= t) for dimension delta < 2
/// started from z > 0, via zeta = z / 2G with G ~ Gamma((2-delta)/2, 1).
double besqAbsorptionCdf(double z, double delta, double t);

/// P(zeta > t), relative-accurate when z is tiny (small-argument series).
double besqAbsorptionTail(double z, double delta, double t);

/// Tail of the stable jump measure.  Unnormalized:
/// PiTilde(s, inf) = s^-(1+alpha) / (2^(1+alpha) Gamma(2+alpha)); the
/// normalized flag multiplies by c = 2 alpha (1+alpha) / Gamma(1-alpha).
double stableLevyTail(double alpha, double s, bool normalized);

/// The constant c relating the two jump-measure normalizations.
double stableLevyConstant(double alpha);

}  // namespace updown::analytics
