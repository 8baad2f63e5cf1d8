#pragma once

#include <complex>

namespace krh {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.141592653589793238462643383279502884;

/// Direction on the unit sphere. The azimuth is reduced modulo 2π on
/// construction; the polar angle must already lie in [0, π].
class AngularPoint {
public:
  AngularPoint(double polar, double azimuth);

  double polar() const { return polar_; }
  double azimuth() const { return azimuth_; }

private:
  double polar_;
  double azimuth_;
};

/// ln(k!). Exact product up to 170 (so the result carries a single
/// rounding), lgamma beyond.
double log_factorial(int k);

/// Associated Laguerre polynomial L_k^α(x), modern convention
/// (L_k^α(0) = binom(k+α, k)).
double laguerre(int k, double alpha, double x);

/// Gegenbauer (ultraspherical) polynomial C_k^α(x).
double gegenbauer(int k, double alpha, double x);

/// Fully normalized associated Legendre function including the
/// Condon–Shortley phase, i.e. Y_lm(θ, 0) for m ≥ 0:
///
///   sqrt((2l+1)/(4π) · (l−m)!/(l+m)!) · P_l^m(cos θ)
///
/// Seeded at P_m^m and recurred upward in l, so no factorials are formed.
double normalized_legendre(int l, int m, double theta);

/// Complex spherical harmonic Y_lm with the Condon–Shortley phase.
/// Negative m uses Y_{l,−m} = (−1)^m conj(Y_lm).
Complex spherical_harmonic(int l, int m, const AngularPoint& point);

/// Spherical Bessel function of the first kind, j_l(x) for 0 ≤ l ≤ 3.
/// Throws std::domain_error for l outside that range or x < 0.
double spherical_bessel(int l, double x);

} // namespace krh
