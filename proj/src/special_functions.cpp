#include "krh/special_functions.hpp"

#include <array>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace krh {

namespace {

constexpr int kMaxExactFactorial = 170;

std::array<double, kMaxExactFactorial + 1> make_factorials() {
  std::array<double, kMaxExactFactorial + 1> f{};
  f[0] = 1.0;
  for (int i = 1; i <= kMaxExactFactorial; ++i) f[i] = f[i - 1] * i;
  return f;
}

const std::array<double, kMaxExactFactorial + 1>& factorials() {
  static const auto table = make_factorials();
  return table;
}

} // namespace

AngularPoint::AngularPoint(double polar, double azimuth) : polar_(polar) {
  if (!(polar >= 0.0 && polar <= kPi))
    throw std::domain_error("polar angle outside [0, pi]: " + std::to_string(polar));
  azimuth_ = std::fmod(azimuth, 2.0 * kPi);
  if (azimuth_ < 0.0) azimuth_ += 2.0 * kPi;
}

double log_factorial(int k) {
  if (k < 0) throw std::domain_error("log_factorial of negative argument");
  if (k <= kMaxExactFactorial) return std::log(factorials()[k]);
  return std::lgamma(k + 1.0);
}

double laguerre(int k, double alpha, double x) {
  if (k < 0) throw std::domain_error("laguerre degree must be non-negative");
  if (k == 0) return 1.0;
  double prev = 1.0;
  double cur = 1.0 + alpha - x;
  for (int j = 1; j < k; ++j) {
    const double next = ((2.0 * j + 1.0 + alpha - x) * cur - (j + alpha) * prev) / (j + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

double gegenbauer(int k, double alpha, double x) {
  if (k < 0) throw std::domain_error("gegenbauer degree must be non-negative");
  if (k == 0) return 1.0;
  double prev = 1.0;
  double cur = 2.0 * alpha * x;
  for (int j = 2; j <= k; ++j) {
    const double next = (2.0 * (j + alpha - 1.0) * x * cur - (j + 2.0 * alpha - 2.0) * prev) / j;
    prev = cur;
    cur = next;
  }
  return cur;
}

double normalized_legendre(int l, int m, double theta) {
  if (l < 0 || m < 0 || m > l)
    throw std::domain_error("normalized_legendre requires 0 <= m <= l");
  const double x = std::cos(theta);
  const double s2 = std::sin(theta) * std::sin(theta);

  // P̄_m^m = (−1)^m sqrt((2m+1)/(4π) · (2m−1)!!/(2m)!!) sin^m θ
  double pmm = 1.0;
  double odd = 1.0;
  for (int i = 1; i <= m; ++i) {
    pmm *= s2 * odd / (odd + 1.0);
    odd += 2.0;
  }
  pmm = std::sqrt((2.0 * m + 1.0) * pmm / (4.0 * kPi));
  if (m & 1) pmm = -pmm;
  if (l == m) return pmm;

  double pmmp1 = x * std::sqrt(2.0 * m + 3.0) * pmm;
  if (l == m + 1) return pmmp1;

  double oldfact = std::sqrt(2.0 * m + 3.0);
  double pll = 0.0;
  for (int ll = m + 2; ll <= l; ++ll) {
    const double fact = std::sqrt((4.0 * ll * ll - 1.0) / (double(ll) * ll - double(m) * m));
    pll = (x * pmmp1 - pmm / oldfact) * fact;
    oldfact = fact;
    pmm = pmmp1;
    pmmp1 = pll;
  }
  return pll;
}

Complex spherical_harmonic(int l, int m, const AngularPoint& point) {
  if (l < 0 || std::abs(m) > l)
    throw std::domain_error("spherical_harmonic requires l >= 0 and |m| <= l");
  const int am = std::abs(m);
  const double plm = normalized_legendre(l, am, point.polar());
  const Complex y = std::polar(plm, am * point.azimuth());
  if (m >= 0) return y;
  return (am & 1) ? -std::conj(y) : std::conj(y);
}

double spherical_bessel(int l, double x) {
  if (l < 0 || l > 3)
    throw std::domain_error("spherical_bessel supports 0 <= l <= 3, got " + std::to_string(l));
  if (x < 0.0) throw std::domain_error("spherical_bessel requires x >= 0");

  if (x < 1.0) {
    // j_l(x) = x^l/(2l+1)!! · Σ_k (−x²/2)^k / (k! (2l+3)(2l+5)…(2l+2k+1))
    double lead = 1.0;
    for (int i = 1; i <= l; ++i) lead *= x / (2.0 * i + 1.0);
    double term = 1.0;
    double sum = 1.0;
    const double h = -0.5 * x * x;
    for (int k = 1; k < 30; ++k) {
      term *= h / (k * (2.0 * l + 2.0 * k + 1.0));
      sum += term;
      if (std::abs(term) < 1e-18 * std::abs(sum)) break;
    }
    return lead * sum;
  }

  const double s = std::sin(x);
  const double c = std::cos(x);
  switch (l) {
  case 0:
    return s / x;
  case 1:
    return s / (x * x) - c / x;
  case 2:
    return (3.0 / (x * x) - 1.0) * s / x - 3.0 * c / (x * x);
  default:
    return (15.0 / (x * x * x) - 6.0 / x) * s / x - (15.0 / (x * x) - 1.0) * c / x;
  }
}

} // namespace krh
