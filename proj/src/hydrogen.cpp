#include "krh/hydrogen.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace krh {

namespace {

constexpr char kOrbitalLetters[] = "spdfghiklmnoqrtuv";

// (−i)^l
Complex minus_i_pow(int l) {
  switch (l & 3) {
  case 0:
    return {1.0, 0.0};
  case 1:
    return {0.0, -1.0};
  case 2:
    return {-1.0, 0.0};
  default:
    return {0.0, 1.0};
  }
}

} // namespace

QuantumNumbers::QuantumNumbers(int n, int l, int m) : n_(n), l_(l), m_(m) {
  if (n < 1) throw std::invalid_argument("principal quantum number must be >= 1");
  if (l < 0 || l >= n) throw std::invalid_argument("orbital quantum number must satisfy 0 <= l < n");
  if (std::abs(m) > l) throw std::invalid_argument("magnetic quantum number must satisfy |m| <= l");
}

std::string QuantumNumbers::label() const {
  std::string s = std::to_string(n_);
  if (l_ < static_cast<int>(sizeof(kOrbitalLetters) - 1))
    s += kOrbitalLetters[l_];
  else
    s += "(l=" + std::to_string(l_) + ")";
  return s + "(m=" + std::to_string(m_) + ")";
}

NuclearCharge::NuclearCharge(double z) : z_(z) {
  if (!(z > 0.0)) throw std::invalid_argument("nuclear charge must be positive");
}

double radial_position(const QuantumNumbers& qn, NuclearCharge z, double r) {
  if (r < 0.0) throw std::domain_error("radial_position requires r >= 0");
  const int n = qn.n();
  const int l = qn.l();
  const double zn = z.value() / n;
  const double rho = 2.0 * zn * r;
  const double log_norm =
      0.5 * (3.0 * std::log(2.0 * zn) + log_factorial(n - l - 1) - std::log(2.0 * n) - log_factorial(n + l));
  return std::exp(log_norm - 0.5 * rho) * std::pow(rho, l) * laguerre(n - l - 1, 2.0 * l + 1.0, rho);
}

double radial_momentum(const QuantumNumbers& qn, NuclearCharge z, double p) {
  if (p < 0.0) throw std::domain_error("radial_momentum requires p >= 0");
  const int n = qn.n();
  const int l = qn.l();
  const double q = p / z.value();
  const double np2 = n * n * q * q;
  const double log_norm = 0.5 * (std::log(2.0 / kPi) + log_factorial(n - l - 1) - log_factorial(n + l)) +
                          2.0 * std::log(double(n)) + 2.0 * (l + 1) * std::log(2.0) + log_factorial(l);
  const double shape = std::pow(n * q, l) / std::pow(np2 + 1.0, l + 2);
  const double g = gegenbauer(n - l - 1, l + 1.0, (np2 - 1.0) / (np2 + 1.0));
  return std::pow(z.value(), -1.5) * std::exp(log_norm) * shape * g;
}

Complex psi_position(const QuantumNumbers& qn, NuclearCharge z, const SphericalPoint& x) {
  return radial_position(qn, z, x.radius) * spherical_harmonic(qn.l(), qn.m(), x.direction());
}

Complex psi_momentum(const QuantumNumbers& qn, NuclearCharge z, const SphericalPoint& p) {
  return minus_i_pow(qn.l()) * radial_momentum(qn, z, p.radius) *
         spherical_harmonic(qn.l(), qn.m(), p.direction());
}

double short_form_momentum_radial(int n, int l, double p) {
  if (p < 0.0) throw std::domain_error("short_form_momentum_radial requires p >= 0");
  const double q2 = 4.0 * p * p;
  if (n == 1 && l == 0) return std::sqrt(2.0 / kPi) * 4.0 / ((1.0 + p * p) * (1.0 + p * p));
  if (n == 2 && l == 0) return 32.0 / std::sqrt(kPi) * (q2 - 1.0) / ((1.0 + q2) * (1.0 + q2));
  if (n == 2 && l == 1) return 128.0 / std::sqrt(3.0 * kPi) * p / ((1.0 + q2) * (1.0 + q2));
  throw std::invalid_argument("short-form momentum radial function exists only for 1s, 2s, 2p");
}

} // namespace krh
