#pragma once

#include "krh/special_functions.hpp"

#include <string>

namespace krh {

/// Validated (n, l, m) triple of a hydrogen-like bound state.
class QuantumNumbers {
public:
  /// Throws std::invalid_argument unless 1 ≤ n, 0 ≤ l < n and |m| ≤ l.
  QuantumNumbers(int n, int l, int m = 0);

  int n() const { return n_; }
  int l() const { return l_; }
  int m() const { return m_; }

  /// Spectroscopic label, e.g. "2p(m=0)".
  std::string label() const;

  friend bool operator==(const QuantumNumbers&, const QuantumNumbers&) = default;

private:
  int n_;
  int l_;
  int m_;
};

class NuclearCharge {
public:
  NuclearCharge() = default;
  explicit NuclearCharge(double z);

  double value() const { return z_; }

private:
  double z_ = 1.0;
};

struct SphericalPoint {
  double radius = 0.0;
  double polar = 0.0;
  double azimuth = 0.0;

  AngularPoint direction() const { return {polar, azimuth}; }
};

/// Position-space radial function R_nl(r), unit normalized with weight r².
/// R_nl(0⁺) > 0 for every state, so R_10 = 2e^{−r} at z = 1.
double radial_position(const QuantumNumbers& qn, NuclearCharge z, double r);

/// Momentum-space radial function F_nl(p) (Gegenbauer form), unit
/// normalized with weight p². Charge enters through
/// F^z(p) = z^{−3/2} F(p/z).
double radial_momentum(const QuantumNumbers& qn, NuclearCharge z, double p);

/// ψ_nlm(x) = R_nl(r) Y_lm(θ, φ).
Complex psi_position(const QuantumNumbers& qn, NuclearCharge z, const SphericalPoint& x);

/// Momentum wavefunction, the unitary Fourier transform of psi_position:
/// ψ̃_nlm(p) = (−i)^l F_nl(p) Y_lm(θ′, φ′).
Complex psi_momentum(const QuantumNumbers& qn, NuclearCharge z, const SphericalPoint& p);

/// The explicit low-n momentum radial functions in their short
/// (1 + n²p²)² denominator form:
///
///   F_10 = √(2/π) · 4/(1+p²)²
///   F_20 = 32/√π · (4p²−1)/(1+4p²)²
///   F_21 = 128/√(3π) · p/(1+4p²)²
///
/// F_10 coincides with radial_momentum; F_20 and F_21 are missing one
/// power of (1+4p²) and are not normalized. Kept so verification can
/// measure the divergence. z = 1 only; throws for any other (n, l).
double short_form_momentum_radial(int n, int l, double p);

} // namespace krh
