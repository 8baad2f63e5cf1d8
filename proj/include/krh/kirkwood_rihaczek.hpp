#pragma once

#include "krh/hydrogen.hpp"

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace krh {

/// Point of the six-dimensional phase space, spherical coordinates for
/// both position (r, θ, φ) and momentum (p, θ′, φ′). Atomic units.
struct PhasePoint {
  double r = 0.0;
  double theta = 0.0;
  double phi = 0.0;
  double p = 0.0;
  double theta_p = 0.0;
  double phi_p = 0.0;

  SphericalPoint position() const { return {r, theta, phi}; }
  SphericalPoint momentum() const { return {p, theta_p, phi_p}; }
};

/// MarginalExact integrates to |ψ(x)|² over momentum and to |ψ̃(p)|² over
/// position. PaperFigure is MarginalExact × (2π)^{−3/2}, the constant
/// used by the 1s/2s/2p closed forms.
enum class NormalizationConvention { MarginalExact, PaperFigure };

std::string_view to_string(NormalizationConvention c);
NormalizationConvention parse_convention(std::string_view s);

/// PaperFigure / MarginalExact.
double convention_factor(NormalizationConvention c);

/// Cosine of the angle between the position and momentum directions.
double cos_capital_theta(double theta, double phi, double theta_p, double phi_p);

/// Kirkwood–Rihaczek distribution of a hydrogen bound state:
///
///   K(x, p) = (2π)^{−3/2} ψ(x) e^{−i x·p} conj(ψ̃(p))
///
/// in the MarginalExact convention. Needs no integration.
Complex kr_hydrogen(const QuantumNumbers& qn, NuclearCharge z, const PhasePoint& point,
                    NormalizationConvention convention = NormalizationConvention::MarginalExact);

/// |K|², assembled from the two probability densities rather than from
/// kr_hydrogen. In PaperFigure convention this is
/// (2π)^{−6} |R Y|² |F Y|².
double kr_abs_squared(const QuantumNumbers& qn, NuclearCharge z, const PhasePoint& point,
                      NormalizationConvention convention = NormalizationConvention::MarginalExact);

/// Explicit 1s / 2s / 2p formulas with their literal prefactors and the
/// short (1+4p²)² momentum shapes. Only a shape reference: 1s agrees with
/// kr_hydrogen(PaperFigure) exactly, 2s/2p differ by a constant in r and
/// angles but by 1/(1+4p²) in p. Throws std::invalid_argument for any
/// state other than (1,0,0), (2,0,0), (2,1,0).
Complex kr_closed_form(const QuantumNumbers& qn, const PhasePoint& point);

/// Uniformly sampled one-dimensional wavefunction.
class TabulatedWavefunction1D {
public:
  /// Throws std::invalid_argument on fewer than two samples, mismatched
  /// sizes, non-increasing or non-uniform abscissas (1e−12 relative).
  TabulatedWavefunction1D(std::vector<double> q, std::vector<Complex> psi);

  /// Reads the comma-separated "q,re,im" text format; '#' lines and blank
  /// lines are skipped.
  static TabulatedWavefunction1D parse_csv(std::istream& in);
  static TabulatedWavefunction1D load_csv(const std::string& path);

  std::span<const double> abscissas() const { return q_; }
  std::span<const Complex> amplitudes() const { return psi_; }
  double spacing() const { return dq_; }
  double q_min() const { return q_.front(); }
  double q_max() const { return q_.back(); }
  std::size_t size() const { return q_.size(); }
  bool contains(double q) const;

  /// Linear interpolation; zero outside the tabulated support.
  Complex at(double q) const;

  /// Non-unitary transform Ψ̃(p) = Σ_j Ψ(q_j) e^{−i p q_j} Δq.
  Complex transform(double p) const;

  /// Σ_j |Ψ(q_j)|² Δq.
  double discrete_norm() const;

private:
  std::vector<double> q_;
  std::vector<Complex> psi_;
  double dq_ = 0.0;
};

/// Error for evaluating a tabulated state outside its support.
class OutOfDomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// K(q, p) = (2π)^{−1} Ψ(q) e^{−ipq} conj(Ψ̃(p)), ħ = 1.
Complex kr_1d(const TabulatedWavefunction1D& psi, double q, double p);

/// W(q, p) = (2π)^{−1} ∫ Ψ*(q+ξ/2) e^{ipξ} Ψ(q−ξ/2) dξ, trapezoidal in ξ
/// with step 2Δq (so q ± ξ/2 fall on nodes whenever q does). Throws if
/// the imaginary residue exceeds 1e−10 relative to the real scale.
double wigner_1d(const TabulatedWavefunction1D& psi, double q, double p);

/// The momentum grid dual to the tabulation: N points with spacing
/// 2π/(NΔq) centred on zero. Summing kr_1d over it reproduces |Ψ(q_j)|²
/// exactly at the nodes.
std::vector<double> kr_dual_momentum_grid(const TabulatedWavefunction1D& psi);

/// Wigner counterpart: step π/(MΔq), M = 2N, period π/Δq.
std::vector<double> wigner_dual_momentum_grid(const TabulatedWavefunction1D& psi);

} // namespace krh
