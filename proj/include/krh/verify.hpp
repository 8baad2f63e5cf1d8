#pragma once

#include "krh/kirkwood_rihaczek.hpp"
#include "krh/quadrature.hpp"

#include <map>
#include <string>
#include <vector>

namespace krh {

struct VerifyTolerances {
  double normalization = 1e-8;
  double marginal = 1e-6;
  double marginal_imag = 1e-8;
  double fourier = 1e-6;
  double closed_form = 1e-12;
  double extremum_location = 1e-3;
  double one_d = 1e-6;

  /// Applies "key=value" overrides, e.g. {"marginal": "1e-7"}. Unknown
  /// keys throw std::invalid_argument.
  void apply(const std::map<std::string, std::string>& overrides);
};

struct VerifyOptions {
  int n_max = 3;
  /// Marginal quadratures are the expensive part; capped separately.
  int marginal_n_max = 3;
  /// Fourier consistency runs for n ≤ min(n_max, this) and l ≤ 3.
  int fourier_n_max = 4;
  int extrema_resolution = 256;
  VerifyTolerances tolerances{};
};

/// Deterministic test points shared by the marginal checks and the
/// acceptance suite: three positions and three momenta per state, scaled
/// with n.
std::vector<SphericalPoint> marginal_position_points(const QuantumNumbers& qn);
std::vector<SphericalPoint> marginal_momentum_points(const QuantumNumbers& qn);

/// Five log-spaced momenta from 0.05/n to 4/n.
std::vector<double> fourier_momenta(int n);

/// The states whose extrema counts are compared with (n − l)², filtered to
/// n ≤ n_max: 1s … 3d with m = 0, and (10,8,8), (10,9,9).
std::vector<QuantumNumbers> extrema_law_states(int n_max);

VerificationReport verify_normalizations(const VerifyOptions& options);
VerificationReport verify_marginals(const VerifyOptions& options);
VerificationReport verify_fourier(const VerifyOptions& options);
VerificationReport verify_closed_forms(const VerifyOptions& options);
VerificationReport verify_extrema(const VerifyOptions& options);
VerificationReport verify_one_dimensional(const VerifyOptions& options);

/// π^{−1/4} e^{−q²/2} tabulated on [−half_width, half_width].
TabulatedWavefunction1D gaussian_ground_state(double half_width = 10.0, double spacing = 0.01);

/// u(r) = r R_nl(r) on [0, r_max] as a one-dimensional state.
TabulatedWavefunction1D hydrogen_radial_state(const QuantumNumbers& qn, double r_max, double spacing);

/// ∫ K(q, p) dp over the dual momentum grid (→ |Ψ(q)|² at nodes).
Complex kr_1d_marginal_over_p(const TabulatedWavefunction1D& psi, double q);
/// Σ_j K(q_j, p) Δq (→ |Ψ̃(p)|²/2π).
Complex kr_1d_marginal_over_q(const TabulatedWavefunction1D& psi, double p);
double wigner_1d_marginal_over_p(const TabulatedWavefunction1D& psi, double q);
/// Σ over every stride-th node of W(q_j, p) · stride·Δq.
double wigner_1d_marginal_over_q(const TabulatedWavefunction1D& psi, double p, int stride = 1);

/// Runs every group above (groups in parallel, merged in a fixed order).
/// Throws std::invalid_argument for n_max outside [1, 10].
VerificationReport run_verify(const VerifyOptions& options);

} // namespace krh
