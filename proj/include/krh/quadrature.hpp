#pragma once

#include "krh/hydrogen.hpp"

#include <span>
#include <string>
#include <vector>

namespace krh {

enum class QuadratureMapping {
  Reference,        ///< Gauss–Legendre on [−1, 1]
  Finite,           ///< affine onto [a, b]
  SemiInfiniteRational, ///< x = s·t/(1−t), t ∈ [0, 1)
  SemiInfiniteTangent,  ///< x = s·tan(πt/2), t ∈ [0, 1)
  Composite,        ///< panels of Gauss–Legendre rules
};

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
  QuadratureMapping mapping = QuadratureMapping::Reference;

  std::size_t size() const { return nodes.size(); }

  template <class F> auto integrate(F&& f) const {
    decltype(f(0.0)) sum{};
    for (std::size_t i = 0; i < nodes.size(); ++i) sum += weights[i] * f(nodes[i]);
    return sum;
  }
};

/// Gauss–Legendre rule of the given order on [−1, 1], by Newton iteration
/// on P_order. Nodes ascending, symmetric about zero.
QuadratureRule gauss_legendre(int order);

QuadratureRule map_finite(const QuadratureRule& reference, double a, double b);

/// [0, ∞) via x = scale·t/(1−t).
QuadratureRule map_semi_infinite_rational(const QuadratureRule& reference, double scale);

/// [0, ∞) via x = scale·tan(πt/2).
QuadratureRule map_semi_infinite_tangent(const QuadratureRule& reference, double scale);

/// [a, b] split into equal panels, each carrying `order` Gauss–Legendre
/// nodes. Panel count is ceil((b−a)/max_width).
QuadratureRule composite_gauss_legendre(double a, double b, double max_width, int order);

/// Concatenation of two rules (e.g. a composite body plus a mapped tail).
QuadratureRule concatenate(const QuadratureRule& head, const QuadratureRule& tail);

// ---------------------------------------------------------------------------

struct CheckResult {
  std::string name;
  double target = 0.0;
  double computed = 0.0;
  double abs_error = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  /// A known discrepancy that is measured and reported but never fails a run.
  bool expected_divergence = false;
  std::string note;
};

class VerificationReport {
public:
  /// Appends a check; pass ⇔ |computed − target| ≤ tolerance.
  CheckResult& add(std::string name, double target, double computed, double tolerance, std::string note = {});

  /// Appends a check whose failure is anticipated. For these, `passed`
  /// records whether the divergence was actually observed, i.e.
  /// |computed − target| > threshold.
  CheckResult& add_divergence(std::string name, double target, double computed, double threshold,
                              std::string note = {});

  void append(const VerificationReport& other);

  std::span<const CheckResult> checks() const { return checks_; }
  /// Expected divergences never count as failures.
  bool all_passed() const;
  std::size_t failures() const;

private:
  std::vector<CheckResult> checks_;
};

enum class Representation { Position, Momentum };

/// ∫ R_nl² r² dr (position, rational map, order 96 by default) or
/// ∫ F_nl² p² dp (momentum, rational map, order 200 by default).
/// order ≤ 0 selects the default for the representation.
VerificationReport check_normalization(const QuantumNumbers& qn, NuclearCharge z, Representation which,
                                       int order = 0, double tolerance = 1e-8);

/// ∫ F² p² dp for the short-form 2s / 2p momentum functions. Reported as
/// an expected divergence from 1; the analytic values are 16 and 16/3.
VerificationReport check_short_form_normalization(int n, int l, int order = 200);

struct MarginalOrders {
  int panel_nodes = 20;  ///< Gauss–Legendre nodes per radial panel
  int azimuth = 0;       ///< uniform azimuth nodes; 0 → 2l + 8
  int polar = 0;         ///< Gauss–Legendre polar nodes; 0 → chosen from the largest phase r·p
  double tail_tolerance = 1e-12;
};

/// ∭ K d³p at a fixed position, K in MarginalExact convention; compared
/// against |ψ(x)|². A second entry carries the imaginary residue.
///
/// The momentum frame is rotated so its polar axis lies along x; the
/// azimuthal integral is then a trigonometric polynomial of degree l and
/// the plane-wave phase depends on the polar node alone.
VerificationReport check_marginal_momentum(const QuantumNumbers& qn, NuclearCharge z, const SphericalPoint& x,
                                           const MarginalOrders& orders = {}, double tolerance = 1e-6,
                                           double imag_tolerance = 1e-8);

/// ∭ K d³x at a fixed momentum, compared against |ψ̃(p)|².
VerificationReport check_marginal_position(const QuantumNumbers& qn, NuclearCharge z, const SphericalPoint& p,
                                           const MarginalOrders& orders = {}, double tolerance = 1e-6,
                                           double imag_tolerance = 1e-8);

/// Hankel transform of order l, G(p) = √(2/π) ∫ R_nl(r) j_l(pr) r² dr.
double hankel_transform_radial(const QuantumNumbers& qn, NuclearCharge z, double p, int panel_nodes = 20);

/// |G(p)| against |F_nl(p)| at each sample. Throws std::domain_error for
/// l > 3.
VerificationReport check_fourier_consistency(const QuantumNumbers& qn, NuclearCharge z,
                                             std::span<const double> p_samples, int panel_nodes = 20,
                                             double tolerance = 1e-6);

/// Largest |G(p) − F_short(p)| over the samples, reported as an expected
/// divergence (threshold 1e−2) for the short-form 2s / 2p functions.
VerificationReport check_fourier_short_form(int n, int l, std::span<const double> p_samples,
                                            double threshold = 1e-2);

} // namespace krh
