#pragma once

#include "krh/kirkwood_rihaczek.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace krh {

enum class SliceQuantity { Re, Im, Abs, Abs2, Complex };

std::string_view to_string(SliceQuantity q);
SliceQuantity parse_quantity(std::string_view s);

struct SliceAngles {
  double theta = kPi / 2;
  double phi = 0.0;
  double theta_p = kPi / 2;
  double phi_p = 0.0;
};

/// Two-dimensional (r, p) cross-section of K at fixed angles.
struct SliceSpec {
  QuantumNumbers qn{1, 0, 0};
  NuclearCharge z{};
  SliceAngles angles{};
  double r_min = 0.0;
  double r_max = 5.0;
  double p_min = 0.0;
  double p_max = 4.0;
  int n_r = 256;
  int n_p = 256;
  SliceQuantity quantity = SliceQuantity::Abs;
  NormalizationConvention convention = NormalizationConvention::MarginalExact;
  /// Multiplies every value by (2π)³.
  bool paper_scale = false;

  /// Default ranges r ∈ [0, 5n²/z], p ∈ [0, 4z/n] with 256×256 nodes.
  static SliceSpec defaults_for(const QuantumNumbers& qn, NuclearCharge z = {});

  /// Throws std::invalid_argument on empty or inverted ranges.
  void validate() const;

  double r_at(int i) const { return r_min + (r_max - r_min) * i / (n_r - 1); }
  double p_at(int j) const { return p_min + (p_max - p_min) * j / (n_p - 1); }
  double display_factor() const;
  PhasePoint point(double r, double p) const;
};

struct SliceResult {
  SliceSpec spec;
  /// Row-major, index i·n_p + j for (r_i, p_j). Imaginary parts are only
  /// populated for SliceQuantity::Complex.
  std::vector<double> values;
  std::vector<double> imag;
  std::vector<std::string> warnings;

  double value(int i, int j) const { return values[static_cast<std::size_t>(i) * spec.n_p + j]; }
  std::string state_label() const { return spec.qn.label(); }
};

/// Magnitude of the angular factor Y_lm(θ, φ)·Y_lm(θ′, φ′) for the slice.
double slice_angular_weight(const SliceSpec& spec);

/// Evaluates kr_hydrogen at every grid node, rows in parallel. An
/// identically zero slice (|Y_lm| < 1e−12 at the chosen angles) is not an
/// error; it is recorded in `warnings`.
SliceResult sample_slice(const SliceSpec& spec);

enum class ExtremumKind { Maximum, Minimum };

struct ExtremumRecord {
  double r = 0.0;
  double p = 0.0;
  double value = 0.0;
  ExtremumKind kind = ExtremumKind::Maximum;
  bool boundary = false;
  int grid_i = 0;
  int grid_j = 0;
};

struct ExtremaOptions {
  /// After the grid-level parabolic fit, keep re-fitting parabolas with
  /// the analytic |K| at shrinking steps until the step is below
  /// refine_step_fraction cell widths.
  bool analytic_refine = false;
  double refine_step_fraction = 1e-7;
};

/// Local maxima of |K| on the slice: strict 8-neighbour maxima in the
/// interior, plus maxima on the r = r_min and p = p_min edges compared with
/// every neighbour inside the grid. The far edges are never reported.
/// Each location is refined by one parabolic fit per axis. Sorted by
/// decreasing value. Throws std::invalid_argument unless quantity is Abs.
std::vector<ExtremumRecord> find_extrema(const SliceResult& slice, const ExtremaOptions& options = {});

struct ExtremaLawEntry {
  QuantumNumbers qn;
  SliceAngles angles;
  int expected = 0;
  int found = 0;
  std::vector<ExtremumRecord> maxima;
};

/// Angles with a non-vanishing angular factor: the equator when Y_lm is
/// nonzero there, else the pole, else the polar angle maximizing |Y_lm|.
/// Position and momentum angles are chosen equal.
SliceAngles suggested_angles(const QuantumNumbers& qn);

/// Counts |K| maxima on the default slice of each state and compares them
/// with (n − l)².
std::vector<ExtremaLawEntry> count_extrema_law(const std::vector<QuantumNumbers>& states, int resolution = 256);

} // namespace krh
