#include "krh/quadrature.hpp"

#include "krh/kirkwood_rihaczek.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

namespace krh {

QuadratureRule gauss_legendre(int order) {
  if (order < 1) throw std::invalid_argument("gauss_legendre order must be >= 1");
  QuadratureRule rule;
  rule.nodes.resize(order);
  rule.weights.resize(order);
  const int half = (order + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double x = std::cos(kPi * (i + 0.75) / (order + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = 0.0;
      for (int j = 1; j <= order; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p2) / j;
      }
      dp = order * (x * p0 - p1) / (x * x - 1.0);
      const double dx = p0 / dp;
      x -= dx;
      if (std::abs(dx) <= 1e-16) break;
    }
    // Recompute the derivative at the converged root for the weight.
    double p0 = 1.0;
    double p1 = 0.0;
    for (int j = 1; j <= order; ++j) {
      const double p2 = p1;
      p1 = p0;
      p0 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p2) / j;
    }
    dp = order * (x * p0 - p1) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[order - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[order - 1 - i] = w;
  }
  if (order & 1) rule.nodes[order / 2] = 0.0;
  return rule;
}

QuadratureRule map_finite(const QuadratureRule& reference, double a, double b) {
  QuadratureRule out;
  out.mapping = QuadratureMapping::Finite;
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (b + a);
  out.nodes.reserve(reference.size());
  out.weights.reserve(reference.size());
  for (std::size_t i = 0; i < reference.size(); ++i) {
    out.nodes.push_back(mid + half * reference.nodes[i]);
    out.weights.push_back(half * reference.weights[i]);
  }
  return out;
}

QuadratureRule map_semi_infinite_rational(const QuadratureRule& reference, double scale) {
  QuadratureRule out;
  out.mapping = QuadratureMapping::SemiInfiniteRational;
  for (std::size_t i = 0; i < reference.size(); ++i) {
    const double t = 0.5 * (reference.nodes[i] + 1.0);
    const double w = 0.5 * reference.weights[i];
    const double one_minus = 1.0 - t;
    out.nodes.push_back(scale * t / one_minus);
    out.weights.push_back(w * scale / (one_minus * one_minus));
  }
  return out;
}

QuadratureRule map_semi_infinite_tangent(const QuadratureRule& reference, double scale) {
  QuadratureRule out;
  out.mapping = QuadratureMapping::SemiInfiniteTangent;
  for (std::size_t i = 0; i < reference.size(); ++i) {
    const double t = 0.5 * (reference.nodes[i] + 1.0);
    const double w = 0.5 * reference.weights[i];
    const double c = std::cos(0.5 * kPi * t);
    out.nodes.push_back(scale * std::tan(0.5 * kPi * t));
    out.weights.push_back(w * scale * 0.5 * kPi / (c * c));
  }
  return out;
}

QuadratureRule composite_gauss_legendre(double a, double b, double max_width, int order) {
  if (!(b > a)) throw std::invalid_argument("composite rule needs b > a");
  if (!(max_width > 0.0)) throw std::invalid_argument("composite rule needs a positive panel width");
  const auto panels = static_cast<std::size_t>(std::ceil((b - a) / max_width - 1e-12));
  const QuadratureRule ref = gauss_legendre(order);
  const double width = (b - a) / double(panels);
  QuadratureRule out;
  out.mapping = QuadratureMapping::Composite;
  out.nodes.reserve(panels * ref.size());
  out.weights.reserve(panels * ref.size());
  for (std::size_t k = 0; k < panels; ++k) {
    const double lo = a + width * double(k);
    const double mid = lo + 0.5 * width;
    for (std::size_t i = 0; i < ref.size(); ++i) {
      out.nodes.push_back(mid + 0.5 * width * ref.nodes[i]);
      out.weights.push_back(0.5 * width * ref.weights[i]);
    }
  }
  return out;
}

QuadratureRule concatenate(const QuadratureRule& head, const QuadratureRule& tail) {
  QuadratureRule out = head;
  out.mapping = QuadratureMapping::Composite;
  out.nodes.insert(out.nodes.end(), tail.nodes.begin(), tail.nodes.end());
  out.weights.insert(out.weights.end(), tail.weights.begin(), tail.weights.end());
  return out;
}

// ---------------------------------------------------------------------------

CheckResult& VerificationReport::add(std::string name, double target, double computed, double tolerance,
                                     std::string note) {
  CheckResult c;
  c.name = std::move(name);
  c.target = target;
  c.computed = computed;
  c.abs_error = std::abs(computed - target);
  c.tolerance = tolerance;
  c.passed = c.abs_error <= tolerance;
  c.note = std::move(note);
  checks_.push_back(std::move(c));
  return checks_.back();
}

CheckResult& VerificationReport::add_divergence(std::string name, double target, double computed,
                                                double threshold, std::string note) {
  CheckResult c;
  c.name = std::move(name);
  c.target = target;
  c.computed = computed;
  c.abs_error = std::abs(computed - target);
  c.tolerance = threshold;
  c.passed = c.abs_error > threshold;
  c.expected_divergence = true;
  c.note = std::move(note);
  checks_.push_back(std::move(c));
  return checks_.back();
}

void VerificationReport::append(const VerificationReport& other) {
  checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end());
}

bool VerificationReport::all_passed() const { return failures() == 0; }

std::size_t VerificationReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(checks_.begin(), checks_.end(),
                    [](const CheckResult& c) { return !c.passed && !c.expected_divergence; }));
}

// ---------------------------------------------------------------------------

namespace {

std::string state_tag(const QuantumNumbers& qn, NuclearCharge z) {
  std::string s = qn.label();
  if (z.value() != 1.0) s += "[z=" + std::to_string(z.value()) + "]";
  return s;
}

// Position-space radial cutoff beyond which R_nl² r² is below ~1e−25.
double position_cutoff(const QuantumNumbers& qn, NuclearCharge z) {
  return qn.n() / z.value() * (2.0 * qn.n() + 60.0);
}

using Vec3 = std::array<double, 3>;

struct Frame {
  Vec3 e1, e2, e3;
};

Frame frame_along(const SphericalPoint& axis) {
  Frame f;
  const double st = std::sin(axis.polar);
  f.e3 = {st * std::cos(axis.azimuth), st * std::sin(axis.azimuth), std::cos(axis.polar)};
  Vec3 a = std::abs(f.e3[0]) < 0.9 ? Vec3{1.0, 0.0, 0.0} : Vec3{0.0, 1.0, 0.0};
  const double d = a[0] * f.e3[0] + a[1] * f.e3[1] + a[2] * f.e3[2];
  for (int i = 0; i < 3; ++i) a[i] -= d * f.e3[i];
  const double norm = std::sqrt(a[0] * a[0] + a[1] * a[1] + a[2] * a[2]);
  for (int i = 0; i < 3; ++i) f.e1[i] = a[i] / norm;
  f.e2 = {f.e3[1] * f.e1[2] - f.e3[2] * f.e1[1], f.e3[2] * f.e1[0] - f.e3[0] * f.e1[2],
          f.e3[0] * f.e1[1] - f.e3[1] * f.e1[0]};
  return f;
}

AngularPoint direction_in_frame(const Frame& f, double u, double beta) {
  const double s = std::sqrt(std::max(0.0, 1.0 - u * u));
  const double cb = std::cos(beta);
  const double sb = std::sin(beta);
  Vec3 v;
  for (int i = 0; i < 3; ++i) v[i] = s * (cb * f.e1[i] + sb * f.e2[i]) + u * f.e3[i];
  const double polar = std::acos(std::clamp(v[2], -1.0, 1.0));
  return {polar, std::atan2(v[1], v[0])};
}

// Azimuth-integrated angular factor at each polar node of the rotated frame:
// B(u) = Σ_β w_β Y_lm(dir(u, β)), optionally conjugated.
std::vector<Complex> azimuthal_profile(const QuantumNumbers& qn, const Frame& f, const QuadratureRule& polar,
                                       int azimuth_nodes, bool conjugate) {
  std::vector<Complex> b(polar.size());
  const double wb = 2.0 * kPi / azimuth_nodes;
  for (std::size_t i = 0; i < polar.size(); ++i) {
    Complex sum{};
    for (int k = 0; k < azimuth_nodes; ++k) {
      const Complex y = spherical_harmonic(qn.l(), qn.m(), direction_in_frame(f, polar.nodes[i], wb * k));
      sum += conjugate ? std::conj(y) : y;
    }
    b[i] = wb * sum;
  }
  return b;
}

// Σ_k w_k g(s_k) Σ_i w_i e^{−i ω s_k u_i} B(u_i) with g(s) = s² · radial(s).
template <class Radial>
Complex radial_angular_sum(const QuadratureRule& radial_rule, const QuadratureRule& polar,
                           const std::vector<Complex>& profile, double omega, Radial&& radial) {
  Complex total{};
  for (std::size_t k = 0; k < radial_rule.size(); ++k) {
    const double s = radial_rule.nodes[k];
    const double g = s * s * radial(s);
    if (g == 0.0) continue;
    Complex inner{};
    for (std::size_t i = 0; i < polar.size(); ++i)
      inner += polar.weights[i] * std::polar(1.0, -omega * s * polar.nodes[i]) * profile[i];
    total += radial_rule.weights[k] * g * inner;
  }
  return total;
}

int polar_order_for(double max_phase, int l, int requested) {
  if (requested > 0) return requested;
  return static_cast<int>(std::ceil(0.6 * max_phase)) + l + 40;
}

Complex i_pow(int l) {
  switch (l & 3) {
  case 0:
    return {1.0, 0.0};
  case 1:
    return {0.0, 1.0};
  case 2:
    return {-1.0, 0.0};
  default:
    return {0.0, -1.0};
  }
}

void add_marginal_entries(VerificationReport& report, const std::string& name, double target, Complex value,
                          double tolerance, double imag_tolerance, const std::string& note) {
  report.add(name, target, value.real(), tolerance, note);
  report.add(name + " imaginary residue", 0.0, value.imag(), imag_tolerance, note);
}

} // namespace

VerificationReport check_normalization(const QuantumNumbers& qn, NuclearCharge z, Representation which, int order,
                                       double tolerance) {
  VerificationReport report;
  const double n = qn.n();
  if (which == Representation::Position) {
    const auto rule = map_semi_infinite_rational(gauss_legendre(order > 0 ? order : 96), n * n / z.value());
    const double value = rule.integrate([&](double r) {
      const double R = radial_position(qn, z, r);
      return R * R * r * r;
    });
    report.add("normalization position " + state_tag(qn, z), 1.0, value, tolerance);
  } else {
    const auto rule = map_semi_infinite_rational(gauss_legendre(order > 0 ? order : 200), z.value() / n);
    const double value = rule.integrate([&](double p) {
      const double F = radial_momentum(qn, z, p);
      return F * F * p * p;
    });
    report.add("normalization momentum " + state_tag(qn, z), 1.0, value, tolerance);
  }
  return report;
}

VerificationReport check_short_form_normalization(int n, int l, int order) {
  VerificationReport report;
  const auto rule = map_semi_infinite_rational(gauss_legendre(order), 1.0 / n);
  const double value = rule.integrate([&](double p) {
    const double F = short_form_momentum_radial(n, l, p);
    return F * F * p * p;
  });
  report.add_divergence("normalization short-form momentum " + QuantumNumbers(n, l, 0).label(), 1.0, value, 1e-2,
                        "short (1+4p^2)^2 denominator is not normalized");
  return report;
}

VerificationReport check_marginal_momentum(const QuantumNumbers& qn, NuclearCharge z, const SphericalPoint& x,
                                           const MarginalOrders& orders, double tolerance,
                                           double imag_tolerance) {
  const double zv = z.value();
  const double scale = zv / qn.n();
  const double r = x.radius;
  const Complex psi = psi_position(qn, z, x);
  const double target = std::norm(psi);
  const double prefactor = std::pow(2.0 * kPi, -1.5);

  // Truncate the oscillatory momentum integral where the remaining tail,
  // ≈ 4π Y_max P |F(P)| / r² after the angular integration, is negligible.
  const double body_end = 40.0 * scale;
  double cutoff = body_end;
  if (r > 0.0) {
    const double ymax = std::sqrt((2.0 * qn.l() + 1.0) / (4.0 * kPi));
    const auto tail = [&](double P) {
      return prefactor * std::abs(psi) * 4.0 * kPi * ymax * P * std::abs(radial_momentum(qn, z, P)) / (r * r);
    };
    while (tail(cutoff) > orders.tail_tolerance && cutoff < 1e6 * scale) cutoff *= 1.25;
  }

  const double near_width = r > 0.0 ? std::min(0.5 * scale, 2.0 * kPi / r) : 0.5 * scale;
  QuadratureRule radial = composite_gauss_legendre(0.0, body_end, near_width, orders.panel_nodes);
  if (r > 0.0) {
    if (cutoff > body_end)
      radial = concatenate(radial, composite_gauss_legendre(body_end, cutoff, 2.0 * kPi / r, orders.panel_nodes));
  } else {
    // No phase at the origin: the algebraic tail is integrated through a
    // rational map p = P/(1 − t).
    auto tail = map_semi_infinite_rational(gauss_legendre(200), body_end);
    for (auto& node : tail.nodes) node += body_end;
    radial = concatenate(radial, tail);
  }

  const QuadratureRule polar = gauss_legendre(polar_order_for(r * cutoff, qn.l(), orders.polar));
  const int azimuth = orders.azimuth > 0 ? orders.azimuth : 2 * qn.l() + 8;
  const Frame frame = frame_along(x);
  const auto profile = azimuthal_profile(qn, frame, polar, azimuth, /*conjugate=*/true);

  // conj(ψ̃) = i^l F conj(Y)
  const Complex integral =
      radial_angular_sum(radial, polar, profile, r, [&](double p) { return radial_momentum(qn, z, p); });
  const Complex value = prefactor * psi * i_pow(qn.l()) * integral;

  VerificationReport report;
  const std::string name = "marginal over momentum " + state_tag(qn, z) + " at r=" + std::to_string(r) +
                           " theta=" + std::to_string(x.polar) + " phi=" + std::to_string(x.azimuth);
  add_marginal_entries(report, name, target, value, tolerance, imag_tolerance,
                       "cutoff p=" + std::to_string(cutoff) + ", " + std::to_string(radial.size()) + "x" +
                           std::to_string(polar.size()) + "x" + std::to_string(azimuth) + " nodes");
  return report;
}

VerificationReport check_marginal_position(const QuantumNumbers& qn, NuclearCharge z, const SphericalPoint& p,
                                           const MarginalOrders& orders, double tolerance,
                                           double imag_tolerance) {
  const double cutoff = position_cutoff(qn, z);
  const double pm = p.radius;
  const Complex psi_p = psi_momentum(qn, z, p);
  const double target = std::norm(psi_p);
  const double prefactor = std::pow(2.0 * kPi, -1.5);

  const double width = pm > 0.0 ? std::min(1.0 / z.value(), 2.0 * kPi / pm) : 1.0 / z.value();
  const QuadratureRule radial = composite_gauss_legendre(0.0, cutoff, width, orders.panel_nodes);
  const QuadratureRule polar = gauss_legendre(polar_order_for(pm * cutoff, qn.l(), orders.polar));
  const int azimuth = orders.azimuth > 0 ? orders.azimuth : 2 * qn.l() + 8;
  const Frame frame = frame_along(p);
  const auto profile = azimuthal_profile(qn, frame, polar, azimuth, /*conjugate=*/false);

  const Complex integral =
      radial_angular_sum(radial, polar, profile, pm, [&](double r) { return radial_position(qn, z, r); });
  const Complex value = prefactor * std::conj(psi_p) * integral;

  VerificationReport report;
  const std::string name = "marginal over position " + state_tag(qn, z) + " at p=" + std::to_string(pm) +
                           " theta'=" + std::to_string(p.polar) + " phi'=" + std::to_string(p.azimuth);
  add_marginal_entries(report, name, target, value, tolerance, imag_tolerance,
                       std::to_string(radial.size()) + "x" + std::to_string(polar.size()) + "x" +
                           std::to_string(azimuth) + " nodes");
  return report;
}

double hankel_transform_radial(const QuantumNumbers& qn, NuclearCharge z, double p, int panel_nodes) {
  if (qn.l() > 3) throw std::domain_error("Fourier consistency is limited to l <= 3");
  const double cutoff = position_cutoff(qn, z);
  const double width = p > 0.0 ? std::min(1.0 / z.value(), 2.0 * kPi / p) : 1.0 / z.value();
  const auto rule = composite_gauss_legendre(0.0, cutoff, width, panel_nodes);
  const double integral = rule.integrate(
      [&](double r) { return radial_position(qn, z, r) * spherical_bessel(qn.l(), p * r) * r * r; });
  return std::sqrt(2.0 / kPi) * integral;
}

VerificationReport check_fourier_consistency(const QuantumNumbers& qn, NuclearCharge z,
                                             std::span<const double> p_samples, int panel_nodes,
                                             double tolerance) {
  if (qn.l() > 3) throw std::domain_error("Fourier consistency is limited to l <= 3");
  VerificationReport report;
  for (const double p : p_samples) {
    const double g = hankel_transform_radial(qn, z, p, panel_nodes);
    report.add("fourier consistency " + state_tag(qn, z) + " at p=" + std::to_string(p),
               std::abs(radial_momentum(qn, z, p)), std::abs(g), tolerance);
  }
  return report;
}

VerificationReport check_fourier_short_form(int n, int l, std::span<const double> p_samples, double threshold) {
  const QuantumNumbers qn(n, l, 0);
  double worst = 0.0;
  double worst_target = 0.0;
  double worst_value = 0.0;
  double worst_p = 0.0;
  for (const double p : p_samples) {
    const double g = std::abs(hankel_transform_radial(qn, NuclearCharge{}, p));
    const double f = std::abs(short_form_momentum_radial(n, l, p));
    if (std::abs(g - f) >= worst) {
      worst = std::abs(g - f);
      worst_target = f;
      worst_value = g;
      worst_p = p;
    }
  }
  VerificationReport report;
  report.add_divergence("fourier consistency short-form " + qn.label() + " at p=" + std::to_string(worst_p),
                        worst_target, worst_value, threshold,
                        "transform of R_nl disagrees with the short (1+4p^2)^2 form");
  return report;
}

} // namespace krh
