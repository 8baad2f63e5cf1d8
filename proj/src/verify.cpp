#include "krh/verify.hpp"

#include "krh/kirkwood_rihaczek.hpp"
#include "krh/slicer.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <random>
#include <stdexcept>

namespace krh {

void VerifyTolerances::apply(const std::map<std::string, std::string>& overrides) {
  for (const auto& [key, text] : overrides) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(text, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != text.size() || !(v > 0.0))
      throw std::invalid_argument("tolerance override " + key + " must be a positive number");
    if (key == "normalization")
      normalization = v;
    else if (key == "marginal")
      marginal = v;
    else if (key == "marginal_imag")
      marginal_imag = v;
    else if (key == "fourier")
      fourier = v;
    else if (key == "closed_form")
      closed_form = v;
    else if (key == "extremum_location")
      extremum_location = v;
    else if (key == "one_d")
      one_d = v;
    else
      throw std::invalid_argument("unknown tolerance key: " + key);
  }
}

std::vector<SphericalPoint> marginal_position_points(const QuantumNumbers& qn) {
  const double n = qn.n();
  return {{0.75 * n, 0.4, 0.3}, {1.6 * n, 1.2, 2.1}, {2.9 * n, 2.5, 4.0}};
}

std::vector<SphericalPoint> marginal_momentum_points(const QuantumNumbers& qn) {
  const double n = qn.n();
  return {{0.3 / n, 0.4, 0.3}, {0.9 / n, 1.2, 2.1}, {1.7 / n, 2.5, 4.0}};
}

std::vector<double> fourier_momenta(int n) {
  std::vector<double> p(5);
  const double lo = 0.05 / n;
  const double ratio = std::pow(80.0, 0.25);
  for (int k = 0; k < 5; ++k) p[k] = lo * std::pow(ratio, k);
  return p;
}

std::vector<QuantumNumbers> extrema_law_states(int n_max) {
  const std::vector<QuantumNumbers> all{{1, 0, 0}, {2, 0, 0}, {2, 1, 0}, {3, 0, 0},
                                        {3, 1, 0}, {3, 2, 0}, {10, 8, 8}, {10, 9, 9}};
  std::vector<QuantumNumbers> out;
  std::copy_if(all.begin(), all.end(), std::back_inserter(out), [&](const auto& qn) { return qn.n() <= n_max; });
  return out;
}

TabulatedWavefunction1D gaussian_ground_state(double half_width, double spacing) {
  const auto count = static_cast<std::size_t>(std::llround(2.0 * half_width / spacing)) + 1;
  std::vector<double> q(count);
  std::vector<Complex> psi(count);
  const double norm = std::pow(kPi, -0.25);
  for (std::size_t j = 0; j < count; ++j) {
    q[j] = -half_width + spacing * double(j);
    psi[j] = norm * std::exp(-0.5 * q[j] * q[j]);
  }
  return {std::move(q), std::move(psi)};
}

TabulatedWavefunction1D hydrogen_radial_state(const QuantumNumbers& qn, double r_max, double spacing) {
  const auto count = static_cast<std::size_t>(std::llround(r_max / spacing)) + 1;
  std::vector<double> q(count);
  std::vector<Complex> psi(count);
  for (std::size_t j = 0; j < count; ++j) {
    q[j] = spacing * double(j);
    psi[j] = q[j] * radial_position(qn, NuclearCharge{}, q[j]);
  }
  return {std::move(q), std::move(psi)};
}

Complex kr_1d_marginal_over_p(const TabulatedWavefunction1D& psi, double q) {
  const auto grid = kr_dual_momentum_grid(psi);
  const double dp = grid[1] - grid[0];
  Complex sum{};
  for (const double p : grid) sum += kr_1d(psi, q, p);
  return sum * dp;
}

Complex kr_1d_marginal_over_q(const TabulatedWavefunction1D& psi, double p) {
  Complex sum{};
  for (const double q : psi.abscissas()) sum += kr_1d(psi, q, p);
  return sum * psi.spacing();
}

double wigner_1d_marginal_over_p(const TabulatedWavefunction1D& psi, double q) {
  const auto grid = wigner_dual_momentum_grid(psi);
  const double dp = grid[1] - grid[0];
  double sum = 0.0;
  for (const double p : grid) sum += wigner_1d(psi, q, p);
  return sum * dp;
}

double wigner_1d_marginal_over_q(const TabulatedWavefunction1D& psi, double p, int stride) {
  const auto q = psi.abscissas();
  double sum = 0.0;
  for (std::size_t j = 0; j < q.size(); j += static_cast<std::size_t>(stride)) sum += wigner_1d(psi, q[j], p);
  return sum * psi.spacing() * stride;
}

// ---------------------------------------------------------------------------

VerificationReport verify_normalizations(const VerifyOptions& options) {
  VerificationReport report;
  for (const double zv : {1.0, 2.0}) {
    const NuclearCharge z(zv);
    for (int n = 1; n <= options.n_max; ++n) {
      for (int l = 0; l < n; ++l) {
        const QuantumNumbers qn(n, l, 0);
        report.append(check_normalization(qn, z, Representation::Position, 0, options.tolerances.normalization));
        report.append(check_normalization(qn, z, Representation::Momentum, 0, options.tolerances.normalization));
      }
    }
  }
  if (options.n_max >= 2) {
    report.append(check_short_form_normalization(2, 0));
    report.append(check_short_form_normalization(2, 1));
  }
  return report;
}

VerificationReport verify_marginals(const VerifyOptions& options) {
  const int top = std::min(options.n_max, options.marginal_n_max);
  std::vector<QuantumNumbers> states;
  for (int n = 1; n <= top; ++n)
    for (int l = 0; l < n; ++l)
      for (int m = -l; m <= l; ++m) states.emplace_back(n, l, m);

  const auto& tol = options.tolerances;
  std::vector<std::future<VerificationReport>> jobs;
  for (const auto& qn : states) {
    jobs.push_back(std::async(std::launch::async, [qn, &tol] {
      VerificationReport r;
      for (const auto& x : marginal_position_points(qn))
        r.append(check_marginal_momentum(qn, NuclearCharge{}, x, {}, tol.marginal, tol.marginal_imag));
      for (const auto& p : marginal_momentum_points(qn))
        r.append(check_marginal_position(qn, NuclearCharge{}, p, {}, tol.marginal, tol.marginal_imag));
      return r;
    }));
  }
  VerificationReport report;
  for (auto& j : jobs) report.append(j.get());
  return report;
}

VerificationReport verify_fourier(const VerifyOptions& options) {
  VerificationReport report;
  const int top = std::min(options.n_max, options.fourier_n_max);
  for (int n = 1; n <= top; ++n) {
    const auto ps = fourier_momenta(n);
    for (int l = 0; l < n && l <= 3; ++l)
      report.append(check_fourier_consistency({n, l, 0}, NuclearCharge{}, ps, 20, options.tolerances.fourier));
  }
  if (options.n_max >= 2) {
    const auto ps = fourier_momenta(2);
    report.append(check_fourier_short_form(2, 0, ps));
    report.append(check_fourier_short_form(2, 1, ps));
  }
  return report;
}

namespace {

PhasePoint random_point(std::mt19937_64& rng, double r_max, double p_max) {
  std::uniform_real_distribution<double> ur(0.0, r_max), up(0.0, p_max), ut(0.0, kPi), uphi(0.0, 2.0 * kPi);
  PhasePoint pt;
  pt.r = ur(rng);
  pt.theta = ut(rng);
  pt.phi = uphi(rng);
  pt.p = up(rng);
  pt.theta_p = ut(rng);
  pt.phi_p = uphi(rng);
  return pt;
}

double max_relative_spread(const std::vector<Complex>& values) {
  double worst = 0.0;
  for (const auto& v : values) worst = std::max(worst, std::abs(v / values.front() - 1.0));
  return worst;
}

} // namespace

VerificationReport verify_closed_forms(const VerifyOptions& options) {
  VerificationReport report;
  const double tol = options.tolerances.closed_form;
  std::mt19937_64 rng(20021216);

  const QuantumNumbers s1(1, 0, 0);
  double worst = 0.0;
  for (int k = 0; k < 100; ++k) {
    const auto pt = random_point(rng, 10.0, 5.0);
    const Complex a = kr_hydrogen(s1, NuclearCharge{}, pt, NormalizationConvention::PaperFigure);
    const Complex b = kr_closed_form(s1, pt);
    worst = std::max(worst, std::abs(a - b) / std::abs(b));
  }
  report.add("closed form 1s: max relative |K_paper_figure - closed form| over 100 points", 0.0, worst, tol);

  std::vector<Complex> ratios;
  for (int k = 0; k < 20; ++k) {
    const auto pt = random_point(rng, 10.0, 5.0);
    ratios.push_back(kr_hydrogen(s1, NuclearCharge{}, pt) / kr_closed_form(s1, pt));
  }
  report.add("closed form 1s: ratio marginal_exact / closed form", std::pow(2.0 * kPi, 1.5), ratios.front().real(),
             1e-12 * std::pow(2.0 * kPi, 1.5));
  report.add("closed form 1s: ratio spread over 20 points", 0.0, max_relative_spread(ratios), tol);

  // 2s and 2p: constant in r and angles at fixed p; p-shape differs by (1+4p²).
  for (const QuantumNumbers qn : {QuantumNumbers(2, 0, 0), QuantumNumbers(2, 1, 0)}) {
    double spread = 0.0;
    std::vector<Complex> corrected;
    for (const double p : {0.1, 0.35, 1.3}) {
      std::vector<Complex> at_p;
      while (at_p.size() < 10) {
        auto pt = random_point(rng, 12.0, 1.0);
        pt.p = p;
        const Complex c = kr_closed_form(qn, pt);
        if (std::abs(c) < 1e-6 * std::abs(kr_closed_form(qn, {1.0, 0.0, 0.0, p, 0.0, 0.0}))) continue;
        at_p.push_back(kr_hydrogen(qn, NuclearCharge{}, pt) / c);
      }
      spread = std::max(spread, max_relative_spread(at_p));
      corrected.push_back(at_p.front() * (1.0 + 4.0 * p * p));
    }
    const std::string tag = "closed form " + qn.label();
    report.add(tag + ": ratio spread in r and angles at fixed p", 0.0, spread, 1e3 * tol);
    report.add(tag + ": ratio x (1+4p^2) spread across p", 0.0, max_relative_spread(corrected), 1e3 * tol);
    const double bare = std::abs(corrected[2] / (1.0 + 4.0 * 1.3 * 1.3) / (corrected[0] / (1.0 + 4.0 * 0.01)));
    report.add_divergence(tag + ": ratio at p=1.3 over ratio at p=0.1", 1.0, bare, 1e-2,
                          "printed momentum shape carries (1+4p^2)^2 instead of ^3");
  }
  return report;
}

VerificationReport verify_extrema(const VerifyOptions& options) {
  VerificationReport report;
  const double tol = options.tolerances.extremum_location;
  for (const auto& e : count_extrema_law(extrema_law_states(options.n_max), options.extrema_resolution)) {
    report.add("extrema law " + e.qn.label() + ": |K| maxima = (n-l)^2", e.expected, e.found, 0.0,
               "theta=theta'=" + std::to_string(e.angles.theta));
  }

  const ExtremaOptions refine{.analytic_refine = true};
  if (options.n_max >= 2) {
    const QuantumNumbers p2(2, 1, 0);
    SliceSpec spec = SliceSpec::defaults_for(p2);
    spec.angles = suggested_angles(p2);
    spec.n_r = spec.n_p = options.extrema_resolution;
    const auto maxima = find_extrema(sample_slice(spec), refine);
    report.add("2p: number of |K| maxima", 1.0, double(maxima.size()), 0.0);
    if (!maxima.empty()) {
      report.add("2p: maximum r", 2.0, maxima.front().r, tol);
      report.add("2p: maximum p (normalized momentum function)", std::sqrt(5.0) / 10.0, maxima.front().p, tol);
      report.add_divergence("2p: maximum p vs the quoted sqrt(3)/6", std::sqrt(3.0) / 6.0, maxima.front().p, tol,
                            "sqrt(3)/6 is the maximum of the short (1+4p^2)^2 form; expected gap ~0.065");
    }

    const QuantumNumbers s2(2, 0, 0);
    spec = SliceSpec::defaults_for(s2);
    spec.n_r = spec.n_p = options.extrema_resolution;
    const auto m2s = find_extrema(sample_slice(spec), refine);
    report.add("2s: number of |K| maxima", 4.0, double(m2s.size()), 0.0);
    const double q = 1.0 / std::sqrt(2.0);
    const std::vector<std::pair<double, double>> expected{{0.0, 0.0}, {0.0, q}, {4.0, 0.0}, {4.0, q}};
    for (const auto& [er, ep] : expected) {
      double best = 1e300;
      for (const auto& m : m2s) best = std::min(best, std::hypot(m.r - er, m.p - ep));
      report.add("2s: maximum near (" + std::to_string(er) + ", " + std::to_string(ep) + ")", 0.0, best, tol);
    }
    if (!m2s.empty())
      report.add("2s: global maximum at (0,0)", 0.0, std::hypot(m2s.front().r, m2s.front().p), 0.0);
  }
  return report;
}

VerificationReport verify_one_dimensional(const VerifyOptions& options) {
  VerificationReport report;
  const double tol = options.tolerances.one_d;
  const auto psi = gaussian_ground_state();
  report.add("1-D Gaussian: wigner(0,0) = 1/pi", 1.0 / kPi, wigner_1d(psi, 0.0, 0.0), tol);
  report.add("1-D Gaussian: kr(0,0) = 1/(pi sqrt 2)", 1.0 / (kPi * std::sqrt(2.0)), kr_1d(psi, 0.0, 0.0).real(),
             tol);
  for (const double q : {0.0, 0.5, -1.3}) {
    const double exact = std::exp(-q * q) / std::sqrt(kPi);
    const Complex k = kr_1d_marginal_over_p(psi, q);
    const double w = wigner_1d_marginal_over_p(psi, q);
    const std::string at = " at q=" + std::to_string(q);
    report.add("1-D Gaussian: integral of kr dp = |psi|^2" + at, exact, k.real(), tol);
    report.add("1-D Gaussian: integral of wigner dp = |psi|^2" + at, exact, w, tol);
    report.add("1-D Gaussian: kr and wigner position marginals agree" + at, k.real(), w, tol);
  }
  for (const double p : {0.0, 0.7, -1.1}) {
    const double exact = std::exp(-p * p) / std::sqrt(kPi);
    const Complex k = kr_1d_marginal_over_q(psi, p);
    const double w = wigner_1d_marginal_over_q(psi, p);
    const std::string at = " at p=" + std::to_string(p);
    report.add("1-D Gaussian: integral of kr dq = |psi~|^2/2pi" + at, exact, k.real(), tol);
    report.add("1-D Gaussian: integral of wigner dq = |psi~|^2/2pi" + at, exact, w, tol);
    report.add("1-D Gaussian: kr and wigner momentum marginals agree" + at, k.real(), w, tol);
  }
  return report;
}

VerificationReport run_verify(const VerifyOptions& options) {
  if (options.n_max < 1 || options.n_max > 10) throw std::invalid_argument("n_max must lie in [1, 10]");
  using Group = VerificationReport (*)(const VerifyOptions&);
  const Group groups[] = {verify_normalizations, verify_closed_forms, verify_fourier,
                          verify_marginals,      verify_extrema,      verify_one_dimensional};
  std::vector<std::future<VerificationReport>> jobs;
  for (const Group g : groups) jobs.push_back(std::async(std::launch::async, g, std::cref(options)));
  VerificationReport report;
  for (auto& j : jobs) report.append(j.get());
  return report;
}

} // namespace krh
