// Acceptance suite: one PASS/FAIL line per criterion, with wall time.

#include "krh/export.hpp"
#include "krh/verify.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <unistd.h>

using namespace krh;

namespace {

struct Outcome {
  bool passed = false;
  std::string detail;
};

struct Criterion {
  int id;
  std::string title;
  double time_limit_s;
  std::function<Outcome()> run;
};

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

Outcome closed_form_1s() {
  std::mt19937_64 rng(20021216);
  std::uniform_real_distribution<double> r(0.0, 15.0), p(0.0, 5.0), th(0.0, kPi), ph(0.0, 2 * kPi);
  const double prefactor = std::pow(2 * kPi * kPi * kPi, -1.5);
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const PhasePoint pt{r(rng), th(rng), ph(rng), p(rng), th(rng), ph(rng)};
    const double cos_big = std::sin(pt.theta) * std::cos(pt.phi) * std::sin(pt.theta_p) * std::cos(pt.phi_p) +
                           std::sin(pt.theta) * std::sin(pt.phi) * std::sin(pt.theta_p) * std::sin(pt.phi_p) +
                           std::cos(pt.theta) * std::cos(pt.theta_p);
    const Complex want = prefactor * std::exp(-pt.r) / std::pow(1 + pt.p * pt.p, 2) *
                         std::polar(1.0, -pt.p * pt.r * cos_big);
    const Complex got = kr_hydrogen({1, 0, 0}, {}, pt, NormalizationConvention::PaperFigure);
    worst = std::max(worst, std::abs(got - want) / std::abs(want));
  }
  return {worst <= 1e-12, "100 points, worst relative error " + sci(worst) + " (tol 1e-12)"};
}

Outcome marginals() {
  double worst_value = 0.0, worst_imag = 0.0;
  int states = 0, checks = 0;
  bool ok = true;
  for (int n = 1; n <= 3; ++n)
    for (int l = 0; l < n; ++l)
      for (int m = -l; m <= l; ++m) {
        const QuantumNumbers qn(n, l, m);
        ++states;
        VerificationReport report;
        for (const auto& x : marginal_position_points(qn)) report.append(check_marginal_momentum(qn, {}, x, {}, 1e-6, 1e-8));
        for (const auto& p : marginal_momentum_points(qn)) report.append(check_marginal_position(qn, {}, p, {}, 1e-6, 1e-8));
        for (const auto& c : report.checks()) {
          ++checks;
          const bool imag = c.name.find("imag") != std::string::npos;
          (imag ? worst_imag : worst_value) = std::max(imag ? worst_imag : worst_value, c.abs_error);
        }
        ok = ok && report.all_passed();
      }
  return {ok && worst_value <= 1e-6 && worst_imag < 1e-8,
          std::to_string(states) + " states, " + std::to_string(checks) + " checks, worst |err| " + sci(worst_value) +
              " (tol 1e-6), worst imaginary " + sci(worst_imag) + " (tol 1e-8)"};
}

Outcome normalizations() {
  double worst = 0.0;
  int count = 0;
  for (int n = 1; n <= 10; ++n)
    for (int l = 0; l < n; ++l)
      for (auto which : {Representation::Position, Representation::Momentum}) {
        const auto report = check_normalization({n, l}, {}, which, 0, 1e-8);
        worst = std::max(worst, report.checks()[0].abs_error);
        ++count;
      }
  return {worst <= 1e-8, std::to_string(count) + " integrals, worst |err| " + sci(worst) + " (tol 1e-8)"};
}

Outcome fourier() {
  double worst = 0.0;
  int states = 0;
  for (int n = 1; n <= 4; ++n)
    for (int l = 0; l < n && l <= 3; ++l) {
      const auto ps = fourier_momenta(n);
      for (double p : ps) {
        const double g = std::abs(hankel_transform_radial({n, l}, {}, p));
        worst = std::max(worst, std::abs(g - std::abs(radial_momentum({n, l}, {}, p))));
      }
      ++states;
    }
  double gap20 = 0.0, gap21 = 0.0;
  for (double p : fourier_momenta(2)) {
    gap20 = std::max(gap20, std::abs(std::abs(hankel_transform_radial({2, 0}, {}, p)) -
                                     std::abs(short_form_momentum_radial(2, 0, p))));
    gap21 = std::max(gap21, std::abs(std::abs(hankel_transform_radial({2, 1}, {}, p)) -
                                     std::abs(short_form_momentum_radial(2, 1, p))));
  }
  return {worst <= 1e-6 && gap20 > 1e-2 && gap21 > 1e-2,
          std::to_string(states) + " states x 5 momenta, worst |err| " + sci(worst) +
              " (tol 1e-6); short forms flagged: F_20 gap " + sci(gap20) + ", F_21 gap " + sci(gap21) + " (> 1e-2)"};
}

Outcome extrema_law() {
  const std::vector<QuantumNumbers> states{{1, 0, 0}, {2, 0, 0}, {2, 1, 0}, {3, 0, 0},
                                           {3, 1, 0}, {3, 2, 0}, {10, 8, 8}, {10, 9, 9}};
  bool ok = true;
  std::string detail;
  for (const auto& e : count_extrema_law(states, 256)) {
    const int want = (e.qn.n() - e.qn.l()) * (e.qn.n() - e.qn.l());
    ok = ok && e.found == want;
    detail += e.qn.label() + "=" + std::to_string(e.found) + "/" + std::to_string(want) + " ";
  }
  return {ok, "found/expected: " + detail};
}

SliceSpec slice_256(const QuantumNumbers& qn, const SliceAngles& angles) {
  auto spec = SliceSpec::defaults_for(qn);
  spec.angles = angles;
  spec.n_r = spec.n_p = 256;
  return spec;
}

Outcome maximum_2p() {
  // d/dr ln(r e^{-r/2}) = 0 → r = 2;  d/dp ln(p (1+4p²)^{-3}) = 0 → p² = 1/20.
  const double r_star = 2.0, p_star = std::sqrt(1.0 / 20.0);
  // The same calculus on p (1+4p²)^{-2} gives p² = 1/12.
  const double p_short = std::sqrt(1.0 / 12.0);
  const auto maxima =
      find_extrema(sample_slice(slice_256({2, 1, 0}, {0.0, 0.0, 0.0, 0.0})), {.analytic_refine = true});
  if (maxima.size() != 1) return {false, "expected a unique maximum, found " + std::to_string(maxima.size())};
  const double dr = std::abs(maxima[0].r - r_star), dp = std::abs(maxima[0].p - p_star);
  return {dr <= 1e-3 && dp <= 1e-3,
          "maximum at (" + format_double(maxima[0].r) + ", " + format_double(maxima[0].p) + "), offset (" + sci(dr) +
              ", " + sci(dp) + ") (tol 1e-3); quoted (2, sqrt(3)/6) differs in p by " +
              sci(std::abs(maxima[0].p - p_short)) + " [flagged]"};
}

Outcome structure_2s() {
  const auto spec = slice_256({2, 0, 0}, {});
  const auto maxima = find_extrema(sample_slice(spec), {.analytic_refine = true});
  const double cell_r = spec.r_at(1) - spec.r_at(0), cell_p = spec.p_at(1) - spec.p_at(0);
  // Radial factor (2−r)e^{−r/2}: |·| peaks at r = 0 and r = 4. Momentum
  // factor (4p²−1)/(1+4p²)³: |·| peaks at p = 0 and p = 1/√2.
  const double q = 1 / std::sqrt(2.0);
  const double targets[4][2] = {{0, 0}, {0, q}, {4, 0}, {4, q}};
  bool ok = maxima.size() == 4;
  double worst = 0.0;
  for (const auto& t : targets) {
    bool found = false;
    for (const auto& m : maxima) {
      if (std::abs(m.r - t[0]) <= cell_r && std::abs(m.p - t[1]) <= cell_p) {
        found = true;
        worst = std::max({worst, std::abs(m.r - t[0]), std::abs(m.p - t[1])});
      }
    }
    ok = ok && found;
  }
  const bool global_origin = !maxima.empty() && maxima[0].r == 0.0 && maxima[0].p == 0.0;
  return {ok && global_origin, std::to_string(maxima.size()) + " maxima, worst offset " + sci(worst) +
                                   " (within one cell), global at origin: " + (global_origin ? "yes" : "no")};
}

Outcome one_dimensional() {
  const auto psi = gaussian_ground_state(10.0, 0.01);
  double worst = std::abs(wigner_1d(psi, 0.0, 0.0) - 1 / kPi);
  for (double q : {-1.5, -0.4, 0.0, 0.73, 2.0}) {
    const double exact = std::exp(-q * q) / std::sqrt(kPi);
    const double k = kr_1d_marginal_over_p(psi, q).real();
    const double w = wigner_1d_marginal_over_p(psi, q);
    worst = std::max({worst, std::abs(k - exact), std::abs(w - exact), std::abs(k - w)});
  }
  for (double p : {-1.2, 0.0, 0.5, 1.9}) {
    // |Ψ̃(p)|²/2π for Ψ̃(p) = √(2π) π^{−1/4} e^{−p²/2}.
    const double exact = std::exp(-p * p) / std::sqrt(kPi);
    const double k = kr_1d_marginal_over_q(psi, p).real();
    const double w = wigner_1d_marginal_over_q(psi, p);
    worst = std::max({worst, std::abs(k - exact), std::abs(w - exact), std::abs(k - w)});
  }
  return {worst <= 1e-6, "wigner(0,0) and 18 marginal comparisons, worst |err| " + sci(worst) + " (tol 1e-6)"};
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Outcome determinism() {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / ("krh_acceptance_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  bool ok = true;
  std::string detail;
  for (const std::string format : {"csv", "json"}) {
    std::string outputs[2];
    for (int run = 0; run < 2; ++run) {
      const fs::path out = dir / ("slice" + std::to_string(run) + "." + format);
      const std::string cmd = std::string("\"") + KRH_CLI_PATH + "\" kr-slice --n 3 --l 1 --m 1 --quantity complex "
                              "--nr 64 --np 48 --reproducible --format " + format + " --out \"" + out.string() + "\"";
      if (std::system(cmd.c_str()) != 0) return {false, "CLI invocation failed: " + cmd};
      outputs[run] = slurp(out);
    }
    const bool same = !outputs[0].empty() && outputs[0] == outputs[1];
    ok = ok && same;
    detail += format + " " + std::to_string(outputs[0].size()) + " bytes " + (same ? "identical" : "DIFFER") + "; ";
  }
  fs::remove_all(dir);
  return {ok, detail};
}

} // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "closed form 1s", 1.0, closed_form_1s},
      {2, "marginal identities n <= 3", 300.0, marginals},
      {3, "normalizations n <= 10", 30.0, normalizations},
      {4, "Fourier consistency n <= 4, l <= 3", 60.0, fourier},
      {5, "extrema law (n-l)^2", 120.0, extrema_law},
      {6, "2p maximum location", 10.0, maximum_2p},
      {7, "2s maxima structure", 10.0, structure_2s},
      {8, "1-D evaluators", 30.0, one_dimensional},
      {9, "CLI determinism", 60.0, determinism},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = seconds < c.time_limit_s;
    const bool passed = outcome.passed && in_time;
    failures += passed ? 0 : 1;
    std::printf("criterion %d %-36s %s  %.2f s (limit %g s)%s  %s\n", c.id, c.title.c_str(), passed ? "PASS" : "FAIL",
                seconds, c.time_limit_s, in_time ? "" : " [too slow]", outcome.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%zu criteria, %d failed\n", criteria.size(), failures);
  return failures == 0 ? 0 : 1;
}
