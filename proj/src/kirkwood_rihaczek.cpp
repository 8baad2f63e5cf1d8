#include "krh/kirkwood_rihaczek.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace krh {

namespace {

const double kTwoPiPow32 = std::pow(2.0 * kPi, 1.5);

} // namespace

std::string_view to_string(NormalizationConvention c) {
  return c == NormalizationConvention::MarginalExact ? "marginal_exact" : "paper_figure";
}

NormalizationConvention parse_convention(std::string_view s) {
  if (s == "marginal_exact" || s == "marginal-exact") return NormalizationConvention::MarginalExact;
  if (s == "paper_figure" || s == "paper-figure") return NormalizationConvention::PaperFigure;
  throw std::invalid_argument("unknown normalization convention: " + std::string(s));
}

double convention_factor(NormalizationConvention c) {
  return c == NormalizationConvention::MarginalExact ? 1.0 : 1.0 / kTwoPiPow32;
}

double cos_capital_theta(double theta, double phi, double theta_p, double phi_p) {
  const double c = std::cos(theta - theta_p) + (std::cos(phi - phi_p) - 1.0) * std::sin(theta) * std::sin(theta_p);
  return std::clamp(c, -1.0, 1.0);
}

Complex kr_hydrogen(const QuantumNumbers& qn, NuclearCharge z, const PhasePoint& point,
                    NormalizationConvention convention) {
  const Complex psi = psi_position(qn, z, point.position());
  const Complex psi_p = psi_momentum(qn, z, point.momentum());
  const double phase = -point.r * point.p * cos_capital_theta(point.theta, point.phi, point.theta_p, point.phi_p);
  return convention_factor(convention) / kTwoPiPow32 * psi * std::polar(1.0, phase) * std::conj(psi_p);
}

double kr_abs_squared(const QuantumNumbers& qn, NuclearCharge z, const PhasePoint& point,
                      NormalizationConvention convention) {
  const double ang_x = std::norm(spherical_harmonic(qn.l(), qn.m(), point.position().direction()));
  const double ang_p = std::norm(spherical_harmonic(qn.l(), qn.m(), point.momentum().direction()));
  const double rx = radial_position(qn, z, point.r);
  const double fp = radial_momentum(qn, z, point.p);
  const double c = convention_factor(convention) / kTwoPiPow32;
  return c * c * (rx * rx * ang_x) * (fp * fp * ang_p);
}

Complex kr_closed_form(const QuantumNumbers& qn, const PhasePoint& pt) {
  const double ct = cos_capital_theta(pt.theta, pt.phi, pt.theta_p, pt.phi_p);
  const Complex wave = std::polar(1.0, -pt.p * pt.r * ct);
  const double pi9 = std::pow(kPi, 9);
  const double q2 = 4.0 * pt.p * pt.p;

  if (qn == QuantumNumbers(1, 0, 0)) {
    const double d = 1.0 + pt.p * pt.p;
    return std::pow(2.0 * kPi * kPi * kPi, -1.5) * std::exp(-pt.r) / (d * d) * wave;
  }
  if (qn == QuantumNumbers(2, 0, 0)) {
    return std::sqrt(32.0 * pi9) * (2.0 - pt.r) * std::exp(-0.5 * pt.r) * (q2 - 1.0) / ((1.0 + q2) * (1.0 + q2)) *
           wave;
  }
  if (qn == QuantumNumbers(2, 1, 0)) {
    return std::sqrt(2.0 * pi9) / 3.0 * pt.r * std::exp(-0.5 * pt.r) * pt.p / ((1.0 + q2) * (1.0 + q2)) * wave *
           std::cos(pt.theta) * std::cos(pt.theta_p);
  }
  throw std::invalid_argument("closed form available only for 1s, 2s and 2p(m=0), not " + qn.label());
}

// ---------------------------------------------------------------------------

TabulatedWavefunction1D::TabulatedWavefunction1D(std::vector<double> q, std::vector<Complex> psi)
    : q_(std::move(q)), psi_(std::move(psi)) {
  if (q_.size() != psi_.size()) throw std::invalid_argument("abscissa and amplitude counts differ");
  if (q_.size() < 2) throw std::invalid_argument("tabulated wavefunction needs at least two samples");
  const std::size_t n = q_.size();
  dq_ = (q_.back() - q_.front()) / double(n - 1);
  if (!(dq_ > 0.0)) throw std::invalid_argument("abscissas must be increasing");
  const double scale = std::max({std::abs(q_.front()), std::abs(q_.back()), dq_});
  for (std::size_t j = 1; j < n; ++j) {
    const double expected = q_.front() + dq_ * double(j);
    if (std::abs(q_[j] - expected) > 1e-12 * scale)
      throw std::invalid_argument("abscissas are not uniformly spaced (sample " + std::to_string(j) + ")");
  }
}

TabulatedWavefunction1D TabulatedWavefunction1D::parse_csv(std::istream& in) {
  std::vector<double> q;
  std::vector<Complex> psi;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream fields(line);
    double a = 0.0, re = 0.0, im = 0.0;
    if (!(fields >> a >> re >> im))
      throw std::invalid_argument("malformed tabulated wavefunction line " + std::to_string(lineno) +
                                  " (expected q,re,im)");
    q.push_back(a);
    psi.emplace_back(re, im);
  }
  return {std::move(q), std::move(psi)};
}

TabulatedWavefunction1D TabulatedWavefunction1D::load_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open tabulated wavefunction: " + path);
  try {
    return parse_csv(in);
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

bool TabulatedWavefunction1D::contains(double q) const {
  const double slack = 1e-12 * dq_;
  return q >= q_.front() - slack && q <= q_.back() + slack;
}

Complex TabulatedWavefunction1D::at(double q) const {
  if (!contains(q)) return {};
  const double s = (q - q_.front()) / dq_;
  const auto n = static_cast<double>(q_.size() - 1);
  const double sc = std::clamp(s, 0.0, n);
  const auto j = std::min(static_cast<std::size_t>(sc), q_.size() - 2);
  const double t = sc - double(j);
  if (t == 0.0) return psi_[j];
  return (1.0 - t) * psi_[j] + t * psi_[j + 1];
}

Complex TabulatedWavefunction1D::transform(double p) const {
  Complex sum{};
  for (std::size_t j = 0; j < q_.size(); ++j) sum += psi_[j] * std::polar(1.0, -p * q_[j]);
  return sum * dq_;
}

double TabulatedWavefunction1D::discrete_norm() const {
  double s = 0.0;
  for (const auto& a : psi_) s += std::norm(a);
  return s * dq_;
}

Complex kr_1d(const TabulatedWavefunction1D& psi, double q, double p) {
  if (!psi.contains(q)) throw OutOfDomainError("q = " + std::to_string(q) + " outside tabulated support");
  return psi.at(q) * std::polar(1.0, -p * q) * std::conj(psi.transform(p)) / (2.0 * kPi);
}

double wigner_1d(const TabulatedWavefunction1D& psi, double q, double p) {
  if (!psi.contains(q)) throw OutOfDomainError("q = " + std::to_string(q) + " outside tabulated support");
  const double dq = psi.spacing();
  const double reach = std::min(q - psi.q_min(), psi.q_max() - q);
  const auto kmax = static_cast<long>(std::floor(reach / dq + 1e-9));
  Complex sum{};
  double scale = 0.0;
  for (long k = -kmax; k <= kmax; ++k) {
    const double half = double(k) * dq; // ξ/2
    const Complex term = std::conj(psi.at(q + half)) * psi.at(q - half) * std::polar(1.0, 2.0 * p * half);
    sum += term;
    scale += std::abs(term);
  }
  sum *= 2.0 * dq / (2.0 * kPi);
  scale *= 2.0 * dq / (2.0 * kPi);
  if (std::abs(sum.imag()) > 1e-10 * std::max(scale, 1.0))
    throw std::runtime_error("wigner_1d: imaginary residue " + std::to_string(sum.imag()));
  return sum.real();
}

namespace {

std::vector<double> centred_grid(std::size_t count, double step) {
  std::vector<double> p(count);
  const double start = -step * double(count / 2);
  for (std::size_t j = 0; j < count; ++j) p[j] = start + step * double(j);
  return p;
}

} // namespace

std::vector<double> kr_dual_momentum_grid(const TabulatedWavefunction1D& psi) {
  const std::size_t n = psi.size();
  return centred_grid(n, 2.0 * kPi / (double(n) * psi.spacing()));
}

std::vector<double> wigner_dual_momentum_grid(const TabulatedWavefunction1D& psi) {
  const std::size_t n = psi.size();
  return centred_grid(n, kPi / (double(n) * psi.spacing()));
}

} // namespace krh
