#include "krh/slicer.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace krh {

std::string_view to_string(SliceQuantity q) {
  switch (q) {
  case SliceQuantity::Re:
    return "re";
  case SliceQuantity::Im:
    return "im";
  case SliceQuantity::Abs:
    return "abs";
  case SliceQuantity::Abs2:
    return "abs2";
  default:
    return "complex";
  }
}

SliceQuantity parse_quantity(std::string_view s) {
  if (s == "re") return SliceQuantity::Re;
  if (s == "im") return SliceQuantity::Im;
  if (s == "abs") return SliceQuantity::Abs;
  if (s == "abs2") return SliceQuantity::Abs2;
  if (s == "complex") return SliceQuantity::Complex;
  throw std::invalid_argument("unknown slice quantity: " + std::string(s));
}

SliceSpec SliceSpec::defaults_for(const QuantumNumbers& qn, NuclearCharge z) {
  SliceSpec spec;
  spec.qn = qn;
  spec.z = z;
  const double n = qn.n();
  spec.r_max = 5.0 * n * n / z.value();
  spec.p_max = 4.0 * z.value() / n;
  return spec;
}

void SliceSpec::validate() const {
  if (!(r_min >= 0.0)) throw std::invalid_argument("r_min must be >= 0");
  if (!(p_min >= 0.0)) throw std::invalid_argument("p_min must be >= 0");
  if (!(r_max > r_min)) throw std::invalid_argument("r_max must exceed r_min");
  if (!(p_max > p_min)) throw std::invalid_argument("p_max must exceed p_min");
  if (n_r < 2 || n_p < 2) throw std::invalid_argument("slice resolution must be at least 2x2");
  for (double a : {angles.theta, angles.theta_p})
    if (!(a >= 0.0 && a <= kPi)) throw std::invalid_argument("polar angles must lie in [0, pi]");
}

double SliceSpec::display_factor() const {
  return paper_scale ? std::pow(2.0 * kPi, 3) : 1.0;
}

PhasePoint SliceSpec::point(double r, double p) const {
  return {r, angles.theta, angles.phi, p, angles.theta_p, angles.phi_p};
}

double slice_angular_weight(const SliceSpec& spec) {
  const auto& qn = spec.qn;
  return std::abs(spherical_harmonic(qn.l(), qn.m(), {spec.angles.theta, spec.angles.phi})) *
         std::abs(spherical_harmonic(qn.l(), qn.m(), {spec.angles.theta_p, spec.angles.phi_p}));
}

namespace {

double extract(Complex k, SliceQuantity q) {
  switch (q) {
  case SliceQuantity::Re:
  case SliceQuantity::Complex:
    return k.real();
  case SliceQuantity::Im:
    return k.imag();
  case SliceQuantity::Abs:
    return std::abs(k);
  default:
    return std::norm(k);
  }
}

} // namespace

SliceResult sample_slice(const SliceSpec& spec) {
  spec.validate();
  SliceResult result;
  result.spec = spec;
  const auto cells = static_cast<std::size_t>(spec.n_r) * spec.n_p;
  result.values.assign(cells, 0.0);
  const bool complex = spec.quantity == SliceQuantity::Complex;
  if (complex) result.imag.assign(cells, 0.0);

  const auto& qn = spec.qn;
  const double ya = std::abs(spherical_harmonic(qn.l(), qn.m(), {spec.angles.theta, spec.angles.phi}));
  const double yb = std::abs(spherical_harmonic(qn.l(), qn.m(), {spec.angles.theta_p, spec.angles.phi_p}));
  if (ya < 1e-12 || yb < 1e-12) {
    result.warnings.push_back("angular factor Y_lm vanishes at the chosen angles; the slice is identically zero");
  }

  // abs2 scales with the square of the display factor.
  const double f = spec.display_factor();
  const double scale = spec.quantity == SliceQuantity::Abs2 ? f * f : f;

  const auto rows = [&](int begin, int end) {
    for (int i = begin; i < end; ++i) {
      const double r = spec.r_at(i);
      for (int j = 0; j < spec.n_p; ++j) {
        const Complex k = kr_hydrogen(qn, spec.z, spec.point(r, spec.p_at(j)), spec.convention);
        const auto idx = static_cast<std::size_t>(i) * spec.n_p + j;
        result.values[idx] = scale * extract(k, spec.quantity);
        if (complex) result.imag[idx] = scale * k.imag();
      }
    }
  };

  const int workers = std::clamp(static_cast<int>(std::thread::hardware_concurrency()), 1, spec.n_r);
  if (workers == 1) {
    rows(0, spec.n_r);
  } else {
    std::vector<std::jthread> pool;
    const int chunk = (spec.n_r + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
      const int begin = w * chunk;
      const int end = std::min(spec.n_r, begin + chunk);
      if (begin < end) pool.emplace_back(rows, begin, end);
    }
  }
  return result;
}

// ---------------------------------------------------------------------------

namespace {

// Vertex offset of the parabola through (−h, a), (0, b), (h, c), in units of h.
double parabola_vertex(double a, double b, double c) {
  const double denom = a - 2.0 * b + c;
  if (denom >= 0.0) return 0.0;
  return std::clamp(0.5 * (a - c) / denom, -0.5, 0.5);
}

struct Refiner {
  const SliceSpec& spec;

  double abs_k(double r, double p) const {
    return spec.display_factor() * std::abs(kr_hydrogen(spec.qn, spec.z, spec.point(r, p), spec.convention));
  }

  // Successive parabolic fits along one axis with shrinking step; the
  // coordinate never leaves [lo, hi].
  double along(double x, double h, double min_step, double lo, double hi, bool r_axis, double other) const {
    const auto f = [&](double s) { return r_axis ? abs_k(s, other) : abs_k(other, s); };
    while (h > min_step) {
      if (x - h < lo || x + h > hi) {
        h *= 0.25;
        continue;
      }
      const double off = parabola_vertex(f(x - h), f(x), f(x + h));
      x = std::clamp(x + off * h, lo, hi);
      h *= 0.25;
    }
    return x;
  }
};

} // namespace

std::vector<ExtremumRecord> find_extrema(const SliceResult& slice, const ExtremaOptions& options) {
  const auto& spec = slice.spec;
  if (spec.quantity != SliceQuantity::Abs)
    throw std::invalid_argument("find_extrema requires a slice of quantity 'abs'");

  const int nr = spec.n_r;
  const int np = spec.n_p;
  const double dr = (spec.r_max - spec.r_min) / (nr - 1);
  const double dp = (spec.p_max - spec.p_min) / (np - 1);

  std::vector<ExtremumRecord> out;
  for (int i = 0; i < nr - 1; ++i) {
    for (int j = 0; j < np - 1; ++j) {
      const double v = slice.value(i, j);
      if (!(v > 0.0)) continue;
      bool is_max = true;
      for (int di = -1; di <= 1 && is_max; ++di) {
        for (int dj = -1; dj <= 1; ++dj) {
          if (di == 0 && dj == 0) continue;
          const int a = i + di;
          const int b = j + dj;
          if (a < 0 || b < 0) continue;
          if (!(v > slice.value(a, b))) {
            is_max = false;
            break;
          }
        }
      }
      if (!is_max) continue;

      ExtremumRecord rec;
      rec.kind = ExtremumKind::Maximum;
      rec.boundary = (i == 0 || j == 0);
      rec.grid_i = i;
      rec.grid_j = j;
      rec.value = v;
      rec.r = spec.r_at(i);
      rec.p = spec.p_at(j);
      if (i > 0) rec.r += dr * parabola_vertex(slice.value(i - 1, j), v, slice.value(i + 1, j));
      if (j > 0) rec.p += dp * parabola_vertex(slice.value(i, j - 1), v, slice.value(i, j + 1));

      if (options.analytic_refine) {
        const Refiner refine{spec};
        const double fr = options.refine_step_fraction;
        for (int pass = 0; pass < 3; ++pass) {
          if (i > 0) rec.r = refine.along(rec.r, 0.5 * dr, fr * dr, spec.r_min, spec.r_max, true, rec.p);
          if (j > 0) rec.p = refine.along(rec.p, 0.5 * dp, fr * dp, spec.p_min, spec.p_max, false, rec.r);
        }
        rec.value = refine.abs_k(rec.r, rec.p);
      }
      out.push_back(rec);
    }
  }
  std::sort(out.begin(), out.end(), [](const ExtremumRecord& a, const ExtremumRecord& b) {
    return a.value > b.value;
  });
  return out;
}

SliceAngles suggested_angles(const QuantumNumbers& qn) {
  const auto weight = [&](double theta) { return std::abs(normalized_legendre(qn.l(), std::abs(qn.m()), theta)); };
  double theta = kPi / 2;
  if (weight(theta) < 1e-6) {
    theta = 0.0;
    if (weight(theta) < 1e-6) {
      double best = -1.0;
      for (int k = 1; k < 180; ++k) {
        const double t = kPi * k / 360.0;
        if (weight(t) > best) {
          best = weight(t);
          theta = t;
        }
      }
    }
  }
  return {theta, 0.0, theta, 0.0};
}

std::vector<ExtremaLawEntry> count_extrema_law(const std::vector<QuantumNumbers>& states, int resolution) {
  std::vector<ExtremaLawEntry> out;
  for (const auto& qn : states) {
    SliceSpec spec = SliceSpec::defaults_for(qn);
    spec.angles = suggested_angles(qn);
    spec.n_r = spec.n_p = resolution;
    spec.quantity = SliceQuantity::Abs;
    const auto maxima = find_extrema(sample_slice(spec));
    const int nl = qn.n() - qn.l();
    out.push_back({qn, spec.angles, nl * nl, static_cast<int>(maxima.size()), maxima});
  }
  return out;
}

} // namespace krh
