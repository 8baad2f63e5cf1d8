#include "doctest.h"

#include "krh/slicer.hpp"

#include <cmath>

using namespace krh;

namespace {

SliceSpec pole_slice(const QuantumNumbers& qn, int resolution = 256) {
  auto spec = SliceSpec::defaults_for(qn);
  spec.angles = {0.0, 0.0, 0.0, 0.0};
  spec.n_r = spec.n_p = resolution;
  return spec;
}

} // namespace

TEST_CASE("quantity names") {
  CHECK(parse_quantity("abs2") == SliceQuantity::Abs2);
  CHECK(to_string(SliceQuantity::Complex) == "complex");
  CHECK_THROWS_AS(parse_quantity("phase"), std::invalid_argument);
}

TEST_CASE("slice defaults and validation") {
  const auto spec = SliceSpec::defaults_for({3, 1, 0}, NuclearCharge(2.0));
  CHECK(spec.r_max == doctest::Approx(22.5));
  CHECK(spec.p_max == doctest::Approx(8.0 / 3.0));
  CHECK(spec.n_r == 256);
  CHECK(spec.n_p == 256);
  CHECK(spec.r_at(255) == doctest::Approx(spec.r_max));

  auto bad = spec;
  bad.n_r = 1;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = spec;
  bad.r_min = -1.0;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = spec;
  bad.p_max = bad.p_min;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  CHECK_THROWS_AS(sample_slice(bad), std::invalid_argument);
}

TEST_CASE("1s paper-figure slice") {
  auto spec = SliceSpec::defaults_for({1, 0, 0});
  spec.quantity = SliceQuantity::Re;
  spec.convention = NormalizationConvention::PaperFigure;
  spec.paper_scale = true;
  spec.n_r = spec.n_p = 64;
  const auto slice = sample_slice(spec);
  REQUIRE(slice.values.size() == 64u * 64u);
  const double corner = std::pow(2 * kPi, 3) * std::pow(2 * kPi * kPi * kPi, -1.5);
  CHECK(slice.value(0, 0) == doctest::Approx(corner).epsilon(1e-14));
  CHECK(slice.value(0, 0) == doctest::Approx(0.5080).epsilon(1e-3));
  CHECK(slice.warnings.empty());

  // cos Θ = 1, so Re K has the sign of cos(rp).
  for (int i = 0; i < spec.n_r; ++i)
    for (int j = 0; j < spec.n_p; ++j) {
      const double rp = spec.r_at(i) * spec.p_at(j);
      const double c = std::cos(rp);
      if (std::abs(c) > 1e-6) CHECK((slice.value(i, j) > 0) == (c > 0));
    }
}

TEST_CASE("2p equatorial slice is zero with a warning") {
  auto spec = SliceSpec::defaults_for({2, 1, 0});
  spec.n_r = spec.n_p = 16;
  const auto slice = sample_slice(spec);
  CHECK_FALSE(slice.warnings.empty());
  for (double v : slice.values) CHECK(std::abs(v) < 1e-30);
}

TEST_CASE("abs and abs2 are non-negative and consistent") {
  auto spec = pole_slice({3, 1, 0}, 32);
  const auto abs = sample_slice(spec);
  spec.quantity = SliceQuantity::Abs2;
  const auto abs2 = sample_slice(spec);
  spec.quantity = SliceQuantity::Complex;
  const auto cplx = sample_slice(spec);
  for (std::size_t k = 0; k < abs.values.size(); ++k) {
    CHECK(abs.values[k] >= 0.0);
    CHECK(abs2.values[k] == doctest::Approx(abs.values[k] * abs.values[k]).epsilon(1e-12).scale(1e-300));
    CHECK(std::hypot(cplx.values[k], cplx.imag[k]) == doctest::Approx(abs.values[k]).epsilon(1e-12).scale(1e-300));
  }
}

TEST_CASE("joint azimuth shift leaves abs slices unchanged") {
  auto spec = SliceSpec::defaults_for({3, 2, 1});
  spec.angles = {1.0, 0.3, 0.7, 1.9};
  spec.n_r = spec.n_p = 24;
  for (auto q : {SliceQuantity::Abs, SliceQuantity::Abs2}) {
    spec.quantity = q;
    const auto a = sample_slice(spec);
    auto shifted = spec;
    shifted.angles.phi += 2.5;
    shifted.angles.phi_p += 2.5;
    const auto b = sample_slice(shifted);
    for (std::size_t k = 0; k < a.values.size(); ++k)
      CHECK(b.values[k] == doctest::Approx(a.values[k]).epsilon(1e-12).scale(1e-300));
  }
}

TEST_CASE("suggested angles avoid vanishing harmonics") {
  CHECK(suggested_angles({2, 1, 0}).theta == doctest::Approx(0.0));
  CHECK(suggested_angles({2, 1, 1}).theta == doctest::Approx(kPi / 2));
  CHECK(suggested_angles({3, 0, 0}).theta == doctest::Approx(kPi / 2));
  const auto a = suggested_angles({3, 2, 1});
  auto spec = SliceSpec::defaults_for({3, 2, 1});
  spec.angles = a;
  CHECK(slice_angular_weight(spec) > 1e-3);
}

TEST_CASE("extrema of the basic states") {
  SUBCASE("1s: single corner maximum") {
    const auto maxima = find_extrema(sample_slice(pole_slice({1, 0, 0})));
    REQUIRE(maxima.size() == 1);
    CHECK(maxima[0].boundary);
    CHECK(maxima[0].r == doctest::Approx(0.0));
    CHECK(maxima[0].p == doctest::Approx(0.0));
  }
  SUBCASE("2p: single interior maximum") {
    ExtremaOptions opt;
    opt.analytic_refine = true;
    const auto maxima = find_extrema(sample_slice(pole_slice({2, 1, 0})), opt);
    REQUIRE(maxima.size() == 1);
    CHECK(std::abs(maxima[0].r - 2.0) < 1e-3);
    CHECK(std::abs(maxima[0].p - std::sqrt(5.0) / 10) < 1e-3);
    CHECK_FALSE(maxima[0].boundary);
  }
  SUBCASE("2s: four maxima, global at the origin") {
    const auto maxima = find_extrema(sample_slice(pole_slice({2, 0, 0})));
    REQUIRE(maxima.size() == 4);
    CHECK(maxima[0].r == doctest::Approx(0.0));
    CHECK(maxima[0].p == doctest::Approx(0.0));
    const double targets[4][2] = {{0, 0}, {0, 1 / std::sqrt(2.0)}, {4, 0}, {4, 1 / std::sqrt(2.0)}};
    for (const auto& t : targets) {
      bool found = false;
      for (const auto& m : maxima) found = found || (std::abs(m.r - t[0]) < 0.1 && std::abs(m.p - t[1]) < 0.01);
      CHECK(found);
    }
  }
  auto spec = pole_slice({2, 1, 0}, 32);
  spec.quantity = SliceQuantity::Re;
  CHECK_THROWS_AS(find_extrema(sample_slice(spec)), std::invalid_argument);
}

TEST_CASE("extrema are stable under resolution doubling") {
  for (const QuantumNumbers qn : {QuantumNumbers(2, 0, 0), QuantumNumbers(3, 0, 0), QuantumNumbers(3, 1, 0)}) {
    const auto coarse_spec = pole_slice(qn, 128);
    const auto coarse = find_extrema(sample_slice(coarse_spec));
    const auto fine = find_extrema(sample_slice(pole_slice(qn, 256)));
    REQUIRE(coarse.size() == fine.size());
    const double dr = coarse_spec.r_at(1) - coarse_spec.r_at(0);
    const double dp = coarse_spec.p_at(1) - coarse_spec.p_at(0);
    for (const auto& c : coarse) {
      bool matched = false;
      for (const auto& f : fine) matched = matched || (std::abs(c.r - f.r) < dr && std::abs(c.p - f.p) < dp);
      CAPTURE(qn.label());
      CHECK(matched);
    }
  }
}

TEST_CASE("extrema law for low states") {
  const std::vector<QuantumNumbers> states{{1, 0, 0}, {2, 0, 0}, {2, 1, 0}, {3, 0, 0}, {3, 1, 0}, {3, 2, 0}};
  for (const auto& e : count_extrema_law(states)) {
    CAPTURE(e.qn.label());
    CHECK(e.expected == (e.qn.n() - e.qn.l()) * (e.qn.n() - e.qn.l()));
    CHECK(e.found == e.expected);
  }
}
