#include "doctest.h"

#include "krh/quadrature.hpp"
#include "krh/verify.hpp"

#include <cmath>
#include <numeric>

using namespace krh;

TEST_CASE("gauss-legendre closed forms") {
  const auto r2 = gauss_legendre(2);
  REQUIRE(r2.size() == 2);
  CHECK(r2.nodes[0] == doctest::Approx(-1 / std::sqrt(3.0)).epsilon(1e-15));
  CHECK(r2.nodes[1] == doctest::Approx(1 / std::sqrt(3.0)).epsilon(1e-15));
  CHECK(r2.weights[0] == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(r2.weights[1] == doctest::Approx(1.0).epsilon(1e-15));

  const auto r3 = gauss_legendre(3);
  REQUIRE(r3.size() == 3);
  CHECK(std::abs(r3.nodes[1]) < 1e-16);
  CHECK(r3.nodes[2] == doctest::Approx(std::sqrt(0.6)).epsilon(1e-15));
  CHECK(r3.weights[1] == doctest::Approx(8.0 / 9.0).epsilon(1e-15));
  CHECK(r3.weights[0] == doctest::Approx(5.0 / 9.0).epsilon(1e-15));
  CHECK_THROWS_AS(gauss_legendre(0), std::invalid_argument);
}

TEST_CASE("gauss-legendre structure and exactness") {
  for (int order : {1, 5, 20, 64, 200}) {
    const auto rule = gauss_legendre(order);
    CAPTURE(order);
    CHECK(std::accumulate(rule.weights.begin(), rule.weights.end(), 0.0) == doctest::Approx(2.0).epsilon(1e-14));
    for (std::size_t i = 0; i < rule.size(); ++i) {
      CHECK(rule.weights[i] > 0.0);
      CHECK(rule.nodes[i] == doctest::Approx(-rule.nodes[rule.size() - 1 - i]).epsilon(1e-15).scale(1e-15));
      if (i) CHECK(rule.nodes[i] > rule.nodes[i - 1]);
    }
    // Degree 2·order − 1 monomials.
    const int deg = 2 * order - 1;
    const double got = rule.integrate([&](double x) { return std::pow(x, deg - 1); });
    CHECK(got == doctest::Approx(2.0 / deg).epsilon(1e-13));
  }
  const auto unit = map_finite(gauss_legendre(64), 0.0, 1.0);
  CHECK(std::abs(unit.integrate([](double x) { return std::pow(x, 5); }) - 1.0 / 6.0) < 1e-15);
}

TEST_CASE("semi-infinite rules integrate e^{-r} r^k") {
  const auto rational = map_semi_infinite_rational(gauss_legendre(96), 1.0);
  const auto tangent = map_semi_infinite_tangent(gauss_legendre(200), 1.0);
  CHECK(rational.mapping == QuadratureMapping::SemiInfiniteRational);
  CHECK(tangent.mapping == QuadratureMapping::SemiInfiniteTangent);
  for (int k = 0; k <= 8; ++k) {
    const double want = std::tgamma(k + 1.0);
    const auto f = [k](double r) { return std::exp(-r) * std::pow(r, k); };
    CAPTURE(k);
    CHECK(std::abs(rational.integrate(f) / want - 1.0) < 1e-10);
    CHECK(std::abs(tangent.integrate(f) / want - 1.0) < 1e-10);
  }
}

TEST_CASE("composite and concatenated rules") {
  const auto body = composite_gauss_legendre(0.0, 10.0, 1.0, 12);
  CHECK(body.size() == 120);
  CHECK(body.mapping == QuadratureMapping::Composite);
  CHECK(body.integrate([](double x) { return std::cos(3 * x); }) == doctest::Approx(std::sin(30.0) / 3).epsilon(1e-13));
  const auto tail = map_semi_infinite_rational(gauss_legendre(64), 1.0);
  auto shifted = tail;
  for (auto& x : shifted.nodes) x += 10.0;
  const auto whole = concatenate(body, shifted);
  CHECK(whole.size() == body.size() + tail.size());
  CHECK(whole.integrate([](double x) { return std::exp(-x); }) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("report semantics") {
  VerificationReport report;
  report.add("ok", 1.0, 1.0 + 1e-9, 1e-8);
  report.add("bad", 1.0, 1.1, 1e-8);
  report.add_divergence("typo", 1.0, 16.0, 1e-2);
  CHECK(report.checks().size() == 3);
  CHECK(report.checks()[0].passed);
  CHECK_FALSE(report.checks()[1].passed);
  CHECK(report.checks()[2].passed);
  CHECK(report.checks()[2].expected_divergence);
  CHECK(report.failures() == 1);
  CHECK_FALSE(report.all_passed());

  VerificationReport clean;
  clean.add_divergence("typo not seen", 1.0, 1.0, 1e-2);
  CHECK(clean.all_passed());
}

TEST_CASE("normalization checks") {
  auto pos = check_normalization({1, 0}, {}, Representation::Position);
  CHECK(pos.checks()[0].abs_error < 1e-10);
  auto mom = check_normalization({2, 1}, {}, Representation::Momentum);
  CHECK(mom.checks()[0].abs_error < 1e-8);
}

TEST_CASE("short-form normalizations match the beta-function values") {
  // ∫ p²·(128²/3π)·p²/(1+4p²)⁴ dp: with u = 2p the integral is
  // (128²/3π)/32 · B(5/2, 3/2)/2 = 16/3; likewise 16 for 2s.
  const double beta_52_32 = std::tgamma(2.5) * std::tgamma(1.5) / std::tgamma(4.0);
  const double f21 = 128.0 * 128.0 / (3 * kPi) / 32.0 * beta_52_32 / 2.0;
  CHECK(f21 == doctest::Approx(16.0 / 3.0).epsilon(1e-14));

  const auto r21 = check_short_form_normalization(2, 1);
  CHECK(r21.checks()[0].computed == doctest::Approx(16.0 / 3.0).epsilon(1e-9));
  CHECK(r21.checks()[0].expected_divergence);
  CHECK(r21.checks()[0].passed);
  const auto r20 = check_short_form_normalization(2, 0);
  CHECK(r20.checks()[0].computed == doctest::Approx(16.0).epsilon(1e-9));
}

TEST_CASE("marginal checks at named points") {
  const NuclearCharge z{};
  auto m1 = check_marginal_momentum({1, 0, 0}, z, {1.0, 0.3, 0.2});
  CHECK(m1.checks()[0].target == doctest::Approx(std::exp(-2.0) / kPi).epsilon(1e-14));
  CHECK(m1.all_passed());
  CHECK(m1.checks()[0].abs_error < 1e-10);

  CHECK(check_marginal_momentum({2, 1, 0}, z, {1.5, kPi / 2, 0.0}).all_passed());
  CHECK(check_marginal_momentum({2, 0, 0}, z, {2.0, 1.0, 1.0}).all_passed());

  auto p1 = check_marginal_position({1, 0, 0}, z, {0.0, 0.0, 0.0});
  CHECK(p1.checks()[0].target == doctest::Approx(0.8105695).epsilon(1e-7));
  CHECK(p1.all_passed());
  CHECK(check_marginal_position({2, 0, 0}, z, {0.5, 0.7, 0.1}).all_passed());
  const double peak = std::sqrt(5.0) / 10;
  auto p2 = check_marginal_position({2, 1, 0}, z, {peak, 0.0, 0.0});
  CHECK(p2.checks()[0].target == doctest::Approx(std::norm(psi_momentum({2, 1, 0}, z, {peak, 0.0, 0.0}))));
  CHECK(p2.all_passed());
}

TEST_CASE("doubling quadrature orders stays within the reported error") {
  const QuantumNumbers qn(3, 1, 1);
  const SphericalPoint x{2.2, 1.1, 0.6};
  const SphericalPoint p{0.35, 2.0, 4.0};
  MarginalOrders doubled;
  doubled.panel_nodes = 40;
  doubled.tail_tolerance = 1e-14;
  for (bool momentum : {true, false}) {
    const auto base = momentum ? check_marginal_momentum(qn, {}, x) : check_marginal_position(qn, {}, p);
    const auto fine = momentum ? check_marginal_momentum(qn, {}, x, doubled) : check_marginal_position(qn, {}, p, doubled);
    CHECK(base.all_passed());
    CHECK(std::abs(base.checks()[0].computed - fine.checks()[0].computed) <=
          std::max(base.checks()[0].abs_error, fine.checks()[0].abs_error) + 1e-12);
  }
  const auto n96 = check_normalization({5, 2}, {}, Representation::Position, 96);
  const auto n192 = check_normalization({5, 2}, {}, Representation::Position, 192);
  CHECK(std::abs(n96.checks()[0].computed - n192.checks()[0].computed) <= n96.checks()[0].abs_error + 1e-14);
}

TEST_CASE("fourier consistency") {
  const double p0[] = {0.0};
  auto g = check_fourier_consistency({1, 0}, {}, p0);
  CHECK(g.checks()[0].computed == doctest::Approx(4 * std::sqrt(2 / kPi)).epsilon(1e-10));
  CHECK(hankel_transform_radial({1, 0}, {}, 0.0) == doctest::Approx(4 * std::sqrt(2 / kPi)).epsilon(1e-10));

  const double quarter[] = {0.25};
  CHECK(check_fourier_consistency({2, 1}, {}, quarter).all_passed());
  const double g21 = std::abs(hankel_transform_radial({2, 1}, {}, 0.25));
  CHECK(std::abs(g21 - std::abs(short_form_momentum_radial(2, 1, 0.25))) > 1e-2);

  const auto ps = fourier_momenta(3);
  CHECK(ps.size() == 5);
  CHECK(check_fourier_consistency({3, 2}, {}, ps).all_passed());
  CHECK_THROWS_AS(check_fourier_consistency({5, 4}, {}, ps), std::domain_error);

  const auto sf = check_fourier_short_form(2, 1, fourier_momenta(2));
  CHECK(sf.checks()[0].expected_divergence);
  CHECK(sf.checks()[0].passed);
}
