#include <doctest.h>

#include <cmath>

#include "ek/analytic.hpp"
#include "ek/errors.hpp"

using namespace ek;

namespace {

const EulerProductConfig& cfg() {
  static const auto c = EulerProductConfig::with_cutoff(100'000);
  return c;
}

const EulerProductConfig& cfg_doubled() {
  static const auto c = EulerProductConfig::with_cutoff(200'000);
  return c;
}

// Central differences along the real axis with step 1e-4.
double central_difference(const std::function<double(double)>& f, double x, int order) {
  constexpr double step = 1e-4;
  if (order == 1)
    return (f(x + step) - f(x - step)) / (2.0 * step);
  return (f(x + step) - 2.0 * f(x) + f(x - step)) / (step * step);
}

// Finite product prod_{p <= w} (1 + (z - 1)/(p - 1)) by direct multiplication.
Complex finite_product(Complex z, std::uint64_t w) {
  Complex prod = 1.0;
  for (const std::uint64_t p : cfg().basis->primes()) {
    if (p > w)
      break;
    prod *= 1.0 + (z - 1.0) / (static_cast<double>(p) - 1.0);
  }
  return prod;
}

} // namespace

TEST_CASE("h_k at its distinguished points") {
  for (const double r : {0.0, 0.5, 1.0, 2.0})
    CHECK(std::abs(h_k(r, 1.0, cfg()) - 1.0) <= 1e-10);
  CHECK(h_k(0.0, 0.0, cfg()) == Complex(0.0));
  const Complex v = h_k(1.0, 0.0, cfg());
  CHECK(std::abs(v - h_k(1.0, 0.0, cfg_doubled())) <= 1e-5);
  CHECK(v.real() > 0.0);
  CHECK_THROWS_AS(h_k(-0.5, 0.3, cfg()), PreconditionError);
  CHECK_THROWS_AS(h_k(31.0, 0.3, cfg()), PreconditionError);
}

TEST_CASE("lambda_unit") {
  CHECK(std::abs(lambda_unit(0.0, cfg()) - 1.0) <= 1e-15);
  CHECK(std::abs(lambda_unit(1.0, cfg()) - 1.0) <= 1e-12);
  CHECK(std::abs(lambda_unit(0.5, cfg()) - lambda_unit(0.5, cfg_doubled())) <= 1e-6);
  CHECK(lambda_unit(-1.0, cfg()) == Complex(0.0)); // 1/Gamma(0)
  CHECK(lambda_unit(-2.0, cfg()) == Complex(0.0)); // factor at p = 3 vanishes too
}

TEST_CASE("lambda_w") {
  CHECK(std::abs(lambda_w(0.4, 0.0, 1000, cfg()) - 1.0) <= 1e-15);
  for (const double r : {0.0, 0.3, 1.0})
    for (const std::uint64_t w : {10ULL, 1000ULL, 1'000'000ULL})
      CHECK(std::abs(lambda_w(1.0, r, w, cfg()) - lambda_unit(r, cfg())) <= 1e-10);
  CHECK_THROWS_AS(lambda_w(0.0, 1.0, 3, cfg()), PoleError);
  // beyond w the p = 2 factor no longer sees z
  CHECK_NOTHROW(lambda_w(0.0, 1.0, 1, cfg()));
  const Complex r(0.7, 0.2);
  CHECK(std::abs(lambda_w(0.5, r, 1000, cfg(), false) * reciprocal_gamma(r + 1.0) -
                 lambda_w(0.5, r, 1000, cfg(), true)) <= 1e-14);
}

TEST_CASE("Euler products are stable under cutoff doubling") {
  const Complex zs[] = {Complex(0.0), Complex(0.5, 0.5), Complex(2.0), Complex(-0.7, 1.1)};
  for (const double r : {0.0, 0.7, 2.5})
    for (const Complex z : zs) {
      CAPTURE(r);
      CAPTURE(z);
      CHECK(std::abs(h_k(r, z, cfg()) - h_k(r, z, cfg_doubled())) < 1e-5);
      CHECK(std::abs(lambda_unit(z + r, cfg()) - lambda_unit(z + r, cfg_doubled())) < 1e-5);
      CHECK(std::abs(lambda_w(z + 1.0, r, 1000, cfg()) -
                     lambda_w(z + 1.0, r, 1000, cfg_doubled())) < 1e-5);
    }
}

TEST_CASE("Cauchy derivatives agree with central differences") {
  const auto lam = [](Complex s) { return lambda_unit(s, cfg()); };
  const auto lam_re = [](double s) { return lambda_unit(s, cfg()).real(); };
  for (const double r : {0.0, 0.3, 1.0, 2.0})
    for (const int order : {1, 2}) {
      CAPTURE(r);
      CAPTURE(order);
      CHECK(std::abs(cauchy_derivative(lam, r, order, derivative_radius) -
                     central_difference(lam_re, r, order)) < 1e-6);
    }
  for (const double r : {0.0, 0.6})
    for (const double z0 : {0.0, 0.5, 1.3})
      for (const int order : {1, 2}) {
        const auto h = [r](Complex z) { return h_k(r, z, cfg()); };
        const auto h_re = [r](double z) { return h_k(r, z, cfg()).real(); };
        CHECK(std::abs(cauchy_derivative(h, z0, order, derivative_radius) -
                       central_difference(h_re, z0, order)) < 1e-6);
      }
}

TEST_CASE("xi vanishes at z = 1") {
  for (const std::uint64_t x : {1'000'000ULL, 100'000'000ULL, 10'000'000'000ULL})
    for (const std::uint64_t w : {100ULL, 1000ULL, 100'000ULL})
      for (const int k : {1, 2, 4, 8}) {
        CAPTURE(x);
        CAPTURE(w);
        CAPTURE(k);
        CHECK(std::abs(xi(1.0, x, w, k, cfg())) <= 1e-10);
      }
}

TEST_CASE("xi agrees with the uncancelled formula away from its removable poles") {
  const std::uint64_t x = 100'000'000, w = 1000;
  const int k = 3;
  const XiEvaluator eval(x, w, k, cfg());
  const double r = eval.r();
  const auto lam = [](Complex s) { return lambda_unit(s, cfg()); };
  const Complex l1 = lam(r);
  const Complex l1_dd = cauchy_derivative(lam, r, 2, derivative_radius);
  for (const Complex z : {Complex(0.5, 0.3), Complex(-0.4, 1.2), Complex(1.7, -0.6)}) {
    const auto lz = [&](Complex s) { return lambda_w(z, s, w, cfg()); };
    const Complex lz_dd = cauchy_derivative(lz, r, 2, derivative_radius);
    const Complex direct = h_k(r, z, cfg()) * l1_dd / (2.0 * l1) -
                           lz_dd / (2.0 * l1) * std::exp((1.0 - z) * std::log(std::log(1000.0))) *
                               finite_product(z, w);
    CHECK(std::abs(eval(z) - direct) < 1e-9);
  }
}

TEST_CASE("xi is bounded and continuous on |z| <= 2") {
  const std::uint64_t x = 100'000'000;
  for (const std::uint64_t w : {1000ULL, 100'000ULL})
    for (const int k : {1, 3, 6, 10}) {
      const XiEvaluator eval(x, w, k, cfg());
      double worst = 0.0;
      for (const double rad : {0.5, 1.25, 2.0})
        for (int j = 0; j < 8; ++j)
          worst = std::max(worst, std::abs(eval(std::polar(rad, 2.0 * pi * j / 8))));
      CAPTURE(w);
      CAPTURE(k);
      CHECK(worst <= 100.0);
      // z = 0 makes the p = 2 factor of lambda_z singular; xi itself is regular there
      CHECK(std::abs(eval(0.0) - eval(0.01)) < 0.1);
    }
}

TEST_CASE("mertens_check") {
  CHECK(mertens_check(1000, 1.0, cfg()) == Complex(1.0));
  const double far = std::abs(mertens_check(100'000, 0.0, cfg()) - 1.0);
  const double near = std::abs(mertens_check(1000, 0.0, cfg()) - 1.0);
  CHECK(far <= 5.0 / std::log(100'000.0));
  CHECK(far < near);
  CHECK_THROWS_AS(mertens_check(200'000, 0.0, cfg()), PreconditionError);
  CHECK_THROWS_AS(mertens_check(10, 0.0, cfg()), PreconditionError);
}

TEST_CASE("predict_pi_k") {
  const std::uint64_t x = 100'000'000;
  const auto k1 = predict_pi_k(x, 1, cfg());
  CHECK(k1.main == static_cast<double>(x) / std::log(static_cast<double>(x)));
  CHECK(k1.correction == 0.0);
  CHECK_FALSE(k1.outside_validity_band);

  double prev = 1e300;
  for (const std::uint64_t big : {1'000'000ULL, 100'000'000ULL, 10'000'000'000ULL}) {
    const auto p = predict_pi_k(big, 3, cfg());
    const double ratio = std::abs(p.correction / p.main);
    CHECK(ratio < prev);
    prev = ratio;
  }
  CHECK(predict_pi_k(x, 9, cfg()).outside_validity_band);
  CHECK_THROWS_AS(predict_pi_k(99, 1, cfg()), DomainError);
  CHECK_THROWS_AS(predict_pi_k(x, 0, cfg()), PreconditionError);
}

TEST_CASE("local-law predictors") {
  const std::uint64_t x = 100'000'000;
  CHECK(predict_pi_k_ell(1e6, x, 1000, 1, 0, cfg()) == 0.0);
  CHECK(predict_pi_k_ell_taylor(1e6, x, 1000, 1, 0, cfg()) == 0.0);
  CHECK(predict_pi_k_ell(1e6, x, 1000, 2, 60, cfg()) < 1e-20);
  CHECK_THROWS_AS(predict_pi_k_ell(1e6, x, 15, 2, 1, cfg()), DomainError);
  CHECK_THROWS_AS(predict_pi_k_ell_taylor(1e6, x, 1000, 2, 41, cfg()), PreconditionError);

  const double r = 2.0 / std::log(std::log(static_cast<double>(x)));
  CHECK(predict_pi_k_ell_taylor(1e6, x, 1000, 3, 0, cfg()) ==
        1e6 * h_k(r, 0.0, cfg()).real() / std::log(1000.0));

  for (const std::uint64_t w : {1000ULL, 100'000ULL})
    for (const int k : {2, 3}) {
      const double llw = std::log(std::log(static_cast<double>(w)));
      const auto taylor = local_law_taylor_profile(1.0, x, w, k, 40, cfg());
      for (int ell = 0; ell <= 2.0 * llw; ++ell) {
        const double ratio = taylor[ell] / predict_pi_k_ell(1.0, x, w, k, ell, cfg());
        CAPTURE(ell);
        CHECK(ratio >= 0.5);
        CHECK(ratio <= 2.0);
        CHECK(taylor[ell] == predict_pi_k_ell_taylor(1.0, x, w, k, ell, cfg()));
      }
    }
}

TEST_CASE("local-law mass is nearly complete at the asymptotic cutoff") {
  const std::uint64_t x = 100'000'000;
  const std::uint64_t w = 16; // exp(log x / (log log x)^2) clamped
  double mass = 0.0;
  for (int ell = 0; ell <= 30; ++ell)
    mass += predict_pi_k_ell(1.0, x, w, 2, ell, cfg());
  CHECK(mass == doctest::Approx(1.0).epsilon(0.15));
}

TEST_CASE("prediction report") {
  const auto rep = make_report("pi_2", 100.0, 90.0, 5.0);
  CHECK(rep.relative_deviation == doctest::Approx(0.05));
  CHECK(make_report("tiny", 0.0, 0.5, 0.0).relative_deviation == 0.5);
}
