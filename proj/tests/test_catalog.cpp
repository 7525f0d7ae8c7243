#include <cmath>
#include <numbers>

#include "doctest.h"
#include "gft/catalog.hpp"
#include "gft/error.hpp"
#include "test_support.hpp"

using namespace gft;

TEST_CASE("make_family") {
  const AnalyticFunction id = make_identity();
  CHECK(id.f({0.3, 0.4}) == Complex(0.3, 0.4));
  CHECK(id.fp({0.3, 0.4}) == Complex(1.0));

  const AnalyticFunction k = make_koebe();
  for (std::size_t j = 0; j <= k.order(); ++j) CHECK(k.series()[j] == Complex(static_cast<double>(j)));

  const AnalyticFunction q = make_quad(0.25);
  CHECK(q.series()[1] == Complex(1.0));
  CHECK(q.series()[2] == Complex(0.25));
  CHECK(q.series().degree() == 2);
}

TEST_CASE("make_poly enforces class A normalization") {
  const std::vector<Complex> bad_constant{0.1, 1.0, 0.2};
  const std::vector<Complex> bad_linear{0.0, 0.9, 0.2};
  for (const auto& coeffs : {bad_constant, bad_linear}) {
    try {
      (void)make_poly(coeffs);
      FAIL("expected invalid-function");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::InvalidFunction);
    }
  }
  const std::vector<Complex> ok{0.0, 1.0, -2.0};
  CHECK(make_poly(ok).series()[2] == Complex(-2.0));
}

TEST_CASE("synthesize_from_schwarz_C") {
  const auto zero_w = SchwarzFunction::from_coeffs(std::vector<Complex>{0.0});
  CHECK(max_coeff_diff(synthesize_from_schwarz_C(zero_w).series(), TaylorSeries::identity()) == 0.0);

  const auto half_z = SchwarzFunction::from_coeffs(std::vector<Complex>{0.0, 0.5});
  CHECK(max_coeff_diff(synthesize_from_schwarz_C(half_z).series(), TaylorSeries({0.0, 1.0, 0.25}, kDefaultOrder)) ==
        0.0);

  const auto z_sq = SchwarzFunction::from_coeffs(std::vector<Complex>{0.0, 0.0, 1.0});
  CHECK(max_coeff_diff(synthesize_from_schwarz_C(z_sq).series(),
                       TaylorSeries({0.0, 1.0, 0.0, 1.0 / 3.0}, kDefaultOrder)) < 1e-16);

  CHECK_THROWS_AS(SchwarzFunction::from_coeffs(std::vector<Complex>{0.1, 0.5}), Error);
}

TEST_CASE("synthesize_from_schwarz_Sstar") {
  const auto zero_w = SchwarzFunction::from_coeffs(std::vector<Complex>{0.0});
  CHECK(max_coeff_diff(synthesize_from_schwarz_Sstar(zero_w, 0.4).series(), TaylorSeries::identity()) == 0.0);

  const auto w = SchwarzFunction::from_coeffs(std::vector<Complex>{0.0, 1.0});
  CHECK(max_coeff_diff(synthesize_from_schwarz_Sstar(w, 0.0).series(), make_koebe().series()) < 1e-10);

  // alpha = 1/2: G = 1/(1-z), f = z/(1-z).
  const AnalyticFunction f = synthesize_from_schwarz_Sstar(w, 0.5);
  for (std::size_t k = 1; k <= f.order(); ++k) CHECK(std::abs(f.series()[k] - 1.0) < 1e-10);

  CHECK_THROWS_AS(synthesize_from_schwarz_Sstar(w, 1.0), Error);
  const auto too_big = SchwarzFunction::from_coeffs(std::vector<Complex>{0.0, 1.2});
  CHECK_THROWS_AS(synthesize_from_schwarz_Sstar(too_big, 0.0), Error);
}

TEST_CASE("eval_f / eval_fp / eval_fpp") {
  CHECK(std::abs(make_koebe().fp(0.5) - 12.0) < 1e-12);
  const AnalyticFunction q = make_quad(0.25);
  for (Complex z : testing::random_disk_points(10, 0.99, 3)) CHECK(q.fpp(z) == Complex(0.5));
  CHECK(make_identity().fpp({0.2, 0.7}) == Complex(0.0));
}

TEST_CASE("count_zeros") {
  const ZeroReport koebe = count_zeros(make_koebe(), 0.9);
  CHECK(koebe.winding == 1);
  CHECK(koebe.extra_zeros == 0);

  const std::vector<Complex> c{0.0, 1.0, -2.0};
  const ZeroReport two = count_zeros(make_poly(c), 0.8);
  CHECK(two.winding == 2);
  CHECK(two.extra_zeros == 1);

  CHECK(count_zeros(make_identity(), 0.5).winding == 1);

  try {
    (void)count_zeros(make_poly(c), 0.5);  // f(0.5) = 0 sits on the contour
    FAIL("expected indeterminate-contour");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::IndeterminateContour);
  }
}

TEST_CASE("property: closed forms agree with series on |z| <= 0.9") {
  // At order 64 the Koebe tail at |z| = 0.9 is O(1); order 512 brings it below 1e-12.
  std::vector<AnalyticFunction> fns;
  fns.push_back(make_identity());
  fns.push_back(make_koebe(512));
  fns.push_back(make_quad({0.3, -0.1}));
  fns.push_back(make_exp_scaled(0.5));
  fns.push_back(make_exp_scaled({-0.7, 0.4}));
  fns.push_back(synthesize_from_schwarz_Sstar(SchwarzFunction::from_coeffs(std::vector<Complex>{0.0, 0.5, 0.2}, 256), 0.3));
  const auto points = testing::random_disk_points(256, 0.9, 21);
  for (const auto& f : fns) {
    CAPTURE(to_string(f.spec().family));
    double worst = 0.0;
    for (Complex z : points) {
      worst = std::max(worst, std::abs(f.f(z) - f.series_f(z)));
    }
    CHECK(worst <= 1e-9);
  }
}

TEST_CASE("property: Schwarz-C substitution round-trips") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    auto c = testing::random_coeffs(40, rng);
    c[0] = 0.0;
    const auto w = SchwarzFunction::from_coeffs(c);
    const AnalyticFunction f = synthesize_from_schwarz_C(w);
    const TaylorSeries recovered = series_derivative(f.series()) - TaylorSeries::constant(1.0, f.order());
    CHECK(max_coeff_diff(recovered, w.series()) < 1e-12);
  }
}

TEST_CASE("property: Schwarz-S* substitution round-trips") {
  std::mt19937_64 rng(32);
  std::uniform_real_distribution<double> alpha_dist(0.0, 0.95);
  const std::size_t n = kDefaultOrder;
  for (int trial = 0; trial < 20; ++trial) {
    auto c = testing::random_coeffs(5, rng);
    c[0] = 0.0;
    TaylorSeries raw(c, n);
    raw = raw.scaled(0.9 / SchwarzFunction(raw).sampled_sup(0.999));
    const SchwarzFunction w(raw);
    const double alpha = alpha_dist(rng);
    const AnalyticFunction f = synthesize_from_schwarz_Sstar(w, alpha);
    const TaylorSeries one = TaylorSeries::constant(1.0, n);
    const TaylorSeries expected = (one + w.series().scaled(1.0 - 2.0 * alpha)) / (one - w.series());
    const TaylorSeries got = f.G_series();
    double worst = 0.0;
    for (std::size_t k = 0; k + 2 <= n; ++k) worst = std::max(worst, std::abs(got[k] - expected[k]));
    CHECK(worst < 1e-10);
  }
}

TEST_CASE("property: zero count is stable under small radius changes") {
  for (const auto& f : testing::catalog()) {
    for (double r : {0.3, 0.6, 0.85}) {
      const int base = count_zeros(f, r).winding;
      CHECK(count_zeros(f, r - 0.01).winding == base);
      CHECK(count_zeros(f, r + 0.01).winding == base);
    }
  }
}

TEST_CASE("random_polynomial_corpus is seeded and bounded") {
  const auto a = random_polynomial_corpus(50, 0.2, 7);
  const auto b = random_polynomial_corpus(50, 0.2, 7);
  CHECK(a == b);
  CHECK(a != random_polynomial_corpus(50, 0.2, 8));
  for (const auto& spec : a) {
    CHECK(spec.coeffs.size() >= 3);
    CHECK(spec.coeffs.size() <= 7);
    CHECK(spec.coeffs[0] == Complex(0.0));
    CHECK(spec.coeffs[1] == Complex(1.0));
    for (std::size_t k = 2; k < spec.coeffs.size(); ++k) CHECK(std::abs(spec.coeffs[k]) <= 0.2 / static_cast<double>(k));
  }
}
