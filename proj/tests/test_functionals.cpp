#include <cmath>
#include <limits>
#include <numbers>

#include "doctest.h"
#include "gft/error.hpp"
#include "gft/functionals.hpp"
#include "test_support.hpp"

using namespace gft;

TEST_CASE("G") {
  CHECK(std::abs(G(make_koebe(), 0.5) - 3.0) < 1e-14);
  for (const auto& f : testing::catalog()) CHECK(G(f, 0.0) == Complex(1.0));
  CHECK(std::abs(G(make_exp_scaled(0.5), {0.0, 0.8}) - Complex(1.0, 0.4)) < 1e-15);

  const std::vector<Complex> c{0.0, 1.0, -2.0};
  try {
    (void)G(make_poly(c), 0.5);
    FAIL("expected a pole");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Pole);
  }
}

TEST_CASE("G_prime") {
  CHECK(std::abs(G_prime(make_koebe(), 0.5) - 8.0) < 1e-13);
  for (Complex z : testing::random_disk_points(8, 0.9, 1)) {
    CHECK(G_prime(make_identity(), z) == Complex(0.0));
    CHECK(G_prime(make_exp_scaled(0.5), z) == Complex(0.5));
  }
  // At the origin the linear coefficient f''(0)/2 is returned.
  const std::vector<Complex> c{0.0, 1.0, {0.3, 0.1}, 0.2};
  CHECK(std::abs(G_prime(make_poly(c), 0.0) - Complex(0.3, 0.1)) < 1e-16);
}

TEST_CASE("quotient route matches closed forms") {
  // quad(c) as a bare polynomial has no closed form, so G comes from the f/z quotient.
  const Complex c{0.3, -0.2};
  const AnalyticFunction closed = make_quad(c);
  const std::vector<Complex> coeffs{0.0, 1.0, c};
  const AnalyticFunction bare = make_poly(coeffs);
  for (Complex z : testing::random_disk_points(64, 0.999, 2)) {
    CHECK(std::abs(G(closed, z) - G(bare, z)) < 1e-13);
    CHECK(std::abs(G_prime(closed, z) - G_prime(bare, z)) < 1e-13);
  }
  // And the G series agrees with the quotient where it converges well.
  const TaylorSeries gs = bare.G_series();
  const TaylorSeries gps = series_derivative(gs);
  for (Complex z : testing::random_disk_points(64, 0.5, 3)) {
    CHECK(std::abs(gs.eval(z) - G(bare, z)) < 1e-12);
    CHECK(std::abs(gps.eval(z) - G_prime(bare, z)) < 1e-12);
  }
}

TEST_CASE("t1_value and t1_bound") {
  const PointValue v = t1_value(make_quad(0.25), 0.5, CriterionSpec::t1(1, 1, 1));
  CHECK(v.value == doctest::Approx(0.3).epsilon(1e-14));
  CHECK(v.flags.empty());
  for (Complex z : testing::random_disk_points(8, 0.9, 4)) {
    CHECK(t1_value(make_identity(), z, CriterionSpec::t1(0.7, 2.0, 0.3)).value == 0.0);
    if (z != Complex{}) CHECK(t1_value(make_identity(), z, CriterionSpec::t1(0.0, 1.0, 0.0)).value == 0.0);
  }
  CHECK(t1_bound(CriterionSpec::t1(0, 1, 1)) == 1.5);
  CHECK(t1_bound(CriterionSpec::t1(0, 2, 0)) == 0.25);
  CHECK(t1_bound(CriterionSpec::t1(0, 0, 7.0)) == 1.0);
  CHECK_THROWS_AS(t1_bound(CriterionSpec::t1(0, 1, -0.5)), Error);
}

TEST_CASE("power conventions") {
  PointFlags flags;
  CHECK(flagged_pow(0.0, 0.0, flags) == 1.0);
  CHECK(flags.empty());
  CHECK(flagged_pow(0.0, 2.0, flags) == 0.0);
  CHECK(std::isinf(flagged_pow(0.0, -1.0, flags)));
  CHECK(flags.has(PointFlags::ZeroBase));

  // f'(z) = 0 at z = -1/(2c) for quad(c); with gamma > 0 the T1 value is +inf.
  const AnalyticFunction q = make_quad(0.625);
  const PointValue v = t1_value(q, -0.8, CriterionSpec::t1(1, 1, 1));
  CHECK(std::isinf(v.value));
  CHECK(v.flags.has(PointFlags::DerivativeZero));
}

TEST_CASE("t2_value and t2_bound") {
  CHECK(t2_value(make_koebe(), 0.5, CriterionSpec::t2_minus(1, 1)).value == doctest::Approx(8.0).epsilon(1e-14));
  for (Complex z : testing::random_disk_points(8, 0.9, 5)) {
    CHECK(t2_value(make_identity(), z, CriterionSpec::t2_minus(1, 0)).value == 0.0);
    CHECK(t2_value(make_identity(), z, CriterionSpec::t2_plus(0, 1)).value == 0.0);
  }
  CHECK(t2_value(make_exp_scaled(0.5), 0.6, CriterionSpec::t2_minus(0, 1)).value ==
        doctest::Approx(0.3).epsilon(1e-15));
  CHECK(t2_bound(CriterionSpec::t2_minus(0, 1)) == 0.5);
  CHECK(t2_bound(CriterionSpec::t2_minus(0, 0)) == 1.0);
  CHECK(t2_bound(CriterionSpec::t2_minus(0, 3)) == 0.125);

  // Pole of G propagates as a flagged infinity.
  const std::vector<Complex> c{0.0, 1.0, -2.0};
  const PointValue p = t2_value(make_poly(c), 0.5, CriterionSpec::t2_minus(1, 1));
  CHECK(std::isinf(p.value));
  CHECK(p.flags.has(PointFlags::FunctionZero));
}

TEST_CASE("t3_bound") {
  CHECK(t3_bound(CriterionSpec::t3(0.0, 1.3, 0.7)) == t2_bound(CriterionSpec::t2_minus(1.3, 0.7)));
  CHECK(t3_bound(CriterionSpec::t3(0.5, 1, 1)) == 0.125);
  CHECK(t3_bound(CriterionSpec::t3(0.5, 2, 0)) == 0.25);
  CHECK_THROWS_AS(t3_bound(CriterionSpec::t3(1.0, 1, 1)), Error);
}

TEST_CASE("t4_value and t4_bound") {
  CHECK(t4_value(make_exp_scaled(0.5), 0.8, CriterionSpec::t4(1, 1)).value == doctest::Approx(0.56).epsilon(1e-14));
  for (Complex z : testing::random_disk_points(8, 0.9, 6)) {
    CHECK(t4_value(make_identity(), z, CriterionSpec::t4(1, 1)).value == 0.0);
  }
  CHECK(t4_value(make_koebe(), 0.5, CriterionSpec::t4(1, 1)).value == doctest::Approx(12.0).epsilon(1e-14));
  CHECK(t4_bound(CriterionSpec::t4(0, 1)) == 0.5);
  CHECK(t4_bound(CriterionSpec::t4(1, 1)) == 0.25);
  CHECK(t4_bound(CriterionSpec::t4(3, 1)) == 0.125);
  CHECK_THROWS_AS(t4_bound(CriterionSpec::t4(1, 0)), Error);
}

TEST_CASE("membership_value") {
  const PointValue k = membership_value(make_koebe(), -0.9, CriterionSpec::memb_Sstar(0));
  CHECK(k.value == doctest::Approx(0.1 / 1.9).epsilon(1e-14));

  for (Complex z : testing::random_disk_points(8, 0.9, 7)) {
    CHECK(membership_value(make_identity(), z, CriterionSpec::memb_C(0.3)).value == doctest::Approx(0.7));
    CHECK(membership_value(make_identity(), z, CriterionSpec::memb_Sstar(0.3)).value == doctest::Approx(0.7));
    CHECK(membership_value(make_identity(), z, CriterionSpec::memb_STS(0.4)).value == doctest::Approx(1.0));
  }

  // Oracle: |1 + 0.4i|^{1/0.3} cos(atan(0.4)/0.3), evaluated at 30 digits with mpmath.
  const PointValue s = membership_value(make_exp_scaled(0.5), {0.0, 0.8}, CriterionSpec::memb_STS(0.3));
  CHECK(std::abs(s.value - 0.38144375362983520828) < 1e-13);

  // G on the negative real axis is a flagged failure.
  const AnalyticFunction e = make_exp_scaled(-2.0);  // G = 1 - 2z
  const PointValue cut = membership_value(e, 0.75, CriterionSpec::memb_STS(0.5));
  CHECK(cut.flags.has(PointFlags::BranchCut));
  CHECK(cut.value == -std::numeric_limits<double>::infinity());
}

TEST_CASE("property: T1 specializes to C1 and C2") {
  const auto points = testing::random_disk_points(64, 0.95, 8);
  for (const auto& f : testing::catalog()) {
    CAPTURE(to_string(f.spec().family));
    for (double lambda : {0.0, 0.5, 1.0, 1.7}) {
      for (Complex z : points) {
        const double general = t1_value(f, z, CriterionSpec::t1(1.0 - lambda, lambda, 1.0)).value;
        const double special = c1_value(f, z, CriterionSpec::c1(lambda)).value;
        if (std::isinf(general) || std::isinf(special)) {
          CHECK(general == special);
        } else {
          CHECK(std::abs(general - special) <= 1e-12 * std::max(1.0, std::abs(general)));
        }
      }
    }
    for (auto [beta, gamma] : {std::pair{1.0, 1.0}, {0.5, 2.0}, {0.0, 1.0}, {2.0, 0.0}}) {
      for (Complex z : points) {
        const double general = t1_value(f, z, CriterionSpec::t1(beta, gamma, 0.0)).value;
        const double special = c2_value(f, z, CriterionSpec::c2(beta, gamma)).value;
        CHECK(std::abs(general - special) <= 1e-12 * std::max(1.0, std::abs(general)));
      }
    }
  }
  CHECK(t1_bound(CriterionSpec::t1(0.0, 1.0, 1.0)) == 1.5);
  for (double lambda : {0.0, 0.5, 2.0}) {
    CHECK(t1_bound(CriterionSpec::t1(1.0 - lambda, lambda, 1.0)) == c1_bound(CriterionSpec::c1(lambda)));
  }
  CHECK(t1_bound(CriterionSpec::t1(1.0, 3.0, 0.0)) == c2_bound(CriterionSpec::c2(1.0, 3.0)));
}

TEST_CASE("property: T3 at alpha = 0 is T2 minus") {
  const auto points = testing::random_disk_points(64, 0.95, 9);
  for (const auto& f : testing::catalog()) {
    for (Complex z : points) {
      CHECK(t2_value(f, z, CriterionSpec::t3(0.0, 1.5, 0.5)).value ==
            t2_value(f, z, CriterionSpec::t2_minus(1.5, 0.5)).value);
    }
  }
  CHECK(t3_bound(CriterionSpec::t3(0.0, 1.5, 0.5)) == t2_bound(CriterionSpec::t2_minus(1.5, 0.5)));
}

TEST_CASE("property: STS(1) margin equals S*(0) margin") {
  const auto points = testing::random_disk_points(64, 0.95, 10);
  for (const auto& f : testing::catalog()) {
    for (Complex z : points) {
      const PointValue sts = membership_value(f, z, CriterionSpec::memb_STS(1.0));
      if (sts.flags.has(PointFlags::BranchCut)) continue;
      const PointValue star = membership_value(f, z, CriterionSpec::memb_Sstar(0.0));
      CHECK(std::abs(sts.value - star.value) <= 1e-12 * std::max(1.0, std::abs(star.value)));
    }
  }
}

TEST_CASE("property: Schwarz-C proof identity z f''/f' = z w'/(1 + w)") {
  std::mt19937_64 rng(41);
  const auto points = testing::random_disk_points(64, 0.95, 11);
  for (int trial = 0; trial < 10; ++trial) {
    auto c = testing::random_coeffs(6, rng);
    c[0] = 0.0;
    TaylorSeries raw(c, kDefaultOrder);
    const SchwarzFunction w(raw.scaled(0.95 / SchwarzFunction(raw).sampled_sup(0.999)));
    const AnalyticFunction f = synthesize_from_schwarz_C(w);
    for (Complex z : points) {
      const Complex lhs = z * f.fpp(z) / f.fp(z);
      const Complex rhs = z * w.eval_prime(z) / (1.0 + w.eval(z));
      CHECK(std::abs(lhs - rhs) < 1e-10);
    }
  }
}

TEST_CASE("property: Schwarz-S* proof identity G' = 2 w'/(1 - w)^2") {
  // G' here comes from the termwise derivative of the z f'/f series of the
  // synthesized f, independent of the closed form built from w.
  std::mt19937_64 rng(42);
  const auto points = testing::random_disk_points(64, 0.6, 12);
  for (int trial = 0; trial < 10; ++trial) {
    auto c = testing::random_coeffs(6, rng);
    c[0] = 0.0;
    TaylorSeries raw(c, kDefaultOrder);
    const SchwarzFunction w(raw.scaled(0.95 / SchwarzFunction(raw).sampled_sup(0.999)));
    const AnalyticFunction f = synthesize_from_schwarz_Sstar(w, 0.0);
    const TaylorSeries gp = series_derivative(f.G_series());
    for (Complex z : points) {
      const Complex d = 1.0 - w.eval(z);
      CHECK(std::abs(gp.eval(z) - 2.0 * w.eval_prime(z) / (d * d)) < 1e-10);
      CHECK(std::abs(G_prime(f, z) - gp.eval(z)) < 1e-10);
    }
  }
}

TEST_CASE("CriterionSpec validation") {
  CHECK_THROWS_AS(CriterionSpec::t1(-0.1, 1, 1).validate(), Error);
  CHECK_THROWS_AS(CriterionSpec::t1(1, 1, -0.5).validate(), Error);
  CHECK_THROWS_AS(CriterionSpec::c1(-1).validate(), Error);
  CHECK_THROWS_AS(CriterionSpec::t2_minus(-3, 1).validate(), Error);
  CHECK_NOTHROW(CriterionSpec::t2_minus(-2, 1).validate());
  CHECK_THROWS_AS(CriterionSpec::t3(1.0, 1, 1).validate(), Error);
  CHECK_THROWS_AS(CriterionSpec::t4(-1, 1).validate(), Error);
  CHECK_THROWS_AS(CriterionSpec::t4(1, 0).validate(), Error);
  CHECK_THROWS_AS(CriterionSpec::memb_STS(0.0).validate(), Error);
  CHECK(CriterionSpec::t4(3, 1).mu == 0.25);
  CHECK(CriterionSpec::t2_minus(-1, 1).has_negative_exponent());
  CHECK(CriterionSpec::c1(1.5).has_negative_exponent());
  CHECK_FALSE(CriterionSpec::t1(1, 1, 1).has_negative_exponent());
  CHECK(CriterionSpec::t2_plus(3, -1).extended_range());
}
