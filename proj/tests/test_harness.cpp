#include <cmath>

#include "doctest.h"
#include "gft/error.hpp"
#include "gft/harness.hpp"
#include "test_support.hpp"

using namespace gft;

TEST_CASE("check_hypothesis") {
  const HarnessConfig cfg;
  const Verdict id = check_hypothesis(make_identity(), CriterionSpec::t2_minus(1, 1), cfg);
  CHECK(id.applicable);
  CHECK(id.holds);
  CHECK(id.value == 0.0);
  CHECK(id.margin == 0.5);

  const Verdict q = check_hypothesis(make_quad(0.1), CriterionSpec::t1(1, 1, 1), cfg);
  CHECK(q.holds);
  // f' = 1 + 0.2z; the functional peaks at z = r: 0.2r (1 + 0.4r)/(1 + 0.2r).
  CHECK(std::abs(q.value - 0.2 * 0.999 * (1.0 + 0.4 * 0.999) / (1.0 + 0.2 * 0.999)) < 1e-12);
  CHECK(q.margin == doctest::Approx(1.5 - q.value));

  const Verdict k = check_hypothesis(make_koebe(), CriterionSpec::t2_minus(1, 1), cfg);
  CHECK_FALSE(k.holds);
  CHECK(k.value >= 8.0);
  CHECK(k.margin < 0.0);

  // Negative exponents switch on the interior grid.
  const Verdict neg = check_hypothesis(make_quad(0.05), CriterionSpec::t2_minus(-1, 1), cfg);
  CHECK(neg.interior_scanned);
  CHECK_FALSE(id.interior_scanned);
}

TEST_CASE("G-based checks need a zero-free punctured disk") {
  const HarnessConfig cfg;
  const std::vector<Complex> c{0.0, 1.0, -0.8};  // second zero at 1.25, outside
  CHECK(check_hypothesis(make_poly(c), CriterionSpec::t2_minus(1, 1), cfg).applicable);

  const std::vector<Complex> inside{0.0, 1.0, -2.0};  // second zero at 0.5
  const AnalyticFunction f = make_poly(inside);
  const Verdict h = check_hypothesis(f, CriterionSpec::t2_minus(1, 1), cfg);
  CHECK_FALSE(h.applicable);
  CHECK_FALSE(h.holds);
  CHECK_FALSE(check_conclusion(f, CriterionSpec::memb_Sstar(0.0), cfg).applicable);
  // Membership in C does not involve z f'/f.
  CHECK(check_conclusion(f, CriterionSpec::memb_C(0.0), cfg).applicable);
  const ImplicationReport r = verify_implication(f, CriterionSpec::t4(1, 1), cfg);
  CHECK(r.status == Consistency::NotApplicable);
}

TEST_CASE("check_conclusion") {
  const HarnessConfig cfg;
  const Verdict ks = check_conclusion(make_koebe(), CriterionSpec::memb_Sstar(0.0), cfg);
  CHECK(ks.holds);
  CHECK(std::abs(ks.margin - 0.001 / 1.999) < 1e-8);

  const Verdict kc = check_conclusion(make_koebe(), CriterionSpec::memb_C(0.0), cfg);
  CHECK_FALSE(kc.holds);
  REQUIRE(kc.onset_radius.has_value());
  CHECK(*kc.onset_radius < 0.5);

  const AnalyticFunction e = make_exp_scaled(0.5);
  CHECK(check_conclusion(e, CriterionSpec::memb_STS(0.4), cfg).holds);
  const Verdict sts = check_conclusion(e, CriterionSpec::memb_STS(0.3), cfg);
  CHECK_FALSE(sts.holds);
  REQUIRE(sts.onset_radius.has_value());
  CHECK(std::abs(*sts.onset_radius - 2.0 * std::sin(0.15 * std::numbers::pi)) < 1e-5);
  CHECK(std::abs(sts.witness.real() + 0.2) < 0.3);  // fails near the negative real axis
}

TEST_CASE("verify_implication") {
  const HarnessConfig cfg;
  const AnalyticFunction id = make_identity();
  for (const auto& spec : standard_criteria()) {
    const ImplicationReport r = verify_implication(id, spec, cfg);
    CAPTURE(to_string(spec.kind));
    CHECK(r.conclusion.holds);
    CHECK(r.consistent);
    CHECK(r.status == Consistency::Consistent);
    // The T2_minus(-1, 1) functional at z -> 0 tends to a value >= 1, above its bound.
    if (!(spec.kind == CriterionKind::T2Minus && spec.beta < 0)) CHECK(r.hypothesis.holds);
  }

  const ImplicationReport k = verify_implication(make_koebe(), CriterionSpec::t2_minus(1, 1), cfg);
  CHECK_FALSE(k.hypothesis.holds);
  CHECK(k.consistent);

  const ImplicationReport q = verify_implication(make_quad(0.05), CriterionSpec::t4(1, 1), cfg);
  CHECK(q.hypothesis.holds);
  CHECK(q.hypothesis.bound == 0.25);
  CHECK(q.conclusion.holds);
  CHECK(q.consistent);

  // Oracle: the same functional scanned at doubled resolution.
  HarnessConfig fine = cfg;
  fine.scan.base_samples *= 2;
  CHECK(std::abs(check_hypothesis(make_quad(0.05), CriterionSpec::t4(1, 1), fine).value - q.hypothesis.value) < 1e-9);

  CHECK(verify_implication(make_identity(), CriterionSpec::t2_plus(3, -1), cfg).extended_range);
}

TEST_CASE("jack_probe") {
  const HarnessConfig cfg;
  const SchwarzFunction cube = SchwarzFunction::from_coeffs(std::vector<Complex>{0, 0, 0, 1});
  for (double r : {0.5, 0.9, 0.99}) {
    const JackResult j = jack_probe(cube, r, cfg);
    CHECK(std::abs(j.k_est - 3.0) < 1e-9);
    CHECK(j.im_residual < 1e-9);
    CHECK(std::abs(std::abs(j.z0) - r) < 1e-9);
  }

  const SchwarzFunction quadratic = SchwarzFunction::from_coeffs(std::vector<Complex>{0, 0.5, 0.5});
  const JackResult q = jack_probe(quadratic, 0.9, cfg);
  CHECK(std::abs(q.k_est - 2.8 / 1.9) < 1e-6);
  CHECK(std::abs(q.z0 - Complex(0.9)) < 1e-6);
  CHECK(q.contract_holds);

  const SchwarzFunction ident = SchwarzFunction::from_coeffs(std::vector<Complex>{0, 1});
  CHECK(jack_probe(ident, 0.7, cfg).k_est == 1.0);

  const SchwarzFunction zero = SchwarzFunction::from_coeffs(std::vector<Complex>{0});
  CHECK_THROWS_AS((void)jack_probe(zero, 0.5, cfg), Error);
}

TEST_CASE("corpus_run") {
  HarnessConfig cfg;
  const CorpusReport one = corpus_run({make_identity().spec()}, {CriterionSpec::t1(1, 1, 1)}, cfg);
  CHECK(one.counts.pairs == 1);
  CHECK(one.counts.consistent == 1);
  CHECK(one.counts.hypothesis_held == 1);

  const CorpusReport cls = corpus_run({make_koebe().spec(), make_quad(0.25).spec()},
                                      {CriterionSpec::memb_C(0.0)}, cfg);
  REQUIRE(cls.pairs.size() == 2);
  CHECK_FALSE(cls.pairs[0].conclusion.holds);
  CHECK(cls.pairs[1].conclusion.holds);
  CHECK(cls.counts.conclusion_held == 1);
  CHECK(cls.counts.consistent == 2);
  CHECK(cls.counts.hypothesis_held == 0);

  // Parallel runs aggregate in input order, identically to serial runs.
  const auto corpus = random_polynomial_corpus(12, 0.2, 5);
  cfg.workers = 1;
  const CorpusReport serial = corpus_run(corpus, standard_criteria(), cfg);
  cfg.workers = 4;
  const CorpusReport parallel = corpus_run(corpus, standard_criteria(), cfg);
  REQUIRE(serial.pairs.size() == parallel.pairs.size());
  for (std::size_t i = 0; i < serial.pairs.size(); ++i) {
    CHECK(serial.pairs[i].function == parallel.pairs[i].function);
    CHECK(serial.pairs[i].hypothesis.value == parallel.pairs[i].hypothesis.value);
    CHECK(serial.pairs[i].conclusion.value == parallel.pairs[i].conclusion.value);
  }
  CHECK(serial.counts.inconsistent == 0);
}

TEST_CASE("property: T2_minus(1,1) over a seeded polynomial corpus") {
  HarnessConfig cfg;
  cfg.workers = 0;
  const CorpusReport r = corpus_run(random_polynomial_corpus(100, 0.2, 2024), {CriterionSpec::t2_minus(1, 1)}, cfg);
  CHECK(r.counts.inconsistent == 0);
}

TEST_CASE("property: contrapositive coverage") {
  HarnessConfig cfg;
  cfg.workers = 0;
  // A wider radius makes conclusion failures common enough to exercise.
  const auto corpus = random_polynomial_corpus(40, 0.6, 99);
  std::size_t failures = 0;
  for (const auto& spec : corpus) {
    const AnalyticFunction f = make_function(spec);
    for (const auto& crit : standard_criteria()) {
      const Verdict c = check_conclusion(f, conclusion_class(crit), cfg);
      if (!c.applicable || c.holds) continue;
      ++failures;
      const Verdict h = check_hypothesis(f, crit, cfg);
      CHECK_FALSE((h.holds && h.margin > cfg.hard_margin));
    }
  }
  CHECK(failures > 0);
}

TEST_CASE("property: powers of |f' - 1| share the unit threshold (beta > 0)") {
  const HarnessConfig cfg;
  for (const auto& f : testing::catalog()) {
    CAPTURE(to_string(f.spec().family));
    const Verdict base = check_hypothesis(f, CriterionSpec::c2(1.0, 0.0), cfg);  // |f'-1| < 1
    for (double beta : {0.25, 0.5, 2.0, 3.0}) {
      const Verdict powered = check_hypothesis(f, CriterionSpec::c2(beta, 0.0), cfg);
      CHECK(powered.holds == base.holds);
    }
  }
}

TEST_CASE("property: synthesized functions belong to their classes") {
  const HarnessConfig cfg;
  const auto ws = random_schwarz_functions(12, 77);
  for (const auto& w : ws) {
    CHECK(w.sampled_sup(0.999) <= 0.99);
    CHECK(check_conclusion(synthesize_from_schwarz_C(w), CriterionSpec::memb_C(0.0), cfg).holds);
    for (double alpha : {0.0, 0.4}) {
      const AnalyticFunction f = synthesize_from_schwarz_Sstar(w, alpha);
      CHECK(check_conclusion(f, CriterionSpec::memb_Sstar(alpha), cfg).holds);
    }
  }
}
