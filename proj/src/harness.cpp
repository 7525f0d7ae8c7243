#include "gft/harness.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "gft/error.hpp"
#include "gft/parallel.hpp"

namespace gft {
namespace {

Verdict not_applicable(std::string note) {
  Verdict v;
  v.applicable = false;
  v.note = std::move(note);
  return v;
}

// G-based tests need f != 0 on the punctured scan disk.
std::optional<Verdict> g_precondition(const AnalyticFunction& f, const HarnessConfig& cfg) {
  const auto zeros = outer_zero_report(f, cfg);
  if (!zeros) return not_applicable("f nearly vanishes on the outer scan circle");
  if (zeros->extra_zeros != 0) {
    return not_applicable("f has " + std::to_string(zeros->extra_zeros) +
                          " zero(s) besides the origin inside the scan disk; z f'/f is undefined");
  }
  return std::nullopt;
}

Verdict scan_hypothesis(const AnalyticFunction& f, const CriterionSpec& spec, const HarnessConfig& cfg) {
  const Quantity q = [&](Complex z) { return criterion_value(f, z, spec); };
  DiskScanOptions options{.interior = spec.has_negative_exponent(), .workers = 1};
  const SupEstimate sup = disk_sup(q, cfg.scan, ScanMode::Max, options);
  Verdict v;
  v.value = sup.value;
  v.bound = criterion_bound(spec);
  v.margin = v.bound - sup.value;
  v.holds = v.margin > cfg.tau;
  v.witness = sup.witness;
  v.witness_radius = sup.radius;
  v.flags = sup.flags;
  v.monotone = sup.monotone;
  v.interior_scanned = options.interior;
  return v;
}

Verdict scan_conclusion(const AnalyticFunction& f, const CriterionSpec& class_spec, const HarnessConfig& cfg) {
  const Quantity q = [&](Complex z) { return membership_value(f, z, class_spec); };
  const SupEstimate inf = disk_sup(q, cfg.scan, ScanMode::Min);
  Verdict v;
  v.value = inf.value;
  v.margin = inf.value;
  v.holds = inf.value > -cfg.tau;
  v.witness = inf.witness;
  v.witness_radius = inf.radius;
  v.flags = inf.flags;
  v.monotone = inf.monotone;
  if (!v.holds && cfg.locate_onset) {
    const auto& ladder = cfg.scan.radius_ladder;
    std::size_t first_fail = 0;
    while (first_fail < inf.per_radius.size() && inf.per_radius[first_fail].value > -cfg.tau) ++first_fail;
    if (first_fail < inf.per_radius.size()) {
      const double r_pass = first_fail == 0 ? ladder[0] * 1e-3 : ladder[first_fail - 1];
      const double r_fail = ladder[first_fail];
      const double onset = crossing_radius(q, r_pass, r_fail, -cfg.tau, cfg.scan, ScanMode::Min);
      v.onset_radius = onset;
      v.onset_witness = circle_extremum(q, onset, cfg.scan, ScanMode::Min).witness;
    }
  }
  return v;
}

template <typename Fn>
Verdict guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::UnscannableCircle || e.kind() == ErrorKind::Pole ||
        e.kind() == ErrorKind::IndeterminateContour) {
      return not_applicable(e.what());
    }
    throw;
  }
}

ImplicationReport combine(const AnalyticFunction& f, const CriterionSpec& spec, Verdict hyp, Verdict concl,
                          const HarnessConfig& cfg) {
  ImplicationReport report;
  report.function = f.spec();
  report.criterion = spec;
  report.extended_range = spec.extended_range();
  if (!hyp.applicable || !concl.applicable) {
    report.status = Consistency::NotApplicable;
  } else if (hyp.holds && !concl.holds) {
    report.status = hyp.margin > cfg.hard_margin ? Consistency::Inconsistent : Consistency::Marginal;
  } else {
    report.status = Consistency::Consistent;
  }
  report.consistent = report.status != Consistency::Inconsistent;
  report.hypothesis = std::move(hyp);
  report.conclusion = std::move(concl);
  return report;
}

}  // namespace

const char* to_string(Consistency c) {
  switch (c) {
    case Consistency::Consistent: return "consistent";
    case Consistency::Marginal: return "marginal";
    case Consistency::Inconsistent: return "inconsistent";
    case Consistency::NotApplicable: return "not_applicable";
  }
  return "unknown";
}

std::optional<ZeroReport> outer_zero_report(const AnalyticFunction& f, const HarnessConfig& cfg) {
  try {
    return count_zeros(f, cfg.scan.outer_radius());
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::IndeterminateContour) return std::nullopt;
    throw;
  }
}

Verdict check_hypothesis(const AnalyticFunction& f, const CriterionSpec& spec, const HarnessConfig& cfg) {
  spec.validate();
  if (spec.is_membership()) throw Error(ErrorKind::InvalidSpec, "check_hypothesis: membership kind given");
  if (spec.uses_G()) {
    if (auto na = g_precondition(f, cfg)) return *na;
  }
  return guarded([&] { return scan_hypothesis(f, spec, cfg); });
}

Verdict check_conclusion(const AnalyticFunction& f, const CriterionSpec& class_spec, const HarnessConfig& cfg) {
  class_spec.validate();
  if (!class_spec.is_membership()) throw Error(ErrorKind::InvalidSpec, "check_conclusion: need a membership kind");
  if (class_spec.uses_G()) {
    if (auto na = g_precondition(f, cfg)) return *na;
  }
  return guarded([&] { return scan_conclusion(f, class_spec, cfg); });
}

ImplicationReport verify_implication(const AnalyticFunction& f, const CriterionSpec& spec,
                                     const HarnessConfig& cfg) {
  Verdict hyp = check_hypothesis(f, spec, cfg);
  Verdict concl = check_conclusion(f, conclusion_class(spec), cfg);
  return combine(f, spec, std::move(hyp), std::move(concl), cfg);
}

JackResult jack_probe(const SchwarzFunction& w, double r, const HarnessConfig& cfg) {
  if (!(r > 0.0 && r < 1.0)) throw Error(ErrorKind::ContractViolation, "jack_probe: need 0 < r < 1");
  if (w.series().degree() == 0) throw Error(ErrorKind::DegenerateProbe, "jack_probe: w is identically zero");
  const Quantity modulus = [&](Complex z) { return PointValue{std::abs(w.eval(z)), z, {}}; };
  const CircleExtremum peak = circle_extremum(modulus, r, cfg.scan, ScanMode::Max);

  // d/dtheta log|w(r e^{i theta})| = -Im(z w'/w): polish theta to its sign change.
  auto slope = [&](double theta) {
    const Complex z = std::polar(r, theta);
    return (z * w.eval_prime(z) / w.eval(z)).imag();
  };
  double theta = peak.theta;
  const double step = 2.0 * std::numbers::pi / static_cast<double>(cfg.scan.base_samples);
  double lo = theta - step;
  double hi = theta + step;
  double s_lo = slope(lo);
  const double s_hi = slope(hi);
  if (s_lo < 0.0 && s_hi > 0.0) {
    for (int iter = 0; iter < 200 && hi - lo > 0.0; ++iter) {
      const double mid = 0.5 * (lo + hi);
      if (mid == lo || mid == hi) break;
      const double s_mid = slope(mid);
      if (s_mid < 0.0) {
        lo = mid;
        s_lo = s_mid;
      } else {
        hi = mid;
      }
    }
    const double polished = 0.5 * (lo + hi);
    const double gain = std::abs(w.eval(std::polar(r, polished))) - peak.value;
    if (gain >= -4.0 * std::numeric_limits<double>::epsilon() * peak.value) theta = polished;
  }

  JackResult out{.r = r, .theta = theta};
  out.z0 = std::polar(r, theta);
  const Complex w0 = w.eval(out.z0);
  if (std::abs(w0) < kPoleThreshold) throw Error(ErrorKind::DegenerateProbe, "jack_probe: w(z0) vanishes");
  const Complex ratio = out.z0 * w.eval_prime(out.z0) / w0;
  out.k_est = ratio.real();
  out.im_residual = std::abs(ratio.imag());
  out.contract_holds = out.im_residual <= kJackTol && out.k_est >= 1.0 - kJackTol;
  return out;
}

CorpusReport corpus_run(const std::vector<FunctionSpec>& corpus, const std::vector<CriterionSpec>& criteria,
                        const HarnessConfig& cfg) {
  for (const auto& spec : criteria) spec.validate();
  cfg.scan.validate();
  const std::size_t m = criteria.size();
  CorpusReport report;
  report.pairs.resize(corpus.size() * m);

  parallel_for(corpus.size(), cfg.workers, [&](std::size_t i) {
    std::optional<AnalyticFunction> f;
    std::string build_error;
    try {
      f.emplace(make_function(corpus[i]));
    } catch (const Error& e) {
      build_error = e.what();
    }
    if (!f) {
      for (std::size_t j = 0; j < m; ++j) {
        ImplicationReport& r = report.pairs[i * m + j];
        r.function = corpus[i];
        r.criterion = criteria[j];
        r.hypothesis = not_applicable(build_error);
        r.conclusion = not_applicable(build_error);
        r.status = Consistency::NotApplicable;
      }
      return;
    }
    // One zero count and one conclusion scan per class, shared across criteria.
    std::optional<Verdict> g_gate;
    bool g_checked = false;
    std::vector<std::pair<CriterionSpec, Verdict>> conclusions;
    auto gate = [&]() -> const std::optional<Verdict>& {
      if (!g_checked) {
        g_gate = g_precondition(*f, cfg);
        g_checked = true;
      }
      return g_gate;
    };
    auto conclusion_for = [&](const CriterionSpec& cls) -> Verdict {
      for (const auto& [c, v] : conclusions) {
        if (c == cls) return v;
      }
      Verdict v = cls.uses_G() && gate() ? *gate() : guarded([&] { return scan_conclusion(*f, cls, cfg); });
      conclusions.emplace_back(cls, v);
      return v;
    };
    for (std::size_t j = 0; j < m; ++j) {
      const CriterionSpec& spec = criteria[j];
      if (spec.is_membership()) {
        // Conclusion-only entry: nothing is assumed, so nothing can be contradicted.
        Verdict none;
        none.note = "no hypothesis: class membership check only";
        report.pairs[i * m + j] = combine(*f, spec, std::move(none), conclusion_for(spec), cfg);
        continue;
      }
      Verdict hyp = spec.uses_G() && gate() ? *gate() : guarded([&] { return scan_hypothesis(*f, spec, cfg); });
      Verdict concl = conclusion_for(conclusion_class(spec));
      report.pairs[i * m + j] = combine(*f, spec, std::move(hyp), std::move(concl), cfg);
    }
  });

  CorpusCounts& c = report.counts;
  for (const auto& p : report.pairs) {
    ++c.pairs;
    switch (p.status) {
      case Consistency::Consistent: ++c.consistent; break;
      case Consistency::Marginal: ++c.marginal; break;
      case Consistency::Inconsistent: ++c.inconsistent; break;
      case Consistency::NotApplicable: ++c.not_applicable; break;
    }
    if (p.hypothesis.applicable && p.hypothesis.holds) ++c.hypothesis_held;
    if (p.conclusion.applicable && p.conclusion.holds) ++c.conclusion_held;
  }
  return report;
}

std::vector<CriterionSpec> standard_criteria() {
  return {
      CriterionSpec::t1(1.0, 1.0, 1.0),     CriterionSpec::t1(0.5, 2.0, 0.0),
      CriterionSpec::c1(0.5),               CriterionSpec::c2(1.0, 1.0),
      CriterionSpec::t2_minus(1.0, 1.0),    CriterionSpec::t2_plus(1.0, 1.0),
      CriterionSpec::t2_minus(-1.0, 1.0),   CriterionSpec::t3(0.5, 1.0, 1.0),
      CriterionSpec::t4(1.0, 1.0),
  };
}

std::vector<SchwarzFunction> random_schwarz_functions(std::size_t count, std::uint64_t seed, double target_sup,
                                                      double r, std::size_t max_degree, std::size_t order) {
  if (max_degree < 1 || max_degree > order) {
    throw Error(ErrorKind::ContractViolation, "random_schwarz_functions: need 1 <= max_degree <= order");
  }
  std::mt19937_64 rng(seed);
  auto unit = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
  HarnessConfig probe_cfg;
  std::vector<SchwarzFunction> out;
  out.reserve(count);
  while (out.size() < count) {
    const std::size_t degree = 1 + static_cast<std::size_t>(unit() * static_cast<double>(max_degree));
    std::vector<Complex> c(degree + 1);
    for (std::size_t k = 1; k <= degree; ++k) c[k] = std::polar(std::sqrt(unit()), 2.0 * std::numbers::pi * unit());
    const TaylorSeries raw(c, order);
    const Quantity modulus = [&](Complex z) { return PointValue{std::abs(raw.eval(z)), z, {}}; };
    const double sup = circle_extremum(modulus, r, probe_cfg.scan, ScanMode::Max).value;
    if (!(sup > 0.0)) continue;
    const double scale = target_sup * (1.0 - 1e-12) / sup;
    out.emplace_back(raw.scaled(scale));
  }
  return out;
}

}  // namespace gft
