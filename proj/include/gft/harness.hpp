#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gft/scanner.hpp"

namespace gft {

struct HarnessConfig {
  ScanConfig scan;
  /// Verdict tolerance on margins.
  double tau = 1e-9;
  /// A conclusion failure only counts against a hypothesis whose margin exceeds this.
  double hard_margin = 1e-6;
  /// Bisect for the radius where a failing conclusion first fails.
  bool locate_onset = true;
  std::size_t workers = 1;

  bool operator==(const HarnessConfig&) const = default;
};

struct Verdict {
  bool applicable = true;
  bool holds = false;
  /// sup of the functional (hypotheses) or inf of the margin (conclusions).
  double value = 0.0;
  /// Criterion bound for hypotheses; 0 for conclusions.
  double bound = 0.0;
  /// bound - sup for hypotheses, inf for conclusions.
  double margin = 0.0;
  Complex witness{};
  double witness_radius = 0.0;
  PointFlags flags{};
  bool monotone = true;
  bool interior_scanned = false;
  /// For failing conclusions: smallest radius at which the class test fails.
  std::optional<double> onset_radius;
  std::optional<Complex> onset_witness;
  std::string note;
};

enum class Consistency { Consistent, Marginal, Inconsistent, NotApplicable };
const char* to_string(Consistency c);

struct ImplicationReport {
  FunctionSpec function;
  CriterionSpec criterion;
  Verdict hypothesis;
  Verdict conclusion;
  Consistency status = Consistency::Consistent;
  /// NOT(hypothesis holds AND conclusion fails), with marginal hypotheses excused.
  bool consistent = true;
  bool extended_range = false;
};

struct JackResult {
  double r = 0.0;
  Complex z0{};
  double theta = 0.0;
  /// Re and |Im| of z0 w'(z0) / w(z0).
  double k_est = 0.0;
  double im_residual = 0.0;
  bool contract_holds = false;
};

inline constexpr double kJackTol = 1e-6;

/// Zero count of f on the outer scan radius; nullopt when the contour is indeterminate.
std::optional<ZeroReport> outer_zero_report(const AnalyticFunction& f, const HarnessConfig& cfg);

Verdict check_hypothesis(const AnalyticFunction& f, const CriterionSpec& spec, const HarnessConfig& cfg);
Verdict check_conclusion(const AnalyticFunction& f, const CriterionSpec& class_spec, const HarnessConfig& cfg);
ImplicationReport verify_implication(const AnalyticFunction& f, const CriterionSpec& spec,
                                     const HarnessConfig& cfg);

/// Locates the maximum z0 of |w| on |z| = r and measures z0 w'(z0)/w(z0).
JackResult jack_probe(const SchwarzFunction& w, double r, const HarnessConfig& cfg);

struct CorpusCounts {
  std::size_t pairs = 0;
  std::size_t consistent = 0;
  std::size_t marginal = 0;
  std::size_t inconsistent = 0;
  std::size_t not_applicable = 0;
  std::size_t hypothesis_held = 0;
  std::size_t conclusion_held = 0;
};

struct CorpusReport {
  std::vector<ImplicationReport> pairs;  // function-major, input order
  CorpusCounts counts;
};

CorpusReport corpus_run(const std::vector<FunctionSpec>& corpus, const std::vector<CriterionSpec>& criteria,
                        const HarnessConfig& cfg);

/// The criterion set of the standard consistency sweep.
std::vector<CriterionSpec> standard_criteria();

/// Seeded random polynomial Schwarz functions, rescaled so the scanned sup of
/// |w| on |z| = r equals `target_sup` (to rounding, never above).
std::vector<SchwarzFunction> random_schwarz_functions(std::size_t count, std::uint64_t seed,
                                                      double target_sup = 0.99, double r = 0.999,
                                                      std::size_t max_degree = 6,
                                                      std::size_t order = kDefaultOrder);

}  // namespace gft
