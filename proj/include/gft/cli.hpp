#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "gft/documents.hpp"

namespace gft::cli {

enum class Command { Check, Conclusion, Implication, Jack, Corpus, Grid };

enum ExitStatus : int { kOk = 0, kNotSatisfied = 1, kUsage = 2, kNotApplicable = 3 };

/// Parsed command line. Document arguments are file paths or inline JSON.
struct RunRequest {
  Command command = Command::Check;
  std::optional<std::string> function;
  std::optional<std::string> criterion;
  std::optional<std::string> class_spec;
  std::optional<std::string> w;
  std::optional<double> r;
  std::optional<std::string> scan;
  std::uint64_t seed = 0;
  std::size_t count = 500;
  double rho = 0.2;
  std::optional<std::string> out;
  /// 0 = one per hardware thread.
  std::size_t workers = 0;
};

/// Grid quantity: a criterion functional or membership margin, or |G| / Re G.
struct GridSelector {
  enum class Kind { Criterion, AbsG, ReG };
  Kind kind = Kind::Criterion;
  CriterionSpec spec;
};

/// Bare names t1, t2_minus, t2_plus, t3, t4, memb_C, memb_Sstar, memb_STS,
/// absG, reG (default parameters), or a criterion document.
GridSelector grid_selector_from_arg(const std::string& arg);

Quantity grid_quantity(const AnalyticFunction& f, const GridSelector& selector);

/// "r,theta,value,flag" rows over the interior polar grid of `cfg`.
std::string grid_csv(const Quantity& q, const ScanConfig& cfg, std::size_t workers);

/// Parses argv (argv[0] is the program name). Returns nullopt after printing
/// help; throws Error(Parse) on usage errors.
std::optional<RunRequest> parse_args(int argc, const char* const* argv, std::ostream& out);

int run(const RunRequest& request, std::ostream& out, std::ostream& err);

/// parse_args + run; maps every usage or document error to status 2.
int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gft::cli
