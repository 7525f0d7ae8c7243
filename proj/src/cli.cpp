#include "gft/cli.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <map>

#include "CLI11.hpp"
#include "gft/error.hpp"

namespace gft::cli {
namespace {

struct Usage : Error {
  explicit Usage(const std::string& what) : Error(ErrorKind::Parse, what) {}
};

template <typename T, typename Parse>
T interpret(const Document& doc, Parse&& parse) {
  try {
    return parse(doc.value);
  } catch (const DocumentError& e) {
    rethrow_anchored(doc, e);
  }
}

const std::string& need(const std::optional<std::string>& arg, const char* flag) {
  if (!arg) throw Usage(std::string("missing required flag ") + flag);
  return *arg;
}

FunctionSpec load_function(const std::string& arg) {
  const Document doc = load_document(arg);
  return interpret<FunctionSpec>(doc, [](const json& j) { return function_spec_from_json(j); });
}

CriterionSpec load_criterion(const std::string& arg) {
  const Document doc = load_document(arg);
  return interpret<CriterionSpec>(doc, [](const json& j) { return criterion_from_json(j); });
}

CriterionSpec load_class(const std::string& arg) {
  const auto first = arg.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && arg[first] != '{' && arg.find('.') == std::string::npos &&
      arg.find('/') == std::string::npos) {
    // Bare kind name with default parameters.
    return criterion_from_json(json{{"kind", arg}});
  }
  CriterionSpec spec = load_criterion(arg);
  if (!spec.is_membership()) throw Usage("--class needs a memb_C, memb_Sstar or memb_STS document");
  return spec;
}

HarnessConfig load_scan(const std::optional<std::string>& arg, std::size_t workers) {
  HarnessConfig cfg;
  if (arg) {
    const Document doc = load_document(*arg);
    cfg = interpret<HarnessConfig>(doc, [](const json& j) { return harness_config_from_json(j); });
  }
  cfg.workers = workers;
  return cfg;
}

AnalyticFunction build_function(const FunctionSpec& spec) {
  try {
    return make_function(spec);
  } catch (const Error& e) {
    throw Error(ErrorKind::InvalidFunction, std::string("invalid function: ") + e.what());
  }
}

void emit(const RunRequest& request, const std::string& text, std::ostream& out) {
  if (request.out) {
    std::ofstream file(*request.out, std::ios::binary);
    if (!file) throw Usage("cannot write " + *request.out);
    file << text;
  } else {
    out << text;
  }
}

void emit(const RunRequest& request, const json& report, std::ostream& out) {
  emit(request, report.dump(2) + "\n", out);
}

const char* verdict_word(const Verdict& v) {
  if (!v.applicable) return "not_applicable";
  return v.holds ? "holds" : "fails";
}

int verdict_status(const Verdict& v) {
  if (!v.applicable) return kNotApplicable;
  return v.holds ? kOk : kNotSatisfied;
}

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

int run_check(const RunRequest& rq, std::ostream& out) {
  const FunctionSpec fspec = load_function(need(rq.function, "--function"));
  const CriterionSpec spec = load_criterion(need(rq.criterion, "--criterion"));
  if (spec.is_membership()) throw Usage("check needs a hypothesis criterion; use `conclusion` for memb_* kinds");
  const HarnessConfig cfg = load_scan(rq.scan, rq.workers);
  const AnalyticFunction f = build_function(fspec);
  const Verdict v = check_hypothesis(f, spec, cfg);
  json report{{"command", "check"},
              {"input", {{"function", to_json(fspec)}, {"criterion", to_json(spec)}, {"scan", to_json(cfg)}}},
              {"verdict", to_json(v)},
              {"result", verdict_word(v)}};
  emit(rq, report, out);
  return verdict_status(v);
}

int run_conclusion(const RunRequest& rq, std::ostream& out) {
  const FunctionSpec fspec = load_function(need(rq.function, "--function"));
  const CriterionSpec cls = load_class(need(rq.class_spec, "--class"));
  const HarnessConfig cfg = load_scan(rq.scan, rq.workers);
  const AnalyticFunction f = build_function(fspec);
  const Verdict v = check_conclusion(f, cls, cfg);
  json report{{"command", "conclusion"},
              {"input", {{"function", to_json(fspec)}, {"class", to_json(cls)}, {"scan", to_json(cfg)}}},
              {"verdict", to_json(v)},
              {"result", verdict_word(v)}};
  emit(rq, report, out);
  return verdict_status(v);
}

int run_implication(const RunRequest& rq, std::ostream& out) {
  const FunctionSpec fspec = load_function(need(rq.function, "--function"));
  const CriterionSpec spec = load_criterion(need(rq.criterion, "--criterion"));
  if (spec.is_membership()) throw Usage("implication needs a hypothesis criterion");
  const HarnessConfig cfg = load_scan(rq.scan, rq.workers);
  const AnalyticFunction f = build_function(fspec);
  const ImplicationReport r = verify_implication(f, spec, cfg);
  json report{{"command", "implication"},
              {"input", {{"function", to_json(fspec)}, {"criterion", to_json(spec)}, {"scan", to_json(cfg)}}},
              {"report", to_json(r)}};
  emit(rq, report, out);
  switch (r.status) {
    case Consistency::NotApplicable: return kNotApplicable;
    case Consistency::Inconsistent: return kNotSatisfied;
    default: return kOk;
  }
}

int run_jack(const RunRequest& rq, std::ostream& out) {
  const Document doc = load_document(need(rq.w, "--w"));
  const SchwarzFunction w = interpret<SchwarzFunction>(doc, [](const json& j) { return schwarz_from_json(j); });
  if (!rq.r) throw Usage("missing required flag --r");
  const HarnessConfig cfg = load_scan(rq.scan, rq.workers);
  const JackResult result = jack_probe(w, *rq.r, cfg);
  json report{{"command", "jack"},
              {"input", {{"w", schwarz_to_json(w)}, {"r", *rq.r}, {"scan", to_json(cfg)}}},
              {"result", to_json(result)}};
  emit(rq, report, out);
  return result.contract_holds ? kOk : kNotSatisfied;
}

int run_corpus(const RunRequest& rq, std::ostream& out) {
  std::vector<FunctionSpec> corpus;
  json input;
  if (rq.function) {
    const Document doc = load_document(*rq.function);
    corpus = interpret<std::vector<FunctionSpec>>(doc, [](const json& j) {
      std::vector<FunctionSpec> specs;
      if (j.is_array()) {
        for (const auto& item : j) specs.push_back(function_spec_from_json(item));
      } else {
        specs.push_back(function_spec_from_json(j));
      }
      return specs;
    });
    json echo = json::array();
    for (const auto& s : corpus) echo.push_back(to_json(s));
    input["functions"] = echo;
  } else {
    if (!(rq.rho >= 0.0)) throw Usage("--rho must be nonnegative");
    corpus = random_polynomial_corpus(rq.count, rq.rho, rq.seed);
    input.update({{"seed", rq.seed}, {"count", rq.count}, {"rho", rq.rho}, {"max_degree", 6}});
  }
  std::vector<CriterionSpec> criteria;
  if (rq.criterion) {
    const Document doc = load_document(*rq.criterion);
    criteria = interpret<std::vector<CriterionSpec>>(doc, [](const json& j) {
      std::vector<CriterionSpec> specs;
      if (j.is_array()) {
        for (const auto& item : j) specs.push_back(criterion_from_json(item));
      } else {
        specs.push_back(criterion_from_json(j));
      }
      return specs;
    });
  } else {
    criteria = standard_criteria();
  }
  json criteria_echo = json::array();
  for (const auto& c : criteria) criteria_echo.push_back(to_json(c));
  input["criteria"] = criteria_echo;
  const HarnessConfig cfg = load_scan(rq.scan, rq.workers);
  input["scan"] = to_json(cfg);

  const CorpusReport result = corpus_run(corpus, criteria, cfg);
  json pairs = json::array();
  for (const auto& p : result.pairs) pairs.push_back(to_json(p));
  json aggregate = to_json(result.counts);
  aggregate["config"] = input;
  json report{{"command", "corpus"}, {"input", input}, {"pairs", pairs}, {"aggregate", aggregate}};
  emit(rq, report, out);
  return result.counts.inconsistent == 0 ? kOk : kNotSatisfied;
}

int run_grid(const RunRequest& rq, std::ostream& out) {
  const FunctionSpec fspec = load_function(need(rq.function, "--function"));
  GridSelector selector;
  if (rq.criterion) {
    selector = grid_selector_from_arg(*rq.criterion);
  } else if (rq.class_spec) {
    selector = GridSelector{GridSelector::Kind::Criterion, load_class(*rq.class_spec)};
  } else {
    throw Usage("grid needs --criterion (quantity name or criterion document) or --class");
  }
  const HarnessConfig cfg = load_scan(rq.scan, rq.workers);
  if (!cfg.scan.interior_grid) throw Usage("grid needs an interior_grid density in the scan document");
  const AnalyticFunction f = build_function(fspec);
  emit(rq, grid_csv(grid_quantity(f, selector), cfg.scan, cfg.workers), out);
  return kOk;
}

}  // namespace

GridSelector grid_selector_from_arg(const std::string& arg) {
  static const std::map<std::string, GridSelector> bare = {
      {"t1", {GridSelector::Kind::Criterion, CriterionSpec::t1(1.0, 1.0, 1.0)}},
      {"t2_minus", {GridSelector::Kind::Criterion, CriterionSpec::t2_minus(1.0, 1.0)}},
      {"t2_plus", {GridSelector::Kind::Criterion, CriterionSpec::t2_plus(1.0, 1.0)}},
      {"t3", {GridSelector::Kind::Criterion, CriterionSpec::t3(0.5, 1.0, 1.0)}},
      {"t4", {GridSelector::Kind::Criterion, CriterionSpec::t4(1.0, 1.0)}},
      {"memb_C", {GridSelector::Kind::Criterion, CriterionSpec::memb_C(0.0)}},
      {"memb_Sstar", {GridSelector::Kind::Criterion, CriterionSpec::memb_Sstar(0.0)}},
      {"memb_STS", {GridSelector::Kind::Criterion, CriterionSpec::memb_STS(1.0)}},
      {"absG", {GridSelector::Kind::AbsG, {}}},
      {"reG", {GridSelector::Kind::ReG, {}}},
  };
  if (auto it = bare.find(arg); it != bare.end()) return it->second;
  return GridSelector{GridSelector::Kind::Criterion, load_criterion(arg)};
}

Quantity grid_quantity(const AnalyticFunction& f, const GridSelector& selector) {
  switch (selector.kind) {
    case GridSelector::Kind::AbsG:
    case GridSelector::Kind::ReG: {
      const bool modulus = selector.kind == GridSelector::Kind::AbsG;
      return [&f, modulus](Complex z) {
        const GValues g = eval_G(f, z);
        if (g.pole) {
          return PointValue{modulus ? std::numeric_limits<double>::infinity()
                                    : std::numeric_limits<double>::quiet_NaN(),
                            z, PointFlags::FunctionZero};
        }
        return PointValue{modulus ? std::abs(g.G) : g.G.real(), z, {}};
      };
    }
    case GridSelector::Kind::Criterion: {
      const CriterionSpec spec = selector.spec;
      return [&f, spec](Complex z) { return criterion_value(f, z, spec); };
    }
  }
  throw Error(ErrorKind::InvalidSpec, "unknown grid quantity");
}

std::string grid_csv(const Quantity& q, const ScanConfig& cfg, std::size_t workers) {
  std::string text = "r,theta,value,flag\n";
  for (const GridSample& s : polar_grid(q, cfg, workers)) {
    text += format_number(s.r);
    text += ',';
    text += format_number(s.theta);
    text += ',';
    text += format_number(s.value.value);
    text += ',';
    text += s.value.flags.joined();
    text += '\n';
  }
  return text;
}

std::optional<RunRequest> parse_args(int argc, const char* const* argv, std::ostream& out) {
  RunRequest rq;
  CLI::App app{"Sufficient-condition checks for starlike and related classes on the unit disk", "gft"};
  app.require_subcommand(1);

  auto scan_opt = [&](CLI::App* cmd) {
    cmd->add_option("--scan", rq.scan, "scan configuration document (path or inline JSON)");
    cmd->add_option("--out", rq.out, "write the report here instead of stdout");
  };
  auto* check = app.add_subcommand("check", "scan a criterion functional against its bound");
  check->add_option("--function", rq.function, "function document")->required();
  check->add_option("--criterion", rq.criterion, "criterion document")->required();
  scan_opt(check);

  auto* conclusion = app.add_subcommand("conclusion", "test class membership over the scanned disk");
  conclusion->add_option("--function", rq.function, "function document")->required();
  conclusion->add_option("--class", rq.class_spec, "memb_* document or bare kind name")->required();
  scan_opt(conclusion);

  auto* implication = app.add_subcommand("implication", "check hypothesis and conclusion together");
  implication->add_option("--function", rq.function, "function document")->required();
  implication->add_option("--criterion", rq.criterion, "criterion document")->required();
  scan_opt(implication);

  auto* jack = app.add_subcommand("jack", "probe z0 w'(z0)/w(z0) at the maximum of |w| on |z| = r");
  jack->add_option("--w", rq.w, "Schwarz function document {\"coeffs\": [[re, im], ...]}")->required();
  jack->add_option("--r", rq.r, "circle radius in (0, 1)")->required();
  scan_opt(jack);

  auto* corpus = app.add_subcommand("corpus", "verify implications over a function corpus");
  corpus->add_option("--function", rq.function, "explicit corpus: function document or array");
  corpus->add_option("--criterion", rq.criterion, "criterion or memb_* document, or an array (default: standard set)");
  corpus->add_option("--seed", rq.seed, "random corpus seed");
  corpus->add_option("--count", rq.count, "random corpus size");
  corpus->add_option("--rho", rq.rho, "coefficient scale: |c_k| <= rho/k");
  scan_opt(corpus);

  auto* grid = app.add_subcommand("grid", "dump a quantity over the polar grid as CSV");
  grid->add_option("--function", rq.function, "function document")->required();
  grid->add_option("--criterion", rq.criterion, "quantity name or criterion document");
  grid->add_option("--class", rq.class_spec, "membership document or bare kind name");
  scan_opt(grid);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return std::nullopt;
  } catch (const CLI::ParseError& e) {
    throw Usage(e.what());
  }
  const std::pair<CLI::App*, Command> commands[] = {
      {check, Command::Check}, {conclusion, Command::Conclusion}, {implication, Command::Implication},
      {jack, Command::Jack},   {corpus, Command::Corpus},         {grid, Command::Grid},
  };
  for (auto [cmd, which] : commands) {
    if (cmd->parsed()) rq.command = which;
  }
  if (const char* env = std::getenv("GFT_SCAN_THREADS")) {
    try {
      rq.workers = static_cast<std::size_t>(std::stoul(env));
    } catch (const std::exception&) {
      throw Usage(std::string("GFT_SCAN_THREADS must be a nonnegative integer, got '") + env + "'");
    }
  }
  return rq;
}

int run(const RunRequest& rq, std::ostream& out, std::ostream& err) {
  try {
    switch (rq.command) {
      case Command::Check: return run_check(rq, out);
      case Command::Conclusion: return run_conclusion(rq, out);
      case Command::Implication: return run_implication(rq, out);
      case Command::Jack: return run_jack(rq, out);
      case Command::Corpus: return run_corpus(rq, out);
      case Command::Grid: return run_grid(rq, out);
    }
  } catch (const DocumentError& e) {
    err << "gft: <document>:" << line_of_key("", e.key()) << ": " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "gft: " << to_string(e.kind()) << ": " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::optional<RunRequest> rq;
  try {
    rq = parse_args(argc, argv, out);
  } catch (const Error& e) {
    err << "gft: usage: " << e.what() << "\n";
    return kUsage;
  }
  if (!rq) return kOk;
  return run(*rq, out, err);
}

}  // namespace gft::cli
