#include "gft/documents.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace gft {
namespace {

[[noreturn]] void fail(const std::string& key, const std::string& message) { throw DocumentError(key, message); }

const json& require_field(const json& j, const std::string& key) {
  if (!j.is_object()) fail(key, "expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) fail(key, "missing field '" + key + "'");
  return *it;
}

double number_field(const json& j, const std::string& key) {
  const json& v = require_field(j, key);
  if (!v.is_number()) fail(key, "field '" + key + "' must be a number");
  return v.get<double>();
}

double number_or(const json& j, const std::string& key, double fallback) {
  return j.contains(key) ? number_field(j, key) : fallback;
}

std::size_t count_field(const json& j, const std::string& key, std::size_t fallback) {
  if (!j.contains(key)) return fallback;
  const json& v = j.at(key);
  if (!v.is_number_integer() || v.get<long long>() < 0) fail(key, "field '" + key + "' must be a nonnegative integer");
  return v.get<std::size_t>();
}

void reject_unknown(const json& j, std::initializer_list<const char*> allowed) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (std::none_of(allowed.begin(), allowed.end(), [&](const char* a) { return it.key() == a; })) {
      fail(it.key(), "unknown field '" + it.key() + "'");
    }
  }
}

std::vector<Complex> coeffs_from_json(const json& j, const std::string& key) {
  const json& arr = require_field(j, key);
  if (!arr.is_array()) fail(key, "field '" + key + "' must be an array of [re, im] pairs");
  std::vector<Complex> out;
  for (const auto& c : arr) out.push_back(complex_from_json(c, key));
  return out;
}

json coeffs_to_json(std::span<const Complex> coeffs) {
  json arr = json::array();
  for (const auto& c : coeffs) arr.push_back(complex_to_json(c));
  return arr;
}

// Trailing zeros carry no information in a coefficient list.
std::span<const Complex> trimmed(const TaylorSeries& s) { return s.coeffs().first(s.degree() + 1); }

json witness_to_json(Complex z) { return json{{"re", number_to_json(z.real())}, {"im", number_to_json(z.imag())}}; }

}  // namespace

// --- documents ---------------------------------------------------------------

std::size_t line_of_key(const std::string& text, const std::string& key) {
  const auto pos = text.find("\"" + key + "\"");
  if (pos == std::string::npos) return 1;
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<long>(pos), '\n'));
}

Document load_document(const std::string& path_or_inline) {
  Document doc;
  const auto first = path_or_inline.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (path_or_inline[first] == '{' || path_or_inline[first] == '[')) {
    doc.source = "<inline>";
    doc.text = path_or_inline;
  } else {
    doc.source = path_or_inline;
    std::ifstream in(path_or_inline);
    if (!in) throw Error(ErrorKind::Parse, path_or_inline + ":1:1: cannot open file");
    std::ostringstream ss;
    ss << in.rdbuf();
    doc.text = ss.str();
  }
  try {
    doc.value = json::parse(doc.text);
  } catch (const json::parse_error& e) {
    // Byte offset -> line and column.
    const std::size_t offset = std::min<std::size_t>(e.byte, doc.text.size());
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i + 1 < offset; ++i) {
      if (doc.text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw Error(ErrorKind::Parse,
                doc.source + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + e.what());
  }
  return doc;
}

void rethrow_anchored(const Document& doc, const DocumentError& e) {
  throw Error(ErrorKind::Parse,
              doc.source + ":" + std::to_string(line_of_key(doc.text, e.key())) + ": " + e.what());
}

// --- scalars -----------------------------------------------------------------

json number_to_json(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return v;
}

json complex_to_json(Complex c) { return json::array({c.real(), c.imag()}); }

Complex complex_from_json(const json& j, const std::string& key) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
    return {j[0].get<double>(), j[1].get<double>()};
  }
  fail(key, "field '" + key + "' must be a number or a [re, im] pair");
}

// --- functions ---------------------------------------------------------------

json to_json(const FunctionSpec& spec) {
  json j{{"family", to_string(spec.family)}};
  switch (spec.family) {
    case Family::Identity:
    case Family::Koebe: break;
    case Family::Quad: j["c"] = complex_to_json(spec.param); break;
    case Family::ExpScaled: j["a"] = complex_to_json(spec.param); break;
    case Family::Poly:
    case Family::Series: j["coeffs"] = coeffs_to_json(spec.coeffs); break;
    case Family::SchwarzC: j["w"] = json{{"coeffs", coeffs_to_json(spec.coeffs)}}; break;
    case Family::SchwarzSstar:
      j["alpha"] = spec.alpha;
      j["w"] = json{{"coeffs", coeffs_to_json(spec.coeffs)}};
      break;
  }
  if (spec.order != kDefaultOrder) j["order"] = spec.order;
  return j;
}

FunctionSpec function_spec_from_json(const json& j) {
  const json& family_field = require_field(j, "family");
  if (!family_field.is_string()) fail("family", "field 'family' must be a string");
  FunctionSpec spec;
  try {
    spec.family = family_from_string(family_field.get<std::string>());
  } catch (const Error& e) {
    fail("family", e.what());
  }
  spec.order = count_field(j, "order", kDefaultOrder);
  switch (spec.family) {
    case Family::Identity:
    case Family::Koebe: reject_unknown(j, {"family", "order"}); break;
    case Family::Quad:
      reject_unknown(j, {"family", "order", "c"});
      spec.param = complex_from_json(require_field(j, "c"), "c");
      break;
    case Family::ExpScaled:
      reject_unknown(j, {"family", "order", "a"});
      spec.param = complex_from_json(require_field(j, "a"), "a");
      break;
    case Family::Poly:
    case Family::Series:
      reject_unknown(j, {"family", "order", "coeffs"});
      spec.coeffs = coeffs_from_json(j, "coeffs");
      break;
    case Family::SchwarzC:
      reject_unknown(j, {"family", "order", "w"});
      spec.coeffs = coeffs_from_json(require_field(j, "w"), "coeffs");
      break;
    case Family::SchwarzSstar:
      reject_unknown(j, {"family", "order", "w", "alpha"});
      spec.alpha = number_field(j, "alpha");
      spec.coeffs = coeffs_from_json(require_field(j, "w"), "coeffs");
      break;
  }
  return spec;
}

json schwarz_to_json(const SchwarzFunction& w) { return json{{"coeffs", coeffs_to_json(trimmed(w.series()))}}; }

SchwarzFunction schwarz_from_json(const json& j, std::size_t order) {
  reject_unknown(j, {"coeffs", "order"});
  const auto coeffs = coeffs_from_json(j, "coeffs");
  order = count_field(j, "order", order);
  try {
    return SchwarzFunction::from_coeffs(coeffs, order);
  } catch (const Error& e) {
    fail("coeffs", e.what());
  }
}

// --- criteria ----------------------------------------------------------------

json to_json(const CriterionSpec& s) {
  json j{{"kind", to_string(s.kind)}};
  switch (s.kind) {
    case CriterionKind::T1: j.update({{"beta", s.beta}, {"gamma", s.gamma}, {"delta", s.delta}}); break;
    case CriterionKind::C1: j["lambda"] = s.lambda; break;
    case CriterionKind::C2:
    case CriterionKind::T2Minus:
    case CriterionKind::T2Plus: j.update({{"beta", s.beta}, {"gamma", s.gamma}}); break;
    case CriterionKind::T3: j.update({{"alpha", s.alpha}, {"beta", s.beta}, {"gamma", s.gamma}}); break;
    case CriterionKind::T4: j.update({{"alpha", s.alpha}, {"beta", s.beta}, {"mu", s.mu}}); break;
    case CriterionKind::MembC:
    case CriterionKind::MembSstar: j["alpha"] = s.alpha; break;
    case CriterionKind::MembSTS: j["mu"] = s.mu; break;
  }
  return j;
}

CriterionSpec criterion_from_json(const json& j) {
  const json& kind_field = require_field(j, "kind");
  if (!kind_field.is_string()) fail("kind", "field 'kind' must be a string");
  CriterionKind kind;
  try {
    kind = criterion_kind_from_string(kind_field.get<std::string>());
  } catch (const Error& e) {
    fail("kind", e.what());
  }
  CriterionSpec s;
  switch (kind) {
    case CriterionKind::T1:
      reject_unknown(j, {"kind", "beta", "gamma", "delta"});
      s = CriterionSpec::t1(number_field(j, "beta"), number_field(j, "gamma"), number_field(j, "delta"));
      break;
    case CriterionKind::C1:
      reject_unknown(j, {"kind", "lambda"});
      s = CriterionSpec::c1(number_field(j, "lambda"));
      break;
    case CriterionKind::C2:
      reject_unknown(j, {"kind", "beta", "gamma"});
      s = CriterionSpec::c2(number_field(j, "beta"), number_field(j, "gamma"));
      break;
    case CriterionKind::T2Minus:
      reject_unknown(j, {"kind", "beta", "gamma"});
      s = CriterionSpec::t2_minus(number_field(j, "beta"), number_field(j, "gamma"));
      break;
    case CriterionKind::T2Plus:
      reject_unknown(j, {"kind", "beta", "gamma"});
      s = CriterionSpec::t2_plus(number_field(j, "beta"), number_field(j, "gamma"));
      break;
    case CriterionKind::T3:
      reject_unknown(j, {"kind", "alpha", "beta", "gamma"});
      s = CriterionSpec::t3(number_field(j, "alpha"), number_field(j, "beta"), number_field(j, "gamma"));
      break;
    case CriterionKind::T4: {
      reject_unknown(j, {"kind", "alpha", "beta", "mu"});
      s = CriterionSpec::t4(number_field(j, "alpha"), number_field(j, "beta"));
      if (j.contains("mu") && std::abs(number_field(j, "mu") - s.mu) > 1e-12) {
        fail("mu", "field 'mu' must equal beta/(alpha+beta)");
      }
      break;
    }
    case CriterionKind::MembC:
      reject_unknown(j, {"kind", "alpha"});
      s = CriterionSpec::memb_C(number_or(j, "alpha", 0.0));
      break;
    case CriterionKind::MembSstar:
      reject_unknown(j, {"kind", "alpha"});
      s = CriterionSpec::memb_Sstar(number_or(j, "alpha", 0.0));
      break;
    case CriterionKind::MembSTS:
      reject_unknown(j, {"kind", "mu"});
      s = CriterionSpec::memb_STS(number_or(j, "mu", 1.0));
      break;
  }
  try {
    s.validate();
  } catch (const Error& e) {
    fail("kind", e.what());
  }
  return s;
}

// --- configuration -----------------------------------------------------------

json to_json(const ScanConfig& cfg) {
  json j{{"radius_ladder", cfg.radius_ladder},
         {"base_samples", cfg.base_samples},
         {"refine_tol", cfg.refine_tol}};
  j["interior_grid"] = cfg.interior_grid
                           ? json{{"radii", cfg.interior_grid->radii}, {"angles", cfg.interior_grid->angles}}
                           : json(nullptr);
  return j;
}

json to_json(const HarnessConfig& cfg) {
  json j = to_json(cfg.scan);
  j["tau"] = cfg.tau;
  j["hard_margin"] = cfg.hard_margin;
  j["locate_onset"] = cfg.locate_onset;
  return j;
}

HarnessConfig harness_config_from_json(const json& j) {
  if (!j.is_object()) fail("", "scan document must be a JSON object");
  reject_unknown(j, {"radius_ladder", "base_samples", "refine_tol", "interior_grid", "tau", "hard_margin",
                     "locate_onset"});
  HarnessConfig cfg;
  if (j.contains("radius_ladder")) {
    const json& ladder = j.at("radius_ladder");
    if (!ladder.is_array()) fail("radius_ladder", "field 'radius_ladder' must be an array of numbers");
    cfg.scan.radius_ladder.clear();
    for (const auto& r : ladder) {
      if (!r.is_number()) fail("radius_ladder", "field 'radius_ladder' must be an array of numbers");
      cfg.scan.radius_ladder.push_back(r.get<double>());
    }
  }
  cfg.scan.base_samples = count_field(j, "base_samples", cfg.scan.base_samples);
  cfg.scan.refine_tol = number_or(j, "refine_tol", cfg.scan.refine_tol);
  if (j.contains("interior_grid")) {
    const json& g = j.at("interior_grid");
    if (g.is_null()) {
      cfg.scan.interior_grid.reset();
    } else {
      if (!g.is_object()) fail("interior_grid", "field 'interior_grid' must be an object or null");
      reject_unknown(g, {"radii", "angles"});
      cfg.scan.interior_grid = GridDensity{count_field(g, "radii", 64), count_field(g, "angles", 1024)};
    }
  }
  cfg.tau = number_or(j, "tau", cfg.tau);
  cfg.hard_margin = number_or(j, "hard_margin", cfg.hard_margin);
  if (j.contains("locate_onset")) {
    if (!j.at("locate_onset").is_boolean()) fail("locate_onset", "field 'locate_onset' must be a boolean");
    cfg.locate_onset = j.at("locate_onset").get<bool>();
  }
  try {
    cfg.scan.validate();
  } catch (const Error& e) {
    fail("radius_ladder", e.what());
  }
  return cfg;
}

// --- reports -----------------------------------------------------------------

json to_json(const Verdict& v) {
  json j{{"applicable", v.applicable}};
  if (!v.applicable) {
    j["note"] = v.note;
    return j;
  }
  j.update({{"holds", v.holds},
            {"value", number_to_json(v.value)},
            {"bound", number_to_json(v.bound)},
            {"margin", number_to_json(v.margin)},
            {"witness", witness_to_json(v.witness)},
            {"witness_radius", v.witness_radius},
            {"flags", v.flags.names()},
            {"monotone", v.monotone},
            {"interior_scanned", v.interior_scanned}});
  if (v.onset_radius) j["onset_radius"] = *v.onset_radius;
  if (v.onset_witness) j["onset_witness"] = witness_to_json(*v.onset_witness);
  if (!v.note.empty()) j["note"] = v.note;
  return j;
}

json to_json(const ImplicationReport& r) {
  json j{{"function", to_json(r.function)},
         {"criterion", to_json(r.criterion)},
         {"hypothesis", to_json(r.hypothesis)},
         {"conclusion", to_json(r.conclusion)},
         {"status", to_string(r.status)},
         {"consistent", r.consistent}};
  if (r.extended_range) j["extended_range"] = true;
  return j;
}

json to_json(const JackResult& r) {
  return json{{"r", r.r},
              {"z0", witness_to_json(r.z0)},
              {"theta", r.theta},
              {"k_est", number_to_json(r.k_est)},
              {"im_residual", number_to_json(r.im_residual)},
              {"contract_holds", r.contract_holds}};
}

json to_json(const CorpusCounts& c) {
  return json{{"pairs", c.pairs},
              {"consistent", c.consistent},
              {"marginal", c.marginal},
              {"inconsistent", c.inconsistent},
              {"not_applicable", c.not_applicable},
              {"hypothesis_held", c.hypothesis_held},
              {"conclusion_held", c.conclusion_held}};
}

}  // namespace gft
