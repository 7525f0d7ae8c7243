#pragma once

#include "json.hpp"
#include <string>

#include "gft/error.hpp"
#include "gft/harness.hpp"

namespace gft {

using json = nlohmann::json;

/// Parse failure inside a document; `key` names the offending field when known
/// so callers can anchor the message to a line of the source text.
class DocumentError : public Error {
 public:
  DocumentError(std::string key, const std::string& what)
      : Error(ErrorKind::Parse, what), key_(std::move(key)) {}
  const std::string& key() const noexcept { return key_; }

 private:
  std::string key_;
};

/// A JSON document read from a file or given inline (text starting with '{' or '[').
struct Document {
  std::string source;
  std::string text;
  json value;
};

/// Throws Error(Parse) with a "source:line:column: message" text.
Document load_document(const std::string& path_or_inline);

/// Wraps a DocumentError raised while interpreting `doc` with a line anchor.
[[noreturn]] void rethrow_anchored(const Document& doc, const DocumentError& e);
std::size_t line_of_key(const std::string& text, const std::string& key);

json complex_to_json(Complex c);
Complex complex_from_json(const json& j, const std::string& key);
/// Finite numbers as numbers; infinities and NaN as the strings "inf", "-inf", "nan".
json number_to_json(double v);

json to_json(const FunctionSpec& spec);
FunctionSpec function_spec_from_json(const json& j);
json schwarz_to_json(const SchwarzFunction& w);
SchwarzFunction schwarz_from_json(const json& j, std::size_t order = kDefaultOrder);

json to_json(const CriterionSpec& spec);
CriterionSpec criterion_from_json(const json& j);

json to_json(const ScanConfig& cfg);
json to_json(const HarnessConfig& cfg);
/// Reads both the scan fields and the optional harness tolerances.
HarnessConfig harness_config_from_json(const json& j);

json to_json(const Verdict& v);
json to_json(const ImplicationReport& r);
json to_json(const JackResult& r);
json to_json(const CorpusCounts& c);

}  // namespace gft
