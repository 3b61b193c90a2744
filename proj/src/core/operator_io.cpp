#include "core/operator_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "core/error.hpp"

namespace apurity::oracle {

namespace {

using nlohmann::json;

BigInt read_integer(const json& v, const std::string& what) {
  if (v.is_number_integer()) return BigInt(v.get<std::int64_t>());
  if (v.is_string()) return parse_bigint(v.get<std::string>());
  fail(ErrorKind::InvalidArgument, "operator field '" + what + "' must be an integer");
}

int read_small(const json& v, const std::string& what) {
  const BigInt value = read_integer(v, what);
  require(value >= 0 && value <= 1000000, "operator field '" + what + "' out of range");
  return value.convert_to<int>();
}

Exponents read_exponents(const json& v, const std::string& what) {
  require(v.is_array(), "operator field '" + what + "' must be an array");
  Exponents out;
  for (const auto& e : v) out.push_back(read_small(e, what));
  return out;
}

}  // namespace

ContractionOperator parse_operator(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    fail(ErrorKind::InvalidArgument, std::string("operator document is not valid JSON: ") + e.what());
  }
  require(doc.is_object(), "operator document must be a JSON object");
  for (const char* field : {"n", "k", "terms"}) {
    require(doc.contains(field), std::string("operator document lacks '") + field + "'");
  }
  const int n = read_small(doc["n"], "n");
  const int k = read_small(doc["k"], "k");
  require(doc["terms"].is_array(), "operator field 'terms' must be an array");
  std::vector<OperatorTerm> terms;
  for (const auto& t : doc["terms"]) {
    require(t.is_object() && t.contains("coeff") && t.contains("alpha") && t.contains("beta"),
            "each operator term needs coeff, alpha and beta");
    terms.push_back({read_integer(t["coeff"], "coeff"), read_exponents(t["alpha"], "alpha"),
                     read_exponents(t["beta"], "beta")});
  }
  return ContractionOperator(n, k, std::move(terms));
}

ContractionOperator load_operator_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::Io, "cannot open operator file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_operator(buffer.str());
}

std::string operator_to_json(const ContractionOperator& op) {
  json doc;
  doc["n"] = op.n();
  doc["k"] = op.k();
  doc["terms"] = json::array();
  for (const auto& t : op.terms()) {
    doc["terms"].push_back({{"coeff", to_string(t.coeff)}, {"alpha", t.alpha}, {"beta", t.beta}});
  }
  return doc.dump();
}

}  // namespace apurity::oracle
