#include "core/service.hpp"

#include <fstream>

#include "core/asymptotics.hpp"
#include "core/cohomology.hpp"
#include "core/error.hpp"
#include "core/operator_io.hpp"

namespace apurity {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

std::string s(std::int64_t v) { return std::to_string(v); }
std::string s(const BigInt& v) { return to_string(v); }
std::string s(const Rational& v) { return to_string(v); }

json labels_json(const std::vector<rep::IrrepLabel>& labels) {
  json out = json::array();
  for (const auto& l : labels) out.push_back({s(l.lambda1), s(l.lambda2)});
  return out;
}

std::string labels_text(const json& labels) {
  std::string out;
  for (const auto& l : labels) {
    if (!out.empty()) out += " ";
    out += "(" + l[0].get<std::string>() + "," + l[1].get<std::string>() + ")";
  }
  return out;
}

oracle::ContractionOperator resolve_operator(const std::optional<oracle::ContractionOperator>& op, int n, int k) {
  if (op) {
    require(n == 0 || n == op->n(), "--n disagrees with the operator file");
    require(k == 0 || k == op->k(), "--k disagrees with the operator file");
    return *op;
  }
  return oracle::special_fiber_operator(n, k);
}

std::string operator_label(const std::optional<oracle::ContractionOperator>& op) {
  return op ? op->canonical() : std::string("special");
}

}  // namespace

Service::Service(RunConfig config) : config_(std::move(config)) {
  set_size_cap(config_.size_cap);
  if (!config_.cache_path.empty()) set_cache_path(config_.cache_path);
}

void Service::set_size_cap(std::uint64_t cap) {
  require(cap > 0, "size cap must be positive");
  config_.size_cap = cap;
}

void Service::set_cache_path(const std::string& path) {
  config_.cache_path = path;
  cache_ = path.empty() ? nullptr : std::make_shared<ResultCache>(path);
}

oracle::OracleOptions Service::oracle_options() const {
  return {{config_.seed, config_.exact_threshold}, config_.size_cap};
}

ordered_json Service::header(const char* command) const {
  ordered_json doc;
  doc["command"] = command;
  doc["seed"] = std::to_string(config_.seed);
  return doc;
}

std::string Service::predict_key(int n, int k, std::int64_t A, std::int64_t B) {
  return "predict|n=" + s(n) + "|k=" + s(k) + "|A=" + s(A) + "|B=" + s(B);
}

std::string Service::oracle_key(const oracle::ContractionOperator& op, std::int64_t A, std::int64_t B) {
  return "oracle|" + op.canonical() + "|A=" + s(A) + "|B=" + s(B);
}

json Service::fresh_predict(int n, int k, std::int64_t A, std::int64_t B) const {
  const auto a = rep::predict_map_analysis(n, k, A, B);
  return {{"source_dim", s(a.source_dim)},       {"target_dim", s(a.target_dim)},
          {"kernel_dim", s(a.kernel_dim)},       {"cokernel_dim", s(a.cokernel_dim)},
          {"kernel_labels", labels_json(a.kernel_labels)}, {"cokernel_labels", labels_json(a.cokernel_labels)}};
}

json Service::fresh_oracle(const oracle::ContractionOperator& op, std::int64_t A, std::int64_t B) const {
  const auto r = oracle::oracle_rank(op, A, B, oracle_options());
  return {{"dim_source", s(r.dim_source)}, {"dim_target", s(r.dim_target)}, {"rank", s(r.rank)},
          {"kernel_dim", s(r.kernel_dim)}, {"cokernel_dim", s(r.cokernel_dim)}, {"certified", r.certified}};
}

json Service::predict_value(int n, int k, std::int64_t A, std::int64_t B) const {
  const auto key = predict_key(n, k, A, B);
  if (cache_) {
    if (auto hit = cache_->lookup(key)) return *hit;
  }
  auto value = fresh_predict(n, k, A, B);
  if (cache_) cache_->store(key, {{"engine", "predict"}, {"n", n}, {"k", k}, {"A", A}, {"B", B}}, value);
  return value;
}

json Service::oracle_value(const oracle::ContractionOperator& op, std::int64_t A, std::int64_t B) const {
  const auto key = oracle_key(op, A, B);
  if (cache_) {
    if (auto hit = cache_->lookup(key)) return *hit;
  }
  auto value = fresh_oracle(op, A, B);
  if (cache_) {
    cache_->store(key, {{"engine", "oracle"}, {"operator", oracle::operator_to_json(op)}, {"A", A}, {"B", B}}, value);
  }
  return value;
}

json Service::recompute(const ResultCache::Record& record) const {
  const auto& p = record.params;
  const std::string engine = p.value("engine", "");
  if (engine == "predict") {
    const int n = p.at("n"), k = p.at("k");
    const std::int64_t A = p.at("A"), B = p.at("B");
    require(record.key == predict_key(n, k, A, B), "cache key does not match its params");
    return fresh_predict(n, k, A, B);
  }
  if (engine == "oracle") {
    const auto op = oracle::parse_operator(p.at("operator").get<std::string>());
    const std::int64_t A = p.at("A"), B = p.at("B");
    require(record.key == oracle_key(op, A, B), "cache key does not match its params");
    return fresh_oracle(op, A, B);
  }
  fail(ErrorKind::InvalidArgument, "cache record with unknown engine '" + engine + "'");
}

Report Service::bott(int n, std::int64_t d) const {
  const auto h = cohomology::bott_cohomology(n, d);
  Report r;
  r.doc = header("bott");
  r.doc["n"] = s(n);
  r.doc["d"] = s(d);
  r.header = {"q", "h"};
  json values = json::array();
  for (std::size_t q = 0; q < h.values.size(); ++q) {
    values.push_back(s(h.values[q]));
    r.rows.push_back({s(static_cast<std::int64_t>(q)), s(h.values[q])});
  }
  r.doc["h"] = values;
  return r;
}

Report Service::product(int n, std::int64_t a1, std::int64_t a2) const {
  const auto h = cohomology::kunneth_cohomology(n, {a1, a2});
  Report r;
  r.doc = header("product");
  r.doc["n"] = s(n);
  r.doc["a1"] = s(a1);
  r.doc["a2"] = s(a2);
  r.header = {"q", "h"};
  json values = json::array();
  for (std::size_t q = 0; q < h.values.size(); ++q) {
    values.push_back(s(h.values[q]));
    r.rows.push_back({s(static_cast<std::int64_t>(q)), s(h.values[q])});
  }
  r.doc["h"] = values;
  r.doc["euler_characteristic"] = s(cohomology::euler_characteristic(n, {a1, a2}));
  return r;
}

Report Service::decompose(int n, std::int64_t A, std::int64_t B) const {
  const auto dec = rep::pieri_decompose(n, A, B);
  Report r;
  r.doc = header("decompose");
  r.doc["n"] = s(n);
  r.doc["A"] = s(A);
  r.doc["B"] = s(B);
  r.header = {"i", "lambda1", "lambda2", "dimension"};
  json comps = json::array();
  for (std::size_t i = 0; i < dec.components.size(); ++i) {
    const auto& c = dec.components[i];
    const auto dim = s(rep::weyl_dimension(n, c));
    comps.push_back({{"i", s(static_cast<std::int64_t>(i))}, {"lambda1", s(c.lambda1)}, {"lambda2", s(c.lambda2)},
                     {"dimension", dim}});
    r.rows.push_back({s(static_cast<std::int64_t>(i)), s(c.lambda1), s(c.lambda2), dim});
  }
  r.doc["components"] = comps;
  r.doc["total_dimension"] = s(dec.total_dimension());
  r.doc["tensor_dimension"] = s(binomial(A + n, n) * binomial(B + n, n));
  return r;
}

Report Service::predict(int n, int k, std::int64_t A, std::int64_t B) const {
  const auto v = predict_value(n, k, A, B);
  Report r;
  r.doc = header("predict");
  r.doc["n"] = s(n);
  r.doc["k"] = s(k);
  r.doc["A"] = s(A);
  r.doc["B"] = s(B);
  for (const char* f : {"source_dim", "target_dim", "kernel_dim", "cokernel_dim", "kernel_labels", "cokernel_labels"}) {
    r.doc[f] = v.at(f);
  }
  r.header = {"n", "k", "A", "B", "source_dim", "target_dim", "kernel_dim", "cokernel_dim", "kernel_labels",
              "cokernel_labels"};
  r.rows.push_back({s(n), s(k), s(A), s(B), v.at("source_dim"), v.at("target_dim"), v.at("kernel_dim"),
                    v.at("cokernel_dim"), labels_text(v.at("kernel_labels")), labels_text(v.at("cokernel_labels"))});
  return r;
}

Report Service::oracle(const std::optional<oracle::ContractionOperator>& op_in, int n, int k, std::int64_t A,
                       std::int64_t B) const {
  const auto op = resolve_operator(op_in, n, k);
  const auto v = oracle_value(op, A, B);
  const auto primes = oracle::select_primes(config_.seed);
  Report r;
  r.doc = header("oracle");
  r.doc["operator"] = operator_label(op_in);
  r.doc["n"] = s(op.n());
  r.doc["k"] = s(op.k());
  r.doc["A"] = s(A);
  r.doc["B"] = s(B);
  for (const char* f : {"dim_source", "dim_target", "rank", "kernel_dim", "cokernel_dim", "certified"}) {
    r.doc[f] = v.at(f);
  }
  r.doc["primes"] = {std::to_string(primes.first), std::to_string(primes.second)};
  r.header = {"n", "k", "A", "B", "dim_source", "dim_target", "rank", "kernel_dim", "cokernel_dim", "certified"};
  r.rows.push_back({s(op.n()), s(op.k()), s(A), s(B), v.at("dim_source"), v.at("dim_target"), v.at("rank"),
                    v.at("kernel_dim"), v.at("cokernel_dim"), v.at("certified").get<bool>() ? "true" : "false"});
  return r;
}

Report Service::series_rep(int n, int k, std::int64_t a1, std::int64_t a2, rep::MRange range) const {
  require(n >= 1 && k >= 1, "n and k must be >= 1");
  require(range.lo <= range.hi, "empty m range");
  Report r;
  r.doc = header("series");
  r.doc["engine"] = "rep";
  r.doc["n"] = s(n);
  r.doc["k"] = s(k);
  r.doc["a1"] = s(a1);
  r.doc["a2"] = s(a2);
  r.doc["m_range"] = {s(range.lo), s(range.hi)};
  json dropped = json::array();
  json points = json::array();
  r.header = {"m", "A", "B", "kernel_dim", "cokernel_dim"};
  for (std::int64_t m = range.lo; m <= range.hi; ++m) {
    const auto A = rep::source_exponent_A(n, k, a1, m);
    const auto B = rep::source_exponent_B(n, k, a2, m);
    if (A < 0 || B < k) {
      dropped.push_back(s(m));
      continue;
    }
    const auto v = predict_value(n, k, A, B);
    points.push_back({{"m", s(m)}, {"A", s(A)}, {"B", s(B)}, {"kernel_dim", v.at("kernel_dim")},
                      {"cokernel_dim", v.at("cokernel_dim")}});
    r.rows.push_back({s(m), s(A), s(B), v.at("kernel_dim"), v.at("cokernel_dim")});
  }
  require(!points.empty(), "no m in the range satisfies A >= 0 and B >= k");
  r.doc["dropped"] = dropped;
  r.doc["points"] = points;
  return r;
}

Report Service::series_oracle(const std::optional<oracle::ContractionOperator>& op_in, int n, int k, std::int64_t a1,
                              std::int64_t a2, rep::MRange range) const {
  const auto op = resolve_operator(op_in, n, k);
  require(range.lo <= range.hi, "empty m range");
  Report r;
  r.doc = header("series");
  r.doc["engine"] = "oracle";
  r.doc["operator"] = operator_label(op_in);
  r.doc["n"] = s(op.n());
  r.doc["k"] = s(op.k());
  r.doc["a1"] = s(a1);
  r.doc["a2"] = s(a2);
  r.doc["m_range"] = {s(range.lo), s(range.hi)};
  json dropped = json::array();
  json points = json::array();
  r.header = {"m", "A", "B", "rank", "kernel_dim", "cokernel_dim"};
  for (std::int64_t m = range.lo; m <= range.hi; ++m) {
    const auto A = rep::source_exponent_A(op.n(), op.k(), a1, m);
    const auto B = rep::source_exponent_B(op.n(), op.k(), a2, m);
    if (A < 0 || B < 0) {
      dropped.push_back(s(m));
      continue;
    }
    const auto v = oracle_value(op, A, B);
    points.push_back({{"m", s(m)}, {"A", s(A)}, {"B", s(B)}, {"rank", v.at("rank")}, {"kernel_dim", v.at("kernel_dim")},
                      {"cokernel_dim", v.at("cokernel_dim")}, {"certified", v.at("certified")}});
    r.rows.push_back({s(m), s(A), s(B), v.at("rank"), v.at("kernel_dim"), v.at("cokernel_dim")});
  }
  require(!points.empty(), "no m in the range gives nonnegative exponents");
  r.doc["dropped"] = dropped;
  r.doc["points"] = points;
  return r;
}

namespace {

void fill_asymptotic(Report& r, const asymptotics::AsymptoticVector& v) {
  json values = json::array();
  r.header = {"i", "h_hat"};
  for (std::size_t i = 0; i < v.values.size(); ++i) {
    values.push_back(s(v.values[i]));
    r.rows.push_back({s(static_cast<std::int64_t>(i)), s(v.values[i])});
  }
  r.doc["dim"] = s(v.dim);
  r.doc["h_hat"] = values;
  r.doc["verdict"] = v.purity.text();
}

}  // namespace

Report Service::asymptotics_special_fiber(int n, int k, std::int64_t a1, std::int64_t a2) const {
  const auto label = asymptotics::classify(n, {a1, -a2});
  const auto v = asymptotics::asymptotic_special_fiber(n, k, a1, a2);
  Report r;
  r.doc = header("asymptotics");
  r.doc["space"] = "special_fiber";
  r.doc["n"] = s(n);
  r.doc["k"] = s(k);
  r.doc["a1"] = s(a1);
  r.doc["a2"] = s(a2);
  r.doc["case"] = asymptotics::case_name(label.kind);
  json allowed = json::array();
  for (int i : label.allowed_indices) allowed.push_back(s(i));
  r.doc["allowed_indices"] = allowed;
  fill_asymptotic(r, v);
  return r;
}

Report Service::asymptotics_product(int n, std::int64_t a1, std::int64_t a2) const {
  const auto v = asymptotics::asymptotic_product(n, {a1, a2});
  Report r;
  r.doc = header("asymptotics");
  r.doc["space"] = "product";
  r.doc["n"] = s(n);
  r.doc["a1"] = s(a1);
  r.doc["a2"] = s(a2);
  fill_asymptotic(r, v);
  return r;
}

Report Service::scan(int n, int k, rep::MRange a1_range, rep::MRange a2_range) const {
  require(a1_range.lo <= a1_range.hi && a2_range.lo <= a2_range.hi, "empty scan range");
  std::vector<std::pair<std::int64_t, std::int64_t>> grid;
  for (auto a1 = a1_range.lo; a1 <= a1_range.hi; ++a1) {
    for (auto a2 = a2_range.lo; a2 <= a2_range.hi; ++a2) grid.emplace_back(a1, a2);
  }
  const auto report = asymptotics::purity_report(n, k, grid);

  Report r;
  r.doc = header("scan");
  r.doc["n"] = s(n);
  r.doc["k"] = s(k);
  r.header = {"n", "k", "a1", "a2", "case"};
  for (int i = 0; i <= 2 * n - 1; ++i) r.header.push_back("h_hat_" + std::to_string(i));
  r.header.push_back("verdict");
  json rows = json::array();
  json failures = json::array();
  for (const auto& e : report.entries) {
    std::vector<std::string> row{s(n), s(k), s(e.a1), s(e.a2), asymptotics::case_name(e.label.kind)};
    json values = json::array();
    for (const auto& v : e.vector.values) {
      row.push_back(s(v));
      values.push_back(s(v));
    }
    row.push_back(e.vector.purity.text());
    r.rows.push_back(row);
    rows.push_back({{"a1", s(e.a1)}, {"a2", s(e.a2)}, {"case", asymptotics::case_name(e.label.kind)},
                    {"h_hat", values}, {"verdict", e.vector.purity.text()}, {"ok", e.ok}});
    if (!e.ok) failures.push_back({s(e.a1), s(e.a2)});
  }
  r.doc["rows"] = rows;
  r.doc["all_pure"] = report.all_pure();
  r.doc["failures"] = failures;
  r.ok = report.all_pure();
  return r;
}

}  // namespace apurity
