// Command-line front end over the apurity C API.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "apurity/apurity.h"

namespace {

constexpr int kUsageError = 2;

struct Range {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
};

// "3" or "0..4"
std::optional<Range> parse_range(const std::string& text) {
  try {
    std::size_t used = 0;
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
      const std::int64_t v = std::stoll(text, &used);
      if (used != text.size()) return std::nullopt;
      return Range{v, v};
    }
    const std::string lo = text.substr(0, dots);
    const std::string hi = text.substr(dots + 2);
    Range r{std::stoll(lo, &used), 0};
    if (used != lo.size()) return std::nullopt;
    r.hi = std::stoll(hi, &used);
    if (used != hi.size() || r.lo > r.hi) return std::nullopt;
    return r;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

class Context {
 public:
  Context() { ap_context_create(&ctx_); }
  ~Context() { ap_context_destroy(ctx_); }
  Context(const Context&) = delete;
  Context& operator=(const Context&) = delete;
  ap_context* get() const { return ctx_; }

 private:
  ap_context* ctx_ = nullptr;
};

class Result {
 public:
  ~Result() { ap_result_destroy(res_); }
  ap_result** out() { return &res_; }
  ap_result* get() const { return res_; }

 private:
  ap_result* res_ = nullptr;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cohomology, representation-theoretic prediction and exact-rank oracle for the (k,k) special fiber"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "json";
  std::string cache_path;
  std::uint64_t size_cap = 200000;
  std::uint64_t seed = 1;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv", "table"}));
  app.add_option("--cache", cache_path, "JSON-lines result cache");
  app.add_option("--size-cap", size_cap, "Largest oracle basis on either side")->check(CLI::PositiveNumber);
  app.add_option("--seed", seed, "Seed for the oracle's prime selection");

  int n = 0, k = 0;
  std::int64_t d = 0, a1 = 0, a2 = 0, A = 0, B = 0;
  std::string op_kind = "special", op_file, m_text, a1_text, a2_text, out_path, suite = "small", engine = "rep",
              space = "special_fiber";

  auto* bott = app.add_subcommand("bott", "h^q(P^n, O(d))");
  bott->add_option("--n", n)->required()->check(CLI::PositiveNumber);
  bott->add_option("--d", d)->required()->allow_extra_args(false);

  auto* product = app.add_subcommand("product", "h^i(P^n x P^n, O(a1, a2))");
  product->add_option("--n", n)->required()->check(CLI::PositiveNumber);
  product->add_option("--a1", a1)->required();
  product->add_option("--a2", a2)->required();

  auto* decompose = app.add_subcommand("decompose", "Pieri decomposition of Sym^A (x) Sym^B");
  decompose->add_option("--n", n)->required()->check(CLI::PositiveNumber);
  decompose->add_option("--A", A)->required()->check(CLI::NonNegativeNumber);
  decompose->add_option("--B", B)->required()->check(CLI::NonNegativeNumber);

  auto* predict = app.add_subcommand("predict", "Representation-theoretic kernel/cokernel");
  predict->add_option("--n", n)->required()->check(CLI::PositiveNumber);
  predict->add_option("--k", k)->required()->check(CLI::PositiveNumber);
  predict->add_option("--A", A)->required()->check(CLI::NonNegativeNumber);
  predict->add_option("--B", B)->required()->check(CLI::NonNegativeNumber);

  auto* oracle = app.add_subcommand("oracle", "Exact rank of the multiplication map");
  oracle->add_option("--n", n)->check(CLI::PositiveNumber);
  oracle->add_option("--k", k)->check(CLI::PositiveNumber);
  oracle->add_option("--A", A)->required()->check(CLI::NonNegativeNumber);
  oracle->add_option("--B", B)->required()->check(CLI::NonNegativeNumber);
  oracle->add_option("--operator", op_kind)->check(CLI::IsMember({"special"}));
  oracle->add_option("--operator-file", op_file, "JSON contraction operator");

  auto* series = app.add_subcommand("series", "Kernel/cokernel series in m");
  series->add_option("--engine", engine)->check(CLI::IsMember({"rep", "oracle"}));
  series->add_option("--n", n)->check(CLI::PositiveNumber);
  series->add_option("--k", k)->check(CLI::PositiveNumber);
  series->add_option("--a1", a1)->required();
  series->add_option("--a2", a2)->required();
  series->add_option("--m", m_text, "m or lo..hi")->required();
  series->add_option("--operator", op_kind)->check(CLI::IsMember({"special"}));
  series->add_option("--operator-file", op_file, "JSON contraction operator (oracle engine)");

  auto* asym = app.add_subcommand("asymptotics", "Asymptotic cohomological functions");
  asym->add_option("--space", space)->check(CLI::IsMember({"special_fiber", "product"}));
  asym->add_option("--n", n)->required()->check(CLI::PositiveNumber);
  asym->add_option("--k", k)->check(CLI::PositiveNumber);
  asym->add_option("--a1", a1)->required();
  asym->add_option("--a2", a2)->required();

  auto* scan = app.add_subcommand("scan", "Special-fiber purity over a grid of classes");
  scan->add_option("--n", n)->required()->check(CLI::PositiveNumber);
  scan->add_option("--k", k)->required()->check(CLI::PositiveNumber);
  scan->add_option("--a1", a1_text, "lo..hi")->required();
  scan->add_option("--a2", a2_text, "lo..hi")->required();
  scan->add_option("--out", out_path, "Write the CSV grid here");

  auto* verify = app.add_subcommand("verify", "Cross-check both engines and the closed forms");
  verify->add_option("--suite", suite)->check(CLI::IsMember({"small", "full"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  auto usage = [](const std::string& msg) {
    std::cerr << "error: " << msg << "\n";
    return kUsageError;
  };

  ap_format fmt = AP_FORMAT_JSON;
  if (format == "csv") fmt = AP_FORMAT_CSV;
  if (format == "table") fmt = AP_FORMAT_TABLE;

  std::optional<std::string> op_text;
  if (!op_file.empty()) {
    op_text = read_file(op_file);
    if (!op_text) return usage("cannot read operator file '" + op_file + "'");
  }
  const char* op_json = op_text ? op_text->c_str() : nullptr;

  Context ctx;
  ap_status status = ap_context_set_seed(ctx.get(), seed);
  if (status == AP_OK) status = ap_context_set_size_cap(ctx.get(), size_cap);
  if (status == AP_OK && !cache_path.empty()) status = ap_context_set_cache(ctx.get(), cache_path.c_str());
  if (status != AP_OK) {
    std::cerr << "error: " << ap_context_last_error(ctx.get()) << "\n";
    return status;
  }

  Result res;
  if (bott->parsed()) {
    status = ap_bott(ctx.get(), n, d, res.out());
  } else if (product->parsed()) {
    status = ap_product(ctx.get(), n, a1, a2, res.out());
  } else if (decompose->parsed()) {
    status = ap_decompose(ctx.get(), n, A, B, res.out());
  } else if (predict->parsed()) {
    status = ap_predict(ctx.get(), n, k, A, B, res.out());
  } else if (oracle->parsed()) {
    if (!op_json && (n == 0 || k == 0)) return usage("oracle needs --n and --k, or --operator-file");
    status = ap_oracle(ctx.get(), n, k, op_json, A, B, res.out());
  } else if (series->parsed()) {
    const auto m = parse_range(m_text);
    if (!m) return usage("--m must be an integer or lo..hi");
    if (!op_json && (n == 0 || k == 0)) return usage("series needs --n and --k, or --operator-file");
    if (op_json && engine == "rep") return usage("--operator-file requires --engine oracle");
    status = ap_series(ctx.get(), engine == "rep" ? AP_ENGINE_REP : AP_ENGINE_ORACLE, n, k, op_json, a1, a2, m->lo,
                       m->hi, res.out());
  } else if (asym->parsed()) {
    if (space == "product") {
      status = ap_asymptotics_product(ctx.get(), n, a1, a2, res.out());
    } else {
      if (k == 0) return usage("asymptotics on the special fiber needs --k");
      status = ap_asymptotics(ctx.get(), n, k, a1, a2, res.out());
    }
  } else if (scan->parsed()) {
    const auto r1 = parse_range(a1_text);
    const auto r2 = parse_range(a2_text);
    if (!r1 || !r2) return usage("--a1 and --a2 must be integers or lo..hi");
    status = ap_scan(ctx.get(), n, k, r1->lo, r1->hi, r2->lo, r2->hi, res.out());
    if (res.get() && !out_path.empty()) {
      std::ofstream out(out_path);
      if (!out) {
        std::cerr << "error: cannot write " << out_path << "\n";
        return AP_ERR_IO;
      }
      out << ap_result_text(res.get(), AP_FORMAT_CSV);
    }
  } else if (verify->parsed()) {
    status = ap_verify(ctx.get(), suite == "full" ? AP_SUITE_FULL : AP_SUITE_SMALL, res.out());
  }

  if (res.get()) std::cout << ap_result_text(res.get(), fmt);
  if (status != AP_OK) std::cerr << "error: " << ap_context_last_error(ctx.get()) << "\n";
  return status;
}
