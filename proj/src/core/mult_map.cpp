#include "core/mult_map.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>

#include "core/error.hpp"
#include "core/parallel.hpp"

namespace apurity::oracle {

namespace {

struct ExponentsHash {
  std::size_t operator()(const Exponents& e) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (int x : e) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ull;
    return h;
  }
};

using MonomialIndex = std::unordered_map<Exponents, std::size_t, ExponentsHash>;

MonomialIndex index_basis(const std::vector<Monomial>& basis) {
  MonomialIndex index;
  index.reserve(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i].exponents, i);
  return index;
}

void fill_basis(Exponents& current, int position, std::int64_t remaining, std::vector<Monomial>& out) {
  const int last = static_cast<int>(current.size()) - 1;
  if (position == last) {
    current[position] = static_cast<int>(remaining);
    out.push_back({current});
    return;
  }
  for (std::int64_t e = remaining; e >= 0; --e) {
    current[position] = static_cast<int>(e);
    fill_basis(current, position + 1, remaining - e, out);
  }
}

int total(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }

void enumerate_compositions(int parts, int sum, Exponents& current, int position, std::vector<Exponents>& out) {
  if (position == parts - 1) {
    current[position] = sum;
    out.push_back(current);
    return;
  }
  for (int e = sum; e >= 0; --e) {
    current[position] = e;
    enumerate_compositions(parts, sum - e, current, position + 1, out);
  }
}

}  // namespace

std::int64_t Monomial::degree() const { return std::accumulate(exponents.begin(), exponents.end(), std::int64_t{0}); }

std::vector<Monomial> monomial_basis(int nvars, std::int64_t degree) {
  require(nvars >= 1, "need at least one variable");
  std::vector<Monomial> out;
  if (degree < 0) return out;
  Exponents current(static_cast<std::size_t>(nvars), 0);
  fill_basis(current, 0, degree, out);
  return out;
}

ContractionOperator::ContractionOperator(int n, int k, std::vector<OperatorTerm> terms)
    : n_(n), k_(k), terms_(std::move(terms)) {
  require(n >= 1, "operator n must be >= 1");
  require(k >= 1, "operator k must be >= 1");
  require(!terms_.empty(), "operator has no terms");
  std::set<std::pair<Exponents, Exponents>> seen;
  for (const auto& t : terms_) {
    require(t.coeff != 0, "operator term has a zero coefficient");
    require(t.alpha.size() == static_cast<std::size_t>(n + 1) && t.beta.size() == static_cast<std::size_t>(n + 1),
            "operator exponent vectors must have length n+1 = " + std::to_string(n + 1));
    for (int e : t.alpha) require(e >= 0, "negative exponent in alpha");
    for (int e : t.beta) require(e >= 0, "negative exponent in beta");
    require(total(t.alpha) == k && total(t.beta) == k, "operator term with |alpha| or |beta| != k");
    require(seen.emplace(t.alpha, t.beta).second, "duplicate (alpha, beta) pair in operator");
  }
}

ContractionOperator ContractionOperator::permuted(const std::vector<int>& perm) const {
  require(perm.size() == static_cast<std::size_t>(n_ + 1), "permutation has the wrong length");
  std::vector<OperatorTerm> out;
  for (const auto& t : terms_) {
    OperatorTerm p{t.coeff, Exponents(t.alpha.size()), Exponents(t.beta.size())};
    for (std::size_t j = 0; j < perm.size(); ++j) {
      p.alpha[perm[j]] = t.alpha[j];
      p.beta[perm[j]] = t.beta[j];
    }
    out.push_back(std::move(p));
  }
  return ContractionOperator(n_, k_, std::move(out));
}

std::string ContractionOperator::canonical() const {
  std::vector<const OperatorTerm*> sorted;
  for (const auto& t : terms_) sorted.push_back(&t);
  std::sort(sorted.begin(), sorted.end(), [](const auto* x, const auto* y) {
    return std::tie(x->alpha, x->beta) < std::tie(y->alpha, y->beta);
  });
  std::ostringstream os;
  os << "n=" << n_ << ";k=" << k_ << ";";
  auto vec = [&os](const Exponents& e) {
    for (std::size_t j = 0; j < e.size(); ++j) os << (j ? "," : "") << e[j];
  };
  for (const auto* t : sorted) {
    os << to_string(t->coeff) << ":";
    vec(t->alpha);
    os << ":";
    vec(t->beta);
    os << ";";
  }
  return os.str();
}

ContractionOperator special_fiber_operator(int n, int k) {
  require(n >= 1 && k >= 1, "special fiber operator needs n, k >= 1");
  std::vector<Exponents> alphas;
  Exponents current(static_cast<std::size_t>(n + 1), 0);
  enumerate_compositions(n + 1, k, current, 0, alphas);
  std::vector<OperatorTerm> terms;
  const BigInt kfact = factorial(k);
  for (const auto& a : alphas) {
    BigInt den = 1;
    for (int e : a) den *= factorial(e);
    terms.push_back({kfact / den, a, a});
  }
  return ContractionOperator(n, k, std::move(terms));
}

std::optional<TensorMonomial> apply_term(const OperatorTerm& term, const Exponents& u, const Exponents& v) {
  TensorMonomial out{term.coeff, u, v};
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (v[j] < term.beta[j]) return std::nullopt;
    out.coeff *= falling_factorial(v[j], term.beta[j]);
    out.u[j] += term.alpha[j];
    out.v[j] -= term.beta[j];
  }
  return out;
}

std::vector<TensorMonomial> apply_operator(const ContractionOperator& op, const Exponents& u, const Exponents& v) {
  std::map<std::pair<Exponents, Exponents>, BigInt> acc;
  for (const auto& t : op.terms()) {
    if (auto image = apply_term(t, u, v)) acc[{image->u, image->v}] += image->coeff;
  }
  std::vector<TensorMonomial> out;
  for (auto& [key, coeff] : acc) {
    if (coeff != 0) out.push_back({coeff, key.first, key.second});
  }
  return out;
}

std::pair<BigInt, BigInt> map_dimensions(const ContractionOperator& op, std::int64_t A, std::int64_t B) {
  const int n = op.n();
  const int k = op.k();
  return {binomial(A + n, n) * binomial(B + n, n), binomial(A + k + n, n) * binomial(B - k + n, n)};
}

SparseMatrix build_matrix(const ContractionOperator& op, std::int64_t A, std::int64_t B, std::uint64_t size_cap) {
  require(A >= 0 && B >= 0, "source exponents must be nonnegative");
  const int nvars = op.n() + 1;
  const auto [source_dim, target_dim] = map_dimensions(op, A, B);
  if (source_dim > size_cap || target_dim > size_cap) {
    fail(ErrorKind::SizeCap, "map too large: source dimension " + to_string(source_dim) + ", target dimension " +
                                 to_string(target_dim) + ", cap " + std::to_string(size_cap));
  }

  const auto src_x = monomial_basis(nvars, A);
  const auto src_y = monomial_basis(nvars, B);
  const auto tgt_x = monomial_basis(nvars, A + op.k());
  const auto tgt_y = monomial_basis(nvars, B - op.k());
  const auto tgt_x_index = index_basis(tgt_x);
  const auto tgt_y_index = index_basis(tgt_y);

  SparseMatrix m;
  m.cols = src_x.size() * src_y.size();
  m.rows = tgt_x.size() * tgt_y.size();
  m.columns.resize(m.cols);
  if (m.rows == 0) return m;

  for (std::size_t i = 0; i < src_x.size(); ++i) {
    for (std::size_t j = 0; j < src_y.size(); ++j) {
      auto& column = m.columns[i * src_y.size() + j];
      for (auto& image : apply_operator(op, src_x[i].exponents, src_y[j].exponents)) {
        const std::size_t row = tgt_x_index.at(image.u) * tgt_y.size() + tgt_y_index.at(image.v);
        column.push_back({row, std::move(image.coeff)});
      }
      std::sort(column.begin(), column.end(), [](const auto& x, const auto& y) { return x.row < y.row; });
    }
  }
  return m;
}

RankResult oracle_rank(const ContractionOperator& op, std::int64_t A, std::int64_t B, const OracleOptions& options) {
  return exact_rank(build_matrix(op, A, B, options.size_cap), options.rank);
}

OracleSeries oracle_series(const ContractionOperator& op, std::int64_t a1, std::int64_t a2, rep::MRange range,
                           const OracleOptions& options) {
  require(range.lo <= range.hi, "empty m range");
  const int n = op.n();
  const int k = op.k();
  OracleSeries out;
  std::vector<std::int64_t> feasible;
  for (std::int64_t m = range.lo; m <= range.hi; ++m) {
    const auto A = rep::source_exponent_A(n, k, a1, m);
    const auto B = rep::source_exponent_B(n, k, a2, m);
    if (A >= 0 && B >= 0) {
      feasible.push_back(m);
    } else {
      out.dropped.push_back(m);
    }
  }
  require(!feasible.empty(), "no m in the range gives nonnegative exponents");
  out.points = parallel_map(feasible, [&](std::int64_t m) {
    const auto A = rep::source_exponent_A(n, k, a1, m);
    const auto B = rep::source_exponent_B(n, k, a2, m);
    return OraclePoint{m, A, B, oracle_rank(op, A, B, options)};
  });
  return out;
}

}  // namespace apurity::oracle
