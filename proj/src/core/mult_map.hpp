#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "core/bigint.hpp"
#include "core/exact_rank.hpp"
#include "core/rep_theory.hpp"

namespace apurity::oracle {

inline constexpr std::uint64_t kDefaultSizeCap = 200000;

using Exponents = std::vector<int>;

struct Monomial {
  Exponents exponents;
  std::int64_t degree() const;
};

/// All monomials of the given degree in `nvars` variables, graded-lexicographic:
/// x0^d first, then by decreasing exponent of x0, x1, ... . Empty for negative degree.
std::vector<Monomial> monomial_basis(int nvars, std::int64_t degree);

/// coeff * x^alpha (x) d^beta: multiply the first factor by x^alpha and differentiate
/// the second by d^beta.
struct OperatorTerm {
  BigInt coeff;
  Exponents alpha;
  Exponents beta;
};

class ContractionOperator {
 public:
  /// Throws InvalidArgument unless every |alpha| = |beta| = k, coefficients are nonzero,
  /// vectors have length n+1 and (alpha, beta) pairs are distinct.
  ContractionOperator(int n, int k, std::vector<OperatorTerm> terms);

  int n() const { return n_; }
  int k() const { return k_; }
  const std::vector<OperatorTerm>& terms() const { return terms_; }

  /// Renames variable j to perm[j] on both sides.
  ContractionOperator permuted(const std::vector<int>& perm) const;

  /// Stable text form, used as a cache key.
  std::string canonical() const;

 private:
  int n_;
  int k_;
  std::vector<OperatorTerm> terms_;
};

/// (sum_i x_i (x) d_i)^k expanded with multinomial coefficients k!/prod(alpha_j!).
ContractionOperator special_fiber_operator(int n, int k);

/// coeff * x^u (x) y^v
struct TensorMonomial {
  BigInt coeff;
  Exponents u;
  Exponents v;
  friend bool operator==(const TensorMonomial&, const TensorMonomial&) = default;
};

/// One term applied to x^u (x) y^v; nullopt when some v_j < beta_j.
std::optional<TensorMonomial> apply_term(const OperatorTerm& term, const Exponents& u, const Exponents& v);

/// The whole operator applied to x^u (x) y^v, like terms combined, zeros dropped.
std::vector<TensorMonomial> apply_operator(const ContractionOperator& op, const Exponents& u,
                                           const Exponents& v);

/// Dimensions of Sym^A (x) Sym^B and Sym^{A+k} (x) Sym^{B-k} for the operator's n, k.
std::pair<BigInt, BigInt> map_dimensions(const ContractionOperator& op, std::int64_t A, std::int64_t B);

/// Matrix of op : Sym^A (x) Sym^B -> Sym^{A+k} (x) Sym^{B-k}. Basis pairs are ordered
/// with the first factor major, each factor in monomial_basis order. When B < k the
/// target is zero and the matrix has no rows. Throws SizeCap when either side exceeds
/// size_cap.
SparseMatrix build_matrix(const ContractionOperator& op, std::int64_t A, std::int64_t B,
                          std::uint64_t size_cap = kDefaultSizeCap);

struct OracleOptions {
  RankOptions rank;
  std::uint64_t size_cap = kDefaultSizeCap;
};

struct OraclePoint {
  std::int64_t m = 0;
  std::int64_t A = 0;
  std::int64_t B = 0;
  RankResult result;
};

struct OracleSeries {
  std::vector<OraclePoint> points;
  std::vector<std::int64_t> dropped;  // m with A < 0 or B < 0
};

RankResult oracle_rank(const ContractionOperator& op, std::int64_t A, std::int64_t B,
                       const OracleOptions& options = {});

/// Per-m oracle runs with A = m*a1 - k, B = m*a2 + k - (n+1).
OracleSeries oracle_series(const ContractionOperator& op, std::int64_t a1, std::int64_t a2,
                           rep::MRange range, const OracleOptions& options = {});

}  // namespace apurity::oracle
