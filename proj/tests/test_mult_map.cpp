#include <random>

#include "core/error.hpp"
#include "core/mult_map.hpp"
#include "core/operator_io.hpp"
#include "core/rep_theory.hpp"
#include "doctest.h"

using namespace apurity;
using namespace apurity::oracle;

namespace {

// Rank over Q by plain Gaussian elimination on rationals, independent of the
// modular and Bareiss paths.
std::size_t rational_rank(const SparseMatrix& m) {
  std::vector<std::vector<Rational>> a(m.rows, std::vector<Rational>(m.cols, Rational(0)));
  for (std::size_t c = 0; c < m.cols; ++c) {
    for (const auto& e : m.columns[c]) a[e.row][c] = Rational(e.value);
  }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols && rank < m.rows; ++col) {
    std::size_t p = rank;
    while (p < m.rows && a[p][col] == 0) ++p;
    if (p == m.rows) continue;
    std::swap(a[p], a[rank]);
    for (std::size_t i = rank + 1; i < m.rows; ++i) {
      if (a[i][col] == 0) continue;
      const Rational f = a[i][col] / a[rank][col];
      for (std::size_t j = col; j < m.cols; ++j) a[i][j] -= f * a[rank][j];
    }
    ++rank;
  }
  return rank;
}

SparseMatrix from_dense(const std::vector<std::vector<long>>& rows) {
  SparseMatrix m;
  m.rows = rows.size();
  m.cols = rows.empty() ? 0 : rows[0].size();
  m.columns.resize(m.cols);
  for (std::size_t c = 0; c < m.cols; ++c) {
    for (std::size_t r = 0; r < m.rows; ++r) {
      if (rows[r][c] != 0) m.columns[c].push_back({r, BigInt(rows[r][c])});
    }
  }
  return m;
}

ContractionOperator corner_operator(int n) {
  Exponents e(static_cast<std::size_t>(n + 1), 0);
  e[0] = 1;
  return ContractionOperator(n, 1, {{1, e, e}});
}

}  // namespace

TEST_CASE("monomial basis order") {
  const auto b = monomial_basis(3, 2);
  REQUIRE(b.size() == 6);
  CHECK(b[0].exponents == Exponents{2, 0, 0});
  CHECK(b[1].exponents == Exponents{1, 1, 0});
  CHECK(b[2].exponents == Exponents{1, 0, 1});
  CHECK(b[3].exponents == Exponents{0, 2, 0});
  CHECK(b[5].exponents == Exponents{0, 0, 2});
  CHECK(monomial_basis(3, -1).empty());
  CHECK(monomial_basis(4, 0).size() == 1);
  for (const auto& m : monomial_basis(4, 7)) CHECK(m.degree() == 7);
  CHECK(monomial_basis(4, 7).size() == binomial(10, 3));
}

TEST_CASE("special fiber operator expansion") {
  auto op = special_fiber_operator(1, 2);
  REQUIRE(op.terms().size() == 3);
  CHECK(op.terms()[0].coeff == 1);
  CHECK(op.terms()[0].alpha == Exponents{2, 0});
  CHECK(op.terms()[1].coeff == 2);
  CHECK(op.terms()[1].alpha == Exponents{1, 1});
  CHECK(op.terms()[2].coeff == 1);
  CHECK(op.terms()[2].alpha == Exponents{0, 2});
  for (const auto& t : op.terms()) CHECK(t.alpha == t.beta);

  op = special_fiber_operator(2, 1);
  CHECK(op.terms().size() == 3);
  for (const auto& t : op.terms()) CHECK(t.coeff == 1);

  op = special_fiber_operator(2, 2);
  std::vector<BigInt> coeffs;
  for (const auto& t : op.terms()) coeffs.push_back(t.coeff);
  std::sort(coeffs.begin(), coeffs.end());
  CHECK(coeffs == std::vector<BigInt>{1, 1, 1, 2, 2, 2});
}

TEST_CASE("operator invariants are enforced") {
  CHECK_THROWS_AS(ContractionOperator(2, 1, {{1, {1, 0}, {1, 0}}}), Error);
  CHECK_THROWS_AS(ContractionOperator(2, 1, {{0, {1, 0, 0}, {1, 0, 0}}}), Error);
  CHECK_THROWS_AS(ContractionOperator(2, 1, {{1, {2, 0, 0}, {1, 0, 0}}}), Error);
  CHECK_THROWS_AS(ContractionOperator(2, 1, {{1, {1, 0, 0}, {1, 0, 0}}, {3, {1, 0, 0}, {1, 0, 0}}}), Error);
  CHECK_THROWS_AS(ContractionOperator(2, 1, {}), Error);
}

TEST_CASE("apply_term differentiates the second factor") {
  const OperatorTerm t{1, {1, 0, 0}, {1, 0, 0}};
  auto image = apply_term(t, {0, 0, 0}, {2, 0, 0});
  REQUIRE(image);
  CHECK(image->coeff == 2);
  CHECK(image->u == Exponents{1, 0, 0});
  CHECK(image->v == Exponents{1, 0, 0});
  CHECK_FALSE(apply_term(t, {0, 0, 0}, {0, 2, 0}));

  const OperatorTerm cubic{5, {0, 3}, {0, 3}};
  image = apply_term(cubic, {1, 0}, {0, 4});
  REQUIRE(image);
  CHECK(image->coeff == 5 * 4 * 3 * 2);

  // Product rule: (x0 d0 + x1 d1) on x0 (x) y0 y1.
  const auto sum = apply_operator(special_fiber_operator(1, 1), {1, 0}, {1, 1});
  REQUIRE(sum.size() == 2);
  CHECK(sum[0] == TensorMonomial{1, {1, 1}, {1, 0}});
  CHECK(sum[1] == TensorMonomial{1, {2, 0}, {0, 1}});
}

TEST_CASE("matrix shapes") {
  auto m = build_matrix(special_fiber_operator(2, 1), 1, 1);
  CHECK(m.cols == 9);
  CHECK(m.rows == 6);

  m = build_matrix(corner_operator(2), 2, 1);
  CHECK(m.cols == 18);
  CHECK(m.rows == 10);

  m = build_matrix(special_fiber_operator(2, 2), 1, 2);
  CHECK(m.rows == binomial(5, 2));  // Sym^0 on the second factor

  m = build_matrix(special_fiber_operator(2, 2), 3, 1);
  CHECK(m.rows == 0);
  CHECK(m.cols == 30);

  CHECK_THROWS_AS(build_matrix(special_fiber_operator(2, 1), -1, 3), Error);
}

TEST_CASE("size cap") {
  try {
    build_matrix(special_fiber_operator(2, 1), 30, 30, 1000);
    FAIL("expected a size error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SizeCap);
    CHECK(std::string(e.what()).find("source dimension 246016") != std::string::npos);
    CHECK(std::string(e.what()).find("target dimension 245520") != std::string::npos);
  }
}

TEST_CASE("primes") {
  const auto [p, q] = select_primes(1);
  CHECK(p > (1ull << 30));
  CHECK(q > (1ull << 30));
  CHECK(p != q);
  CHECK(is_prime(p));
  CHECK(is_prime(q));
  CHECK(select_primes(1) == select_primes(1));
  CHECK(select_primes(2) != select_primes(1));
  CHECK(is_prime(2147483647));
  CHECK_FALSE(is_prime(2147483649ull));
  CHECK_FALSE(is_prime(1));
}

TEST_CASE("exact rank basics") {
  auto zero = from_dense({{0, 0, 0}, {0, 0, 0}});
  auto r = exact_rank(zero);
  CHECK(r.rank == 0);
  CHECK(r.kernel_dim == 3);
  CHECK(r.cokernel_dim == 2);
  CHECK(r.certified);

  // A = 0, B = k: Sym^0 (x) Sym^k -> Sym^k (x) Sym^0 is injective.
  r = oracle_rank(special_fiber_operator(2, 2), 0, 2);
  CHECK(r.rank == r.dim_source);
  CHECK(r.kernel_dim == 0);

  r = oracle_rank(special_fiber_operator(2, 1), 9, 3);
  CHECK(r.rank == 396);
  CHECK(r.kernel_dim == 154);
  CHECK(r.cokernel_dim == 0);
  CHECK(r.certified);

  // A multiple of a large prime-free pattern: rank 1 over Q.
  CHECK(exact_rank(from_dense({{2, 4}, {3, 6}})).rank == 1);
}

TEST_CASE("rank paths agree with a rational reference on random matrices") {
  std::mt19937_64 gen(42);
  std::uniform_int_distribution<int> size(1, 9);
  std::uniform_int_distribution<int> entry(-3, 3);
  std::bernoulli_distribution sparse(0.4);
  for (int trial = 0; trial < 200; ++trial) {
    const int rows = size(gen), cols = size(gen);
    std::vector<std::vector<long>> dense(rows, std::vector<long>(cols, 0));
    for (auto& row : dense) {
      for (auto& v : row) v = sparse(gen) ? entry(gen) : 0;
    }
    // Make some rows dependent.
    if (rows > 2) {
      for (int c = 0; c < cols; ++c) dense[rows - 1][c] = 2 * dense[0][c] - 3 * dense[1][c];
    }
    const auto m = from_dense(dense);
    const std::size_t expected = rational_rank(m);
    CHECK(rank_exact(m) == expected);
    CHECK(rank_mod_p(m, 1073741827ull) == expected);
    RankOptions modular_only;
    modular_only.exact_threshold = 0;
    CHECK(exact_rank(m, modular_only).rank == expected);
    CHECK(exact_rank(m).rank == expected);
  }
}

TEST_CASE("block splitting preserves rank on oracle matrices") {
  for (int A = 0; A <= 4; ++A) {
    for (int B = 0; B <= 4; ++B) {
      const auto m = build_matrix(special_fiber_operator(2, 1), A, B);
      CHECK(exact_rank(m).rank == rational_rank(m));
    }
  }
}

TEST_CASE("oracle agrees with the rep-theory prediction at small sizes") {
  for (int n = 1; n <= 2; ++n) {
    for (int k = 1; k <= 2; ++k) {
      const auto op = special_fiber_operator(n, k);
      for (int A = 0; A <= 6; ++A) {
        for (int B = k; B <= 6; ++B) {
          const auto predicted = rep::predict_map_analysis(n, k, A, B);
          const auto observed = oracle_rank(op, A, B);
          CHECK(observed.kernel_dim == predicted.kernel_dim);
          CHECK(observed.cokernel_dim == predicted.cokernel_dim);
          CHECK(observed.kernel_dim + observed.rank == observed.dim_source);
        }
      }
    }
  }
}

TEST_CASE("equivariance: permuting variables leaves ranks unchanged") {
  const auto special = special_fiber_operator(2, 2);
  const auto corner = ContractionOperator(2, 1, {{1, {1, 0, 0}, {1, 0, 0}}, {2, {0, 1, 0}, {0, 0, 1}}});
  const std::vector<std::vector<int>> perms{{1, 0, 2}, {2, 1, 0}, {1, 2, 0}};
  for (const auto& perm : perms) {
    for (int A = 0; A <= 4; ++A) {
      for (int B = 2; B <= 4; ++B) {
        const auto base = oracle_rank(special, A, B);
        const auto moved = oracle_rank(special.permuted(perm), A, B);
        CHECK(base.rank == moved.rank);
        CHECK(base.kernel_dim == moved.kernel_dim);
        CHECK(oracle_rank(corner, A, B).rank == oracle_rank(corner.permuted(perm), A, B).rank);
      }
    }
  }
}

TEST_CASE("oracle series") {
  const auto series = oracle_series(corner_operator(2), 1, 1, {1, 5});
  CHECK(series.dropped == std::vector<std::int64_t>{1});
  REQUIRE(series.points.size() == 4);
  CHECK(series.points[0].m == 2);
  CHECK(series.points[1].A == 2);
  CHECK(series.points[1].B == 1);
  CHECK(series.points[1].result.kernel_dim == 12);
}

TEST_CASE("operator documents") {
  const auto op = parse_operator(
      R"({"n":2,"k":1,"terms":[{"coeff":"123456789012345678901","alpha":[1,0,0],"beta":[0,1,0]}]})");
  CHECK(op.terms()[0].coeff == parse_bigint("123456789012345678901"));
  CHECK(parse_operator(operator_to_json(op)).canonical() == op.canonical());
  CHECK(parse_operator(operator_to_json(special_fiber_operator(2, 2))).canonical() ==
        special_fiber_operator(2, 2).canonical());

  for (const char* bad : {"[1,2]", "{\"n\":2,\"k\":1}", "{\"n\":2,\"k\":1,\"terms\":[{\"coeff\":1}]}",
                          "{\"n\":2,\"k\":1,\"terms\":[{\"coeff\":1,\"alpha\":[1,0],\"beta\":[1,0]}]}",
                          "{\"n\":2,\"k\":1,\"terms\":[{\"coeff\":1.5,\"alpha\":[1,0,0],\"beta\":[1,0,0]}]}",
                          "{\"n\":-1,\"k\":1,\"terms\":[]}", "not json"}) {
    CAPTURE(bad);
    try {
      parse_operator(bad);
      FAIL("expected rejection");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::InvalidArgument);
    }
  }
  try {
    load_operator_file("/nonexistent/operator.json");
    FAIL("expected an io error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Io);
  }
}
