#include "core/rep_theory.hpp"

#include <algorithm>
#include <string>

#include "core/error.hpp"
#include "core/parallel.hpp"

namespace apurity::rep {

IrrepLabel IrrepLabel::partition(int rank_n, std::int64_t lambda1, std::int64_t lambda2) {
  require(rank_n >= 1, "rank n must be >= 1");
  require(lambda1 >= lambda2 && lambda2 >= 0,
          "partition must satisfy lambda1 >= lambda2 >= 0, got (" + std::to_string(lambda1) + "," +
              std::to_string(lambda2) + ")");
  return IrrepLabel{lambda1, lambda2, rank_n};
}

IrrepLabel IrrepLabel::fundamental_weights(int rank_n, std::int64_t c1, std::int64_t c2) {
  require(c1 >= 0 && c2 >= 0, "fundamental-weight coordinates must be nonnegative");
  return partition(rank_n, c1 + c2, c2);
}

BigInt PieriDecomposition::total_dimension() const {
  BigInt sum = 0;
  for (const auto& c : components) sum += weyl_dimension(rank_n, c);
  return sum;
}

PieriDecomposition pieri_decompose(int n, std::int64_t A, std::int64_t B) {
  require(n >= 1, "rank n must be >= 1");
  require(A >= 0 && B >= 0, "symmetric power degrees must be nonnegative");
  PieriDecomposition out{A, B, n, {}};
  const std::int64_t top = std::min(A, B);
  out.components.reserve(static_cast<std::size_t>(top + 1));
  for (std::int64_t i = 0; i <= top; ++i) out.components.push_back(IrrepLabel{A + B - i, i, n});
  return out;
}

BigInt weyl_dimension(int n, const IrrepLabel& label) {
  require(label.rank_n == n, "label rank does not match n");
  require(label.lambda1 >= label.lambda2 && label.lambda2 >= 0, "label is not a partition");
  std::vector<std::int64_t> rows(static_cast<std::size_t>(n + 1), 0);
  rows[0] = label.lambda1;
  rows[1] = label.lambda2;
  BigInt num = 1;
  BigInt den = 1;
  for (int p = 0; p <= n; ++p) {
    for (int q = p + 1; q <= n; ++q) {
      num *= rows[p] - rows[q] + (q - p);
      den *= q - p;
    }
  }
  return num / den;
}

BigInt highest_weight_certificate(int k, std::int64_t B, std::int64_t i) {
  if (i < 0 || B - k - i < 0) return 0;
  return falling_factorial(B - i, k);
}

MapAnalysis predict_map_analysis(int n, int k, std::int64_t A, std::int64_t B) {
  require(n >= 1, "rank n must be >= 1");
  require(k >= 1, "k must be >= 1");
  require(A >= 0, "source exponent A must be >= 0");
  require(B >= k, "source exponent B must be >= k (got B=" + std::to_string(B) +
                      ", k=" + std::to_string(k) + ")");

  const auto source = pieri_decompose(n, A, B);
  const auto target = pieri_decompose(n, A + k, B - k);
  const std::int64_t source_top = std::min(A, B);
  const std::int64_t target_top = std::min(A + k, B - k);
  const std::int64_t shared_top = std::min(source_top, target_top);

  MapAnalysis out;
  out.source_dim = binomial(A + n, n) * binomial(B + n, n);
  out.target_dim = binomial(A + k + n, n) * binomial(B - k + n, n);
  out.shared_count = shared_top + 1;

  for (std::int64_t i = 0; i <= shared_top; ++i) {
    if (highest_weight_certificate(k, B, i) == 0) {
      fail(ErrorKind::Internal, "shared Pieri component " + std::to_string(i) +
                                    " has a vanishing highest-weight image");
    }
  }
  for (std::int64_t i = shared_top + 1; i <= source_top; ++i) {
    out.kernel_labels.push_back(source.components[i]);
    out.kernel_dim += weyl_dimension(n, source.components[i]);
  }
  for (std::int64_t i = shared_top + 1; i <= target_top; ++i) {
    out.cokernel_labels.push_back(target.components[i]);
    out.cokernel_dim += weyl_dimension(n, target.components[i]);
  }
  return out;
}

KernelSeries kernel_series_rep(int n, int k, std::int64_t a1, std::int64_t a2, MRange range) {
  require(n >= 1 && k >= 1, "n and k must be >= 1");
  require(range.lo <= range.hi, "empty m range");
  KernelSeries out;
  std::vector<std::int64_t> feasible;
  for (std::int64_t m = range.lo; m <= range.hi; ++m) {
    const auto A = source_exponent_A(n, k, a1, m);
    const auto B = source_exponent_B(n, k, a2, m);
    if (A >= 0 && B >= k) {
      feasible.push_back(m);
    } else {
      out.dropped.push_back(m);
    }
  }
  require(!feasible.empty(), "no m in [" + std::to_string(range.lo) + "," + std::to_string(range.hi) +
                                 "] satisfies A >= 0 and B >= k");
  out.points = parallel_map(feasible, [&](std::int64_t m) {
    const auto A = source_exponent_A(n, k, a1, m);
    const auto B = source_exponent_B(n, k, a2, m);
    return SeriesPoint{m, A, B, predict_map_analysis(n, k, A, B)};
  });
  return out;
}

}  // namespace apurity::rep
