#pragma once

#include <cstdint>
#include <vector>

#include "core/bigint.hpp"

namespace apurity::rep {

/// Two-row partition (lambda1, lambda2, 0, ..., 0) labelling an irreducible
/// SL(n+1) representation. Rows beyond the second are zero.
struct IrrepLabel {
  std::int64_t lambda1 = 0;
  std::int64_t lambda2 = 0;
  int rank_n = 1;

  static IrrepLabel partition(int rank_n, std::int64_t lambda1, std::int64_t lambda2);
  /// Fundamental-weight coordinates c1*w1 + c2*w2 map to the partition (c1 + c2, c2).
  static IrrepLabel fundamental_weights(int rank_n, std::int64_t c1, std::int64_t c2);

  friend bool operator==(const IrrepLabel&, const IrrepLabel&) = default;
};

/// Sym^A (x) Sym^B = sum_{i=0}^{min(A,B)} Gamma_(A+B-i, i), each with multiplicity one.
struct PieriDecomposition {
  std::int64_t A = 0;
  std::int64_t B = 0;
  int rank_n = 1;
  std::vector<IrrepLabel> components;  // components[i] = (A+B-i, i)

  BigInt total_dimension() const;
};

struct MapAnalysis {
  BigInt source_dim;
  BigInt target_dim;
  BigInt kernel_dim;
  BigInt cokernel_dim;
  std::vector<IrrepLabel> kernel_labels;
  std::vector<IrrepLabel> cokernel_labels;
  /// Pieri indices present on both sides; each carries a nonzero certificate.
  std::int64_t shared_count = 0;
};

PieriDecomposition pieri_decompose(int n, std::int64_t A, std::int64_t B);

/// Weyl dimension formula: prod_{p<q} (l_p - l_q + q - p) / (q - p).
BigInt weyl_dimension(int n, const IrrepLabel& label);

/// Falling factorial (B-i)! / (B-k-i)!: the coefficient of the leading x0-term when
/// x0^k (x) d0^k hits the highest weight vector of Pieri index i. Zero when i < 0 or B-k-i < 0.
BigInt highest_weight_certificate(int k, std::int64_t B, std::int64_t i);

/// Kernel and cokernel of (sum x_i d/dy_i)^k : Sym^A (x) Sym^B -> Sym^{A+k} (x) Sym^{B-k},
/// read off by Schur's lemma as the difference of the two Pieri index ranges.
MapAnalysis predict_map_analysis(int n, int k, std::int64_t A, std::int64_t B);

struct MRange {
  std::int64_t lo = 0;
  std::int64_t hi = 0;  // inclusive
};

struct SeriesPoint {
  std::int64_t m = 0;
  std::int64_t A = 0;
  std::int64_t B = 0;
  MapAnalysis analysis;
};

struct KernelSeries {
  std::vector<SeriesPoint> points;
  std::vector<std::int64_t> dropped;  // m skipped because A < 0 or B < k
};

/// Source exponents for the restriction of D = a1*H1 - a2*H2 to the special fiber.
inline std::int64_t source_exponent_A(int /*n*/, int k, std::int64_t a1, std::int64_t m) {
  return m * a1 - k;
}
inline std::int64_t source_exponent_B(int n, int k, std::int64_t a2, std::int64_t m) {
  return m * a2 + k - (n + 1);
}

KernelSeries kernel_series_rep(int n, int k, std::int64_t a1, std::int64_t a2, MRange range);

}  // namespace apurity::rep
