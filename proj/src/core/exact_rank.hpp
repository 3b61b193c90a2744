#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "core/bigint.hpp"

namespace apurity::oracle {

inline constexpr std::uint64_t kDefaultSeed = 1;
inline constexpr std::size_t kDefaultExactThreshold = 2000;

struct MatrixEntry {
  std::size_t row = 0;
  BigInt value;
};

/// Column-major sparse integer matrix; each column is sorted by row with no zeros.
struct SparseMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::vector<MatrixEntry>> columns;

  std::size_t nonzeros() const;
};

struct RankOptions {
  std::uint64_t seed = kDefaultSeed;
  /// Connected blocks with both sides at most this size are also eliminated exactly over Z.
  std::size_t exact_threshold = kDefaultExactThreshold;
};

struct RankResult {
  BigInt dim_source;
  BigInt dim_target;
  BigInt rank;
  BigInt kernel_dim;
  BigInt cokernel_dim;
  bool certified = false;
  std::uint64_t prime1 = 0;
  std::uint64_t prime2 = 0;
  std::size_t blocks = 0;
  std::size_t exact_blocks = 0;
};

bool is_prime(std::uint64_t n);

/// Two distinct primes in (2^30, 2^31) drawn from a generator seeded with `seed`.
std::pair<std::uint64_t, std::uint64_t> select_primes(std::uint64_t seed);

/// Rank over F_p.
std::size_t rank_mod_p(const SparseMatrix& m, std::uint64_t p);

/// Rank over Z by fraction-free (Bareiss) elimination.
std::size_t rank_exact(const SparseMatrix& m);

/// Rank over Q. The matrix is split into connected row/column blocks; each block is
/// ranked modulo two primes, and exactly when small enough. `certified` holds when
/// every block is either exact or has agreeing modular ranks.
RankResult exact_rank(const SparseMatrix& m, const RankOptions& options = {});

}  // namespace apurity::oracle
