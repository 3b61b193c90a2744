#include "core/exact_rank.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <unordered_map>

namespace apurity::oracle {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 pow_mod(u64 base, u64 exp, u64 m) {
  u64 acc = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) acc = mul_mod(acc, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return acc;
}

u64 inv_mod(u64 a, u64 p) { return pow_mod(a, p - 2, p); }

u64 reduce(const BigInt& v, u64 p) {
  BigInt r = v % p;
  if (r < 0) r += p;
  return r.convert_to<u64>();
}

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

/// Splits m into independent blocks: no row is shared between two blocks.
std::vector<SparseMatrix> split_blocks(const SparseMatrix& m) {
  DisjointSets sets(m.rows + m.cols);
  for (std::size_t c = 0; c < m.cols; ++c) {
    for (const auto& e : m.columns[c]) sets.unite(m.rows + c, e.row);
  }
  std::unordered_map<std::size_t, std::size_t> block_of_root;
  std::vector<SparseMatrix> blocks;
  std::vector<std::size_t> local_row(m.rows, SIZE_MAX);
  for (std::size_t c = 0; c < m.cols; ++c) {
    if (m.columns[c].empty()) continue;
    const auto root = sets.find(m.rows + c);
    auto [it, inserted] = block_of_root.try_emplace(root, blocks.size());
    if (inserted) blocks.emplace_back();
    auto& block = blocks[it->second];
    std::vector<MatrixEntry> column;
    column.reserve(m.columns[c].size());
    for (const auto& e : m.columns[c]) {
      if (local_row[e.row] == SIZE_MAX) local_row[e.row] = block.rows++;
      column.push_back({local_row[e.row], e.value});
    }
    std::sort(column.begin(), column.end(), [](const auto& x, const auto& y) { return x.row < y.row; });
    block.columns.push_back(std::move(column));
    ++block.cols;
  }
  return blocks;
}

}  // namespace

std::size_t SparseMatrix::nonzeros() const {
  std::size_t total = 0;
  for (const auto& c : columns) total += c.size();
  return total;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (u64 small : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % small == 0) return n == small;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    u64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::pair<std::uint64_t, std::uint64_t> select_primes(std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::uniform_int_distribution<u64> dist((u64{1} << 30) + 1, (u64{1} << 31) - 1);
  auto draw = [&] {
    for (;;) {
      const u64 candidate = dist(gen) | 1;
      if (is_prime(candidate)) return candidate;
    }
  };
  const u64 first = draw();
  u64 second = draw();
  while (second == first) second = draw();
  return {first, second};
}

std::size_t rank_mod_p(const SparseMatrix& m, std::uint64_t p) {
  using SparseVec = std::vector<std::pair<std::size_t, u64>>;
  // pivots[r] holds a reduced column whose leading row is r, normalized to lead 1.
  std::vector<SparseVec> pivots(m.rows);
  std::vector<bool> has_pivot(m.rows, false);
  std::size_t rank = 0;
  SparseVec v;
  SparseVec scratch;
  for (const auto& column : m.columns) {
    v.clear();
    for (const auto& e : column) {
      const u64 r = reduce(e.value, p);
      if (r) v.emplace_back(e.row, r);
    }
    while (!v.empty()) {
      const std::size_t lead = v.front().first;
      if (!has_pivot[lead]) {
        const u64 inv = inv_mod(v.front().second, p);
        for (auto& [row, val] : v) val = mul_mod(val, inv, p);
        pivots[lead] = v;
        has_pivot[lead] = true;
        ++rank;
        break;
      }
      // v -= v[lead] * pivot
      const u64 factor = v.front().second;
      const auto& piv = pivots[lead];
      scratch.clear();
      std::size_t i = 0, j = 0;
      while (i < v.size() || j < piv.size()) {
        if (j == piv.size() || (i < v.size() && v[i].first < piv[j].first)) {
          scratch.push_back(v[i++]);
        } else {
          const u64 sub = mul_mod(factor, piv[j].second, p);
          if (i < v.size() && v[i].first == piv[j].first) {
            const u64 val = (v[i].second + p - sub) % p;
            if (val) scratch.emplace_back(v[i].first, val);
            ++i;
          } else {
            scratch.emplace_back(piv[j].first, (p - sub) % p);
          }
          ++j;
        }
      }
      v.swap(scratch);
    }
  }
  return rank;
}

std::size_t rank_exact(const SparseMatrix& m) {
  // Row-major dense copy: rows x cols.
  std::vector<std::vector<BigInt>> a(m.rows, std::vector<BigInt>(m.cols, BigInt(0)));
  for (std::size_t c = 0; c < m.cols; ++c) {
    for (const auto& e : m.columns[c]) a[e.row][c] = e.value;
  }
  BigInt prev = 1;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols && rank < m.rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < m.rows && a[pivot][col] == 0) ++pivot;
    if (pivot == m.rows) continue;
    std::swap(a[pivot], a[rank]);
    const BigInt& p = a[rank][col];
    for (std::size_t i = rank + 1; i < m.rows; ++i) {
      const BigInt lead = a[i][col];
      for (std::size_t j = col + 1; j < m.cols; ++j) {
        a[i][j] = (a[i][j] * p - lead * a[rank][j]) / prev;
      }
      a[i][col] = 0;
    }
    prev = p;
    ++rank;
  }
  return rank;
}

RankResult exact_rank(const SparseMatrix& m, const RankOptions& options) {
  RankResult out;
  out.dim_source = m.cols;
  out.dim_target = m.rows;
  std::tie(out.prime1, out.prime2) = select_primes(options.seed);
  out.certified = true;

  std::size_t total = 0;
  for (const auto& block : split_blocks(m)) {
    ++out.blocks;
    const std::size_t r1 = rank_mod_p(block, out.prime1);
    const std::size_t r2 = rank_mod_p(block, out.prime2);
    std::size_t r = std::max(r1, r2);  // modular rank never exceeds the rational rank
    if (std::max(block.rows, block.cols) <= options.exact_threshold) {
      r = rank_exact(block);
      ++out.exact_blocks;
    } else if (r1 != r2) {
      out.certified = false;
    }
    total += r;
  }
  out.rank = total;
  out.kernel_dim = out.dim_source - out.rank;
  out.cokernel_dim = out.dim_target - out.rank;
  return out;
}

}  // namespace apurity::oracle
