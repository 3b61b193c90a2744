#include "core/cohomology.hpp"

#include "core/error.hpp"

namespace apurity::cohomology {

BigInt CohomologyVector::at(int q) const {
  if (q < 0 || q >= static_cast<int>(values.size())) return 0;
  return values[q];
}

int CohomologyVector::support() const {
  for (std::size_t q = 0; q < values.size(); ++q) {
    if (values[q] != 0) return static_cast<int>(q);
  }
  return -1;
}

int CohomologyVector::nonzero_count() const {
  int count = 0;
  for (const auto& v : values) count += (v != 0);
  return count;
}

CohomologyVector bott_cohomology(int n, std::int64_t d) {
  require(n >= 1, "projective dimension n must be >= 1");
  CohomologyVector out{n, std::vector<BigInt>(n + 1, BigInt(0))};
  if (d >= 0) {
    out.values[0] = binomial(n + d, n);
  } else if (d <= -(n + 1)) {
    out.values[n] = binomial(-d - 1, n);
  }
  return out;
}

CohomologyVector kunneth_cohomology(int n, DivisorClass D) {
  const auto first = bott_cohomology(n, D.a1);
  const auto second = bott_cohomology(n, D.a2);
  CohomologyVector out{2 * n, std::vector<BigInt>(2 * n + 1, BigInt(0))};
  for (int j = 0; j <= n; ++j) {
    if (first.values[j] == 0) continue;
    for (int l = 0; l <= n; ++l) out.values[j + l] += first.values[j] * second.values[l];
  }
  return out;
}

BigInt euler_characteristic(int n, DivisorClass D) {
  const auto h = kunneth_cohomology(n, D);
  BigInt chi = 0;
  for (std::size_t q = 0; q < h.values.size(); ++q) {
    if (q % 2 == 0) {
      chi += h.values[q];
    } else {
      chi -= h.values[q];
    }
  }
  return chi;
}

}  // namespace apurity::cohomology
