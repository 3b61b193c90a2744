#pragma once

#include <cstdint>
#include <vector>

#include "core/bigint.hpp"

namespace apurity::cohomology {

/// a1*H1 + a2*H2 on P^n x P^n, H_i the pullback of the hyperplane class of factor i.
struct DivisorClass {
  std::int64_t a1 = 0;
  std::int64_t a2 = 0;

  DivisorClass operator-() const { return {-a1, -a2}; }
  DivisorClass scaled(std::int64_t m) const { return {m * a1, m * a2}; }
  friend bool operator==(const DivisorClass&, const DivisorClass&) = default;
};

/// Dimensions h^0..h^top of one line bundle. values.size() == top + 1.
struct CohomologyVector {
  int n_ambient = 0;
  std::vector<BigInt> values;

  BigInt at(int q) const;
  /// Index of the single nonzero entry, or -1 for the zero vector.
  int support() const;
  int nonzero_count() const;
};

/// h^q(P^n, O(d)).
CohomologyVector bott_cohomology(int n, std::int64_t d);

/// h^i(P^n x P^n, O(a1, a2)) by convolving the two Bott vectors.
CohomologyVector kunneth_cohomology(int n, DivisorClass D);

BigInt euler_characteristic(int n, DivisorClass D);

}  // namespace apurity::cohomology
