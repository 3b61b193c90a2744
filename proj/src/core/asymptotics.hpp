#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "core/bigint.hpp"
#include "core/cohomology.hpp"

namespace apurity::asymptotics {

using cohomology::DivisorClass;

enum class CaseKind { nef, anti_nef, mixed, boundary };

std::string case_name(CaseKind kind);

/// Indices i where h-hat^i(X, D|_X) may be nonzero on a general (k,k) hypersurface
/// X of P^n x P^n (dimension 2n-1).
struct CaseLabel {
  CaseKind kind = CaseKind::boundary;
  std::vector<int> allowed_indices;
};

/// Sign dispatch: a1, a2 > 0 nef {0}; a1, a2 < 0 anti_nef {2n-1}; opposite signs mixed
/// {n-1, n}. On the axes (boundary) the allowed set is that of every quadrant the class
/// touches: {0} for (0,+) and (+,0), {2n-1} for (0,-) and (-,0), empty for (0,0).
CaseLabel classify(int n, DivisorClass D);

enum class Verdict { pure, pure_zero, impure };

struct Purity {
  Verdict verdict = Verdict::pure_zero;
  std::vector<int> indices;  // nonzero entries

  /// "pure(i)", "pure_zero" or "impure(i,j,...)".
  std::string text() const;
};

Purity assess_purity(const std::vector<Rational>& values);

struct AsymptoticVector {
  int dim = 0;
  std::vector<Rational> values;  // h-hat^0 .. h-hat^dim
  Purity purity;
};

struct SeriesSample {
  std::int64_t m = 0;
  BigInt value;
};

/// Leading coefficient of the polynomial through the series, read from the
/// degree-th forward difference. The series must be consecutive in m with at least
/// degree+2 points; throws NotStabilized when the (degree+1)-th differences are not
/// all zero.
Rational fit_leading_coefficient(std::span<const SeriesSample> series, int degree);

/// Smallest d whose (d+1)-th differences vanish across the window; -1 for the zero
/// series. Throws NotStabilized if no difference row of length >= 2 vanishes.
int eventual_degree(std::span<const SeriesSample> series);

/// h-hat on P^n x P^n (dimension 2n): (2n)! times the degree-2n coefficient of
/// m -> h^i(m*D), for every i.
AsymptoticVector asymptotic_product(int n, DivisorClass D);

/// First m at which the special-fiber kernel/cokernel series for D = a1*H1 - a2*H2
/// is polynomial: all index-range comparisons have settled, A >= 0 and B >= k.
std::int64_t stabilization_start(int n, int k, std::int64_t a1, std::int64_t a2);

/// h-hat on the special fiber Y = V((sum x_i y_i)^k) for D = a1*H1 - a2*H2, a1, a2 >= 0
/// not both zero. Mixed classes read h-hat^{n-1} and h-hat^n off the kernel and cokernel
/// of the multiplication map; classes on an axis report the Euler-characteristic
/// leading term at the single allowed index.
AsymptoticVector asymptotic_special_fiber(int n, int k, std::int64_t a1, std::int64_t a2);

/// Euler characteristic of O_Y(m*D) from the restriction sequence.
BigInt special_fiber_euler(int n, int k, std::int64_t a1, std::int64_t a2, std::int64_t m);

struct PurityEntry {
  std::int64_t a1 = 0;
  std::int64_t a2 = 0;
  CaseLabel label;
  AsymptoticVector vector;
  bool ok = false;  // pure or pure_zero, with support inside label.allowed_indices
};

struct PurityReport {
  int n = 0;
  int k = 0;
  std::vector<PurityEntry> entries;

  bool all_pure() const;
  std::vector<const PurityEntry*> failures() const;
};

/// Special-fiber purity for each (a1, a2), meaning D = a1*H1 - a2*H2. The zero class
/// is reported as pure_zero.
PurityReport purity_report(int n, int k, const std::vector<std::pair<std::int64_t, std::int64_t>>& divisors);

}  // namespace apurity::asymptotics
