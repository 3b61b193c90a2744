#include "core/asymptotics.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "core/error.hpp"
#include "core/parallel.hpp"
#include "core/rep_theory.hpp"

namespace apurity::asymptotics {

namespace {

void require_consecutive(std::span<const SeriesSample> series) {
  for (std::size_t i = 1; i < series.size(); ++i) {
    require(series[i].m == series[i - 1].m + 1, "series must be consecutive in m");
  }
}

std::vector<BigInt> differences(const std::vector<BigInt>& row) {
  std::vector<BigInt> out;
  for (std::size_t i = 1; i < row.size(); ++i) out.push_back(row[i] - row[i - 1]);
  return out;
}

bool all_zero(const std::vector<BigInt>& row) {
  return std::all_of(row.begin(), row.end(), [](const BigInt& v) { return v == 0; });
}

std::vector<BigInt> values_of(std::span<const SeriesSample> series) {
  std::vector<BigInt> out;
  for (const auto& s : series) out.push_back(s.value);
  return out;
}

constexpr int kMaxWindowShifts = 16;

/// Fits with the window [start, start + width), sliding forward while differences have
/// not stabilized.
template <typename SeriesFn>
Rational fit_sliding(SeriesFn series_at, std::int64_t start, int width, int degree) {
  for (int attempt = 0; attempt < kMaxWindowShifts; ++attempt) {
    std::vector<SeriesSample> window;
    for (std::int64_t m = start; m < start + width; ++m) window.push_back({m, series_at(m)});
    try {
      return fit_leading_coefficient(window, degree);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NotStabilized) throw;
    }
    start += width;
  }
  fail(ErrorKind::NotStabilized, "series did not become polynomial of degree " + std::to_string(degree));
}

std::int64_t ceil_div(std::int64_t num, std::int64_t den) { return (num + den - 1) / den; }

}  // namespace

std::string case_name(CaseKind kind) {
  switch (kind) {
    case CaseKind::nef: return "nef";
    case CaseKind::anti_nef: return "anti_nef";
    case CaseKind::mixed: return "mixed";
    case CaseKind::boundary: return "boundary";
  }
  return "unknown";
}

CaseLabel classify(int n, DivisorClass D) {
  require(n >= 1, "n must be >= 1");
  const int top = 2 * n - 1;
  if (D.a1 > 0 && D.a2 > 0) return {CaseKind::nef, {0}};
  if (D.a1 < 0 && D.a2 < 0) return {CaseKind::anti_nef, {top}};
  if ((D.a1 > 0 && D.a2 < 0) || (D.a1 < 0 && D.a2 > 0)) return {CaseKind::mixed, {n - 1, n}};
  if (D.a1 > 0 || D.a2 > 0) return {CaseKind::boundary, {0}};
  if (D.a1 < 0 || D.a2 < 0) return {CaseKind::boundary, {top}};
  return {CaseKind::boundary, {}};
}

std::string Purity::text() const {
  switch (verdict) {
    case Verdict::pure_zero: return "pure_zero";
    case Verdict::pure: return "pure(" + std::to_string(indices.front()) + ")";
    case Verdict::impure: {
      std::ostringstream os;
      os << "impure(";
      for (std::size_t i = 0; i < indices.size(); ++i) os << (i ? "," : "") << indices[i];
      os << ")";
      return os.str();
    }
  }
  return "unknown";
}

Purity assess_purity(const std::vector<Rational>& values) {
  Purity out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] != 0) out.indices.push_back(static_cast<int>(i));
  }
  if (out.indices.empty()) {
    out.verdict = Verdict::pure_zero;
  } else if (out.indices.size() == 1) {
    out.verdict = Verdict::pure;
  } else {
    out.verdict = Verdict::impure;
  }
  return out;
}

Rational fit_leading_coefficient(std::span<const SeriesSample> series, int degree) {
  require(degree >= 0, "degree must be nonnegative");
  if (series.size() < static_cast<std::size_t>(degree) + 2) {
    fail(ErrorKind::NotStabilized, "need at least " + std::to_string(degree + 2) + " points, got " +
                                       std::to_string(series.size()));
  }
  require_consecutive(series);
  auto row = values_of(series);
  for (int d = 0; d < degree; ++d) row = differences(row);
  const BigInt leading = row.front();
  if (!all_zero(differences(row))) {
    fail(ErrorKind::NotStabilized, "order-" + std::to_string(degree + 1) +
                                       " differences do not vanish; extend the m range");
  }
  return Rational(leading, factorial(degree));
}

int eventual_degree(std::span<const SeriesSample> series) {
  require_consecutive(series);
  auto row = values_of(series);
  for (int d = -1; row.size() >= 2; ++d) {
    if (all_zero(row)) return d;
    row = differences(row);
  }
  fail(ErrorKind::NotStabilized, "too few points to certify the degree of the series");
}

AsymptoticVector asymptotic_product(int n, DivisorClass D) {
  require(n >= 1, "n must be >= 1");
  const int dim = 2 * n;
  const int width = dim + 4;
  std::vector<cohomology::CohomologyVector> rows;
  for (std::int64_t m = 1; m <= width; ++m) rows.push_back(cohomology::kunneth_cohomology(n, D.scaled(m)));

  AsymptoticVector out{dim, std::vector<Rational>(dim + 1), {}};
  const BigInt scale = factorial(dim);
  for (int q = 0; q <= dim; ++q) {
    std::vector<SeriesSample> series;
    for (std::int64_t m = 1; m <= width; ++m) series.push_back({m, rows[m - 1].values[q]});
    out.values[q] = fit_leading_coefficient(series, dim) * scale;
  }
  out.purity = assess_purity(out.values);
  return out;
}

std::int64_t stabilization_start(int n, int k, std::int64_t a1, std::int64_t a2) {
  require(a1 > 0 && a2 > 0, "stabilization_start needs a1, a2 > 0");
  std::int64_t m0 = std::max(ceil_div(k, a1), ceil_div(n + 1, a2));
  if (a1 != a2) {
    const std::int64_t gap = std::abs(a1 - a2);
    const std::int64_t spread = std::max<std::int64_t>(std::abs(2 * k - n - 1), n + 1);
    m0 = std::max(m0, spread / gap + 1);
  }
  return m0 + 1;
}

BigInt special_fiber_euler(int n, int k, std::int64_t a1, std::int64_t a2, std::int64_t m) {
  return cohomology::euler_characteristic(n, {m * a1, -m * a2}) -
         cohomology::euler_characteristic(n, {m * a1 - k, -m * a2 - k});
}

AsymptoticVector asymptotic_special_fiber(int n, int k, std::int64_t a1, std::int64_t a2) {
  require(n >= 1 && k >= 1, "n and k must be >= 1");
  require(a1 >= 0 && a2 >= 0, "special-fiber classes take a1, a2 >= 0 (D = a1*H1 - a2*H2)");
  require(a1 != 0 || a2 != 0, "a1 = a2 = 0 is the trivial class");
  const int dim = 2 * n - 1;
  const int width = 2 * n + 3;
  const BigInt scale = factorial(dim);
  AsymptoticVector out{dim, std::vector<Rational>(dim + 1), {}};

  if (a1 > 0 && a2 > 0) {
    const std::int64_t start = stabilization_start(n, k, a1, a2);
    auto side = [&](bool kernel) {
      return fit_sliding(
          [&](std::int64_t m) {
            const auto A = rep::source_exponent_A(n, k, a1, m);
            const auto B = rep::source_exponent_B(n, k, a2, m);
            const auto analysis = rep::predict_map_analysis(n, k, A, B);
            return kernel ? analysis.kernel_dim : analysis.cokernel_dim;
          },
          start, width, dim);
    };
    out.values[n - 1] = side(true) * scale;
    out.values[n] = side(false) * scale;
  } else {
    // On an axis only one index survives; its value is the Euler-characteristic
    // leading term, with sign (-1)^index.
    const int index = (a2 == 0) ? 0 : dim;
    const Rational lead = fit_sliding([&](std::int64_t m) { return special_fiber_euler(n, k, a1, a2, m); }, 1,
                                      width, dim);
    out.values[index] = (index % 2 == 0 ? lead : Rational(-lead)) * scale;
  }
  out.purity = assess_purity(out.values);
  return out;
}

bool PurityReport::all_pure() const {
  return std::all_of(entries.begin(), entries.end(), [](const PurityEntry& e) { return e.ok; });
}

std::vector<const PurityEntry*> PurityReport::failures() const {
  std::vector<const PurityEntry*> out;
  for (const auto& e : entries) {
    if (!e.ok) out.push_back(&e);
  }
  return out;
}

PurityReport purity_report(int n, int k, const std::vector<std::pair<std::int64_t, std::int64_t>>& divisors) {
  PurityReport report{n, k, {}};
  report.entries = parallel_map(divisors, [&](const std::pair<std::int64_t, std::int64_t>& d) {
    PurityEntry entry;
    entry.a1 = d.first;
    entry.a2 = d.second;
    entry.label = classify(n, {d.first, -d.second});
    if (d.first == 0 && d.second == 0) {
      entry.vector = {2 * n - 1, std::vector<Rational>(2 * n), {}};
      entry.vector.purity = assess_purity(entry.vector.values);
    } else {
      entry.vector = asymptotic_special_fiber(n, k, d.first, d.second);
    }
    const auto& allowed = entry.label.allowed_indices;
    const bool inside = std::all_of(entry.vector.purity.indices.begin(), entry.vector.purity.indices.end(),
                                    [&](int i) { return std::find(allowed.begin(), allowed.end(), i) != allowed.end(); });
    entry.ok = entry.vector.purity.verdict != Verdict::impure && inside;
    return entry;
  });
  return report;
}

}  // namespace apurity::asymptotics
