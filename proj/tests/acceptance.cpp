// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "core/asymptotics.hpp"
#include "core/cohomology.hpp"
#include "core/error.hpp"
#include "core/mult_map.hpp"
#include "core/rep_theory.hpp"

using namespace apurity;

namespace {

// Runtime limits in seconds, and the window used for finite differences.
constexpr double kLimitClosedForm = 30;
constexpr double kLimitLowerBound = 60;
constexpr double kLimitEngines = 300;
constexpr double kLimitGrowth = 30;
constexpr double kLimitPurity = 60;
constexpr double kLimitClassify = 1;
constexpr double kLimitStructural = 30;
constexpr int kGrowthWindow = 12;

struct Outcome {
  bool ok = true;
  std::string detail;
  void expect(bool cond, const std::string& what) {
    if (!cond && ok) detail = what;
    ok = ok && cond;
  }
};

// Every oracle run made by any criterion, checked for rank-nullity in criterion 7.
std::vector<oracle::RankResult> g_oracle_runs;

oracle::RankResult run_oracle(const oracle::ContractionOperator& op, std::int64_t A, std::int64_t B) {
  auto r = oracle::oracle_rank(op, A, B);
  g_oracle_runs.push_back(r);
  return r;
}

// Binomial coefficient by the multiplicative formula, kept separate from the library's.
BigInt choose(std::int64_t p, std::int64_t q) {
  if (q < 0 || p < q) return 0;
  BigInt r = 1;
  for (std::int64_t i = 1; i <= q; ++i) r = r * (p - q + i) / i;
  return r;
}

oracle::ContractionOperator diagonal_operator(int n, int terms) {
  std::vector<oracle::OperatorTerm> t;
  for (int j = 0; j < terms; ++j) {
    oracle::Exponents e(static_cast<std::size_t>(n + 1), 0);
    e[static_cast<std::size_t>(j)] = 1;
    t.push_back({1, e, e});
  }
  return oracle::ContractionOperator(n, 1, std::move(t));
}

Outcome closed_form() {
  Outcome o;
  const auto op = diagonal_operator(2, 1);
  std::vector<asymptotics::SeriesSample> fit;
  for (std::int64_t m = 2; m <= 12; ++m) {
    const auto r = run_oracle(op, m - 1, m - 2);
    const BigInt expected = (BigInt(m) * m * m - m) / 2;
    o.expect(r.kernel_dim == expected && r.certified,
             "m=" + std::to_string(m) + " kernel " + to_string(r.kernel_dim) + " != " + to_string(expected));
    if (m >= 4) fit.push_back({m, r.kernel_dim});
  }
  const Rational lead = asymptotics::fit_leading_coefficient(fit, 3);
  o.expect(lead == Rational(1, 2), "leading coefficient " + to_string(lead));
  if (o.ok) o.detail = "kernel=(m^3-m)/2 for m in [2,12], leading coefficient 1/2";
  return o;
}

Outcome lower_bound() {
  Outcome o;
  // Exact kernels for m = 2..10, frozen from the oracle.
  const std::vector<std::int64_t> golden{3, 9, 19, 34, 55, 83, 119, 164, 219};
  const auto op = diagonal_operator(2, 2);
  std::ostringstream gaps;
  for (std::int64_t m = 2; m <= 10; ++m) {
    const auto r = run_oracle(op, m - 1, m - 2);
    BigInt bound = 0;
    for (std::int64_t j = 0; j <= m - 2; ++j) bound += choose(2 + (m - 1 - j), 2);
    const std::string tag = "m=" + std::to_string(m);
    o.expect(r.certified, tag + " rank not certified");
    o.expect(r.kernel_dim >= bound, tag + " kernel " + to_string(r.kernel_dim) + " < bound " + to_string(bound));
    o.expect(r.kernel_dim == golden[static_cast<std::size_t>(m - 2)],
             tag + " kernel " + to_string(r.kernel_dim) + " differs from golden");
    gaps << (m > 2 ? "," : "") << to_string(BigInt(r.kernel_dim - bound));
  }
  if (o.ok) o.detail = "kernel >= bound for m in [2,10], gaps " + gaps.str();
  return o;
}

Outcome engine_equivalence() {
  Outcome o;
  int cases = 0;
  for (int n = 1; n <= 2; ++n) {
    for (int k = 1; k <= 2; ++k) {
      const auto op = oracle::special_fiber_operator(n, k);
      for (std::int64_t A = 0; A <= 12; ++A) {
        for (std::int64_t B = k; B <= 12; ++B) {
          const auto p = rep::predict_map_analysis(n, k, A, B);
          const auto r = run_oracle(op, A, B);
          ++cases;
          o.expect(r.certified && p.kernel_dim == r.kernel_dim && p.cokernel_dim == r.cokernel_dim,
                   "n=" + std::to_string(n) + " k=" + std::to_string(k) + " A=" + std::to_string(A) +
                       " B=" + std::to_string(B) + " predicted " + to_string(p.kernel_dim) + "/" +
                       to_string(p.cokernel_dim) + " oracle " + to_string(r.kernel_dim) + "/" +
                       to_string(r.cokernel_dim));
        }
      }
    }
  }
  if (o.ok) o.detail = std::to_string(cases) + " maps agree";
  return o;
}

Outcome growth_orders() {
  Outcome o;
  const int n = 2;
  const std::vector<std::pair<std::int64_t, std::int64_t>> divisors{{2, 1}, {3, 1}, {1, 2}, {1, 3}, {1, 1}, {2, 2}};
  for (int k = 1; k <= 2; ++k) {
    for (const auto& [a1, a2] : divisors) {
      const auto start = asymptotics::stabilization_start(n, k, a1, a2);
      const auto series = rep::kernel_series_rep(n, k, a1, a2, {start, start + kGrowthWindow - 1});
      std::vector<asymptotics::SeriesSample> ker, coker;
      for (const auto& p : series.points) {
        ker.push_back({p.m, p.analysis.kernel_dim});
        coker.push_back({p.m, p.analysis.cokernel_dim});
      }
      const int dk = asymptotics::eventual_degree(ker);
      const int dc = asymptotics::eventual_degree(coker);
      const std::string tag = "k=" + std::to_string(k) + " (" + std::to_string(a1) + "," + std::to_string(a2) +
                              ") degrees " + std::to_string(dk) + "/" + std::to_string(dc);
      if (a1 > a2) {
        o.expect(dk == 2 * n - 1 && dc <= 2 * n - 2, tag);
        o.expect(dc == -1, tag + ": cokernel not eventually zero");
      } else if (a1 < a2) {
        o.expect(dc == 2 * n - 1 && dk <= 2 * n - 2, tag);
      } else {
        o.expect(dk <= 2 * n - 2 && dc <= 2 * n - 2, tag);
      }
    }
  }
  if (o.ok) o.detail = "degree 3 on the surviving side, at most 2 elsewhere";
  return o;
}

Outcome purity() {
  Outcome o;
  std::vector<std::pair<std::int64_t, std::int64_t>> grid;
  for (std::int64_t a1 = 0; a1 <= 5; ++a1) {
    for (std::int64_t a2 = 0; a2 <= 5; ++a2) grid.emplace_back(a1, a2);
  }
  std::size_t entries = 0;
  for (int k = 1; k <= 2; ++k) {
    const auto report = asymptotics::purity_report(2, k, grid);
    entries += report.entries.size();
    for (const auto* f : report.failures()) {
      o.expect(false, "k=" + std::to_string(k) + " (" + std::to_string(f->a1) + "," + std::to_string(f->a2) +
                          ") " + f->vector.purity.text());
    }
  }
  if (o.ok) o.detail = std::to_string(entries) + " classes pure or pure_zero";
  return o;
}

Outcome classification() {
  Outcome o;
  for (int n = 1; n <= 4; ++n) {
    for (std::int64_t a1 = -4; a1 <= 4; ++a1) {
      for (std::int64_t a2 = -4; a2 <= 4; ++a2) {
        std::vector<int> expected;
        if (a1 > 0 && a2 > 0) {
          expected = {0};
        } else if (a1 < 0 && a2 < 0) {
          expected = {2 * n - 1};
        } else if ((a1 > 0 && a2 < 0) || (a1 < 0 && a2 > 0)) {
          expected = {n - 1, n};
        } else if (a1 > 0 || a2 > 0) {
          expected = {0};
        } else if (a1 < 0 || a2 < 0) {
          expected = {2 * n - 1};
        }
        const auto label = asymptotics::classify(n, {a1, a2});
        o.expect(label.allowed_indices == expected,
                 "n=" + std::to_string(n) + " (" + std::to_string(a1) + "," + std::to_string(a2) + ")");
      }
    }
  }
  if (o.ok) o.detail = "4 x 81 classes";
  return o;
}

Outcome structural() {
  Outcome o;
  for (int n = 1; n <= 4; ++n) {
    for (std::int64_t A = 0; A <= 30; ++A) {
      for (std::int64_t B = 0; B <= 30; ++B) {
        o.expect(rep::pieri_decompose(n, A, B).total_dimension() == choose(A + n, n) * choose(B + n, n),
                 "pieri n=" + std::to_string(n) + " A=" + std::to_string(A) + " B=" + std::to_string(B));
      }
    }
  }
  for (int n = 1; n <= 5; ++n) {
    for (std::int64_t d = -30; d <= 30; ++d) {
      const auto h = cohomology::bott_cohomology(n, d);
      const auto dual = cohomology::bott_cohomology(n, -d - n - 1);
      for (int q = 0; q <= n; ++q) {
        o.expect(h.at(q) == dual.at(n - q), "serre n=" + std::to_string(n) + " d=" + std::to_string(d));
      }
    }
  }
  for (int n = 1; n <= 3; ++n) {
    for (std::int64_t a1 = -6; a1 <= 6; ++a1) {
      for (std::int64_t a2 = -6; a2 <= 6; ++a2) {
        const auto h = cohomology::kunneth_cohomology(n, {a1, a2});
        const auto dual = cohomology::kunneth_cohomology(n, {-a1 - n - 1, -a2 - n - 1});
        for (int q = 0; q <= 2 * n; ++q) {
          o.expect(h.at(q) == dual.at(2 * n - q), "kunneth n=" + std::to_string(n));
        }
      }
    }
  }
  for (int n = 1; n <= 3; ++n) {
    for (const cohomology::DivisorClass D : {cohomology::DivisorClass{1, 1}, {2, -1}, {-1, -3}, {0, 2}}) {
      const auto base = asymptotics::asymptotic_product(n, D);
      for (std::int64_t lambda = 1; lambda <= 4; ++lambda) {
        const auto scaled = asymptotics::asymptotic_product(n, D.scaled(lambda));
        BigInt factor = 1;
        for (int i = 0; i < 2 * n; ++i) factor *= lambda;
        for (std::size_t i = 0; i < base.values.size(); ++i) {
          o.expect(scaled.values[i] == base.values[i] * factor, "homogeneity n=" + std::to_string(n));
        }
      }
    }
  }
  for (const auto& r : g_oracle_runs) {
    o.expect(r.rank + r.kernel_dim == r.dim_source && r.rank + r.cokernel_dim == r.dim_target,
             "rank-nullity: rank " + to_string(r.rank) + " source " + to_string(r.dim_source));
  }
  if (o.ok) o.detail = "pieri, serre, kunneth, homogeneity, rank-nullity on " + std::to_string(g_oracle_runs.size()) +
                       " oracle runs";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "corner_closed_form", kLimitClosedForm, closed_form},
      {2, "two_term_lower_bound", kLimitLowerBound, lower_bound},
      {3, "engine_equivalence", kLimitEngines, engine_equivalence},
      {4, "growth_orders", kLimitGrowth, growth_orders},
      {5, "special_fiber_purity", kLimitPurity, purity},
      {6, "classification", kLimitClassify, classification},
      {7, "structural_identities", kLimitStructural, structural},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs >= c.limit) {
      if (o.ok) o.detail = "too slow";
      o.ok = false;
    }
    if (!o.ok) ++failed;
    std::printf("%s %d %s (%.2fs, limit %.0fs): %s\n", o.ok ? "PASS" : "FAIL", c.id, c.name, secs, c.limit,
                o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
