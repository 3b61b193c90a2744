#include <functional>
#include <sstream>

#include "core/asymptotics.hpp"
#include "core/cohomology.hpp"
#include "core/error.hpp"
#include "core/service.hpp"

namespace apurity {

namespace {

using nlohmann::json;

struct Check {
  explicit Check(std::string check_name) : name(std::move(check_name)) {}

  std::string name;
  std::int64_t cases = 0;
  std::vector<std::string> failures;

  void expect(bool cond, const std::function<std::string()>& detail) {
    ++cases;
    if (!cond) failures.push_back(detail());
  }
};

struct SuiteBounds {
  std::int64_t exponent_max;  // A, B for engine equivalence
  std::int64_t m_closed_form;
  std::int64_t m_lower_bound;
  int pieri_n;
  std::int64_t pieri_max;
  int serre_n;
  std::int64_t serre_d;
  int euler_n;  // predict-only identities
  std::int64_t purity_max;
  int purity_k;
};

SuiteBounds bounds_for(VerifySuite suite) {
  if (suite == VerifySuite::small) return {8, 8, 8, 2, 12, 3, 12, 2, 3, 1};
  return {12, 12, 10, 4, 30, 5, 30, 3, 5, 2};
}

oracle::ContractionOperator diagonal_operator(int n, int terms) {
  std::vector<oracle::OperatorTerm> t;
  for (int j = 0; j < terms; ++j) {
    oracle::Exponents e(static_cast<std::size_t>(n + 1), 0);
    e[j] = 1;
    t.push_back({1, e, e});
  }
  return oracle::ContractionOperator(n, 1, std::move(t));
}

std::string str(const BigInt& v) { return to_string(v); }

}  // namespace

Report Service::verify(VerifySuite suite) const {
  const auto b = bounds_for(suite);
  const auto options = oracle_options();
  std::vector<Check> checks;

  {
    Check c("engine_equivalence");
    Check nullity("rank_nullity");
    for (int n = 1; n <= 2; ++n) {
      for (int k = 1; k <= 2; ++k) {
        const auto op = oracle::special_fiber_operator(n, k);
        for (std::int64_t A = 0; A <= b.exponent_max; ++A) {
          for (std::int64_t B = k; B <= b.exponent_max; ++B) {
            const auto predicted = rep::predict_map_analysis(n, k, A, B);
            const auto observed = oracle::oracle_rank(op, A, B, options);
            c.expect(predicted.kernel_dim == observed.kernel_dim && predicted.cokernel_dim == observed.cokernel_dim,
                     [&] {
                       std::ostringstream os;
                       os << "n=" << n << " k=" << k << " A=" << A << " B=" << B << ": predicted ("
                          << str(predicted.kernel_dim) << "," << str(predicted.cokernel_dim) << ") oracle ("
                          << str(observed.kernel_dim) << "," << str(observed.cokernel_dim) << ")";
                       return os.str();
                     });
            nullity.expect(observed.kernel_dim + observed.rank == observed.dim_source &&
                               observed.cokernel_dim + observed.rank == observed.dim_target && observed.certified,
                           [&] { return "rank-nullity fails at n=" + std::to_string(n) + " A=" + std::to_string(A); });
          }
        }
      }
    }
    checks.push_back(std::move(c));
    checks.push_back(std::move(nullity));
  }

  {
    Check c("corollary_closed_form");
    const auto op = diagonal_operator(2, 1);
    const auto series = oracle::oracle_series(op, 1, 1, {2, b.m_closed_form}, options);
    for (const auto& p : series.points) {
      const BigInt expected = (BigInt(p.m) * p.m * p.m - p.m) / 2;
      c.expect(p.result.kernel_dim == expected, [&] {
        return "m=" + std::to_string(p.m) + ": kernel " + str(p.result.kernel_dim) + " != " + str(expected);
      });
    }
    checks.push_back(std::move(c));
  }

  {
    Check c("corollary_lower_bound");
    const auto op = diagonal_operator(2, 2);
    const auto series = oracle::oracle_series(op, 1, 1, {2, b.m_lower_bound}, options);
    for (const auto& p : series.points) {
      BigInt bound = 0;
      for (std::int64_t j = 0; j <= p.m - 2; ++j) bound += binomial(2 + (p.m - 1 - j), 2);
      c.expect(p.result.kernel_dim >= bound, [&] {
        return "m=" + std::to_string(p.m) + ": kernel " + str(p.result.kernel_dim) + " < " + str(bound);
      });
    }
    checks.push_back(std::move(c));
  }

  {
    Check c("pieri_dimension_sum");
    for (int n = 1; n <= b.pieri_n; ++n) {
      for (std::int64_t A = 0; A <= b.pieri_max; ++A) {
        for (std::int64_t B = 0; B <= b.pieri_max; ++B) {
          const auto total = rep::pieri_decompose(n, A, B).total_dimension();
          const auto expected = binomial(A + n, n) * binomial(B + n, n);
          c.expect(total == expected, [&] {
            return "n=" + std::to_string(n) + " A=" + std::to_string(A) + " B=" + std::to_string(B);
          });
        }
      }
    }
    checks.push_back(std::move(c));
  }

  {
    Check c("rep_euler_consistency");
    for (int n = 1; n <= b.euler_n; ++n) {
      for (int k = 1; k <= 2; ++k) {
        for (std::int64_t A = 0; A <= b.exponent_max; ++A) {
          for (std::int64_t B = k; B <= b.exponent_max; ++B) {
            const auto a = rep::predict_map_analysis(n, k, A, B);
            const BigInt lhs = BigInt(a.kernel_dim) - a.cokernel_dim;
            const BigInt rhs = binomial(A + n, n) * binomial(B + n, n) - binomial(A + k + n, n) * binomial(B - k + n, n);
            c.expect(lhs == rhs, [&] {
              return "n=" + std::to_string(n) + " k=" + std::to_string(k) + " A=" + std::to_string(A) +
                     " B=" + std::to_string(B);
            });
          }
        }
      }
    }
    checks.push_back(std::move(c));
  }

  {
    Check serre("serre_duality");
    Check kunneth("kunneth_duality");
    for (int n = 1; n <= b.serre_n; ++n) {
      for (std::int64_t d = -b.serre_d; d <= b.serre_d; ++d) {
        const auto h = cohomology::bott_cohomology(n, d);
        const auto dual = cohomology::bott_cohomology(n, -d - n - 1);
        for (int q = 0; q <= n; ++q) {
          serre.expect(h.values[q] == dual.values[n - q], [&] {
            return "n=" + std::to_string(n) + " d=" + std::to_string(d) + " q=" + std::to_string(q);
          });
        }
      }
      for (std::int64_t a1 = -6; a1 <= 6; ++a1) {
        for (std::int64_t a2 = -6; a2 <= 6; ++a2) {
          const auto h = cohomology::kunneth_cohomology(n, {a1, a2});
          const auto dual = cohomology::kunneth_cohomology(n, {-a1 - n - 1, -a2 - n - 1});
          bool same = true;
          for (int i = 0; i <= 2 * n; ++i) same = same && h.values[i] == dual.values[2 * n - i];
          kunneth.expect(same, [&] {
            return "n=" + std::to_string(n) + " (" + std::to_string(a1) + "," + std::to_string(a2) + ")";
          });
        }
      }
    }
    checks.push_back(std::move(serre));
    checks.push_back(std::move(kunneth));
  }

  {
    Check c("special_fiber_purity");
    for (int k = 1; k <= b.purity_k; ++k) {
      std::vector<std::pair<std::int64_t, std::int64_t>> grid;
      for (std::int64_t a1 = 0; a1 <= b.purity_max; ++a1) {
        for (std::int64_t a2 = 0; a2 <= b.purity_max; ++a2) grid.emplace_back(a1, a2);
      }
      const auto report = asymptotics::purity_report(2, k, grid);
      for (const auto& e : report.entries) {
        c.expect(e.ok, [&] {
          return "n=2 k=" + std::to_string(k) + " (" + std::to_string(e.a1) + "," + std::to_string(e.a2) +
                 "): " + e.vector.purity.text();
        });
      }
    }
    checks.push_back(std::move(c));
  }

  if (cache_) {
    Check c("cache_soundness");
    for (const auto& record : cache_->records()) {
      json fresh;
      std::string error;
      try {
        fresh = recompute(record);
      } catch (const Error& e) {
        error = e.what();
      }
      c.expect(error.empty() && fresh == record.value, [&] {
        if (!error.empty()) return "key " + record.key + ": " + error;
        return "key " + record.key + ": cached " + record.value.dump() + " != recomputed " + fresh.dump();
      });
    }
    checks.push_back(std::move(c));
  }

  Report r;
  r.doc = header("verify");
  r.doc["suite"] = suite == VerifySuite::small ? "small" : "full";
  r.header = {"check", "status", "cases", "detail"};
  json list = json::array();
  bool passed = true;
  for (const auto& c : checks) {
    const bool ok = c.failures.empty();
    passed = passed && ok;
    json failures = json::array();
    for (std::size_t i = 0; i < c.failures.size() && i < 10; ++i) failures.push_back(c.failures[i]);
    list.push_back({{"name", c.name}, {"status", ok ? "pass" : "fail"}, {"cases", std::to_string(c.cases)},
                    {"failures", failures}});
    r.rows.push_back({c.name, ok ? "pass" : "fail", std::to_string(c.cases), ok ? "" : c.failures.front()});
  }
  r.doc["checks"] = list;
  r.doc["passed"] = passed;
  r.ok = passed;
  return r;
}

}  // namespace apurity
