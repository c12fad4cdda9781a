// Acceptance gate: one timed pass/fail line per shipping criterion.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "queens/analysis.hpp"
#include "queens/board.hpp"
#include "queens/constructions.hpp"
#include "queens/formulas.hpp"
#include "queens/rng.hpp"
#include "queens/search.hpp"
#include "queens/verify.hpp"

using namespace queens;

namespace {

int failures = 0;

void criterion(int num, const std::string& what, double budget_seconds,
               const std::function<bool(std::string&)>& body) {
  std::string detail;
  auto start = std::chrono::steady_clock::now();
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  if (seconds >= budget_seconds) {
    ok = false;
    if (!detail.empty()) detail += "; ";
    detail += "over time budget";
  }
  if (!ok) ++failures;
  std::printf("[%s] criterion %d: %s%s%s (%.2fs < %.0fs)\n",
              ok ? "PASS" : "FAIL", num, what.c_str(),
              detail.empty() ? "" : " — ", detail.c_str(), seconds,
              budget_seconds);
  std::fflush(stdout);
}

long long covered_enumeration(const Placement& p) {
  long long covered = 0;
  for (int y = 1; y <= p.dim.n; ++y)
    for (int x = 1; x <= p.dim.n; ++x)
      for (Square q : p.queens)
        if (q.x == x || q.y == y || q.x - q.y == x - y || q.x + q.y == x + y) {
          ++covered;
          break;
        }
  return covered;
}

long long naive_min_covered(int k, int n) {
  std::vector<Square> cells;
  for (int y = 1; y <= n; ++y)
    for (int x = 1; x <= n; ++x) cells.push_back({x, y});
  const int total = int(cells.size());
  long long best = -1;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    std::vector<Square> qs;
    for (int i : idx) qs.push_back(cells[i]);
    long long covered = covered_enumeration({make_dim(n), qs});
    if (best < 0 || covered < best) best = covered;
    int pos = k - 1;
    while (pos >= 0 && idx[pos] == total - k + pos) --pos;
    if (pos < 0) break;
    ++idx[pos];
    for (int i = pos + 1; i < k; ++i) idx[i] = idx[i - 1] + 1;
  }
  return best;
}

}  // namespace

int main() {
  criterion(1, "bound tables", 1.0, [](std::string&) {
    bool ok = g_of(3) == 1 && g_of(10) == 9 && g_of(18) == 28 &&
              F_of(14) == 17;
    for (long long m = 2; m <= 2000; ++m) ok = ok && F_of(m) == F_closed(m);
    return ok;
  });

  criterion(2,
            "construction counts and line budgets "
            "(m=4 and m=7 degenerate to m-1 lines: single queen, full 2x2 "
            "block)",
            1.0, [](std::string& detail) {
              bool ok = true;
              for (int m = 3; m <= 60 && ok; ++m) {
                Placement p = uneven_hexagon(m, make_dim(2 * m));
                ok = (long long)p.queens.size() == (1LL * m * m + 3) / 12;
                const int want = (m == 4 || m == 7) ? m - 1 : m;
                ok = ok && line_budget(p).m == want;
                if (!ok) detail = "failed at m=" + std::to_string(m);
              }
              for (long long m = 1; m <= 40 && ok; ++m) {
                ok = regular_hexagon_count(m) == 3 * m * m - 3 * m + 1 &&
                     regular_hexagon_count(m) ==
                         hexagon_block_count(2 * m - 1, 2 * m - 1);
                if (!ok) detail = "hexagon identity failed at m=" + std::to_string(m);
              }
              return ok;
            });

  criterion(3, "nine-queens line profile and coverage", 1.0,
            [](std::string& detail) {
              Placement p = nine_queens(make_dim(11));
              LineSet ls = lines_of(p);
              std::map<int, int> hist = diag_length_histogram(p);
              long long covered = covered_enumeration(p);
              bool ok = ls.rows.size() == 3 && ls.cols.size() == 3 &&
                        hist[11] == 2 && hist[6] == 4 && hist[1] == 4 &&
                        covered == 89 && covered_count(p) == covered &&
                        covered <= 10 * 11;
              if (!ok)
                detail = "covered=" + std::to_string(covered_count(p));
              return ok;
            });

  criterion(4, "constructed coverage within m_star(k)*n + 3k", 5.0,
            [](std::string& detail) {
              for (int k = 1; k <= 30; ++k) {
                Placement p = construct_best(k, make_dim(50));
                if (int(p.queens.size()) != k ||
                    covered_count(p) > m_star(k) * 50 + 3LL * k) {
                  detail = "failed at k=" + std::to_string(k);
                  return false;
                }
              }
              return true;
            });

  criterion(5, "exact search optimality versus enumeration", 60.0,
            [](std::string& detail) {
              for (int n = 4; n <= 8; ++n) {
                SearchResult r = exact_min_covered(1, make_dim(n));
                bool corner = false;
                for (const Placement& w : r.witnesses)
                  corner = corner ||
                           w.queens == std::vector<Square>{{1, 1}};
                if (r.optimum != 3 * n - 2 || !corner) {
                  detail = "single-queen case failed at n=" + std::to_string(n);
                  return false;
                }
              }
              for (int n = 2; n <= 6; ++n)
                for (int k = 1; k <= 3 && k <= n * n; ++k) {
                  SearchResult r = exact_min_covered(k, make_dim(n));
                  if (r.optimum != naive_min_covered(k, n)) {
                    detail = "mismatch at k=" + std::to_string(k) +
                             " n=" + std::to_string(n);
                    return false;
                  }
                }
              return true;
            });

  criterion(6, "lower-bound machinery property suites", 120.0,
            [](std::string& detail) {
              bool ok = true;
              for (const char* name : {"diag-sums", "konig", "rings", "ring-bound"}) {
                SuiteResult r = run_suites(name, 12345).front();
                if (!r.ok()) {
                  ok = false;
                  detail += std::string(detail.empty() ? "" : "; ") + r.name +
                            ": " + (r.failures.empty() ? "failed"
                                                       : r.failures.front());
                }
              }
              return ok;
            });

  criterion(7, "tightness rediscovery by exhaustive selection search", 600.0,
            [](std::string& detail) {
              TripleSearchResult best =
                  max_triple_points(5, 5, 4, 9, DiagMode::Both);
              if (best.best != 17 ||
                  int(triple_intersections(best.witness).size()) != 17) {
                detail = "five-five-four search found " +
                         std::to_string(best.best);
                return false;
              }
              if (!find_packed_arrangement(5, 5, 4, 17, 9, DiagMode::Both)) {
                detail = "packed arrangement not found";
                return false;
              }
              for (int m = 2; m <= 9; ++m) {
                long long sweep = 0;
                for (int a = 1; 2 * a < m; ++a)
                  sweep = std::max(
                      sweep, (long long)max_triple_points(a, a, m - 2 * a, 8,
                                                          DiagMode::LongOnly)
                                 .best);
                if (sweep != (1LL * m * m + 3) / 12) {
                  detail = "long-only sweep failed at m=" + std::to_string(m);
                  return false;
                }
              }
              return true;
            });

  criterion(8, "certificate soundness over random placements", 30.0,
            [](std::string& detail) {
              Rng rng(12345);
              for (int round = 0; round < 1000; ++round) {
                const int n = rng.in(2, 12);
                const int k = rng.in(1, std::min(10, n * n));
                Placement p = make_placement(n, random_squares(rng, n, k));
                Certificate cert = lower_bound_certificate(p);
                bool ok = cert.sound &&
                          cert.total_length >= (long long)n * cert.m &&
                          cert.c == min_diag_cover(p).count;
                long long total = 0;
                for (Line line : cert.lines) {
                  total += line_length(line, p.dim);
                  bool through = false;
                  for (Square q : p.queens)
                    through = through || line_through(q, line.kind) == line;
                  ok = ok && through;
                }
                ok = ok && total == cert.total_length;
                if (!ok) {
                  detail = "failed at round " + std::to_string(round);
                  return false;
                }
              }
              return true;
            });

  std::printf("%s\n", failures ? "ACCEPTANCE: FAIL" : "ACCEPTANCE: PASS");
  return failures ? 1 : 0;
}
