#include <algorithm>
#include <set>
#include <vector>

#include "doctest.h"
#include "queens/board.hpp"
#include "queens/constructions.hpp"
#include "queens/errors.hpp"
#include "queens/formulas.hpp"
#include "queens/search.hpp"

using namespace queens;

namespace {

// Full-enumeration oracle with its own coverage count: minimum covered
// squares over every k-subset of board squares.
long long naive_min_covered(int k, int n) {
  std::vector<Square> cells;
  for (int y = 1; y <= n; ++y)
    for (int x = 1; x <= n; ++x) cells.push_back({x, y});
  const int total = int(cells.size());

  auto covered_of = [&](const std::vector<Square>& qs) {
    long long covered = 0;
    for (Square s : cells)
      for (Square q : qs)
        if (q.x == s.x || q.y == s.y || q.x - q.y == s.x - s.y ||
            q.x + q.y == s.x + s.y) {
          ++covered;
          break;
        }
    return covered;
  };

  long long best = -1;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  std::vector<Square> qs(k);
  while (true) {
    for (int i = 0; i < k; ++i) qs[i] = cells[idx[i]];
    long long covered = covered_of(qs);
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

TEST_CASE("exact search matches full enumeration") {
  for (int n = 2; n <= 6; ++n)
    for (int k = 1; k <= 3; ++k) {
      SearchResult r = exact_min_covered(k, make_dim(n));
      CHECK(r.optimum == naive_min_covered(k, n));
      CHECK(!r.budget_exceeded);
      REQUIRE(!r.witnesses.empty());
      for (const Placement& w : r.witnesses) {
        CHECK(int(w.queens.size()) == k);
        CHECK(covered_count(w) == r.optimum);
        CHECK(canonical_form(w).queens == w.queens);
      }
    }
}

TEST_CASE("single queen optimum is a corner") {
  for (int n = 4; n <= 8; ++n) {
    SearchResult r = exact_min_covered(1, make_dim(n));
    CHECK(r.optimum == 3 * n - 2);
    REQUIRE(r.witnesses.size() == 1);
    CHECK(r.witnesses.front().queens == std::vector<Square>{{1, 1}});
  }
}

TEST_CASE("single queen witness classes are exactly the edge squares") {
  // Every edge square covers 3n-2; the witness list under --all-witnesses
  // is one canonical form per dihedral class of edge squares.
  const int n = 5;
  SearchOptions opts;
  opts.all_witnesses = true;
  SearchResult r = exact_min_covered(1, make_dim(n), opts);
  CHECK(r.optimum == 13);

  std::set<std::vector<Square>> expected;
  for (int x = 1; x <= n; ++x)
    for (int y = 1; y <= n; ++y)
      if (x == 1 || y == 1 || x == n || y == n)
        expected.insert(canonical_form(make_placement(n, {{x, y}})).queens);
  std::set<std::vector<Square>> got;
  for (const Placement& w : r.witnesses) got.insert(w.queens);
  CHECK(got == expected);
  CHECK(got.size() == 3);  // corner, off-corner edge, edge midpoint
}

TEST_CASE("k=2, n=6: edge pairs two apart beat the opposite-corner pair") {
  // Sharing a row spends 7 lines instead of 8; the corner pair covers 24.
  SearchResult r = exact_min_covered(2, make_dim(6));
  CHECK(r.optimum == 23);
  CHECK(covered_count(make_placement(6, {{1, 1}, {6, 6}})) == 24);

  SearchOptions opts;
  opts.all_witnesses = true;
  std::set<std::vector<Square>> classes;
  for (const Placement& w : exact_min_covered(2, make_dim(6), opts).witnesses)
    classes.insert(w.queens);
  std::set<std::vector<Square>> expected{
      {{1, 1}, {1, 3}},  // corner plus same-edge square two up
      {{1, 1}, {1, 5}},  // corner plus same-edge square four up
      {{1, 2}, {1, 4}},  // both off-corner on one edge
  };
  CHECK(classes == expected);
}

TEST_CASE("search never beats the constructions") {
  for (int k = 1; k <= 3; ++k) {
    SearchResult r = exact_min_covered(k, make_dim(8));
    Placement built = construct_best(k, make_dim(8));
    CHECK(r.optimum <= covered_count(built));
  }
}

TEST_CASE("symmetry reduction and thread count do not change results") {
  for (int n = 4; n <= 6; ++n)
    for (int k = 1; k <= 3; ++k) {
      SearchOptions base;
      base.all_witnesses = true;
      SearchOptions nosym = base;
      nosym.symmetry = false;
      SearchOptions one = base;
      one.threads = 1;
      SearchOptions four = base;
      four.threads = 4;

      SearchResult a = exact_min_covered(k, make_dim(n), base);
      SearchResult b = exact_min_covered(k, make_dim(n), nosym);
      SearchResult c = exact_min_covered(k, make_dim(n), one);
      SearchResult d = exact_min_covered(k, make_dim(n), four);
      CHECK(a.optimum == b.optimum);
      CHECK(a.optimum == c.optimum);
      CHECK(a.optimum == d.optimum);
      auto queens_of = [](const SearchResult& r) {
        std::vector<std::vector<Square>> out;
        for (const Placement& w : r.witnesses) out.push_back(w.queens);
        return out;
      };
      CHECK(queens_of(a) == queens_of(b));
      CHECK(queens_of(a) == queens_of(c));
      CHECK(queens_of(a) == queens_of(d));
    }
}

TEST_CASE("k=0 and full-board edge cases") {
  SearchResult r0 = exact_min_covered(0, make_dim(4));
  CHECK(r0.optimum == 0);
  REQUIRE(r0.witnesses.size() == 1);
  CHECK(r0.witnesses.front().queens.empty());

  SearchResult full = exact_min_covered(4, make_dim(2));
  CHECK(full.optimum == 4);
}

TEST_CASE("node budget exhaustion is flagged, never silent") {
  SearchOptions opts;
  opts.node_budget = 1;
  SearchResult r = exact_min_covered(3, make_dim(6), opts);
  CHECK(r.budget_exceeded);

  CHECK_THROWS_AS(exact_min_covered(2, make_dim(40)), domain_error);
  CHECK_THROWS_AS(exact_min_covered(5, make_dim(2)), domain_error);
  SearchOptions zero;
  zero.node_budget = 0;
  CHECK_THROWS_AS(exact_min_covered(1, make_dim(4), zero), domain_error);
}

TEST_CASE("triple-point maxima, long diagonals only") {
  TripleSearchResult r = max_triple_points(3, 3, 3, 8, DiagMode::LongOnly);
  CHECK(r.best == 7);
  CHECK(int(r.points.size()) == 7);
  CHECK(max_triple_points(2, 2, 2, 6, DiagMode::LongOnly).best == 3);

  // Exhaustive equality with the ring bound at near-square shapes.
  for (int a = 1; a <= 4; ++a)
    for (int c = std::max(1, a - 1); c <= a + 1; ++c)
      CHECK(max_triple_points(a, a, c, 8, DiagMode::LongOnly).best ==
            corner_bound(a, a, c));
}

TEST_CASE("triple-point maxima, both diagonal kinds") {
  CHECK(max_triple_points(2, 2, 2, 6, DiagMode::Both).best == 4);

  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b)
      for (int c = 1; c <= 3; ++c) {
        TripleSearchResult r = max_triple_points(a, b, c, 6, DiagMode::Both);
        CHECK(r.best <= f_bound(a + b, c) + delta(a + b));
        CHECK(max_triple_points(a, b, c, 6, DiagMode::LongOnly).best <=
              corner_bound(a, b, c));
        // Witness selection really produces that many points.
        CHECK(int(triple_intersections(r.witness).size()) == r.best);
      }
}

TEST_CASE("triple search determinism") {
  TripleSearchResult a = max_triple_points(3, 3, 2, 7, DiagMode::Both);
  TripleSearchResult b = max_triple_points(3, 3, 2, 7, DiagMode::Both);
  CHECK(a.best == b.best);
  CHECK(a.witness.cols == b.witness.cols);
  CHECK(a.witness.rows == b.witness.rows);
  CHECK(a.witness.diags == b.witness.diags);
}

TEST_CASE("packed arrangement lookup") {
  CHECK(find_packed_arrangement(1, 1, 1, 1, 2, DiagMode::Both).has_value());
  CHECK(!find_packed_arrangement(3, 3, 3, 8, 8, DiagMode::LongOnly)
             .has_value());
  auto four = find_packed_arrangement(2, 2, 2, 4, 6, DiagMode::Both);
  REQUIRE(four.has_value());
  CHECK(int(triple_intersections(four->witness).size()) >= 4);
}

TEST_CASE("triple search budget") {
  CHECK_THROWS_AS(max_triple_points(4, 4, 3, 9, DiagMode::Both, 1),
                  budget_error);
  CHECK_THROWS_AS(max_triple_points(0, 1, 1, 5, DiagMode::Both), domain_error);
  CHECK_THROWS_AS(max_triple_points(3, 3, 1, 17, DiagMode::Both),
                  domain_error);
  CHECK_THROWS_AS(max_triple_points(12, 11, 1, 12, DiagMode::Both),
                  domain_error);  // 132-point grid exceeds the mask width
}
