#include <algorithm>
#include <cstdlib>
#include <set>
#include <vector>

#include "doctest.h"
#include "queens/errors.hpp"
#include "queens/formulas.hpp"

using namespace queens;

namespace {

// Literal ring sum, kept straight off the definition as the oracle for the
// closed-form f_bound.
long long f_oracle(long long rc, long long c) {
  long long total = 0;
  for (long long l = 1; l <= (rc + 2) / 4; ++l)
    total += std::min(2 * c, 2 * rc + 4 - 8 * l);
  return total;
}

// Lattice-count oracle for the corner hexagon: squares of the a x a block
// whose diagonal index x - y falls in the centered run of c values.
long long hexagon_oracle(long long a, long long c) {
  const long long lo = -((c - 1) / 2), hi = c / 2;
  long long count = 0;
  for (long long x = 1; x <= a; ++x)
    for (long long y = 1; y <= a; ++y)
      if (x - y >= lo && x - y <= hi) ++count;
  return count;
}

}  // namespace

TEST_CASE("f_bound equals the literal ring sum") {
  for (long long rc = 2; rc <= 200; ++rc)
    for (long long c = 0; c <= 200; ++c)
      CHECK(f_bound(rc, c) == f_oracle(rc, c));
}

TEST_CASE("f_bound fixed points") {
  CHECK(f_bound(10, 4) == 16);
  CHECK(delta(10) == 1);
  CHECK(f_bound(10, 4) + delta(10) == 17);
  CHECK(f_bound(8, 4) == 12);
  CHECK(delta(8) == 0);
  for (long long c = 0; c <= 6; ++c) CHECK(f_bound(2, c) == 0);
  CHECK(delta(2) == 1);
}

TEST_CASE("hexagon block count matches the lattice oracle") {
  for (long long a = 1; a <= 20; ++a)
    for (long long c = 1; c <= 2 * a - 1; ++c) {
      CHECK(hexagon_block_count(a, c) == hexagon_oracle(a, c));
      // The closed form in m = 2a + c holds exactly on the near-balanced
      // runs (the splits the constructions use); elsewhere it only bounds.
      const long long closed = ((2 * a + c) * (2 * a + c) + 3) / 12;
      if (std::abs(a - c) <= 1)
        CHECK(hexagon_block_count(a, c) == closed);
      else
        CHECK(hexagon_block_count(a, c) < closed);
    }
  CHECK(hexagon_block_count(3, 3) == 7);
  CHECK(hexagon_block_count(2, 2) == 3);
  CHECK(hexagon_block_count(3, 4) == 8);
  CHECK_THROWS_AS(hexagon_block_count(3, 0), domain_error);
  CHECK_THROWS_AS(hexagon_block_count(3, 6), domain_error);
}

TEST_CASE("regular hexagon count") {
  CHECK(regular_hexagon_count(1) == 1);
  CHECK(regular_hexagon_count(3) == 19);
  CHECK(regular_hexagon_count(4) == 37);
  CHECK(regular_hexagon_count(4) == hexagon_block_count(7, 7));
  for (long long m = 1; m <= 40; ++m)
    CHECK(regular_hexagon_count(m) == hexagon_block_count(2 * m - 1, 2 * m - 1));
}

TEST_CASE("queen capacity per line budget") {
  const long long first[12] = {0, 0, 1, 1, 2, 4, 4, 5, 7, 9, 10, 12};
  for (int m = 1; m <= 12; ++m) CHECK(g_of(m) == first[m - 1]);
  CHECK(g_of(3) == 1);
  CHECK(g_of(10) == 9);
  CHECK(g_of(18) == 28);
  CHECK(g_of(0) == 0);
}

TEST_CASE("minimal line budget per queen count") {
  CHECK(m_star(1) == 3);
  CHECK(m_star(9) == 10);
  CHECK(m_star(28) == 18);
  for (long long k = 1; k <= 500; ++k) {
    long long m = m_star(k);
    CHECK(g_of(m) >= k);
    CHECK(g_of(m - 1) < k);
  }
  CHECK_THROWS_AS(m_star(0), domain_error);
}

TEST_CASE("corner bound") {
  CHECK(corner_bound(2, 2, 2) == 3);
  CHECK(corner_bound(3, 3, 3) == 7);
  CHECK(corner_bound(1, 1, 4) == 1);
  for (long long m = 3; m <= 60; ++m) {
    long long best = 0;
    for (long long a = 1; a < m; ++a)
      for (long long b = 1; a + b <= m; ++b)
        best = std::max(best, corner_bound(a, b, m - a - b));
    CHECK(best == (m * m + 3) / 12);
  }
}

TEST_CASE("split maximum agrees with the closed form") {
  CHECK(F_of(14) == 17);
  CHECK(F_of(12) == 12);
  CHECK(F_of(10) == 9);
  CHECK(F_of(2) == 1);
  for (long long m = 2; m <= 400; ++m) CHECK(F_of(m) == F_closed(m));
  CHECK_THROWS_AS(F_of(1), domain_error);
  CHECK_THROWS_AS(F_closed(1), domain_error);
}

TEST_CASE("split maximizer location and uniqueness") {
  for (long long m = 2; m <= 500; ++m) {
    FSplit split = F_split(m);
    CHECK(split.value == F_closed(m));
    CHECK(split.rc + split.diags == m);
    CHECK(split.ties >= 1);
    CHECK(f_bound(split.rc, split.diags) + delta(split.rc) == split.value);
    // No smaller rows-plus-columns part attains the maximum.
    for (long long rc = 2; rc < split.rc; ++rc)
      CHECK(f_bound(rc, m - rc) + delta(rc) < split.value);
    long long r = m % 12;
    long long c_star = m / 3 + ((r == 8 || r == 10) ? 1 : 0);
    if (m - c_star >= 2)
      CHECK(f_bound(m - c_star, c_star) + delta(m - c_star) == split.value);
    if (r == 2 || r == 4 || r == 8 || r == 10) CHECK(split.ties == 1);
  }
}

TEST_CASE("capacity versus selection bound") {
  for (long long m = 2; m <= 400; ++m) {
    CHECK(g_of(m) <= F_closed(m));
    long long r = m % 12;
    bool gap = (r == 2 || r == 4 || r == 8 || (r == 10 && m != 10));
    CHECK((g_of(m) < F_closed(m)) == gap);
  }
}

TEST_CASE("bound table rows") {
  std::vector<BoundRow> rows = bound_table(40, false);
  REQUIRE(rows.size() == 39);
  CHECK(rows.front().m == 2);
  for (const BoundRow& row : rows) {
    CHECK(row.g == g_of(row.m));
    CHECK(row.f == F_closed(row.m));
    CHECK(row.source == "closed-form");
    if (row.m_star_inverse)
      CHECK(m_star(*row.m_star_inverse) == row.m);
    else
      CHECK(g_of(row.m) == g_of(row.m - 1));
  }
  const BoundRow& r18 = rows[16];
  CHECK(r18.m == 18);
  CHECK(r18.g == 28);
  CHECK(r18.f == 28);

  std::vector<BoundRow> maxed = bound_table(40, true);
  for (std::size_t i = 0; i < maxed.size(); ++i) {
    CHECK(maxed[i].f == rows[i].f);
    CHECK(maxed[i].source == "maximized");
  }
}
