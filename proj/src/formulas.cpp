#include "queens/formulas.hpp"

#include <algorithm>

#include "queens/errors.hpp"

namespace queens {

namespace {

void require(bool cond, const char* what) {
  if (!cond) throw domain_error(what);
}

constexpr long long tri(long long t) { return t * (t + 1) / 2; }

}  // namespace

long long g_of(long long m) {
  require(m >= 0, "g_of needs m >= 0");
  long long v = m * m / 12;
  long long r = m % 12;
  if (r == 3 || r == 6 || r == 9 || m == 10) ++v;
  return v;
}

long long m_star(long long k) {
  require(k >= 1, "m_star needs k >= 1");
  // g_of is nondecreasing, so binary search works; g(4m) = 4m^2/3 >= k
  // pins down a safe upper end.
  long long lo = 1, hi = 4;
  while (g_of(hi) < k) hi *= 2;
  while (lo < hi) {
    long long mid = lo + (hi - lo) / 2;
    if (g_of(mid) >= k)
      hi = mid;
    else
      lo = mid + 1;
  }
  return lo;
}

long long hexagon_block_count(long long a, long long c) {
  require(a >= 1, "hexagon block needs a >= 1");
  require(c >= 1 && c <= 2 * a - 1, "diagonal run must fit the block");
  long long cut_lo = (2 * a - c - 1) / 2;  // rows cut below the kept run
  long long cut_hi = (2 * a - c) / 2;      // and above
  return a * a - tri(cut_lo) - tri(cut_hi);
}

long long regular_hexagon_count(long long m) {
  require(m >= 1, "hexagon side must be positive");
  return 3 * m * m - 3 * m + 1;
}

long long corner_bound(long long a, long long b, long long c) {
  require(a >= 0 && b >= 0 && c >= 0, "corner_bound needs nonnegative sizes");
  long long total = 0;
  for (long long l = 1; l <= std::min(a, b); ++l)
    total += std::min(c, a + b + 1 - 2 * l);
  return total;
}

int delta(long long rc_total) {
  require(rc_total >= 0, "delta needs rc_total >= 0");
  return rc_total % 4 == 2 ? 1 : 0;
}

long long f_bound(long long rc_total, long long c) {
  require(rc_total >= 2, "f_bound needs rc_total >= 2");
  require(c >= 0, "f_bound needs c >= 0");
  // Sum over rings l = 1..L of min(2c, T - 8l) with T = 2*rc_total + 4 and
  // L = floor((rc_total + 2) / 4): the first t rings are clamped at 2c.
  long long T = 2 * rc_total + 4;
  long long L = (rc_total + 2) / 4;
  long long t = std::clamp((rc_total + 2 - c) / 4, 0LL, L);
  return t * 2 * c + (L - t) * T - 4 * (L * (L + 1) - t * (t + 1));
}

FSplit F_split(long long m) {
  require(m >= 2, "F needs m >= 2");
  FSplit best;
  for (long long rc = 2; rc <= m; ++rc) {
    long long v = f_bound(rc, m - rc) + delta(rc);
    if (best.ties == 0 || v > best.value) {
      best = {v, rc, m - rc, 1};
    } else if (v == best.value) {
      ++best.ties;
    }
  }
  return best;
}

long long F_of(long long m) { return F_split(m).value; }

long long F_closed(long long m) {
  require(m >= 2, "F needs m >= 2");
  long long v = m * m / 12;
  long long r = m % 12;
  if (!(r == 0 || r == 1 || r == 5 || r == 7 || r == 11)) ++v;
  return v;
}

std::vector<BoundRow> bound_table(long long max_m, bool maximize) {
  require(max_m >= 2, "table needs max_m >= 2");
  std::vector<BoundRow> rows;
  rows.reserve(max_m - 1);
  for (long long m = 2; m <= max_m; ++m) {
    BoundRow row;
    row.m = m;
    row.g = g_of(m);
    if (maximize) {
      row.f = F_of(m);
      row.source = "maximized";
    } else {
      row.f = F_closed(m);
      row.source = "closed-form";
    }
    // m_star(k) == m exactly when g(m-1) < k <= g(m).
    if (row.g > g_of(m - 1)) row.m_star_inverse = row.g;
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace queens
