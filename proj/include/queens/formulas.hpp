#pragma once

#include <optional>
#include <string>
#include <vector>

namespace queens {

// Queens placeable with a total line budget of m (rows + cols + diagonals):
// floor(m^2/12), plus 1 when m = 3, 6, 9 (mod 12) or m = 10.
long long g_of(long long m);

// Smallest m with g_of(m) >= k.
long long m_star(long long k);

// Squares of an a x a corner block whose long-diagonal index lies in a
// centered run of c values (1 <= c <= 2a-1): a^2 minus two cut triangles.
// Equals floor(((2a+c)^2 + 3) / 12) on the near-balanced runs |a - c| <= 1;
// strictly below it otherwise.
long long hexagon_block_count(long long a, long long c);

// Regular hexagon of side m: 3m^2 - 3m + 1.
long long regular_hexagon_count(long long m);

// Upper bound for grid points of an a x b corner-anchored selection covered
// by c long diagonals: sum over rings l of min(c, a + b + 1 - 2l).
long long corner_bound(long long a, long long b, long long c);

// 1 when rc_total = 2 (mod 4) (a middle grid point escapes the ring count).
int delta(long long rc_total);

// Ring-counting bound for rc_total = A+B rows-plus-columns and c diagonals
// of either orientation: sum over rings l of min(2c, 2*rc_total + 4 - 8l).
long long f_bound(long long rc_total, long long c);

struct FSplit {
  long long value = 0;
  long long rc = 0;     // rows-plus-columns part of the split
  long long diags = 0;  // diagonal part
  int ties = 0;         // number of maximizing splits
};

// Maximize f_bound(rc, m - rc) + delta(rc) over rc in [2, m]; on ties the
// smallest rc is reported.
FSplit F_split(long long m);
long long F_of(long long m);

// Closed form: floor(m^2/12), plus 1 unless m = 0, 1, 5, 7, 11 (mod 12).
long long F_closed(long long m);

struct BoundRow {
  long long m = 0;
  long long g = 0;
  long long f = 0;
  // Largest k with m_star(k) == m, when any k maps to this m.
  std::optional<long long> m_star_inverse;
  std::string source;  // "closed-form" or "maximized"
};

// Rows for m = 2..max_m; maximize selects F_of over F_closed for the f
// column and stamps the source flag accordingly.
std::vector<BoundRow> bound_table(long long max_m, bool maximize);

}  // namespace queens
