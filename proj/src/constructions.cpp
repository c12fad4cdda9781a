#include "queens/constructions.hpp"

#include <algorithm>
#include <cstdlib>
#include <tuple>

#include "queens/formulas.hpp"

namespace queens {

namespace {

void require(bool cond, const std::string& what) {
  if (!cond) throw domain_error(what);
}

Square to_board(Corner corner, int u, int v, int n) {
  switch (corner) {
    case Corner::BottomLeft: return {u, v};
    case Corner::BottomRight: return {n + 1 - u, v};
    case Corner::TopLeft: return {u, n + 1 - v};
    case Corner::TopRight: return {n + 1 - u, n + 1 - v};
  }
  throw domain_error("bad corner");
}

// Shared hexagon builder in corner-local coordinates (u right, v up from the
// anchor).  The kept run of local long-diagonal indices u-v is
// [-(diags-1)/2, diags/2]; clamp_run additionally intersects it with what the
// block can realize, which lets degenerate specs (runs wider than the block)
// fall back to the full block instead of erroring.
Placement build_hexagon(int cols, int rows, int diags, Corner corner,
                        BoardDim dim, bool clamp_run) {
  const int n = dim.n;
  require(cols >= 1 && rows >= 1, "hexagon block must be non-empty");
  require(cols <= n && rows <= n, "hexagon block exceeds the board");
  require(diags >= 1, "hexagon needs at least one diagonal");
  int lo = -((diags - 1) / 2);
  int hi = diags / 2;
  if (clamp_run) {
    lo = std::max(lo, -(rows - 1));
    hi = std::min(hi, cols - 1);
  }
  std::vector<Square> queens;
  for (int v = 1; v <= rows; ++v)
    for (int u = 1; u <= cols; ++u) {
      int d = u - v;
      if (d >= lo && d <= hi) queens.push_back(to_board(corner, u, v, n));
    }
  return make_placement(n, std::move(queens));
}

}  // namespace

const char* to_string(Corner c) {
  switch (c) {
    case Corner::BottomLeft: return "bottom-left";
    case Corner::BottomRight: return "bottom-right";
    case Corner::TopLeft: return "top-left";
    case Corner::TopRight: return "top-right";
  }
  return "?";
}

Corner corner_from_string(const std::string& s) {
  if (s == "bottom-left") return Corner::BottomLeft;
  if (s == "bottom-right") return Corner::BottomRight;
  if (s == "top-left") return Corner::TopLeft;
  if (s == "top-right") return Corner::TopRight;
  throw domain_error("unknown corner: " + s);
}

Placement square_block(int side, Corner corner, BoardDim dim) {
  require(side >= 1, "block side must be positive");
  require(side <= dim.n, "block side exceeds the board");
  std::vector<Square> queens;
  queens.reserve(std::size_t(side) * side);
  for (int v = 1; v <= side; ++v)
    for (int u = 1; u <= side; ++u)
      queens.push_back(to_board(corner, u, v, dim.n));
  return make_placement(dim.n, std::move(queens));
}

Placement corner_hexagon(const HexSpec& spec, BoardDim dim) {
  require(spec.diags >= 1 &&
              spec.diags <= 2 * std::min(spec.cols, spec.rows) - 1,
          "diagonal run must fit the block");
  require(dim.n >= spec.cols + spec.rows, "board too small for the hexagon");
  return build_hexagon(spec.cols, spec.rows, spec.diags, spec.corner, dim,
                       /*clamp_run=*/false);
}

Placement uneven_hexagon(int m, BoardDim dim) {
  require(m >= 3, "need at least a row, a column and a diagonal");
  require(dim.n >= m, "board too small for the line budget");
  int q = m / 3, a = 0, c = 0;
  switch (m % 3) {
    case 0: a = q, c = q; break;
    case 1: a = q, c = q + 1; break;
    case 2: a = q + 1, c = q; break;
  }
  // a + a + c == m; widths within 1 of each other.  The run can stick out of
  // the block for m = 4 (a=1, c=2), where clamping reduces it to the block.
  return build_hexagon(a, a, c, Corner::BottomLeft, dim, /*clamp_run=*/true);
}

Placement four_corner(int m, BoardDim dim) {
  require(m % 12 == 6, "four-corner placement needs m = 6 (mod 12)");
  const int h = m / 6;
  require(dim.n >= 4 * h + 2, "board too small to keep the corners apart");
  std::vector<Square> queens;
  for (Corner corner : {Corner::BottomLeft, Corner::BottomRight,
                        Corner::TopLeft, Corner::TopRight}) {
    Placement part = corner_hexagon({h, h, h, corner}, dim);
    queens.insert(queens.end(), part.queens.begin(), part.queens.end());
  }
  return make_placement(dim.n, std::move(queens));
}

Placement nine_queens(BoardDim dim) {
  const int n = dim.n;
  require(n % 2 == 1, "side midpoints need an odd board");
  require(n >= 5, "board too small for nine queens");
  const int mid = (n + 1) / 2;
  std::vector<Square> queens;
  for (int x : {1, mid, n})
    for (int y : {1, mid, n}) queens.push_back({x, y});
  return make_placement(n, std::move(queens));
}

// Remove `surplus` queens, outermost first: decreasing distance from the
// bottom-left corner, then decreasing |d| so the widest diagonals empty
// first, then decreasing x as a fixed tiebreak.
Placement peel(const Placement& p, int surplus) {
  std::vector<Square> qs = p.queens;
  std::sort(qs.begin(), qs.end(), [](Square a, Square b) {
    auto key = [](Square s) {
      return std::tuple{s.x + s.y, std::abs(s.x - s.y), s.x};
    };
    return key(a) > key(b);
  });
  qs.erase(qs.begin(), qs.begin() + surplus);
  return make_placement(p.dim.n, std::move(qs));
}

Placement construct_best(int k, BoardDim dim, std::string* strategy_out) {
  require(k >= 1, "need at least one queen");
  const int n = dim.n;
  auto emit = [&](const char* name) {
    if (strategy_out) *strategy_out = name;
  };
  if (k == 9) {
    // The grid of corners, side midpoints and center; on even boards the
    // same shape shifted onto the (n-1) x (n-1) subboard.
    if (n % 2 == 1 && n >= 5) {
      emit("nine");
      return nine_queens(dim);
    }
    if (n % 2 == 0 && n >= 6) {
      std::vector<Square> queens;
      for (int x : {1, n / 2, n - 1})
        for (int y : {1, n / 2, n - 1}) queens.push_back({x, y});
      emit("nine-shifted");
      return make_placement(n, std::move(queens));
    }
    throw domain_error("board too small for nine queens");
  }
  const long long m = m_star(k);
  require(n >= m + 2, "board too small for the line budget");
  if (m % 12 == 6 && k == g_of(m)) {
    emit("four-corner");
    return four_corner(int(m), dim);
  }
  Placement hx = uneven_hexagon(int(m), dim);
  const int surplus = int(hx.queens.size()) - k;
  require(surplus >= 0, "line budget cannot reach k");  // unreachable by m_star
  emit("uneven");
  return surplus == 0 ? hx : peel(hx, surplus);
}

}  // namespace queens
