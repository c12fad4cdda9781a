#pragma once

#include <string>

#include "queens/board.hpp"

namespace queens {

enum class Corner { BottomLeft, BottomRight, TopLeft, TopRight };

const char* to_string(Corner c);
Corner corner_from_string(const std::string& s);

// Corner-anchored hexagon: the cols x rows block at the corner, restricted
// to a centered run of diags long diagonals (the family running through the
// corner's main diagonal; DiagPos for bottom-left/top-right anchors, DiagNeg
// for the other two).  Even runs keep the extra diagonal on the high side of
// the corner-local index.
struct HexSpec {
  int cols = 0;
  int rows = 0;
  int diags = 0;
  Corner corner = Corner::BottomLeft;
};

// side x side full block in the given corner.
Placement square_block(int side, Corner corner, BoardDim dim);

Placement corner_hexagon(const HexSpec& spec, BoardDim dim);

// The unique A = B, |A - C| <= 1 split of m; bottom-left anchored.
// Queen count floor((m^2 + 3) / 12), coverage at most m*n.
Placement uneven_hexagon(int m, BoardDim dim);

// Drop `surplus` queens, outermost first: decreasing x+y, then decreasing
// |x-y|, then decreasing x.
Placement peel(const Placement& p, int surplus);

// m = 6 (mod 12): four corner hexagons with A = B = C = m/6.  Opposite
// corners share their long diagonals, adjacent corners share rows/columns,
// so g_of(m) = m^2/12 + 1 queens fit into m lines.  Needs n >= 4*(m/6) + 2.
Placement four_corner(int m, BoardDim dim);

// Odd n >= 5: corners, side midpoints and center, i.e. the 3x3 grid over
// {1, (n+1)/2, n}.  Covers roughly 10n squares.
Placement nine_queens(BoardDim dim);

// Best known k-queen placement: nine_queens when k = 9 (shifted onto the
// (n-1)-subboard for even n), four_corner when k = g_of(m_star(k)) with
// m_star(k) = 6 (mod 12), otherwise uneven_hexagon(m_star(k)) with the
// surplus peeled off the outer edge.
Placement construct_best(int k, BoardDim dim, std::string* strategy_out = nullptr);

}  // namespace queens
