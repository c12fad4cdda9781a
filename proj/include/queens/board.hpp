#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <vector>

#include "queens/errors.hpp"

namespace queens {

// Boards are n x n, 1-based, (1,1) in the bottom-left corner.
struct BoardDim {
  int n = 0;
};

BoardDim make_dim(int n);

struct Square {
  int x = 0;
  int y = 0;
  auto operator<=>(const Square&) const = default;
};

bool on_board(Square s, BoardDim dim);

// Line families. A queen attacks its full row, column and both diagonals;
// other queens never block.
//   Row y, Col x, DiagPos d = x - y (constant up-right), DiagNeg s = x + y.
enum class LineKind : std::uint8_t { Row, Col, DiagPos, DiagNeg };

const char* to_string(LineKind k);

struct Line {
  LineKind kind{};
  int index = 0;
  auto operator<=>(const Line&) const = default;
};

Line line_through(Square s, LineKind kind);
bool line_on_board(Line line, BoardDim dim);
// Row/Col: n.  DiagPos d: n - |d|.  DiagNeg s: min(s - 1, 2n + 1 - s).
int line_length(Line line, BoardDim dim);
std::vector<Square> squares_on(Line line, BoardDim dim);

// Inline walk over a line's squares, ascending x (ascending y for columns).
template <class F>
void for_each_square_on(Line line, BoardDim dim, F&& fn) {
  const int n = dim.n;
  switch (line.kind) {
    case LineKind::Row:
      for (int x = 1; x <= n; ++x) fn(Square{x, line.index});
      break;
    case LineKind::Col:
      for (int y = 1; y <= n; ++y) fn(Square{line.index, y});
      break;
    case LineKind::DiagPos: {
      int lo = std::max(1, 1 + line.index), hi = std::min(n, n + line.index);
      for (int x = lo; x <= hi; ++x) fn(Square{x, x - line.index});
      break;
    }
    case LineKind::DiagNeg: {
      int lo = std::max(1, line.index - n), hi = std::min(n, line.index - 1);
      for (int x = lo; x <= hi; ++x) fn(Square{x, line.index - x});
      break;
    }
  }
}

// Queens stored sorted by (x,y); no duplicates, all on the board.
struct Placement {
  BoardDim dim;
  std::vector<Square> queens;
};

Placement make_placement(int n, std::vector<Square> queens);

// Occupied line indices per family, sorted and de-duplicated.  Every queen
// lies on exactly one line of each family, so each family lists at most k
// indices (corner diagonals of length 1 included).
struct LineSet {
  std::vector<int> rows, cols, pos_diags, neg_diags;
};

LineSet lines_of(const Placement& p);
std::vector<Line> occupied_lines(const Placement& p);
// length -> number of occupied diagonals (both kinds) of that length.
std::map<int, int> diag_length_histogram(const Placement& p);

// Word-parallel n*n bit set; bit index (y-1)*n + (x-1).
struct Bitboard {
  int n = 0;
  std::vector<std::uint64_t> words;

  Bitboard() = default;
  explicit Bitboard(int n_);
  std::size_t bit_index(Square s) const {
    return std::size_t(s.y - 1) * n + (s.x - 1);
  }
  void set(Square s) {
    std::size_t i = bit_index(s);
    words[i >> 6] |= std::uint64_t(1) << (i & 63);
  }
  bool test(Square s) const {
    std::size_t i = bit_index(s);
    return (words[i >> 6] >> (i & 63)) & 1;
  }
  long long count() const;
  long long and_count(const Bitboard& other) const;
  Bitboard& operator|=(const Bitboard& other);
  std::vector<Square> squares() const;  // sorted by (x,y)
};

// Union of all occupied lines; includes the queen squares themselves.
Bitboard covered_bits(const Placement& p);
std::vector<Square> covered_squares(const Placement& p);
long long covered_count(const Placement& p);
// covered_count minus the queens' own squares.
long long attacked_count(const Placement& p);

// |covered({a}) ∩ covered({b})|.  Two queens sharing no line meet in at
// most 12 squares (4x4 pairwise line crossings, parallel pairs excluded).
long long common_attacked(Square a, Square b, BoardDim dim);

// Sum of the two diagonal lengths through s:
//   n + 1 + 2 * min(x-1, y-1, n-x, n-y).
int diag_length_sum(Square s, BoardDim dim);

// Lexicographically least of the 8 dihedral images (queens compared as
// sorted (x,y) lists).
Placement canonical_form(const Placement& p);

}  // namespace queens
