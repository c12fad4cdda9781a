#pragma once

#include <array>
#include <string>
#include <vector>

#include "queens/board.hpp"

namespace queens {

// A chosen cols, B chosen rows (strictly increasing, on the board) plus a
// set of chosen diagonals of either orientation.
struct LineSelection {
  BoardDim dim;
  std::vector<int> cols;
  std::vector<int> rows;
  std::vector<Line> diags;
};

void validate(const LineSelection& sel);

// Grid points (x_i, y_j) lying on at least one chosen diagonal.
std::vector<Square> triple_intersections(const LineSelection& sel);

// The l-th ring of the A x B index grid: points with
// min(i, j, A+1-i, B+1-j) == l, reported in board coordinates.
struct Ring {
  int level = 0;
  std::vector<Square> points;
};

std::vector<Ring> rings_of(const LineSelection& sel);

// Ring points on the given diagonal; never more than 2.
int ring_diag_hits(const Ring& ring, Line diag);

struct RingBoundReport {
  int a = 0, b = 0, c = 0;
  long long point_count = 0;    // |triple_intersections|
  long long eq_bound = 0;       // f_bound(a+b, c) + delta(a+b)
  long long f_closed_bound = 0; // F_closed(a+b+c)
  bool eq_holds = false;
  bool f_holds = false;
};

RingBoundReport ring_bound_check(const LineSelection& sel);

// Largest set of queens pairwise sharing no diagonal == maximum matching of
// the bipartite graph (occupied DiagPos) x (occupied DiagNeg) with one edge
// per queen.
struct MatchingResult {
  int count = 0;
  std::vector<Square> witness;  // sorted by (x,y)
};

MatchingResult max_nonsharing_queens(const Placement& p);

// Fewest diagonals covering every queen; equals max_nonsharing_queens by
// Koenig duality.  Cover extracted from the matching via alternating
// reachability, so the output is reproducible.
struct CoverResult {
  int count = 0;
  std::vector<Line> lines;  // sorted
};

CoverResult min_diag_cover(const Placement& p);

// A+B full lines plus the two diagonals of each queen in a maximum
// non-sharing witness: total length at least n*M, so k queens on M lines
// certify that M lines of total length >= n*M are attacked.
struct Certificate {
  int a = 0, b = 0, c = 0, m = 0;
  std::vector<Line> lines;
  long long total_length = 0;
  long long n_times_m = 0;
  long long f_closed_m = 0;  // k <= F_closed(m) must hold
  bool sound = false;        // total_length >= n_times_m
};

Certificate lower_bound_certificate(const Placement& p);

// Diagnostic report around the ring where the ring size equals 2C: offsets
// D from the grid edges, side length L, the four skew diagonals, and the
// diagonal-length totals behind the Cn + 2CD and (C+1)n + 2(C+1)D - L
// bounds.  Verification aid only; nothing here is proved for general input.
struct CriticalRingReport {
  bool applicable = false;
  std::string reason;
  int level = 0;
  int a = 0, b = 0, c = 0;
  // x_l - x_1, y_l - y_1, x_A - x_{A+1-l}, y_B - y_{B+1-l}
  std::array<int, 4> edge_offsets{};
  bool offsets_agree = false;
  int offset = 0;        // D
  int side_cols = 0;     // L = x_{A+1-l} - x_l
  int side_rows = 0;
  bool ring_is_square = false;
  std::array<Line, 4> skew_diagonals{};
  std::array<int, 4> skew_lengths{};
  int ring_points_selected = 0;        // ring points on chosen diagonals
  long long diag_total_length = 0;     // all diagonals through those points
  long long single_hit_total = 0;      // those meeting exactly one point
  long long ring_bound_twice = 0;      // 2(Cn + 2CD) + single_hit_total
  bool ring_bound_holds = false;       // 2*diag_total >= ring_bound_twice
  long long combined_bound = 0;        // (C+1)n + 2(C+1)D - L
  bool combined_bound_holds = false;
  bool premises_hold = false;          // offsets agree and ring is square
  bool odd_side_checked = false;       // medial-diagonal reasoning needs odd A
};

CriticalRingReport critical_ring_report(const LineSelection& sel);

// Occupied columns / rows plus min_diag_cover; M = A + B + C.
struct LineBudget {
  int a = 0, b = 0, c = 0, m = 0;
};

LineBudget line_budget(const Placement& p);

}  // namespace queens
