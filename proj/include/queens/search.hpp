#pragma once

#include <optional>
#include <vector>

#include "queens/analysis.hpp"
#include "queens/board.hpp"

namespace queens {

struct SearchOptions {
  int threads = 0;                        // 0 = hardware concurrency
  long long node_budget = 100'000'000;
  bool all_witnesses = false;
  bool symmetry = true;                   // restrict first queen to orbit minima
};

struct SearchResult {
  int k = 0;
  int n = 0;
  long long optimum = -1;                 // -1 when nothing completed
  std::vector<Placement> witnesses;       // canonical, sorted, de-duplicated
  long long nodes_explored = 0;
  double wall_seconds = 0;
  bool budget_exceeded = false;
  int threads_used = 1;
};

// Exact minimum covered_count over all k-queen placements.  Branch and
// bound on the monotone partial coverage; optimum and witness set are
// identical for any thread count.  On budget exhaustion the result is
// flagged and optimum only bounds from above.
SearchResult exact_min_covered(int k, BoardDim dim, const SearchOptions& opts = {});

enum class DiagMode { LongOnly, Both };

struct TripleSearchResult {
  int best = 0;
  LineSelection witness;
  std::vector<Square> points;
};

// Maximize |triple_intersections| over all a-column/b-row choices from
// [1, range] and every c-subset of diagonals touching the grid (DiagPos
// only in LongOnly mode).  Exhaustive with suffix-sum pruning; throws
// budget_error if the node budget runs out.
TripleSearchResult max_triple_points(int a, int b, int c, int range, DiagMode mode,
                                     long long node_budget = 2'000'000'000);

// First selection reaching at least target points, if any.
std::optional<TripleSearchResult> find_packed_arrangement(
    int a, int b, int c, int target, int range, DiagMode mode,
    long long node_budget = 2'000'000'000);

}  // namespace queens
