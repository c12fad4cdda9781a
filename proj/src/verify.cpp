#include "queens/verify.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <map>
#include <set>

#include "queens/analysis.hpp"
#include "queens/board.hpp"
#include "queens/constructions.hpp"
#include "queens/errors.hpp"
#include "queens/formulas.hpp"
#include "queens/rng.hpp"

namespace queens {

namespace {

constexpr std::size_t kMaxFailures = 20;

struct Suite {
  SuiteResult result;
  std::chrono::steady_clock::time_point start;

  explicit Suite(std::string name) : start(std::chrono::steady_clock::now()) {
    result.name = std::move(name);
  }
  void expect(bool cond, const std::string& msg) {
    ++result.checks;
    if (!cond && result.failures.size() < kMaxFailures)
      result.failures.push_back(msg);
  }
  SuiteResult finish() {
    result.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    return result;
  }
};

std::string at(const std::string& label, long long v) {
  return label + "=" + std::to_string(v);
}

}  // namespace

SuiteResult verify_formulas() {
  Suite s("formulas");

  const long long g_first[12] = {0, 0, 1, 1, 2, 4, 4, 5, 7, 9, 10, 12};
  for (int m = 1; m <= 12; ++m)
    s.expect(g_of(m) == g_first[m - 1], "g_of wrong at " + at("m", m));

  for (long long m = 2; m <= 2000; ++m) {
    s.expect(F_of(m) == F_closed(m),
             "split maximum differs from closed form at " + at("m", m));
    s.expect(g_of(m) <= F_closed(m), "G exceeds F at " + at("m", m));
    long long r = m % 12;
    bool expect_gap = (r == 2 || r == 4 || r == 8 || (r == 10 && m != 10));
    s.expect((g_of(m) < F_closed(m)) == expect_gap,
             "G/F gap pattern wrong at " + at("m", m));
    if (m > 2) {
      s.expect(g_of(m) >= g_of(m - 1), "G not monotone at " + at("m", m));
      s.expect(F_closed(m) >= F_closed(m - 1),
               "F not monotone at " + at("m", m));
    }
  }

  for (long long a = 1; a <= 100; ++a)
    for (long long c = 1; c <= 2 * a - 1; ++c) {
      const long long count = hexagon_block_count(a, c);
      const long long closed = ((2 * a + c) * (2 * a + c) + 3) / 12;
      const bool balanced = c >= a - 1 && c <= a + 1;
      s.expect(balanced ? count == closed : count < closed,
               "hexagon count identity fails at " + at("a", a) + " " + at("c", c));
    }

  for (long long m = 1; m <= 40; ++m)
    s.expect(regular_hexagon_count(m) == hexagon_block_count(2 * m - 1, 2 * m - 1),
             "regular hexagon mismatch at " + at("m", m));

  for (long long m = 3; m <= 200; ++m) {
    long long best = 0;
    for (long long a = 1; a <= m - 1; ++a)
      for (long long b = 1; a + b <= m; ++b)
        best = std::max(best, corner_bound(a, b, m - a - b));
    s.expect(best == (m * m + 3) / 12,
             "corner bound maximum wrong at " + at("m", m));
  }

  for (long long m = 2; m <= 500; ++m) {
    FSplit split = F_split(m);
    s.expect(f_bound(split.rc, split.diags) + delta(split.rc) == split.value,
             "reported split does not attain the maximum at " + at("m", m));
    long long r = m % 12;
    long long c_star = m / 3 + ((r == 8 || r == 10) ? 1 : 0);
    if (m - c_star >= 2)
      s.expect(f_bound(m - c_star, c_star) + delta(m - c_star) == F_of(m),
               "expected diagonal share misses the maximum at " + at("m", m));
  }

  for (long long k = 1; k <= 2000; ++k) {
    long long m = m_star(k);
    s.expect(g_of(m) >= k && (m <= 1 || g_of(m - 1) < k),
             "m_star not minimal at " + at("k", k));
  }

  return s.finish();
}

SuiteResult verify_diag_sums() {
  Suite s("diag-sums");
  for (int n = 1; n <= 12; ++n) {
    BoardDim dim = make_dim(n);
    for (int x = 1; x <= n; ++x)
      for (int y = 1; y <= n; ++y) {
        Square q{x, y};
        int expected = n + 1 + 2 * std::min(std::min(x - 1, y - 1),
                                            std::min(n - x, n - y));
        int direct =
            int(squares_on(line_through(q, LineKind::DiagPos), dim).size()) +
            int(squares_on(line_through(q, LineKind::DiagNeg), dim).size());
        s.expect(diag_length_sum(q, dim) == expected,
                 "diagonal length sum formula fails at " + at("n", n));
        s.expect(direct == expected,
                 "enumerated diagonal lengths disagree at " + at("n", n));
        long long attacked = attacked_count(make_placement(n, {q}));
        s.expect(attacked >= 3 * n - 3 && attacked <= 4 * n - 4,
                 "single-queen attack count out of range at " + at("n", n));
      }
    // Pairs sharing no line overlap in at most 12 squares.
    for (int i = 0; i < n * n; ++i)
      for (int j = i + 1; j < n * n; ++j) {
        Square q1{i % n + 1, i / n + 1}, q2{j % n + 1, j / n + 1};
        bool share = q1.x == q2.x || q1.y == q2.y ||
                     q1.x - q1.y == q2.x - q2.y || q1.x + q1.y == q2.x + q2.y;
        if (share) continue;
        s.expect(common_attacked(q1, q2, dim) <= 12,
                 "non-sharing pair overlap exceeds 12 at " + at("n", n));
      }
  }
  return s.finish();
}

namespace {

// All coordinate sets {1} + subset of [2, 16] with at most 7 extra members,
// decoded into flat arrays for the exhaustive border scan.
struct CoordSets {
  std::vector<int> coords;  // concatenated, 8 slots per set
  std::vector<int> sizes;

  CoordSets() {
    for (int mask = 0; mask < (1 << 15); ++mask) {
      if (std::popcount(unsigned(mask)) > 7) continue;
      int base = int(coords.size());
      coords.resize(base + 8, 0);
      int size = 0;
      coords[base + size++] = 1;
      for (int b = 0; b < 15; ++b)
        if (mask & (1 << b)) coords[base + size++] = b + 2;
      sizes.push_back(size);
    }
  }
  const int* set(int i) const { return coords.data() + std::size_t(i) * 8; }
};

}  // namespace

SuiteResult verify_rings() {
  Suite s("rings");

  // Ring sizes and the partition property, per grid shape.
  for (int a = 1; a <= 12; ++a)
    for (int b = 1; b <= 12; ++b) {
      LineSelection sel;
      sel.dim = make_dim(16);
      for (int i = 1; i <= a; ++i) sel.cols.push_back(i);
      for (int j = 1; j <= b; ++j) sel.rows.push_back(j);
      auto rings = rings_of(sel);
      long long total = 0;
      for (const Ring& ring : rings) {
        total += (long long)ring.points.size();
        int l = ring.level;
        if (a >= 2 * l && b >= 2 * l)
          s.expect(int(ring.points.size()) == 2 * a + 2 * b + 4 - 8 * l,
                   "full ring size wrong at " + at("a", a) + " " + at("b", b));
        else if (std::min(a, b) == 2 * l - 1)
          s.expect(int(ring.points.size()) == std::max(a, b) - 2 * (l - 1),
                   "thin ring size wrong at " + at("a", a) + " " + at("b", b));
      }
      s.expect(total == (long long)a * b,
               "rings do not partition the grid at " + at("a", a) + " " +
                   at("b", b));
      s.expect(int(rings.size()) == std::min((a + 1) / 2, (b + 1) / 2),
               "ring level count wrong at " + at("a", a) + " " + at("b", b));
    }

  // Public-interface check on contiguous grids: every board diagonal meets
  // every ring at most twice.
  for (int a = 1; a <= 5; ++a)
    for (int b = 1; b <= 5; ++b) {
      LineSelection sel;
      sel.dim = make_dim(10);
      for (int i = 1; i <= a; ++i) sel.cols.push_back(2 * i - 1);
      for (int j = 1; j <= b; ++j) sel.rows.push_back(2 * j);
      for (const Ring& ring : rings_of(sel)) {
        for (int d = -9; d <= 9; ++d)
          s.expect(ring_diag_hits(ring, {LineKind::DiagPos, d}) <= 2,
                   "ring hit by a positive diagonal 3+ times");
        for (int t = 2; t <= 20; ++t)
          s.expect(ring_diag_hits(ring, {LineKind::DiagNeg, t}) <= 2,
                   "ring hit by a negative diagonal 3+ times");
      }
    }

  // Exhaustive outer-ring scan for every A,B <= 8 selection with
  // coordinates in [1, 16].  Reductions, each preserving per-diagonal hit
  // counts: translation pins the smallest coordinate of each axis to 1;
  // deeper rings of a selection are the outer ring of the selection with
  // its extreme coordinates stripped, so outer rings of all (smaller)
  // selections cover them; transposing swaps the axes, so unordered pairs
  // suffice.
  {
    CoordSets sets;
    const int count = int(sets.sizes.size());
    int pos_count[33] = {0}, neg_count[35] = {0};
    int pos_stamp[33] = {0}, neg_stamp[35] = {0};
    int epoch = 0;
    long long violations = 0, pairs = 0;
    for (int xi = 0; xi < count; ++xi) {
      const int* xs = sets.set(xi);
      const int a = sets.sizes[xi];
      for (int yi = xi; yi < count; ++yi) {
        const int* ys = sets.set(yi);
        const int b = sets.sizes[yi];
        ++pairs;
        ++epoch;
        auto hit = [&](int d, int t) {
          int dp = d + 16;  // x-y in [-15, 15]
          if (pos_stamp[dp] != epoch) {
            pos_stamp[dp] = epoch;
            pos_count[dp] = 0;
          }
          if (++pos_count[dp] > 2) ++violations;
          if (neg_stamp[t] != epoch) {
            neg_stamp[t] = epoch;
            neg_count[t] = 0;
          }
          if (++neg_count[t] > 2) ++violations;
        };
        const int ylo = ys[0], yhi = ys[b - 1];
        for (int i = 0; i < a; ++i) {
          hit(xs[i] - ylo, xs[i] + ylo);
          if (b > 1) hit(xs[i] - yhi, xs[i] + yhi);
        }
        const int xlo = xs[0], xhi = xs[a - 1];
        for (int j = 1; j + 1 < b; ++j) {
          hit(xlo - ys[j], xlo + ys[j]);
          if (a > 1) hit(xhi - ys[j], xhi + ys[j]);
        }
      }
    }
    s.result.checks += pairs;
    s.expect(violations == 0,
             "a diagonal meets an outer ring 3+ times (" +
                 at("violations", violations) + ")");
  }

  return s.finish();
}

SuiteResult verify_konig(std::uint64_t seed) {
  Suite s("konig");
  Rng rng(seed);
  for (int round = 0; round < 10000; ++round) {
    const int n = rng.in(2, 10);
    const int k = rng.in(1, std::min(8, n * n));
    Placement p = make_placement(n, random_squares(rng, n, k));

    MatchingResult matching = max_nonsharing_queens(p);
    CoverResult cover = min_diag_cover(p);
    s.expect(matching.count == cover.count,
             "matching and cover sizes differ at " + at("round", round));
    s.expect(int(matching.witness.size()) == matching.count,
             "witness size mismatch at " + at("round", round));

    bool witness_ok = true;
    for (std::size_t i = 0; i < matching.witness.size(); ++i) {
      Square a = matching.witness[i];
      if (!std::binary_search(p.queens.begin(), p.queens.end(), a))
        witness_ok = false;
      for (std::size_t j = i + 1; j < matching.witness.size(); ++j) {
        Square b = matching.witness[j];
        if (a.x - a.y == b.x - b.y || a.x + a.y == b.x + b.y)
          witness_ok = false;
      }
    }
    s.expect(witness_ok, "witness shares a diagonal at " + at("round", round));

    bool cover_ok = int(cover.lines.size()) == cover.count;
    for (Square q : p.queens) {
      bool on = false;
      for (Line line : cover.lines)
        on = on || (line.kind == LineKind::DiagPos ? q.x - q.y : q.x + q.y) ==
                       line.index;
      cover_ok = cover_ok && on;
    }
    s.expect(cover_ok, "cover misses a queen at " + at("round", round));

    // Independent maximum via the pairwise-conflict bitmask oracle.
    std::vector<unsigned> conflict(k, 0);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) {
        Square a = p.queens[i], b = p.queens[j];
        if (i != j &&
            (a.x - a.y == b.x - b.y || a.x + a.y == b.x + b.y))
          conflict[i] |= 1u << j;
      }
    int oracle = 0;
    for (unsigned mask = 0; mask < (1u << k); ++mask) {
      bool ok = true;
      for (int i = 0; i < k && ok; ++i)
        if ((mask >> i & 1) && (conflict[i] & mask)) ok = false;
      if (ok) oracle = std::max(oracle, std::popcount(mask));
    }
    s.expect(oracle == matching.count,
             "matching disagrees with the subset oracle at " + at("round", round));

    // Occasionally also confirm no smaller diagonal cover exists.
    if (round % 50 == 0 && cover.count > 0) {
      LineSet ls = lines_of(p);
      std::vector<Line> diags;
      for (int d : ls.pos_diags) diags.push_back({LineKind::DiagPos, d});
      for (int t : ls.neg_diags) diags.push_back({LineKind::DiagNeg, t});
      const int nd = int(diags.size());
      bool smaller_cover = false;
      for (unsigned mask = 0; mask < (1u << nd) && !smaller_cover; ++mask) {
        if (std::popcount(mask) != cover.count - 1) continue;
        bool covers = true;
        for (Square q : p.queens) {
          bool on = false;
          for (int i = 0; i < nd; ++i)
            if (mask >> i & 1)
              on = on ||
                   (diags[i].kind == LineKind::DiagPos ? q.x - q.y
                                                       : q.x + q.y) ==
                       diags[i].index;
          covers = covers && on;
        }
        smaller_cover = covers;
      }
      s.expect(!smaller_cover,
               "a smaller diagonal cover exists at " + at("round", round));
    }
  }
  return s.finish();
}

SuiteResult verify_ring_bound(std::uint64_t seed) {
  Suite s("ring-bound");

  // With c >= a+b-2 the bound is at least the whole grid, so the exhaustive
  // scan below only needs c <= a+b-3.
  for (int a = 1; a <= 4; ++a)
    for (int b = 1; b <= 4; ++b)
      for (int c = a + b - 2; c <= 40; ++c)
        s.expect(f_bound(a + b, c) + delta(a + b) >= a * b,
                 "saturated bound below grid size at " + at("a", a) + " " +
                     at("b", b) + " " + at("c", c));

  // Exhaustive over reduced grids (smallest coordinates pinned to 1,
  // coordinates in [1, 8], sides at most 4) and every relevant-diagonal
  // subset of size at most a+b-3; diagonals missing the grid add nothing
  // and the bound is monotone in c, so relevant diagonals suffice.
  {
    std::vector<std::vector<int>> axis_sets;
    for (int mask = 0; mask < (1 << 7); ++mask) {
      if (std::popcount(unsigned(mask)) > 3) continue;
      std::vector<int> coords{1};
      for (int b = 0; b < 7; ++b)
        if (mask & (1 << b)) coords.push_back(b + 2);
      axis_sets.push_back(std::move(coords));
    }
    long long nodes = 0, violations = 0;
    for (const auto& xs : axis_sets)
      for (const auto& ys : axis_sets) {
        const int a = int(xs.size()), b = int(ys.size());
        const int cmax = a + b - 3;
        long long rhs[6];
        for (int c = 0; c <= std::min(cmax, 5); ++c)
          rhs[c] = f_bound(a + b, c) + delta(a + b);
        // Point masks of every diagonal meeting the grid.
        std::vector<unsigned> masks;
        {
          std::set<int> pos, neg;
          for (int x : xs)
            for (int y : ys) {
              pos.insert(x - y);
              neg.insert(x + y);
            }
          for (int d : pos) {
            unsigned m = 0;
            for (int i = 0; i < a; ++i)
              for (int j = 0; j < b; ++j)
                if (xs[i] - ys[j] == d) m |= 1u << (i * b + j);
            masks.push_back(m);
          }
          for (int t : neg) {
            unsigned m = 0;
            for (int i = 0; i < a; ++i)
              for (int j = 0; j < b; ++j)
                if (xs[i] + ys[j] == t) m |= 1u << (i * b + j);
            masks.push_back(m);
          }
        }
        const int nd = int(masks.size());
        // Depth-first over subsets in index order.
        struct Frame {
          int next, depth;
          unsigned points;
        };
        std::vector<Frame> stack{{0, 0, 0}};
        while (!stack.empty()) {
          Frame f = stack.back();
          stack.pop_back();
          ++nodes;
          if (std::popcount(f.points) > rhs[f.depth]) ++violations;
          if (f.depth == cmax) continue;
          for (int i = f.next; i < nd; ++i)
            stack.push_back({i + 1, f.depth + 1, f.points | masks[i]});
        }
      }
    s.result.checks += nodes;
    s.expect(violations == 0,
             "ring bound violated by an exhaustive selection (" +
                 at("violations", violations) + ")");
  }

  // Random selections on a bigger board, mixed diagonal kinds.
  Rng rng(seed);
  const int n = 30;
  for (int round = 0; round < 10000; ++round) {
    LineSelection sel;
    sel.dim = make_dim(n);
    const int a = rng.in(1, 6), b = rng.in(1, 6), c = rng.in(0, 8);
    std::set<int> xs, ys;
    while (int(xs.size()) < a) xs.insert(rng.in(1, n));
    while (int(ys.size()) < b) ys.insert(rng.in(1, n));
    sel.cols.assign(xs.begin(), xs.end());
    sel.rows.assign(ys.begin(), ys.end());
    std::set<Line> diags;
    while (int(diags.size()) < c) {
      if (rng.below(2))
        diags.insert({LineKind::DiagPos, rng.in(-(n - 1), n - 1)});
      else
        diags.insert({LineKind::DiagNeg, rng.in(2, 2 * n)});
    }
    sel.diags.assign(diags.begin(), diags.end());
    RingBoundReport report = ring_bound_check(sel);
    s.expect(report.eq_holds,
             "ring bound violated by a random selection at " + at("round", round));
    s.expect(report.f_holds,
             "F bound violated by a random selection at " + at("round", round));
  }

  return s.finish();
}

SuiteResult verify_constructions() {
  Suite s("constructions");

  for (int m = 3; m <= 60; ++m) {
    BoardDim dim = make_dim(2 * m);
    Placement p = uneven_hexagon(m, dim);
    s.expect((long long)p.queens.size() == ((long long)m * m + 3) / 12,
             "uneven hexagon count wrong at " + at("m", m));
    s.expect(covered_count(p) <= (long long)m * 2 * m,
             "uneven hexagon coverage above m*n at " + at("m", m));
    LineBudget budget = line_budget(p);
    const int expected = (m == 4 || m == 7) ? m - 1 : m;
    s.expect(budget.m == expected,
             "uneven hexagon line budget wrong at " + at("m", m));
  }

  for (int m = 6; m <= 66; m += 12) {
    BoardDim dim = make_dim(m);
    Placement p = four_corner(m, dim);
    s.expect((long long)p.queens.size() == g_of(m),
             "four-corner count wrong at " + at("m", m));
    LineSet ls = lines_of(p);
    s.expect(int(ls.rows.size()) == m / 3 && int(ls.cols.size()) == m / 3,
             "four-corner row/column footprint wrong at " + at("m", m));
    s.expect(line_budget(p).m == m,
             "four-corner line budget wrong at " + at("m", m));
  }

  for (int n = 5; n <= 15; n += 2) {
    Placement p = nine_queens(make_dim(n));
    s.expect(int(p.queens.size()) == 9, "nine queens count wrong at " + at("n", n));
    s.expect(covered_count(p) <= 10LL * n,
             "nine queens coverage above 10n at " + at("n", n));
    std::map<int, int> hist = diag_length_histogram(p);
    std::map<int, int> want{{n, 2}, {(n + 1) / 2, 4}, {1, 4}};
    s.expect(hist == want, "nine queens diagonal profile wrong at " + at("n", n));
  }

  const int n50 = 50;
  long long prev_covered = 0;
  for (int k = 1; k <= 30; ++k) {
    Placement p = construct_best(k, make_dim(n50));
    s.expect(int(p.queens.size()) == k,
             "constructed queen count wrong at " + at("k", k));
    long long covered = covered_count(p);
    s.expect(covered <= m_star(k) * 50 + 3LL * k,
             "constructed coverage above budget at " + at("k", k));
    s.expect(covered >= prev_covered,
             "constructed coverage not monotone at " + at("k", k));
    prev_covered = covered;
  }

  for (int a = 1; a <= 8; ++a)
    for (int c = 1; c <= 2 * a - 1; ++c)
      for (Corner corner : {Corner::BottomLeft, Corner::BottomRight,
                            Corner::TopLeft, Corner::TopRight}) {
        Placement p = corner_hexagon({a, a, c, corner}, make_dim(2 * a + 4));
        s.expect((long long)p.queens.size() == hexagon_block_count(a, c),
                 "corner hexagon count wrong at " + at("a", a) + " " +
                     at("c", c));
      }

  return s.finish();
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{
      "formulas", "diag-sums", "rings", "konig", "ring-bound", "constructions", "all"};
  return names;
}

std::vector<SuiteResult> run_suites(const std::string& which,
                                    std::uint64_t seed) {
  std::vector<SuiteResult> out;
  auto want = [&](const char* name) { return which == "all" || which == name; };
  bool known = which == "all";
  for (const std::string& name : suite_names())
    known = known || name == which;
  if (!known) throw domain_error("unknown suite: " + which);
  if (want("formulas")) out.push_back(verify_formulas());
  if (want("diag-sums")) out.push_back(verify_diag_sums());
  if (want("rings")) out.push_back(verify_rings());
  if (want("konig")) out.push_back(verify_konig(seed));
  if (want("ring-bound")) out.push_back(verify_ring_bound(seed));
  if (want("constructions")) out.push_back(verify_constructions());
  return out;
}

}  // namespace queens
