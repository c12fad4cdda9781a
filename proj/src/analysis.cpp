#include "queens/analysis.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <map>
#include <set>

#include "queens/formulas.hpp"

namespace queens {

namespace {

void require(bool cond, const std::string& what) {
  if (!cond) throw domain_error(what);
}

void check_axis(const std::vector<int>& v, int n, const char* name) {
  require(!v.empty(), std::string("selection needs at least one ") + name);
  for (std::size_t i = 0; i < v.size(); ++i) {
    require(v[i] >= 1 && v[i] <= n,
            std::string(name) + " coordinate off the board");
    require(i == 0 || v[i] > v[i - 1],
            std::string(name) + " coordinates must strictly increase");
  }
}

}  // namespace

void validate(const LineSelection& sel) {
  make_dim(sel.dim.n);
  check_axis(sel.cols, sel.dim.n, "column");
  check_axis(sel.rows, sel.dim.n, "row");
  for (Line d : sel.diags) {
    require(d.kind == LineKind::DiagPos || d.kind == LineKind::DiagNeg,
            "selection diagonals must be diagonal lines");
    require(line_on_board(d, sel.dim), "diagonal index out of range");
  }
  std::vector<Line> sorted = sel.diags;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 1; i < sorted.size(); ++i)
    require(sorted[i] != sorted[i - 1], "duplicate diagonal in selection");
}

std::vector<Square> triple_intersections(const LineSelection& sel) {
  validate(sel);
  std::set<int> pos, neg;
  for (Line d : sel.diags)
    (d.kind == LineKind::DiagPos ? pos : neg).insert(d.index);
  std::vector<Square> out;
  for (int x : sel.cols)
    for (int y : sel.rows)
      if (pos.count(x - y) || neg.count(x + y)) out.push_back({x, y});
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Ring> rings_of(const LineSelection& sel) {
  validate(sel);
  const int a = int(sel.cols.size()), b = int(sel.rows.size());
  const int levels = std::min((a + 1) / 2, (b + 1) / 2);
  std::vector<Ring> rings(levels);
  for (int l = 0; l < levels; ++l) rings[l].level = l + 1;
  for (int i = 1; i <= a; ++i)
    for (int j = 1; j <= b; ++j) {
      int l = std::min(std::min(i, j), std::min(a + 1 - i, b + 1 - j));
      rings[l - 1].points.push_back({sel.cols[i - 1], sel.rows[j - 1]});
    }
  for (Ring& r : rings) std::sort(r.points.begin(), r.points.end());
  return rings;
}

int ring_diag_hits(const Ring& ring, Line diag) {
  int hits = 0;
  for (Square p : ring.points) {
    if (diag.kind == LineKind::DiagPos && p.x - p.y == diag.index) ++hits;
    if (diag.kind == LineKind::DiagNeg && p.x + p.y == diag.index) ++hits;
  }
  return hits;
}

RingBoundReport ring_bound_check(const LineSelection& sel) {
  RingBoundReport r;
  r.a = int(sel.cols.size());
  r.b = int(sel.rows.size());
  r.c = int(sel.diags.size());
  r.point_count = (long long)triple_intersections(sel).size();
  r.eq_bound = f_bound(r.a + r.b, r.c) + delta(r.a + r.b);
  r.f_closed_bound = F_closed(r.a + r.b + r.c);
  r.eq_holds = r.point_count <= r.eq_bound;
  r.f_holds = r.point_count <= r.f_closed_bound;
  return r;
}

namespace {

// Hopcroft-Karp on the bipartite graph (occupied positive diagonals) x
// (occupied negative diagonals) with one edge per queen.  Vertices and
// adjacency are kept in sorted index order so matching and cover come out
// the same on every run.
struct DiagMatcher {
  std::vector<int> pos, neg;           // sorted distinct diagonal indices
  std::vector<std::vector<int>> adj;   // left id -> sorted right ids
  std::vector<int> match_l, match_r;   // partner ids, -1 when free
  std::vector<int> dist;

  static constexpr int kInf = std::numeric_limits<int>::max();

  explicit DiagMatcher(const Placement& p) {
    for (Square q : p.queens) {
      pos.push_back(q.x - q.y);
      neg.push_back(q.x + q.y);
    }
    for (auto* v : {&pos, &neg}) {
      std::sort(v->begin(), v->end());
      v->erase(std::unique(v->begin(), v->end()), v->end());
    }
    adj.resize(pos.size());
    for (Square q : p.queens) {
      int l = int(std::lower_bound(pos.begin(), pos.end(), q.x - q.y) -
                  pos.begin());
      int r = int(std::lower_bound(neg.begin(), neg.end(), q.x + q.y) -
                  neg.begin());
      adj[l].push_back(r);
    }
    for (auto& v : adj) std::sort(v.begin(), v.end());
    match_l.assign(pos.size(), -1);
    match_r.assign(neg.size(), -1);
  }

  bool bfs() {
    std::vector<int> queue;
    dist.assign(pos.size(), kInf);
    for (std::size_t l = 0; l < pos.size(); ++l)
      if (match_l[l] < 0) {
        dist[l] = 0;
        queue.push_back(int(l));
      }
    bool reachable_free = false;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      int l = queue[head];
      for (int r : adj[l]) {
        int l2 = match_r[r];
        if (l2 < 0)
          reachable_free = true;
        else if (dist[l2] == kInf) {
          dist[l2] = dist[l] + 1;
          queue.push_back(l2);
        }
      }
    }
    return reachable_free;
  }

  bool dfs(int l) {
    for (int r : adj[l]) {
      int l2 = match_r[r];
      if (l2 < 0 || (dist[l2] == dist[l] + 1 && dfs(l2))) {
        match_l[l] = r;
        match_r[r] = l;
        return true;
      }
    }
    dist[l] = kInf;
    return false;
  }

  int run() {
    int size = 0;
    while (bfs())
      for (std::size_t l = 0; l < pos.size(); ++l)
        if (match_l[l] < 0 && dfs(int(l))) ++size;
    return size;
  }

  // Koenig: alternating reachability from free left vertices; the cover is
  // (unreached left) + (reached right).
  std::vector<Line> cover() const {
    std::vector<char> seen_l(pos.size(), 0), seen_r(neg.size(), 0);
    std::vector<int> queue;
    for (std::size_t l = 0; l < pos.size(); ++l)
      if (match_l[l] < 0) {
        seen_l[l] = 1;
        queue.push_back(int(l));
      }
    for (std::size_t head = 0; head < queue.size(); ++head) {
      int l = queue[head];
      for (int r : adj[l]) {
        if (r == match_l[l] || seen_r[r]) continue;
        seen_r[r] = 1;
        int l2 = match_r[r];
        if (l2 >= 0 && !seen_l[l2]) {
          seen_l[l2] = 1;
          queue.push_back(l2);
        }
      }
    }
    std::vector<Line> lines;
    for (std::size_t l = 0; l < pos.size(); ++l)
      if (!seen_l[l]) lines.push_back({LineKind::DiagPos, pos[l]});
    for (std::size_t r = 0; r < neg.size(); ++r)
      if (seen_r[r]) lines.push_back({LineKind::DiagNeg, neg[r]});
    std::sort(lines.begin(), lines.end());
    return lines;
  }

  std::vector<Square> witness() const {
    std::vector<Square> out;
    for (std::size_t l = 0; l < pos.size(); ++l)
      if (match_l[l] >= 0) {
        int d = pos[l], s = neg[match_l[l]];
        out.push_back({(d + s) / 2, (s - d) / 2});
      }
    std::sort(out.begin(), out.end());
    return out;
  }
};

}  // namespace

MatchingResult max_nonsharing_queens(const Placement& p) {
  DiagMatcher m(p);
  MatchingResult result;
  result.count = m.run();
  result.witness = m.witness();
  return result;
}

CoverResult min_diag_cover(const Placement& p) {
  DiagMatcher m(p);
  CoverResult result;
  result.count = m.run();
  result.lines = m.cover();
  return result;
}

Certificate lower_bound_certificate(const Placement& p) {
  require(!p.queens.empty(), "certificate needs at least one queen");
  LineSet ls = lines_of(p);
  DiagMatcher matcher(p);
  Certificate cert;
  cert.a = int(ls.cols.size());
  cert.b = int(ls.rows.size());
  cert.c = matcher.run();
  cert.m = cert.a + cert.b + cert.c;
  for (int x : ls.cols) cert.lines.push_back({LineKind::Col, x});
  for (int y : ls.rows) cert.lines.push_back({LineKind::Row, y});
  // Both diagonals of each matched queen: 2C distinct lines, and by the
  // diagonal-length identity each queen contributes at least n+1.
  for (Square q : matcher.witness()) {
    cert.lines.push_back(line_through(q, LineKind::DiagPos));
    cert.lines.push_back(line_through(q, LineKind::DiagNeg));
  }
  std::sort(cert.lines.begin(), cert.lines.end());
  for (Line line : cert.lines) cert.total_length += line_length(line, p.dim);
  cert.n_times_m = (long long)p.dim.n * cert.m;
  cert.f_closed_m = F_closed(cert.m);
  cert.sound = cert.total_length >= cert.n_times_m;
  return cert;
}

CriticalRingReport critical_ring_report(const LineSelection& sel) {
  validate(sel);
  CriticalRingReport r;
  r.a = int(sel.cols.size());
  r.b = int(sel.rows.size());
  r.c = int(sel.diags.size());
  const int a = r.a, b = r.b, c = r.c, n = sel.dim.n;
  if (std::abs(a - b) > 1) {
    r.reason = "grid sides differ by more than 1";
    return r;
  }
  if (c == 0) {
    r.reason = "no diagonals chosen";
    return r;
  }
  // 2C = 2A+2B+4-8l  <=>  l = (A+B+2-C)/4.
  if ((a + b + 2 - c) % 4 != 0) {
    r.reason = "no ring level matches 2C";
    return r;
  }
  const int l = (a + b + 2 - c) / 4;
  if (l < 1) {
    r.reason = "too many diagonals for any ring";
    return r;
  }
  if (a < 2 * l || b < 2 * l) {
    r.reason = "critical ring is degenerate";
    return r;
  }
  r.applicable = true;
  r.level = l;

  const int xl = sel.cols[l - 1], xr = sel.cols[a - l];
  const int yb = sel.rows[l - 1], yt = sel.rows[b - l];
  r.edge_offsets = {xl - sel.cols[0], yb - sel.rows[0],
                    sel.cols[a - 1] - xr, sel.rows[b - 1] - yt};
  r.offsets_agree = r.edge_offsets[0] == r.edge_offsets[1] &&
                    r.edge_offsets[1] == r.edge_offsets[2] &&
                    r.edge_offsets[2] == r.edge_offsets[3];
  r.offset = r.edge_offsets[0];
  r.side_cols = xr - xl;
  r.side_rows = yt - yb;
  r.ring_is_square = r.side_cols == r.side_rows;
  // Positive diagonals through the upper-left and lower-right ring corners,
  // negative through the lower-left and upper-right: these can meet the
  // ring only once.
  r.skew_diagonals = {Line{LineKind::DiagPos, xl - yt},
                      Line{LineKind::DiagPos, xr - yb},
                      Line{LineKind::DiagNeg, xl + yb},
                      Line{LineKind::DiagNeg, xr + yt}};
  for (int i = 0; i < 4; ++i)
    r.skew_lengths[i] = line_length(r.skew_diagonals[i], sel.dim);

  std::set<int> pos, neg;
  for (Line d : sel.diags)
    (d.kind == LineKind::DiagPos ? pos : neg).insert(d.index);
  std::vector<Square> selected;
  for (const Ring& ring : rings_of(sel)) {
    if (ring.level != l) continue;
    for (Square p : ring.points)
      if (pos.count(p.x - p.y) || neg.count(p.x + p.y))
        selected.push_back(p);
  }
  r.ring_points_selected = int(selected.size());

  std::map<Line, int> hits;
  for (Square p : selected) {
    hits[line_through(p, LineKind::DiagPos)]++;
    hits[line_through(p, LineKind::DiagNeg)]++;
  }
  for (auto& [line, count] : hits) {
    long long len = line_length(line, sel.dim);
    r.diag_total_length += len;
    if (count == 1) r.single_hit_total += len;
  }

  const long long D = r.offset, L = r.side_cols;
  r.ring_bound_twice = 2 * (c * (long long)n + 2 * c * D) + r.single_hit_total;
  r.ring_bound_holds = 2 * r.diag_total_length >= r.ring_bound_twice;
  r.combined_bound = (c + 1) * (long long)n + 2 * (c + 1) * D - L;
  r.combined_bound_holds = r.diag_total_length >= r.combined_bound;
  r.premises_hold = r.offsets_agree && r.ring_is_square;
  r.odd_side_checked = a % 2 == 1;
  return r;
}

LineBudget line_budget(const Placement& p) {
  LineBudget lb;
  LineSet ls = lines_of(p);
  lb.a = int(ls.cols.size());
  lb.b = int(ls.rows.size());
  lb.c = min_diag_cover(p).count;
  lb.m = lb.a + lb.b + lb.c;
  return lb;
}

}  // namespace queens
