#include "queens/search.hpp"

#include <atomic>
#include <bit>
#include <chrono>
#include <cstdint>
#include <limits>
#include <thread>

#include "queens/errors.hpp"

namespace queens {

namespace {

void require(bool cond, const std::string& what) {
  if (!cond) throw domain_error(what);
}

constexpr long long kBestInf = std::numeric_limits<long long>::max();
constexpr long long kNodeBatch = 4096;  // budget checked per batch, not per node

// Per-square attack masks over the n*n bitset; square id = (y-1)*n + (x-1).
struct MaskTable {
  int n = 0, nsq = 0, words = 0;
  std::vector<std::uint64_t> bits;  // nsq rows of `words` each

  explicit MaskTable(BoardDim dim)
      : n(dim.n), nsq(dim.n * dim.n), words((dim.n * dim.n + 63) / 64),
        bits(std::size_t(nsq) * words, 0) {
    for (int y = 1; y <= n; ++y)
      for (int x = 1; x <= n; ++x) {
        std::uint64_t* row = at((y - 1) * n + (x - 1));
        for (LineKind kind : {LineKind::Row, LineKind::Col, LineKind::DiagPos,
                              LineKind::DiagNeg})
          for_each_square_on(line_through({x, y}, kind), dim, [&](Square s) {
            int id = (s.y - 1) * n + (s.x - 1);
            row[id >> 6] |= std::uint64_t(1) << (id & 63);
          });
      }
  }
  std::uint64_t* at(int sq) { return bits.data() + std::size_t(sq) * words; }
  const std::uint64_t* at(int sq) const {
    return bits.data() + std::size_t(sq) * words;
  }
};

// Squares whose id is minimal within their orbit under the 8 symmetries of
// the board.  Restricting the first (lowest-id) queen to these keeps at
// least one representative of every placement's symmetry class: map the
// whole placement by the symmetry that minimizes its smallest orbit image.
std::vector<int> orbit_minimal_squares(int n) {
  std::vector<int> out;
  for (int y = 1; y <= n; ++y)
    for (int x = 1; x <= n; ++x) {
      int id = (y - 1) * n + (x - 1);
      bool minimal = true;
      for (int t = 1; t < 8 && minimal; ++t) {
        int a = (t & 1) ? y : x;
        int b = (t & 1) ? x : y;
        if (t & 2) a = n + 1 - a;
        if (t & 4) b = n + 1 - b;
        if ((b - 1) * n + (a - 1) < id) minimal = false;
      }
      if (minimal) out.push_back(id);
    }
  return out;
}

struct Shared {
  const MaskTable* masks = nullptr;
  int k = 0;
  std::atomic<long long> best{kBestInf};
  std::atomic<long long> nodes{0};
  std::atomic<bool> out_of_budget{false};
  long long budget = 0;
  std::atomic<std::size_t> next_root{0};
  std::vector<int> roots;
};

struct Completion {
  long long covered = 0;
  std::vector<int> squares;
};

// One worker's depth-first walk.  Partial coverage only grows as queens are
// added, so any partial above the incumbent can be cut; partials equal to it
// must still be expanded or equal-value witnesses would be lost.
struct Worker {
  Shared* shared;
  const MaskTable* masks;
  std::vector<std::uint64_t> stack_bits;  // (k+1) levels of `words` each
  std::vector<int> chosen;
  std::vector<Completion> found;
  long long local_nodes = 0;

  explicit Worker(Shared* s) : shared(s), masks(s->masks) {
    stack_bits.assign(std::size_t(shared->k + 1) * masks->words, 0);
    chosen.assign(shared->k, 0);
  }

  // Flush the local count and compare against the budget; cheap enough for
  // every batch boundary and every finished root.
  bool check_budget() {
    long long used = shared->nodes.fetch_add(local_nodes) + local_nodes;
    local_nodes = 0;
    if (used > shared->budget) {
      shared->out_of_budget.store(true);
      return false;
    }
    return !shared->out_of_budget.load(std::memory_order_relaxed);
  }

  bool spend_node() {
    if (++local_nodes < kNodeBatch) return true;
    return check_budget();
  }

  void flush_nodes() { shared->nodes.fetch_add(local_nodes); local_nodes = 0; }

  // Try `sq` as the queen at `depth` (0-based); parent state is at depth.
  bool place(int depth, int sq) {
    if (!spend_node()) return false;
    const int w = masks->words;
    const std::uint64_t* parent = stack_bits.data() + std::size_t(depth) * w;
    std::uint64_t* cur = stack_bits.data() + std::size_t(depth + 1) * w;
    const std::uint64_t* mask = masks->at(sq);
    long long count = 0;
    for (int i = 0; i < w; ++i) {
      cur[i] = parent[i] | mask[i];
      count += std::popcount(cur[i]);
    }
    if (count > shared->best.load(std::memory_order_relaxed)) return true;
    chosen[depth] = sq;
    if (depth + 1 == shared->k) {
      long long b = shared->best.load();
      while (count < b && !shared->best.compare_exchange_weak(b, count)) {
      }
      found.push_back({count, std::vector<int>(chosen.begin(), chosen.end())});
      return true;
    }
    // Slot depth+1 needs k-depth-2 squares above it once chosen.
    const int last = masks->nsq - (shared->k - depth - 2);
    for (int next = sq + 1; next < last; ++next)
      if (!place(depth + 1, next)) return false;
    return true;
  }

  void run() {
    for (;;) {
      std::size_t i = shared->next_root.fetch_add(1);
      if (i >= shared->roots.size()) break;
      if (!place(0, shared->roots[i])) break;
      if (!check_budget()) break;
    }
    flush_nodes();
  }
};

}  // namespace

SearchResult exact_min_covered(int k, BoardDim dim, const SearchOptions& opts) {
  make_dim(dim.n);
  require(k >= 0, "queen count cannot be negative");
  require(k <= dim.n * dim.n, "more queens than squares");
  require(dim.n <= 32, "search board capped at 32");
  require(opts.node_budget >= 1, "node budget must be positive");

  const auto t0 = std::chrono::steady_clock::now();
  SearchResult result;
  result.k = k;
  result.n = dim.n;
  if (k == 0) {
    result.optimum = 0;
    result.witnesses.push_back(make_placement(dim.n, {}));
    result.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    return result;
  }

  MaskTable masks(dim);
  Shared shared;
  shared.masks = &masks;
  shared.k = k;
  shared.budget = opts.node_budget;
  if (opts.symmetry)
    shared.roots = orbit_minimal_squares(dim.n);
  else
    for (int sq = 0; sq < masks.nsq; ++sq) shared.roots.push_back(sq);
  // The first queen is the lowest-id one, so roots beyond nsq-k are
  // infeasible.
  while (!shared.roots.empty() && shared.roots.back() > masks.nsq - k)
    shared.roots.pop_back();

  int threads = opts.threads > 0 ? opts.threads
                                 : int(std::thread::hardware_concurrency());
  if (threads < 1) threads = 1;
  threads = std::min<int>(threads, int(shared.roots.size()));
  if (threads < 1) threads = 1;
  result.threads_used = threads;

  std::vector<Worker> workers;
  workers.reserve(threads);
  for (int i = 0; i < threads; ++i) workers.emplace_back(&shared);
  if (threads == 1) {
    workers[0].run();
  } else {
    std::vector<std::thread> pool;
    for (Worker& w : workers) pool.emplace_back([&w] { w.run(); });
    for (std::thread& t : pool) t.join();
  }

  result.nodes_explored = shared.nodes.load();
  result.budget_exceeded = shared.out_of_budget.load();
  long long best = shared.best.load();
  result.optimum = best == kBestInf ? -1 : best;

  if (result.optimum >= 0) {
    std::vector<Placement> witnesses;
    for (const Worker& w : workers)
      for (const Completion& c : w.found) {
        if (c.covered != best) continue;
        std::vector<Square> qs;
        qs.reserve(c.squares.size());
        for (int sq : c.squares)
          qs.push_back({sq % dim.n + 1, sq / dim.n + 1});
        witnesses.push_back(canonical_form(make_placement(dim.n, qs)));
      }
    std::sort(witnesses.begin(), witnesses.end(),
              [](const Placement& a, const Placement& b) {
                return a.queens < b.queens;
              });
    witnesses.erase(std::unique(witnesses.begin(), witnesses.end(),
                                [](const Placement& a, const Placement& b) {
                                  return a.queens == b.queens;
                                }),
                    witnesses.end());
    if (!opts.all_witnesses && witnesses.size() > 1) witnesses.resize(1);
    result.witnesses = std::move(witnesses);
  }
  result.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return result;
}

namespace {

struct Mask128 {
  std::uint64_t lo = 0, hi = 0;
  Mask128 operator|(Mask128 o) const { return {lo | o.lo, hi | o.hi}; }
  int count() const { return std::popcount(lo) + std::popcount(hi); }
  void set(int i) { (i < 64 ? lo : hi) |= std::uint64_t(1) << (i & 63); }
};

struct DiagCandidate {
  Line line;
  Mask128 points;
  int count = 0;
};

// Next a-subset of [1, range] in lexicographic order; false when done.
bool next_combo(std::vector<int>& combo, int range) {
  int a = int(combo.size());
  for (int i = a - 1; i >= 0; --i) {
    if (combo[i] < range - (a - 1 - i)) {
      ++combo[i];
      for (int j = i + 1; j < a; ++j) combo[j] = combo[j - 1] + 1;
      return true;
    }
  }
  return false;
}

struct TripleSearcher {
  int a, b, c, range;
  DiagMode mode;
  long long budget, nodes = 0;
  // target < 0 maximizes; otherwise stop at the first selection reaching it.
  int target = -1;

  int best = -1;
  LineSelection best_sel;
  bool found = false;

  std::vector<DiagCandidate> cands;
  std::vector<int> prefix_counts;  // prefix sums of cands[i].count
  std::vector<int> picked;

  void spend(long long amount) {
    nodes += amount;
    if (nodes > budget) throw budget_error("triple-point search budget exhausted");
  }

  // Exact best over c_eff-subsets of cands; candidates sorted by descending
  // point count, so the top-r prefix of any suffix bounds what r more picks
  // can add.
  bool dfs(const std::vector<int>& cols, const std::vector<int>& rows,
           int start, int depth, int c_eff, Mask128 got) {
    spend(1);
    if (depth == c_eff) {
      int value = got.count();
      if (target < 0) {
        if (value > best) {
          best = value;
          record(cols, rows, depth);
        }
        return false;
      }
      if (value >= target) {
        best = value;
        record(cols, rows, depth);
        found = true;
        return true;
      }
      return false;
    }
    const int remaining = c_eff - depth;
    for (int i = start; i + remaining <= int(cands.size()); ++i) {
      int optimistic = got.count() + prefix_counts[i + remaining] - prefix_counts[i];
      if (target < 0 ? optimistic <= best : optimistic < target) break;
      picked[depth] = i;
      if (dfs(cols, rows, i + 1, depth + 1, c_eff, got | cands[i].points))
        return true;
    }
    return false;
  }

  void record(const std::vector<int>& cols, const std::vector<int>& rows,
              int depth) {
    best_sel.dim = BoardDim{range};
    best_sel.cols = cols;
    best_sel.rows = rows;
    best_sel.diags.clear();
    for (int j = 0; j < depth; ++j) best_sel.diags.push_back(cands[picked[j]].line);
    std::sort(best_sel.diags.begin(), best_sel.diags.end());
  }

  bool run() {
    std::vector<int> cols(a), rows0(b);
    for (int i = 0; i < a; ++i) cols[i] = i + 1;
    do {
      std::vector<int> rows = rows0;
      for (int i = 0; i < b; ++i) rows[i] = i + 1;
      do {
        spend(1);
        build_candidates(cols, rows);
        int c_eff = std::min<int>(c, int(cands.size()));
        if (dfs(cols, rows, 0, 0, c_eff, {})) return true;
      } while (next_combo(rows, range));
    } while (next_combo(cols, range));
    return false;
  }

  void build_candidates(const std::vector<int>& cols,
                        const std::vector<int>& rows) {
    cands.clear();
    auto add_family = [&](LineKind kind) {
      int lo = kind == LineKind::DiagPos ? cols.front() - rows.back()
                                         : cols.front() + rows.front();
      int hi = kind == LineKind::DiagPos ? cols.back() - rows.front()
                                         : cols.back() + rows.back();
      for (int idx = lo; idx <= hi; ++idx) {
        DiagCandidate cand;
        cand.line = {kind, idx};
        for (int i = 0; i < a; ++i)
          for (int j = 0; j < b; ++j) {
            int v = kind == LineKind::DiagPos ? cols[i] - rows[j]
                                              : cols[i] + rows[j];
            if (v == idx) cand.points.set(i * b + j);
          }
        cand.count = cand.points.count();
        if (cand.count > 0) cands.push_back(cand);
      }
    };
    add_family(LineKind::DiagPos);
    if (mode == DiagMode::Both) add_family(LineKind::DiagNeg);
    std::stable_sort(cands.begin(), cands.end(),
                     [](const DiagCandidate& x, const DiagCandidate& y) {
                       if (x.count != y.count) return x.count > y.count;
                       return x.line < y.line;
                     });
    prefix_counts.assign(cands.size() + 1, 0);
    for (std::size_t i = 0; i < cands.size(); ++i)
      prefix_counts[i + 1] = prefix_counts[i] + cands[i].count;
  }
};

TripleSearcher make_searcher(int a, int b, int c, int range, DiagMode mode,
                             long long node_budget) {
  require(range >= 1 && range <= 16, "coordinate range must be in 1..16");
  require(a >= 1 && a <= range, "column count must be in 1..range");
  require(b >= 1 && b <= range, "row count must be in 1..range");
  require(c >= 0, "diagonal count cannot be negative");
  require(a * b <= 128, "grid capped at 128 points");
  require(node_budget >= 1, "node budget must be positive");
  TripleSearcher s;
  s.a = a;
  s.b = b;
  s.c = c;
  s.range = range;
  s.mode = mode;
  s.budget = node_budget;
  s.picked.assign(std::max(c, 1), 0);
  return s;
}

}  // namespace

TripleSearchResult max_triple_points(int a, int b, int c, int range,
                                     DiagMode mode, long long node_budget) {
  TripleSearcher s = make_searcher(a, b, c, range, mode, node_budget);
  s.target = -1;
  s.run();
  TripleSearchResult result;
  result.best = s.best;
  result.witness = s.best_sel;
  result.points = triple_intersections(s.best_sel);
  return result;
}

std::optional<TripleSearchResult> find_packed_arrangement(
    int a, int b, int c, int target, int range, DiagMode mode,
    long long node_budget) {
  require(target >= 0, "target cannot be negative");
  TripleSearcher s = make_searcher(a, b, c, range, mode, node_budget);
  s.target = target;
  if (!s.run()) return std::nullopt;
  TripleSearchResult result;
  result.best = s.best;
  result.witness = s.best_sel;
  result.points = triple_intersections(s.best_sel);
  return result;
}

}  // namespace queens
