#include "queens/board.hpp"

#include <bit>
#include <cstdlib>
#include <string>

namespace queens {

namespace {

constexpr int kMaxCoverageBoard = 16384;  // bitboard allocations stay sane

void require(bool cond, const std::string& what) {
  if (!cond) throw domain_error(what);
}

}  // namespace

BoardDim make_dim(int n) {
  require(n >= 1, "board size must be at least 1");
  require(n <= kMaxCoverageBoard, "board size too large");
  return BoardDim{n};
}

bool on_board(Square s, BoardDim dim) {
  return s.x >= 1 && s.x <= dim.n && s.y >= 1 && s.y <= dim.n;
}

const char* to_string(LineKind k) {
  switch (k) {
    case LineKind::Row: return "row";
    case LineKind::Col: return "col";
    case LineKind::DiagPos: return "pos";
    case LineKind::DiagNeg: return "neg";
  }
  return "?";
}

Line line_through(Square s, LineKind kind) {
  switch (kind) {
    case LineKind::Row: return {kind, s.y};
    case LineKind::Col: return {kind, s.x};
    case LineKind::DiagPos: return {kind, s.x - s.y};
    case LineKind::DiagNeg: return {kind, s.x + s.y};
  }
  throw domain_error("bad line kind");
}

bool line_on_board(Line line, BoardDim dim) {
  const int n = dim.n;
  switch (line.kind) {
    case LineKind::Row:
    case LineKind::Col: return line.index >= 1 && line.index <= n;
    case LineKind::DiagPos: return line.index >= -(n - 1) && line.index <= n - 1;
    case LineKind::DiagNeg: return line.index >= 2 && line.index <= 2 * n;
  }
  return false;
}

int line_length(Line line, BoardDim dim) {
  require(line_on_board(line, dim), "line index out of range");
  const int n = dim.n;
  switch (line.kind) {
    case LineKind::Row:
    case LineKind::Col: return n;
    case LineKind::DiagPos: return n - std::abs(line.index);
    case LineKind::DiagNeg: return std::min(line.index - 1, 2 * n + 1 - line.index);
  }
  return 0;
}

std::vector<Square> squares_on(Line line, BoardDim dim) {
  require(line_on_board(line, dim), "line index out of range");
  std::vector<Square> out;
  out.reserve(line_length(line, dim));
  for_each_square_on(line, dim, [&](Square s) { out.push_back(s); });
  return out;
}

Placement make_placement(int n, std::vector<Square> queens) {
  BoardDim dim = make_dim(n);
  for (Square q : queens)
    require(on_board(q, dim), "queen off the board");
  std::sort(queens.begin(), queens.end());
  for (std::size_t i = 1; i < queens.size(); ++i)
    require(queens[i] != queens[i - 1], "duplicate queen");
  return Placement{dim, std::move(queens)};
}

LineSet lines_of(const Placement& p) {
  LineSet ls;
  for (Square q : p.queens) {
    ls.rows.push_back(q.y);
    ls.cols.push_back(q.x);
    ls.pos_diags.push_back(q.x - q.y);
    ls.neg_diags.push_back(q.x + q.y);
  }
  for (auto* v : {&ls.rows, &ls.cols, &ls.pos_diags, &ls.neg_diags}) {
    std::sort(v->begin(), v->end());
    v->erase(std::unique(v->begin(), v->end()), v->end());
  }
  return ls;
}

std::vector<Line> occupied_lines(const Placement& p) {
  LineSet ls = lines_of(p);
  std::vector<Line> out;
  out.reserve(ls.rows.size() + ls.cols.size() + ls.pos_diags.size() +
              ls.neg_diags.size());
  for (int i : ls.rows) out.push_back({LineKind::Row, i});
  for (int i : ls.cols) out.push_back({LineKind::Col, i});
  for (int i : ls.pos_diags) out.push_back({LineKind::DiagPos, i});
  for (int i : ls.neg_diags) out.push_back({LineKind::DiagNeg, i});
  return out;
}

std::map<int, int> diag_length_histogram(const Placement& p) {
  LineSet ls = lines_of(p);
  std::map<int, int> hist;
  for (int d : ls.pos_diags) hist[line_length({LineKind::DiagPos, d}, p.dim)]++;
  for (int s : ls.neg_diags) hist[line_length({LineKind::DiagNeg, s}, p.dim)]++;
  return hist;
}

Bitboard::Bitboard(int n_)
    : n(n_), words((std::size_t(n_) * n_ + 63) / 64, 0) {}

long long Bitboard::count() const {
  long long c = 0;
  for (std::uint64_t w : words) c += std::popcount(w);
  return c;
}

long long Bitboard::and_count(const Bitboard& other) const {
  long long c = 0;
  for (std::size_t i = 0; i < words.size(); ++i)
    c += std::popcount(words[i] & other.words[i]);
  return c;
}

Bitboard& Bitboard::operator|=(const Bitboard& other) {
  for (std::size_t i = 0; i < words.size(); ++i) words[i] |= other.words[i];
  return *this;
}

std::vector<Square> Bitboard::squares() const {
  std::vector<Square> out;
  for (std::size_t wi = 0; wi < words.size(); ++wi) {
    std::uint64_t w = words[wi];
    while (w) {
      int b = std::countr_zero(w);
      w &= w - 1;
      std::size_t idx = (wi << 6) + b;
      out.push_back({int(idx % n) + 1, int(idx / n) + 1});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Bitboard covered_bits(const Placement& p) {
  Bitboard bb(p.dim.n);
  for (Line line : occupied_lines(p))
    for_each_square_on(line, p.dim, [&](Square s) { bb.set(s); });
  return bb;
}

std::vector<Square> covered_squares(const Placement& p) {
  return covered_bits(p).squares();
}

long long covered_count(const Placement& p) { return covered_bits(p).count(); }

long long attacked_count(const Placement& p) {
  return covered_count(p) - (long long)p.queens.size();
}

long long common_attacked(Square a, Square b, BoardDim dim) {
  require(on_board(a, dim) && on_board(b, dim), "square off the board");
  require(a != b, "common_attacked needs two distinct squares");
  Bitboard ba(dim.n), bb(dim.n);
  for (LineKind k : {LineKind::Row, LineKind::Col, LineKind::DiagPos, LineKind::DiagNeg}) {
    for_each_square_on(line_through(a, k), dim, [&](Square s) { ba.set(s); });
    for_each_square_on(line_through(b, k), dim, [&](Square s) { bb.set(s); });
  }
  return ba.and_count(bb);
}

int diag_length_sum(Square s, BoardDim dim) {
  require(on_board(s, dim), "square off the board");
  return line_length(line_through(s, LineKind::DiagPos), dim) +
         line_length(line_through(s, LineKind::DiagNeg), dim);
}

Placement canonical_form(const Placement& p) {
  const int n = p.dim.n;
  std::vector<Square> best;
  for (int t = 0; t < 8; ++t) {
    std::vector<Square> img;
    img.reserve(p.queens.size());
    for (Square q : p.queens) {
      int a = (t & 1) ? q.y : q.x;
      int b = (t & 1) ? q.x : q.y;
      if (t & 2) a = n + 1 - a;
      if (t & 4) b = n + 1 - b;
      img.push_back({a, b});
    }
    std::sort(img.begin(), img.end());
    if (t == 0 || img < best) best = std::move(img);
  }
  return Placement{p.dim, std::move(best)};
}

}  // namespace queens
