#include "queens/render.hpp"

#include <set>

#include "queens/analysis.hpp"

namespace queens {

namespace {

// Per-cell glyph layers, strongest first: queen, grid point of the occupied
// row/column selection, certificate line, covered, empty.
struct Layers {
  BoardDim dim;
  std::set<Square> queens, grid, cert;
  Bitboard covered;

  Layers(const Placement& p, const RenderSpec& spec)
      : dim(p.dim), covered(p.dim.n) {
    if (spec.show_queens)
      queens.insert(p.queens.begin(), p.queens.end());
    if (spec.show_covered) covered = covered_bits(p);
    if (spec.show_rings && !p.queens.empty()) {
      LineSet ls = lines_of(p);
      for (int x : ls.cols)
        for (int y : ls.rows) grid.insert({x, y});
    }
    if (spec.show_certificate && !p.queens.empty()) {
      Certificate cert_lines = lower_bound_certificate(p);
      for (Line line : cert_lines.lines)
        for_each_square_on(line, p.dim, [&](Square s) { cert.insert(s); });
    }
  }

  char glyph(Square s) const {
    if (queens.count(s)) return 'Q';
    if (grid.count(s)) return 'o';
    if (cert.count(s)) return '+';
    if (covered.test(s)) return '#';
    return '.';
  }
};

}  // namespace

std::string render_ascii(const Placement& p, const RenderSpec& spec) {
  Layers layers(p, spec);
  std::string out;
  out.reserve(std::size_t(p.dim.n + 1) * p.dim.n);
  for (int y = p.dim.n; y >= 1; --y) {
    for (int x = 1; x <= p.dim.n; ++x) out.push_back(layers.glyph({x, y}));
    out.push_back('\n');
  }
  return out;
}

std::string render_svg(const Placement& p, const RenderSpec& spec) {
  Layers layers(p, spec);
  const int n = p.dim.n, cell = spec.cell_size;
  const int size = n * cell;
  std::string out;
  auto num = [](int v) { return std::to_string(v); };
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(size) +
         "\" height=\"" + num(size) + "\" viewBox=\"0 0 " + num(size) + " " +
         num(size) + "\">\n";
  for (int y = 1; y <= n; ++y)
    for (int x = 1; x <= n; ++x) {
      const char* fill = (x + y) % 2 ? "#f4f4f4" : "#e2e2e2";
      switch (layers.glyph({x, y})) {
        case 'Q': fill = "#f4c542"; break;
        case 'o': fill = "#7fb07f"; break;
        case '+': fill = "#9db7dd"; break;
        case '#': fill = "#d6a8a8"; break;
        default: break;
      }
      out += "<rect x=\"" + num((x - 1) * cell) + "\" y=\"" +
             num((n - y) * cell) + "\" width=\"" + num(cell) +
             "\" height=\"" + num(cell) + "\" fill=\"" + fill + "\"/>\n";
    }
  for (Square q : p.queens) {
    if (!spec.show_queens) break;
    out += "<circle cx=\"" + num((q.x - 1) * cell + cell / 2) + "\" cy=\"" +
           num((n - q.y) * cell + cell / 2) + "\" r=\"" + num(cell * 3 / 8) +
           "\" fill=\"#333333\"/>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace queens
