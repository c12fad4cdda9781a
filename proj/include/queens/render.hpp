#pragma once

#include <string>

#include "queens/board.hpp"

namespace queens {

struct RenderSpec {
  bool show_queens = true;
  bool show_covered = true;
  bool show_rings = false;       // ring points of the occupied-line selection
  bool show_certificate = false; // lower_bound_certificate lines
  int cell_size = 32;            // svg only
};

// Row n first, one glyph per cell: 'Q' queen, 'o' ring point, '+' on a
// certificate line, '#' covered, '.' empty.
std::string render_ascii(const Placement& p, const RenderSpec& spec = {});

std::string render_svg(const Placement& p, const RenderSpec& spec = {});

}  // namespace queens
