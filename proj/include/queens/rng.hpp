#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "queens/board.hpp"

namespace queens {

// Seeded generator with platform-independent draws (plain modulo; the tiny
// bias is irrelevant for test sampling but identical everywhere).
struct Rng {
  std::mt19937_64 eng;
  explicit Rng(std::uint64_t seed) : eng(seed) {}
  int below(int bound) { return int(eng() % std::uint64_t(bound)); }
  int in(int lo, int hi) { return lo + below(hi - lo + 1); }
};

// k distinct squares on an n x n board.
std::vector<Square> random_squares(Rng& rng, int n, int k);

}  // namespace queens
