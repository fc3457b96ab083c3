#pragma once

#include <cstddef>
#include <optional>
#include <vector>

struct CorpusEntry {
  const char* polynomial;
  bool quasi_homogeneous;
  std::size_t milnor;
  std::size_t tjurina;
};

// Surface singularities with known invariants (ADE, Brieskorn-Pham,
// simple elliptic, and the x^10 family with its deformations).
inline const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> entries = {
      {"x^2+y^2+z^2", true, 1, 1},
      {"x^4+y^2+z^2", true, 3, 3},
      {"x^7+y^2+z^2", true, 6, 6},
      {"x^3+x*y^2+z^2", true, 4, 4},
      {"x^5+x*y^2+z^2", true, 6, 6},
      {"x^3+y^4+z^2", true, 6, 6},
      {"x^3+x*y^3+z^2", true, 7, 7},
      {"x^3+y^5+z^2", true, 8, 8},
      {"x^3+y^3+z^3", true, 8, 8},
      {"x^4+y^4+z^4", true, 27, 27},
      {"x^2*y+y^4+z^2", true, 5, 5},
      {"z^2+y^3+x^10", true, 18, 18},
      {"z^2+y^3+x^10+x^7*y", false, 18, 16},
      {"z^2+y^3+x^10-3*x^7*y", false, 18, 16},
      {"x^5+y^5+x^2*y^2+z^2", false, 11, 10},
  };
  return entries;
}
