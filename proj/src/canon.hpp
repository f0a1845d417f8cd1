#pragma once

// Brute-force canonical labelling of a finite diagram of sets and functions.
// Every set is either a domain of some arrow (its elements are ordered by
// search) or a pure codomain (relabelled by first occurrence). The canonical
// form is the lexicographically least concatenation of arrow tables, followed
// by the colours of the pure codomain sets.

#include <cstdint>
#include <vector>

namespace prpd::detail {

struct Arrow {
  int src;
  int dst;
  std::vector<int> table;
};

struct Diagram {
  std::vector<int> sizes;
  std::vector<Arrow> arrows;
  std::vector<std::vector<int>> colors;  // empty or one entry per element
};

struct Labelling {
  std::vector<std::vector<int>> perm;  // perm[s][old] = new
  std::uint64_t aut = 1;
};

Labelling canonical_labelling(const Diagram& d, int bound);

// Applies a labelling to one arrow.
std::vector<int> relabel_table(const Labelling& l, const Arrow& a);
std::vector<int> relabel_colors(const Labelling& l, int set, const std::vector<int>& colors);

}  // namespace prpd::detail
