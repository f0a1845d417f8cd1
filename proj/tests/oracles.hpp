#pragma once

// Brute-force reference computations used by the tests. Nothing here calls
// into the library beyond its plain data types.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "prpd/cospan.hpp"
#include "prpd/freemon.hpp"

namespace oracle {

using prpd::Cospan;
using prpd::FinMap;
using prpd::MonHom;
using prpd::Multiset;

inline void for_each_table(int dom, int cod, const std::function<void(const std::vector<int>&)>& fn) {
  if (dom > 0 && cod == 0) return;
  std::vector<int> t(dom, 0);
  while (true) {
    fn(t);
    int i = 0;
    while (i < dom && ++t[i] == cod) t[i++] = 0;
    if (i == dom) return;
  }
}

inline std::uint64_t bell(int n) {
  // Bell triangle.
  std::vector<std::uint64_t> row{1};
  for (int i = 0; i < n; ++i) {
    std::vector<std::uint64_t> next{row.back()};
    for (std::uint64_t v : row) next.push_back(next.back() + v);
    row = next;
  }
  return row.front();
}

// Restricted growth strings of length n.
inline std::vector<std::vector<int>> set_partitions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(n);
  std::function<void(int, int)> rec = [&](int i, int blocks) {
    if (i == n) {
      out.push_back(cur);
      return;
    }
    for (int b = 0; b <= blocks; ++b) {
      cur[i] = b;
      rec(i + 1, std::max(blocks, b + 1));
    }
  };
  rec(0, 0);
  return out;
}

// Relabels the apex by first occurrence along left then right, dropping
// unused points. Only meaningful for jointly surjective cospans.
inline std::pair<std::vector<int>, std::vector<int>> first_occurrence(const std::vector<int>& l,
                                                                      const std::vector<int>& r) {
  std::map<int, int> ren;
  std::vector<int> nl, nr;
  for (int v : l) nl.push_back(ren.emplace(v, static_cast<int>(ren.size())).first->second);
  for (int v : r) nr.push_back(ren.emplace(v, static_cast<int>(ren.size())).first->second);
  return {nl, nr};
}

// Equivalence relation on A + B induced by a cospan, as a restricted growth string.
inline std::vector<int> relation_of(const Cospan& c) {
  std::vector<int> all = c.left.table;
  all.insert(all.end(), c.right.table.begin(), c.right.table.end());
  return first_occurrence(all, {}).first;
}

// Iso classes (fixing both boundaries) of jointly surjective cospans a -> X <- b
// with a label from an m-element set on each apex point.
inline std::uint64_t weighted_hom_count(int a, int b, int m) {
  std::set<std::vector<int>> seen;
  for (int x = 0; x <= a + b; ++x)
    for_each_table(a, x, [&](const std::vector<int>& l) {
      for_each_table(b, x, [&](const std::vector<int>& r) {
        std::vector<char> hit(x, 0);
        for (int v : l) hit[v] = 1;
        for (int v : r) hit[v] = 1;
        if (std::count(hit.begin(), hit.end(), 0)) return;
        for_each_table(x, m, [&](const std::vector<int>& lab) {
          // order of first occurrence of each apex point
          std::vector<int> order;
          std::vector<char> seen_pt(x, 0);
          for (const auto* t : {&l, &r})
            for (int v : *t)
              if (!seen_pt[v]) {
                seen_pt[v] = 1;
                order.push_back(v);
              }
          auto [nl, nr] = first_occurrence(l, r);
          std::vector<int> key = nl;
          key.push_back(-1);
          key.insert(key.end(), nr.begin(), nr.end());
          key.push_back(-1);
          for (int v : order) key.push_back(lab[v]);
          seen.insert(key);
        });
      });
    });
  return seen.size();
}

inline std::int64_t fact(int n) {
  std::int64_t r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

inline std::int64_t multifact(const std::vector<int>& m) {
  std::int64_t r = 1;
  for (int v : m) r *= fact(v);
  return r;
}

inline std::vector<int> apply(const MonHom& h, const std::vector<int>& x) {
  std::vector<int> y(h.dst, 0);
  for (int j = 0; j < h.src; ++j)
    for (int r = 0; r < h.dst; ++r) y[r] += x[j] * h.cols[j].mult[r];
  return y;
}

inline void for_each_below(const std::vector<int>& v, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> a(v.size(), 0);
  while (true) {
    fn(a);
    std::size_t i = 0;
    while (i < v.size() && ++a[i] > v[i]) a[i++] = 0;
    if (i == v.size()) return;
  }
}

// Discrete shadow of "the addition square is a pullback": for every source
// value x of degree <= max_degree and every splitting h(x) = a' + b', the
// splittings x = a + b over it have total weight x!/(a!b!) equal to
// h(x)!/(a'!b'!).
inline bool splitting_equifibered(const MonHom& h, int max_degree) {
  bool ok = true;
  std::vector<int> top(h.src, max_degree);
  for_each_below(top, [&](const std::vector<int>& x) {
    if (!ok || std::accumulate(x.begin(), x.end(), 0) > max_degree) return;
    std::vector<int> y = apply(h, x);
    std::map<std::vector<int>, std::int64_t> got;
    for_each_below(x, [&](const std::vector<int>& a) {
      std::vector<int> b(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) b[i] = x[i] - a[i];
      got[apply(h, a)] += multifact(x) / (multifact(a) * multifact(b));
    });
    for_each_below(y, [&](const std::vector<int>& a) {
      std::vector<int> b(y.size());
      for (std::size_t i = 0; i < y.size(); ++i) b[i] = y[i] - a[i];
      std::int64_t want = multifact(y) / (multifact(a) * multifact(b));
      auto it = got.find(a);
      if (it == got.end() || it->second != want) ok = false;
    });
  });
  return ok;
}

// h(e_j) = sum of e_r over r with g(r) = j, for some partial g : dst -> src.
inline bool is_transfer_along_partial_map(const MonHom& h) {
  bool found = false;
  for_each_table(h.dst, h.src + 1, [&](const std::vector<int>& g) {
    if (found) return;
    for (int j = 0; j < h.src; ++j)
      for (int r = 0; r < h.dst; ++r)
        if (h.cols[j].mult[r] != (g[r] == j + 1 ? 1 : 0)) return;
    found = true;
  });
  return found;
}

// Rooted binary trees with leaves labelled 0..n-1, children unordered.
inline std::set<std::string> binary_trees(const std::vector<int>& leaves) {
  std::set<std::string> out;
  if (leaves.size() == 1) {
    out.insert(std::to_string(leaves[0]));
    return out;
  }
  int n = static_cast<int>(leaves.size());
  for (int mask = 1; mask < (1 << n) - 1; ++mask) {
    if (!(mask & 1)) continue;  // leaf leaves[0] goes left
    std::vector<int> l, r;
    for (int i = 0; i < n; ++i) (mask >> i & 1 ? l : r).push_back(leaves[i]);
    for (const auto& a : binary_trees(l))
      for (const auto& b : binary_trees(r)) out.insert("(" + std::min(a, b) + "," + std::max(a, b) + ")");
  }
  return out;
}

inline std::size_t binary_tree_count(int leaves) {
  std::vector<int> v(leaves);
  std::iota(v.begin(), v.end(), 0);
  return binary_trees(v).size();
}

// Subsets of the (box+1)^2 grid, cell (a, b) at bit a * (box + 1) + b, passing
// the unit condition and closure under (a+b-k, c+b-k) inside the box.
inline std::vector<std::uint32_t> admissible_masks(int box) {
  int side = box + 1, cells = side * side;
  auto bit = [&](int a, int b) { return 1u << (a * side + b); };
  std::vector<std::uint32_t> out;
  for (std::uint32_t s = 0; s < (1u << cells); ++s) {
    bool unit = s == 0 || s == bit(0, 0) || (s & bit(1, 1));
    if (!unit) continue;
    std::uint32_t need = 0;
    for (int a = 0; a <= box; ++a)
      for (int b = 0; b <= box; ++b)
        for (int c = 0; c <= box; ++c) {
          if (!(s & bit(a, b)) || !(s & bit(b, c))) continue;
          for (int k = 1; k <= b; ++k)
            if (a + b - k <= box && c + b - k <= box) need |= bit(a + b - k, c + b - k);
        }
    if ((need & s) == need) out.push_back(s);
  }
  return out;
}

}  // namespace oracle
