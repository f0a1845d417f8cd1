#include "canon.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "prpd/finset.hpp"

namespace prpd::detail {

namespace {

class Search {
 public:
  Search(const Diagram& d) : d_(d) {
    int ns = static_cast<int>(d.sizes.size());
    domain_.assign(ns, 0);
    first_arrow_.assign(ns, -1);
    for (int k = 0; k < static_cast<int>(d.arrows.size()); ++k) {
      const Arrow& a = d.arrows[k];
      if (first_arrow_[a.src] < 0) first_arrow_[a.src] = k;
      domain_[a.src] = 1;
      for (int p = 0; p < d.sizes[a.src]; ++p) positions_.push_back({k, p});
    }
    for (const Arrow& a : d.arrows)
      if (domain_[a.dst]) throw std::logic_error("canonical_labelling: set is both domain and codomain");
    for (int s = 0; s < ns; ++s)
      if (domain_[s] && s < static_cast<int>(d.colors.size()) && !d.colors[s].empty())
        throw std::logic_error("canonical_labelling: colours on a domain set");
    order_.resize(ns);
    used_.resize(ns);
    rel_.resize(ns);
    next_.assign(ns, 0);
    for (int s = 0; s < ns; ++s) {
      order_[s].assign(d.sizes[s], -1);
      used_[s].assign(d.sizes[s], 0);
      rel_[s].assign(d.sizes[s], -1);
    }
    cur_.assign(positions_.size(), 0);
  }

  Labelling run() {
    rec(0, 0);
    Labelling out;
    out.perm = best_perm_;
    out.aut = ties_;
    int ns = static_cast<int>(d_.sizes.size());
    for (int s = 0; s < ns; ++s) {
      if (domain_[s]) continue;
      std::vector<char> hit(d_.sizes[s], 0);
      for (const Arrow& a : d_.arrows)
        if (a.dst == s)
          for (int v : a.table) hit[v] = 1;
      std::vector<int> unused;
      for (int x = 0; x < d_.sizes[s]; ++x)
        if (!hit[x]) unused.push_back(color(s, x));
      std::sort(unused.begin(), unused.end());
      for (std::size_t i = 0; i < unused.size();) {
        std::size_t j = i;
        while (j < unused.size() && unused[j] == unused[i]) ++j;
        out.aut *= factorial(static_cast<int>(j - i));
        i = j;
      }
    }
    return out;
  }

 private:
  int color(int s, int x) const {
    if (s < static_cast<int>(d_.colors.size()) && !d_.colors[s].empty()) return d_.colors[s][x];
    return 0;
  }

  void rec(std::size_t p, int cmp) {
    if (p == positions_.size()) {
      finish(cmp);
      return;
    }
    auto [k, pos] = positions_[p];
    const Arrow& a = d_.arrows[k];
    int s = a.src, t = a.dst;
    bool choose = first_arrow_[s] == k;
    int n = d_.sizes[s];
    for (int cand = 0; cand < n; ++cand) {
      int x;
      if (choose) {
        if (used_[s][cand]) continue;
        x = cand;
      } else {
        if (cand > 0) break;
        x = order_[s][pos];
      }
      int y = a.table[x];
      bool fresh = rel_[t][y] < 0;
      if (fresh) rel_[t][y] = next_[t]++;
      int v = rel_[t][y];
      int ncmp = cmp;
      bool prune = false;
      if (have_best_ && cmp == 0) {
        if (v > best_[p]) prune = true;
        else if (v < best_[p]) ncmp = -1;
      }
      if (!prune) {
        cur_[p] = v;
        if (choose) {
          order_[s][pos] = x;
          used_[s][x] = 1;
        }
        rec(p + 1, ncmp);
        if (choose) {
          order_[s][pos] = -1;
          used_[s][x] = 0;
        }
      }
      if (fresh) {
        rel_[t][y] = -1;
        --next_[t];
      }
    }
  }

  void finish(int cmp) {
    int ns = static_cast<int>(d_.sizes.size());
    std::vector<std::vector<int>> rel = rel_;
    std::vector<int> tail;
    for (int s = 0; s < ns; ++s) {
      if (domain_[s]) continue;
      std::vector<int> unused;
      for (int x = 0; x < d_.sizes[s]; ++x)
        if (rel[s][x] < 0) unused.push_back(x);
      std::stable_sort(unused.begin(), unused.end(),
                       [&](int a, int b) { return color(s, a) < color(s, b); });
      int nx = next_[s];
      for (int x : unused) rel[s][x] = nx++;
      if (s < static_cast<int>(d_.colors.size()) && !d_.colors[s].empty()) {
        std::vector<int> c(d_.sizes[s]);
        for (int x = 0; x < d_.sizes[s]; ++x) c[rel[s][x]] = d_.colors[s][x];
        tail.insert(tail.end(), c.begin(), c.end());
      }
    }
    if (have_best_ && cmp == 0) {
      auto bt = best_.begin() + static_cast<long>(positions_.size());
      int c = 0;
      for (std::size_t i = 0; i < tail.size() && c == 0; ++i) {
        if (tail[i] < bt[static_cast<long>(i)]) c = -1;
        else if (tail[i] > bt[static_cast<long>(i)]) c = 1;
      }
      cmp = c;
      if (cmp > 0) return;
      if (cmp == 0) {
        ++ties_;
        return;
      }
    }
    best_ = cur_;
    best_.insert(best_.end(), tail.begin(), tail.end());
    have_best_ = true;
    ties_ = 1;
    best_perm_.assign(ns, {});
    for (int s = 0; s < ns; ++s) {
      if (domain_[s]) {
        best_perm_[s].assign(d_.sizes[s], 0);
        for (int np = 0; np < d_.sizes[s]; ++np) best_perm_[s][order_[s][np]] = np;
      } else {
        best_perm_[s] = rel[s];
      }
    }
  }

  const Diagram& d_;
  std::vector<char> domain_;
  std::vector<int> first_arrow_;
  std::vector<std::pair<int, int>> positions_;
  std::vector<std::vector<int>> order_;
  std::vector<std::vector<char>> used_;
  std::vector<std::vector<int>> rel_;
  std::vector<int> next_;
  std::vector<int> cur_;
  std::vector<int> best_;
  bool have_best_ = false;
  std::uint64_t ties_ = 0;
  std::vector<std::vector<int>> best_perm_;
};

}  // namespace

Labelling canonical_labelling(const Diagram& d, int bound) {
  for (int s : d.sizes)
    if (s > bound)
      throw std::length_error("canonicalize: set of size " + std::to_string(s) + " exceeds bound " +
                              std::to_string(bound));
  return Search(d).run();
}

std::vector<int> relabel_table(const Labelling& l, const Arrow& a) {
  std::vector<int> t(a.table.size());
  for (std::size_t x = 0; x < a.table.size(); ++x)
    t[l.perm[a.src][x]] = l.perm[a.dst][a.table[x]];
  return t;
}

std::vector<int> relabel_colors(const Labelling& l, int set, const std::vector<int>& colors) {
  std::vector<int> c(colors.size());
  for (std::size_t x = 0; x < colors.size(); ++x) c[l.perm[set][x]] = colors[x];
  return c;
}

}  // namespace prpd::detail
