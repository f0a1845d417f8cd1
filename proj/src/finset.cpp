#include "prpd/finset.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace prpd {

FinMap::FinMap(int d, int c, std::vector<int> t) : dom(d), cod(c), table(std::move(t)) {
  if (dom < 0 || cod < 0) throw std::invalid_argument("FinMap: negative size");
  if (static_cast<int>(table.size()) != dom)
    throw std::invalid_argument("FinMap: table length " + std::to_string(table.size()) +
                                " != dom " + std::to_string(dom));
  for (int v : table)
    if (v < 0 || v >= cod) throw std::invalid_argument("FinMap: entry out of range");
}

PointedMap::PointedMap(FinMap f) : underlying(std::move(f)) {
  if (underlying.dom < 1 || underlying.cod < 1)
    throw std::invalid_argument("PointedMap: pointed sets need a basepoint");
  if (underlying.table[0] != 0) throw std::invalid_argument("PointedMap: basepoint not preserved");
}

FinMap identity(int n) {
  std::vector<int> t(n);
  std::iota(t.begin(), t.end(), 0);
  return FinMap(n, n, std::move(t));
}

FinMap empty_map(int cod) { return FinMap(0, cod, {}); }

FinMap constant(int dom, int cod, int value) {
  return FinMap(dom, cod, std::vector<int>(dom, value));
}

FinMap compose(const FinMap& f, const FinMap& g) {
  if (f.cod != g.dom) throw std::invalid_argument("compose: codomain/domain mismatch");
  std::vector<int> t(f.dom);
  for (int x = 0; x < f.dom; ++x) t[x] = g.table[f.table[x]];
  return FinMap(f.dom, g.cod, std::move(t));
}

bool is_injective(const FinMap& f) {
  std::vector<char> seen(f.cod, 0);
  for (int v : f.table) {
    if (seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

bool is_surjective(const FinMap& f) {
  std::vector<char> seen(f.cod, 0);
  int hit = 0;
  for (int v : f.table)
    if (!seen[v]) {
      seen[v] = 1;
      ++hit;
    }
  return hit == f.cod;
}

bool is_bijection(const FinMap& f) { return f.dom == f.cod && is_injective(f); }

FinMap inverse(const FinMap& f) {
  if (!is_bijection(f)) throw std::invalid_argument("inverse: not a bijection");
  std::vector<int> t(f.dom);
  for (int x = 0; x < f.dom; ++x) t[f.table[x]] = x;
  return FinMap(f.cod, f.dom, std::move(t));
}

std::vector<std::vector<int>> fibers(const FinMap& f) {
  std::vector<std::vector<int>> out(f.cod);
  for (int x = 0; x < f.dom; ++x) out[f.table[x]].push_back(x);
  return out;
}

Coproduct coproduct(int x, int y) {
  std::vector<int> l(x), r(y);
  std::iota(l.begin(), l.end(), 0);
  std::iota(r.begin(), r.end(), x);
  return {x + y, FinMap(x, x + y, std::move(l)), FinMap(y, x + y, std::move(r))};
}

FinMap copair(const FinMap& f, const FinMap& g) {
  if (f.cod != g.cod) throw std::invalid_argument("copair: codomain mismatch");
  std::vector<int> t = f.table;
  t.insert(t.end(), g.table.begin(), g.table.end());
  return FinMap(f.dom + g.dom, f.cod, std::move(t));
}

FinMap sum(const FinMap& f, const FinMap& g) {
  std::vector<int> t = f.table;
  for (int v : g.table) t.push_back(v + f.cod);
  return FinMap(f.dom + g.dom, f.cod + g.cod, std::move(t));
}

Pushout pushout(const FinMap& f, const FinMap& g) {
  if (f.dom != g.dom) throw std::invalid_argument("pushout: span legs have different domains");
  UnionFind uf(f.cod + g.cod);
  for (int b = 0; b < f.dom; ++b) uf.unite(f.table[b], f.cod + g.table[b]);
  int count = 0;
  std::vector<int> cls = uf.classes(&count);
  std::vector<int> l(cls.begin(), cls.begin() + f.cod);
  std::vector<int> r(cls.begin() + f.cod, cls.end());
  return {count, FinMap(f.cod, count, std::move(l)), FinMap(g.cod, count, std::move(r))};
}

Pullback pullback(const FinMap& f, const FinMap& g) {
  if (f.cod != g.cod) throw std::invalid_argument("pullback: cospan legs have different codomains");
  std::vector<int> p1, p2;
  for (int x = 0; x < f.dom; ++x)
    for (int y = 0; y < g.dom; ++y)
      if (f.table[x] == g.table[y]) {
        p1.push_back(x);
        p2.push_back(y);
      }
  int n = static_cast<int>(p1.size());
  return {n, FinMap(n, f.dom, std::move(p1)), FinMap(n, g.dom, std::move(p2))};
}

std::pair<FinMap, FinMap> image_factorize(const FinMap& f) {
  std::vector<int> pos(f.cod, -1);
  for (int v : f.table) pos[v] = 0;
  std::vector<int> m;
  for (int y = 0; y < f.cod; ++y)
    if (pos[y] == 0) {
      pos[y] = static_cast<int>(m.size());
      m.push_back(y);
    }
  std::vector<int> e(f.dom);
  for (int x = 0; x < f.dom; ++x) e[x] = pos[f.table[x]];
  int k = static_cast<int>(m.size());
  return {FinMap(f.dom, k, std::move(e)), FinMap(k, f.cod, std::move(m))};
}

PointedMap compose(const PointedMap& f, const PointedMap& g) {
  return PointedMap(compose(f.underlying, g.underlying));
}

bool is_inert(const PointedMap& p) {
  std::vector<int> count(p.underlying.cod, 0);
  for (int v : p.underlying.table) ++count[v];
  for (int b = 1; b < p.underlying.cod; ++b)
    if (count[b] != 1) return false;
  return true;
}

bool is_active(const PointedMap& p) {
  for (int a = 1; a < p.underlying.dom; ++a)
    if (p.underlying.table[a] == 0) return false;
  return true;
}

std::pair<PointedMap, PointedMap> inert_active_factorize(const PointedMap& p) {
  const FinMap& f = p.underlying;
  std::vector<int> inert(f.dom, 0);
  std::vector<int> active{0};
  for (int a = 1; a < f.dom; ++a)
    if (f.table[a] != 0) {
      inert[a] = static_cast<int>(active.size());
      active.push_back(f.table[a]);
    }
  int mid = static_cast<int>(active.size());
  return {PointedMap(FinMap(f.dom, mid, std::move(inert))),
          PointedMap(FinMap(mid, f.cod, std::move(active)))};
}

UnionFind::UnionFind(int n) : parent_(n), rank_(n, 1) {
  std::iota(parent_.begin(), parent_.end(), 0);
}

int UnionFind::find(int x) {
  while (parent_[x] != x) {
    parent_[x] = parent_[parent_[x]];
    x = parent_[x];
  }
  return x;
}

bool UnionFind::unite(int a, int b) {
  a = find(a);
  b = find(b);
  if (a == b) return false;
  if (rank_[a] < rank_[b]) std::swap(a, b);
  parent_[b] = a;
  rank_[a] += rank_[b];
  return true;
}

std::vector<int> UnionFind::classes(int* count) {
  int n = size();
  std::vector<int> label(n, -1), out(n);
  int next = 0;
  for (int x = 0; x < n; ++x) {
    int r = find(x);
    if (label[r] < 0) label[r] = next++;
    out[x] = label[r];
  }
  if (count) *count = next;
  return out;
}

std::vector<std::vector<int>> all_permutations(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::uint64_t factorial(int n) {
  std::uint64_t r = 1;
  for (int i = 2; i <= n; ++i) r *= static_cast<std::uint64_t>(i);
  return r;
}

void to_json(json& j, const FinSet& s) { j = json{{"size", s.size}}; }

void from_json(const json& j, FinSet& s) {
  s.size = j.at("size").get<int>();
  if (s.size < 0) throw std::invalid_argument("FinSet: negative size");
}

void to_json(json& j, const FinMap& f) {
  j = json{{"dom", f.dom}, {"cod", f.cod}, {"table", f.table}};
}

void from_json(const json& j, FinMap& f) {
  f = FinMap(j.at("dom").get<int>(), j.at("cod").get<int>(), j.at("table").get<std::vector<int>>());
}

void to_json(json& j, const PointedMap& f) { to_json(j, f.underlying); }

void from_json(const json& j, PointedMap& f) { f = PointedMap(j.get<FinMap>()); }

}  // namespace prpd
