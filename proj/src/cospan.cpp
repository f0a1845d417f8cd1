#include "prpd/cospan.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

#include "canon.hpp"

namespace prpd {

Cospan::Cospan(FinMap l, FinMap r) : left(std::move(l)), right(std::move(r)) {
  if (left.cod != right.cod) throw std::invalid_argument("Cospan: legs have different apexes");
}

Span::Span(FinMap l, FinMap r) : left(std::move(l)), right(std::move(r)) {
  if (left.dom != right.dom) throw std::invalid_argument("Span: legs have different apexes");
}

Chain::Chain(std::vector<Cospan> s) : Chain(s.empty() ? 0 : s.front().source(), std::move(s)) {}

Chain::Chain(int a0, std::vector<Cospan> s) : base(a0), steps(std::move(s)) {
  if (base < 0) throw std::invalid_argument("Chain: negative size");
  for (std::size_t i = 0; i < steps.size(); ++i) {
    int expect = i == 0 ? base : steps[i - 1].target();
    if (steps[i].source() != expect) throw std::invalid_argument("Chain: adjacent cospans do not match");
  }
}

int Chain::total_size() const {
  int t = base;
  for (const auto& c : steps) t += c.apex() + c.target();
  return t;
}

ProjCospan::ProjCospan(Cospan cc) : c(std::move(cc)) {
  if (!is_surjective(copair(c.left, c.right)))
    throw std::invalid_argument("ProjCospan: A + B -> X is not surjective");
}

FinCommMonoid::FinCommMonoid(int n, std::vector<std::vector<int>> t, int z)
    : size(n), table(std::move(t)), zero(z) {
  if (size < 1) throw std::invalid_argument("FinCommMonoid: empty carrier");
  if (static_cast<int>(table.size()) != size) throw std::invalid_argument("FinCommMonoid: table rows");
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != size) throw std::invalid_argument("FinCommMonoid: table columns");
    for (int v : row)
      if (v < 0 || v >= size) throw std::invalid_argument("FinCommMonoid: entry out of range");
  }
  if (zero < 0 || zero >= size) throw std::invalid_argument("FinCommMonoid: zero out of range");
  for (int a = 0; a < size; ++a) {
    if (add(a, zero) != a) throw std::invalid_argument("FinCommMonoid: zero is not a unit");
    for (int b = 0; b < size; ++b) {
      if (add(a, b) != add(b, a)) throw std::invalid_argument("FinCommMonoid: not commutative");
      for (int c = 0; c < size; ++c)
        if (add(add(a, b), c) != add(a, add(b, c)))
          throw std::invalid_argument("FinCommMonoid: not associative");
    }
  }
}

FinCommMonoid FinCommMonoid::trivial() { return FinCommMonoid(1, {{0}}, 0); }

FinCommMonoid FinCommMonoid::cyclic(int n) {
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return FinCommMonoid(n, std::move(t), 0);
}

FinCommMonoid FinCommMonoid::max_boolean() { return FinCommMonoid(2, {{0, 1}, {1, 1}}, 0); }

WeightedCospan::WeightedCospan(Cospan cc, std::vector<int> l) : c(std::move(cc)), labels(std::move(l)) {
  if (static_cast<int>(labels.size()) != c.apex())
    throw std::invalid_argument("WeightedCospan: labels must cover the apex");
}

Cospan identity_cospan(int n) { return Cospan(identity(n), identity(n)); }

namespace {

// Apex permutation old -> new by first occurrence; unused points are ordered by key.
std::vector<int> first_occurrence(const Cospan& c, const std::vector<int>* keys) {
  std::vector<int> rel(c.apex(), -1);
  int next = 0;
  for (const FinMap* m : {&c.left, &c.right})
    for (int v : m->table)
      if (rel[v] < 0) rel[v] = next++;
  std::vector<int> unused;
  for (int x = 0; x < c.apex(); ++x)
    if (rel[x] < 0) unused.push_back(x);
  if (keys)
    std::stable_sort(unused.begin(), unused.end(),
                     [&](int a, int b) { return (*keys)[a] < (*keys)[b]; });
  for (int x : unused) rel[x] = next++;
  return rel;
}

FinMap after(const FinMap& f, const std::vector<int>& rel) {
  std::vector<int> t(f.dom);
  for (int x = 0; x < f.dom; ++x) t[x] = rel[f.table[x]];
  return FinMap(f.dom, f.cod, std::move(t));
}

}  // namespace

Cospan normalize_apex(const Cospan& c) {
  auto rel = first_occurrence(c, nullptr);
  return Cospan(after(c.left, rel), after(c.right, rel));
}

WeightedCospan normalize_apex(const WeightedCospan& w) {
  auto rel = first_occurrence(w.c, &w.labels);
  std::vector<int> lab(w.labels.size());
  for (std::size_t x = 0; x < lab.size(); ++x) lab[rel[x]] = w.labels[x];
  return WeightedCospan(Cospan(after(w.c.left, rel), after(w.c.right, rel)), std::move(lab));
}

Chain normalize_apex(const Chain& ch) {
  std::vector<Cospan> s;
  for (const auto& c : ch.steps) s.push_back(normalize_apex(c));
  return Chain(ch.base, std::move(s));
}

Cospan compose_cospans(const Cospan& c1, const Cospan& c2) {
  if (c1.target() != c2.source()) throw std::invalid_argument("compose_cospans: boundary mismatch");
  Pushout p = pushout(c1.right, c2.left);
  return normalize_apex(Cospan(compose(c1.left, p.inl), compose(c2.right, p.inr)));
}

Cospan monoidal_sum(const Cospan& u, const Cospan& v) {
  return normalize_apex(Cospan(sum(u.left, v.left), sum(u.right, v.right)));
}

Chain monoidal_sum(const Chain& u, const Chain& v) {
  if (u.height() != v.height()) throw std::invalid_argument("monoidal_sum: chain heights differ");
  std::vector<Cospan> s;
  for (int i = 0; i < u.height(); ++i) s.push_back(monoidal_sum(u.steps[i], v.steps[i]));
  return Chain(u.base + v.base, std::move(s));
}

Span identity_span(int n) { return Span(identity(n), identity(n)); }

Span compose_spans(const Span& s1, const Span& s2) {
  if (s1.target() != s2.source()) throw std::invalid_argument("compose_spans: boundary mismatch");
  Pullback q = pullback(s1.right, s2.left);
  return Span(compose(q.pr1, s1.left), compose(q.pr2, s2.right));
}

Canonical<Cospan> canonicalize(const Cospan& c, int bound) {
  detail::Diagram d{{c.source(), c.target(), c.apex()},
                    {{0, 2, c.left.table}, {1, 2, c.right.table}},
                    {}};
  auto l = detail::canonical_labelling(d, bound);
  int x = c.apex();
  return {Cospan(FinMap(c.source(), x, detail::relabel_table(l, d.arrows[0])),
                 FinMap(c.target(), x, detail::relabel_table(l, d.arrows[1]))),
          l.aut};
}

Canonical<Span> canonicalize(const Span& s, int bound) {
  detail::Diagram d{{s.apex(), s.source(), s.target()},
                    {{0, 1, s.left.table}, {0, 2, s.right.table}},
                    {}};
  auto l = detail::canonical_labelling(d, bound);
  return {Span(FinMap(s.apex(), s.source(), detail::relabel_table(l, d.arrows[0])),
               FinMap(s.apex(), s.target(), detail::relabel_table(l, d.arrows[1]))),
          l.aut};
}

Canonical<Chain> canonicalize(const Chain& ch, int bound) {
  // sets: A_0, M_1, A_1, ..., M_n, A_n -> indices 0, 1, 2, ...
  detail::Diagram d;
  d.sizes.push_back(ch.base);
  for (const auto& c : ch.steps) {
    d.sizes.push_back(c.apex());
    d.sizes.push_back(c.target());
  }
  for (int i = 0; i < ch.height(); ++i) {
    const auto& c = ch.steps[i];
    d.arrows.push_back({2 * i, 2 * i + 1, c.left.table});
    d.arrows.push_back({2 * i + 2, 2 * i + 1, c.right.table});
  }
  auto l = detail::canonical_labelling(d, bound);
  std::vector<Cospan> s;
  for (int i = 0; i < ch.height(); ++i) {
    const auto& c = ch.steps[i];
    s.emplace_back(FinMap(c.source(), c.apex(), detail::relabel_table(l, d.arrows[2 * i])),
                   FinMap(c.target(), c.apex(), detail::relabel_table(l, d.arrows[2 * i + 1])));
  }
  return {Chain(ch.base, std::move(s)), l.aut};
}

Canonical<WeightedCospan> canonicalize(const WeightedCospan& w, int bound) {
  const Cospan& c = w.c;
  detail::Diagram d{{c.source(), c.target(), c.apex()},
                    {{0, 2, c.left.table}, {1, 2, c.right.table}},
                    {{}, {}, w.labels}};
  auto l = detail::canonical_labelling(d, bound);
  int x = c.apex();
  return {WeightedCospan(Cospan(FinMap(c.source(), x, detail::relabel_table(l, d.arrows[0])),
                                FinMap(c.target(), x, detail::relabel_table(l, d.arrows[1]))),
                         detail::relabel_colors(l, 2, w.labels)),
          l.aut};
}

bool is_monotone(const std::vector<int>& lambda, int n) {
  if (lambda.empty()) return false;
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    if (lambda[i] < 0 || lambda[i] > n) return false;
    if (i > 0 && lambda[i] < lambda[i - 1]) return false;
  }
  return true;
}

Chain simplicial_act(const std::vector<int>& lambda, const Chain& ch) {
  int n = ch.height();
  if (!is_monotone(lambda, n)) throw std::invalid_argument("simplicial_act: map is not monotone into [n]");
  int m = static_cast<int>(lambda.size()) - 1;
  std::vector<Cospan> s;
  for (int i = 1; i <= m; ++i) {
    int lo = lambda[i - 1], hi = lambda[i];
    Cospan c = identity_cospan(ch.boundary(lo));
    for (int k = lo + 1; k <= hi; ++k) c = compose_cospans(c, ch.steps[k - 1]);
    s.push_back(std::move(c));
  }
  return Chain(ch.boundary(lambda[0]), std::move(s));
}

Chain face(int i, const Chain& ch) {
  int n = ch.height();
  if (n == 0 || i < 0 || i > n) throw std::invalid_argument("face: index out of range");
  std::vector<int> lambda;
  for (int k = 0; k <= n; ++k)
    if (k != i) lambda.push_back(k);
  return simplicial_act(lambda, ch);
}

Chain degeneracy(int i, const Chain& ch) {
  int n = ch.height();
  if (i < 0 || i > n) throw std::invalid_argument("degeneracy: index out of range");
  std::vector<int> lambda;
  for (int k = 0; k <= n; ++k) {
    lambda.push_back(k);
    if (k == i) lambda.push_back(k);
  }
  return simplicial_act(lambda, ch);
}

std::vector<std::vector<int>> active_maps(int n, int max_m) {
  std::vector<std::vector<int>> out;
  for (int m = 0; m <= max_m; ++m) {
    std::vector<int> cur(m + 1, 0);
    std::function<void(int)> rec = [&](int i) {
      if (i == m + 1) {
        if (cur[0] == 0 && cur[m] == n) out.push_back(cur);
        return;
      }
      for (int v = i == 0 ? 0 : cur[i - 1]; v <= n; ++v) {
        cur[i] = v;
        rec(i + 1);
      }
    };
    rec(0);
  }
  return out;
}

ChainComponents chain_components(const Chain& ch) {
  std::vector<int> offset{0};
  std::vector<int> sizes{ch.base};
  for (const auto& c : ch.steps) {
    sizes.push_back(c.apex());
    sizes.push_back(c.target());
  }
  for (int s : sizes) offset.push_back(offset.back() + s);
  UnionFind uf(offset.back());
  for (int i = 0; i < ch.height(); ++i) {
    const auto& c = ch.steps[i];
    int a = offset[2 * i], m = offset[2 * i + 1], b = offset[2 * i + 2];
    for (int x = 0; x < c.source(); ++x) uf.unite(a + x, m + c.left(x));
    for (int x = 0; x < c.target(); ++x) uf.unite(b + x, m + c.right(x));
  }
  ChainComponents out;
  auto cls = uf.classes(&out.count);
  for (std::size_t s = 0; s < sizes.size(); ++s)
    out.of_set.emplace_back(cls.begin() + offset[s], cls.begin() + offset[s + 1]);
  return out;
}

bool is_connected(const Chain& ch) { return chain_components(ch).count == 1; }

std::vector<Chain> decompose_chain(const Chain& ch) {
  ChainComponents cc = chain_components(ch);
  std::vector<Chain> out;
  for (int k = 0; k < cc.count; ++k) {
    // renumber each set's elements lying in component k in inherited order
    std::vector<std::vector<int>> pos(cc.of_set.size());
    std::vector<int> sizes(cc.of_set.size(), 0);
    for (std::size_t s = 0; s < cc.of_set.size(); ++s) {
      pos[s].assign(cc.of_set[s].size(), -1);
      for (std::size_t x = 0; x < cc.of_set[s].size(); ++x)
        if (cc.of_set[s][x] == k) pos[s][x] = sizes[s]++;
    }
    auto restrict = [&](const FinMap& f, int src, int dst) {
      std::vector<int> t;
      for (int x = 0; x < f.dom; ++x)
        if (pos[src][x] >= 0) t.push_back(pos[dst][f(x)]);
      return FinMap(sizes[src], sizes[dst], std::move(t));
    };
    std::vector<Cospan> s;
    for (int i = 0; i < ch.height(); ++i)
      s.emplace_back(restrict(ch.steps[i].left, 2 * i, 2 * i + 1),
                     restrict(ch.steps[i].right, 2 * i + 2, 2 * i + 1));
    out.emplace_back(sizes[0], std::move(s));
  }
  return out;
}

namespace {

void for_each_map(int dom, int cod, const std::function<void(const FinMap&)>& fn) {
  if (dom > 0 && cod == 0) return;
  std::vector<int> t(dom, 0);
  while (true) {
    fn(FinMap(dom, cod, t));
    int i = 0;
    while (i < dom && ++t[i] == cod) t[i++] = 0;
    if (i == dom) return;
  }
}

}  // namespace

std::vector<Chain> enumerate_chains(int n, int size_bound) {
  std::set<Chain> seen;
  // sizes of A_0, M_1, A_1, ..., M_n, A_n
  int nsets = 2 * n + 1;
  std::vector<int> sizes(nsets, 0);
  std::function<void(int, int)> pick = [&](int s, int left) {
    if (s == nsets) {
      std::function<void(int, std::vector<Cospan>&)> build = [&](int i, std::vector<Cospan>& acc) {
        if (i == n) {
          seen.insert(canonicalize(Chain(sizes[0], acc)).form);
          return;
        }
        int a = sizes[2 * i], m = sizes[2 * i + 1], b = sizes[2 * i + 2];
        for_each_map(a, m, [&](const FinMap& l) {
          for_each_map(b, m, [&](const FinMap& r) {
            acc.emplace_back(l, r);
            build(i + 1, acc);
            acc.pop_back();
          });
        });
      };
      std::vector<Cospan> acc;
      build(0, acc);
      return;
    }
    for (int k = 0; k <= left; ++k) {
      sizes[s] = k;
      pick(s + 1, left - k);
    }
  };
  pick(0, size_bound);
  return {seen.begin(), seen.end()};
}

namespace {

json chain_witness(const Chain& ch) { return json(ch); }

}  // namespace

Verdict verify_levelwise_free(int n, int size_bound) {
  if (n < 0) throw std::invalid_argument("verify_levelwise_free: negative height");
  std::int64_t checked = 0;
  auto active = active_maps(n, n + 1);
  for (const Chain& ch : enumerate_chains(n, size_bound)) {
    ++checked;
    auto pieces = decompose_chain(ch);
    Chain re(0, std::vector<Cospan>(n, identity_cospan(0)));
    if (n == 0) re = Chain(0);
    std::map<Chain, std::pair<int, std::uint64_t>> classes;
    for (const auto& p : pieces) {
      if (!is_connected(p))
        return Verdict::fail("piece_not_connected", {{"chain", chain_witness(ch)}, {"piece", p}}, checked);
      re = monoidal_sum(re, p);
      auto cp = canonicalize(p);
      auto& slot = classes[cp.form];
      slot.first += 1;
      slot.second = cp.aut_order;
    }
    auto cc = canonicalize(ch);
    if (canonicalize(re).form != cc.form)
      return Verdict::fail("recomposition", {{"chain", chain_witness(ch)}}, checked);
    std::uint64_t predicted = 1;
    for (const auto& [form, info] : classes) {
      for (int k = 0; k < info.first; ++k) predicted *= info.second;
      predicted *= factorial(info.first);
    }
    if (predicted != cc.aut_order)
      return Verdict::fail("aut_order_formula",
                           {{"chain", chain_witness(ch)},
                            {"aut_order", cc.aut_order},
                            {"predicted", predicted}},
                           checked);
    if (pieces.size() == 1) {
      for (const auto& lam : active) {
        Chain img = simplicial_act(lam, ch);
        if (!is_connected(img))
          return Verdict::fail("active_not_connected",
                               {{"chain", chain_witness(ch)}, {"lambda", lam}, {"image", img}}, checked);
      }
    }
  }
  return Verdict::pass(checked);
}

ProjCospan identity_proj(int n) { return ProjCospan(identity_cospan(n)); }

namespace {

Cospan restrict_to_image(const Cospan& c) {
  Cospan nc = normalize_apex(c);
  int used = 0;
  for (const FinMap* m : {&nc.left, &nc.right})
    for (int v : m->table) used = std::max(used, v + 1);
  return Cospan(FinMap(nc.left.dom, used, nc.left.table), FinMap(nc.right.dom, used, nc.right.table));
}

}  // namespace

ProjCospan compose_proj(const ProjCospan& p1, const ProjCospan& p2) {
  return ProjCospan(restrict_to_image(compose_cospans(p1.c, p2.c)));
}

ProjCospan span_to_proj(const Span& s) {
  Pushout p = pushout(s.left, s.right);
  return ProjCospan(restrict_to_image(Cospan(p.inl, p.inr)));
}

WeightedCospan compose_weighted(const FinCommMonoid& m, const WeightedCospan& w1,
                                const WeightedCospan& w2) {
  if (w1.c.target() != w2.c.source()) throw std::invalid_argument("compose_weighted: boundary mismatch");
  for (int v : w1.labels)
    if (v < 0 || v >= m.size) throw std::invalid_argument("compose_weighted: label outside monoid");
  for (int v : w2.labels)
    if (v < 0 || v >= m.size) throw std::invalid_argument("compose_weighted: label outside monoid");
  Pushout p = pushout(w1.c.right, w2.c.left);
  std::vector<int> lab(p.size, m.zero);
  for (int x = 0; x < w1.c.apex(); ++x) lab[p.inl(x)] = m.add(lab[p.inl(x)], w1.labels[x]);
  for (int y = 0; y < w2.c.apex(); ++y) lab[p.inr(y)] = m.add(lab[p.inr(y)], w2.labels[y]);
  Cospan c(compose(w1.c.left, p.inl), compose(w2.c.right, p.inr));
  return normalize_apex(WeightedCospan(std::move(c), std::move(lab)));
}

WeightedCospan monoidal_sum(const WeightedCospan& u, const WeightedCospan& v) {
  std::vector<int> lab = u.labels;
  lab.insert(lab.end(), v.labels.begin(), v.labels.end());
  return normalize_apex(
      WeightedCospan(Cospan(sum(u.c.left, v.c.left), sum(u.c.right, v.c.right)), std::move(lab)));
}

WeightedCospan identity_weighted(const FinCommMonoid& m, int n) {
  return WeightedCospan(identity_cospan(n), std::vector<int>(n, m.zero));
}

std::uint64_t hom_count_weighted(int a_size, int b_size, const FinCommMonoid& m) {
  if (a_size < 0 || b_size < 0 || a_size > 4 || b_size > 4)
    throw std::out_of_range("hom_count_weighted: boundary sizes must lie in 0..4");
  int n = a_size + b_size;
  // Stirling numbers of the second kind S(n, k)
  std::vector<std::vector<std::uint64_t>> st(n + 1, std::vector<std::uint64_t>(n + 1, 0));
  st[0][0] = 1;
  for (int i = 1; i <= n; ++i)
    for (int k = 1; k <= i; ++k) st[i][k] = st[i - 1][k - 1] + static_cast<std::uint64_t>(k) * st[i - 1][k];
  std::uint64_t total = 0, pw = 1;
  for (int k = 0; k <= n; ++k) {
    total += st[n][k] * pw;
    pw *= static_cast<std::uint64_t>(m.size);
  }
  return total;
}

void to_json(json& j, const Cospan& c) { j = json{{"left", c.left}, {"right", c.right}}; }

void from_json(const json& j, Cospan& c) {
  c = Cospan(j.at("left").get<FinMap>(), j.at("right").get<FinMap>());
}

void to_json(json& j, const Span& s) { j = json{{"left", s.left}, {"right", s.right}}; }

void from_json(const json& j, Span& s) { s = Span(j.at("left").get<FinMap>(), j.at("right").get<FinMap>()); }

void to_json(json& j, const Chain& ch) {
  std::vector<int> levels{ch.base};
  json maps = json::array();
  for (const auto& c : ch.steps) {
    levels.push_back(c.apex());
    levels.push_back(c.target());
    maps.push_back(c.left);
    maps.push_back(c.right);
  }
  j = json{{"levels", levels}, {"maps", maps}};
}

void from_json(const json& j, Chain& ch) {
  auto levels = j.at("levels").get<std::vector<int>>();
  const auto& maps = j.at("maps");
  if (levels.empty() || levels.size() % 2 == 0) throw std::invalid_argument("Chain: levels must have odd length");
  std::size_t n = levels.size() / 2;
  if (maps.size() != 2 * n) throw std::invalid_argument("Chain: expected two maps per level");
  std::vector<Cospan> s;
  for (std::size_t i = 0; i < n; ++i) {
    FinMap l = maps[2 * i].get<FinMap>(), r = maps[2 * i + 1].get<FinMap>();
    if (l.dom != levels[2 * i] || l.cod != levels[2 * i + 1] || r.dom != levels[2 * i + 2] ||
        r.cod != levels[2 * i + 1])
      throw std::invalid_argument("Chain: map sizes disagree with levels");
    s.emplace_back(std::move(l), std::move(r));
  }
  ch = Chain(levels[0], std::move(s));
}

void to_json(json& j, const ProjCospan& p) { to_json(j, p.c); }

void from_json(const json& j, ProjCospan& p) { p = ProjCospan(j.get<Cospan>()); }

void to_json(json& j, const FinCommMonoid& m) {
  j = json{{"size", m.size}, {"zero", m.zero}, {"table", m.table}};
}

void from_json(const json& j, FinCommMonoid& m) {
  m = FinCommMonoid(j.at("size").get<int>(), j.at("table").get<std::vector<std::vector<int>>>(),
                    j.at("zero").get<int>());
}

void to_json(json& j, const WeightedCospan& w) {
  j = json{{"left", w.c.left}, {"right", w.c.right}, {"labels", w.labels}};
}

void from_json(const json& j, WeightedCospan& w) {
  w = WeightedCospan(Cospan(j.at("left").get<FinMap>(), j.at("right").get<FinMap>()),
                     j.at("labels").get<std::vector<int>>());
}

}  // namespace prpd
