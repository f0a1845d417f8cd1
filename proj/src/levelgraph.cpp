#include "prpd/levelgraph.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace prpd {

std::vector<std::pair<int, int>> TwPoset::objects() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i <= n; ++i)
    for (int j = i; j <= n; ++j) out.emplace_back(i, j);
  return out;
}

int TwPoset::index(int i, int j) const {
  if (i < 0 || j < i || j > n) throw std::out_of_range("TwPoset: not an object");
  // rows i' < i contribute n - i' + 1 objects each
  return i * (n + 1) - i * (i - 1) / 2 + (j - i);
}

bool TwPoset::leq(std::pair<int, int> a, std::pair<int, int> b) const {
  return b.first <= a.first && a.second <= b.second;
}

namespace {

int set_size(const LevelObject& x, int s) {
  return s % 2 == 0 ? x.boundary(s / 2) : x.apex((s + 1) / 2);
}

}  // namespace

TwDiagram tw_diagram(const LevelObject& x) {
  TwDiagram d;
  d.n = x.height();
  TwPoset tw{d.n};
  int nsets = 2 * d.n + 1;
  std::vector<int> offset{0};
  for (int s = 0; s < nsets; ++s) offset.push_back(offset.back() + set_size(x, s));
  auto objs = tw.objects();
  d.size.assign(objs.size(), 0);
  d.cls.assign(objs.size(), {});
  d.rep.assign(objs.size(), {});
  for (auto [i, j] : objs) {
    int idx = tw.index(i, j);
    UnionFind uf(offset.back());
    for (int k = i + 1; k <= j; ++k) {
      const Cospan& c = x.steps[k - 1];
      int a = offset[2 * k - 2], m = offset[2 * k - 1], b = offset[2 * k];
      for (int e = 0; e < c.source(); ++e) uf.unite(a + e, m + c.left(e));
      for (int e = 0; e < c.target(); ++e) uf.unite(b + e, m + c.right(e));
    }
    std::vector<int> order;
    for (int s = 2 * i + 1; s <= 2 * j; s += 2) order.push_back(s);
    for (int s = 2 * i; s <= 2 * j; s += 2) order.push_back(s);
    std::vector<int> label(offset.back(), -1);
    auto& cls = d.cls[idx];
    cls.assign(nsets, {});
    for (int s = 0; s < nsets; ++s) cls[s].assign(set_size(x, s), -1);
    int next = 0;
    for (int s : order)
      for (int e = 0; e < set_size(x, s); ++e) {
        int r = uf.find(offset[s] + e);
        if (label[r] < 0) {
          label[r] = next++;
          d.rep[idx].emplace_back(s, e);
        }
        cls[s][e] = label[r];
      }
    d.size[idx] = next;
  }
  return d;
}

FinMap TwDiagram::map(int i, int j, int i2, int j2) const {
  TwPoset tw{n};
  if (!tw.leq({i, j}, {i2, j2})) throw std::invalid_argument("TwDiagram::map: not an inclusion");
  int a = tw.index(i, j), b = tw.index(i2, j2);
  std::vector<int> t;
  for (auto [s, e] : rep[a]) t.push_back(cls[b][s][e]);
  return FinMap(size[a], size[b], std::move(t));
}

namespace {

void check_square(const LevelMorphism& f, const TwDiagram& tb, const TwDiagram& ta, int i, int j, int i2,
                  int j2) {
  TwPoset twm{f.src.height()};
  FinMap beta = tb.map(i, j, i2, j2);
  FinMap amap = ta.map(f.lambda[i], f.lambda[j], f.lambda[i2], f.lambda[j2]);
  const FinMap& a1 = f.alpha[twm.index(i, j)];
  const FinMap& a2 = f.alpha[twm.index(i2, j2)];
  for (int b = 0; b < beta.dom; ++b)
    if (a2(beta(b)) != amap(a1(b))) throw std::invalid_argument("LevelMorphism: naturality square does not commute");
  std::vector<char> in2(a2.cod, 0), in1(a1.cod, 0);
  for (int v : a2.table) in2[v] = 1;
  for (int v : a1.table) in1[v] = 1;
  for (int x = 0; x < amap.dom; ++x)
    if (in2[amap(x)] && !in1[x]) throw std::invalid_argument("LevelMorphism: non-cartesian square");
}

}  // namespace

LevelMorphism make_level_morphism(LevelObject src, LevelObject dst, std::vector<int> lambda,
                                  std::vector<FinMap> alpha) {
  LevelMorphism f{std::move(src), std::move(dst), std::move(lambda), std::move(alpha)};
  int m = f.src.height(), n = f.dst.height();
  if (static_cast<int>(f.lambda.size()) != m + 1 || !is_monotone(f.lambda, n))
    throw std::invalid_argument("LevelMorphism: lambda is not a monotone map [m] -> [n]");
  TwPoset twm{m};
  if (f.alpha.size() != twm.objects().size()) throw std::invalid_argument("LevelMorphism: wrong number of components");
  TwDiagram tb = tw_diagram(f.src), ta = tw_diagram(f.dst);
  for (auto [i, j] : twm.objects()) {
    const FinMap& a = f.alpha[twm.index(i, j)];
    if (a.dom != tb.value(i, j) || a.cod != ta.value(f.lambda[i], f.lambda[j]))
      throw std::invalid_argument("LevelMorphism: component has wrong sizes");
    if (!is_injective(a)) throw std::invalid_argument("LevelMorphism: component is not injective");
  }
  for (auto [i, j] : twm.objects()) {
    if (i > 0) check_square(f, tb, ta, i, j, i - 1, j);
    if (j < m) check_square(f, tb, ta, i, j, i, j + 1);
  }
  return f;
}

bool extend_level_morphism(const LevelObject& src, const LevelObject& dst, const std::vector<int>& lambda,
                           const std::vector<FinMap>& elementary, LevelMorphism* out) {
  int m = src.height();
  TwPoset twm{m};
  TwDiagram tb = tw_diagram(src), ta = tw_diagram(dst);
  // value of zigzag set s of src inside A at the corresponding Tw entry
  auto entry = [&](int s) -> std::pair<int, int> {
    if (s % 2 == 0) return {lambda[s / 2], lambda[s / 2]};
    return {lambda[(s - 1) / 2], lambda[(s + 1) / 2]};
  };
  std::vector<FinMap> alpha;
  for (auto [i, j] : twm.objects()) {
    int idx = twm.index(i, j);
    std::vector<int> t(tb.size[idx], -1);
    for (int s = 2 * i; s <= 2 * j; ++s) {
      auto [p, q] = entry(s);
      FinMap up = ta.map(p, q, lambda[i], lambda[j]);
      for (int e = 0; e < set_size(src, s); ++e) {
        int c = tb.cls[idx][s][e];
        int v = up(elementary[s](e));
        if (t[c] >= 0 && t[c] != v) return false;
        t[c] = v;
      }
    }
    alpha.emplace_back(tb.size[idx], ta.value(lambda[i], lambda[j]), std::move(t));
  }
  try {
    *out = make_level_morphism(src, dst, lambda, std::move(alpha));
  } catch (const std::invalid_argument&) {
    return false;
  }
  return true;
}

LevelMorphism identity_morphism(const LevelObject& x) {
  int n = x.height();
  std::vector<int> lambda(n + 1);
  std::iota(lambda.begin(), lambda.end(), 0);
  TwDiagram t = tw_diagram(x);
  std::vector<FinMap> alpha;
  for (int s : t.size) alpha.push_back(identity(s));
  return make_level_morphism(x, x, lambda, std::move(alpha));
}

LevelMorphism compose_level_morphisms(const LevelMorphism& g, const LevelMorphism& f) {
  if (g.dst != f.src) throw std::invalid_argument("compose_level_morphisms: objects do not match");
  int k = g.src.height();
  TwPoset twk{k}, twm{f.src.height()};
  std::vector<int> lambda;
  for (int v : g.lambda) lambda.push_back(f.lambda[v]);
  std::vector<FinMap> alpha;
  for (auto [i, j] : twk.objects())
    alpha.push_back(compose(g.alpha[twk.index(i, j)], f.alpha[twm.index(g.lambda[i], g.lambda[j])]));
  return make_level_morphism(g.src, f.dst, lambda, std::move(alpha));
}

bool is_inert(const LevelMorphism& f) {
  for (std::size_t i = 0; i < f.lambda.size(); ++i)
    if (f.lambda[i] != f.lambda[0] + static_cast<int>(i)) return false;
  return true;
}

bool is_active(const LevelMorphism& f) {
  if (f.lambda.front() != 0 || f.lambda.back() != f.dst.height()) return false;
  for (const auto& a : f.alpha)
    if (!is_bijection(a)) return false;
  return true;
}

bool is_iso(const LevelMorphism& f) {
  if (f.src.height() != f.dst.height()) return false;
  for (std::size_t i = 0; i < f.lambda.size(); ++i)
    if (f.lambda[i] != static_cast<int>(i)) return false;
  for (const auto& a : f.alpha)
    if (!is_bijection(a)) return false;
  return true;
}

std::pair<LevelMorphism, LevelMorphism> factorize_level(const LevelMorphism& f) {
  int m = f.src.height();
  int a = f.lambda.front(), b = f.lambda.back(), h = b - a;
  TwPoset twm{m};
  TwDiagram ta = tw_diagram(f.dst);
  int top = TwPoset{f.dst.height()}.index(a, b);
  std::vector<char> keep(ta.size[top], 0);
  for (int v : f.alpha[twm.index(0, m)].table) keep[v] = 1;
  // pos[s][e]: position of element e of A's zigzag set s inside the middle object
  std::vector<std::vector<int>> pos(2 * f.dst.height() + 1);
  std::vector<int> sizes(2 * h + 1, 0);
  for (int s = 2 * a; s <= 2 * b; ++s) {
    int n = set_size(f.dst, s);
    pos[s].assign(n, -1);
    for (int e = 0; e < n; ++e)
      if (keep[ta.cls[top][s][e]]) pos[s][e] = sizes[s - 2 * a]++;
  }
  std::vector<Cospan> steps;
  for (int k = 1; k <= h; ++k) {
    const Cospan& c = f.dst.steps[a + k - 1];
    int sa = 2 * (a + k - 1), sm = sa + 1, sb = sa + 2;
    std::vector<int> l, r;
    for (int e = 0; e < c.source(); ++e)
      if (pos[sa][e] >= 0) l.push_back(pos[sm][c.left(e)]);
    for (int e = 0; e < c.target(); ++e)
      if (pos[sb][e] >= 0) r.push_back(pos[sm][c.right(e)]);
    steps.emplace_back(FinMap(sizes[sa - 2 * a], sizes[sm - 2 * a], std::move(l)),
                       FinMap(sizes[sb - 2 * a], sizes[sm - 2 * a], std::move(r)));
  }
  LevelObject mid(sizes[0], std::move(steps));

  std::vector<int> lam_g(h + 1);
  std::iota(lam_g.begin(), lam_g.end(), a);
  std::vector<FinMap> elem;
  for (int s = 0; s <= 2 * h; ++s) {
    std::vector<int> t;
    for (int e = 0; e < set_size(f.dst, s + 2 * a); ++e)
      if (pos[s + 2 * a][e] >= 0) t.push_back(e);
    elem.emplace_back(sizes[s], set_size(f.dst, s + 2 * a), std::move(t));
  }
  LevelMorphism g;
  if (!extend_level_morphism(mid, f.dst, lam_g, elem, &g))
    throw std::logic_error("factorize_level: inert part failed to extend");

  std::vector<int> lam_h;
  for (int v : f.lambda) lam_h.push_back(v - a);
  TwPoset twh{h};
  std::vector<FinMap> alpha;
  for (auto [i, j] : twm.objects()) {
    const FinMap& gi = g.alpha[twh.index(lam_h[i], lam_h[j])];
    std::vector<int> back(gi.cod, -1);
    for (int x = 0; x < gi.dom; ++x) back[gi(x)] = x;
    const FinMap& fa = f.alpha[twm.index(i, j)];
    std::vector<int> t;
    for (int v : fa.table) {
      if (back[v] < 0) throw std::logic_error("factorize_level: image escapes the middle object");
      t.push_back(back[v]);
    }
    alpha.emplace_back(fa.dom, gi.dom, std::move(t));
  }
  LevelMorphism hm = make_level_morphism(f.src, mid, lam_h, std::move(alpha));
  return {g, hm};
}

namespace {

void for_each_injection(int dom, int cod, const std::function<void(const FinMap&)>& fn) {
  if (dom > cod) return;
  std::vector<int> t(dom);
  std::vector<char> used(cod, 0);
  std::function<void(int)> rec = [&](int i) {
    if (i == dom) {
      fn(FinMap(dom, cod, t));
      return;
    }
    for (int v = 0; v < cod; ++v) {
      if (used[v]) continue;
      used[v] = 1;
      t[i] = v;
      rec(i + 1);
      used[v] = 0;
    }
  };
  rec(0);
}

void for_each_monotone(int m, int n, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> cur(m + 1, 0);
  std::function<void(int)> rec = [&](int i) {
    if (i == m + 1) {
      fn(cur);
      return;
    }
    for (int v = i == 0 ? 0 : cur[i - 1]; v <= n; ++v) {
      cur[i] = v;
      rec(i + 1);
    }
  };
  rec(0);
}

}  // namespace

std::vector<LevelMorphism> all_level_morphisms(const LevelObject& src, const LevelObject& dst) {
  int m = src.height(), n = dst.height();
  TwDiagram ta = tw_diagram(dst);
  std::vector<LevelMorphism> out;
  for_each_monotone(m, n, [&](const std::vector<int>& lambda) {
    std::vector<FinMap> elem;
    std::function<void(int)> rec = [&](int s) {
      if (s == 2 * m + 1) {
        LevelMorphism f;
        if (extend_level_morphism(src, dst, lambda, elem, &f)) out.push_back(std::move(f));
        return;
      }
      int p = s % 2 == 0 ? lambda[s / 2] : lambda[(s - 1) / 2];
      int q = s % 2 == 0 ? lambda[s / 2] : lambda[(s + 1) / 2];
      for_each_injection(set_size(src, s), ta.value(p, q), [&](const FinMap& inj) {
        elem.push_back(inj);
        rec(s + 1);
        elem.pop_back();
      });
    };
    rec(0);
  });
  return out;
}

LevelObject active_collapse(const std::vector<int>& lambda, const LevelObject& x) {
  int n = x.height();
  if (!is_monotone(lambda, n) || lambda.front() != 0 || lambda.back() != n)
    throw std::invalid_argument("active_collapse: map is not active");
  TwDiagram t = tw_diagram(x);
  int m = static_cast<int>(lambda.size()) - 1;
  std::vector<Cospan> steps;
  for (int i = 1; i <= m; ++i) {
    int p = lambda[i - 1], q = lambda[i];
    steps.emplace_back(t.map(p, p, p, q), t.map(q, q, p, q));
  }
  return LevelObject(t.value(lambda[0], lambda[0]), std::move(steps));
}

int colimit_size(const LevelObject& x) { return chain_components(x).count; }

bool is_elementary(const LevelObject& x) { return x.height() <= 1 && colimit_size(x) == 1; }

bool is_connected_level(const LevelObject& x) { return colimit_size(x) == 1; }

bool is_connected_literal(const LevelObject& x) { return x.boundary(x.height()) == 1; }

std::vector<std::vector<int>> LabeledDAG::in_edges() const {
  std::vector<std::vector<int>> out(vertices);
  for (int e = 0; e < edges(); ++e)
    if (edge_tgt[e] >= 0) out[edge_tgt[e]].push_back(e);
  return out;
}

std::vector<std::vector<int>> LabeledDAG::out_edges() const {
  std::vector<std::vector<int>> out(vertices);
  for (int e = 0; e < edges(); ++e)
    if (edge_src[e] >= 0) out[edge_src[e]].push_back(e);
  return out;
}

bool LabeledDAG::is_acyclic() const {
  std::vector<int> indeg(vertices, 0);
  for (int e = 0; e < edges(); ++e)
    if (edge_src[e] >= 0 && edge_tgt[e] >= 0) ++indeg[edge_tgt[e]];
  auto outs = out_edges();
  std::vector<int> stack;
  for (int v = 0; v < vertices; ++v)
    if (indeg[v] == 0) stack.push_back(v);
  int seen = 0;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    ++seen;
    for (int e : outs[v])
      if (edge_tgt[e] >= 0 && --indeg[edge_tgt[e]] == 0) stack.push_back(edge_tgt[e]);
  }
  return seen == vertices;
}

int LabeledDAG::components() const {
  UnionFind uf(vertices + edges());
  for (int e = 0; e < edges(); ++e) {
    if (edge_src[e] >= 0) uf.unite(vertices + e, edge_src[e]);
    if (edge_tgt[e] >= 0) uf.unite(vertices + e, edge_tgt[e]);
  }
  int c = 0;
  uf.classes(&c);
  return c;
}

LabeledDAG realize(const LevelObject& x) {
  LabeledDAG g;
  int n = x.height();
  std::vector<int> eoff{0}, voff{0};
  for (int j = 0; j <= n; ++j) eoff.push_back(eoff.back() + x.boundary(j));
  for (int j = 1; j <= n; ++j) voff.push_back(voff.back() + x.apex(j));
  g.vertices = voff.back();
  g.height = n;
  for (int j = 0; j < n; ++j)
    for (int v = 0; v < x.apex(j + 1); ++v) g.vertex_level.push_back(j);
  for (int j = 0; j <= n; ++j)
    for (int e = 0; e < x.boundary(j); ++e) {
      g.edge_src.push_back(j > 0 ? voff[j - 1] + x.steps[j - 1].right(e) : -1);
      g.edge_tgt.push_back(j < n ? voff[j] + x.steps[j].left(e) : -1);
      g.edge_level.push_back(j);
    }
  return g;
}

LevelObject unrealize(const LabeledDAG& g) {
  if (static_cast<int>(g.edge_level.size()) != g.edges() ||
      static_cast<int>(g.vertex_level.size()) != g.vertices)
    throw std::invalid_argument("unrealize: graph carries no leveling");
  int n = g.height;
  for (int l : g.vertex_level) n = std::max(n, l + 1);
  for (int l : g.edge_level) n = std::max(n, l);
  std::vector<std::vector<int>> E(n + 1), V(n);
  for (int e = 0; e < g.edges(); ++e) E[g.edge_level[e]].push_back(e);
  for (int v = 0; v < g.vertices; ++v) V[g.vertex_level[v]].push_back(v);
  std::vector<int> epos(g.edges()), vpos(g.vertices);
  for (auto& lvl : E)
    for (std::size_t k = 0; k < lvl.size(); ++k) epos[lvl[k]] = static_cast<int>(k);
  for (auto& lvl : V)
    for (std::size_t k = 0; k < lvl.size(); ++k) vpos[lvl[k]] = static_cast<int>(k);
  std::vector<Cospan> steps;
  for (int j = 0; j < n; ++j) {
    std::vector<int> l, r;
    for (int e : E[j]) {
      int v = g.edge_tgt[e];
      if (v < 0 || g.vertex_level[v] != j) throw std::invalid_argument("unrealize: edge target off level");
      l.push_back(vpos[v]);
    }
    for (int e : E[j + 1]) {
      int v = g.edge_src[e];
      if (v < 0 || g.vertex_level[v] != j) throw std::invalid_argument("unrealize: edge source off level");
      r.push_back(vpos[v]);
    }
    int nv = static_cast<int>(V[j].size());
    steps.emplace_back(FinMap(static_cast<int>(E[j].size()), nv, std::move(l)),
                       FinMap(static_cast<int>(E[j + 1].size()), nv, std::move(r)));
  }
  return LevelObject(static_cast<int>(E[0].size()), std::move(steps));
}

LabeledDAG drop_leveling(LabeledDAG g) {
  g.edge_level.clear();
  g.vertex_level.clear();
  g.height = 0;
  return g;
}

LabeledDAG canonical_dag(const LabeledDAG& g) {
  int V = g.vertices;
  auto ins = g.in_edges(), outs = g.out_edges();
  auto color = [&](int e) { return g.edge_color.empty() ? 0 : g.edge_color[e]; };
  std::vector<std::vector<int>> inv(V);
  for (int v = 0; v < V; ++v) {
    std::vector<int> ic, oc;
    for (int e : ins[v]) ic.push_back(color(e));
    for (int e : outs[v]) oc.push_back(color(e));
    std::sort(ic.begin(), ic.end());
    std::sort(oc.begin(), oc.end());
    auto& w = inv[v];
    w.push_back(g.vertex_label.empty() ? 0 : g.vertex_label[v]);
    w.push_back(static_cast<int>(ic.size()));
    w.push_back(static_cast<int>(oc.size()));
    w.insert(w.end(), ic.begin(), ic.end());
    w.insert(w.end(), oc.begin(), oc.end());
  }
  std::vector<int> order(V);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return inv[a] < inv[b]; });
  std::vector<std::pair<int, int>> blocks;
  for (int i = 0; i < V;) {
    int j = i;
    while (j < V && inv[order[j]] == inv[order[i]]) ++j;
    blocks.emplace_back(i, j);
    i = j;
  }
  std::vector<std::array<int, 3>> best;
  std::vector<int> best_new;
  bool have = false;
  std::vector<int> slot = order;  // slot[position] = old vertex
  while (true) {
    std::vector<int> nw(V);
    for (int p = 0; p < V; ++p) nw[slot[p]] = p;
    std::vector<std::array<int, 3>> code;
    for (int e = 0; e < g.edges(); ++e)
      code.push_back({g.edge_src[e] < 0 ? -1 : nw[g.edge_src[e]], g.edge_tgt[e] < 0 ? -1 : nw[g.edge_tgt[e]],
                      color(e)});
    std::sort(code.begin(), code.end());
    if (!have || code < best) {
      best = code;
      best_new = nw;
      have = true;
    }
    int k = static_cast<int>(blocks.size()) - 1;
    for (; k >= 0; --k)
      if (std::next_permutation(slot.begin() + blocks[k].first, slot.begin() + blocks[k].second)) break;
    if (k < 0) break;
  }
  LabeledDAG out;
  out.vertices = V;
  if (!g.vertex_label.empty()) {
    out.vertex_label.assign(V, 0);
    for (int v = 0; v < V; ++v) out.vertex_label[best_new[v]] = g.vertex_label[v];
  }
  for (const auto& t : best) {
    out.edge_src.push_back(t[0]);
    out.edge_tgt.push_back(t[1]);
    if (!g.edge_color.empty()) out.edge_color.push_back(t[2]);
  }
  return out;
}

LabeledDAG forget_leveling(const LevelObject& x) { return canonical_dag(drop_leveling(realize(x))); }

std::vector<LabeledDAG> elementary_subgraphs(const LabeledDAG& g) {
  std::vector<LabeledDAG> out;
  auto ins = g.in_edges(), outs = g.out_edges();
  bool colored = !g.edge_color.empty();
  for (int v = 0; v < g.vertices; ++v) {
    LabeledDAG c;
    c.vertices = 1;
    if (!g.vertex_label.empty()) c.vertex_label = {g.vertex_label[v]};
    for (int e : ins[v]) {
      c.edge_src.push_back(-1);
      c.edge_tgt.push_back(0);
      if (colored) c.edge_color.push_back(g.edge_color[e]);
    }
    for (int e : outs[v]) {
      c.edge_src.push_back(0);
      c.edge_tgt.push_back(-1);
      if (colored) c.edge_color.push_back(g.edge_color[e]);
    }
    out.push_back(std::move(c));
  }
  for (int e = 0; e < g.edges(); ++e) {
    LabeledDAG c;
    c.edge_src = {-1};
    c.edge_tgt = {-1};
    if (colored) c.edge_color = {g.edge_color[e]};
    out.push_back(std::move(c));
  }
  return out;
}

std::string to_dot(const LabeledDAG& g, const std::string& name) {
  std::ostringstream os;
  os << "digraph " << name << " {\n  rankdir=LR;\n";
  for (int v = 0; v < g.vertices; ++v) {
    os << "  v" << v << " [label=\"v" << v;
    if (!g.vertex_label.empty()) os << ":" << g.vertex_label[v];
    os << "\"];\n";
  }
  for (int e = 0; e < g.edges(); ++e) {
    std::string s = g.edge_src[e] >= 0 ? "v" + std::to_string(g.edge_src[e]) : "in" + std::to_string(e);
    std::string t = g.edge_tgt[e] >= 0 ? "v" + std::to_string(g.edge_tgt[e]) : "out" + std::to_string(e);
    if (g.edge_src[e] < 0) os << "  " << s << " [shape=point];\n";
    if (g.edge_tgt[e] < 0) os << "  " << t << " [shape=point];\n";
    os << "  " << s << " -> " << t << " [label=\"e" << e;
    if (!g.edge_color.empty()) os << ":" << g.edge_color[e];
    os << "\"];\n";
  }
  if (static_cast<int>(g.vertex_level.size()) == g.vertices && g.vertices > 0) {
    int top = *std::max_element(g.vertex_level.begin(), g.vertex_level.end());
    for (int l = 0; l <= top; ++l) {
      os << "  { rank=same;";
      for (int v = 0; v < g.vertices; ++v)
        if (g.vertex_level[v] == l) os << " v" << v << ";";
      os << " }\n";
    }
  }
  os << "}\n";
  return os.str();
}

std::vector<LevelObject> enumerate_level_objects(int n, int size_bound) {
  std::vector<LevelObject> out;
  int nsets = 2 * n + 1;
  std::vector<int> sizes(nsets, 0);
  std::function<void(int, std::vector<Cospan>&)> build = [&](int i, std::vector<Cospan>& acc) {
    if (i == n) {
      out.emplace_back(sizes[0], acc);
      return;
    }
    int a = sizes[2 * i], m = sizes[2 * i + 1], b = sizes[2 * i + 2];
    if ((a > 0 || b > 0) && m == 0) return;
    std::vector<int> l(a, 0), r(b, 0);
    while (true) {
      acc.emplace_back(FinMap(a, m, l), FinMap(b, m, r));
      build(i + 1, acc);
      acc.pop_back();
      int k = 0;
      while (k < a + b) {
        int& slot = k < a ? l[k] : r[k - a];
        if (++slot < m) break;
        slot = 0;
        ++k;
      }
      if (k == a + b) break;
    }
  };
  std::function<void(int, int)> pick = [&](int s, int left) {
    if (s == nsets) {
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
  return out;
}

void to_json(json& j, const LabeledDAG& g) {
  j = json{{"vertices", g.vertices}, {"src", g.edge_src}, {"tgt", g.edge_tgt}};
  if (!g.edge_color.empty()) j["color"] = g.edge_color;
  if (!g.vertex_label.empty()) j["label"] = g.vertex_label;
  if (!g.edge_level.empty()) j["edge_level"] = g.edge_level;
  if (!g.vertex_level.empty()) j["vertex_level"] = g.vertex_level;
  if (!g.edge_level.empty()) j["height"] = g.height;
}

void from_json(const json& j, LabeledDAG& g) {
  g = LabeledDAG{};
  g.vertices = j.at("vertices").get<int>();
  g.edge_src = j.at("src").get<std::vector<int>>();
  g.edge_tgt = j.at("tgt").get<std::vector<int>>();
  if (j.contains("color")) g.edge_color = j.at("color").get<std::vector<int>>();
  if (j.contains("label")) g.vertex_label = j.at("label").get<std::vector<int>>();
  if (j.contains("edge_level")) g.edge_level = j.at("edge_level").get<std::vector<int>>();
  if (j.contains("vertex_level")) g.vertex_level = j.at("vertex_level").get<std::vector<int>>();
  g.height = j.value("height", 0);
  if (g.edge_src.size() != g.edge_tgt.size()) throw std::invalid_argument("LabeledDAG: src/tgt length");
  for (int e = 0; e < g.edges(); ++e)
    if (g.edge_src[e] < -1 || g.edge_src[e] >= g.vertices || g.edge_tgt[e] < -1 || g.edge_tgt[e] >= g.vertices)
      throw std::invalid_argument("LabeledDAG: vertex index out of range");
  if (!g.is_acyclic()) throw std::invalid_argument("LabeledDAG: graph has a directed cycle");
}

void to_json(json& j, const LevelMorphism& f) {
  j = json{{"src", f.src}, {"dst", f.dst}, {"lambda", f.lambda}, {"alpha", f.alpha}};
}

}  // namespace prpd
