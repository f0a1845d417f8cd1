#include "prpd/segal.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

#include "canon.hpp"

namespace prpd {

namespace {

bool is_identity_perm(const std::vector<int>& p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] != static_cast<int>(i)) return false;
  return true;
}

std::vector<std::vector<int>> color_perms(const Colors& c) {
  std::vector<std::vector<int>> out;
  for (auto& p : all_permutations(static_cast<int>(c.size()))) {
    bool ok = true;
    for (std::size_t i = 0; i < p.size() && ok; ++i) ok = c[p[i]] == c[i];
    if (ok) out.push_back(p);
  }
  return out;
}

std::vector<Matching> matchings(const OpSig& o, const OpSig& p) {
  std::vector<Matching> out;
  Matching cur;
  std::vector<char> used(p.in.size(), 0);
  std::function<void(std::size_t)> rec = [&](std::size_t r) {
    if (r == o.out.size()) {
      if (!cur.empty()) out.push_back(cur);
      return;
    }
    rec(r + 1);
    for (std::size_t s = 0; s < p.in.size(); ++s) {
      if (used[s] || p.in[s] != o.out[r]) continue;
      used[s] = 1;
      cur.push_back({static_cast<int>(r), static_cast<int>(s)});
      rec(r + 1);
      cur.pop_back();
      used[s] = 0;
    }
  };
  rec(0);
  return out;
}

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

OpSig free_sig(const FreeOp& g) {
  OpSig s;
  s.in.assign(g.inputs, -1);
  s.out.assign(g.outputs, -1);
  for (const auto& e : g.edges) {
    if (e[0] < 0) s.in[-1 - e[0]] = e[2];
    if (e[1] < 0) s.out[-1 - e[1]] = e[2];
  }
  return s;
}

// Incident edges of a vertex of M_j, in leg order.
std::vector<int> in_legs(const LabeledChain& x, int j, int v) {
  const Cospan& c = x.shape.steps[j - 1];
  std::vector<int> e;
  for (int a = 0; a < c.source(); ++a)
    if (c.left(a) == v) e.push_back(a);
  const auto& col = x.colors[j - 1];
  std::stable_sort(e.begin(), e.end(), [&](int a, int b) { return col[a] < col[b]; });
  return e;
}

std::vector<int> out_legs(const LabeledChain& x, int j, int v) {
  const Cospan& c = x.shape.steps[j - 1];
  std::vector<int> e;
  for (int a = 0; a < c.target(); ++a)
    if (c.right(a) == v) e.push_back(a);
  const auto& col = x.colors[j];
  std::stable_sort(e.begin(), e.end(), [&](int a, int b) { return col[a] < col[b]; });
  return e;
}

LabeledChain from_element(const LevelObject& x, const GraphElement& el) {
  LabeledChain lc;
  lc.shape = x;
  int pos = 0;
  for (int j = 0; j <= x.height(); ++j) {
    lc.colors.emplace_back(el.colors.begin() + pos, el.colors.begin() + pos + x.boundary(j));
    pos += x.boundary(j);
  }
  pos = 0;
  for (int j = 1; j <= x.height(); ++j) {
    lc.ops.emplace_back(el.ops.begin() + pos, el.ops.begin() + pos + x.apex(j));
    pos += x.apex(j);
  }
  return lc;
}

struct Piece {
  std::string role;
  LevelObject obj;
  std::vector<int> edge_map;
  std::vector<int> vertex_map;
};

std::vector<Piece> pieces_of(const LevelObject& x) {
  int n = x.height();
  std::vector<int> eoff{0}, voff{0};
  for (int j = 0; j <= n; ++j) eoff.push_back(eoff.back() + x.boundary(j));
  for (int j = 1; j <= n; ++j) voff.push_back(voff.back() + x.apex(j));
  std::vector<Piece> out;
  if (n >= 2)
    for (int j = 1; j <= n; ++j) {
      Piece p{"seg:" + std::to_string(j), Chain(x.boundary(j - 1), {x.steps[j - 1]}), {}, {}};
      for (int i = 0; i < x.boundary(j - 1); ++i) p.edge_map.push_back(eoff[j - 1] + i);
      for (int i = 0; i < x.boundary(j); ++i) p.edge_map.push_back(eoff[j] + i);
      for (int i = 0; i < x.apex(j); ++i) p.vertex_map.push_back(voff[j - 1] + i);
      out.push_back(std::move(p));
    }
  if (n >= 1)
    for (int j = 0; j <= n; ++j) {
      Piece p{"lvl:" + std::to_string(j), Chain(x.boundary(j)), {}, {}};
      for (int i = 0; i < x.boundary(j); ++i) p.edge_map.push_back(eoff[j] + i);
      out.push_back(std::move(p));
    }
  if (n <= 1) {
    ChainComponents cc = chain_components(x);
    if (cc.count > 1) {
      auto comps = decompose_chain(x);
      for (int k = 0; k < cc.count; ++k) {
        Piece p{"comp:" + std::to_string(k), comps[k], {}, {}};
        for (int j = 0; j <= n; ++j)
          for (int e = 0; e < x.boundary(j); ++e)
            if (cc.of_set[2 * j][e] == k) p.edge_map.push_back(eoff[j] + e);
        if (n == 1)
          for (int v = 0; v < x.apex(1); ++v)
            if (cc.of_set[1][v] == k) p.vertex_map.push_back(v);
        out.push_back(std::move(p));
      }
    }
  }
  return out;
}

template <class Obj>
struct NerveSpec {
  int levels = 0;
  std::vector<std::vector<Obj>> base;
  std::function<Obj(int, const Obj&)> face;
  std::function<Obj(int, const Obj&)> degeneracy;
  std::function<std::vector<Obj>(const Obj&)> components;
  std::function<json(const Obj&)> encode;
  std::function<json(const Obj&)> pair;
};

template <class Obj>
SimplicialMonoidData build_nerve(const NerveSpec<Obj>& s) {
  int L = s.levels;
  std::vector<std::vector<Obj>> gens = s.base;
  std::vector<std::map<Obj, int>> index(L + 1);
  auto add = [&](int n, const Obj& o) {
    if (index[n].count(o)) return;
    index[n][o] = static_cast<int>(gens[n].size());
    gens[n].push_back(o);
  };
  for (int n = 0; n <= L; ++n) {
    std::vector<Obj> b = std::move(gens[n]);
    gens[n].clear();
    for (const Obj& o : b) add(n, o);
    if (n > 0)
      for (std::size_t g = 0; g < gens[n - 1].size(); ++g)
        for (int i = 0; i < n; ++i)
          for (const Obj& c : s.components(s.degeneracy(i, gens[n - 1][g]))) add(n, c);
  }
  auto image = [&](int n, const Obj& o) {
    Multiset m = Multiset::zero(static_cast<int>(gens[n].size()));
    for (const Obj& c : s.components(o)) {
      auto it = index[n].find(c);
      if (it == index[n].end()) throw std::logic_error("simplicial operator leaves the generator list");
      m.mult[it->second] += 1;
    }
    return m;
  };
  SimplicialMonoidData d;
  d.levels = L;
  d.generators.resize(L + 1);
  d.faces.resize(L + 1);
  d.degeneracies.resize(L + 1);
  for (int n = 0; n <= L; ++n) {
    for (const Obj& o : gens[n]) d.generators[n].push_back(s.encode(o));
    int src = static_cast<int>(gens[n].size());
    if (n > 0)
      for (int i = 0; i <= n; ++i) {
        std::vector<Multiset> cols;
        for (const Obj& o : gens[n]) cols.push_back(image(n - 1, s.face(i, o)));
        d.faces[n].emplace_back(src, static_cast<int>(gens[n - 1].size()), std::move(cols));
      }
    if (n < L)
      for (int i = 0; i <= n; ++i) {
        std::vector<Multiset> cols;
        for (const Obj& o : gens[n]) cols.push_back(image(n + 1, s.degeneracy(i, o)));
        d.degeneracies[n].emplace_back(src, static_cast<int>(gens[n + 1].size()), std::move(cols));
      }
  }
  if (L >= 2)
    for (int g = 0; g < static_cast<int>(gens[2].size()); ++g)
      d.segal_pairs.push_back({d.faces[2][2].cols[g], d.faces[2][0].cols[g], g, s.pair(gens[2][g])});
  return d;
}

}  // namespace

// ---------------------------------------------------------------- free properad

FreeOp canonical_free_op(const FreeOp& g) {
  int k = static_cast<int>(g.label.size());
  FreeOp best;
  bool have = false;
  for (const auto& p : all_permutations(k)) {
    FreeOp h{g.inputs, g.outputs, std::vector<int>(k), {}};
    for (int v = 0; v < k; ++v) h.label[p[v]] = g.label[v];
    for (auto e : g.edges) {
      if (e[0] >= 0) e[0] = p[e[0]];
      if (e[1] >= 0) e[1] = p[e[1]];
      h.edges.push_back(e);
    }
    std::sort(h.edges.begin(), h.edges.end());
    if (!have || h < best) {
      best = std::move(h);
      have = true;
    }
  }
  return best;
}

FreeProperad::FreeProperad(int colors, std::vector<Generator> gens, int vertex_bound)
    : colors_(colors), gens_(std::move(gens)), bound_(vertex_bound) {
  if (colors < 0 || vertex_bound < 1) throw std::invalid_argument("free properad: bad colour count or bound");
  for (auto& g : gens_) {
    std::sort(g.in.begin(), g.in.end());
    std::sort(g.out.begin(), g.out.end());
    for (int c : g.in)
      if (c < 0 || c >= colors) throw std::invalid_argument("generator colour out of range");
    for (int c : g.out)
      if (c < 0 || c >= colors) throw std::invalid_argument("generator colour out of range");
  }
  for (int c = 0; c < colors; ++c) identities_.push_back(intern(FreeOp{1, 1, {}, {{-1, -1, c}}}));
  std::vector<int> corollas;
  for (int i = 0; i < static_cast<int>(gens_.size()); ++i) {
    const Generator& g = gens_[i];
    FreeOp f{static_cast<int>(g.in.size()), static_cast<int>(g.out.size()), {i}, {}};
    for (int t = 0; t < f.inputs; ++t) f.edges.push_back({-1 - t, 0, g.in[t]});
    for (int t = 0; t < f.outputs; ++t) f.edges.push_back({0, -1 - t, g.out[t]});
    corollas.push_back(intern(canonical_free_op(f)));
  }
  // Every connected DAG with at least two vertices has a vertex that is a
  // source or a sink and whose removal leaves it connected, so gluing single
  // corollas on either side reaches every operation.
  for (std::size_t next = 0; next < ops_.size(); ++next) {
    int x = static_cast<int>(next);
    OpSig sx = sigs_[x];
    for (auto& pin : color_perms(sx.in))
      for (auto& pout : color_perms(sx.out))
        if (!is_identity_perm(pin) || !is_identity_perm(pout)) intern(permute_graph(x, pin, pout));
    int vx = static_cast<int>(ops_[x].label.size());
    if (vx == 0 || vx >= bound_) continue;
    for (int c : corollas) {
      OpSig sc = sigs_[c];
      for (const Matching& m : matchings(sx, sc)) intern(glue_graph(x, c, m));
      for (const Matching& m : matchings(sc, sx)) intern(glue_graph(c, x, m));
    }
  }
}

int FreeProperad::intern(FreeOp g) {
  auto it = index_.find(g);
  if (it != index_.end()) return it->second;
  int id = static_cast<int>(ops_.size());
  OpSig s = free_sig(g);
  index_[g] = id;
  ops_.push_back(std::move(g));
  sigs_.push_back(s);
  by_sig_[s].push_back(id);
  return id;
}

int FreeProperad::lookup(const FreeOp& g) const {
  if (static_cast<int>(g.label.size()) > bound_) throw OutOfRange("free properad: vertex bound exceeded");
  auto it = index_.find(g);
  if (it == index_.end()) throw std::logic_error("free properad: operation missing from closure");
  return it->second;
}

std::vector<int> FreeProperad::operations(const Colors& in, const Colors& out) const {
  auto it = by_sig_.find(OpSig{in, out});
  return it == by_sig_.end() ? std::vector<int>{} : it->second;
}

FreeOp FreeProperad::glue_graph(int o, int p, const Matching& m) const {
  const FreeOp& a = ops_.at(o);
  const FreeOp& b = ops_.at(p);
  GlueLegs gl = glue_legs(sigs_[o], sigs_[p], m);
  int na = static_cast<int>(a.label.size());
  std::map<std::pair<int, int>, int> new_in, new_out;
  for (int k = 0; k < static_cast<int>(gl.in.size()); ++k) new_in[gl.in[k]] = k;
  for (int k = 0; k < static_cast<int>(gl.out.size()); ++k) new_out[gl.out[k]] = k;
  std::map<int, int> out_to_in, in_of;
  for (auto [r, s] : m) out_to_in[r] = s;
  FreeOp g{static_cast<int>(gl.in.size()), static_cast<int>(gl.out.size()), a.label, {}};
  g.label.insert(g.label.end(), b.label.begin(), b.label.end());
  std::map<int, std::array<int, 3>> b_from_leg;
  for (const auto& e : b.edges)
    if (e[0] < 0) b_from_leg[-1 - e[0]] = e;
  auto map_b_tgt = [&](int t) { return t >= 0 ? t + na : -1 - new_out.at({1, -1 - t}); };
  for (const auto& e : a.edges) {
    int src = e[0] >= 0 ? e[0] : -1 - new_in.at({0, -1 - e[0]});
    if (e[1] >= 0) {
      g.edges.push_back({src, e[1], e[2]});
      continue;
    }
    int r = -1 - e[1];
    auto it = out_to_in.find(r);
    if (it == out_to_in.end()) {
      g.edges.push_back({src, -1 - new_out.at({0, r}), e[2]});
    } else {
      const auto& be = b_from_leg.at(it->second);
      g.edges.push_back({src, map_b_tgt(be[1]), e[2]});
    }
  }
  std::set<int> matched_in;
  for (auto [r, s] : m) matched_in.insert(s);
  for (const auto& e : b.edges) {
    if (e[0] < 0 && matched_in.count(-1 - e[0])) continue;
    int src = e[0] >= 0 ? e[0] + na : -1 - new_in.at({1, -1 - e[0]});
    g.edges.push_back({src, map_b_tgt(e[1]), e[2]});
  }
  return canonical_free_op(g);
}

FreeOp FreeProperad::permute_graph(int op, const std::vector<int>& in_perm, const std::vector<int>& out_perm) const {
  FreeOp g = ops_.at(op);
  if (static_cast<int>(in_perm.size()) != g.inputs || static_cast<int>(out_perm.size()) != g.outputs)
    throw std::invalid_argument("permutation has wrong length");
  std::vector<int> inv_in(g.inputs), inv_out(g.outputs);
  for (int k = 0; k < g.inputs; ++k) inv_in[in_perm[k]] = k;
  for (int k = 0; k < g.outputs; ++k) inv_out[out_perm[k]] = k;
  for (auto& e : g.edges) {
    if (e[0] < 0) e[0] = -1 - inv_in[-1 - e[0]];
    if (e[1] < 0) e[1] = -1 - inv_out[-1 - e[1]];
  }
  return canonical_free_op(g);
}

int FreeProperad::glue(int o, int p, const Matching& m) const {
  validate_matching(sigs_.at(o), sigs_.at(p), m);
  return lookup(glue_graph(o, p, m));
}

int FreeProperad::permute(int op, const std::vector<int>& in_perm, const std::vector<int>& out_perm) const {
  if (is_identity_perm(in_perm) && is_identity_perm(out_perm)) return op;
  return lookup(permute_graph(op, in_perm, out_perm));
}

std::string FreeProperad::op_name(int op) const {
  const FreeOp& g = ops_.at(op);
  std::string s = "[";
  for (std::size_t v = 0; v < g.label.size(); ++v) s += (v ? "," : "") + gens_[g.label[v]].name;
  s += "|";
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    const auto& e = g.edges[i];
    s += (i ? " " : "") + std::to_string(e[0]) + ">" + std::to_string(e[1]);
    if (colors_ > 1) s += ":" + std::to_string(e[2]);
  }
  return s + "]";
}

void to_json(json& j, const FreeOp& g) {
  json es = json::array();
  for (const auto& e : g.edges) es.push_back({e[0], e[1], e[2]});
  j = json{{"inputs", g.inputs}, {"outputs", g.outputs}, {"labels", g.label}, {"edges", es}};
}

// ---------------------------------------------------------------- values

namespace {

template <class Fn>
void for_each_element(const Properad& p, const LabeledDAG& g, Fn&& fn) {
  int ne = g.edges();
  bool fixed = !g.edge_color.empty();
  if (fixed && static_cast<int>(g.edge_color.size()) != ne) throw std::invalid_argument("edge colours malformed");
  auto ins = g.in_edges();
  auto outs = g.out_edges();
  std::vector<int> col = fixed ? g.edge_color : std::vector<int>(ne, 0);
  if (!fixed && ne > 0 && p.color_count() == 0) return;
  while (true) {
    std::vector<std::vector<int>> choices;
    bool empty = false;
    for (int v = 0; v < g.vertices && !empty; ++v) {
      Colors ci, co;
      for (int e : ins[v]) ci.push_back(col[e]);
      for (int e : outs[v]) co.push_back(col[e]);
      std::sort(ci.begin(), ci.end());
      std::sort(co.begin(), co.end());
      choices.push_back(p.operations(ci, co));
      empty = choices.back().empty();
    }
    if (!empty) {
      std::vector<int> pick(g.vertices, 0);
      while (true) {
        GraphElement el{col, std::vector<int>(g.vertices)};
        for (int v = 0; v < g.vertices; ++v) el.ops[v] = choices[v][pick[v]];
        fn(el);
        int v = g.vertices - 1;
        while (v >= 0 && ++pick[v] == static_cast<int>(choices[v].size())) pick[v--] = 0;
        if (v < 0) break;
      }
    }
    if (fixed) return;
    int e = ne - 1;
    while (e >= 0 && ++col[e] == p.color_count()) col[e--] = 0;
    if (e < 0) return;
  }
}

}  // namespace

std::vector<GraphElement> value_at_graph(const Properad& p, const LabeledDAG& g) {
  std::vector<GraphElement> out;
  for_each_element(p, g, [&](const GraphElement& e) {
    if (static_cast<std::int64_t>(out.size()) >= kValueBound) throw std::length_error("value_at_graph: bound exceeded");
    out.push_back(e);
  });
  return out;
}

std::int64_t value_count(const Properad& p, const LabeledDAG& g) {
  std::int64_t n = 0;
  for_each_element(p, g, [&](const GraphElement&) { ++n; });
  return n;
}

// ---------------------------------------------------------------- presheaves

int TabulatedPresheaf::find(const LevelObject& x) const {
  for (int i = 0; i < static_cast<int>(entries.size()); ++i)
    if (entries[i].object == x) return i;
  return -1;
}

std::vector<LevelObject> presheaf_objects(int size_bound) {
  std::vector<LevelObject> out;
  std::set<LevelObject> seen;
  std::deque<LevelObject> work;
  auto add = [&](const LevelObject& x) {
    if (seen.insert(x).second) {
      out.push_back(x);
      work.push_back(x);
    }
  };
  std::vector<LevelObject> connected;
  for (int n = 0; n <= 2; ++n)
    for (const Chain& c : enumerate_chains(n, size_bound)) {
      add(c);
      if (n <= 1 && is_connected(c)) connected.push_back(c);
    }
  for (const Chain& c : connected) add(monoidal_sum(c, c));
  while (!work.empty()) {
    LevelObject x = work.front();
    work.pop_front();
    for (const Piece& p : pieces_of(x)) add(p.obj);
  }
  return out;
}

TabulatedPresheaf induced_presheaf(const Properad& p, int size_bound) {
  std::vector<LevelObject> objs = presheaf_objects(size_bound);
  std::map<LevelObject, int> index;
  std::vector<std::map<GraphElement, int>> elements(objs.size());
  std::vector<std::vector<GraphElement>> lists(objs.size());
  for (int i = 0; i < static_cast<int>(objs.size()); ++i) {
    index[objs[i]] = i;
    lists[i] = value_at_graph(p, realize(objs[i]));
    for (int k = 0; k < static_cast<int>(lists[i].size()); ++k) elements[i][lists[i][k]] = k;
  }
  TabulatedPresheaf t;
  for (int i = 0; i < static_cast<int>(objs.size()); ++i) {
    PresheafEntry e{objs[i], static_cast<int>(lists[i].size()), {}};
    for (const Piece& pc : pieces_of(objs[i])) {
      Restriction r{pc.role, index.at(pc.obj), {}};
      for (const GraphElement& x : lists[i]) {
        GraphElement y;
        for (int k : pc.edge_map) y.colors.push_back(x.colors[k]);
        for (int k : pc.vertex_map) y.ops.push_back(x.ops[k]);
        auto it = elements[r.target].find(y);
        if (it == elements[r.target].end()) throw std::logic_error("restriction leaves the value set");
        r.map.push_back(it->second);
      }
      e.restrictions.push_back(std::move(r));
    }
    t.entries.push_back(std::move(e));
  }
  return t;
}

Verdict check_segal(const TabulatedPresheaf& t) {
  std::int64_t checked = 0;
  int ne = static_cast<int>(t.entries.size());
  auto role = [](const PresheafEntry& e, const std::string& r) -> const Restriction* {
    for (const auto& x : e.restrictions)
      if (x.role == r) return &x;
    return nullptr;
  };
  for (int idx = 0; idx < ne; ++idx) {
    const PresheafEntry& e = t.entries[idx];
    auto fail = [&](const std::string& kind, json extra) {
      extra["entry"] = idx;
      extra["object"] = e.object;
      return Verdict::fail(kind, extra, checked);
    };
    for (const auto& r : e.restrictions) {
      if (r.target < 0 || r.target >= ne || static_cast<int>(r.map.size()) != e.size)
        return fail("malformed", {{"role", r.role}});
      for (int y : r.map)
        if (y < 0 || y >= t.entries[r.target].size) return fail("malformed", {{"role", r.role}});
    }
    int n = e.object.height();
    ++checked;
    if (n >= 2) {
      std::vector<const Restriction*> seg(n + 1), lvl(n + 1);
      for (int j = 1; j <= n; ++j) seg[j] = role(e, "seg:" + std::to_string(j));
      for (int j = 0; j <= n; ++j) lvl[j] = role(e, "lvl:" + std::to_string(j));
      std::vector<const Restriction*> top(n + 1), bot(n + 1);
      for (int j = 1; j <= n; ++j) {
        if (!seg[j] || !lvl[j - 1] || !lvl[j]) return fail("missing_restriction", {{"level", j}});
        const PresheafEntry& s = t.entries[seg[j]->target];
        bot[j] = role(s, "lvl:0");
        top[j] = role(s, "lvl:1");
        if (!bot[j] || !top[j] || bot[j]->target != lvl[j - 1]->target || top[j]->target != lvl[j]->target)
          return fail("missing_restriction", {{"level", j}});
      }
      for (int x = 0; x < e.size; ++x)
        for (int j = 1; j <= n; ++j) {
          int y = seg[j]->map[x];
          if (bot[j]->map[y] != lvl[j - 1]->map[x] || top[j]->map[y] != lvl[j]->map[x])
            return fail("functoriality", {{"element", x}, {"level", j}});
        }
      std::vector<std::int64_t> ways(t.entries[seg[1]->target].size, 1);
      for (int j = 2; j <= n; ++j) {
        std::vector<std::int64_t> next(t.entries[seg[j]->target].size, 0);
        for (int y2 = 0; y2 < static_cast<int>(next.size()); ++y2)
          for (int y1 = 0; y1 < static_cast<int>(ways.size()); ++y1)
            if (top[j - 1]->map[y1] == bot[j]->map[y2]) next[y2] += ways[y1];
        ways = std::move(next);
      }
      std::int64_t total = std::accumulate(ways.begin(), ways.end(), std::int64_t{0});
      std::set<std::vector<int>> seen;
      for (int x = 0; x < e.size; ++x) {
        std::vector<int> tup;
        for (int j = 1; j <= n; ++j) tup.push_back(seg[j]->map[x]);
        seen.insert(tup);
      }
      if (static_cast<std::int64_t>(seen.size()) != e.size || total != e.size)
        return fail("segmentation", {{"size", e.size}, {"fiber_product", total}});
      continue;
    }
    ChainComponents cc = chain_components(e.object);
    if (cc.count == 0) {
      if (e.size != 1) return fail("decomposition", {{"size", e.size}, {"product", 1}});
      continue;
    }
    if (cc.count == 1) continue;
    std::int64_t prod = 1;
    std::vector<const Restriction*> comp;
    for (int a = 0; a < cc.count; ++a) {
      const Restriction* r = role(e, "comp:" + std::to_string(a));
      if (!r) return fail("missing_restriction", {{"component", a}});
      comp.push_back(r);
      prod *= t.entries[r->target].size;
    }
    std::set<std::vector<int>> seen;
    for (int x = 0; x < e.size; ++x) {
      std::vector<int> tup;
      for (const Restriction* r : comp) tup.push_back(r->map[x]);
      seen.insert(tup);
    }
    if (static_cast<std::int64_t>(seen.size()) != e.size || prod != e.size)
      return fail("decomposition", {{"size", e.size}, {"product", prod}});
  }
  return Verdict::pass(checked);
}

// ---------------------------------------------------------------- labelled chains

namespace {

LabeledChain relabel(const Properad& p, const LabeledChain& x, const std::vector<std::vector<int>>& perm) {
  // perm[s][old] = new, sets ordered A_0, M_1, A_1, ...
  int n = x.shape.height();
  LabeledChain y;
  std::vector<Cospan> steps;
  for (int j = 1; j <= n; ++j) {
    const Cospan& c = x.shape.steps[j - 1];
    const auto& pa = perm[2 * j - 2];
    const auto& pm = perm[2 * j - 1];
    const auto& pb = perm[2 * j];
    std::vector<int> l(c.source()), r(c.target());
    for (int a = 0; a < c.source(); ++a) l[pa[a]] = pm[c.left(a)];
    for (int b = 0; b < c.target(); ++b) r[pb[b]] = pm[c.right(b)];
    steps.emplace_back(FinMap(c.source(), c.apex(), l), FinMap(c.target(), c.apex(), r));
  }
  y.shape = Chain(x.shape.base, std::move(steps));
  for (int j = 0; j <= n; ++j) {
    std::vector<int> c(x.colors[j].size());
    for (std::size_t a = 0; a < c.size(); ++a) c[perm[2 * j][a]] = x.colors[j][a];
    y.colors.push_back(std::move(c));
  }
  y.ops.resize(n);
  for (int j = 1; j <= n; ++j) {
    int m = x.shape.apex(j);
    y.ops[j - 1].assign(m, -1);
    for (int v = 0; v < m; ++v) {
      int w = perm[2 * j - 1][v];
      auto oi = in_legs(x, j, v), oo = out_legs(x, j, v);
      auto ni = in_legs(y, j, w), no = out_legs(y, j, w);
      std::vector<int> pin, pout;
      for (int e : ni) {
        int old = static_cast<int>(std::find(perm[2 * j - 2].begin(), perm[2 * j - 2].end(), e) -
                                   perm[2 * j - 2].begin());
        pin.push_back(static_cast<int>(std::find(oi.begin(), oi.end(), old) - oi.begin()));
      }
      for (int e : no) {
        int old = static_cast<int>(std::find(perm[2 * j].begin(), perm[2 * j].end(), e) - perm[2 * j].begin());
        pout.push_back(static_cast<int>(std::find(oo.begin(), oo.end(), old) - oo.begin()));
      }
      y.ops[j - 1][w] = p.permute(x.ops[j - 1][v], pin, pout);
    }
  }
  return y;
}

std::vector<int> set_sizes(const Chain& c) {
  std::vector<int> s{c.base};
  for (const auto& st : c.steps) {
    s.push_back(st.apex());
    s.push_back(st.target());
  }
  return s;
}

}  // namespace

LabeledChain canonical_labeled(const Properad& p, const LabeledChain& x) {
  std::vector<int> sizes = set_sizes(x.shape);
  std::uint64_t combos = 1;
  for (int s : sizes) {
    combos *= factorial(s);
    if (combos > 2000000) throw std::length_error("canonical_labeled: bound exceeded");
  }
  std::vector<std::vector<std::vector<int>>> perms;
  for (int s : sizes) perms.push_back(all_permutations(s));
  std::vector<std::size_t> pick(sizes.size(), 0);
  LabeledChain best;
  bool have = false;
  while (true) {
    std::vector<std::vector<int>> perm;
    for (std::size_t s = 0; s < sizes.size(); ++s) perm.push_back(perms[s][pick[s]]);
    LabeledChain y = relabel(p, x, perm);
    if (!have || y < best) {
      best = std::move(y);
      have = true;
    }
    std::size_t s = 0;
    while (s < sizes.size() && ++pick[s] == perms[s].size()) pick[s++] = 0;
    if (s == sizes.size()) break;
  }
  return best;
}

std::vector<LabeledChain> labeled_components(const LabeledChain& x) {
  ChainComponents cc = chain_components(x.shape);
  auto shapes = decompose_chain(x.shape);
  int n = x.shape.height();
  std::vector<LabeledChain> out;
  for (int k = 0; k < cc.count; ++k) {
    LabeledChain y;
    y.shape = shapes[k];
    for (int j = 0; j <= n; ++j) {
      std::vector<int> c;
      for (int a = 0; a < x.shape.boundary(j); ++a)
        if (cc.of_set[2 * j][a] == k) c.push_back(x.colors[j][a]);
      y.colors.push_back(std::move(c));
    }
    for (int j = 1; j <= n; ++j) {
      std::vector<int> o;
      for (int v = 0; v < x.shape.apex(j); ++v)
        if (cc.of_set[2 * j - 1][v] == k) o.push_back(x.ops[j - 1][v]);
      y.ops.push_back(std::move(o));
    }
    out.push_back(std::move(y));
  }
  return out;
}

LabeledChain labeled_face(const Properad& p, int i, const LabeledChain& x) {
  int n = x.shape.height();
  if (n == 0 || i < 0 || i > n) throw std::invalid_argument("face: index out of range");
  LabeledChain y;
  if (i == 0 || i == n) {
    std::vector<Cospan> steps = x.shape.steps;
    y.colors = x.colors;
    y.ops = x.ops;
    if (i == 0) {
      steps.erase(steps.begin());
      y.colors.erase(y.colors.begin());
      y.ops.erase(y.ops.begin());
      y.shape = Chain(x.shape.boundary(1), std::move(steps));
    } else {
      steps.pop_back();
      y.colors.pop_back();
      y.ops.pop_back();
      y.shape = Chain(x.shape.base, std::move(steps));
    }
    return y;
  }
  const Cospan& c1 = x.shape.steps[i - 1];
  const Cospan& c2 = x.shape.steps[i];
  Pushout q = pushout(c1.right, c2.left);
  Cospan merged(compose(c1.left, q.inl), compose(c2.right, q.inr));
  std::vector<Cospan> steps;
  for (int j = 0; j < n; ++j) {
    if (j == i - 1) steps.push_back(merged);
    else if (j != i) steps.push_back(x.shape.steps[j]);
  }
  y.shape = Chain(x.shape.base, std::move(steps));
  for (int j = 0; j <= n; ++j)
    if (j != i) y.colors.push_back(x.colors[j]);
  std::vector<int> merged_ops(q.size, -1);
  for (int cls = 0; cls < q.size; ++cls) {
    // plan vertices: points of M_i then M_{i+1} in this class
    std::vector<std::pair<int, int>> verts;
    std::map<std::pair<int, int>, int> local;
    for (int v = 0; v < c1.apex(); ++v)
      if (q.inl(v) == cls) {
        local[{0, v}] = static_cast<int>(verts.size());
        verts.push_back({0, v});
      }
    for (int v = 0; v < c2.apex(); ++v)
      if (q.inr(v) == cls) {
        local[{1, v}] = static_cast<int>(verts.size());
        verts.push_back({1, v});
      }
    std::vector<int> ops;
    for (auto [side, v] : verts) ops.push_back(x.ops[i - 1 + side][v]);
    std::vector<std::array<int, 4>> edges;
    for (int e = 0; e < c1.target(); ++e) {
      int a = c1.right(e), b = c2.left(e);
      if (q.inl(a) != cls) continue;
      auto lo = out_legs(x, i, a), li = in_legs(x, i + 1, b);
      int r = static_cast<int>(std::find(lo.begin(), lo.end(), e) - lo.begin());
      int s = static_cast<int>(std::find(li.begin(), li.end(), e) - li.begin());
      edges.push_back({local.at({0, a}), r, local.at({1, b}), s});
    }
    PlanValue pv = evaluate_plan(p, ops, edges);
    // legs of the new vertex, traced back to edges of A_{i-1} and A_{i+1}
    auto ni = in_legs(y, i, cls), no = out_legs(y, i, cls);
    auto edge_of = [&](std::pair<int, int> leg, bool in) {
      auto [side, v] = verts[leg.first];
      if (in) {
        if (side != 0) throw std::logic_error("face: dangling inner input");
        return in_legs(x, i, v)[leg.second];
      }
      if (side != 1) throw std::logic_error("face: dangling inner output");
      return out_legs(x, i + 1, v)[leg.second];
    };
    std::vector<int> pin, pout;
    for (int e : ni) {
      int k = 0;
      while (edge_of(pv.in[k], true) != e) ++k;
      pin.push_back(k);
    }
    for (int e : no) {
      int k = 0;
      while (edge_of(pv.out[k], false) != e) ++k;
      pout.push_back(k);
    }
    merged_ops[cls] = p.permute(pv.op, pin, pout);
  }
  for (int j = 1; j <= n; ++j) {
    if (j == i) y.ops.push_back(merged_ops);
    else if (j != i + 1) y.ops.push_back(x.ops[j - 1]);
  }
  return y;
}

LabeledChain labeled_degeneracy(const Properad& p, int i, const LabeledChain& x) {
  int n = x.shape.height();
  if (i < 0 || i > n) throw std::invalid_argument("degeneracy: index out of range");
  LabeledChain y;
  std::vector<Cospan> steps = x.shape.steps;
  steps.insert(steps.begin() + i, identity_cospan(x.shape.boundary(i)));
  y.shape = Chain(x.shape.base, std::move(steps));
  y.colors = x.colors;
  y.colors.insert(y.colors.begin() + i + 1, x.colors[i]);
  y.ops = x.ops;
  std::vector<int> ids;
  for (int c : x.colors[i]) ids.push_back(p.identity(c));
  y.ops.insert(y.ops.begin() + i, ids);
  return y;
}

void to_json(json& j, const LabeledChain& x) { j = json{{"shape", x.shape}, {"colors", x.colors}, {"ops", x.ops}}; }

SimplicialMonoidData envelope_nerve(const Properad& p, int max_level, int size_bound) {
  if (max_level < 0 || max_level > 2) throw std::invalid_argument("envelope: levels must lie in 0..2");
  NerveSpec<LabeledChain> s;
  s.levels = max_level;
  s.base.resize(max_level + 1);
  for (int n = 0; n <= max_level; ++n) {
    std::set<LabeledChain> found;
    for (const Chain& c : enumerate_chains(n, size_bound)) {
      if (!is_connected(c)) continue;
      for (const GraphElement& el : value_at_graph(p, realize(c))) found.insert(canonical_labeled(p, from_element(c, el)));
    }
    s.base[n].assign(found.begin(), found.end());
  }
  s.face = [&p](int i, const LabeledChain& x) { return labeled_face(p, i, x); };
  s.degeneracy = [&p](int i, const LabeledChain& x) { return labeled_degeneracy(p, i, x); };
  s.components = [&p](const LabeledChain& x) {
    std::vector<LabeledChain> out;
    for (const auto& c : labeled_components(x)) out.push_back(canonical_labeled(p, c));
    return out;
  };
  s.encode = [&p](const LabeledChain& x) {
    json j = x;
    json names = json::array();
    for (const auto& lvl : x.ops) {
      json row = json::array();
      for (int o : lvl) row.push_back(p.op_name(o));
      names.push_back(row);
    }
    j["names"] = names;
    return j;
  };
  s.pair = [](const LabeledChain& x) {
    LabeledChain a, b;
    a.shape = Chain(x.shape.base, {x.shape.steps[0]});
    a.colors = {x.colors[0], x.colors[1]};
    a.ops = {x.ops[0]};
    b.shape = Chain(x.shape.boundary(1), {x.shape.steps[1]});
    b.colors = {x.colors[1], x.colors[2]};
    b.ops = {x.ops[1]};
    return json{{"first", a}, {"second", b}};
  };
  return build_nerve(s);
}

// ---------------------------------------------------------------- spans

namespace {

int span_total(const SpanChain& s) {
  int t = s.base;
  for (const auto& sp : s.steps) t += sp.apex() + sp.target();
  return t;
}

SpanChain canonical_span_chain(const SpanChain& s) {
  detail::Diagram d;
  d.sizes.push_back(s.base);
  for (int j = 1; j <= s.height(); ++j) {
    const Span& sp = s.steps[j - 1];
    d.sizes.push_back(sp.apex());
    d.sizes.push_back(sp.target());
    d.arrows.push_back({2 * j - 1, 2 * j - 2, sp.left.table});
    d.arrows.push_back({2 * j - 1, 2 * j, sp.right.table});
  }
  int bound = 0;
  for (int x : d.sizes) bound = std::max(bound, x);
  detail::Labelling l = detail::canonical_labelling(d, bound);
  SpanChain out{s.base, {}};
  for (int j = 1; j <= s.height(); ++j) {
    const Span& sp = s.steps[j - 1];
    out.steps.emplace_back(FinMap(sp.apex(), sp.source(), detail::relabel_table(l, d.arrows[2 * j - 2])),
                           FinMap(sp.apex(), sp.target(), detail::relabel_table(l, d.arrows[2 * j - 1])));
  }
  return out;
}

std::vector<SpanChain> span_components(const SpanChain& s) {
  std::vector<int> sizes{s.base}, off{0};
  for (const auto& sp : s.steps) {
    sizes.push_back(sp.apex());
    sizes.push_back(sp.target());
  }
  for (int x : sizes) off.push_back(off.back() + x);
  UnionFind uf(off.back());
  for (int j = 1; j <= s.height(); ++j) {
    const Span& sp = s.steps[j - 1];
    for (int x = 0; x < sp.apex(); ++x) {
      uf.unite(off[2 * j - 1] + x, off[2 * j - 2] + sp.left(x));
      uf.unite(off[2 * j - 1] + x, off[2 * j] + sp.right(x));
    }
  }
  int count = 0;
  auto cls = uf.classes(&count);
  std::vector<SpanChain> out;
  for (int k = 0; k < count; ++k) {
    std::vector<std::vector<int>> pos(sizes.size());
    std::vector<int> sz(sizes.size(), 0);
    for (std::size_t t = 0; t < sizes.size(); ++t) {
      pos[t].assign(sizes[t], -1);
      for (int x = 0; x < sizes[t]; ++x)
        if (cls[off[t] + x] == k) pos[t][x] = sz[t]++;
    }
    SpanChain c{sz[0], {}};
    for (int j = 1; j <= s.height(); ++j) {
      const Span& sp = s.steps[j - 1];
      std::vector<int> l, r;
      for (int x = 0; x < sp.apex(); ++x)
        if (pos[2 * j - 1][x] >= 0) {
          l.push_back(pos[2 * j - 2][sp.left(x)]);
          r.push_back(pos[2 * j][sp.right(x)]);
        }
      c.steps.emplace_back(FinMap(sz[2 * j - 1], sz[2 * j - 2], l), FinMap(sz[2 * j - 1], sz[2 * j], r));
    }
    out.push_back(canonical_span_chain(c));
  }
  return out;
}

bool span_allowed(const Span& s, SpanFilter f) {
  switch (f) {
    case SpanFilter::All:
      return true;
    case SpanFilter::RightSurjective:
      return is_surjective(s.right);
    case SpanFilter::BothSurjective:
      return is_surjective(s.right) && is_surjective(s.left);
  }
  return false;
}

}  // namespace

void to_json(json& j, const SpanChain& s) { j = json{{"base", s.base}, {"spans", s.steps}}; }

SimplicialMonoidData span_nerve_data(int max_level, int size_bound, SpanFilter f) {
  if (max_level < 0 || max_level > 2) throw std::invalid_argument("span nerve: levels must lie in 0..2");
  NerveSpec<SpanChain> s;
  s.levels = max_level;
  s.base.resize(max_level + 1);
  for (int n = 0; n <= max_level; ++n) {
    std::set<SpanChain> found;
    int nsets = 2 * n + 1;
    std::vector<int> sizes(nsets, 0);
    std::function<void(int, int)> pick = [&](int t, int left) {
      if (t == nsets) {
        std::function<void(int, SpanChain&)> build = [&](int j, SpanChain& acc) {
          if (j == n) {
            auto comps = span_components(acc);
            if (comps.size() == 1) found.insert(comps[0]);
            return;
          }
          int a = sizes[2 * j], x = sizes[2 * j + 1], b = sizes[2 * j + 2];
          for_each_map(x, a, [&](const FinMap& l) {
            for_each_map(x, b, [&](const FinMap& r) {
              Span sp(l, r);
              if (!span_allowed(sp, f)) return;
              acc.steps.push_back(sp);
              build(j + 1, acc);
              acc.steps.pop_back();
            });
          });
        };
        SpanChain acc{sizes[0], {}};
        build(0, acc);
        return;
      }
      for (int k = 0; k <= left; ++k) {
        sizes[t] = k;
        pick(t + 1, left - k);
      }
    };
    pick(0, size_bound);
    std::vector<SpanChain> v(found.begin(), found.end());
    std::stable_sort(v.begin(), v.end(),
                     [](const SpanChain& a, const SpanChain& b) { return span_total(a) < span_total(b); });
    s.base[n] = std::move(v);
  }
  s.face = [](int i, const SpanChain& x) {
    int n = x.height();
    SpanChain y{x.base, {}};
    if (i == 0) {
      y.base = x.boundary(1);
      y.steps.assign(x.steps.begin() + 1, x.steps.end());
    } else if (i == n) {
      y.steps.assign(x.steps.begin(), x.steps.end() - 1);
    } else {
      for (int j = 0; j < n; ++j) {
        if (j == i - 1) y.steps.push_back(compose_spans(x.steps[j], x.steps[j + 1]));
        else if (j != i) y.steps.push_back(x.steps[j]);
      }
    }
    return y;
  };
  s.degeneracy = [](int i, const SpanChain& x) {
    SpanChain y = x;
    y.steps.insert(y.steps.begin() + i, identity_span(x.boundary(i)));
    return y;
  };
  s.components = [](const SpanChain& x) { return span_components(x); };
  s.encode = [](const SpanChain& x) { return json(x); };
  s.pair = [](const SpanChain& x) { return json{{"first", x.steps[0]}, {"second", x.steps[1]}}; };
  return build_nerve(s);
}

// ---------------------------------------------------------------- pre-properads

Verdict check_pre_properad(const SimplicialMonoidData& d) {
  std::int64_t checked = 0;
  int L = d.levels;
  if (static_cast<int>(d.generators.size()) != L + 1 || static_cast<int>(d.faces.size()) != L + 1 ||
      static_cast<int>(d.degeneracies.size()) != L + 1)
    return Verdict::fail("malformed", {{"reason", "level count"}});
  auto gens = [&](int n) { return static_cast<int>(d.generators[n].size()); };
  for (int n = 0; n <= L; ++n) {
    int nf = n > 0 ? n + 1 : 0, nd = n < L ? n + 1 : 0;
    if (static_cast<int>(d.faces[n].size()) != nf || static_cast<int>(d.degeneracies[n].size()) != nd)
      return Verdict::fail("malformed", {{"reason", "operator count"}, {"level", n}});
    for (const auto& f : d.faces[n])
      if (f.src != gens(n) || f.dst != gens(n - 1))
        return Verdict::fail("malformed", {{"reason", "face dimensions"}, {"level", n}});
    for (const auto& s : d.degeneracies[n])
      if (s.src != gens(n) || s.dst != gens(n + 1))
        return Verdict::fail("malformed", {{"reason", "degeneracy dimensions"}, {"level", n}});
  }
  for (int n = 0; n <= L; ++n) {
    std::set<std::string> seen;
    for (int g = 0; g < gens(n); ++g) {
      ++checked;
      if (!seen.insert(d.generators[n][g].dump()).second)
        return Verdict::fail("basis", {{"level", n}, {"generator", g}}, checked);
    }
  }
  auto ident = [&](const std::string& rel, int n, const MonHom& a, const MonHom& b) -> std::optional<Verdict> {
    ++checked;
    if (a == b) return std::nullopt;
    return Verdict::fail("simplicial_identity", {{"relation", rel}, {"level", n}}, checked);
  };
  for (int n = 2; n <= L; ++n)
    for (int i = 0; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        if (auto v = ident("d" + std::to_string(i) + "d" + std::to_string(j), n,
                           compose(d.faces[n][j], d.faces[n - 1][i]), compose(d.faces[n][i], d.faces[n - 1][j - 1])))
          return *v;
  for (int n = 0; n + 2 <= L; ++n)
    for (int i = 0; i <= n; ++i)
      for (int j = i; j <= n; ++j)
        if (auto v = ident("s" + std::to_string(i) + "s" + std::to_string(j), n,
                           compose(d.degeneracies[n][j], d.degeneracies[n + 1][i]),
                           compose(d.degeneracies[n][i], d.degeneracies[n + 1][j + 1])))
          return *v;
  for (int n = 0; n + 1 <= L; ++n)
    for (int j = 0; j <= n; ++j)
      for (int i = 0; i <= n + 1; ++i) {
        MonHom lhs = compose(d.degeneracies[n][j], d.faces[n + 1][i]);
        MonHom rhs;
        if (i == j || i == j + 1) {
          rhs = MonHom::identity(gens(n));
        } else if (i < j) {
          rhs = compose(d.faces[n][i], d.degeneracies[n - 1][j - 1]);
        } else {
          rhs = compose(d.faces[n][i - 1], d.degeneracies[n - 1][j]);
        }
        if (auto v = ident("d" + std::to_string(i) + "s" + std::to_string(j), n, lhs, rhs)) return *v;
      }
  if (L < 2) return Verdict::pass(checked);
  std::vector<int> hit(gens(2), 0);
  std::set<std::string> pairs;
  for (const SegalPair& sp : d.segal_pairs) {
    ++checked;
    if (sp.generator < 0 || sp.generator >= gens(2) || hit[sp.generator]++)
      return Verdict::fail("segal", {{"reason", "pair does not name a unique generator"}, {"pair", sp.pair}},
                           checked);
    if (!pairs.insert(sp.pair.dump()).second)
      return Verdict::fail("segal", {{"reason", "repeated pair"}, {"pair", sp.pair}}, checked);
    if (d.faces[2][2].cols[sp.generator] != sp.first || d.faces[2][0].cols[sp.generator] != sp.second)
      return Verdict::fail("segal", {{"reason", "pair disagrees with the outer faces"}, {"pair", sp.pair}},
                           checked);
  }
  for (int g = 0; g < gens(2); ++g)
    if (!hit[g]) return Verdict::fail("segal", {{"reason", "generator without a pair"}, {"generator", g}}, checked);
  const MonHom& d1 = d.faces[2][1];
  ++checked;
  if (classify_hom(d1).tag != HomTag::Free) {
    for (int g = 0; g < gens(2); ++g)
      if (d1.cols[g].degree() != 1) {
        json w{{"generator", d.generators[2][g]}, {"image", d1.cols[g]}};
        for (const SegalPair& sp : d.segal_pairs)
          if (sp.generator == g) w["pair"] = sp.pair;
        return Verdict::fail("d1_not_free", w, checked);
      }
  }
  return Verdict::pass(checked);
}

Verdict check_complete(const Properad& p) {
  std::int64_t checked = 0;
  for (int c = 0; c < p.color_count(); ++c)
    for (int c2 = 0; c2 < p.color_count(); ++c2)
      for (int u : p.operations({c}, {c2})) {
        if (c == c2 && u == p.identity(c)) continue;
        for (int v : p.operations({c2}, {c})) {
          ++checked;
          try {
            if (p.glue(u, v, {{0, 0}}) == p.identity(c) && p.glue(v, u, {{0, 0}}) == p.identity(c2))
              return Verdict::fail("invertible", {{"op", p.op_name(u)}, {"inverse", p.op_name(v)}}, checked);
          } catch (const OutOfRange&) {
          }
        }
      }
  return Verdict::pass(checked);
}

bool is_complete(const Properad& p) { return check_complete(p).ok; }

// ---------------------------------------------------------------- json

void to_json(json& j, const GraphElement& e) { j = json{{"colors", e.colors}, {"ops", e.ops}}; }

void to_json(json& j, const TabulatedPresheaf& t) {
  json es = json::array();
  for (const auto& e : t.entries) {
    json rs = json::array();
    for (const auto& r : e.restrictions) rs.push_back({{"role", r.role}, {"target", r.target}, {"map", r.map}});
    es.push_back({{"object", e.object}, {"size", e.size}, {"restrictions", rs}});
  }
  j = json{{"entries", es}};
}

void from_json(const json& j, TabulatedPresheaf& t) {
  TabulatedPresheaf out;
  for (const json& e : j.at("entries")) {
    PresheafEntry pe{e.at("object").get<Chain>(), e.at("size").get<int>(), {}};
    if (pe.size < 0) throw std::invalid_argument("negative value size");
    if (e.contains("restrictions"))
      for (const json& r : e["restrictions"])
        pe.restrictions.push_back({r.at("role").get<std::string>(), r.at("target").get<int>(),
                                   r.at("map").get<std::vector<int>>()});
    out.entries.push_back(std::move(pe));
  }
  t = std::move(out);
}

void to_json(json& j, const SimplicialMonoidData& d) {
  json pairs = json::array();
  for (const auto& sp : d.segal_pairs)
    pairs.push_back({{"first", sp.first}, {"second", sp.second}, {"generator", sp.generator}, {"pair", sp.pair}});
  j = json{{"levels", d.levels},     {"generators", d.generators}, {"faces", d.faces},
           {"degeneracies", d.degeneracies}, {"segal_pairs", pairs}};
}

void from_json(const json& j, SimplicialMonoidData& d) {
  SimplicialMonoidData out;
  out.levels = j.at("levels").get<int>();
  out.generators = j.at("generators").get<std::vector<std::vector<json>>>();
  for (const json& lvl : j.at("faces")) {
    std::vector<MonHom> v;
    for (const json& h : lvl) v.push_back(h.get<MonHom>());
    out.faces.push_back(std::move(v));
  }
  for (const json& lvl : j.at("degeneracies")) {
    std::vector<MonHom> v;
    for (const json& h : lvl) v.push_back(h.get<MonHom>());
    out.degeneracies.push_back(std::move(v));
  }
  if (j.contains("segal_pairs"))
    for (const json& sp : j["segal_pairs"])
      out.segal_pairs.push_back({sp.at("first").get<Multiset>(), sp.at("second").get<Multiset>(),
                                 sp.at("generator").get<int>(), sp.value("pair", json())});
  d = std::move(out);
}

void from_json(const json& j, Generator& g) {
  g.name = j.value("name", std::string("g"));
  g.in = j.at("in").get<Colors>();
  g.out = j.at("out").get<Colors>();
}

void to_json(json& j, const Generator& g) { j = json{{"name", g.name}, {"in", g.in}, {"out", g.out}}; }

}  // namespace prpd
