#include "prpd/properad.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace prpd {

namespace {

std::vector<std::pair<int, int>> sort_by_color(std::vector<std::pair<int, int>> legs,
                                               const std::vector<int>& colors) {
  std::vector<int> idx(legs.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) { return colors[a] < colors[b]; });
  std::vector<std::pair<int, int>> out;
  for (int i : idx) out.push_back(legs[i]);
  return out;
}

bool is_identity_perm(const std::vector<int>& p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] != static_cast<int>(i)) return false;
  return true;
}

// Permutations of 0..n-1 that keep every position inside its colour block.
std::vector<std::vector<int>> color_perms(const Colors& c) {
  std::vector<std::vector<int>> out;
  for (auto& p : all_permutations(static_cast<int>(c.size()))) {
    bool ok = true;
    for (std::size_t i = 0; i < p.size() && ok; ++i) ok = c[p[i]] == c[i];
    if (ok) out.push_back(p);
  }
  return out;
}

std::vector<Matching> all_matchings(const OpSig& o, const OpSig& p) {
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

int index_of(const std::vector<std::pair<int, int>>& v, std::pair<int, int> x) {
  auto it = std::find(v.begin(), v.end(), x);
  if (it == v.end()) throw std::logic_error("leg not found");
  return static_cast<int>(it - v.begin());
}

// Connected plan: vertex ops and edges (v, output leg) -> (w, input leg).
struct PlanEdge {
  int v, r, w, s;
};

struct Blob {
  int op;
  unsigned mask;
  std::vector<std::pair<int, int>> in, out;
};

class PlanEvaluator {
 public:
  PlanEvaluator(const Properad& p, const std::vector<int>& ops, const std::vector<PlanEdge>& edges)
      : p_(p), ops_(ops), edges_(edges) {
    for (const PlanEdge& e : edges) target_[{e.v, e.r}] = {e.w, e.s};
  }

  // Returns false on the first disagreement, leaving both orders in `conflict`.
  bool run() {
    std::vector<Blob> blobs;
    for (int v = 0; v < static_cast<int>(ops_.size()); ++v) {
      OpSig s = p_.signature(ops_[v]);
      Blob b{ops_[v], 1u << v, {}, {}};
      for (int i = 0; i < static_cast<int>(s.in.size()); ++i) b.in.push_back({v, i});
      for (int i = 0; i < static_cast<int>(s.out.size()); ++i) b.out.push_back({v, i});
      blobs.push_back(std::move(b));
    }
    return rec(blobs);
  }

  json conflict;
  std::string failure = "order_independence";
  int orders = 0;
  bool first_only = false;
  Blob result;

 private:
  Colors leg_colors(const std::vector<std::pair<int, int>>& legs, bool in) const {
    Colors c;
    for (auto [v, i] : legs) {
      OpSig s = p_.signature(ops_[v]);
      c.push_back(in ? s.in[i] : s.out[i]);
    }
    return c;
  }

  bool edges_between(const Blob& a, const Blob& b) const {
    for (const PlanEdge& e : edges_)
      if ((a.mask >> e.v & 1) && (b.mask >> e.w & 1)) return true;
    return false;
  }

  bool blobs_acyclic(const std::vector<Blob>& bs) const {
    int n = static_cast<int>(bs.size());
    std::vector<int> indeg(n, 0);
    std::vector<std::vector<int>> adj(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j && edges_between(bs[i], bs[j])) {
          adj[i].push_back(j);
          ++indeg[j];
        }
    std::vector<int> st;
    for (int i = 0; i < n; ++i)
      if (!indeg[i]) st.push_back(i);
    int seen = 0;
    while (!st.empty()) {
      int i = st.back();
      st.pop_back();
      ++seen;
      for (int j : adj[i])
        if (--indeg[j] == 0) st.push_back(j);
    }
    return seen == n;
  }

  bool rec(const std::vector<Blob>& bs) {
    if (bs.size() == 1) return finish(bs[0]);
    for (std::size_t i = 0; i < bs.size(); ++i)
      for (std::size_t j = 0; j < bs.size(); ++j) {
        if (i == j || !edges_between(bs[i], bs[j]) || edges_between(bs[j], bs[i])) continue;
        Blob m = merge(bs[i], bs[j]);
        std::vector<Blob> next;
        for (std::size_t k = 0; k < bs.size(); ++k)
          if (k != i && k != j) next.push_back(bs[k]);
        next.push_back(std::move(m));
        if (!blobs_acyclic(next)) continue;
        path_.push_back({bs[i].mask, bs[j].mask});
        bool ok = failure_pending_ ? false : rec(next);
        path_.pop_back();
        if (!ok || (first_only && orders)) return ok;
      }
    if (first_only && !orders) throw std::invalid_argument("plan is not connected");
    return true;
  }

  Blob merge(const Blob& a, const Blob& b) {
    Matching m;
    for (int x = 0; x < static_cast<int>(a.out.size()); ++x) {
      auto it = target_.find(a.out[x]);
      if (it == target_.end() || !(b.mask >> it->second.first & 1)) continue;
      m.push_back({x, index_of(b.in, it->second)});
    }
    OpSig sa = p_.signature(a.op), sb = p_.signature(b.op);
    int r = p_.glue(a.op, b.op, m);
    GlueLegs gl = glue_legs(sa, sb, m);
    Blob out{r, a.mask | b.mask, {}, {}};
    for (auto [w, i] : gl.in) out.in.push_back(w == 0 ? a.in[i] : b.in[i]);
    for (auto [w, i] : gl.out) out.out.push_back(w == 0 ? a.out[i] : b.out[i]);
    if (p_.signature(r) != gl.sig) {
      failure = "signature";
      failure_pending_ = true;
      conflict = json{{"o", a.op}, {"p", b.op}, {"matching", m}, {"result", r}};
    }
    return out;
  }

  bool finish(const Blob& b) {
    if (failure_pending_) return false;
    ++orders;
    if (first_only) {
      result = b;
      return true;
    }
    auto norm = [&](const std::vector<std::pair<int, int>>& legs, bool in) {
      Colors c = leg_colors(legs, in);
      std::vector<int> idx(legs.size());
      std::iota(idx.begin(), idx.end(), 0);
      std::sort(idx.begin(), idx.end(), [&](int x, int y) {
        return std::tie(c[x], legs[x]) < std::tie(c[y], legs[y]);
      });
      return idx;
    };
    int r = p_.permute(b.op, norm(b.in, true), norm(b.out, false));
    json order = path_;
    if (first_ < 0) {
      first_ = r;
      first_order_ = order;
      return true;
    }
    if (r == first_) return true;
    conflict = json{{"orders", json::array({first_order_, order})}, {"results", {first_, r}}};
    return false;
  }

  const Properad& p_;
  const std::vector<int>& ops_;
  const std::vector<PlanEdge>& edges_;
  std::map<std::pair<int, int>, std::pair<int, int>> target_;
  std::vector<std::pair<unsigned, unsigned>> path_;
  bool failure_pending_ = false;
  int first_ = -1;
  json first_order_;
};

bool plan_ok_shape(int k, const std::vector<PlanEdge>& edges) {
  std::vector<std::vector<int>> adj(k);
  UnionFind uf(k);
  std::vector<int> indeg(k, 0);
  std::set<std::pair<int, int>> arcs;
  for (const PlanEdge& e : edges) {
    uf.unite(e.v, e.w);
    if (arcs.insert({e.v, e.w}).second) {
      adj[e.v].push_back(e.w);
      ++indeg[e.w];
    }
  }
  int c = 0;
  uf.classes(&c);
  if (c != 1) return false;
  std::vector<int> st;
  for (int i = 0; i < k; ++i)
    if (!indeg[i]) st.push_back(i);
  int seen = 0;
  while (!st.empty()) {
    int i = st.back();
    st.pop_back();
    ++seen;
    for (int j : adj[i])
      if (--indeg[j] == 0) st.push_back(j);
  }
  return seen == k;
}

// For each vertex tuple, every distribution of edge counts over (v, w, colour);
// legs are assigned in index order, sources and targets ascending.
void for_each_plan(const Properad& p, const std::vector<int>& tuple,
                   const std::function<void(const std::vector<PlanEdge>&)>& fn) {
  int k = static_cast<int>(tuple.size());
  int nc = p.color_count();
  std::vector<OpSig> sig;
  for (int o : tuple) sig.push_back(p.signature(o));
  std::vector<std::vector<int>> out_cap(k, std::vector<int>(nc, 0)), in_cap = out_cap;
  for (int v = 0; v < k; ++v) {
    for (int c : sig[v].out) ++out_cap[v][c];
    for (int c : sig[v].in) ++in_cap[v][c];
  }
  struct Slot {
    int v, w, c;
  };
  std::vector<Slot> slots;
  for (int v = 0; v < k; ++v)
    for (int w = 0; w < k; ++w)
      if (v != w)
        for (int c = 0; c < nc; ++c)
          if (out_cap[v][c] && in_cap[w][c]) slots.push_back({v, w, c});
  std::vector<int> count(slots.size(), 0);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == slots.size()) {
      std::vector<PlanEdge> edges;
      std::vector<std::vector<int>> next_out(k, std::vector<int>(nc, 0)), next_in = next_out;
      auto nth = [&](const Colors& cs, int c, int n) {
        for (int x = 0; x < static_cast<int>(cs.size()); ++x)
          if (cs[x] == c && n-- == 0) return x;
        return -1;
      };
      // Sources ascending on the target side: iterate v outermost.
      std::vector<std::vector<std::vector<int>>> tgt_legs(k, std::vector<std::vector<int>>(k));
      for (int w = 0; w < k; ++w)
        for (int v = 0; v < k; ++v)
          for (std::size_t q = 0; q < slots.size(); ++q)
            if (slots[q].v == v && slots[q].w == w)
              for (int t = 0; t < count[q]; ++t)
                tgt_legs[v][w].push_back(nth(sig[w].in, slots[q].c, next_in[w][slots[q].c]++));
      for (int v = 0; v < k; ++v)
        for (int w = 0; w < k; ++w) {
          int used = 0;
          for (std::size_t q = 0; q < slots.size(); ++q)
            if (slots[q].v == v && slots[q].w == w)
              for (int t = 0; t < count[q]; ++t) {
                int r = nth(sig[v].out, slots[q].c, next_out[v][slots[q].c]++);
                edges.push_back({v, r, w, tgt_legs[v][w][used++]});
              }
        }
      if (plan_ok_shape(k, edges)) fn(edges);
      return;
    }
    const Slot& s = slots[i];
    int most = std::min(out_cap[s.v][s.c], in_cap[s.w][s.c]);
    for (int n = 0; n <= most; ++n) {
      count[i] = n;
      out_cap[s.v][s.c] -= n;
      in_cap[s.w][s.c] -= n;
      rec(i + 1);
      out_cap[s.v][s.c] += n;
      in_cap[s.w][s.c] += n;
    }
    count[i] = 0;
  };
  rec(0);
}

}  // namespace

PlanValue evaluate_plan(const Properad& p, const std::vector<int>& ops, const std::vector<std::array<int, 4>>& edges) {
  std::vector<PlanEdge> es;
  for (const auto& e : edges) es.push_back({e[0], e[1], e[2], e[3]});
  PlanEvaluator ev(p, ops, es);
  ev.first_only = true;
  if (!ev.run()) throw std::logic_error("plan gluing returned an operation of the wrong arity");
  return {ev.result.op, ev.result.in, ev.result.out};
}

GlueLegs glue_legs(const OpSig& o, const OpSig& p, const Matching& m) {
  std::vector<char> out_used(o.out.size(), 0), in_used(p.in.size(), 0);
  for (auto [r, s] : m) {
    out_used[r] = 1;
    in_used[s] = 1;
  }
  std::vector<std::pair<int, int>> in, out;
  Colors ic, oc;
  for (int k = 0; k < static_cast<int>(o.in.size()); ++k) {
    in.push_back({0, k});
    ic.push_back(o.in[k]);
  }
  for (int s = 0; s < static_cast<int>(p.in.size()); ++s)
    if (!in_used[s]) {
      in.push_back({1, s});
      ic.push_back(p.in[s]);
    }
  for (int r = 0; r < static_cast<int>(o.out.size()); ++r)
    if (!out_used[r]) {
      out.push_back({0, r});
      oc.push_back(o.out[r]);
    }
  for (int k = 0; k < static_cast<int>(p.out.size()); ++k) {
    out.push_back({1, k});
    oc.push_back(p.out[k]);
  }
  GlueLegs g;
  g.in = sort_by_color(in, ic);
  g.out = sort_by_color(out, oc);
  g.sig.in = ic;
  g.sig.out = oc;
  std::sort(g.sig.in.begin(), g.sig.in.end());
  std::sort(g.sig.out.begin(), g.sig.out.end());
  return g;
}

void validate_matching(const OpSig& o, const OpSig& p, const Matching& m) {
  if (m.empty()) throw std::invalid_argument("matching is empty");
  std::vector<char> seen(p.in.size(), 0);
  int last = -1;
  for (auto [r, s] : m) {
    if (r <= last) throw std::invalid_argument("matching must be sorted by output leg without repeats");
    last = r;
    if (r < 0 || r >= static_cast<int>(o.out.size()) || s < 0 || s >= static_cast<int>(p.in.size()))
      throw std::invalid_argument("matching leg out of range");
    if (seen[s]) throw std::invalid_argument("matching repeats an input leg");
    seen[s] = 1;
    if (o.out[r] != p.in[s]) throw std::invalid_argument("matching joins legs of different colours");
  }
}

std::string Properad::op_name(int op) const { return std::to_string(op); }

int DiscreteProperad::add_op(OpSig sig, std::string name) {
  if (!std::is_sorted(sig.in.begin(), sig.in.end()) || !std::is_sorted(sig.out.begin(), sig.out.end()))
    throw std::invalid_argument("operation colours must be sorted");
  for (int c : sig.in)
    if (c < 0 || c >= colors) throw std::invalid_argument("operation colour out of range");
  for (int c : sig.out)
    if (c < 0 || c >= colors) throw std::invalid_argument("operation colour out of range");
  ops.push_back(std::move(sig));
  names.push_back(std::move(name));
  return static_cast<int>(ops.size()) - 1;
}

std::vector<int> DiscreteProperad::operations(const Colors& in, const Colors& out) const {
  std::vector<int> r;
  for (int i = 0; i < static_cast<int>(ops.size()); ++i)
    if (ops[i].in == in && ops[i].out == out) r.push_back(i);
  return r;
}

int DiscreteProperad::glue(int o, int p, const Matching& m) const {
  auto it = gluing.find({o, p, m});
  if (it == gluing.end()) throw OutOfRange("no gluing entry for " + names.at(o) + " and " + names.at(p));
  return it->second;
}

int DiscreteProperad::permute(int op, const std::vector<int>& in_perm, const std::vector<int>& out_perm) const {
  if (is_identity_perm(in_perm) && is_identity_perm(out_perm)) return op;
  auto it = action.find({op, in_perm, out_perm});
  return it == action.end() ? op : it->second;
}

std::string DiscreteProperad::op_name(int op) const { return names.at(op); }

int EndomorphismProperad::encode(int k, int l, int label) const {
  if (k < 0 || l < 0 || k > kMaxLegs || l > kMaxLegs) throw OutOfRange("arity beyond endomorphism encoding");
  if (label < 0 || label >= m_.size) throw std::invalid_argument("label outside monoid");
  return (k * (kMaxLegs + 1) + l) * m_.size + label;
}

std::array<int, 3> EndomorphismProperad::decode(int op) const {
  int label = op % m_.size;
  int kl = op / m_.size;
  return {kl / (kMaxLegs + 1), kl % (kMaxLegs + 1), label};
}

WeightedCospan EndomorphismProperad::corolla(int op) const {
  auto [k, l, label] = decode(op);
  return WeightedCospan(Cospan(constant(k, 1, 0), constant(l, 1, 0)), {label});
}

std::vector<int> EndomorphismProperad::operations(const Colors& in, const Colors& out) const {
  for (int c : in)
    if (c != 0) return {};
  for (int c : out)
    if (c != 0) return {};
  std::vector<int> r;
  for (int x = 0; x < m_.size; ++x)
    r.push_back(encode(static_cast<int>(in.size()), static_cast<int>(out.size()), x));
  return r;
}

OpSig EndomorphismProperad::signature(int op) const {
  auto [k, l, label] = decode(op);
  (void)label;
  return {Colors(k, 0), Colors(l, 0)};
}

int EndomorphismProperad::identity(int color) const {
  if (color != 0) throw std::invalid_argument("endomorphism properad has one colour");
  return encode(1, 1, m_.zero);
}

int EndomorphismProperad::glue(int o, int p, const Matching& m) const {
  auto [ko, lo, xo] = decode(o);
  auto [kp, lp, xp] = decode(p);
  int a = static_cast<int>(m.size());
  int u = kp - a;      // unmatched inputs of p, carried by identities on the left
  int free = lo - a;   // unmatched outputs of o, carried by identities on the right
  // o + id_u : ko + u -> lo + u, apex {*} + u
  std::vector<int> l1(ko, 0), r1(lo, 0), lab1{xo};
  for (int j = 0; j < u; ++j) {
    l1.push_back(1 + j);
    r1.push_back(1 + j);
    lab1.push_back(m_.zero);
  }
  WeightedCospan w1(Cospan(FinMap(ko + u, 1 + u, l1), FinMap(lo + u, 1 + u, r1)), lab1);
  // id_free + p : lo + u -> free + lp, apex {*} + free
  std::vector<char> matched(lo, 0);
  for (auto [r, s] : m) matched[r] = 1;
  std::vector<int> l2, r2, lab2{xp};
  int next = 1;
  for (int r = 0; r < lo; ++r) {
    if (matched[r]) {
      l2.push_back(0);
    } else {
      l2.push_back(next);
      r2.push_back(next);
      lab2.push_back(m_.zero);
      ++next;
    }
  }
  for (int j = 0; j < u; ++j) l2.push_back(0);
  for (int k = 0; k < lp; ++k) r2.push_back(0);
  WeightedCospan w2(Cospan(FinMap(lo + u, 1 + free, l2), FinMap(free + lp, 1 + free, r2)), lab2);
  WeightedCospan c = compose_weighted(m_, w1, w2);
  if (c.c.apex() != 1) throw std::logic_error("endomorphism gluing is disconnected");
  return encode(c.c.source(), c.c.target(), c.labels[0]);
}

std::string EndomorphismProperad::op_name(int op) const {
  auto [k, l, x] = decode(op);
  return "(" + std::to_string(k) + "," + std::to_string(l) + ";" + std::to_string(x) + ")";
}

EndomorphismProperad endomorphism_properad(const FinCommMonoid& m) { return EndomorphismProperad(m); }

std::vector<Colors> color_multisets(int colors, int max_legs) {
  std::vector<Colors> out;
  Colors cur;
  std::function<void(int, int)> rec = [&](int left, int from) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (int c = from; c < colors; ++c) {
      cur.push_back(c);
      rec(left - 1, c);
      cur.pop_back();
    }
  };
  for (int n = 0; n <= max_legs; ++n) {
    if (n > 0 && colors == 0) break;
    rec(n, 0);
  }
  return out;
}

std::vector<int> all_operations(const Properad& p, int max_legs) {
  std::vector<int> out;
  if (p.color_count() == 0) {
    auto v = p.operations({}, {});
    return v;
  }
  auto ms = color_multisets(p.color_count(), max_legs);
  for (const Colors& in : ms)
    for (const Colors& o : ms)
      for (int op : p.operations(in, o)) out.push_back(op);
  return out;
}

int compose_ops(const Properad& p, int o, int q, const Matching& m) {
  validate_matching(p.signature(o), p.signature(q), m);
  return p.glue(o, q, m);
}

Verdict check_axioms(const Properad& p, AxiomOptions opt) {
  std::vector<int> ops = all_operations(p, opt.max_legs);
  Verdict v = Verdict::pass();

  for (int c = 0; c < p.color_count(); ++c) {
    OpSig s = p.signature(p.identity(c));
    if (s.in != Colors{c} || s.out != Colors{c})
      return Verdict::fail("identity_arity", json{{"color", c}, {"op", p.identity(c)}}, v.checked);
  }

  for (int o : ops) {
    OpSig so = p.signature(o);
    for (int r = 0; r < static_cast<int>(so.out.size()); ++r) {
      int id = p.identity(so.out[r]);
      Matching m{{r, 0}};
      int got;
      try {
        got = p.glue(o, id, m);
      } catch (const OutOfRange&) {
        ++v.skipped;
        continue;
      }
      GlueLegs gl = glue_legs(so, p.signature(id), m);
      std::vector<int> pi, po;
      for (auto [w, i] : gl.in) pi.push_back(i);
      for (auto [w, i] : gl.out) po.push_back(w == 0 ? i : r);
      int want = p.permute(o, pi, po);
      ++v.checked;
      if (got != want)
        return Verdict::fail("unitality",
                             json{{"op", p.op_name(o)}, {"side", "output"}, {"leg", r}, {"got", p.op_name(got)},
                                  {"expected", p.op_name(want)}},
                             v.checked);
    }
    for (int s = 0; s < static_cast<int>(so.in.size()); ++s) {
      int id = p.identity(so.in[s]);
      Matching m{{0, s}};
      int got;
      try {
        got = p.glue(id, o, m);
      } catch (const OutOfRange&) {
        ++v.skipped;
        continue;
      }
      GlueLegs gl = glue_legs(p.signature(id), so, m);
      std::vector<int> pi, po;
      for (auto [w, i] : gl.in) pi.push_back(w == 0 ? s : i);
      for (auto [w, i] : gl.out) po.push_back(i);
      int want = p.permute(o, pi, po);
      ++v.checked;
      if (got != want)
        return Verdict::fail("unitality",
                             json{{"op", p.op_name(o)}, {"side", "input"}, {"leg", s}, {"got", p.op_name(got)},
                                  {"expected", p.op_name(want)}},
                             v.checked);
    }
  }

  for (int k = 2; k <= opt.max_vertices; ++k) {
    std::vector<int> pick(k, 0);
    std::function<Verdict*(int, int)> rec;
    Verdict bad;
    bool failed = false;
    rec = [&](int pos, int from) -> Verdict* {
      if (pos == k) {
        std::vector<int> tuple;
        for (int i : pick) tuple.push_back(ops[i]);
        for_each_plan(p, tuple, [&](const std::vector<PlanEdge>& edges) {
          if (failed) return;
          PlanEvaluator ev(p, tuple, edges);
          bool ok;
          try {
            ok = ev.run();
          } catch (const OutOfRange&) {
            ++v.skipped;
            return;
          }
          ++v.checked;
          if (ok) return;
          json w = ev.conflict;
          json names = json::array();
          for (int o : tuple) names.push_back(p.op_name(o));
          json es = json::array();
          for (const PlanEdge& e : edges) es.push_back({e.v, e.r, e.w, e.s});
          w["vertices"] = names;
          w["vertex_ops"] = tuple;
          w["edges"] = es;
          bad = Verdict::fail(ev.failure, w, v.checked);
          failed = true;
        });
        return failed ? &bad : nullptr;
      }
      for (int i = from; i < static_cast<int>(ops.size()); ++i) {
        pick[pos] = i;
        if (Verdict* r = rec(pos + 1, i)) return r;
      }
      return nullptr;
    };
    if (Verdict* r = rec(0, 0)) {
      r->skipped = v.skipped;
      return *r;
    }
  }

  for (int o : ops) {
    OpSig so = p.signature(o);
    for (int q : ops) {
      OpSig sq = p.signature(q);
      for (const Matching& m : all_matchings(so, sq)) {
        int r;
        try {
          r = p.glue(o, q, m);
        } catch (const OutOfRange&) {
          ++v.skipped;
          continue;
        }
        GlueLegs gl = glue_legs(so, sq, m);
        auto check = [&](int side, const std::vector<int>& pin, const std::vector<int>& pout) -> bool {
          const std::vector<int>& leg_map_in = pin;
          const std::vector<int>& leg_map_out = pout;
          int o2 = side == 0 ? p.permute(o, pin, pout) : o;
          int q2 = side == 1 ? p.permute(q, pin, pout) : q;
          Matching m2;
          for (auto [a, b] : m) {
            if (side == 0) {
              int a2 = static_cast<int>(std::find(leg_map_out.begin(), leg_map_out.end(), a) - leg_map_out.begin());
              m2.push_back({a2, b});
            } else {
              int b2 = static_cast<int>(std::find(leg_map_in.begin(), leg_map_in.end(), b) - leg_map_in.begin());
              m2.push_back({a, b2});
            }
          }
          std::sort(m2.begin(), m2.end());
          int r2;
          try {
            r2 = p.glue(o2, q2, m2);
          } catch (const OutOfRange&) {
            ++v.skipped;
            return true;
          }
          GlueLegs gl2 = glue_legs(so, sq, m2);
          std::vector<int> ti, to;
          for (auto [w, i] : gl2.in) ti.push_back(index_of(gl.in, {w, w == side ? leg_map_in[i] : i}));
          for (auto [w, i] : gl2.out) to.push_back(index_of(gl.out, {w, w == side ? leg_map_out[i] : i}));
          ++v.checked;
          return r2 == p.permute(r, ti, to);
        };
        for (int side = 0; side < 2; ++side) {
          const OpSig& s = side == 0 ? so : sq;
          for (auto& pin : color_perms(s.in))
            for (auto& pout : color_perms(s.out)) {
              if (is_identity_perm(pin) && is_identity_perm(pout)) continue;
              if (!check(side, pin, pout)) {
                Verdict f = Verdict::fail("equivariance",
                                          json{{"o", p.op_name(o)}, {"p", p.op_name(q)}, {"matching", m},
                                               {"permuted", side == 0 ? "o" : "p"}, {"in_perm", pin},
                                               {"out_perm", pout}},
                                          v.checked);
                f.skipped = v.skipped;
                return f;
              }
            }
        }
      }
    }
  }
  return v;
}

bool is_monic(const Properad& p, int max_legs) {
  for (int op : all_operations(p, max_legs)) {
    OpSig s = p.signature(op);
    if (s.in.size() == 1 && s.out.size() == 1 && s.in == s.out && op == p.identity(s.in[0])) continue;
    if (s.out.size() != 1) return false;
  }
  return true;
}

Cospan shape_map(const Properad& p, int op) {
  OpSig s = p.signature(op);
  int k = static_cast<int>(s.in.size()), l = static_cast<int>(s.out.size());
  return Cospan(constant(k, 1, 0), constant(l, 1, 0));
}

Cospan shape_of_gluing(const OpSig& o, const OpSig& q, const Matching& m) {
  validate_matching(o, q, m);
  int ko = static_cast<int>(o.in.size()), lo = static_cast<int>(o.out.size());
  int kq = static_cast<int>(q.in.size()), lq = static_cast<int>(q.out.size());
  int a = static_cast<int>(m.size());
  int u = kq - a;
  std::vector<int> l1(ko, 0), r1(lo, 0);
  for (int j = 0; j < u; ++j) {
    l1.push_back(1 + j);
    r1.push_back(1 + j);
  }
  Cospan c1(FinMap(ko + u, 1 + u, l1), FinMap(lo + u, 1 + u, r1));
  std::vector<char> matched(lo, 0), in_matched(kq, 0);
  for (auto [r, s] : m) {
    matched[r] = 1;
    in_matched[s] = 1;
  }
  std::vector<int> l2, r2;
  int free = lo - a, next = 1;
  for (int r = 0; r < lo; ++r) {
    if (matched[r]) {
      l2.push_back(0);
    } else {
      l2.push_back(next);
      r2.push_back(next);
      ++next;
    }
  }
  for (int j = 0; j < u; ++j) l2.push_back(0);
  for (int k = 0; k < lq; ++k) r2.push_back(0);
  Cospan c2(FinMap(lo + u, 1 + free, l2), FinMap(free + lq, 1 + free, r2));
  Cospan c = compose_cospans(c1, c2);
  GlueLegs gl = glue_legs(o, q, m);
  // Positions of the padded boundary: o's legs first, then the carried legs.
  std::vector<int> in_pos(kq, -1);
  for (int s = 0, n = 0; s < kq; ++s)
    if (!in_matched[s]) in_pos[s] = ko + n++;
  std::vector<int> out_pos(lo, -1);
  for (int r = 0, n = 0; r < lo; ++r)
    if (!matched[r]) out_pos[r] = n++;
  std::vector<int> lt, rt;
  for (auto [w, i] : gl.in) lt.push_back(c.left.table[w == 0 ? i : in_pos[i]]);
  for (auto [w, i] : gl.out) rt.push_back(c.right.table[w == 0 ? out_pos[i] : free + i]);
  return normalize_apex(Cospan(FinMap(static_cast<int>(lt.size()), c.apex(), lt),
                               FinMap(static_cast<int>(rt.size()), c.apex(), rt)));
}

DiscreteProperad tabulate(const Properad& p, int max_legs) {
  DiscreteProperad d;
  d.colors = p.color_count();
  std::vector<int> ops = all_operations(p, max_legs);
  std::map<int, int> id;
  for (int op : ops) id[op] = d.add_op(p.signature(op), p.op_name(op));
  for (int c = 0; c < d.colors; ++c) d.identities.push_back(id.at(p.identity(c)));
  for (int o : ops)
    for (int q : ops)
      for (const Matching& m : all_matchings(p.signature(o), p.signature(q))) {
        try {
          auto it = id.find(p.glue(o, q, m));
          if (it != id.end()) d.gluing[{id[o], id[q], m}] = it->second;
        } catch (const OutOfRange&) {
        }
      }
  for (int o : ops) {
    OpSig s = p.signature(o);
    for (auto& pin : color_perms(s.in))
      for (auto& pout : color_perms(s.out)) {
        if (is_identity_perm(pin) && is_identity_perm(pout)) continue;
        int r = p.permute(o, pin, pout);
        if (r != o) d.action[{id[o], pin, pout}] = id.at(r);
      }
  }
  return d;
}

AdmissibleVerdict is_admissible(const std::set<ArityPair>& s, int box) {
  if (box < 0 || box > 6) throw std::invalid_argument("admissibility box must lie in 0..6");
  for (auto [a, b] : s)
    if (a < 0 || b < 0 || a > box || b > box) throw std::invalid_argument("pair outside the box");
  AdmissibleVerdict v;
  bool base = s.empty() || s == std::set<ArityPair>{{0, 0}} || s.count({1, 1});
  if (!base) {
    v.ok = false;
    v.kind = "unit";
    return v;
  }
  for (auto [a, b] : s)
    for (auto [b2, c] : s) {
      if (b2 != b) continue;
      for (int k = 1; k <= b; ++k) {
        int x = a + b - k, y = c + b - k;
        if (x > box || y > box) continue;
        if (!s.count({x, y})) {
          v.ok = false;
          v.kind = "composite";
          v.witness = {a, b, c, k};
          return v;
        }
      }
    }
  return v;
}

std::vector<AdmissibleSet> enumerate_admissible(int box) {
  if (box < 0 || box > 3) throw std::invalid_argument("enumeration box must lie in 0..3");
  int side = box + 1, cells = side * side;
  std::vector<AdmissibleSet> out;
  for (std::uint32_t mask = 0; mask < (1u << cells); ++mask) {
    std::set<ArityPair> s;
    for (int i = 0; i < cells; ++i)
      if (mask >> i & 1) s.insert({i / side, i % side});
    if (!is_admissible(s, box).ok) continue;
    AdmissibleSet a;
    a.box = box;
    a.is_empty_case = s.empty();
    a.is_nullary_case = s == std::set<ArityPair>{{0, 0}};
    a.has_unit = s.count({1, 1}) > 0;
    a.pairs = std::move(s);
    out.push_back(std::move(a));
  }
  return out;
}

void to_json(json& j, const OpSig& s) { j = json{{"in", s.in}, {"out", s.out}}; }

void to_json(json& j, const DiscreteProperad& p) {
  json ops = json::array();
  for (std::size_t i = 0; i < p.ops.size(); ++i)
    ops.push_back({{"name", p.names[i]}, {"in", p.ops[i].in}, {"out", p.ops[i].out}});
  json gl = json::array();
  for (const auto& [key, r] : p.gluing) {
    const auto& [o, q, m] = key;
    gl.push_back({{"o", o}, {"p", q}, {"matching", m}, {"result", r}});
  }
  json act = json::array();
  for (const auto& [key, r] : p.action) {
    const auto& [o, pin, pout] = key;
    act.push_back({{"op", o}, {"in", pin}, {"out", pout}, {"result", r}});
  }
  j = json{{"colors", p.colors}, {"ops", ops}, {"identities", p.identities}, {"gluing", gl}, {"action", act}};
}

void from_json(const json& j, DiscreteProperad& p) {
  DiscreteProperad d;
  d.colors = j.at("colors").get<int>();
  if (d.colors < 0) throw std::invalid_argument("negative colour count");
  for (const json& o : j.at("ops")) {
    OpSig s{o.at("in").get<Colors>(), o.at("out").get<Colors>()};
    std::string name = o.contains("name") ? o["name"].get<std::string>() : std::to_string(d.ops.size());
    d.add_op(std::move(s), std::move(name));
  }
  int n = static_cast<int>(d.ops.size());
  auto check_op = [&](int x) {
    if (x < 0 || x >= n) throw std::invalid_argument("operation index out of range");
  };
  d.identities = j.at("identities").get<std::vector<int>>();
  if (static_cast<int>(d.identities.size()) != d.colors) throw std::invalid_argument("one identity per colour");
  for (int c = 0; c < d.colors; ++c) {
    check_op(d.identities[c]);
    if (d.ops[d.identities[c]] != OpSig{{c}, {c}}) throw std::invalid_argument("identity has wrong arity");
  }
  if (j.contains("gluing"))
    for (const json& g : j["gluing"]) {
      int o = g.at("o").get<int>(), q = g.at("p").get<int>(), r = g.at("result").get<int>();
      check_op(o);
      check_op(q);
      check_op(r);
      Matching m = g.at("matching").get<Matching>();
      validate_matching(d.ops[o], d.ops[q], m);
      if (glue_legs(d.ops[o], d.ops[q], m).sig != d.ops[r])
        throw std::invalid_argument("gluing result has wrong arity");
      d.gluing[{o, q, m}] = r;
    }
  if (j.contains("action"))
    for (const json& a : j["action"]) {
      int o = a.at("op").get<int>(), r = a.at("result").get<int>();
      check_op(o);
      check_op(r);
      auto pin = a.at("in").get<std::vector<int>>(), pout = a.at("out").get<std::vector<int>>();
      const OpSig& s = d.ops[o];
      if (pin.size() != s.in.size() || pout.size() != s.out.size() || d.ops[r] != s)
        throw std::invalid_argument("action entry has wrong arity");
      for (std::size_t i = 0; i < pin.size(); ++i)
        if (s.in[pin[i]] != s.in[i]) throw std::invalid_argument("action must preserve colours");
      for (std::size_t i = 0; i < pout.size(); ++i)
        if (s.out[pout[i]] != s.out[i]) throw std::invalid_argument("action must preserve colours");
      d.action[{o, pin, pout}] = r;
    }
  p = std::move(d);
}

void to_json(json& j, const AdmissibleSet& s) {
  json pairs = json::array();
  for (auto [a, b] : s.pairs) pairs.push_back({a, b});
  j = json{{"box", s.box}, {"pairs", pairs}};
}

}  // namespace prpd
