#include <doctest.h>

#include "level_checks.hpp"
#include "oracles.hpp"
#include "prpd/levelgraph.hpp"

using namespace prpd;

namespace {

FinMap m(int dom, int cod, std::vector<int> t) { return FinMap(dom, cod, std::move(t)); }

// Level sizes 3, 2, 4, 3, 4.
LevelObject figure() {
  return LevelObject(3, {Cospan(m(3, 2, {0, 0, 0}), m(4, 2, {0, 0, 1, 1})),
                         Cospan(m(4, 3, {0, 2, 0, 2}), m(4, 3, {0, 1, 2, 2}))});
}

int graph_components(const LabeledDAG& g) {
  UnionFind uf(g.vertices + g.edges());
  for (int e = 0; e < g.edges(); ++e) {
    if (g.edge_src[e] >= 0) uf.unite(g.vertices + e, g.edge_src[e]);
    if (g.edge_tgt[e] >= 0) uf.unite(g.vertices + e, g.edge_tgt[e]);
  }
  int c = 0;
  uf.classes(&c);
  return c;
}

// Contracts the edges on levels not hit by an injective active lambda.
LabeledDAG contract(const LabeledDAG& g, const std::vector<int>& lambda) {
  std::set<int> kept(lambda.begin(), lambda.end());
  UnionFind uf(g.vertices);
  for (int e = 0; e < g.edges(); ++e)
    if (!kept.count(g.edge_level[e])) uf.unite(g.edge_src[e], g.edge_tgt[e]);
  int count = 0;
  auto cls = uf.classes(&count);
  LabeledDAG out;
  out.vertices = count;
  for (int e = 0; e < g.edges(); ++e) {
    if (!kept.count(g.edge_level[e])) continue;
    out.edge_src.push_back(g.edge_src[e] < 0 ? -1 : cls[g.edge_src[e]]);
    out.edge_tgt.push_back(g.edge_tgt[e] < 0 ? -1 : cls[g.edge_tgt[e]]);
  }
  return out;
}

}  // namespace

TEST_CASE("twisted arrow poset") {
  for (int n = 0; n <= 4; ++n) CHECK(static_cast<int>(TwPoset{n}.objects().size()) == (n + 1) * (n + 2) / 2);
  TwPoset t{2};
  CHECK(t.leq({1, 1}, {0, 2}));
  CHECK(t.leq({1, 2}, {1, 2}));
  CHECK(!t.leq({0, 2}, {1, 1}));
  CHECK(!t.leq({0, 1}, {1, 2}));
}

TEST_CASE("the figure object") {
  LevelObject x = figure();
  LabeledDAG g = realize(x);
  CHECK(g.edges() == 11);
  CHECK(g.vertices == 5);
  CHECK(elementary_subgraphs(g).size() == 16);
  CHECK(g.is_acyclic());
  // the middle vertex of the top level only emits a leg
  CHECK(graph_components(g) == 2);
  CHECK(colimit_size(x) == 2);
  CHECK(!is_connected_level(x));
  CHECK(!is_elementary(x));
  TwDiagram t = tw_diagram(x);
  CHECK(t.value(0, 2) == 2);
  CHECK(t.value(0, 1) == 2);
  CHECK(t.value(1, 2) == 3);
}

TEST_CASE("realization examples") {
  LabeledDAG g0 = realize(LevelObject(3));
  CHECK(g0.vertices == 0);
  CHECK(g0.edges() == 3);
  LabeledDAG c = realize(LevelObject(2, {Cospan(m(2, 1, {0, 0}), m(3, 1, {0, 0, 0}))}));
  CHECK(c.vertices == 1);
  CHECK(c.in_edges()[0].size() == 2);
  CHECK(c.out_edges()[0].size() == 3);
  CHECK(elementary_subgraphs(c).size() == 6);
  CHECK(elementary_subgraphs(realize(LevelObject(1))).size() == 1);
}

TEST_CASE("realize then unrealize is the identity up to size 5") {
  for (int n = 0; n <= 2; ++n)
    for (const auto& x : enumerate_level_objects(n, 5)) {
      LabeledDAG g = realize(x);
      CHECK(unrealize(g) == x);
      CHECK(g.is_acyclic());
      CHECK((graph_components(g) == 1) == is_connected_level(x));
    }
}

TEST_CASE("elementaries agree with the graph description") {
  for (int n = 0; n <= 2; ++n)
    for (const auto& x : enumerate_level_objects(n, 5)) {
      LabeledDAG g = realize(x);
      bool edge = g.vertices == 0 && g.edges() == 1;
      bool corolla = g.vertices == 1;
      for (int e = 0; e < g.edges(); ++e) corolla = corolla && (g.edge_src[e] < 0) != (g.edge_tgt[e] < 0);
      CHECK(is_elementary(x) == (n <= 1 && (edge || corolla)));
    }
}

TEST_CASE("connectedness and the literal condition") {
  // A00 = {a}, A01 = {x, y}, A11 = {*}: the literal condition holds, the graph is split
  LevelObject x(1, {Cospan(m(1, 2, {0}), m(1, 2, {1}))});
  CHECK(is_connected_literal(x));
  CHECK(!is_connected_level(x));
  CHECK(graph_components(realize(x)) == 2);
  CHECK(is_connected_level(LevelObject(2, {Cospan(m(2, 1, {0, 0}), m(3, 1, {0, 0, 0}))})));
}

TEST_CASE("two levelings give the same graph") {
  // a (1,0) corolla then a (0,1) corolla, or both on one level
  LevelObject stacked(1, {Cospan(m(1, 1, {0}), m(0, 1, {})), Cospan(m(0, 1, {}), m(1, 1, {0}))});
  LevelObject flat(1, {Cospan(m(1, 2, {0}), m(1, 2, {1}))});
  CHECK(forget_leveling(stacked) == forget_leveling(flat));
  // swapping the vertex order inside a level
  LevelObject swapped(1, {Cospan(m(1, 2, {1}), m(1, 2, {0}))});
  CHECK(forget_leveling(swapped) == forget_leveling(flat));
  LevelObject other(1, {Cospan(m(1, 1, {0}), m(1, 1, {0}))});
  CHECK(forget_leveling(other) != forget_leveling(flat));
}

TEST_CASE("canonical dags are invariant under relabelling") {
  for (const auto& x : enumerate_chains(2, 4)) {
    LabeledDAG g = drop_leveling(realize(x));
    std::vector<int> p(g.vertices);
    std::iota(p.begin(), p.end(), 0);
    std::reverse(p.begin(), p.end());
    LabeledDAG h = g;
    for (int e = 0; e < g.edges(); ++e) {
      h.edge_src[e] = g.edge_src[e] < 0 ? -1 : p[g.edge_src[e]];
      h.edge_tgt[e] = g.edge_tgt[e] < 0 ? -1 : p[g.edge_tgt[e]];
    }
    std::reverse(h.edge_src.begin(), h.edge_src.end());
    std::reverse(h.edge_tgt.begin(), h.edge_tgt.end());
    CHECK(canonical_dag(h) == canonical_dag(g));
  }
}

TEST_CASE("active collapse matches edge contraction") {
  for (int n = 1; n <= 3; ++n) {
    for (const auto& x : enumerate_chains(n, 4))
      for (const auto& lam : active_maps(n, n)) {
          bool injective = std::adjacent_find(lam.begin(), lam.end()) == lam.end();
          if (!injective) continue;
          LevelObject y = active_collapse(lam, x);
          CHECK(y.height() + 1 == static_cast<int>(lam.size()));
          CHECK(forget_leveling(y) == canonical_dag(contract(realize(x), lam)));
        }
  }
  LevelObject x = figure();
  CHECK(active_collapse({0, 2}, x).apex(1) == 2);
  CHECK(active_collapse({0, 1, 2}, x) == x);
}

TEST_CASE("morphism basics") {
  LevelObject x = figure();
  LevelMorphism id = identity_morphism(x);
  CHECK(is_inert(id));
  CHECK(is_active(id));
  CHECK(is_iso(id));
  auto [g, h] = factorize_level(id);
  CHECK(is_iso(g));
  CHECK(is_iso(h));
  CHECK_THROWS(make_level_morphism(LevelObject(2), LevelObject(1), {0}, {m(2, 1, {0, 0})}));
}

TEST_CASE("a level subgraph inclusion is its own inert part") {
  LevelObject corolla(1, {Cospan(m(1, 1, {0}), m(1, 1, {0}))});
  LevelObject two(1, {Cospan(m(1, 1, {0}), m(1, 1, {0})), Cospan(m(1, 1, {0}), m(1, 1, {0}))});
  int found = 0;
  for (const auto& f : all_level_morphisms(corolla, two)) {
    if (!is_inert(f)) continue;
    ++found;
    auto [g, h] = factorize_level(f);
    CHECK(checks::same(compose_level_morphisms(h, g), f));
    CHECK(is_iso(h));
  }
  CHECK(found == 2);
}

TEST_CASE("factorization exists and is unique up to size 3") {
  auto r = checks::check_factorizations(2, 3);
  CHECK_MESSAGE(r.failure.empty(), r.failure);
  CHECK(r.morphisms > 0);
  CHECK(r.competitors >= r.morphisms);
}

TEST_CASE("json and dot") {
  LabeledDAG g = realize(figure());
  CHECK(json(g).get<LabeledDAG>() == g);
  std::string dot = to_dot(g);
  CHECK(dot.find("rankdir=LR") != std::string::npos);
  CHECK(dot.find("rank=same") != std::string::npos);
}
