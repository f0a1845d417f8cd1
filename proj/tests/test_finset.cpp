#include <doctest.h>

#include "oracles.hpp"
#include "prpd/finset.hpp"

using namespace prpd;

namespace {

std::vector<FinMap> maps_between(int dom, int cod) {
  std::vector<FinMap> out;
  oracle::for_each_table(dom, cod, [&](const std::vector<int>& t) { out.emplace_back(dom, cod, t); });
  return out;
}

// Connected components of X + Y with x ~ y whenever f(z) = x and g(z) = y.
int pushout_components(const FinMap& f, const FinMap& g) {
  int n = f.cod + g.cod;
  std::vector<std::vector<int>> adj(n);
  for (int z = 0; z < f.dom; ++z) {
    adj[f(z)].push_back(f.cod + g(z));
    adj[f.cod + g(z)].push_back(f(z));
  }
  std::vector<char> seen(n, 0);
  int comps = 0;
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    ++comps;
    std::vector<int> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : adj[v])
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
    }
  }
  return comps;
}

}  // namespace

TEST_CASE("maps reject bad tables") {
  CHECK_THROWS(FinMap(2, 1, {0}));
  CHECK_THROWS(FinMap(1, 1, {1}));
  CHECK_THROWS(FinMap(1, 0, {0}));
  CHECK_NOTHROW(FinMap(0, 0, {}));
}

TEST_CASE("composition is diagrammatic and associative") {
  FinMap f(2, 3, {2, 0}), g(3, 2, {1, 1, 0});
  CHECK(compose(f, g) == FinMap(2, 2, {0, 1}));
  for (const auto& a : maps_between(2, 2))
    for (const auto& b : maps_between(2, 3))
      for (const auto& c : maps_between(3, 2)) {
        CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
        CHECK(compose(identity(2), a) == a);
      }
}

TEST_CASE("injective, surjective and inverse") {
  CHECK(is_injective(empty_map(3)));
  CHECK(!is_surjective(empty_map(3)));
  CHECK(is_bijection(identity(0)));
  FinMap p(3, 3, {2, 0, 1});
  CHECK(compose(p, inverse(p)) == identity(3));
  CHECK_THROWS(inverse(FinMap(2, 1, {0, 0})));
  CHECK(fibers(FinMap(3, 2, {1, 0, 1})) == std::vector<std::vector<int>>{{1}, {0, 2}});
}

TEST_CASE("coproduct injections and copairing") {
  Coproduct c = coproduct(2, 1);
  CHECK(c.size == 3);
  FinMap f(2, 2, {1, 0}), g(1, 2, {1});
  FinMap h = copair(f, g);
  CHECK(compose(c.inl, h) == f);
  CHECK(compose(c.inr, h) == g);
  CHECK(sum(identity(1), identity(2)) == identity(3));
}

TEST_CASE("pushout sizes agree with a component count") {
  for (int z = 0; z <= 3; ++z)
    for (int x = 0; x <= 2; ++x)
      for (int y = 0; y <= 2; ++y)
        for (const auto& f : maps_between(z, x))
          for (const auto& g : maps_between(z, y)) {
            Pushout p = pushout(f, g);
            CHECK(p.size == pushout_components(f, g));
            CHECK(compose(f, p.inl) == compose(g, p.inr));
            CHECK(is_surjective(copair(p.inl, p.inr)));
          }
}

TEST_CASE("pushout classes are numbered by least member") {
  Pushout p = pushout(FinMap(1, 2, {1}), FinMap(1, 1, {0}));
  CHECK(p.size == 2);
  CHECK(p.inl == FinMap(2, 2, {0, 1}));
  CHECK(p.inr == FinMap(1, 2, {1}));
}

TEST_CASE("pullback sizes agree with fiber products") {
  for (int x = 0; x <= 3; ++x)
    for (int y = 0; y <= 2; ++y)
      for (int z = 1; z <= 2; ++z)
        for (const auto& f : maps_between(x, z))
          for (const auto& g : maps_between(y, z)) {
            Pullback q = pullback(f, g);
            int expect = 0;
            for (int a = 0; a < x; ++a)
              for (int b = 0; b < y; ++b) expect += f(a) == g(b);
            CHECK(q.size == expect);
            CHECK(compose(q.pr1, f) == compose(q.pr2, g));
          }
}

TEST_CASE("image factorization") {
  for (const auto& f : maps_between(3, 3)) {
    auto [e, m] = image_factorize(f);
    CHECK(is_surjective(e));
    CHECK(is_injective(m));
    CHECK(compose(e, m) == f);
    for (int i = 1; i < m.dom; ++i) CHECK(m(i - 1) < m(i));
  }
}

TEST_CASE("pointed maps factor as inert then active") {
  CHECK_THROWS(PointedMap(FinMap(2, 2, {1, 0})));
  for (int n = 1; n <= 4; ++n)
    for (int m = 1; m <= 3; ++m)
      for (const auto& f : maps_between(n, m)) {
        if (f(0) != 0) continue;
        PointedMap p(f);
        auto [i, a] = inert_active_factorize(p);
        CHECK(is_inert(i));
        CHECK(is_active(a));
        CHECK(compose(i, a) == p);
      }
}

TEST_CASE("union-find numbers classes by least member") {
  UnionFind u(5);
  u.unite(3, 1);
  u.unite(4, 0);
  int count = 0;
  CHECK(u.classes(&count) == std::vector<int>{0, 1, 2, 1, 0});
  CHECK(count == 3);
}

TEST_CASE("permutations") {
  CHECK(all_permutations(3).size() == 6);
  CHECK(factorial(5) == 120);
  CHECK(all_permutations(0).size() == 1);
}

TEST_CASE("json round trip") {
  FinMap f(3, 2, {1, 0, 1});
  CHECK(json(f).get<FinMap>() == f);
  CHECK_THROWS(json::parse(R"({"dom":1,"cod":1,"table":[3]})").get<FinMap>());
}
