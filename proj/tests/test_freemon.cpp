#include <doctest.h>

#include "oracles.hpp"
#include "prpd/freemon.hpp"

using namespace prpd;

namespace {

// Every matrix with src, dst <= max_dim and entries <= max_entry.
std::vector<MonHom> all_matrices(int max_dim, int max_entry) {
  std::vector<MonHom> out;
  for (int s = 0; s <= max_dim; ++s)
    for (int d = 0; d <= max_dim; ++d)
      oracle::for_each_table(s * d, max_entry + 1, [&](const std::vector<int>& t) {
        std::vector<Multiset> cols;
        for (int j = 0; j < s; ++j) cols.emplace_back(std::vector<int>(t.begin() + j * d, t.begin() + (j + 1) * d));
        out.emplace_back(s, d, std::move(cols));
      });
  return out;
}

MonHom rows(std::vector<std::vector<int>> r) { return MonHom::from_rows(r); }

}  // namespace

TEST_CASE("multisets") {
  Multiset a({1, 0, 2});
  CHECK(a.degree() == 3);
  CHECK(a + Multiset::basis(3, 1) == Multiset({1, 1, 2}));
  CHECK(Multiset::zero(2).is_zero());
  CHECK_THROWS(Multiset({-1}));
  auto deg2 = multisets_of_degree(2, 2);
  REQUIRE(deg2.size() == 3);
  CHECK(deg2[0] == Multiset({2, 0}));
  CHECK(deg2[2] == Multiset({0, 2}));
  CHECK(multisets_up_to(2, 2).size() == 6);
}

TEST_CASE("homomorphisms apply and compose") {
  MonHom h = rows({{1, 2}, {0, 1}});
  CHECK(h.apply(Multiset({1, 1})) == Multiset({3, 1}));
  MonHom g = rows({{1, 1}});
  CHECK(compose(h, g) == rows({{1, 3}}));
  CHECK(compose(MonHom::identity(2), h) == h);
  CHECK_THROWS(compose(g, h));
}

TEST_CASE("classification examples") {
  CHECK(classify_hom(MonHom::identity(3)).tag == HomTag::Free);
  // diagonal F(1) -> F(2)
  CHECK(classify_hom(rows({{1}, {1}})).tag == HomTag::Transfer);
  // fold F(2) -> F(1) is induced by a map of sets
  CHECK(classify_hom(rows({{1, 1}})).tag == HomTag::Free);
  CHECK(classify_hom(rows({{2}})).tag == HomTag::Mixed);
  CHECK(classify_hom(MonHom(1, 0, {Multiset::zero(0)})).tag == HomTag::Transfer);
}

TEST_CASE("classify_hom agrees with the splitting oracle up to 3x3, entries <= 2") {
  int n = 0;
  for (const MonHom& h : all_matrices(3, 2)) {
    ++n;
    bool free = oracle::splitting_equifibered(h, 3);
    HomClass c = classify_hom(h);
    CHECK((c.tag == HomTag::Free) == free);
    if (!free) CHECK((c.tag == HomTag::Transfer) == oracle::is_transfer_along_partial_map(h));
    CHECK(c.tag != HomTag::ContrafiberedOnly);
    CHECK(c.factorization.has_value() == (c.tag == HomTag::Mixed));
  }
  CHECK(n == 4 + 40 + 820 + 20440);
}

TEST_CASE("factorization recomposes and is unique up to relabelling the middle") {
  for (const MonHom& h : all_matrices(3, 2)) {
    auto [t, f] = ctf_eqf_factorize(h);
    CHECK(is_transfer(t));
    CHECK(is_free_hom(f));
    CHECK(compose(t, f) == h);
  }
  // Exhaustive search for every factorization through a middle of the same size.
  for (const MonHom& h : all_matrices(2, 2)) {
    auto [t0, f0] = ctf_eqf_factorize(h);
    int k = t0.dst;
    auto signature = [&](const std::vector<int>& g, const std::vector<int>& fm) {
      std::multiset<std::pair<int, int>> s;
      for (int i = 0; i < k; ++i) s.insert({g[i], fm[i]});
      return s;
    };
    std::vector<int> g0(k), fm0(k);
    for (int i = 0; i < k; ++i) {
      for (int j = 0; j < h.src; ++j)
        if (t0.cols[j][i]) g0[i] = j;
      for (int r = 0; r < h.dst; ++r)
        if (f0.cols[i][r]) fm0[i] = r;
    }
    auto want = signature(g0, fm0);
    int solutions = 0;
    // A free map is a function k -> dst; a transfer whose supports cover k is a function k -> src.
    oracle::for_each_table(k, h.src, [&](const std::vector<int>& g) {
      oracle::for_each_table(k, h.dst, [&](const std::vector<int>& fm) {
        std::vector<std::vector<int>> m(h.src, std::vector<int>(h.dst, 0));
        for (int i = 0; i < k; ++i) ++m[g[i]][fm[i]];
        for (int j = 0; j < h.src; ++j)
          for (int r = 0; r < h.dst; ++r)
            if (m[j][r] != h.entry(r, j)) return;
        ++solutions;
        CHECK(signature(g, fm) == want);
      });
    });
    CHECK(solutions > 0);
  }
}

TEST_CASE("free and transfer maps are closed under composition") {
  auto small = all_matrices(2, 1);
  for (const auto& a : small)
    for (const auto& b : small) {
      if (a.dst != b.src) continue;
      MonHom ab = compose(a, b);
      if (is_free_hom(a) && is_free_hom(b)) CHECK(is_free_hom(ab));
      if (is_transfer(a) && is_transfer(b)) CHECK(is_transfer(ab));
    }
}

TEST_CASE("submonoid membership and factoring") {
  Submonoid s{2, {Multiset({2, 0}), Multiset({1, 1}), Multiset({0, 2})}};
  CHECK(in_submonoid(s, Multiset({3, 1})));
  CHECK(!in_submonoid(s, Multiset({1, 0})));
  FactoringVerdict v = is_closed_under_factoring(s);
  REQUIRE(!v.ok);
  CHECK(in_submonoid(s, v.witness->first + v.witness->second));
}

TEST_CASE("the even-sum submonoid is not free") {
  Submonoid even{2, {Multiset({2, 0}), Multiset({1, 1}), Multiset({0, 2})}};
  FreenessVerdict v = is_free_submonoid(even);
  REQUIRE(!v.ok);
  auto [a, b] = *v.relation;
  // (2,0) + (0,2) = 2 (1,1)
  CHECK(a == std::vector<int>{1, 0, 1});
  CHECK(b == std::vector<int>{0, 2, 0});
}

TEST_CASE("distinct basis vectors generate a free submonoid") {
  for (int n = 1; n <= 3; ++n)
    for (int mask = 1; mask < (1 << n); ++mask) {
      Submonoid s{n, {}};
      for (int i = 0; i < n; ++i)
        if (mask >> i & 1) s.generators.push_back(Multiset::basis(n, i));
      CHECK(is_free_submonoid(s).ok);
    }
}

TEST_CASE("groupoid cardinality") {
  CHECK(groupoid_cardinality(Multiset(std::vector<int>{})) == Rational(1));
  CHECK(groupoid_cardinality(Multiset({2, 3})) == Rational(1, 12));
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
}

TEST_CASE("json round trip") {
  MonHom h = rows({{1, 0}, {2, 1}});
  CHECK(json(h).get<MonHom>() == h);
  Submonoid s{2, {Multiset({1, 1})}};
  CHECK(json(s).get<Submonoid>().generators == s.generators);
}
