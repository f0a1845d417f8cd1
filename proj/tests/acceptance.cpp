// One line per acceptance criterion; exit status 1 if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <memory>
#include <string>

#include "level_checks.hpp"
#include "oracles.hpp"
#include "prpd/segal.hpp"
#include "prpd/verify.hpp"

using namespace prpd;

namespace {

constexpr double kCoherenceSeconds = 60.0;
constexpr double kSuiteSeconds = 300.0;

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
  void require(const Verdict& v, const std::string& what) { require(v.ok, what + " " + json(v).dump()); }
};

Colors mono(int n) { return Colors(n, 0); }
FinMap m(int dom, int cod, std::vector<int> t) { return FinMap(dom, cod, std::move(t)); }

std::vector<std::pair<std::string, FinCommMonoid>> monoids() {
  return {{"trivial", FinCommMonoid::trivial()},
          {"z2", FinCommMonoid::cyclic(2)},
          {"z3", FinCommMonoid::cyclic(3)},
          {"max", FinCommMonoid::max_boolean()}};
}

std::vector<std::pair<std::string, std::shared_ptr<Properad>>> fixture_properads() {
  std::vector<std::pair<std::string, std::shared_ptr<Properad>>> out;
  for (auto& [name, mon] : monoids()) out.emplace_back(name, std::make_shared<EndomorphismProperad>(mon));
  out.emplace_back("binary", std::make_shared<FreeProperad>(1, std::vector<Generator>{{"m", mono(2), mono(1)}}, 3));
  out.emplace_back("split_merge", std::make_shared<FreeProperad>(
                                      1, std::vector<Generator>{{"d", mono(1), mono(2)}, {"m", mono(2), mono(1)}}, 3));
  return out;
}

Outcome cospan_coherence() {
  Outcome o;
  auto t = Clock::now();
  o.require(check_cospan_coherence(2), "coherence");
  double s = since(t);
  o.require(s < kCoherenceSeconds, "took " + std::to_string(s) + "s");
  if (o.ok) o.detail = "sizes <= 2 in " + std::to_string(s) + "s";
  return o;
}

Outcome levelwise_free() {
  Outcome o;
  long chains = 0;
  for (int n = 0; n <= 2; ++n) {
    Verdict v = verify_levelwise_free(n, 4);
    o.require(v, "level " + std::to_string(n));
    chains += v.checked;
  }
  if (o.ok) o.detail = std::to_string(chains) + " chains";
  return o;
}

Outcome span_witness() {
  Outcome o;
  Verdict v = check_pre_properad(span_nerve_data(2, 4));
  o.require(!v.ok && v.kind == "d1_not_free", "span nerve " + json(v).dump());
  if (!v.ok) {
    Span first(m(0, 0, {}), m(0, 1, {})), second(m(0, 1, {}), m(0, 0, {}));
    o.require(v.witness["pair"]["first"].get<Span>() == first && v.witness["pair"]["second"].get<Span>() == second,
              "witness " + v.witness.dump());
  }
  o.require(check_pre_properad(span_nerve_data(2, 4, SpanFilter::RightSurjective)), "surjective spans");
  if (o.ok) o.detail = "witness (0<-0->1, 1<-0->0); surjective spans pass";
  return o;
}

Outcome projective() {
  Outcome o;
  o.require(check_proj_coherence(4), "associativity");
  for (int a = 0; a <= 4; ++a)
    for (int b = 0; a + b <= 4; ++b) {
      std::set<Cospan> homs;
      for (int x = 0; x <= a + b; ++x)
        oracle::for_each_table(a, x, [&](const std::vector<int>& l) {
          oracle::for_each_table(b, x, [&](const std::vector<int>& r) {
            Cospan c(FinMap(a, x, l), FinMap(b, x, r));
            if (is_surjective(copair(c.left, c.right))) homs.insert(normalize_apex(c));
          });
        });
      o.require(homs.size() == oracle::bell(a + b), "bell " + std::to_string(a) + "," + std::to_string(b));
    }
  Span u(m(0, 0, {}), m(0, 1, {})), c(m(0, 1, {}), m(0, 0, {}));
  o.require(span_to_proj(compose_spans(u, c)) == identity_proj(0) &&
                compose_proj(span_to_proj(u), span_to_proj(c)) == identity_proj(0),
            "named composite");
  o.require(check_span_to_proj(2), "span_to_proj functoriality at size 2");
  if (o.ok) o.detail = "associativity, bell bijection, functoriality";
  return o;
}

Outcome endomorphism() {
  Outcome o;
  for (auto& [name, mon] : monoids()) {
    o.require(check_axioms(endomorphism_properad(mon), {3, 2}), name);
    for (int a = 0; a <= 2; ++a)
      for (int b = 0; b <= 2; ++b)
        o.require(hom_count_weighted(a, b, mon) == oracle::weighted_hom_count(a, b, mon.size),
                  name + " hom count " + std::to_string(a) + "," + std::to_string(b));
  }
  o.require(hom_count_weighted(1, 1, FinCommMonoid::cyclic(2)) == 6, "z2 hom count at (1,1)");
  if (o.ok) o.detail = "4 monoids, 3-vertex plans, hom counts";
  return o;
}

Outcome admissible() {
  Outcome o;
  for (int box = 1; box <= 4; ++box) {
    std::set<ArityPair> full, monic, comonic;
    for (int a = 0; a <= box; ++a)
      for (int b = 0; b <= box; ++b) {
        full.insert({a, b});
        if (b == 1) monic.insert({a, b});
        if (a == 1) comonic.insert({a, b});
      }
    for (const auto& s : {std::set<ArityPair>{}, std::set<ArityPair>{{0, 0}}, std::set<ArityPair>{{1, 1}}, monic,
                          comonic, full})
      o.require(is_admissible(s, box).ok, "named case at box " + std::to_string(box));
  }
  auto got = enumerate_admissible(2);
  auto want = oracle::admissible_masks(2);
  o.require(got.size() == want.size(), "count " + std::to_string(got.size()) + " vs " + std::to_string(want.size()));
  for (std::size_t i = 0; o.ok && i < got.size(); ++i) {
    std::uint32_t mask = 0;
    for (auto [a, b] : got[i].pairs) mask |= 1u << (a * 3 + b);
    o.require(mask == want[i], "set " + std::to_string(i));
  }
  if (o.ok) o.detail = std::to_string(got.size()) + " sets at box 2";
  return o;
}

Outcome free_monoids() {
  Outcome o;
  long matrices = 0;
  for (int s = 0; s <= 3; ++s)
    for (int d = 0; d <= 3; ++d)
      oracle::for_each_table(s * d, 3, [&](const std::vector<int>& t) {
        std::vector<Multiset> cols;
        for (int j = 0; j < s; ++j) cols.emplace_back(std::vector<int>(t.begin() + j * d, t.begin() + (j + 1) * d));
        MonHom h(s, d, std::move(cols));
        ++matrices;
        HomClass c = classify_hom(h);
        o.require((c.tag == HomTag::Free) == oracle::splitting_equifibered(h, 3), "classify " + json(h).dump());
        auto [tr, fr] = ctf_eqf_factorize(h);
        o.require(is_transfer(tr) && is_free_hom(fr) && compose(tr, fr) == h, "factorize " + json(h).dump());
        // a second factorization: every way to write h as a sum over a middle
        // of the same size, up to permuting the middle
        if (s > 2 || d > 2) return;
        int k = tr.dst;
        std::multiset<std::pair<int, int>> want;
        for (int i = 0; i < k; ++i) {
          int g = 0, f = 0;
          for (int j = 0; j < s; ++j)
            if (tr.cols[j][i]) g = j;
          for (int r = 0; r < d; ++r)
            if (fr.cols[i][r]) f = r;
          want.insert({g, f});
        }
        oracle::for_each_table(k, s, [&](const std::vector<int>& g) {
          oracle::for_each_table(k, d, [&](const std::vector<int>& f) {
            std::vector<std::vector<int>> mat(s, std::vector<int>(d, 0));
            for (int i = 0; i < k; ++i) ++mat[g[i]][f[i]];
            for (int j = 0; j < s; ++j)
              for (int r = 0; r < d; ++r)
                if (mat[j][r] != h.entry(r, j)) return;
            std::multiset<std::pair<int, int>> got;
            for (int i = 0; i < k; ++i) got.insert({g[i], f[i]});
            o.require(got == want, "uniqueness " + json(h).dump());
          });
        });
      });
  Submonoid even{2, {Multiset({2, 0}), Multiset({1, 1}), Multiset({0, 2})}};
  FreenessVerdict v = is_free_submonoid(even);
  o.require(!v.ok && v.relation && v.relation->first == std::vector<int>{1, 0, 1} &&
                v.relation->second == std::vector<int>{0, 2, 0},
            "even-sum relation");
  if (o.ok) o.detail = std::to_string(matrices) + " matrices; 2(1,1) = (2,0)+(0,2)";
  return o;
}

Outcome free_properads() {
  Outcome o;
  FreeProperad three(1, {{"m", mono(2), mono(1)}}, 3);
  FreeProperad four(1, {{"m", mono(2), mono(1)}}, 4);
  const std::size_t counts[] = {1, 3, 15};
  for (int n = 2; n <= 4; ++n) {
    o.require(three.operations(mono(n), mono(1)).size() == counts[n - 2], "count at " + std::to_string(n));
    o.require(counts[n - 2] == oracle::binary_tree_count(n), "tree oracle at " + std::to_string(n));
  }
  o.require(four.operations(mono(5), mono(1)).size() == 105, "count at 5");
  o.require(is_monic(three), "binary monic");
  o.require(check_axioms(three, {3, 2}), "binary axioms");
  FreeProperad sm(1, {{"d", mono(1), mono(2)}, {"m", mono(2), mono(1)}}, 3);
  auto two_vertex = [&](int k, int l) {
    for (int op : sm.operations(mono(k), mono(l)))
      if (sm.graph(op).label.size() == 2) return true;
    return false;
  };
  o.require(two_vertex(1, 1) && two_vertex(2, 2), "two-vertex operations");
  o.require(!is_monic(sm), "split/merge not monic");
  if (o.ok) o.detail = "1, 3, 15, 105; split/merge has (1,1) and (2,2)";
  return o;
}

Outcome level_graphs() {
  Outcome o;
  LevelObject fig(3, {Cospan(m(3, 2, {0, 0, 0}), m(4, 2, {0, 0, 1, 1})),
                      Cospan(m(4, 3, {0, 2, 0, 2}), m(4, 3, {0, 1, 2, 2}))});
  LabeledDAG g = realize(fig);
  o.require(g.edges() == 11 && g.vertices == 5, "figure sizes");
  o.require(elementary_subgraphs(g).size() == 16, "figure elementaries");
  auto r = checks::check_factorizations(2, 4);
  o.require(r.failure.empty(), "factorization " + r.failure);
  LevelObject stacked(1, {Cospan(m(1, 1, {0}), m(0, 1, {})), Cospan(m(0, 1, {}), m(1, 1, {0}))});
  LevelObject flat(1, {Cospan(m(1, 2, {0}), m(1, 2, {1}))});
  o.require(forget_leveling(stacked) == forget_leveling(flat), "two levelings");
  if (o.ok)
    o.detail = "|E|=11 |V|=5, 16 elementaries; " + std::to_string(r.morphisms) + " morphisms, " +
               std::to_string(r.competitors) + " factorizations";
  return o;
}

Outcome segal_envelope() {
  Outcome o;
  long mutations = 0;
  for (auto& [name, p] : fixture_properads()) {
    TabulatedPresheaf t = induced_presheaf(*p, 4);
    o.require(check_segal(t), name + " segal");
    for (std::size_t i = 0; i < t.entries.size(); ++i)
      for (std::size_t k = 0; k < t.entries[i].restrictions.size(); ++k) {
        const Restriction& res = t.entries[i].restrictions[k];
        for (std::size_t x = 0; x < res.map.size(); ++x)
          for (int y = 0; y < t.entries[res.target].size; ++y) {
            if (y == res.map[x]) continue;
            TabulatedPresheaf u = t;
            u.entries[i].restrictions[k].map[x] = y;
            ++mutations;
            o.require(!check_segal(u).ok, name + " mutation survived");
          }
      }
    o.require(check_pre_properad(envelope_nerve(*p, 2, 4)), name + " envelope");
  }
  if (o.ok) o.detail = "6 properads, " + std::to_string(mutations) + " mutations caught";
  return o;
}

}  // namespace

int main() {
  auto start = Clock::now();
  const std::pair<int, std::function<Outcome()>> criteria[] = {
      {1, cospan_coherence}, {2, levelwise_free}, {3, span_witness},   {4, projective},    {5, endomorphism},
      {6, admissible},       {7, free_monoids},   {8, free_properads}, {9, level_graphs}, {10, segal_envelope}};
  int failed = 0;
  for (const auto& [n, run] : criteria) {
    auto t = Clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    if (n == 10) {
      double total = since(start);
      o.require(total < kSuiteSeconds, "suite took " + std::to_string(total) + "s");
    }
    failed += !o.ok;
    std::printf("criterion %d: %s (%.2fs) %s\n", n, o.ok ? "PASS" : "FAIL", since(t), o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of 10 criteria pass, %.2fs\n", 10 - failed, since(start));
  return failed ? 1 : 0;
}
