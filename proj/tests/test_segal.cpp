#include <doctest.h>

#include <memory>

#include "prpd/segal.hpp"

using namespace prpd;

namespace {

Colors mono(int n) { return Colors(n, 0); }

struct Fixture {
  std::string name;
  std::shared_ptr<Properad> p;
};

std::vector<Fixture> fixtures() {
  std::vector<Fixture> out;
  out.push_back({"trivial", std::make_shared<EndomorphismProperad>(FinCommMonoid::trivial())});
  out.push_back({"z2", std::make_shared<EndomorphismProperad>(FinCommMonoid::cyclic(2))});
  out.push_back({"z3", std::make_shared<EndomorphismProperad>(FinCommMonoid::cyclic(3))});
  out.push_back({"max", std::make_shared<EndomorphismProperad>(FinCommMonoid::max_boolean())});
  out.push_back({"binary", std::make_shared<FreeProperad>(1, std::vector<Generator>{{"m", mono(2), mono(1)}}, 3)});
  out.push_back({"split_merge", std::make_shared<FreeProperad>(
                                    1, std::vector<Generator>{{"d", mono(1), mono(2)}, {"m", mono(2), mono(1)}}, 3)});
  return out;
}

// Product over vertices of the number of operations of the vertex arity.
std::int64_t vertexwise_count(const Properad& p, const LabeledDAG& g) {
  auto ins = g.in_edges(), outs = g.out_edges();
  std::int64_t n = 1;
  for (int v = 0; v < g.vertices; ++v)
    n *= static_cast<std::int64_t>(
        p.operations(mono(static_cast<int>(ins[v].size())), mono(static_cast<int>(outs[v].size()))).size());
  return n;
}

}  // namespace

TEST_CASE("values at graphs are products over vertices") {
  for (const auto& f : fixtures())
    for (int n = 0; n <= 2; ++n)
      for (const auto& x : enumerate_chains(n, 4)) {
        LabeledDAG g = realize(x);
        CHECK(value_count(*f.p, g) == vertexwise_count(*f.p, g));
        CHECK(static_cast<std::int64_t>(value_at_graph(*f.p, g).size()) == value_count(*f.p, g));
      }
}

TEST_CASE("induced presheaves are segal") {
  for (const auto& f : fixtures()) {
    TabulatedPresheaf t = induced_presheaf(*f.p, 4);
    Verdict v = check_segal(t);
    CHECK_MESSAGE(v.ok, f.name << " " << json(v).dump());
    CHECK(v.checked == static_cast<std::int64_t>(t.entries.size()));
  }
}

TEST_CASE("every single-value mutation of a restriction is caught") {
  for (const auto& f : fixtures()) {
    TabulatedPresheaf t = induced_presheaf(*f.p, 4);
    long mutations = 0, missed = 0;
    for (std::size_t i = 0; i < t.entries.size(); ++i)
      for (std::size_t r = 0; r < t.entries[i].restrictions.size(); ++r) {
        const Restriction& res = t.entries[i].restrictions[r];
        int range = t.entries[res.target].size;
        for (std::size_t x = 0; x < res.map.size(); ++x)
          for (int y = 0; y < range; ++y) {
            if (y == res.map[x]) continue;
            TabulatedPresheaf u = t;
            u.entries[i].restrictions[r].map[x] = y;
            ++mutations;
            missed += check_segal(u).ok;
          }
      }
    CHECK_MESSAGE(missed == 0, f.name);
    int widest = 0;
    for (const auto& e : t.entries) widest = std::max(widest, e.size);
    // with every value a singleton there is nothing to mutate
    CHECK((mutations > 0) == (widest > 1));
  }
}

TEST_CASE("size changes are caught") {
  TabulatedPresheaf t = induced_presheaf(EndomorphismProperad(FinCommMonoid::cyclic(2)), 3);
  int i = 0;
  while (t.entries[i].object.height() != 2) ++i;
  TabulatedPresheaf u = t;
  u.entries[i].size += 1;
  for (auto& r : u.entries[i].restrictions) r.map.push_back(r.map.back());
  Verdict v = check_segal(u);
  CHECK(!v.ok);
  CHECK(v.kind == "segmentation");
  TabulatedPresheaf w = t;
  w.entries[i].restrictions.pop_back();
  CHECK(!check_segal(w).ok);
}

TEST_CASE("presheaf json round trip") {
  TabulatedPresheaf t = induced_presheaf(EndomorphismProperad(FinCommMonoid::cyclic(2)), 3);
  TabulatedPresheaf u = json(t).get<TabulatedPresheaf>();
  REQUIRE(u.entries.size() == t.entries.size());
  CHECK(check_segal(u).ok);
  CHECK(json(u) == json(t));
  CHECK(u.find(t.entries[5].object) == 5);
}

TEST_CASE("envelopes are pre-properads") {
  for (const auto& f : fixtures()) {
    SimplicialMonoidData d = envelope_nerve(*f.p, 2, 4);
    CHECK(d.levels == 2);
    Verdict v = check_pre_properad(d);
    CHECK_MESSAGE(v.ok, f.name << " " << json(v).dump());
  }
}

TEST_CASE("envelope data survives json") {
  SimplicialMonoidData d = envelope_nerve(EndomorphismProperad(FinCommMonoid::cyclic(2)), 2, 3);
  SimplicialMonoidData e = json(d).get<SimplicialMonoidData>();
  CHECK(json(e) == json(d));
  CHECK(check_pre_properad(e).ok);
}

TEST_CASE("a broken face is caught") {
  SimplicialMonoidData d = envelope_nerve(EndomorphismProperad(FinCommMonoid::trivial()), 2, 3);
  REQUIRE(d.faces.size() > 1);
  std::swap(d.faces[1][0], d.faces[1][1]);
  CHECK(!check_pre_properad(d).ok);
}

TEST_CASE("the span nerve is not a pre-properad") {
  Verdict v = check_pre_properad(span_nerve_data(2, 4));
  REQUIRE(!v.ok);
  CHECK(v.kind == "d1_not_free");
  // (empty <- empty -> *) then (* <- empty -> empty) composes to the empty span
  Span first(FinMap(0, 0, {}), FinMap(0, 1, {}));
  Span second(FinMap(0, 1, {}), FinMap(0, 0, {}));
  CHECK(v.witness.at("pair").at("first").get<Span>() == first);
  CHECK(v.witness.at("pair").at("second").get<Span>() == second);
  CHECK(compose_spans(first, second) == identity_span(0));
}

TEST_CASE("surjective spans form a pre-properad") {
  CHECK(check_pre_properad(span_nerve_data(2, 4, SpanFilter::RightSurjective)).ok);
  CHECK(check_pre_properad(span_nerve_data(2, 4, SpanFilter::BothSurjective)).ok);
}

TEST_CASE("right-surjective spans stop being free at size 5") {
  // ({a1,a2} <- {p1,p2} ->> *) then (* <- empty ->> empty) has a split composite
  Verdict v = check_pre_properad(span_nerve_data(2, 5, SpanFilter::RightSurjective));
  REQUIRE(!v.ok);
  CHECK(v.kind == "d1_not_free");
  CHECK(v.witness.at("pair").at("first").get<Span>() == Span(FinMap(2, 2, {0, 1}), FinMap(2, 1, {0, 0})));
  CHECK(v.witness.at("pair").at("second").get<Span>() == Span(FinMap(0, 1, {}), FinMap(0, 0, {})));
  CHECK(v.witness.at("image") == json::array({2, 0, 0, 0, 0, 0}));
  CHECK(check_pre_properad(span_nerve_data(2, 5, SpanFilter::BothSurjective)).ok);
}

TEST_CASE("completeness") {
  Verdict z2 = check_complete(EndomorphismProperad(FinCommMonoid::cyclic(2)));
  CHECK(!z2.ok);
  CHECK(z2.kind == "invertible");
  CHECK(!is_complete(EndomorphismProperad(FinCommMonoid::cyclic(3))));
  CHECK(is_complete(EndomorphismProperad(FinCommMonoid::trivial())));
  CHECK(is_complete(EndomorphismProperad(FinCommMonoid::max_boolean())));
  CHECK(is_complete(FreeProperad(1, {{"m", mono(2), mono(1)}}, 3)));
  CHECK(is_complete(FreeProperad(1, {{"u", mono(1), mono(1)}}, 3)));
}

TEST_CASE("free operations are canonical graphs") {
  FreeProperad p(1, {{"m", mono(2), mono(1)}}, 3);
  for (int op = 0; op < p.size(); ++op) {
    const FreeOp& g = p.graph(op);
    CHECK(canonical_free_op(g) == g);
    CHECK(static_cast<int>(g.label.size()) <= p.vertex_bound());
  }
  CHECK_THROWS(FreeProperad(1, {{"bad", mono(1), {1}}}, 2));
}
