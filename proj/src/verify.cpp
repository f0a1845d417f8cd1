#include "prpd/verify.hpp"

#include <functional>
#include <set>

#include "prpd/freemon.hpp"
#include "prpd/properad.hpp"
#include "prpd/segal.hpp"

namespace prpd {

namespace {

void for_each_table(int dom, int cod, const std::function<void(const FinMap&)>& fn) {
  if (dom > 0 && cod == 0) return;
  std::vector<int> t(dom, 0);
  while (true) {
    fn(FinMap(dom, cod, t));
    int i = 0;
    while (i < dom && ++t[i] == cod) t[i++] = 0;
    if (i == dom) return;
  }
}

bool jointly_surjective(const Cospan& c) {
  std::vector<char> hit(c.apex(), 0);
  for (int v : c.left.table) hit[v] = 1;
  for (int v : c.right.table) hit[v] = 1;
  for (char h : hit)
    if (!h) return false;
  return true;
}

// Normalized projective cospans of every boundary pair with |A| + |B| <= total.
std::vector<ProjCospan> proj_cospans(int total) {
  std::set<Cospan> seen;
  for (int a = 0; a <= total; ++a)
    for (int b = 0; a + b <= total; ++b)
      for (int x = 0; x <= a + b; ++x)
        for_each_table(a, x, [&](const FinMap& l) {
          for_each_table(b, x, [&](const FinMap& r) {
            Cospan c(l, r);
            if (jointly_surjective(c)) seen.insert(normalize_apex(c));
          });
        });
  std::vector<ProjCospan> out;
  for (const Cospan& c : seen) out.emplace_back(c);
  return out;
}

json entry(const std::string& name, const Verdict& v) { return json{{"name", name}, {"ok", v.ok}, {"verdict", v}}; }

}  // namespace

std::vector<Cospan> all_cospans(int max_size) {
  std::vector<Cospan> out;
  for (int a = 0; a <= max_size; ++a)
    for (int b = 0; b <= max_size; ++b)
      for (int x = 0; x <= max_size; ++x)
        for_each_table(a, x, [&](const FinMap& l) {
          for_each_table(b, x, [&](const FinMap& r) { out.emplace_back(l, r); });
        });
  return out;
}

Verdict check_cospan_coherence(int max_size) {
  std::vector<Cospan> all = all_cospans(max_size);
  std::vector<std::vector<const Cospan*>> by_source(max_size + 1);
  for (const Cospan& c : all) by_source[c.source()].push_back(&c);
  std::int64_t checked = 0;
  for (const Cospan& a : all) {
    Cospan na = normalize_apex(a);
    ++checked;
    if (compose_cospans(identity_cospan(a.source()), a) != na || compose_cospans(a, identity_cospan(a.target())) != na)
      return Verdict::fail("unitality", {{"cospan", a}}, checked);
  }
  for (const Cospan& a : all)
    for (const Cospan* b : by_source[a.target()]) {
      Cospan ab = compose_cospans(a, *b);
      for (const Cospan* c : by_source[b->target()]) {
        ++checked;
        if (compose_cospans(ab, *c) != compose_cospans(a, compose_cospans(*b, *c)))
          return Verdict::fail("associativity", {{"cospans", {a, *b, *c}}}, checked);
      }
    }
  std::vector<std::pair<const Cospan*, const Cospan*>> pairs;
  for (const Cospan& a : all)
    for (const Cospan* b : by_source[a.target()]) pairs.push_back({&a, b});
  for (const auto& [a, c] : pairs) {
    Cospan ac = compose_cospans(*a, *c);
    for (const auto& [b, d] : pairs) {
      ++checked;
      Cospan lhs = compose_cospans(monoidal_sum(*a, *b), monoidal_sum(*c, *d));
      Cospan rhs = normalize_apex(monoidal_sum(ac, compose_cospans(*b, *d)));
      if (lhs != rhs) return Verdict::fail("interchange", {{"cospans", {*a, *b, *c, *d}}}, checked);
    }
  }
  return Verdict::pass(checked);
}

Verdict check_proj_coherence(int max_total) {
  std::vector<ProjCospan> all = proj_cospans(max_total);
  std::int64_t checked = 0;
  for (const ProjCospan& p : all) {
    ++checked;
    if (compose_proj(identity_proj(p.c.source()), p) != p || compose_proj(p, identity_proj(p.c.target())) != p)
      return Verdict::fail("unitality", {{"cospan", p}}, checked);
  }
  for (const ProjCospan& p : all)
    for (const ProjCospan& q : all) {
      if (q.c.source() != p.c.target()) continue;
      ProjCospan pq = compose_proj(p, q);
      for (const ProjCospan& r : all) {
        if (r.c.source() != q.c.target()) continue;
        ++checked;
        if (compose_proj(pq, r) != compose_proj(p, compose_proj(q, r)))
          return Verdict::fail("associativity", {{"cospans", {p, q, r}}}, checked);
      }
    }
  return Verdict::pass(checked);
}

Verdict check_span_to_proj(int max_size) {
  std::vector<Span> all;
  for (int a = 0; a <= max_size; ++a)
    for (int b = 0; b <= max_size; ++b)
      for (int x = 0; x <= max_size; ++x)
        for_each_table(x, a, [&](const FinMap& l) {
          for_each_table(x, b, [&](const FinMap& r) { all.emplace_back(l, r); });
        });
  std::int64_t checked = 0;
  for (int n = 0; n <= max_size; ++n) {
    ++checked;
    if (span_to_proj(identity_span(n)) != identity_proj(n))
      return Verdict::fail("identity", {{"size", n}}, checked);
  }
  for (const Span& s : all)
    for (const Span& t : all) {
      if (t.source() != s.target()) continue;
      ++checked;
      if (span_to_proj(compose_spans(s, t)) != compose_proj(span_to_proj(s), span_to_proj(t)))
        return Verdict::fail("composition", {{"spans", {s, t}}}, checked);
    }
  return Verdict::pass(checked);
}

json verify_all(int bound) {
  if (bound < 1) throw std::invalid_argument("verify-all: bound must be positive");
  json checks = json::array();
  bool ok = true;
  auto add = [&](json e) {
    ok = ok && e["ok"].get<bool>();
    checks.push_back(std::move(e));
  };
  int small = std::min(bound, 2);
  int mid = std::min(bound + 2, 4);
  add(entry("cospan_coherence", check_cospan_coherence(small)));
  for (int n = 0; n <= 2; ++n) add(entry("levelwise_free_" + std::to_string(n), verify_levelwise_free(n, mid)));
  add(entry("proj_coherence", check_proj_coherence(mid)));
  add(entry("span_to_proj", check_span_to_proj(small)));
  {
    Verdict v = check_pre_properad(span_nerve_data(2, mid));
    json e = entry("span_nerve_fails", v);
    e["ok"] = !v.ok && v.kind == "d1_not_free";
    add(e);
    add(entry("surjective_span_nerve", check_pre_properad(span_nerve_data(2, mid, SpanFilter::RightSurjective))));
  }
  AxiomOptions opt{std::min(bound + 1, 3), 2};
  const std::pair<const char*, FinCommMonoid> monoids[] = {{"trivial", FinCommMonoid::trivial()},
                                                           {"z2", FinCommMonoid::cyclic(2)},
                                                           {"z3", FinCommMonoid::cyclic(3)},
                                                           {"max", FinCommMonoid::max_boolean()}};
  for (const auto& [name, m] : monoids)
    add(entry(std::string("endomorphism_") + name, check_axioms(endomorphism_properad(m), opt)));
  {
    int box = std::min(bound + 1, 6);
    std::set<ArityPair> full, outputs, inputs;
    for (int a = 0; a <= box; ++a) {
      outputs.insert({a, 1});
      inputs.insert({1, a});
      for (int b = 0; b <= box; ++b) full.insert({a, b});
    }
    const std::set<ArityPair> named[] = {{}, {{0, 0}}, {{1, 1}}, outputs, inputs, full};
    Verdict v = Verdict::pass();
    for (const auto& s : named) {
      ++v.checked;
      if (!is_admissible(s, box).ok) {
        json pairs = json::array();
        for (auto [a, b] : s) pairs.push_back({a, b});
        v = Verdict::fail("not_admissible", {{"pairs", pairs}}, v.checked);
        break;
      }
    }
    add(entry("admissible_named_cases", v));
  }
  {
    Submonoid even{2, {Multiset({2, 0}), Multiset({1, 1}), Multiset({0, 2})}};
    FreenessVerdict f = is_free_submonoid(even);
    Verdict v = f.ok ? Verdict::fail("even_sum_reported_free", json::object()) : Verdict::pass(1);
    add(entry("even_sum_submonoid_not_free", v));
  }
  {
    FreeProperad fp(1, {{"g", {0, 0}, {0}}}, std::min(bound + 1, 4));
    Verdict v = is_monic(fp) ? check_axioms(fp, {std::min(bound + 1, 3), 3}) : Verdict::fail("not_monic", {});
    add(entry("free_properad_binary", v));
    add(entry("free_properad_envelope", check_pre_properad(envelope_nerve(fp, 2, mid))));
  }
  add(entry("segal_induced_z2", check_segal(induced_presheaf(endomorphism_properad(FinCommMonoid::cyclic(2)),
                                                             std::min(bound + 1, 3)))));
  return json{{"bound", bound}, {"ok", ok}, {"checks", checks}};
}

}  // namespace prpd
