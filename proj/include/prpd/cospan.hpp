#pragma once

#include <cstdint>
#include <vector>

#include "prpd/finset.hpp"
#include "prpd/verdict.hpp"

namespace prpd {

// A -> X <- B
struct Cospan {
  FinMap left;
  FinMap right;

  Cospan() = default;
  Cospan(FinMap left, FinMap right);
  int source() const { return left.dom; }
  int target() const { return right.dom; }
  int apex() const { return left.cod; }
  bool operator==(const Cospan&) const = default;
  auto operator<=>(const Cospan&) const = default;
};

// A <- X -> B
struct Span {
  FinMap left;
  FinMap right;

  Span() = default;
  Span(FinMap left, FinMap right);
  int source() const { return left.cod; }
  int target() const { return right.cod; }
  int apex() const { return left.dom; }
  bool operator==(const Span&) const = default;
  auto operator<=>(const Span&) const = default;
};

// A_0 -> M_1 <- A_1 -> ... <- A_n, stored as its n cospans.
struct Chain {
  int base = 0;  // |A_0|, needed when n = 0
  std::vector<Cospan> steps;

  Chain() = default;
  explicit Chain(int a0) : base(a0) {}
  explicit Chain(std::vector<Cospan> steps);
  Chain(int a0, std::vector<Cospan> steps);

  int height() const { return static_cast<int>(steps.size()); }
  int boundary(int i) const { return i == 0 ? base : steps[i - 1].target(); }
  int apex(int i) const { return steps[i - 1].apex(); }  // M_i, 1 <= i <= n
  int total_size() const;
  bool operator==(const Chain&) const = default;
  auto operator<=>(const Chain&) const = default;
};

struct ProjCospan {
  Cospan c;

  ProjCospan() = default;
  explicit ProjCospan(Cospan c);
  bool operator==(const ProjCospan&) const = default;
  auto operator<=>(const ProjCospan&) const = default;
};

struct FinCommMonoid {
  int size = 1;
  std::vector<std::vector<int>> table{{0}};
  int zero = 0;

  FinCommMonoid() = default;
  FinCommMonoid(int size, std::vector<std::vector<int>> table, int zero);
  int add(int a, int b) const { return table[a][b]; }

  static FinCommMonoid trivial();
  static FinCommMonoid cyclic(int n);
  static FinCommMonoid max_boolean();  // ({0,1}, max)
};

struct WeightedCospan {
  Cospan c;
  std::vector<int> labels;  // one per apex element

  WeightedCospan() = default;
  WeightedCospan(Cospan c, std::vector<int> labels);
  bool operator==(const WeightedCospan&) const = default;
  auto operator<=>(const WeightedCospan&) const = default;
};

template <class T>
struct Canonical {
  T form;
  std::uint64_t aut_order;
};

constexpr int kDefaultCanonBound = 8;

Cospan identity_cospan(int n);
// Renumbers the apex by first occurrence along left then right; unused apex
// points go last. Boundaries are untouched.
Cospan normalize_apex(const Cospan& c);
WeightedCospan normalize_apex(const WeightedCospan& w);
Chain normalize_apex(const Chain& ch);

// c1 : A -> B, c2 : B -> C, composite A -> C.
Cospan compose_cospans(const Cospan& c1, const Cospan& c2);
Cospan monoidal_sum(const Cospan& u, const Cospan& v);
Chain monoidal_sum(const Chain& u, const Chain& v);

Span identity_span(int n);
Span compose_spans(const Span& s1, const Span& s2);

Canonical<Cospan> canonicalize(const Cospan& c, int bound = kDefaultCanonBound);
Canonical<Span> canonicalize(const Span& s, int bound = kDefaultCanonBound);
Canonical<Chain> canonicalize(const Chain& ch, int bound = kDefaultCanonBound);
Canonical<WeightedCospan> canonicalize(const WeightedCospan& w, int bound = kDefaultCanonBound);

bool is_monotone(const std::vector<int>& lambda, int n);
// lambda : [m] -> [n] given by its values; ch has height n.
Chain simplicial_act(const std::vector<int>& lambda, const Chain& ch);
Chain face(int i, const Chain& ch);
Chain degeneracy(int i, const Chain& ch);
// All active monotone maps [m] -> [n] for m <= max_m.
std::vector<std::vector<int>> active_maps(int n, int max_m);

// Points of the zigzag colimit A_{0n}: component index of each element,
// listed per set in order A_0, M_1, A_1, ..., M_n, A_n.
struct ChainComponents {
  int count = 0;
  std::vector<std::vector<int>> of_set;
};
ChainComponents chain_components(const Chain& ch);
bool is_connected(const Chain& ch);
std::vector<Chain> decompose_chain(const Chain& ch);

// All iso classes (canonical forms) of height-n chains with total size <= bound.
std::vector<Chain> enumerate_chains(int n, int size_bound);
Verdict verify_levelwise_free(int n, int size_bound);

ProjCospan identity_proj(int n);
ProjCospan compose_proj(const ProjCospan& p1, const ProjCospan& p2);
ProjCospan span_to_proj(const Span& s);

WeightedCospan compose_weighted(const FinCommMonoid& m, const WeightedCospan& w1,
                                const WeightedCospan& w2);
WeightedCospan monoidal_sum(const WeightedCospan& u, const WeightedCospan& v);
WeightedCospan identity_weighted(const FinCommMonoid& m, int n);
std::uint64_t hom_count_weighted(int a_size, int b_size, const FinCommMonoid& m);

void to_json(json& j, const Cospan& c);
void from_json(const json& j, Cospan& c);
void to_json(json& j, const Span& s);
void from_json(const json& j, Span& s);
void to_json(json& j, const Chain& ch);
void from_json(const json& j, Chain& ch);
void to_json(json& j, const ProjCospan& p);
void from_json(const json& j, ProjCospan& p);
void to_json(json& j, const FinCommMonoid& m);
void from_json(const json& j, FinCommMonoid& m);
void to_json(json& j, const WeightedCospan& w);
void from_json(const json& j, WeightedCospan& w);

}  // namespace prpd
