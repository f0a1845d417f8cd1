#pragma once

#include <string>
#include <utility>
#include <vector>

#include "prpd/cospan.hpp"

namespace prpd {

// An object of L^op is stored as its elementary zigzag
// A_00 -> A_01 <- A_11 -> ... <- A_nn, which is exactly a Chain.
using LevelObject = Chain;

// Twisted arrow poset of [n]: pairs i <= j, with (i,j) <= (i',j') iff
// i' <= i and j <= j'.
struct TwPoset {
  int n = 0;
  std::vector<std::pair<int, int>> objects() const;
  int index(int i, int j) const;
  bool leq(std::pair<int, int> a, std::pair<int, int> b) const;
};

// Values of the pushout-completed Tw[n]-diagram. Zigzag sets are numbered
// A_kk = 2k and A_{k-1,k} = 2k-1.
struct TwDiagram {
  int n = 0;
  std::vector<int> size;                            // by TwPoset::index
  std::vector<std::vector<std::vector<int>>> cls;   // cls[idx][set][elt], -1 outside
  std::vector<std::vector<std::pair<int, int>>> rep; // rep[idx][class] = (set, elt)

  int value(int i, int j) const { return size[TwPoset{n}.index(i, j)]; }
  // The structure map A_ij -> A_i'j' for [i,j] inside [i',j'].
  FinMap map(int i, int j, int i2, int j2) const;
};
TwDiagram tw_diagram(const LevelObject& x);

struct LevelMorphism {
  LevelObject src;  // B, height m
  LevelObject dst;  // A, height n
  std::vector<int> lambda;   // [m] -> [n]
  std::vector<FinMap> alpha; // B_ij -> A_{lambda i, lambda j}, by TwPoset{m}.index
};

// Validates injectivity, naturality and cartesianness.
LevelMorphism make_level_morphism(LevelObject src, LevelObject dst, std::vector<int> lambda,
                                  std::vector<FinMap> alpha);
// Builds a morphism from its values on elementary entries (B_ii and B_{i,i+1});
// returns false when the data does not extend to a valid morphism.
bool extend_level_morphism(const LevelObject& src, const LevelObject& dst, const std::vector<int>& lambda,
                           const std::vector<FinMap>& elementary, LevelMorphism* out);
LevelMorphism identity_morphism(const LevelObject& x);
// g : C -> B, f : B -> A; result C -> A.
LevelMorphism compose_level_morphisms(const LevelMorphism& g, const LevelMorphism& f);
bool is_inert(const LevelMorphism& f);
bool is_active(const LevelMorphism& f);
bool is_iso(const LevelMorphism& f);
// Returns (inert g : C -> A, active h : B -> C) with f = compose(h, g).
std::pair<LevelMorphism, LevelMorphism> factorize_level(const LevelMorphism& f);
std::vector<LevelMorphism> all_level_morphisms(const LevelObject& src, const LevelObject& dst);

LevelObject active_collapse(const std::vector<int>& lambda, const LevelObject& x);

bool is_elementary(const LevelObject& x);
bool is_connected_level(const LevelObject& x);
// The literal condition |A_nn| = 1.
bool is_connected_literal(const LevelObject& x);
int colimit_size(const LevelObject& x);

// Edges carry at most one source and one target vertex; -1 marks a leg end.
struct LabeledDAG {
  int vertices = 0;
  std::vector<int> edge_src;
  std::vector<int> edge_tgt;
  std::vector<int> edge_color;    // empty: uncoloured
  std::vector<int> vertex_label;  // empty: unlabelled
  std::vector<int> edge_level;    // empty: no leveling
  std::vector<int> vertex_level;
  int height = 0;                 // number of vertex levels when leveled

  int edges() const { return static_cast<int>(edge_src.size()); }
  std::vector<std::vector<int>> in_edges() const;
  std::vector<std::vector<int>> out_edges() const;
  bool is_acyclic() const;
  int components() const;
  bool operator==(const LabeledDAG&) const = default;
  auto operator<=>(const LabeledDAG&) const = default;
};

LabeledDAG realize(const LevelObject& x);
// Inverse of realize on leveled graphs.
LevelObject unrealize(const LabeledDAG& g);
LabeledDAG drop_leveling(LabeledDAG g);
// Least relabelling of vertices and edges; leveling is discarded.
LabeledDAG canonical_dag(const LabeledDAG& g);
LabeledDAG forget_leveling(const LevelObject& x);
std::vector<LabeledDAG> elementary_subgraphs(const LabeledDAG& g);
std::string to_dot(const LabeledDAG& g, const std::string& name = "G");

// All height-n level objects with total size <= bound, exactly as labelled.
std::vector<LevelObject> enumerate_level_objects(int n, int size_bound);

void to_json(json& j, const LabeledDAG& g);
void from_json(const json& j, LabeledDAG& g);
void to_json(json& j, const LevelMorphism& f);

}  // namespace prpd
