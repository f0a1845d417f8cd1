#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "prpd/freemon.hpp"
#include "prpd/levelgraph.hpp"
#include "prpd/properad.hpp"

namespace prpd {

struct Generator {
  std::string name;
  Colors in;
  Colors out;
};

// Connected DAG with numbered legs. Edge ends are vertices (>= 0) or legs,
// written -1 - k for input leg k (as a source) or output leg k (as a target).
// Half-edges at a vertex are unordered.
struct FreeOp {
  int inputs = 0;
  int outputs = 0;
  std::vector<int> label;  // generator per vertex
  std::vector<std::array<int, 3>> edges;  // (src, tgt, colour), sorted
  auto operator<=>(const FreeOp&) const = default;
};

class FreeProperad : public Properad {
 public:
  static constexpr int kDefaultVertexBound = 4;
  FreeProperad(int colors, std::vector<Generator> gens, int vertex_bound = kDefaultVertexBound);

  const FreeOp& graph(int op) const { return ops_.at(op); }
  const std::vector<Generator>& generators() const { return gens_; }
  int vertex_bound() const { return bound_; }
  int size() const { return static_cast<int>(ops_.size()); }

  int color_count() const override { return colors_; }
  std::vector<int> operations(const Colors& in, const Colors& out) const override;
  OpSig signature(int op) const override { return sigs_.at(op); }
  int identity(int color) const override { return identities_.at(color); }
  int glue(int o, int p, const Matching& m) const override;
  int permute(int op, const std::vector<int>& in_perm, const std::vector<int>& out_perm) const override;
  std::string op_name(int op) const override;

 private:
  int intern(FreeOp g);
  int lookup(const FreeOp& g) const;
  FreeOp glue_graph(int o, int p, const Matching& m) const;
  FreeOp permute_graph(int op, const std::vector<int>& in_perm, const std::vector<int>& out_perm) const;

  int colors_;
  std::vector<Generator> gens_;
  int bound_;
  std::vector<FreeOp> ops_;
  std::vector<OpSig> sigs_;
  std::map<FreeOp, int> index_;
  std::map<OpSig, std::vector<int>> by_sig_;
  std::vector<int> identities_;
};

FreeOp canonical_free_op(const FreeOp& g);
void to_json(json& j, const FreeOp& g);

// One element of the value at a graph: a colour per edge and an operation per
// vertex, its legs matched with the incident edges sorted by (colour, edge).
struct GraphElement {
  std::vector<int> colors;
  std::vector<int> ops;
  auto operator<=>(const GraphElement&) const = default;
};

constexpr std::int64_t kValueBound = 1000000;
// Edge colours are taken from g.edge_color when present, otherwise summed over.
std::vector<GraphElement> value_at_graph(const Properad& p, const LabeledDAG& g);
std::int64_t value_count(const Properad& p, const LabeledDAG& g);

struct Restriction {
  std::string role;  // "seg:j", "lvl:j" or "comp:a"
  int target = 0;
  std::vector<int> map;
};

struct PresheafEntry {
  LevelObject object;
  int size = 0;
  std::vector<Restriction> restrictions;
};

// Finite set-valued presheaf tabulated on objects of height <= 2, with the
// restriction maps to segments, levels and connected components.
struct TabulatedPresheaf {
  std::vector<PresheafEntry> entries;
  int find(const LevelObject& x) const;
};

// Objects: canonical representatives with height <= 2 and total size <= bound,
// X + X for every connected one of height <= 1, and all their pieces.
std::vector<LevelObject> presheaf_objects(int size_bound);
TabulatedPresheaf induced_presheaf(const Properad& p, int size_bound);
Verdict check_segal(const TabulatedPresheaf& t);

struct SegalPair {
  Multiset first;   // d2 of the generator
  Multiset second;  // d0 of the generator
  int generator = 0;
  json pair;        // the two pieces as exact objects sharing the middle boundary
};

struct SimplicialMonoidData {
  int levels = 0;
  std::vector<std::vector<json>> generators;
  std::vector<std::vector<MonHom>> faces;         // faces[n][i] : level n -> n-1
  std::vector<std::vector<MonHom>> degeneracies;  // degeneracies[n][i] : level n -> n+1
  std::vector<SegalPair> segal_pairs;
};

// Chains whose vertices carry operations and edges carry colours.
struct LabeledChain {
  Chain shape;
  std::vector<std::vector<int>> colors;  // per boundary set A_j
  std::vector<std::vector<int>> ops;     // per apex M_j, j = 1..n
  auto operator<=>(const LabeledChain&) const = default;
};

LabeledChain canonical_labeled(const Properad& p, const LabeledChain& x);
std::vector<LabeledChain> labeled_components(const LabeledChain& x);
LabeledChain labeled_face(const Properad& p, int i, const LabeledChain& x);
LabeledChain labeled_degeneracy(const Properad& p, int i, const LabeledChain& x);

SimplicialMonoidData envelope_nerve(const Properad& p, int max_level = 2, int size_bound = 4);

// A_0 <- X_1 -> A_1 <- ... -> A_n
struct SpanChain {
  int base = 0;
  std::vector<Span> steps;
  int height() const { return static_cast<int>(steps.size()); }
  int boundary(int i) const { return i == 0 ? base : steps[i - 1].target(); }
  auto operator<=>(const SpanChain&) const = default;
};

enum class SpanFilter { All, RightSurjective, BothSurjective };
SimplicialMonoidData span_nerve_data(int max_level, int size_bound, SpanFilter f = SpanFilter::All);

Verdict check_pre_properad(const SimplicialMonoidData& d);

// Searches the (1,1) part for non-identity invertible operations.
Verdict check_complete(const Properad& p);
bool is_complete(const Properad& p);

void to_json(json& j, const GraphElement& e);
void to_json(json& j, const TabulatedPresheaf& t);
void from_json(const json& j, TabulatedPresheaf& t);
void to_json(json& j, const SimplicialMonoidData& d);
void from_json(const json& j, SimplicialMonoidData& d);
void to_json(json& j, const LabeledChain& x);
void to_json(json& j, const SpanChain& s);
void from_json(const json& j, Generator& g);
void to_json(json& j, const Generator& g);

}  // namespace prpd
