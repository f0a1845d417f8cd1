#pragma once

#include <array>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "prpd/cospan.hpp"
#include "prpd/verdict.hpp"

namespace prpd {

using Colors = std::vector<int>;  // sorted colour multiset

struct OpSig {
  Colors in;
  Colors out;
  bool operator==(const OpSig&) const = default;
  auto operator<=>(const OpSig&) const = default;
};

// (output leg of o, input leg of p), sorted by the first entry.
using Matching = std::vector<std::pair<int, int>>;

// Raised when a composite falls outside what a presentation can represent.
struct OutOfRange : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Legs of a binary gluing o #_m p: each leg of the result is traced back to
// (operand, leg) with operand 0 = o and 1 = p. Inputs are o's inputs followed
// by p's unmatched inputs, outputs are o's unmatched outputs followed by p's
// outputs; both lists are then stably sorted by colour.
struct GlueLegs {
  OpSig sig;
  std::vector<std::pair<int, int>> in;
  std::vector<std::pair<int, int>> out;
};
GlueLegs glue_legs(const OpSig& o, const OpSig& p, const Matching& m);
void validate_matching(const OpSig& o, const OpSig& p, const Matching& m);

// Operations carry numbered legs; permute(op, pi, po) is the operation whose
// k-th input is input pi[k] of op (likewise for outputs).
class Properad {
 public:
  virtual ~Properad() = default;
  virtual int color_count() const = 0;
  virtual std::vector<int> operations(const Colors& in, const Colors& out) const = 0;
  virtual OpSig signature(int op) const = 0;
  virtual int identity(int color) const = 0;
  virtual int glue(int o, int p, const Matching& m) const = 0;
  virtual int permute(int op, const std::vector<int>& in_perm, const std::vector<int>& out_perm) const = 0;
  virtual std::string op_name(int op) const;
};

// Finitely tabulated properad. Gluings and leg permutations not listed in the
// tables raise OutOfRange and leave an operation fixed, respectively.
class DiscreteProperad : public Properad {
 public:
  int colors = 0;
  std::vector<OpSig> ops;
  std::vector<std::string> names;
  std::vector<int> identities;
  std::map<std::tuple<int, int, Matching>, int> gluing;
  std::map<std::tuple<int, std::vector<int>, std::vector<int>>, int> action;

  int add_op(OpSig sig, std::string name);

  int color_count() const override { return colors; }
  std::vector<int> operations(const Colors& in, const Colors& out) const override;
  OpSig signature(int op) const override { return ops.at(op); }
  int identity(int color) const override { return identities.at(color); }
  int glue(int o, int p, const Matching& m) const override;
  int permute(int op, const std::vector<int>& in_perm, const std::vector<int>& out_perm) const override;
  std::string op_name(int op) const override;
};

// Endomorphism properad of a commutative monoid: one colour, P(k;l) = M.
class EndomorphismProperad : public Properad {
 public:
  static constexpr int kMaxLegs = 16;
  explicit EndomorphismProperad(FinCommMonoid m) : m_(std::move(m)) {}

  const FinCommMonoid& monoid() const { return m_; }
  int encode(int k, int l, int label) const;
  std::array<int, 3> decode(int op) const;
  // The connected weighted cospan k -> * <- l representing op.
  WeightedCospan corolla(int op) const;

  int color_count() const override { return 1; }
  std::vector<int> operations(const Colors& in, const Colors& out) const override;
  OpSig signature(int op) const override;
  int identity(int color) const override;
  int glue(int o, int p, const Matching& m) const override;
  int permute(int op, const std::vector<int>&, const std::vector<int>&) const override { return op; }
  std::string op_name(int op) const override;

 private:
  FinCommMonoid m_;
};

EndomorphismProperad endomorphism_properad(const FinCommMonoid& m);

// All colour multisets of size <= max_legs.
std::vector<Colors> color_multisets(int colors, int max_legs);
std::vector<int> all_operations(const Properad& p, int max_legs);

int compose_ops(const Properad& p, int o, int q, const Matching& m);

// Evaluates a connected acyclic plan by iterated binary gluing in the first
// admissible order. Edges are (v, output leg, w, input leg); the legs of the
// result are traced back to (vertex, leg).
struct PlanValue {
  int op;
  std::vector<std::pair<int, int>> in, out;
};
PlanValue evaluate_plan(const Properad& p, const std::vector<int>& ops, const std::vector<std::array<int, 4>>& edges);

struct AxiomOptions {
  int max_vertices = 3;
  int max_legs = 2;
};
Verdict check_axioms(const Properad& p, AxiomOptions opt = {});

bool is_monic(const Properad& p, int max_legs = 4);

Cospan shape_map(const Properad& p, int op);
// The composite in Csp of the shapes of o and q glued along m, with boundary
// ordered as in glue_legs.
Cospan shape_of_gluing(const OpSig& o, const OpSig& q, const Matching& m);

// Copies all operations with at most max_legs legs on each side, together with
// every gluing and leg permutation among them.
DiscreteProperad tabulate(const Properad& p, int max_legs);

using ArityPair = std::pair<int, int>;

struct AdmissibleSet {
  int box = 0;
  std::set<ArityPair> pairs;
  bool is_empty_case = false;
  bool is_nullary_case = false;
  bool has_unit = false;
};

struct AdmissibleVerdict {
  bool ok = true;
  std::string kind;                    // "unit" or "composite"
  std::array<int, 4> witness{0, 0, 0, 0};  // (a, b, c, k)
};

AdmissibleVerdict is_admissible(const std::set<ArityPair>& s, int box);
std::vector<AdmissibleSet> enumerate_admissible(int box);

void to_json(json& j, const OpSig& s);
void to_json(json& j, const DiscreteProperad& p);
void from_json(const json& j, DiscreteProperad& p);
void to_json(json& j, const AdmissibleSet& s);

}  // namespace prpd
