#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <json.hpp>

namespace prpd {

using json = nlohmann::json;

// Skeletal finite set {0, ..., size-1}.
struct FinSet {
  int size = 0;
  bool operator==(const FinSet&) const = default;
};

struct FinMap {
  int dom = 0;
  int cod = 0;
  std::vector<int> table;

  FinMap() = default;
  FinMap(int dom, int cod, std::vector<int> table);

  int operator()(int x) const { return table[x]; }
  bool operator==(const FinMap&) const = default;
  auto operator<=>(const FinMap&) const = default;
};

// Pointed set of size n+1 with basepoint 0; `underlying` is the full map.
struct PointedMap {
  FinMap underlying;

  PointedMap() = default;
  explicit PointedMap(FinMap f);
  bool operator==(const PointedMap&) const = default;
};

FinMap identity(int n);
FinMap empty_map(int cod);
FinMap constant(int dom, int cod, int value);

// g after f; requires f.cod == g.dom.
FinMap compose(const FinMap& f, const FinMap& g);

bool is_injective(const FinMap& f);
bool is_surjective(const FinMap& f);
bool is_bijection(const FinMap& f);
FinMap inverse(const FinMap& f);

// Fibers f^{-1}(y) as sorted index lists.
std::vector<std::vector<int>> fibers(const FinMap& f);

struct Coproduct {
  int size;
  FinMap inl, inr;
};
Coproduct coproduct(int x, int y);

// Copairing [f, g]: X + Y -> Z.
FinMap copair(const FinMap& f, const FinMap& g);
// f + g : X + X' -> Y + Y'.
FinMap sum(const FinMap& f, const FinMap& g);

struct Pushout {
  int size;
  FinMap inl;  // X -> P
  FinMap inr;  // Y -> P
};
Pushout pushout(const FinMap& f, const FinMap& g);

struct Pullback {
  int size;
  FinMap pr1;  // Q -> X
  FinMap pr2;  // Q -> Y
};
Pullback pullback(const FinMap& f, const FinMap& g);

// Image factorisation: returns (e, m) with f = m . e, e surjective, m injective;
// image is numbered in increasing order of codomain index.
std::pair<FinMap, FinMap> image_factorize(const FinMap& f);

PointedMap compose(const PointedMap& f, const PointedMap& g);
bool is_inert(const PointedMap& p);
bool is_active(const PointedMap& p);
std::pair<PointedMap, PointedMap> inert_active_factorize(const PointedMap& p);

// Disjoint-set forest with path halving and union by size.
class UnionFind {
 public:
  explicit UnionFind(int n);
  int find(int x);
  bool unite(int a, int b);
  int size() const { return static_cast<int>(parent_.size()); }
  // Class index of every element, classes numbered by least member.
  std::vector<int> classes(int* count = nullptr);

 private:
  std::vector<int> parent_;
  std::vector<int> rank_;
};

std::vector<std::vector<int>> all_permutations(int n);
std::uint64_t factorial(int n);

void to_json(json& j, const FinSet& s);
void from_json(const json& j, FinSet& s);
void to_json(json& j, const FinMap& f);
void from_json(const json& j, FinMap& f);
void to_json(json& j, const PointedMap& f);
void from_json(const json& j, PointedMap& f);

}  // namespace prpd
