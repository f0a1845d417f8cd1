#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "prpd/finset.hpp"

namespace prpd {

// Element of the free commutative monoid on `generator_count` generators.
struct Multiset {
  std::vector<int> mult;

  Multiset() = default;
  explicit Multiset(std::vector<int> m);
  static Multiset zero(int gens) { return Multiset(std::vector<int>(gens, 0)); }
  static Multiset basis(int gens, int i);

  int generator_count() const { return static_cast<int>(mult.size()); }
  int degree() const;
  bool is_zero() const { return degree() == 0; }
  int operator[](int i) const { return mult[i]; }

  Multiset operator+(const Multiset& o) const;
  bool operator==(const Multiset&) const = default;
  auto operator<=>(const Multiset&) const = default;
};

// Homomorphism F(src) -> F(dst); cols[j] is the image of source generator j.
struct MonHom {
  int src = 0;
  int dst = 0;
  std::vector<Multiset> cols;

  MonHom() = default;
  MonHom(int src, int dst, std::vector<Multiset> cols);
  static MonHom identity(int n);
  // Matrix with rows indexed by target generators.
  static MonHom from_rows(const std::vector<std::vector<int>>& rows);

  int entry(int target, int source) const { return cols[source][target]; }
  Multiset apply(const Multiset& x) const;
  bool operator==(const MonHom&) const = default;
};

// g after f.
MonHom compose(const MonHom& f, const MonHom& g);

struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n, std::int64_t d = 1);
  Rational operator+(const Rational& o) const;
  Rational operator*(const Rational& o) const;
  Rational operator/(const Rational& o) const;
  bool operator==(const Rational&) const = default;
};

enum class HomTag { Free, Transfer, ContrafiberedOnly, Mixed };

struct HomClass {
  HomTag tag;
  std::optional<std::pair<MonHom, MonHom>> factorization;  // (transfer, free), Mixed only
};

bool is_free_hom(const MonHom& h);
bool is_transfer(const MonHom& h);
HomClass classify_hom(const MonHom& h);

// h = f . t with t a transfer and f free.
std::pair<MonHom, MonHom> ctf_eqf_factorize(const MonHom& h);

struct Submonoid {
  int ambient = 0;
  std::vector<Multiset> generators;
};

bool in_submonoid(const Submonoid& s, const Multiset& v);

struct FactoringVerdict {
  bool ok;
  std::optional<std::pair<Multiset, Multiset>> witness;  // a, b with a+b in s
};
FactoringVerdict is_closed_under_factoring(const Submonoid& s, int degree_bound = 6);

struct FreenessVerdict {
  bool ok;
  // Two distinct coefficient vectors over the generators with equal value.
  std::optional<std::pair<std::vector<int>, std::vector<int>>> relation;
};
FreenessVerdict is_free_submonoid(const Submonoid& s, int degree_bound = 6);

Rational groupoid_cardinality(const Multiset& m);

// All multisets over `gens` generators of degree exactly d, in lexicographically
// decreasing order of the multiplicity vector.
std::vector<Multiset> multisets_of_degree(int gens, int d);
std::vector<Multiset> multisets_up_to(int gens, int max_degree);

const char* tag_name(HomTag t);

void to_json(json& j, const Multiset& m);
void from_json(const json& j, Multiset& m);
void to_json(json& j, const MonHom& h);
void from_json(const json& j, MonHom& h);
void to_json(json& j, const Rational& r);
void from_json(const json& j, Rational& r);
void to_json(json& j, const HomClass& c);
void to_json(json& j, const Submonoid& s);
void from_json(const json& j, Submonoid& s);

}  // namespace prpd
