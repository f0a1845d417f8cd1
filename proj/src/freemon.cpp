#include "prpd/freemon.hpp"

#include <map>
#include <numeric>
#include <stdexcept>
#include <functional>

namespace prpd {

Multiset::Multiset(std::vector<int> m) : mult(std::move(m)) {
  for (int v : mult)
    if (v < 0) throw std::invalid_argument("Multiset: negative multiplicity");
}

Multiset Multiset::basis(int gens, int i) {
  std::vector<int> m(gens, 0);
  m.at(i) = 1;
  return Multiset(std::move(m));
}

int Multiset::degree() const { return std::accumulate(mult.begin(), mult.end(), 0); }

Multiset Multiset::operator+(const Multiset& o) const {
  if (o.mult.size() != mult.size()) throw std::invalid_argument("Multiset: generator count mismatch");
  std::vector<int> m(mult);
  for (std::size_t i = 0; i < m.size(); ++i) m[i] += o.mult[i];
  return Multiset(std::move(m));
}

MonHom::MonHom(int s, int d, std::vector<Multiset> c) : src(s), dst(d), cols(std::move(c)) {
  if (src < 0 || dst < 0) throw std::invalid_argument("MonHom: negative size");
  if (static_cast<int>(cols.size()) != src) throw std::invalid_argument("MonHom: wrong column count");
  for (const auto& col : cols)
    if (col.generator_count() != dst) throw std::invalid_argument("MonHom: wrong column length");
}

MonHom MonHom::identity(int n) {
  std::vector<Multiset> c;
  for (int i = 0; i < n; ++i) c.push_back(Multiset::basis(n, i));
  return MonHom(n, n, std::move(c));
}

MonHom MonHom::from_rows(const std::vector<std::vector<int>>& rows) {
  int dst = static_cast<int>(rows.size());
  int src = dst ? static_cast<int>(rows[0].size()) : 0;
  std::vector<Multiset> c(src, Multiset::zero(dst));
  for (int i = 0; i < dst; ++i) {
    if (static_cast<int>(rows[i].size()) != src) throw std::invalid_argument("MonHom: ragged rows");
    for (int j = 0; j < src; ++j) c[j].mult[i] = rows[i][j];
  }
  for (auto& col : c) col = Multiset(col.mult);
  return MonHom(src, dst, std::move(c));
}

Multiset MonHom::apply(const Multiset& x) const {
  if (x.generator_count() != src) throw std::invalid_argument("MonHom::apply: wrong generator count");
  std::vector<int> out(dst, 0);
  for (int j = 0; j < src; ++j)
    for (int i = 0; i < dst; ++i) out[i] += x[j] * cols[j][i];
  return Multiset(std::move(out));
}

MonHom compose(const MonHom& f, const MonHom& g) {
  if (f.dst != g.src) throw std::invalid_argument("compose: monoid mismatch");
  std::vector<Multiset> c;
  for (const auto& col : f.cols) c.push_back(g.apply(col));
  return MonHom(f.src, g.dst, std::move(c));
}

Rational::Rational(std::int64_t n, std::int64_t d) {
  if (d == 0) throw std::invalid_argument("Rational: zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  std::int64_t g = std::gcd(n < 0 ? -n : n, d);
  if (g == 0) g = 1;
  num = n / g;
  den = d / g;
}

Rational Rational::operator+(const Rational& o) const {
  return Rational(num * o.den + o.num * den, den * o.den);
}

Rational Rational::operator*(const Rational& o) const { return Rational(num * o.num, den * o.den); }

Rational Rational::operator/(const Rational& o) const { return Rational(num * o.den, den * o.num); }

bool is_free_hom(const MonHom& h) {
  for (const auto& col : h.cols) {
    if (col.degree() != 1) return false;
  }
  return true;
}

bool is_transfer(const MonHom& h) {
  std::vector<char> used(h.dst, 0);
  for (const auto& col : h.cols)
    for (int i = 0; i < h.dst; ++i) {
      if (col[i] > 1) return false;
      if (col[i] == 1) {
        if (used[i]) return false;
        used[i] = 1;
      }
    }
  return true;
}

HomClass classify_hom(const MonHom& h) {
  if (is_free_hom(h)) return {HomTag::Free, std::nullopt};
  if (is_transfer(h)) return {HomTag::Transfer, std::nullopt};
  return {HomTag::Mixed, ctf_eqf_factorize(h)};
}

std::pair<MonHom, MonHom> ctf_eqf_factorize(const MonHom& h) {
  int mid = 0;
  for (const auto& col : h.cols) mid += col.degree();
  std::vector<Multiset> tcols(h.src, Multiset::zero(mid));
  std::vector<Multiset> fcols;
  int k = 0;
  for (int j = 0; j < h.src; ++j)
    for (int i = 0; i < h.dst; ++i)
      for (int c = 0; c < h.entry(i, j); ++c) {
        tcols[j].mult[k++] = 1;
        fcols.push_back(Multiset::basis(h.dst, i));
      }
  return {MonHom(h.src, mid, std::move(tcols)), MonHom(mid, h.dst, std::move(fcols))};
}

bool in_submonoid(const Submonoid& s, const Multiset& v) {
  std::map<std::pair<std::vector<int>, std::size_t>, bool> memo;
  std::function<bool(const std::vector<int>&, std::size_t)> go = [&](const std::vector<int>& rest,
                                                                      std::size_t from) -> bool {
    bool zero = true;
    for (int x : rest) zero = zero && x == 0;
    if (zero) return true;
    auto key = std::make_pair(rest, from);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    bool res = false;
    for (std::size_t g = from; g < s.generators.size() && !res; ++g) {
      const auto& gen = s.generators[g];
      if (gen.is_zero()) continue;
      std::vector<int> next(rest);
      bool fits = true;
      for (std::size_t i = 0; i < next.size(); ++i) {
        next[i] -= gen.mult[i];
        fits = fits && next[i] >= 0;
      }
      if (fits && go(next, g)) res = true;
    }
    memo[key] = res;
    return res;
  };
  if (v.generator_count() != s.ambient) throw std::invalid_argument("in_submonoid: ambient mismatch");
  return go(v.mult, 0);
}

std::vector<Multiset> multisets_of_degree(int gens, int d) {
  std::vector<Multiset> out;
  std::vector<int> cur(gens, 0);
  std::function<void(int, int)> rec = [&](int pos, int left) {
    if (pos == gens - 1) {
      cur[pos] = left;
      out.emplace_back(cur);
      return;
    }
    for (int v = left; v >= 0; --v) {
      cur[pos] = v;
      rec(pos + 1, left - v);
    }
  };
  if (gens == 0) {
    if (d == 0) out.emplace_back(std::vector<int>{});
    return out;
  }
  rec(0, d);
  return out;
}

std::vector<Multiset> multisets_up_to(int gens, int max_degree) {
  std::vector<Multiset> out;
  for (int d = 0; d <= max_degree; ++d) {
    auto part = multisets_of_degree(gens, d);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

FactoringVerdict is_closed_under_factoring(const Submonoid& s, int degree_bound) {
  if (degree_bound < 1) throw std::invalid_argument("is_closed_under_factoring: bound must be >= 1");
  for (int t = 1; t <= degree_bound; ++t)
    for (int da = 0; da <= t; ++da)
      for (const auto& a : multisets_of_degree(s.ambient, da))
        for (const auto& b : multisets_of_degree(s.ambient, t - da)) {
          if (!in_submonoid(s, a + b)) continue;
          if (!in_submonoid(s, a) || !in_submonoid(s, b)) return {false, std::make_pair(a, b)};
        }
  return {true, std::nullopt};
}

FreenessVerdict is_free_submonoid(const Submonoid& s, int degree_bound) {
  if (degree_bound < 1) throw std::invalid_argument("is_free_submonoid: bound must be >= 1");
  int k = static_cast<int>(s.generators.size());
  std::map<std::vector<int>, std::vector<int>> seen;
  for (int d = 0; d <= degree_bound; ++d)
    for (const auto& c : multisets_of_degree(k, d)) {
      std::vector<int> value(s.ambient, 0);
      for (int g = 0; g < k; ++g)
        for (int i = 0; i < s.ambient; ++i) value[i] += c[g] * s.generators[g][i];
      auto [it, fresh] = seen.emplace(value, c.mult);
      if (!fresh) return {false, std::make_pair(it->second, c.mult)};
    }
  return {true, std::nullopt};
}

Rational groupoid_cardinality(const Multiset& m) {
  std::int64_t den = 1;
  for (int v : m.mult) den *= static_cast<std::int64_t>(factorial(v));
  return Rational(1, den);
}

const char* tag_name(HomTag t) {
  switch (t) {
    case HomTag::Free: return "Free";
    case HomTag::Transfer: return "Transfer";
    case HomTag::ContrafiberedOnly: return "ContrafiberedOnly";
    case HomTag::Mixed: return "Mixed";
  }
  return "?";
}

void to_json(json& j, const Multiset& m) { j = m.mult; }

void from_json(const json& j, Multiset& m) { m = Multiset(j.get<std::vector<int>>()); }

void to_json(json& j, const MonHom& h) {
  json cols = json::array();
  for (const auto& c : h.cols) cols.push_back(c.mult);
  j = json{{"src", h.src}, {"dst", h.dst}, {"matrix", cols}};
}

void from_json(const json& j, MonHom& h) {
  int dst = j.at("dst").get<int>();
  std::vector<Multiset> cols;
  for (const auto& c : j.at("matrix")) cols.emplace_back(c.get<std::vector<int>>());
  h = MonHom(j.at("src").get<int>(), dst, std::move(cols));
}

void to_json(json& j, const Rational& r) { j = json{{"num", r.num}, {"den", r.den}}; }

void from_json(const json& j, Rational& r) {
  r = Rational(j.at("num").get<std::int64_t>(), j.at("den").get<std::int64_t>());
}

void to_json(json& j, const HomClass& c) {
  j = json{{"tag", tag_name(c.tag)}};
  if (c.factorization) {
    j["transfer"] = c.factorization->first;
    j["free"] = c.factorization->second;
  }
}

void to_json(json& j, const Submonoid& s) {
  json g = json::array();
  for (const auto& m : s.generators) g.push_back(m.mult);
  j = json{{"ambient", s.ambient}, {"generators", g}};
}

void from_json(const json& j, Submonoid& s) {
  s.ambient = j.at("ambient").get<int>();
  s.generators.clear();
  for (const auto& g : j.at("generators")) {
    Multiset m(g.get<std::vector<int>>());
    if (m.generator_count() != s.ambient) throw std::invalid_argument("Submonoid: generator length");
    s.generators.push_back(m);
  }
}

}  // namespace prpd
