#include "steinberg/catalog.hpp"

#include <algorithm>
#include <array>
#include <set>

namespace steinberg {

std::uint32_t GroupTable::identity() const {
  for (std::uint32_t e = 0; e < order(); ++e) {
    bool ok = true;
    for (std::uint32_t x = 0; x < order() && ok; ++x) ok = (*this)(e, x) == x && (*this)(x, e) == x;
    if (ok) return e;
  }
  throw Error("group table has no identity");
}

std::uint32_t GroupTable::inverse(std::uint32_t a) const {
  const std::uint32_t e = identity();
  for (std::uint32_t b = 0; b < order(); ++b)
    if ((*this)(a, b) == e && (*this)(b, a) == e) return b;
  throw Error("group element " + names[a] + " has no inverse");
}

void validate_group_table(const GroupTable& t) {
  const std::uint32_t k = t.order();
  if (k == 0 || t.mul.size() != std::size_t{k} * k) throw Error("not a group: table must be k*k with k >= 1");
  if (std::set<std::string>(t.names.begin(), t.names.end()).size() != k) throw Error("not a group: duplicate element names");
  for (auto v : t.mul)
    if (v >= k) throw Error("not a group: table entry out of range");
  for (std::uint32_t a = 0; a < k; ++a) {
    t.inverse(a);
    for (std::uint32_t b = 0; b < k; ++b)
      for (std::uint32_t c = 0; c < k; ++c)
        if (t(t(a, b), c) != t(a, t(b, c)))
          throw Error("not a group: associativity fails at " + t.names[a] + " " + t.names[b] + " " + t.names[c]);
  }
}

GroupTable cyclic_group(std::uint32_t k) {
  if (k == 0) throw Error("cyclic group order must be positive");
  GroupTable t;
  for (std::uint32_t i = 0; i < k; ++i) t.names.push_back(i == 0 ? "e" : i == 1 ? "g" : "g^" + std::to_string(i));
  for (std::uint32_t i = 0; i < k; ++i)
    for (std::uint32_t j = 0; j < k; ++j) t.mul.push_back((i + j) % k);
  return t;
}

GroupTable klein_group() {
  GroupTable t{{"e", "a", "b", "ab"}, {}};
  for (std::uint32_t i = 0; i < 4; ++i)
    for (std::uint32_t j = 0; j < 4; ++j) t.mul.push_back(i ^ j);
  return t;
}

GroupTable symmetric_group3() {
  using Perm = std::array<int, 3>;
  const std::vector<Perm> perms = {{0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
  GroupTable t{{"e", "(12)", "(13)", "(23)", "(123)", "(132)"}, {}};
  for (const auto& p : perms)
    for (const auto& q : perms) {
      Perm pq{p[q[0]], p[q[1]], p[q[2]]};
      t.mul.push_back(static_cast<std::uint32_t>(std::find(perms.begin(), perms.end(), pq) - perms.begin()));
    }
  return t;
}

GroupTable dihedral_group4() {
  // r^i s^j at index i + 4j; s r = r^-1 s.
  GroupTable t{{"e", "r", "r^2", "r^3", "s", "rs", "r^2s", "r^3s"}, {}};
  for (std::uint32_t x = 0; x < 8; ++x)
    for (std::uint32_t y = 0; y < 8; ++y) {
      const std::uint32_t i = x % 4, j = x / 4, k = y % 4, l = y / 4;
      const std::uint32_t rot = (j == 0 ? i + k : i + 4 - k) % 4;
      t.mul.push_back(rot + 4 * ((j + l) % 2));
    }
  return t;
}

GroupTable quaternion_group() {
  // Index 2u + s encodes sign (-1)^s times basis unit u in {1, i, j, k}.
  static const int unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int sign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  GroupTable t{{"1", "-1", "i", "-i", "j", "-j", "k", "-k"}, {}};
  for (std::uint32_t x = 0; x < 8; ++x)
    for (std::uint32_t y = 0; y < 8; ++y) {
      const int u = static_cast<int>(x / 2), v = static_cast<int>(y / 2);
      const int s = static_cast<int>(x % 2 + y % 2) + sign[u][v];
      t.mul.push_back(static_cast<std::uint32_t>(2 * unit[u][v] + s % 2));
    }
  return t;
}

FiniteGroupoid pair_groupoid(std::size_t n) {
  if (n == 0) throw Error("pair groupoid needs n >= 1");
  const std::size_t m = n * n;
  auto idx = [n](std::size_t i, std::size_t j) { return static_cast<Arrow>(i * n + j); };
  FiniteGroupoid::Data d;
  d.comp.assign(m * m, kNoArrow);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      d.names.push_back("(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
      d.is_unit.push_back(i == j);
      d.range.push_back(idx(i, i));
      d.source.push_back(idx(j, j));
      d.inverse.push_back(idx(j, i));
      for (std::size_t k = 0; k < n; ++k) d.comp[std::size_t{idx(i, j)} * m + idx(j, k)] = idx(i, k);
    }
  return FiniteGroupoid(std::move(d));
}

FiniteGroupoid group_groupoid(const GroupTable& t) {
  validate_group_table(t);
  const std::uint32_t k = t.order(), e = t.identity();
  FiniteGroupoid::Data d;
  d.names = t.names;
  for (std::uint32_t a = 0; a < k; ++a) {
    d.is_unit.push_back(a == e);
    d.source.push_back(e);
    d.range.push_back(e);
    d.inverse.push_back(t.inverse(a));
  }
  d.comp.assign(t.mul.begin(), t.mul.end());
  return FiniteGroupoid(std::move(d));
}

FiniteGroupoid action_groupoid(const GroupTable& t, const std::vector<std::string>& points,
                               const std::vector<std::vector<std::uint32_t>>& action) {
  validate_group_table(t);
  const std::uint32_t k = t.order(), e = t.identity();
  const std::size_t np = points.size();
  if (action.size() != k) throw Error("non-action: one permutation per group element required");
  for (std::uint32_t g = 0; g < k; ++g) {
    if (action[g].size() != np) throw Error("non-action: wrong permutation length");
    std::vector<std::uint32_t> sorted = action[g];
    std::sort(sorted.begin(), sorted.end());
    for (std::uint32_t x = 0; x < np; ++x)
      if (sorted[x] != x) throw Error("non-action: " + t.names[g] + " does not act by a permutation");
  }
  for (std::uint32_t x = 0; x < np; ++x) {
    if (action[e][x] != x) throw Error("non-action: identity moves " + points[x]);
    for (std::uint32_t g = 0; g < k; ++g)
      for (std::uint32_t h = 0; h < k; ++h)
        if (action[g][action[h][x]] != action[t(g, h)][x])
          throw Error("non-action: g.(h.x) != (gh).x at " + t.names[g] + " " + t.names[h] + " " + points[x]);
  }
  const std::size_t m = k * np;
  auto idx = [np](std::uint32_t g, std::uint32_t x) { return static_cast<Arrow>(g * np + x); };
  FiniteGroupoid::Data d;
  d.comp.assign(m * m, kNoArrow);
  for (std::uint32_t g = 0; g < k; ++g)
    for (std::uint32_t x = 0; x < np; ++x) {
      d.names.push_back("(" + t.names[g] + "," + points[x] + ")");
      d.is_unit.push_back(g == e);
      d.source.push_back(idx(e, x));
      d.range.push_back(idx(e, action[g][x]));
      d.inverse.push_back(idx(t.inverse(g), action[g][x]));
      // (h, g.x)(g, x) = (hg, x)
      for (std::uint32_t h = 0; h < k; ++h) d.comp[std::size_t{idx(h, action[g][x])} * m + idx(g, x)] = idx(t(h, g), x);
    }
  return FiniteGroupoid(std::move(d));
}

FiniteGroupoid disjoint_union(const FiniteGroupoid& a, const FiniteGroupoid& b) {
  bool clash = false;
  for (Arrow x = 0; x < b.size() && !clash; ++x) clash = a.find(b.name(x)).has_value();
  const std::size_t m = a.size() + b.size();
  const auto off = static_cast<Arrow>(a.size());
  FiniteGroupoid::Data d;
  d.comp.assign(m * m, kNoArrow);
  auto shift = [](Arrow v, Arrow o) { return v == kNoArrow ? kNoArrow : v + o; };
  auto copy = [&](const FiniteGroupoid& g, Arrow o, const std::string& prefix) {
    for (Arrow x = 0; x < g.size(); ++x) {
      d.names.push_back(prefix + g.name(x));
      d.is_unit.push_back(g.is_unit(x));
      d.source.push_back(g.source(x) + o);
      d.range.push_back(g.range(x) + o);
      d.inverse.push_back(shift(g.inverse(x), o));
      for (Arrow y = 0; y < g.size(); ++y) d.comp[std::size_t{x + o} * m + y + o] = shift(g.compose(x, y), o);
    }
  };
  copy(a, 0, clash ? "1." : "");
  copy(b, off, clash ? "2." : "");
  return FiniteGroupoid(std::move(d));
}

std::vector<TwoCocycle> enumerate_cocycles(const std::shared_ptr<const FiniteGroupoid>& g, std::uint32_t order,
                                           std::uint64_t cap) {
  const auto& G = *g;
  std::vector<std::pair<Arrow, Arrow>> free;
  for_each_composable_pair(G, [&](Arrow a, Arrow b) {
    if (!G.is_unit(a) && !G.is_unit(b)) free.emplace_back(a, b);
  });
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < free.size(); ++i) {
    if (total > cap / order) throw Error("cocycle enumeration exceeds the cap " + std::to_string(cap));
    total *= order;
  }
  std::vector<std::array<Arrow, 3>> triples;
  for_each_composable_triple(G, [&](Arrow a, Arrow b, Arrow c) { triples.push_back({a, b, c}); });
  const std::size_t m = G.size();
  std::vector<Exponent> table(m * m, 0);
  auto at = [&](Arrow a, Arrow b) { return table[std::size_t{a} * m + b]; };
  std::vector<TwoCocycle> out;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::uint64_t rest = idx;
    for (std::size_t k = free.size(); k-- > 0;) {
      table[std::size_t{free[k].first} * m + free[k].second] = static_cast<Exponent>(rest % order);
      rest /= order;
    }
    bool ok = true;
    for (const auto& [a, b, c] : triples) {
      if ((at(a, b) + at(G.compose(a, b), c)) % order != (at(a, G.compose(b, c)) + at(b, c)) % order) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    TwoCocycle s(g, order);
    for (const auto& [a, b] : free) s.set(a, b, at(a, b));
    out.push_back(std::move(s));
  }
  return out;
}

const TwoCocycle& CatalogEntry::cocycle(const std::string& n) const {
  for (const auto& [k, v] : cocycles)
    if (k == n) return v;
  throw Error("catalog entry " + name + " has no cocycle '" + n + "'");
}

const Grading& CatalogEntry::grading(const std::string& n) const {
  for (const auto& [k, v] : gradings)
    if (k == n) return v;
  throw Error("catalog entry " + name + " has no grading '" + n + "'");
}

namespace {

TwoCocycle coboundary_cocycle(const std::shared_ptr<const FiniteGroupoid>& g, std::uint32_t order,
                              const std::vector<std::pair<std::string, std::int64_t>>& values) {
  Coboundary b(g, order);
  for (const auto& [name, v] : values) b.set(g->arrow(name), v);
  return apply_coboundary(TwoCocycle(g, order), b);
}

CatalogEntry make_entry(std::string name, std::string description, FiniteGroupoid g, ExpectedFacts facts) {
  return {std::move(name), std::move(description), std::make_shared<const FiniteGroupoid>(std::move(g)), facts, {}, {}};
}

void add_group_extras(CatalogEntry& e) {
  const auto& g = e.groupoid;
  if (e.name == "Z2") {
    TwoCocycle neg(g, 2);
    neg.set(g->arrow("g"), g->arrow("g"), 1);
    e.cocycles.emplace_back("neg", neg);
    TwoCocycle quarter(g, 4);
    quarter.set(g->arrow("g"), g->arrow("g"), 1);
    e.cocycles.emplace_back("quarter", quarter);
    Grading id(g, GradingGroup::cyclic(2));
    id.set(g->arrow("g"), 1);
    e.gradings.emplace_back("id", id);
  }
  if (e.name == "Z4") {
    for (std::uint32_t order : {2u, 4u}) {
      TwoCocycle carry(g, order);
      for (Arrow a = 0; a < 4; ++a)
        for (Arrow b = 0; b < 4; ++b)
          if (a + b >= 4) carry.set(a, b, 1);
      e.cocycles.emplace_back(order == 2 ? "carry" : "carry4", carry);
    }
    Grading id(g, GradingGroup::cyclic(4));
    for (Arrow a = 0; a < 4; ++a) id.set(a, a);
    e.gradings.emplace_back("id", id);
  }
  if (e.name == "K4") {
    // s(x, y) = x_1 y_2 with a = (1,0), b = (0,1).
    TwoCocycle bil(g, 2);
    for (Arrow x = 0; x < 4; ++x)
      for (Arrow y = 0; y < 4; ++y) bil.set(x, y, (x & 1) * ((y >> 1) & 1));
    e.cocycles.emplace_back("bilinear", bil);
  }
}

std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> out;
  for (std::size_t n = 1; n <= 4; ++n) {
    const std::string name = "R" + std::to_string(n);
    auto e = make_entry(name, "pair groupoid on " + std::to_string(n) + (n == 1 ? " point" : " points"), pair_groupoid(n),
                        {true, true, 1, n * n});
    if (n >= 2) {
      e.cocycles.emplace_back("cob", coboundary_cocycle(e.groupoid, 2, {{"(1,2)", 1}}));
      if (n >= 3) e.cocycles.emplace_back("cob4", coboundary_cocycle(e.groupoid, 4, {{"(1,2)", 1}, {"(2,3)", 2}}));
      Grading diff(e.groupoid, GradingGroup::integers());
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          diff.set(static_cast<Arrow>(i * n + j), static_cast<std::int64_t>(i) - static_cast<std::int64_t>(j));
      e.gradings.emplace_back("diff", diff);
    }
    out.push_back(std::move(e));
  }
  const std::vector<std::pair<std::string, GroupTable>> groups = {
      {"Z2", cyclic_group(2)}, {"Z3", cyclic_group(3)},      {"Z4", cyclic_group(4)},      {"K4", klein_group()},
      {"S3", symmetric_group3()}, {"Z8", cyclic_group(8)}, {"D4", dihedral_group4()}, {"Q8", quaternion_group()}};
  for (const auto& [name, table] : groups) {
    auto e = make_entry(name, "group of order " + std::to_string(table.order()), group_groupoid(table),
                        {table.order() == 1, true, 1, table.order()});
    add_group_extras(e);
    out.push_back(std::move(e));
  }
  {
    auto e = make_entry("swap", "Z/2 swapping {1,2}", action_groupoid(cyclic_group(2), {"1", "2"}, {{0, 1}, {1, 0}}),
                        {true, true, 1, 4});
    e.cocycles.emplace_back("cob", coboundary_cocycle(e.groupoid, 2, {{"(g,1)", 1}}));
    Grading shift(e.groupoid, GradingGroup::cyclic(2));
    shift.set(e.groupoid->arrow("(g,1)"), 1);
    shift.set(e.groupoid->arrow("(g,2)"), 1);
    e.gradings.emplace_back("shift", shift);
    out.push_back(std::move(e));
  }
  out.push_back(make_entry("swap_fix", "Z/2 swapping {1,2} and fixing 3",
                           action_groupoid(cyclic_group(2), {"1", "2", "3"}, {{0, 1, 2}, {1, 0, 2}}),
                           {false, false, 2, 6}));
  out.push_back(make_entry("Z3_rot", "Z/3 rotating {1,2,3}",
                           action_groupoid(cyclic_group(3), {"1", "2", "3"}, {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}),
                           {true, true, 1, 9}));
  {
    auto e = make_entry("R2+R2", "two copies of R2", disjoint_union(pair_groupoid(2), pair_groupoid(2)),
                        {true, false, 2, 8});
    e.cocycles.emplace_back("cob", coboundary_cocycle(e.groupoid, 2, {{"1.(1,2)", 1}}));
    out.push_back(std::move(e));
  }
  out.push_back(make_entry("R2+Z2", "R2 beside the group Z/2",
                           disjoint_union(pair_groupoid(2), group_groupoid(cyclic_group(2))), {false, false, 2, 6}));

  for (const auto& e : out) {
    const auto& g = *e.groupoid;
    auto v = validate_groupoid(g);
    if (!v.empty()) throw Error("catalog groupoid " + e.name + " is invalid:\n" + to_string(v));
    const ExpectedFacts got{is_effective(g), is_minimal(g), orbits(g).size(), g.size()};
    if (got.effective != e.facts.effective || got.minimal != e.facts.minimal ||
        got.orbit_count != e.facts.orbit_count || got.dimension != e.facts.dimension)
      throw Error("catalog entry " + e.name + " does not match its expected facts");
    for (const auto& [n, s] : e.cocycles) {
      v = validate_cocycle(s);
      if (!v.empty()) throw Error("catalog cocycle " + e.name + "/" + n + " is invalid:\n" + to_string(v));
    }
    for (const auto& [n, c] : e.gradings) {
      v = validate_grading(c);
      if (!v.empty()) throw Error("catalog grading " + e.name + "/" + n + " is invalid:\n" + to_string(v));
    }
  }
  return out;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = build_catalog();
  return entries;
}

const CatalogEntry& catalog_entry(const std::string& name) {
  for (const auto& e : catalog())
    if (e.name == name) return e;
  throw Error("no catalog entry named '" + name + "'");
}

std::vector<RingChoice> ring_catalog() {
  return {{Ring::rationals(), Involution::identity()},        {Ring::prime_field(2), Involution::identity()},
          {Ring::prime_field(3), Involution::identity()},     {Ring::prime_field(5), Involution::identity()},
          {Ring::cyclotomic(4), Involution::conjugation()},   {Ring::cyclotomic(3), Involution::conjugation()},
          {Ring::quadratic_field(3), Involution::frobenius()}};
}

}  // namespace steinberg
