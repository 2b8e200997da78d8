#include "steinberg/groupoid.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace steinberg {

FiniteGroupoid::FiniteGroupoid(Data data) : data_(std::move(data)) {
  const std::size_t m = data_.names.size();
  if (data_.is_unit.size() != m || data_.source.size() != m || data_.range.size() != m ||
      data_.inverse.size() != m || data_.comp.size() != m * m)
    throw Error("groupoid tables have inconsistent sizes");
  for (Arrow a = 0; a < m; ++a) {
    if (data_.source[a] >= m || data_.range[a] >= m)
      throw Error("arrow " + data_.names[a] + " has an out-of-range source or range");
    if (data_.inverse[a] != kNoArrow && data_.inverse[a] >= m)
      throw Error("arrow " + data_.names[a] + " has an out-of-range inverse");
    if (!index_.emplace(data_.names[a], a).second) throw Error("duplicate arrow name " + data_.names[a]);
    if (data_.is_unit[a]) units_.push_back(a);
  }
  for (Arrow c : data_.comp)
    if (c != kNoArrow && c >= m) throw Error("composition table refers to an out-of-range arrow");
  range_fibers_.assign(m, {});
  source_fibers_.assign(m, {});
  for (Arrow a = 0; a < m; ++a) {
    range_fibers_[data_.range[a]].push_back(a);
    source_fibers_[data_.source[a]].push_back(a);
  }
}

std::optional<Arrow> FiniteGroupoid::find(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Arrow FiniteGroupoid::arrow(const std::string& name) const {
  auto a = find(name);
  if (!a) throw Error("unknown arrow '" + name + "'");
  return *a;
}

namespace {

class ViolationLog {
 public:
  explicit ViolationLog(const FiniteGroupoid& g) : g_(g) {}

  void add(const std::string& rule, std::vector<Arrow> witnesses, const std::string& message) {
    if (++counts_[rule] > kPerRule) return;
    Violation v{rule, {}, message};
    for (Arrow a : witnesses) v.witnesses.push_back(a == kNoArrow ? "<none>" : g_.name(a));
    out_.push_back(std::move(v));
  }
  std::string n(Arrow a) const { return a == kNoArrow ? "<none>" : g_.name(a); }
  Violations take() { return std::move(out_); }

 private:
  static constexpr int kPerRule = 50;
  const FiniteGroupoid& g_;
  std::map<std::string, int> counts_;
  Violations out_;
};

}  // namespace

Violations validate_groupoid(const FiniteGroupoid& g) {
  ViolationLog log(g);
  const std::size_t m = g.size();
  for (Arrow a = 0; a < m; ++a) {
    if (g.is_unit(a) && (g.source(a) != a || g.range(a) != a))
      log.add("unit-endpoints", {a}, "unit " + log.n(a) + " must be its own source and range");
    if (!g.is_unit(g.source(a)) || !g.is_unit(g.range(a)))
      log.add("unit-endpoints", {a}, "source and range of " + log.n(a) + " must be units");
  }
  for (Arrow a = 0; a < m; ++a) {
    const Arrow i = g.inverse(a);
    if (i == kNoArrow) {
      log.add("inverse", {a}, "no inverse for " + log.n(a));
      continue;
    }
    if (g.inverse(i) != a) log.add("inverse", {a}, "inv(inv(g)) != g at " + log.n(a));
    if (g.source(i) != g.range(a) || g.range(i) != g.source(a))
      log.add("inverse", {a}, "inverse does not swap source and range at " + log.n(a));
  }
  for (Arrow a = 0; a < m; ++a)
    for (Arrow b = 0; b < m; ++b) {
      const Arrow c = g.compose(a, b);
      const bool ok = g.composable(a, b);
      if (ok && c == kNoArrow)
        log.add("composition-domain", {a, b}, "missing composition " + log.n(a) + " " + log.n(b));
      else if (!ok && c != kNoArrow)
        log.add("composition-domain", {a, b}, "composition defined on non-composable pair " + log.n(a) + " " + log.n(b));
      else if (ok && (g.range(c) != g.range(a) || g.source(c) != g.source(b)))
        log.add("composition-endpoints", {a, b}, "r(ab) = r(a) and s(ab) = s(b) fail for " + log.n(a) + " " + log.n(b));
    }
  for (Arrow a = 0; a < m; ++a) {
    if (g.compose(g.range(a), a) != a) log.add("unit-law", {a}, "r(g) g != g at " + log.n(a));
    if (g.compose(a, g.source(a)) != a) log.add("unit-law", {a}, "g s(g) != g at " + log.n(a));
    const Arrow i = g.inverse(a);
    if (i == kNoArrow) continue;
    if (g.compose(a, i) != g.range(a)) log.add("range-identity", {a}, "r(g) = g g^-1 fails at " + log.n(a));
    if (g.compose(i, a) != g.source(a)) log.add("source-identity", {a}, "s(g) = g^-1 g fails at " + log.n(a));
  }
  for_each_composable_triple(g, [&](Arrow a, Arrow b, Arrow c) {
    const Arrow ab = g.compose(a, b), bc = g.compose(b, c);
    if (ab == kNoArrow || bc == kNoArrow) return;
    const Arrow l = g.compose(ab, c), r = g.compose(a, bc);
    if (l != r) log.add("associativity", {a, b, c}, "(ab)c != a(bc) at " + log.n(a) + " " + log.n(b) + " " + log.n(c));
  });
  return log.take();
}

void require_valid(const FiniteGroupoid& g) {
  auto v = validate_groupoid(g);
  if (!v.empty()) throw Error("invalid groupoid:\n" + to_string(v));
}

std::vector<Arrow> isotropy(const FiniteGroupoid& g) {
  std::vector<Arrow> out;
  for (Arrow a = 0; a < g.size(); ++a)
    if (g.source(a) == g.range(a)) out.push_back(a);
  return out;
}

bool is_effective(const FiniteGroupoid& g) {
  for (Arrow a : isotropy(g))
    if (!g.is_unit(a)) return false;
  return true;
}

std::vector<std::vector<Arrow>> orbits(const FiniteGroupoid& g) {
  std::vector<bool> seen(g.size(), false);
  std::vector<std::vector<Arrow>> out;
  for (Arrow x : g.units()) {
    if (seen[x]) continue;
    std::vector<Arrow> orbit;
    for (Arrow a : g.range_fiber(x)) orbit.push_back(g.source(a));
    std::sort(orbit.begin(), orbit.end());
    orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
    for (Arrow y : orbit) seen[y] = true;
    out.push_back(std::move(orbit));
  }
  return out;
}

bool is_minimal(const FiniteGroupoid& g) { return orbits(g).size() == 1; }

Restriction restrict_groupoid(const FiniteGroupoid& g, std::span<const Arrow> units) {
  std::vector<bool> in(g.size(), false);
  for (Arrow x : units) {
    if (x >= g.size() || !g.is_unit(x)) throw Error("restriction set contains a non-unit");
    in[x] = true;
  }
  Restriction out;
  std::vector<Arrow> renumber(g.size(), kNoArrow);
  for (Arrow a = 0; a < g.size(); ++a) {
    if (!in[g.source(a)]) continue;
    if (!in[g.range(a)]) throw Error("not invariant, arrow " + g.name(a) + " crosses");
    renumber[a] = static_cast<Arrow>(out.embedding.size());
    out.embedding.push_back(a);
  }
  const std::size_t k = out.embedding.size();
  FiniteGroupoid::Data d;
  d.comp.assign(k * k, kNoArrow);
  for (Arrow a : out.embedding) {
    d.names.push_back(g.name(a));
    d.is_unit.push_back(g.is_unit(a));
    d.source.push_back(renumber[g.source(a)]);
    d.range.push_back(renumber[g.range(a)]);
    d.inverse.push_back(g.inverse(a) == kNoArrow ? kNoArrow : renumber[g.inverse(a)]);
  }
  for (Arrow i = 0; i < k; ++i)
    for (Arrow j = 0; j < k; ++j) {
      const Arrow c = g.compose(out.embedding[i], out.embedding[j]);
      if (c != kNoArrow) d.comp[i * k + j] = renumber[c];
    }
  out.groupoid = FiniteGroupoid(std::move(d));
  return out;
}

bool Bisection::contains(Arrow a) const { return std::binary_search(arrows_.begin(), arrows_.end(), a); }

bool is_bisection(const FiniteGroupoid& g, std::span<const Arrow> arrows) {
  std::vector<bool> r(g.size(), false), s(g.size(), false), seen(g.size(), false);
  for (Arrow a : arrows) {
    if (a >= g.size()) return false;
    if (seen[a]) continue;
    seen[a] = true;
    if (r[g.range(a)] || s[g.source(a)]) return false;
    r[g.range(a)] = s[g.source(a)] = true;
  }
  return true;
}

Bisection make_bisection(const FiniteGroupoid& g, std::vector<Arrow> arrows) {
  std::sort(arrows.begin(), arrows.end());
  arrows.erase(std::unique(arrows.begin(), arrows.end()), arrows.end());
  if (!is_bisection(g, arrows)) throw Error("not a bisection: " + format_arrows(g, arrows));
  Bisection b;
  b.arrows_ = std::move(arrows);
  return b;
}

Bisection bisection_product(const FiniteGroupoid& g, const Bisection& b, const Bisection& d) {
  std::vector<Arrow> out;
  for (Arrow a : b.arrows())
    for (Arrow c : d.arrows())
      if (g.composable(a, c)) out.push_back(g.compose(a, c));
  return make_bisection(g, std::move(out));
}

Bisection bisection_inverse(const FiniteGroupoid& g, const Bisection& b) {
  std::vector<Arrow> out;
  for (Arrow a : b.arrows()) out.push_back(g.inverse(a));
  return make_bisection(g, std::move(out));
}

std::vector<Arrow> range_set(const FiniteGroupoid& g, const Bisection& b) {
  std::vector<Arrow> out;
  for (Arrow a : b.arrows()) out.push_back(g.range(a));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Arrow> source_set(const FiniteGroupoid& g, const Bisection& b) {
  std::vector<Arrow> out;
  for (Arrow a : b.arrows()) out.push_back(g.source(a));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Bisection> all_bisections(const FiniteGroupoid& g, std::size_t cap) {
  std::vector<Bisection> out;
  std::vector<Arrow> cur;
  std::vector<bool> r(g.size(), false), s(g.size(), false);
  std::function<void(Arrow)> rec = [&](Arrow a) {
    if (a == g.size()) {
      if (out.size() >= cap) throw Error("more than " + std::to_string(cap) + " bisections");
      out.push_back(make_bisection(g, cur));
      return;
    }
    rec(a + 1);
    if (!r[g.range(a)] && !s[g.source(a)]) {
      r[g.range(a)] = s[g.source(a)] = true;
      cur.push_back(a);
      rec(a + 1);
      cur.pop_back();
      r[g.range(a)] = s[g.source(a)] = false;
    }
  };
  rec(0);
  return out;
}

std::string format_arrows(const FiniteGroupoid& g, std::span<const Arrow> arrows) {
  std::string s = "{";
  for (std::size_t i = 0; i < arrows.size(); ++i) {
    if (i) s += ", ";
    s += arrows[i] < g.size() ? g.name(arrows[i]) : "<none>";
  }
  return s + "}";
}

}  // namespace steinberg
