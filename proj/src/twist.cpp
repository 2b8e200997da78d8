#include "steinberg/twist.hpp"

#include <algorithm>

namespace steinberg {

DiscreteTwist::DiscreteTwist(std::shared_ptr<const FiniteGroupoid> base, std::uint32_t order, FiniteGroupoid total,
                             std::vector<std::vector<Arrow>> inclusion, std::vector<Arrow> quotient)
    : base_(std::move(base)),
      order_(order),
      total_(std::move(total)),
      inclusion_(std::move(inclusion)),
      quotient_(std::move(quotient)),
      preimage_(total_.size(), {kNoArrow, 0}) {
  if (order_ == 0) throw Error("twist order must be positive");
  if (inclusion_.size() != base_->size()) throw Error("inclusion table must have one row per base arrow");
  if (quotient_.size() != total_.size()) throw Error("quotient table must cover every arrow of the twist");
  for (Arrow x = 0; x < base_->size(); ++x) {
    const auto& row = inclusion_[x];
    if (base_->is_unit(x) != (row.size() == order_) || (!base_->is_unit(x) && !row.empty()))
      throw Error("inclusion row for " + base_->name(x) + " must have " + std::to_string(order_) + " entries exactly when it is a unit");
    for (Exponent k = 0; k < row.size(); ++k) {
      if (row[k] >= total_.size()) throw Error("inclusion of (" + base_->name(x) + ", " + std::to_string(k) + ") is out of range");
      if (preimage_[row[k]].first == kNoArrow) preimage_[row[k]] = {x, k};
    }
  }
  for (Arrow q : quotient_)
    if (q >= base_->size()) throw Error("quotient refers to an out-of-range arrow");
}

std::optional<std::pair<Arrow, Exponent>> DiscreteTwist::inclusion_preimage(Arrow e) const {
  if (preimage_[e].first == kNoArrow) return std::nullopt;
  return preimage_[e];
}

Arrow DiscreteTwist::act(Exponent k, Arrow e) const {
  const Arrow z = include(quotient_[total_.range(e)], k);
  return z == kNoArrow ? kNoArrow : total_.compose(z, e);
}

DiscreteTwist build_twist(const TwoCocycle& s) {
  const auto& g = s.groupoid();
  const std::uint32_t n = s.order();
  const std::size_t m = g.size() * n;
  auto idx = [n](Arrow a, std::int64_t k) {
    return static_cast<Arrow>(a * n + static_cast<Arrow>(((k % n) + n) % n));
  };
  FiniteGroupoid::Data d;
  d.comp.assign(m * m, kNoArrow);
  std::vector<Arrow> quotient;
  for (Arrow a = 0; a < g.size(); ++a)
    for (Exponent k = 0; k < n; ++k) {
      d.names.push_back(g.name(a) + "@" + std::to_string(k));
      d.is_unit.push_back(g.is_unit(a) && k == 0);
      d.source.push_back(idx(g.source(a), 0));
      d.range.push_back(idx(g.range(a), 0));
      const Arrow ai = g.inverse(a);
      d.inverse.push_back(idx(ai, -std::int64_t{s(a, ai)} - k));
      quotient.push_back(a);
    }
  for_each_composable_pair(g, [&](Arrow a, Arrow b) {
    for (Exponent z = 0; z < n; ++z)
      for (Exponent w = 0; w < n; ++w)
        d.comp[std::size_t{idx(a, z)} * m + idx(b, w)] = idx(g.compose(a, b), std::int64_t{s(a, b)} + z + w);
  });
  std::vector<std::vector<Arrow>> inclusion(g.size());
  for (Arrow x : g.units())
    for (Exponent k = 0; k < n; ++k) inclusion[x].push_back(idx(x, k));
  return DiscreteTwist(s.groupoid_ptr(), n, FiniteGroupoid(std::move(d)), std::move(inclusion), std::move(quotient));
}

Violations validate_twist(const DiscreteTwist& t) {
  Violations out;
  const auto& g = t.base();
  const auto& sg = t.total();
  const std::uint32_t n = t.order();
  auto add = [&](std::string rule, std::vector<std::string> w, std::string msg) {
    if (out.size() < 200) out.push_back({std::move(rule), std::move(w), std::move(msg)});
  };
  for (auto& v : validate_groupoid(sg)) {
    v.rule = "twist-groupoid/" + v.rule;
    add(v.rule, v.witnesses, v.message);
  }
  auto nm = [&](Arrow e) { return e < sg.size() ? sg.name(e) : std::string("<none>"); };

  // Fiber sizes and exactness.
  std::vector<std::vector<Arrow>> fibers(g.size());
  for (Arrow e = 0; e < sg.size(); ++e) fibers[t.quotient(e)].push_back(e);
  if (sg.size() != g.size() * n)
    add("exactness", {}, "twist has " + std::to_string(sg.size()) + " arrows, expected " + std::to_string(g.size() * n));
  for (Arrow a = 0; a < g.size(); ++a) {
    if (fibers[a].size() != n)
      add("exactness", {g.name(a)},
          "fiber over " + g.name(a) + " has " + std::to_string(fibers[a].size()) + " elements, expected " + std::to_string(n));
    if (!g.is_unit(a)) continue;
    std::vector<Arrow> image;
    for (Exponent k = 0; k < n; ++k) image.push_back(t.include(a, k));
    std::sort(image.begin(), image.end());
    if (std::adjacent_find(image.begin(), image.end()) != image.end())
      add("inclusion-injective", {g.name(a)}, "i is not injective over " + g.name(a));
    if (image != fibers[a]) add("exactness", {g.name(a)}, "i({x} x T) != q^-1(x) at " + g.name(a));
  }

  // Units correspond.
  std::vector<int> unit_hits(g.size(), 0);
  for (Arrow e : sg.units()) {
    const Arrow x = t.quotient(e);
    if (!g.is_unit(x)) add("quotient-units", {nm(e)}, "q sends unit " + nm(e) + " to a non-unit");
    else ++unit_hits[x];
  }
  for (Arrow x : g.units()) {
    if (unit_hits[x] != 1) add("quotient-units", {g.name(x)}, "q is not a bijection on units at " + g.name(x));
    if (!sg.is_unit(t.include(x, 0))) add("inclusion-units", {g.name(x)}, "i(x, 1) is not a unit at " + g.name(x));
  }

  // q is a homomorphism.
  for (Arrow e = 0; e < sg.size(); ++e) {
    if (t.quotient(sg.source(e)) != g.source(t.quotient(e)) || t.quotient(sg.range(e)) != g.range(t.quotient(e)))
      add("quotient-homomorphism", {nm(e)}, "q does not preserve the endpoints of " + nm(e));
    for (Arrow f : sg.range_fiber(sg.source(e))) {
      const Arrow ef = sg.compose(e, f);
      if (ef == kNoArrow) continue;
      const Arrow a = t.quotient(e), b = t.quotient(f);
      if (!g.composable(a, b) || g.compose(a, b) != t.quotient(ef))
        add("quotient-homomorphism", {nm(e), nm(f)}, "q(ef) != q(e)q(f) at " + nm(e) + " " + nm(f));
    }
  }

  // i is a homomorphism.
  for (Arrow x : g.units())
    for (Exponent z = 0; z < n; ++z)
      for (Exponent w = 0; w < n; ++w) {
        const Arrow a = t.include(x, z), b = t.include(x, w);
        if (sg.compose(a, b) != t.include(x, z + w))
          add("inclusion-homomorphism", {g.name(x)},
              "i(x,z)i(x,w) != i(x,zw) at " + g.name(x) + " z=" + std::to_string(z) + " w=" + std::to_string(w));
      }

  // Centrality.
  for (Arrow e = 0; e < sg.size(); ++e) {
    const Arrow xr = t.quotient(sg.range(e)), xs = t.quotient(sg.source(e));
    if (!g.is_unit(xr) || !g.is_unit(xs)) continue;
    for (Exponent z = 1; z < n; ++z) {
      const Arrow lhs = sg.compose(t.include(xr, z), e);
      const Arrow rhs = sg.compose(e, t.include(xs, z));
      if (lhs == kNoArrow || lhs != rhs) {
        add("centrality", {nm(e)}, "i(r(e),z) e != e i(s(e),z) at " + nm(e) + " z=" + std::to_string(z));
        break;
      }
    }
  }
  return out;
}

Exponent unique_scalar(const DiscreteTwist& t, Arrow d, Arrow e) {
  const auto& sg = t.total();
  if (t.quotient(d) != t.quotient(e)) throw Error("q(" + sg.name(d) + ") != q(" + sg.name(e) + ")");
  const Arrow rho = sg.compose(e, sg.inverse(d));
  auto pre = rho == kNoArrow ? std::nullopt : t.inclusion_preimage(rho);
  if (!pre) throw Error("internal: e d^-1 is not in the image of i for " + sg.name(d) + ", " + sg.name(e));
  return pre->second;
}

Violations validate_section(const DiscreteTwist& t, const GlobalSection& p) {
  Violations out;
  const auto& g = t.base();
  if (p.image.size() != g.size()) return {{"section-size", {}, "section must have one entry per base arrow"}};
  for (Arrow a = 0; a < g.size(); ++a) {
    if (p(a) >= t.total().size() || t.quotient(p(a)) != a)
      out.push_back({"section-quotient", {g.name(a)}, "q(P(a)) != a at " + g.name(a)});
    else if (g.is_unit(a) && !t.total().is_unit(p(a)))
      out.push_back({"section-units", {g.name(a)}, "P does not send unit " + g.name(a) + " to a unit"});
  }
  return out;
}

GlobalSection find_section(const DiscreteTwist& t) {
  const auto& g = t.base();
  const auto& sg = t.total();
  GlobalSection p{std::vector<Arrow>(g.size(), kNoArrow)};
  for (Arrow e = 0; e < sg.size(); ++e) {
    const Arrow a = t.quotient(e);
    if (g.is_unit(a)) {
      if (sg.is_unit(e)) p.image[a] = e;
    } else if (p.image[a] == kNoArrow) {
      p.image[a] = e;
    }
  }
  for (Arrow a = 0; a < g.size(); ++a)
    if (p(a) == kNoArrow) throw Error("twist has no section: empty or unit-free fiber over " + g.name(a));
  return p;
}

GlobalSection shift_section(const DiscreteTwist& t, const GlobalSection& p, const Coboundary& b) {
  GlobalSection out = p;
  for (Arrow a = 0; a < p.image.size(); ++a) out.image[a] = t.act(b(a), p(a));
  return out;
}

TwoCocycle induced_cocycle(const DiscreteTwist& t, const GlobalSection& p) {
  const auto& g = t.base();
  const auto& sg = t.total();
  TwoCocycle s(t.base_ptr(), t.order());
  for_each_composable_pair(g, [&](Arrow a, Arrow b) {
    const Arrow rho = sg.compose(sg.compose(p(a), p(b)), sg.inverse(p(g.compose(a, b))));
    auto pre = rho == kNoArrow ? std::nullopt : t.inclusion_preimage(rho);
    if (!pre || pre->first != g.range(a))
      throw Error("P(a)P(b)P(ab)^-1 is not central at " + g.name(a) + " " + g.name(b));
    s.set(a, b, pre->second);
  });
  return s;
}

Violations validate_twist_morphism(const DiscreteTwist& from, const DiscreteTwist& to, const TwistMorphism& m) {
  Violations out;
  const auto& s1 = from.total();
  const auto& s2 = to.total();
  auto add = [&](std::string rule, std::vector<std::string> w, std::string msg) {
    if (out.size() < 200) out.push_back({std::move(rule), std::move(w), std::move(msg)});
  };
  if (m.map.size() != s1.size() || s1.size() != s2.size() || from.order() != to.order() ||
      !(from.base() == to.base())) {
    add("morphism-shape", {}, "morphism sizes or contexts do not match");
    return out;
  }
  std::vector<bool> hit(s2.size(), false);
  for (Arrow e = 0; e < s1.size(); ++e) {
    if (m(e) >= s2.size() || hit[m(e)]) {
      add("morphism-bijective", {s1.name(e)}, "map is not a bijection at " + s1.name(e));
      return out;
    }
    hit[m(e)] = true;
  }
  for (Arrow a = 0; a < s1.size(); ++a)
    for (Arrow b = 0; b < s1.size(); ++b) {
      if (s1.composable(a, b) != s2.composable(m(a), m(b))) {
        add("morphism-homomorphism", {s1.name(a), s1.name(b)}, "composability not preserved at " + s1.name(a) + " " + s1.name(b));
        continue;
      }
      if (s1.composable(a, b) && m(s1.compose(a, b)) != s2.compose(m(a), m(b)))
        add("morphism-homomorphism", {s1.name(a), s1.name(b)}, "m(ab) != m(a)m(b) at " + s1.name(a) + " " + s1.name(b));
    }
  for (Arrow e = 0; e < s1.size(); ++e)
    if (to.quotient(m(e)) != from.quotient(e))
      add("morphism-quotient", {s1.name(e)}, "q2(m(e)) != q1(e) at " + s1.name(e));
  for (Arrow x : from.base().units())
    for (Exponent k = 0; k < from.order(); ++k)
      if (m(from.include(x, k)) != to.include(x, k))
        add("morphism-inclusion", {from.base().name(x)}, "m(i1(x,z)) != i2(x,z) at " + from.base().name(x) + " z=" + std::to_string(k));
  return out;
}

bool respects_t_action(const DiscreteTwist& from, const DiscreteTwist& to, const TwistMorphism& m) {
  for (Arrow e = 0; e < from.total().size(); ++e)
    for (Exponent k = 0; k < from.order(); ++k)
      if (m(from.act(k, e)) != to.act(k, m(e))) return false;
  return true;
}

TwistMorphism compose_morphisms(const TwistMorphism& second, const TwistMorphism& first) {
  TwistMorphism out{std::vector<Arrow>(first.map.size())};
  for (std::size_t e = 0; e < first.map.size(); ++e) out.map[e] = second(first(static_cast<Arrow>(e)));
  return out;
}

TwistMorphism invert_morphism(const TwistMorphism& m) {
  TwistMorphism out{std::vector<Arrow>(m.map.size(), kNoArrow)};
  for (std::size_t e = 0; e < m.map.size(); ++e) {
    if (m.map[e] >= m.map.size() || out.map[m.map[e]] != kNoArrow) throw Error("morphism is not a bijection");
    out.map[m.map[e]] = static_cast<Arrow>(e);
  }
  return out;
}

TwistMorphism section_iso(const DiscreteTwist& t, const GlobalSection& p) {
  const std::uint32_t n = t.order();
  TwistMorphism m{std::vector<Arrow>(t.base().size() * n)};
  for (Arrow a = 0; a < t.base().size(); ++a)
    for (Exponent k = 0; k < n; ++k) m.map[a * n + k] = t.act(k, p(a));
  return m;
}

std::optional<TwistMorphism> twists_isomorphic(const DiscreteTwist& t1, const DiscreteTwist& t2) {
  if (t1.order() != t2.order() || !(t1.base() == t2.base())) throw Error("twists live over different (G, T) contexts");
  const GlobalSection p1 = find_section(t1), p2 = find_section(t2);
  const TwoCocycle s1 = induced_cocycle(t1, p1), s2 = induced_cocycle(t2, p2);
  auto b = check_cohomologous(s1, s2);
  if (!b) return std::nullopt;
  const std::uint32_t n = t1.order();
  // (a, z) -> (a, b(a) z) from G x_s1 T to G x_s2 T.
  TwistMorphism mid{std::vector<Arrow>(t1.base().size() * n)};
  for (Arrow a = 0; a < t1.base().size(); ++a)
    for (Exponent k = 0; k < n; ++k) mid.map[a * n + k] = a * n + ((*b)(a) + k) % n;
  const TwistMorphism phi1 = section_iso(t1, p1), phi2 = section_iso(t2, p2);
  TwistMorphism out = compose_morphisms(phi2, compose_morphisms(mid, invert_morphism(phi1)));
  const auto v = validate_twist_morphism(t1, t2, out);
  if (!v.empty()) throw Error("internal: assembled twist isomorphism is invalid:\n" + to_string(v));
  return out;
}

}  // namespace steinberg
