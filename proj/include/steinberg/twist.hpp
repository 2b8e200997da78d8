#pragma once

#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "steinberg/cocycle.hpp"

namespace steinberg {

/// Central extension G0 x T -> Sigma -> G of a finite groupoid by Z/n.
class DiscreteTwist {
 public:
  /// inclusion[x] lists i(x, 0..n-1) for each unit x of G (empty for other
  /// arrows); quotient[e] = q(e). No axioms are checked here.
  DiscreteTwist(std::shared_ptr<const FiniteGroupoid> base, std::uint32_t order, FiniteGroupoid total,
                std::vector<std::vector<Arrow>> inclusion, std::vector<Arrow> quotient);

  const FiniteGroupoid& base() const { return *base_; }
  const std::shared_ptr<const FiniteGroupoid>& base_ptr() const { return base_; }
  const FiniteGroupoid& total() const { return total_; }
  std::uint32_t order() const { return order_; }

  /// kNoArrow when `unit` is not a unit of G.
  Arrow include(Arrow unit, Exponent k) const {
    return inclusion_[unit].empty() ? kNoArrow : inclusion_[unit][k % order_];
  }
  Arrow quotient(Arrow e) const { return quotient_[e]; }
  const std::vector<std::vector<Arrow>>& inclusion_table() const { return inclusion_; }
  const std::vector<Arrow>& quotient_table() const { return quotient_; }
  /// (x, k) with i(x, k) = e, when e lies in the image of i.
  std::optional<std::pair<Arrow, Exponent>> inclusion_preimage(Arrow e) const;
  /// z . e = i(q(r(e)), z) e.
  Arrow act(Exponent k, Arrow e) const;

  friend bool operator==(const DiscreteTwist& a, const DiscreteTwist& b) {
    return a.order_ == b.order_ && *a.base_ == *b.base_ && a.total_ == b.total_ &&
           a.inclusion_ == b.inclusion_ && a.quotient_ == b.quotient_;
  }

 private:
  std::shared_ptr<const FiniteGroupoid> base_;
  std::uint32_t order_;
  FiniteGroupoid total_;
  std::vector<std::vector<Arrow>> inclusion_;
  std::vector<Arrow> quotient_;
  std::vector<std::pair<Arrow, Exponent>> preimage_;  // (kNoArrow, 0) outside the image
};

/// G x_s T: arrows (a, k) at index a*n + k named "<a>@k",
/// (a, z)(b, w) = (ab, s(a,b) z w).
DiscreteTwist build_twist(const TwoCocycle& s);
Violations validate_twist(const DiscreteTwist& t);
/// The unique z with e = i(r(e), z) d. Throws unless q(d) = q(e).
Exponent unique_scalar(const DiscreteTwist& t, Arrow d, Arrow e);

/// P: G -> Sigma with q P = id and units to units.
struct GlobalSection {
  std::vector<Arrow> image;
  Arrow operator()(Arrow a) const { return image[a]; }
  friend bool operator==(const GlobalSection&, const GlobalSection&) = default;
};

Violations validate_section(const DiscreteTwist& t, const GlobalSection& p);
/// Least-index fiber element per arrow; units go to the unit of their fiber.
GlobalSection find_section(const DiscreteTwist& t);
/// a -> b(a) . P(a).
GlobalSection shift_section(const DiscreteTwist& t, const GlobalSection& p, const Coboundary& b);
/// P(a)P(b)P(ab)^-1 = i(r(a), s(a,b)).
TwoCocycle induced_cocycle(const DiscreteTwist& t, const GlobalSection& p);

/// Arrow map Sigma1 -> Sigma2.
struct TwistMorphism {
  std::vector<Arrow> map;
  Arrow operator()(Arrow e) const { return map[e]; }
  friend bool operator==(const TwistMorphism&, const TwistMorphism&) = default;
};

/// Isomorphism of groupoids commuting with i and q.
Violations validate_twist_morphism(const DiscreteTwist& from, const DiscreteTwist& to, const TwistMorphism& m);
/// m(z . e) = z . m(e) for all z, e.
bool respects_t_action(const DiscreteTwist& from, const DiscreteTwist& to, const TwistMorphism& m);
TwistMorphism compose_morphisms(const TwistMorphism& second, const TwistMorphism& first);
TwistMorphism invert_morphism(const TwistMorphism& m);

/// (a, z) -> z . P(a), from build_twist(induced_cocycle(t, p)) onto t.
TwistMorphism section_iso(const DiscreteTwist& t, const GlobalSection& p);
/// An isomorphism t1 -> t2 when their induced cocycles are cohomologous.
std::optional<TwistMorphism> twists_isomorphic(const DiscreteTwist& t1, const DiscreteTwist& t2);

}  // namespace steinberg
