#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "steinberg/algebra.hpp"
#include "steinberg/twist.hpp"

namespace steinberg {

class EquivariantElement;

/// A_R(G; Sigma): T-equivariant functions on a twist, with a fixed section P
/// used to encode them.
class EquivariantContext : public std::enable_shared_from_this<EquivariantContext> {
  struct Key {};

 public:
  static std::shared_ptr<const EquivariantContext> create(DiscreteTwist t, GlobalSection p, UnitSubgroup units,
                                                          std::optional<Involution> inv = std::nullopt);
  static std::shared_ptr<const EquivariantContext> create(DiscreteTwist t, GlobalSection p, const Ring& ring,
                                                          std::optional<Involution> inv = std::nullopt);

  EquivariantContext(Key, DiscreteTwist t, GlobalSection p, UnitSubgroup units, std::optional<Involution> inv);

  const DiscreteTwist& twist() const { return twist_; }
  const GlobalSection& section() const { return section_; }
  const Ring& ring() const { return units_.ring(); }
  const UnitSubgroup& units() const { return units_; }
  const std::optional<Involution>& involution() const { return inv_; }
  /// The cocycle induced by the section.
  const TwoCocycle& induced() const { return induced_; }
  /// A_R(G, s^-1) for s the induced cocycle; the codomain of psi.
  const std::shared_ptr<const AlgebraContext>& psi_target() const { return target_; }

  /// h -> the element with f(P(a)) = h(a).
  EquivariantElement encode(std::vector<Scalar> h) const;

 private:
  DiscreteTwist twist_;
  GlobalSection section_;
  UnitSubgroup units_;
  std::optional<Involution> inv_;
  TwoCocycle induced_;
  std::shared_ptr<const AlgebraContext> target_;
};

/// Stored as h = f o P; f(z . P(a)) = z h(a).
class EquivariantElement {
 public:
  EquivariantElement(std::shared_ptr<const EquivariantContext> ctx, std::vector<Scalar> h);

  const EquivariantContext& context() const { return *ctx_; }
  const std::shared_ptr<const EquivariantContext>& context_ptr() const { return ctx_; }
  const std::vector<Scalar>& encoding() const { return h_; }
  /// f(e) for any arrow e of the twist.
  Scalar evaluate(Arrow e) const;
  /// f on every arrow of the twist.
  std::vector<Scalar> on_total() const;

  friend bool operator==(const EquivariantElement& a, const EquivariantElement& b) {
    return a.ctx_ == b.ctx_ && a.h_ == b.h_;
  }

 private:
  std::shared_ptr<const EquivariantContext> ctx_;
  std::vector<Scalar> h_;
};

/// Throws unless values (indexed by twist arrows) satisfy f(z.e) = z f(e).
EquivariantElement from_total_function(const std::shared_ptr<const EquivariantContext>& ctx,
                                       const std::vector<Scalar>& values);

/// (f *_Sigma g)(e) = sum over c in G^{s(q(e))} of f(e S(c)) g(S(c)^-1), on
/// every arrow of the twist, with S the summation section.
std::vector<Scalar> convolve_on_total(const EquivariantElement& f, const EquivariantElement& g,
                                      const GlobalSection& summation);
/// Product re-encoded against the context section; `summation` defaults to it.
EquivariantElement equiv_convolve(const EquivariantElement& f, const EquivariantElement& g,
                                  const std::optional<GlobalSection>& summation = std::nullopt);
/// f*(e) = conj(f(e^-1)).
EquivariantElement equiv_involute(const EquivariantElement& f);

/// f -> f o P in A_R(G, s^-1).
AlgebraElement psi(const EquivariantElement& f);
/// Same, into a caller-supplied algebra; throws unless its cocycle is s^-1
/// for s induced by the section.
AlgebraElement psi(const EquivariantElement& f, const std::shared_ptr<const AlgebraContext>& target);
/// The explicit inverse f(z . P(a)) = z h(a).
EquivariantElement psi_inverse(const std::shared_ptr<const EquivariantContext>& ctx, const AlgebraElement& h);

}  // namespace steinberg
