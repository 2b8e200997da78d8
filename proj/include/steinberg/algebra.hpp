#pragma once

#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "steinberg/coefficients.hpp"
#include "steinberg/cocycle.hpp"

namespace steinberg {

class AlgebraElement;

/// The twisted Steinberg algebra A_R(G, s). Every function on a finite
/// discrete groupoid is locally constant with compact support, so the
/// algebra is free over R on the point masses and has dimension |G|.
class AlgebraContext : public std::enable_shared_from_this<AlgebraContext> {
  struct Key {};

 public:
  /// Throws unless s is a valid cocycle of the same order as T and the
  /// involution, if any, inverts T.
  static std::shared_ptr<const AlgebraContext> create(TwoCocycle s, UnitSubgroup t,
                                                      std::optional<Involution> inv = std::nullopt);
  /// Uses the canonical order-n subgroup of `ring`.
  static std::shared_ptr<const AlgebraContext> create(TwoCocycle s, const Ring& ring,
                                                      std::optional<Involution> inv = std::nullopt);

  AlgebraContext(Key, TwoCocycle s, UnitSubgroup t, std::optional<Involution> inv);

  const FiniteGroupoid& groupoid() const { return sigma_.groupoid(); }
  const Ring& ring() const { return t_.ring(); }
  const UnitSubgroup& units() const { return t_; }
  const TwoCocycle& cocycle() const { return sigma_; }
  const std::optional<Involution>& involution() const { return inv_; }
  std::size_t dimension() const { return groupoid().size(); }

  /// s(a, b) embedded in R.
  const Scalar& cocycle_value(Arrow a, Arrow b) const { return t_.embed(sigma_(a, b)); }

  AlgebraElement zero() const;
  AlgebraElement delta(Arrow a) const;
  AlgebraElement delta(Arrow a, const Scalar& c) const;
  /// 1 on the units: the multiplicative identity.
  AlgebraElement identity() const;
  AlgebraElement element(std::vector<Scalar> coefficients) const;

  /// Same ring, T, cocycle and involution.
  bool same_algebra(const AlgebraContext& other) const;

 private:
  TwoCocycle sigma_;
  UnitSubgroup t_;
  std::optional<Involution> inv_;
};

/// Function on arrows, stored densely (one coefficient per arrow).
class AlgebraElement {
 public:
  AlgebraElement(std::shared_ptr<const AlgebraContext> ctx, std::vector<Scalar> coefficients);

  const AlgebraContext& context() const { return *ctx_; }
  const std::shared_ptr<const AlgebraContext>& context_ptr() const { return ctx_; }
  const Scalar& operator[](Arrow a) const { return c_[a]; }
  const std::vector<Scalar>& coefficients() const { return c_; }
  std::vector<Arrow> support() const;
  bool is_zero() const;

  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b);
  friend AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b);
  friend AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b);
  friend AlgebraElement operator-(const AlgebraElement& a);

 private:
  std::shared_ptr<const AlgebraContext> ctx_;
  std::vector<Scalar> c_;
};

AlgebraElement scale(const Scalar& lambda, const AlgebraElement& f);

AlgebraElement char_fn(const AlgebraContext& ctx, const Bisection& b);
/// Throws unless the arrows form a bisection.
AlgebraElement char_fn(const AlgebraContext& ctx, std::span<const Arrow> arrows);

/// (f*g)(c) = sum over ab = c of s(a,b) f(a) g(b). Parallel over output arrows.
AlgebraElement convolve(const AlgebraElement& f, const AlgebraElement& g);
AlgebraElement operator*(const AlgebraElement& f, const AlgebraElement& g);
/// d_a * f without a full convolution.
AlgebraElement left_translate(Arrow a, const AlgebraElement& f);
/// f * d_a without a full convolution.
AlgebraElement right_translate(const AlgebraElement& f, Arrow a);

namespace reference {
/// Serial convolution over composable pairs of supp(f) x supp(g).
AlgebraElement convolve(const AlgebraElement& f, const AlgebraElement& g);
}  // namespace reference

/// f*(c) = s(c, c^-1)^-1 conj(f(c^-1)). Throws without an involution.
AlgebraElement involute(const AlgebraElement& f);

struct DecompositionTerm {
  Scalar coefficient;
  Bisection bisection;
};

/// f = sum of coefficient * 1_B over pairwise disjoint bisections.
/// Arrows are grouped by coefficient (groups ordered by least arrow) and each
/// group is split greedily in ascending arrow order. Throws on zero input.
std::vector<DecompositionTerm> disjoint_decomposition(const AlgebraElement& f);
AlgebraElement recompose(const AlgebraContext& ctx, const std::vector<DecompositionTerm>& terms);

/// 1_E for E the ranges and sources of all supports.
AlgebraElement local_unit(const AlgebraContext& ctx, std::span<const AlgebraElement> fs);

/// f -> b f from A(G, s) to A(G, t) = target, where s = apply_coboundary(t, b).
AlgebraElement coboundary_iso(const std::shared_ptr<const AlgebraContext>& target, const Coboundary& b,
                              const AlgebraElement& f);

/// f restricted to c^-1(d).
AlgebraElement graded_component(const AlgebraElement& f, const Grading& c, std::int64_t d);
/// Nonzero homogeneous components in ascending degree.
std::vector<std::pair<std::int64_t, AlgebraElement>> graded_components(const AlgebraElement& f, const Grading& c);

}  // namespace steinberg
