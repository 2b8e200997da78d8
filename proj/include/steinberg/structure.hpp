#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "steinberg/algebra.hpp"

namespace steinberg {

/// Subspace of R^m in reduced row echelon form; pivots chosen by least index.
class RowSpace {
 public:
  RowSpace(Ring ring, std::size_t dim);

  const Ring& ring() const { return ring_; }
  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }
  /// Rows sorted by pivot, each pivot normalised to 1.
  const std::vector<std::vector<Scalar>>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  std::vector<Scalar> reduce(std::vector<Scalar> v) const;
  bool contains(const std::vector<Scalar>& v) const;
  /// Adds v; returns the reduced, normalised new row when v was independent.
  std::optional<std::vector<Scalar>> add(std::vector<Scalar> v);

 private:
  Ring ring_;
  std::size_t dim_;
  std::vector<std::vector<Scalar>> rows_;
  std::vector<std::size_t> pivots_;
};

/// Two-sided ideal of A_F(G, s) over a field, kept as a reduced basis.
class Ideal {
 public:
  Ideal(std::shared_ptr<const AlgebraContext> ctx, RowSpace space);

  const AlgebraContext& context() const { return *ctx_; }
  const std::shared_ptr<const AlgebraContext>& context_ptr() const { return ctx_; }
  std::size_t dimension() const { return space_.rank(); }
  bool is_zero() const { return dimension() == 0; }
  bool is_whole() const { return dimension() == ctx_->dimension(); }
  std::vector<AlgebraElement> basis() const;
  const RowSpace& space() const { return space_; }
  bool contains(const AlgebraElement& f) const;

  friend bool operator==(const Ideal& a, const Ideal& b) {
    return a.ctx_->same_algebra(*b.ctx_) && a.space_.rows() == b.space_.rows();
  }

 private:
  std::shared_ptr<const AlgebraContext> ctx_;
  RowSpace space_;
};

/// Smallest two-sided ideal containing fs. Throws over non-fields.
Ideal ideal_generated(const std::shared_ptr<const AlgebraContext>& ctx, std::span<const AlgebraElement> fs);
bool ideal_member(const Ideal& ideal, const AlgebraElement& f);
/// True iff d_a * v and v * d_a stay in the ideal for every basis vector v.
bool is_closed(const Ideal& ideal);
/// Span of d_c with s(c) in U, the ideal A(G_U). Throws unless U is invariant.
Ideal restriction_ideal(const std::shared_ptr<const AlgebraContext>& ctx, std::span<const Arrow> units);

/// A unit x with d_x in the ideal. Throws on a zero ideal or a non-effective groupoid.
std::vector<Arrow> ck_witness(const Ideal& ideal);
bool is_graded_ideal(const Ideal& ideal, const Grading& c);
/// A unit x with d_x in a graded ideal, built from a homogeneous component.
/// Throws unless the ideal is nonzero and graded and c^-1(identity) is effective.
std::vector<Arrow> graded_ck_witness(const Ideal& ideal, const Grading& c);

enum class SimplicityMode { Exhaustive, Structural };
enum class Verdict { Simple, NotSimple, Unknown };

std::string to_string(Verdict v);

struct SimplicityResult {
  Verdict verdict = Verdict::Unknown;
  /// Exhaustive: the least element generating a proper ideal.
  std::optional<AlgebraElement> generator;
  /// The proper nonzero ideal found (exhaustive or structural).
  std::optional<Ideal> proper_ideal;
  /// Structural: the invariant unit set U with proper_ideal = A(G_U).
  std::vector<Arrow> invariant_units;
  std::string reason;
};

inline constexpr std::uint64_t kDefaultExhaustiveCap = std::uint64_t{1} << 20;

/// Exhaustive: every nonzero element of a finite algebra (|F|^|G| <= cap)
/// generates the whole algebra; elements are scanned in index order
/// sum digit_a |F|^a (OpenMP). Structural: minimality of an effective G.
SimplicityResult is_simple(const std::shared_ptr<const AlgebraContext>& ctx, SimplicityMode mode,
                           std::uint64_t cap = kDefaultExhaustiveCap);

/// Element number `index` in the exhaustive enumeration order.
AlgebraElement enumerate_element(const std::shared_ptr<const AlgebraContext>& ctx, std::uint64_t index);

namespace reference {
/// Serial exhaustive scan using ideal_generated for every element.
SimplicityResult exhaustive_simplicity(const std::shared_ptr<const AlgebraContext>& ctx,
                                       std::uint64_t cap = kDefaultExhaustiveCap);
}  // namespace reference

}  // namespace steinberg
