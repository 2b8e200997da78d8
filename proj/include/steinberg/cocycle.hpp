#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "steinberg/groupoid.hpp"

namespace steinberg {

/// An element of Z/n; embedded into the ring only when an algebra is formed.
using Exponent = std::uint32_t;

/// T-valued 2-cocycle stored as exponents mod n on composable pairs.
class TwoCocycle {
 public:
  /// The trivial cocycle.
  TwoCocycle(std::shared_ptr<const FiniteGroupoid> g, std::uint32_t order);

  const FiniteGroupoid& groupoid() const { return *g_; }
  const std::shared_ptr<const FiniteGroupoid>& groupoid_ptr() const { return g_; }
  std::uint32_t order() const { return order_; }

  Exponent operator()(Arrow a, Arrow b) const { return table_[static_cast<std::size_t>(a) * g_->size() + b]; }
  /// Throws on non-composable pairs; the value is reduced mod n.
  void set(Arrow a, Arrow b, std::int64_t k);
  bool is_trivial() const;

  friend bool operator==(const TwoCocycle& a, const TwoCocycle& b) {
    return a.order_ == b.order_ && *a.g_ == *b.g_ && a.table_ == b.table_;
  }

 private:
  std::shared_ptr<const FiniteGroupoid> g_;
  std::uint32_t order_;
  std::vector<Exponent> table_;
};

Violations validate_cocycle(const TwoCocycle& s);
TwoCocycle invert_cocycle(const TwoCocycle& s);
TwoCocycle multiply_cocycles(const TwoCocycle& s, const TwoCocycle& t);

/// T-valued function on arrows vanishing on units.
class Coboundary {
 public:
  Coboundary(std::shared_ptr<const FiniteGroupoid> g, std::uint32_t order);
  const FiniteGroupoid& groupoid() const { return *g_; }
  std::uint32_t order() const { return order_; }
  Exponent operator()(Arrow a) const { return values_[a]; }
  /// Throws when a is a unit and k is nonzero mod n.
  void set(Arrow a, std::int64_t k);
  const std::vector<Exponent>& values() const { return values_; }

  friend bool operator==(const Coboundary& a, const Coboundary& b) {
    return a.order_ == b.order_ && *a.g_ == *b.g_ && a.values_ == b.values_;
  }

 private:
  std::shared_ptr<const FiniteGroupoid> g_;
  std::uint32_t order_;
  std::vector<Exponent> values_;
};

/// t(a,b) = s(a,b) b(a) b(b) b(ab)^-1.
TwoCocycle apply_coboundary(const TwoCocycle& s, const Coboundary& b);

/// Some b with apply_coboundary(t, b) == s, found by diagonalising the
/// linear system over Z/n; none when s and t are not cohomologous.
std::optional<Coboundary> check_cohomologous(const TwoCocycle& s, const TwoCocycle& t);

/// Lexicographically least b with apply_coboundary(t, b) == s, found by
/// scanning all n^(non-units) candidates (OpenMP). Throws above `cap`.
std::optional<Coboundary> find_coboundary_brute_force(const TwoCocycle& s, const TwoCocycle& t,
                                                      std::uint64_t cap = std::uint64_t{1} << 20);

namespace reference {
/// Serial twin of steinberg::find_coboundary_brute_force.
std::optional<Coboundary> find_coboundary_brute_force(const TwoCocycle& s, const TwoCocycle& t,
                                                      std::uint64_t cap = std::uint64_t{1} << 20);
}  // namespace reference

/// Grading target: the integers, Z/k, or a finite group given by its table.
class GradingGroup {
 public:
  static GradingGroup integers();
  static GradingGroup cyclic(std::uint32_t k);
  /// table[a*k + b] = ab; throws unless it is a group.
  static GradingGroup from_table(std::uint32_t k, std::vector<std::uint32_t> table);

  bool is_integers() const { return kind_ == Kind::Integers; }
  bool is_table() const { return kind_ == Kind::Table; }
  std::uint32_t size() const { return k_; }
  const std::vector<std::uint32_t>& table() const { return table_; }
  std::int64_t identity() const { return identity_; }
  std::int64_t multiply(std::int64_t a, std::int64_t b) const;
  bool contains(std::int64_t a) const;
  /// `Z`, `Z/k` or `table k`.
  std::string name() const;

  friend bool operator==(const GradingGroup&, const GradingGroup&) = default;

 private:
  enum class Kind { Integers, Cyclic, Table };
  Kind kind_ = Kind::Integers;
  std::uint32_t k_ = 0;
  std::vector<std::uint32_t> table_;
  std::int64_t identity_ = 0;
};

/// Groupoid homomorphism c: G -> Gamma.
class Grading {
 public:
  /// All degrees start at the identity.
  Grading(std::shared_ptr<const FiniteGroupoid> g, GradingGroup group);
  const FiniteGroupoid& groupoid() const { return *g_; }
  const GradingGroup& group() const { return group_; }
  std::int64_t operator()(Arrow a) const { return degree_[a]; }
  void set(Arrow a, std::int64_t d);
  const std::vector<std::int64_t>& degrees() const { return degree_; }
  /// Distinct degrees in ascending order.
  std::vector<std::int64_t> support() const;

  friend bool operator==(const Grading& a, const Grading& b) {
    return a.group_ == b.group_ && *a.g_ == *b.g_ && a.degree_ == b.degree_;
  }

 private:
  std::shared_ptr<const FiniteGroupoid> g_;
  GradingGroup group_;
  std::vector<std::int64_t> degree_;
};

Violations validate_grading(const Grading& c);

}  // namespace steinberg
