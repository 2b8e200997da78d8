#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "steinberg/error.hpp"

namespace steinberg {

using Arrow = std::uint32_t;
inline constexpr Arrow kNoArrow = std::numeric_limits<Arrow>::max();

/// Finite discrete groupoid with an explicit composition table.
///
/// Every subset of a finite discrete groupoid is compact open, so the usual
/// topological hypotheses are automatic; in particular "effective" and
/// "principal" coincide here.
///
/// The constructor accepts incoherent tables so that broken groupoids can be
/// inspected; call validate_groupoid before relying on the axioms.
class FiniteGroupoid {
 public:
  struct Data {
    std::vector<std::string> names;
    std::vector<bool> is_unit;
    std::vector<Arrow> source;
    std::vector<Arrow> range;
    std::vector<Arrow> inverse;
    std::vector<Arrow> comp;  // row-major size()*size(); kNoArrow where undefined
  };

  FiniteGroupoid() = default;
  /// Throws Error on size mismatches, duplicate names or out-of-range indices.
  explicit FiniteGroupoid(Data data);

  std::size_t size() const { return data_.names.size(); }
  const Data& data() const { return data_; }

  bool is_unit(Arrow a) const { return data_.is_unit[a]; }
  const std::vector<Arrow>& units() const { return units_; }
  Arrow source(Arrow a) const { return data_.source[a]; }
  Arrow range(Arrow a) const { return data_.range[a]; }
  Arrow inverse(Arrow a) const { return data_.inverse[a]; }
  /// kNoArrow when the table has no entry.
  Arrow compose(Arrow a, Arrow b) const { return data_.comp[static_cast<std::size_t>(a) * size() + b]; }
  bool composable(Arrow a, Arrow b) const { return source(a) == range(b); }

  const std::string& name(Arrow a) const { return data_.names[a]; }
  std::optional<Arrow> find(const std::string& name) const;
  /// Throws Error when absent.
  Arrow arrow(const std::string& name) const;

  /// Arrows with range x (G^x) and with source x (G_x); empty for non-units.
  const std::vector<Arrow>& range_fiber(Arrow x) const { return range_fibers_[x]; }
  const std::vector<Arrow>& source_fiber(Arrow x) const { return source_fibers_[x]; }

  friend bool operator==(const FiniteGroupoid& a, const FiniteGroupoid& b) {
    return a.data_.names == b.data_.names && a.data_.is_unit == b.data_.is_unit &&
           a.data_.source == b.data_.source && a.data_.range == b.data_.range &&
           a.data_.inverse == b.data_.inverse && a.data_.comp == b.data_.comp;
  }

 private:
  Data data_;
  std::vector<Arrow> units_;
  std::vector<std::vector<Arrow>> range_fibers_;
  std::vector<std::vector<Arrow>> source_fibers_;
  std::unordered_map<std::string, Arrow> index_;
};

Violations validate_groupoid(const FiniteGroupoid& g);
/// Throws Error listing every violation.
void require_valid(const FiniteGroupoid& g);

/// Calls f(a, b, c) for every composable triple, a(bc) = (ab)c order.
template <class F>
void for_each_composable_triple(const FiniteGroupoid& g, F&& f) {
  for (Arrow b = 0; b < g.size(); ++b)
    for (Arrow a : g.source_fiber(g.range(b)))
      for (Arrow c : g.range_fiber(g.source(b))) f(a, b, c);
}

/// Calls f(a, b) for every composable pair in row-major order.
template <class F>
void for_each_composable_pair(const FiniteGroupoid& g, F&& f) {
  for (Arrow a = 0; a < g.size(); ++a)
    for (Arrow b : g.range_fiber(g.source(a))) f(a, b);
}

std::vector<Arrow> isotropy(const FiniteGroupoid& g);
/// Finite discrete: effective iff principal iff isotropy consists of units.
bool is_effective(const FiniteGroupoid& g);
/// Orbits s(r^-1(x)), each sorted, ordered by least unit.
std::vector<std::vector<Arrow>> orbits(const FiniteGroupoid& g);
bool is_minimal(const FiniteGroupoid& g);

struct Restriction {
  FiniteGroupoid groupoid;
  std::vector<Arrow> embedding;  // new index -> old index
};

/// Subgroupoid s^-1(U). Throws when U is not a set of units or not invariant.
Restriction restrict_groupoid(const FiniteGroupoid& g, std::span<const Arrow> units);

/// Sorted set of arrows on which range and source are injective.
class Bisection {
 public:
  Bisection() = default;
  const std::vector<Arrow>& arrows() const { return arrows_; }
  bool empty() const { return arrows_.empty(); }
  std::size_t size() const { return arrows_.size(); }
  bool contains(Arrow a) const;
  friend bool operator==(const Bisection&, const Bisection&) = default;

 private:
  friend Bisection make_bisection(const FiniteGroupoid&, std::vector<Arrow>);
  std::vector<Arrow> arrows_;
};

bool is_bisection(const FiniteGroupoid& g, std::span<const Arrow> arrows);
/// Throws Error naming the arrows that break injectivity.
Bisection make_bisection(const FiniteGroupoid& g, std::vector<Arrow> arrows);
Bisection bisection_product(const FiniteGroupoid& g, const Bisection& b, const Bisection& d);
Bisection bisection_inverse(const FiniteGroupoid& g, const Bisection& b);
std::vector<Arrow> range_set(const FiniteGroupoid& g, const Bisection& b);
std::vector<Arrow> source_set(const FiniteGroupoid& g, const Bisection& b);
/// All bisections in a deterministic order; throws when more than `cap` exist.
std::vector<Bisection> all_bisections(const FiniteGroupoid& g, std::size_t cap = 100000);

std::string format_arrows(const FiniteGroupoid& g, std::span<const Arrow> arrows);

}  // namespace steinberg
