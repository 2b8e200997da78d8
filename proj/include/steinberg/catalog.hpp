#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "steinberg/cocycle.hpp"
#include "steinberg/coefficients.hpp"

namespace steinberg {

/// Finite group given by a multiplication table over indices 0..k-1.
struct GroupTable {
  std::vector<std::string> names;
  std::vector<std::uint32_t> mul;  // mul[a*k + b] = ab

  std::uint32_t order() const { return static_cast<std::uint32_t>(names.size()); }
  std::uint32_t operator()(std::uint32_t a, std::uint32_t b) const { return mul[std::size_t{a} * order() + b]; }
  std::uint32_t identity() const;
  std::uint32_t inverse(std::uint32_t a) const;
};

/// Throws unless the table is a group.
void validate_group_table(const GroupTable& t);
GroupTable cyclic_group(std::uint32_t k);
GroupTable klein_group();
GroupTable symmetric_group3();
GroupTable dihedral_group4();
GroupTable quaternion_group();

/// Units (i,i), arrows (i,j) at index (i-1)n + (j-1), with r = (i,i), s = (j,j).
FiniteGroupoid pair_groupoid(std::size_t n);
/// One unit (the identity); arrows are the group elements.
FiniteGroupoid group_groupoid(const GroupTable& t);
/// action[g][x] = g.x. Arrows (g,x) at index g*|X| + x with s = x, r = g.x.
FiniteGroupoid action_groupoid(const GroupTable& t, const std::vector<std::string>& points,
                               const std::vector<std::vector<std::uint32_t>>& action);
/// Arrows of a first, then b; names get "1." / "2." prefixes only if they clash.
FiniteGroupoid disjoint_union(const FiniteGroupoid& a, const FiniteGroupoid& b);

/// Every normalised table with values in Z/n passing validate_cocycle,
/// ordered by the table read as a base-n number (first free pair most
/// significant). Throws when n^(free pairs) exceeds cap.
std::vector<TwoCocycle> enumerate_cocycles(const std::shared_ptr<const FiniteGroupoid>& g, std::uint32_t order,
                                           std::uint64_t cap = std::uint64_t{1} << 20);

struct ExpectedFacts {
  bool effective;
  bool minimal;
  std::size_t orbit_count;
  std::size_t dimension;
};

struct CatalogEntry {
  std::string name;
  std::string description;
  std::shared_ptr<const FiniteGroupoid> groupoid;
  ExpectedFacts facts;
  std::vector<std::pair<std::string, TwoCocycle>> cocycles;
  std::vector<std::pair<std::string, Grading>> gradings;

  const TwoCocycle& cocycle(const std::string& name) const;
  const Grading& grading(const std::string& name) const;
};

/// All entries; every object is validated and the expected facts are
/// recomputed on first use (throws on mismatch).
const std::vector<CatalogEntry>& catalog();
const CatalogEntry& catalog_entry(const std::string& name);

/// Rings with an involution inverting their canonical small unit subgroups.
struct RingChoice {
  Ring ring;
  Involution involution;
};
std::vector<RingChoice> ring_catalog();

}  // namespace steinberg
