#pragma once

#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "steinberg/algebra.hpp"
#include "steinberg/catalog.hpp"
#include "steinberg/equivariant.hpp"
#include "steinberg/structure.hpp"
#include "steinberg/twist.hpp"

namespace testing {

using namespace steinberg;

// --- random generators (fixed seeds at every call site) ---

struct Gen {
  explicit Gen(std::uint64_t seed) : rng(seed) {}
  std::mt19937_64 rng;

  std::uint64_t below(std::uint64_t n) { return std::uniform_int_distribution<std::uint64_t>(0, n - 1)(rng); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

  Scalar scalar(const Ring& r);
  Scalar nonzero_scalar(const Ring& r);
  /// Each coefficient is zero with probability 1 - density.
  AlgebraElement element(const std::shared_ptr<const AlgebraContext>& ctx, double density = 0.6);
  AlgebraElement nonzero_element(const std::shared_ptr<const AlgebraContext>& ctx, double density = 0.6);
  AlgebraElement homogeneous(const std::shared_ptr<const AlgebraContext>& ctx, const Grading& c, std::int64_t degree);
  Coboundary coboundary(const std::shared_ptr<const FiniteGroupoid>& g, std::uint32_t order);
  std::vector<Arrow> permutation(std::size_t n);
};

// --- contexts built from the catalog ---

std::shared_ptr<const AlgebraContext> context(const std::string& entry, const std::string& cocycle, const Ring& ring,
                                              std::optional<Involution> inv = std::nullopt);
/// Trivial cocycle of the given order.
TwoCocycle trivial(const std::string& entry, std::uint32_t order = 1);

// --- twist mutations ---

/// Same twist with the arrows of Sigma renumbered by perm (old -> new).
DiscreteTwist relabel(const DiscreteTwist& t, const std::vector<Arrow>& perm);
/// Drops one non-unit arrow of Sigma (and its compositions).
DiscreteTwist drop_arrow(const DiscreteTwist& t, Arrow victim);
/// Points i(x, k) at `target` instead.
DiscreteTwist redirect_inclusion(const DiscreteTwist& t, Arrow unit, Exponent k, Arrow target);

// --- independent oracles ---

namespace oracle {

/// Double loop over every pair of arrows, straight from the definition.
std::vector<Scalar> convolve(const AlgebraContext& ctx, const std::vector<Scalar>& f, const std::vector<Scalar>& g);

/// Over GF(p) only: span of d_a f d_b for all arrows a, b, via integer
/// elimination mod p. Returns the rank.
std::size_t ideal_rank_gfp(const AlgebraContext& ctx, const std::vector<std::vector<Scalar>>& generators);
/// Same span; true iff v lies in it.
bool in_ideal_gfp(const AlgebraContext& ctx, const std::vector<std::vector<Scalar>>& generators,
                  const std::vector<Scalar>& v);

struct SimplicityScan {
  bool simple;
  std::uint64_t first_proper;  // index in base-p digit order, arrow 0 least significant
};
/// Every nonzero element of a GF(p) algebra, least index first.
SimplicityScan scan_gfp(const AlgebraContext& ctx);

struct CohomologyCount {
  std::size_t cocycles;
  std::size_t classes;
};
/// Enumerates all normalised Z/n tables satisfying the cocycle identity and
/// groups them under every b: G -> Z/n vanishing on units.
CohomologyCount count_cohomology(const FiniteGroupoid& g, std::uint32_t n);

/// Multiplicative order of arrow e in a twist over a one-unit groupoid.
std::size_t arrow_order(const FiniteGroupoid& sigma, Arrow e);

}  // namespace oracle

}  // namespace testing
