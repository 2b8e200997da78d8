#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "steinberg/algebra.hpp"
#include "steinberg/structure.hpp"
#include "steinberg/twist.hpp"

namespace steinberg {

/// Malformed text input; the message carries the line number.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// First keyword of a file (`groupoid`, `cocycle`, ...).
std::string file_kind(std::string_view text);
/// Value of a `groupoid <path>` line, if any.
std::optional<std::string> referenced_groupoid(std::string_view text);
/// Value of a `ring <spec>` line, if any.
std::optional<std::string> referenced_ring(std::string_view text);

std::string write_groupoid(const FiniteGroupoid& g);
FiniteGroupoid read_groupoid(std::string_view text);

std::string write_cocycle(const TwoCocycle& s, const std::optional<std::string>& groupoid_path = std::nullopt);
TwoCocycle read_cocycle(std::string_view text, const std::shared_ptr<const FiniteGroupoid>& g);

std::string write_coboundary(const Coboundary& b);
Coboundary read_coboundary(std::string_view text, const std::shared_ptr<const FiniteGroupoid>& g);

std::string write_grading(const Grading& c, const std::optional<std::string>& groupoid_path = std::nullopt);
Grading read_grading(std::string_view text, const std::shared_ptr<const FiniteGroupoid>& g);

std::string write_function(const FiniteGroupoid& g, const Ring& ring, const std::vector<Scalar>& values);
/// Values per arrow of g; a `ring` line, when present, must name `ring`.
std::vector<Scalar> read_function(std::string_view text, const FiniteGroupoid& g, const Ring& ring);
std::string write_element(const AlgebraElement& f);
AlgebraElement read_element(std::string_view text, const std::shared_ptr<const AlgebraContext>& ctx);

std::string write_twist(const DiscreteTwist& t, const std::optional<std::string>& groupoid_path = std::nullopt);
DiscreteTwist read_twist(std::string_view text, const std::shared_ptr<const FiniteGroupoid>& base);

std::string write_section(const DiscreteTwist& t, const GlobalSection& p);
GlobalSection read_section(std::string_view text, const DiscreteTwist& t);

std::string write_morphism(const DiscreteTwist& from, const DiscreteTwist& to, const TwistMorphism& m);
TwistMorphism read_morphism(std::string_view text, const DiscreteTwist& from, const DiscreteTwist& to);

std::string write_ideal(const Ideal& ideal);
/// Throws unless the rows span a two-sided ideal.
Ideal read_ideal(std::string_view text, const std::shared_ptr<const AlgebraContext>& ctx);

std::string write_decomposition(const AlgebraContext& ctx, const std::vector<DecompositionTerm>& terms);
std::vector<DecompositionTerm> read_decomposition(std::string_view text, const AlgebraContext& ctx);

std::string write_components(const AlgebraContext& ctx, const Grading& c,
                             const std::vector<std::pair<std::int64_t, AlgebraElement>>& comps);
std::vector<std::pair<std::int64_t, AlgebraElement>> read_components(std::string_view text,
                                                                     const std::shared_ptr<const AlgebraContext>& ctx);

}  // namespace steinberg
