#include "steinberg/algebra.hpp"

#include <algorithm>
#include <cstdint>

namespace steinberg {

namespace {

constexpr std::int64_t kParallelMinArrows = 32;

void require_same(const AlgebraElement& f, const AlgebraElement& g) {
  if (f.context_ptr() != g.context_ptr() && !f.context().same_algebra(g.context()))
    throw Error("elements belong to different algebras");
}

void require_grading(const AlgebraContext& ctx, const Grading& c) {
  if (!(c.groupoid() == ctx.groupoid())) throw Error("grading lives on a different groupoid");
  auto v = validate_grading(c);
  if (!v.empty()) throw Error("invalid grading:\n" + to_string(v));
}

}  // namespace

std::shared_ptr<const AlgebraContext> AlgebraContext::create(TwoCocycle s, UnitSubgroup t, std::optional<Involution> inv) {
  if (s.order() != t.order())
    throw Error("cocycle order " + std::to_string(s.order()) + " differs from T order " + std::to_string(t.order()));
  auto v = validate_groupoid(s.groupoid());
  if (!v.empty()) throw Error("invalid groupoid:\n" + to_string(v));
  v = validate_cocycle(s);
  if (!v.empty()) throw Error("invalid cocycle:\n" + to_string(v));
  if (inv && !check_t_inverse_involution(t.ring(), *inv, t))
    throw Error("involution " + inv->name() + " does not invert T in " + t.ring().name());
  return std::make_shared<const AlgebraContext>(Key{}, std::move(s), std::move(t), std::move(inv));
}

std::shared_ptr<const AlgebraContext> AlgebraContext::create(TwoCocycle s, const Ring& ring, std::optional<Involution> inv) {
  auto t = UnitSubgroup::canonical(ring, s.order());
  return create(std::move(s), std::move(t), std::move(inv));
}

AlgebraContext::AlgebraContext(Key, TwoCocycle s, UnitSubgroup t, std::optional<Involution> inv)
    : sigma_(std::move(s)), t_(std::move(t)), inv_(std::move(inv)) {}

AlgebraElement AlgebraContext::zero() const {
  return AlgebraElement(shared_from_this(), std::vector<Scalar>(dimension(), ring().zero()));
}

AlgebraElement AlgebraContext::delta(Arrow a) const { return delta(a, ring().one()); }

AlgebraElement AlgebraContext::delta(Arrow a, const Scalar& c) const {
  std::vector<Scalar> v(dimension(), ring().zero());
  v.at(a) = c;
  return AlgebraElement(shared_from_this(), std::move(v));
}

AlgebraElement AlgebraContext::identity() const {
  std::vector<Scalar> v(dimension(), ring().zero());
  for (Arrow x : groupoid().units()) v[x] = ring().one();
  return AlgebraElement(shared_from_this(), std::move(v));
}

AlgebraElement AlgebraContext::element(std::vector<Scalar> coefficients) const {
  return AlgebraElement(shared_from_this(), std::move(coefficients));
}

bool AlgebraContext::same_algebra(const AlgebraContext& o) const {
  return this == &o || (ring() == o.ring() && t_.order() == o.t_.order() && t_.generator() == o.t_.generator() &&
                        inv_ == o.inv_ && sigma_ == o.sigma_);
}

AlgebraElement::AlgebraElement(std::shared_ptr<const AlgebraContext> ctx, std::vector<Scalar> coefficients)
    : ctx_(std::move(ctx)), c_(std::move(coefficients)) {
  if (c_.size() != ctx_->dimension())
    throw Error("element has " + std::to_string(c_.size()) + " coefficients, expected " + std::to_string(ctx_->dimension()));
}

std::vector<Arrow> AlgebraElement::support() const {
  std::vector<Arrow> out;
  for (Arrow a = 0; a < c_.size(); ++a)
    if (!ctx_->ring().is_zero(c_[a])) out.push_back(a);
  return out;
}

bool AlgebraElement::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [&](const Scalar& x) { return ctx_->ring().is_zero(x); });
}

bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
  return (a.ctx_ == b.ctx_ || a.ctx_->same_algebra(*b.ctx_)) && a.c_ == b.c_;
}

AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b) {
  require_same(a, b);
  const Ring& r = a.context().ring();
  std::vector<Scalar> out(a.c_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = r.add(a.c_[i], b.c_[i]);
  return AlgebraElement(a.ctx_, std::move(out));
}

AlgebraElement operator-(const AlgebraElement& a) {
  const Ring& r = a.context().ring();
  std::vector<Scalar> out(a.c_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = r.neg(a.c_[i]);
  return AlgebraElement(a.ctx_, std::move(out));
}

AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b) { return a + (-b); }

AlgebraElement scale(const Scalar& lambda, const AlgebraElement& f) {
  const Ring& r = f.context().ring();
  std::vector<Scalar> out(f.coefficients().size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = r.mul(lambda, f.coefficients()[i]);
  return AlgebraElement(f.context_ptr(), std::move(out));
}

AlgebraElement char_fn(const AlgebraContext& ctx, const Bisection& b) {
  std::vector<Scalar> v(ctx.dimension(), ctx.ring().zero());
  for (Arrow a : b.arrows()) v.at(a) = ctx.ring().one();
  return ctx.element(std::move(v));
}

AlgebraElement char_fn(const AlgebraContext& ctx, std::span<const Arrow> arrows) {
  return char_fn(ctx, make_bisection(ctx.groupoid(), {arrows.begin(), arrows.end()}));
}

AlgebraElement convolve(const AlgebraElement& f, const AlgebraElement& g) {
  require_same(f, g);
  const AlgebraContext& ctx = f.context();
  const FiniteGroupoid& G = ctx.groupoid();
  const Ring& r = ctx.ring();
  const auto m = static_cast<std::int64_t>(G.size());
  std::vector<char> fz(G.size()), gz(G.size());
  for (Arrow a = 0; a < G.size(); ++a) {
    fz[a] = r.is_zero(f[a]);
    gz[a] = r.is_zero(g[a]);
  }
  std::vector<Scalar> out(G.size());
#pragma omp parallel for schedule(dynamic, 4) if (m >= kParallelMinArrows)
  for (std::int64_t ci = 0; ci < m; ++ci) {
    const auto c = static_cast<Arrow>(ci);
    Scalar acc = r.zero();
    for (Arrow a : G.range_fiber(G.range(c))) {
      if (fz[a]) continue;
      const Arrow b = G.compose(G.inverse(a), c);
      if (gz[b]) continue;
      acc = r.add(acc, r.mul(ctx.cocycle_value(a, b), r.mul(f[a], g[b])));
    }
    out[c] = std::move(acc);
  }
  return AlgebraElement(f.context_ptr(), std::move(out));
}

AlgebraElement operator*(const AlgebraElement& f, const AlgebraElement& g) { return convolve(f, g); }

namespace reference {

AlgebraElement convolve(const AlgebraElement& f, const AlgebraElement& g) {
  require_same(f, g);
  const AlgebraContext& ctx = f.context();
  const FiniteGroupoid& G = ctx.groupoid();
  const Ring& r = ctx.ring();
  std::vector<Scalar> out(G.size(), r.zero());
  const auto sf = f.support(), sg = g.support();
  for (Arrow a : sf)
    for (Arrow b : sg)
      if (G.composable(a, b)) {
        const Arrow c = G.compose(a, b);
        out[c] = r.add(out[c], r.mul(ctx.cocycle_value(a, b), r.mul(f[a], g[b])));
      }
  return AlgebraElement(f.context_ptr(), std::move(out));
}

}  // namespace reference

AlgebraElement left_translate(Arrow a, const AlgebraElement& f) {
  const AlgebraContext& ctx = f.context();
  const FiniteGroupoid& G = ctx.groupoid();
  const Ring& r = ctx.ring();
  std::vector<Scalar> out(G.size(), r.zero());
  for (Arrow b : G.range_fiber(G.source(a)))
    if (!r.is_zero(f[b])) out[G.compose(a, b)] = r.mul(ctx.cocycle_value(a, b), f[b]);
  return AlgebraElement(f.context_ptr(), std::move(out));
}

AlgebraElement right_translate(const AlgebraElement& f, Arrow a) {
  const AlgebraContext& ctx = f.context();
  const FiniteGroupoid& G = ctx.groupoid();
  const Ring& r = ctx.ring();
  std::vector<Scalar> out(G.size(), r.zero());
  for (Arrow b : G.source_fiber(G.range(a)))
    if (!r.is_zero(f[b])) out[G.compose(b, a)] = r.mul(ctx.cocycle_value(b, a), f[b]);
  return AlgebraElement(f.context_ptr(), std::move(out));
}

AlgebraElement involute(const AlgebraElement& f) {
  const AlgebraContext& ctx = f.context();
  if (!ctx.involution()) throw Error("algebra has no involution");
  const FiniteGroupoid& G = ctx.groupoid();
  const Ring& r = ctx.ring();
  const UnitSubgroup& t = ctx.units();
  std::vector<Scalar> out(G.size());
  for (Arrow c = 0; c < G.size(); ++c) {
    const Arrow ci = G.inverse(c);
    const Scalar& inv_sigma = t.embed(t.order() - ctx.cocycle()(c, ci));
    out[c] = r.mul(inv_sigma, ctx.involution()->apply(r, f[ci]));
  }
  return AlgebraElement(f.context_ptr(), std::move(out));
}

std::vector<DecompositionTerm> disjoint_decomposition(const AlgebraElement& f) {
  const AlgebraContext& ctx = f.context();
  const FiniteGroupoid& G = ctx.groupoid();
  const auto supp = f.support();
  if (supp.empty()) throw Error("cannot decompose the zero element");
  struct Group {
    Scalar value;
    std::vector<std::vector<Arrow>> parts;
  };
  std::vector<Group> groups;
  for (Arrow a : supp) {
    auto it = std::find_if(groups.begin(), groups.end(), [&](const Group& g) { return g.value == f[a]; });
    if (it == groups.end()) {
      groups.push_back({f[a], {}});
      it = std::prev(groups.end());
    }
    bool placed = false;
    for (auto& part : it->parts) {
      const bool clash = std::any_of(part.begin(), part.end(), [&](Arrow b) {
        return G.range(b) == G.range(a) || G.source(b) == G.source(a);
      });
      if (!clash) {
        part.push_back(a);
        placed = true;
        break;
      }
    }
    if (!placed) it->parts.push_back({a});
  }
  std::vector<DecompositionTerm> out;
  for (auto& g : groups)
    for (auto& part : g.parts) out.push_back({g.value, make_bisection(G, part)});
  return out;
}

AlgebraElement recompose(const AlgebraContext& ctx, const std::vector<DecompositionTerm>& terms) {
  AlgebraElement acc = ctx.zero();
  for (const auto& t : terms) acc = acc + scale(t.coefficient, char_fn(ctx, t.bisection));
  return acc;
}

AlgebraElement local_unit(const AlgebraContext& ctx, std::span<const AlgebraElement> fs) {
  const FiniteGroupoid& G = ctx.groupoid();
  std::vector<Scalar> v(G.size(), ctx.ring().zero());
  for (const auto& f : fs) {
    if (!f.context().same_algebra(ctx)) throw Error("element belongs to a different algebra");
    for (Arrow a : f.support()) {
      v[G.range(a)] = ctx.ring().one();
      v[G.source(a)] = ctx.ring().one();
    }
  }
  return ctx.element(std::move(v));
}

AlgebraElement coboundary_iso(const std::shared_ptr<const AlgebraContext>& target, const Coboundary& b,
                              const AlgebraElement& f) {
  const AlgebraContext& src = f.context();
  if (!(src.ring() == target->ring()) || src.units().generator() != target->units().generator() ||
      src.units().order() != target->units().order())
    throw Error("coboundary isomorphism needs the same ring and T");
  if (!(apply_coboundary(target->cocycle(), b) == src.cocycle()))
    throw Error("coboundary mismatch: source cocycle is not target * db");
  const Ring& r = src.ring();
  std::vector<Scalar> out(src.dimension());
  for (Arrow a = 0; a < out.size(); ++a) out[a] = r.mul(src.units().embed(b(a)), f[a]);
  return target->element(std::move(out));
}

AlgebraElement graded_component(const AlgebraElement& f, const Grading& c, std::int64_t d) {
  require_grading(f.context(), c);
  const Ring& r = f.context().ring();
  std::vector<Scalar> out(f.coefficients().size(), r.zero());
  for (Arrow a = 0; a < out.size(); ++a)
    if (c(a) == d) out[a] = f[a];
  return AlgebraElement(f.context_ptr(), std::move(out));
}

std::vector<std::pair<std::int64_t, AlgebraElement>> graded_components(const AlgebraElement& f, const Grading& c) {
  std::vector<std::pair<std::int64_t, AlgebraElement>> out;
  for (std::int64_t d : c.support()) {
    auto comp = graded_component(f, c, d);
    if (!comp.is_zero()) out.emplace_back(d, std::move(comp));
  }
  return out;
}

}  // namespace steinberg
