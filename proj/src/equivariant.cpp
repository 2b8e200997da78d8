#include "steinberg/equivariant.hpp"

namespace steinberg {

namespace {

void require_shared(const EquivariantElement& f, const EquivariantElement& g) {
  if (f.context_ptr() != g.context_ptr()) throw Error("equivariant elements use different twists or sections");
}

}  // namespace

std::shared_ptr<const EquivariantContext> EquivariantContext::create(DiscreteTwist t, GlobalSection p,
                                                                     UnitSubgroup units, std::optional<Involution> inv) {
  if (t.order() != units.order()) throw Error("twist order differs from T order");
  auto v = validate_twist(t);
  if (!v.empty()) throw Error("invalid twist:\n" + to_string(v));
  v = validate_section(t, p);
  if (!v.empty()) throw Error("invalid section:\n" + to_string(v));
  return std::make_shared<const EquivariantContext>(Key{}, std::move(t), std::move(p), std::move(units), std::move(inv));
}

std::shared_ptr<const EquivariantContext> EquivariantContext::create(DiscreteTwist t, GlobalSection p, const Ring& ring,
                                                                     std::optional<Involution> inv) {
  auto units = UnitSubgroup::canonical(ring, t.order());
  return create(std::move(t), std::move(p), std::move(units), std::move(inv));
}

EquivariantContext::EquivariantContext(Key, DiscreteTwist t, GlobalSection p, UnitSubgroup units,
                                       std::optional<Involution> inv)
    : twist_(std::move(t)),
      section_(std::move(p)),
      units_(std::move(units)),
      inv_(std::move(inv)),
      induced_(induced_cocycle(twist_, section_)),
      target_(AlgebraContext::create(invert_cocycle(induced_), units_, inv_)) {}

EquivariantElement EquivariantContext::encode(std::vector<Scalar> h) const {
  return EquivariantElement(shared_from_this(), std::move(h));
}

EquivariantElement::EquivariantElement(std::shared_ptr<const EquivariantContext> ctx, std::vector<Scalar> h)
    : ctx_(std::move(ctx)), h_(std::move(h)) {
  if (h_.size() != ctx_->twist().base().size()) throw Error("encoding must have one value per base arrow");
}

Scalar EquivariantElement::evaluate(Arrow e) const {
  const auto& t = ctx_->twist();
  const Arrow a = t.quotient(e);
  const Exponent z = unique_scalar(t, ctx_->section()(a), e);
  return ctx_->ring().mul(ctx_->units().embed(z), h_[a]);
}

std::vector<Scalar> EquivariantElement::on_total() const {
  std::vector<Scalar> out(ctx_->twist().total().size());
  for (Arrow e = 0; e < out.size(); ++e) out[e] = evaluate(e);
  return out;
}

EquivariantElement from_total_function(const std::shared_ptr<const EquivariantContext>& ctx,
                                       const std::vector<Scalar>& values) {
  const auto& t = ctx->twist();
  const Ring& r = ctx->ring();
  if (values.size() != t.total().size()) throw Error("function must have one value per twist arrow");
  for (Arrow e = 0; e < values.size(); ++e)
    for (Exponent k = 1; k < t.order(); ++k)
      if (values[t.act(k, e)] != r.mul(ctx->units().embed(k), values[e]))
        throw Error("function is not T-equivariant at " + t.total().name(e));
  std::vector<Scalar> h(t.base().size());
  for (Arrow a = 0; a < h.size(); ++a) h[a] = values[ctx->section()(a)];
  return ctx->encode(std::move(h));
}

std::vector<Scalar> convolve_on_total(const EquivariantElement& f, const EquivariantElement& g,
                                      const GlobalSection& summation) {
  require_shared(f, g);
  const auto& ctx = f.context();
  const auto& t = ctx.twist();
  const auto& sg = t.total();
  const auto& G = t.base();
  const Ring& r = ctx.ring();
  auto v = validate_section(t, summation);
  if (!v.empty()) throw Error("invalid summation section:\n" + to_string(v));
  const auto fv = f.on_total(), gv = g.on_total();
  std::vector<Scalar> out(sg.size(), r.zero());
  for (Arrow e = 0; e < sg.size(); ++e) {
    const Arrow x = G.source(t.quotient(e));
    for (Arrow c : G.range_fiber(x)) {
      const Arrow sc = summation(c);
      out[e] = r.add(out[e], r.mul(fv[sg.compose(e, sc)], gv[sg.inverse(sc)]));
    }
  }
  return out;
}

EquivariantElement equiv_convolve(const EquivariantElement& f, const EquivariantElement& g,
                                  const std::optional<GlobalSection>& summation) {
  const auto& ctx = f.context();
  const auto values = convolve_on_total(f, g, summation.value_or(ctx.section()));
  std::vector<Scalar> h(ctx.twist().base().size());
  for (Arrow a = 0; a < h.size(); ++a) h[a] = values[ctx.section()(a)];
  return ctx.encode(std::move(h));
}

EquivariantElement equiv_involute(const EquivariantElement& f) {
  const auto& ctx = f.context();
  if (!ctx.involution()) throw Error("twisted algebra has no involution");
  const auto& sg = ctx.twist().total();
  std::vector<Scalar> h(ctx.twist().base().size());
  for (Arrow a = 0; a < h.size(); ++a)
    h[a] = ctx.involution()->apply(ctx.ring(), f.evaluate(sg.inverse(ctx.section()(a))));
  return ctx.encode(std::move(h));
}

AlgebraElement psi(const EquivariantElement& f) { return f.context().psi_target()->element(f.encoding()); }

AlgebraElement psi(const EquivariantElement& f, const std::shared_ptr<const AlgebraContext>& target) {
  if (!target->same_algebra(*f.context().psi_target()))
    throw Error("target algebra cocycle is not the inverse of the cocycle induced by the section");
  return target->element(f.encoding());
}

EquivariantElement psi_inverse(const std::shared_ptr<const EquivariantContext>& ctx, const AlgebraElement& h) {
  if (!h.context().same_algebra(*ctx->psi_target()))
    throw Error("element does not belong to A(G, s^-1) for the induced cocycle s");
  const auto& t = ctx->twist();
  const Ring& r = ctx->ring();
  std::vector<Scalar> values(t.total().size(), r.zero());
  std::vector<bool> seen(values.size(), false);
  for (Arrow a = 0; a < t.base().size(); ++a)
    for (Exponent k = 0; k < t.order(); ++k) {
      const Arrow e = t.act(k, ctx->section()(a));
      if (seen[e]) throw Error("internal: z . P(a) is not injective");
      seen[e] = true;
      values[e] = r.mul(ctx->units().embed(k), h[a]);
    }
  return from_total_function(ctx, values);
}

}  // namespace steinberg
