#include "steinberg/structure.hpp"

#include <algorithm>
#include <array>
#include <deque>

namespace steinberg {

RowSpace::RowSpace(Ring ring, std::size_t dim) : ring_(std::move(ring)), dim_(dim) {
  if (!ring_.is_field()) throw Error("row reduction needs a field, not " + ring_.name());
}

std::vector<Scalar> RowSpace::reduce(std::vector<Scalar> v) const {
  if (v.size() != dim_) throw Error("vector has the wrong length for this row space");
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Scalar f = v[pivots_[i]];
    if (ring_.is_zero(f)) continue;
    for (std::size_t k = 0; k < dim_; ++k)
      if (!ring_.is_zero(rows_[i][k])) v[k] = ring_.sub(v[k], ring_.mul(f, rows_[i][k]));
  }
  return v;
}

bool RowSpace::contains(const std::vector<Scalar>& v) const {
  const auto r = reduce(v);
  return std::all_of(r.begin(), r.end(), [&](const Scalar& x) { return ring_.is_zero(x); });
}

std::optional<std::vector<Scalar>> RowSpace::add(std::vector<Scalar> v) {
  v = reduce(std::move(v));
  std::size_t c = 0;
  while (c < dim_ && ring_.is_zero(v[c])) ++c;
  if (c == dim_) return std::nullopt;
  const Scalar inv = ring_.inverse(v[c]);
  for (auto& x : v) x = ring_.mul(inv, x);
  for (auto& row : rows_) {
    const Scalar f = row[c];
    if (ring_.is_zero(f)) continue;
    for (std::size_t k = 0; k < dim_; ++k)
      if (!ring_.is_zero(v[k])) row[k] = ring_.sub(row[k], ring_.mul(f, v[k]));
  }
  const auto pos = static_cast<std::size_t>(std::lower_bound(pivots_.begin(), pivots_.end(), c) - pivots_.begin());
  pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(pos), c);
  rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), v);
  return v;
}

Ideal::Ideal(std::shared_ptr<const AlgebraContext> ctx, RowSpace space) : ctx_(std::move(ctx)), space_(std::move(space)) {
  if (space_.dim() != ctx_->dimension() || !(space_.ring() == ctx_->ring()))
    throw Error("row space does not match the algebra");
}

std::vector<AlgebraElement> Ideal::basis() const {
  std::vector<AlgebraElement> out;
  for (const auto& row : space_.rows()) out.push_back(ctx_->element(row));
  return out;
}

bool Ideal::contains(const AlgebraElement& f) const {
  if (!f.context().same_algebra(*ctx_)) throw Error("element belongs to a different algebra");
  return space_.contains(f.coefficients());
}

Ideal ideal_generated(const std::shared_ptr<const AlgebraContext>& ctx, std::span<const AlgebraElement> fs) {
  RowSpace space(ctx->ring(), ctx->dimension());
  std::deque<std::vector<Scalar>> queue;
  for (const auto& f : fs) {
    if (!f.context().same_algebra(*ctx)) throw Error("generator belongs to a different algebra");
    if (auto r = space.add(f.coefficients())) queue.push_back(std::move(*r));
  }
  const auto m = ctx->dimension();
  while (!queue.empty() && space.rank() < m) {
    const AlgebraElement w = ctx->element(std::move(queue.front()));
    queue.pop_front();
    for (Arrow a = 0; a < m && space.rank() < m; ++a) {
      if (auto r = space.add(left_translate(a, w).coefficients())) queue.push_back(std::move(*r));
      if (auto r = space.add(right_translate(w, a).coefficients())) queue.push_back(std::move(*r));
    }
  }
  return Ideal(ctx, std::move(space));
}

bool ideal_member(const Ideal& ideal, const AlgebraElement& f) { return ideal.contains(f); }

bool is_closed(const Ideal& ideal) {
  const auto& ctx = ideal.context();
  for (const auto& v : ideal.basis())
    for (Arrow a = 0; a < ctx.dimension(); ++a)
      if (!ideal.contains(left_translate(a, v)) || !ideal.contains(right_translate(v, a))) return false;
  return true;
}

Ideal restriction_ideal(const std::shared_ptr<const AlgebraContext>& ctx, std::span<const Arrow> units) {
  const auto r = restrict_groupoid(ctx->groupoid(), units);
  RowSpace space(ctx->ring(), ctx->dimension());
  for (Arrow a : r.embedding) space.add(ctx->delta(a).coefficients());
  return Ideal(ctx, std::move(space));
}

namespace {

// 1_{x} g 1_{x} = g(x) d_x when x has trivial isotropy; d_x in the ideal.
std::vector<Arrow> finish_witness(const Ideal& ideal, const AlgebraElement& g, Arrow x) {
  const auto& ctx = ideal.context();
  const Ring& r = ctx.ring();
  if (r.is_zero(g[x])) throw Error("internal: witness element vanishes at the chosen unit");
  const auto squeezed = right_translate(left_translate(x, g), x);
  if (!(squeezed == ctx.delta(x, g[x]))) throw Error("internal: corner of the witness is not a multiple of d_x");
  if (!ideal.contains(ctx.delta(x))) throw Error("internal: d_x is not in the ideal");
  return {x};
}

}  // namespace

std::vector<Arrow> ck_witness(const Ideal& ideal) {
  const auto& ctx = ideal.context();
  const auto& G = ctx.groupoid();
  if (!is_effective(G)) throw Error("witness construction needs an effective groupoid");
  if (ideal.is_zero()) throw Error("witness construction needs a nonzero ideal");
  const AlgebraElement f = ideal.basis().front();
  const Arrow c = f.support().front();
  const AlgebraElement g = left_translate(G.inverse(c), f);
  return finish_witness(ideal, g, G.source(c));
}

bool is_graded_ideal(const Ideal& ideal, const Grading& c) {
  for (const auto& v : ideal.basis())
    for (const auto& [d, comp] : graded_components(v, c))
      if (!ideal.contains(comp)) return false;
  return true;
}

std::vector<Arrow> graded_ck_witness(const Ideal& ideal, const Grading& c) {
  const auto& ctx = ideal.context();
  const auto& G = ctx.groupoid();
  auto v = validate_grading(c);
  if (!v.empty()) throw Error("invalid grading:\n" + to_string(v));
  const std::int64_t e = c.group().identity();
  for (Arrow a : isotropy(G))
    if (!G.is_unit(a) && c(a) == e) throw Error("the identity-degree subgroupoid is not effective: " + G.name(a));
  if (ideal.is_zero()) throw Error("witness construction needs a nonzero ideal");
  if (!is_graded_ideal(ideal, c)) throw Error("ideal is not graded");
  const auto comps = graded_components(ideal.basis().front(), c);
  const AlgebraElement& gd = comps.front().second;
  const Arrow a = gd.support().front();
  const AlgebraElement f = left_translate(G.inverse(a), gd);
  for (Arrow b : f.support())
    if (c(b) != e) throw Error("internal: translated component is not of identity degree");
  return finish_witness(ideal, f, G.source(a));
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Simple: return "true";
    case Verdict::NotSimple: return "false";
    case Verdict::Unknown: return "unknown";
  }
  return {};
}

namespace {

std::uint64_t exhaustive_size(const AlgebraContext& ctx, std::uint64_t cap) {
  const Ring& r = ctx.ring();
  if (!r.is_finite()) throw Error("exhaustive mode needs a finite field, not " + r.name());
  if (ctx.dimension() == 0) throw Error("the zero algebra has no simplicity verdict");
  const std::uint64_t q = r.cardinality();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < ctx.dimension(); ++i) {
    if (total > cap / q) throw Error("exhaustive scan of |F|^|G| elements exceeds the cap " + std::to_string(cap));
    total *= q;
  }
  return total;
}

// Ideal closure over GF(p) on plain integers.
class PrimeClosure {
 public:
  explicit PrimeClosure(const AlgebraContext& ctx) : p_(ctx.ring().parameter()), m_(ctx.dimension()) {
    const auto& G = ctx.groupoid();
    left_.resize(m_);
    right_.resize(m_);
    for (Arrow a = 0; a < m_; ++a) {
      for (Arrow b : G.range_fiber(G.source(a)))
        left_[a].push_back({b, G.compose(a, b), static_cast<Arrow>(ctx.cocycle_value(a, b).residues()[0])});
      for (Arrow b : G.source_fiber(G.range(a)))
        right_[a].push_back({b, G.compose(b, a), static_cast<Arrow>(ctx.cocycle_value(b, a).residues()[0])});
    }
    rows_.reserve(m_ * m_);
  }

  std::size_t rank_of_generated(const std::vector<std::int64_t>& v) {
    rows_.clear();
    pivots_.clear();
    queue_.clear();
    add(v);
    std::vector<std::int64_t> w, x(m_);
    while (!queue_.empty() && pivots_.size() < m_) {
      w = std::move(queue_.front());
      queue_.pop_front();
      for (Arrow a = 0; a < m_ && pivots_.size() < m_; ++a) {
        translate(left_[a], w, x);
        add(x);
        translate(right_[a], w, x);
        add(x);
      }
    }
    return pivots_.size();
  }

 private:
  using Entry = std::array<Arrow, 3>;  // b, product, cocycle residue

  void translate(const std::vector<Entry>& t, const std::vector<std::int64_t>& w, std::vector<std::int64_t>& x) const {
    std::fill(x.begin(), x.end(), 0);
    for (const auto& [b, ab, s] : t)
      if (w[b]) x[ab] = (w[b] * s) % p_;
  }

  void add(std::vector<std::int64_t> v) {
    const std::size_t r = pivots_.size();
    for (std::size_t i = 0; i < r; ++i) {
      const std::int64_t f = v[pivots_[i]];
      if (!f) continue;
      const std::int64_t* row = &rows_[i * m_];
      for (std::size_t k = 0; k < m_; ++k)
        if (row[k]) v[k] = (v[k] + (p_ - f) * row[k]) % p_;
    }
    std::size_t c = 0;
    while (c < m_ && v[c] == 0) ++c;
    if (c == m_) return;
    const std::int64_t inv = inverse(v[c]);
    for (auto& y : v) y = (y * inv) % p_;
    for (std::size_t i = 0; i < r; ++i) {
      std::int64_t* row = &rows_[i * m_];
      const std::int64_t f = row[c];
      if (!f) continue;
      for (std::size_t k = 0; k < m_; ++k)
        if (v[k]) row[k] = (row[k] + (p_ - f) * v[k]) % p_;
    }
    rows_.insert(rows_.end(), v.begin(), v.end());
    pivots_.push_back(c);
    queue_.push_back(std::move(v));
  }

  std::int64_t inverse(std::int64_t a) const {
    std::int64_t r = 1, e = p_ - 2, b = a;
    while (e) {
      if (e & 1) r = (r * b) % p_;
      b = (b * b) % p_;
      e >>= 1;
    }
    return r;
  }

  std::int64_t p_;
  std::size_t m_;
  std::vector<std::vector<Entry>> left_, right_;
  std::vector<std::int64_t> rows_;
  std::vector<std::size_t> pivots_;
  std::deque<std::vector<std::int64_t>> queue_;
};

SimplicityResult exhaustive_result(const std::shared_ptr<const AlgebraContext>& ctx, std::uint64_t best) {
  SimplicityResult out;
  if (best == UINT64_MAX) {
    out.verdict = Verdict::Simple;
    out.reason = "every nonzero element generates the whole algebra";
    return out;
  }
  out.verdict = Verdict::NotSimple;
  out.generator = enumerate_element(ctx, best);
  const AlgebraElement gens[] = {*out.generator};
  out.proper_ideal = ideal_generated(ctx, gens);
  out.reason = "element generates a proper ideal of dimension " + std::to_string(out.proper_ideal->dimension());
  return out;
}

SimplicityResult structural(const std::shared_ptr<const AlgebraContext>& ctx) {
  SimplicityResult out;
  if (!ctx->ring().is_field()) throw Error("structural mode needs a field, not " + ctx->ring().name());
  const auto& G = ctx->groupoid();
  if (G.size() == 0) throw Error("the zero algebra has no simplicity verdict");
  if (!is_effective(G)) {
    out.verdict = Verdict::Unknown;
    out.reason = "groupoid is not effective";
    return out;
  }
  const auto orbs = orbits(G);
  if (orbs.size() == 1) {
    out.verdict = Verdict::Simple;
    out.reason = "groupoid is effective and minimal";
    return out;
  }
  out.verdict = Verdict::NotSimple;
  out.invariant_units = orbs.front();
  out.proper_ideal = restriction_ideal(ctx, out.invariant_units);
  if (out.proper_ideal->is_zero() || out.proper_ideal->is_whole() || !is_closed(*out.proper_ideal))
    throw Error("internal: restriction ideal is not a proper ideal");
  out.reason = "invariant unit set gives a proper ideal of dimension " + std::to_string(out.proper_ideal->dimension());
  return out;
}

}  // namespace

AlgebraElement enumerate_element(const std::shared_ptr<const AlgebraContext>& ctx, std::uint64_t index) {
  const Ring& r = ctx->ring();
  const std::uint64_t q = r.cardinality();
  std::vector<Scalar> v(ctx->dimension());
  for (auto& x : v) {
    x = r.element_at(index % q);
    index /= q;
  }
  return ctx->element(std::move(v));
}

SimplicityResult is_simple(const std::shared_ptr<const AlgebraContext>& ctx, SimplicityMode mode, std::uint64_t cap) {
  if (mode == SimplicityMode::Structural) return structural(ctx);
  const std::uint64_t total = exhaustive_size(*ctx, cap);
  const std::size_t m = ctx->dimension();
  const auto last = static_cast<std::int64_t>(total);
  std::uint64_t best = UINT64_MAX;
  if (ctx->ring().kind() == RingKind::PrimeField) {
    const auto p = static_cast<std::uint64_t>(ctx->ring().parameter());
#pragma omp parallel reduction(min : best)
    {
      PrimeClosure closure(*ctx);
      std::vector<std::int64_t> v(m);
#pragma omp for schedule(dynamic, 256)
      for (std::int64_t i = 1; i < last; ++i) {
        const auto idx = static_cast<std::uint64_t>(i);
        if (idx >= best) continue;
        std::uint64_t rest = idx;
        for (auto& x : v) {
          x = static_cast<std::int64_t>(rest % p);
          rest /= p;
        }
        if (closure.rank_of_generated(v) < m) best = idx;
      }
    }
  } else {
#pragma omp parallel for schedule(dynamic, 16) reduction(min : best)
    for (std::int64_t i = 1; i < last; ++i) {
      const auto idx = static_cast<std::uint64_t>(i);
      if (idx >= best) continue;
      const AlgebraElement gens[] = {enumerate_element(ctx, idx)};
      if (!ideal_generated(ctx, gens).is_whole()) best = idx;
    }
  }
  return exhaustive_result(ctx, best);
}

namespace reference {

SimplicityResult exhaustive_simplicity(const std::shared_ptr<const AlgebraContext>& ctx, std::uint64_t cap) {
  const std::uint64_t total = exhaustive_size(*ctx, cap);
  for (std::uint64_t idx = 1; idx < total; ++idx) {
    const AlgebraElement gens[] = {enumerate_element(ctx, idx)};
    if (!ideal_generated(ctx, gens).is_whole()) return exhaustive_result(ctx, idx);
  }
  return exhaustive_result(ctx, UINT64_MAX);
}

}  // namespace reference

}  // namespace steinberg
