#include "support.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace testing {

Scalar Gen::scalar(const Ring& r) {
  if (r.is_finite()) return r.element_at(below(r.cardinality()));
  auto small = [&] {
    const long num = static_cast<long>(below(9)) - 4;
    const long den = static_cast<long>(below(3)) + 1;
    return mpq_class(num, den);
  };
  if (r.kind() == RingKind::Integers) return r.from_integer(static_cast<long long>(below(9)) - 4);
  if (r.kind() == RingKind::Rationals) {
    mpq_class q = small();
    q.canonicalize();
    return r.from_rational(q);
  }
  Scalar x = r.zero();
  Scalar power = r.one();
  for (std::size_t j = 0; j < r.degree(); ++j) {
    if (coin(0.6)) {
      mpq_class q = small();
      q.canonicalize();
      x = r.add(x, r.mul(r.from_rational(q), power));
    }
    power = r.mul(power, r.generator());
  }
  return x;
}

Scalar Gen::nonzero_scalar(const Ring& r) {
  for (;;) {
    Scalar x = scalar(r);
    if (!r.is_zero(x)) return x;
  }
}

AlgebraElement Gen::element(const std::shared_ptr<const AlgebraContext>& ctx, double density) {
  const Ring& r = ctx->ring();
  std::vector<Scalar> v(ctx->dimension(), r.zero());
  for (auto& x : v)
    if (coin(density)) x = nonzero_scalar(r);
  return ctx->element(std::move(v));
}

AlgebraElement Gen::nonzero_element(const std::shared_ptr<const AlgebraContext>& ctx, double density) {
  for (;;) {
    auto f = element(ctx, density);
    if (!f.is_zero()) return f;
  }
}

AlgebraElement Gen::homogeneous(const std::shared_ptr<const AlgebraContext>& ctx, const Grading& c,
                                std::int64_t degree) {
  const Ring& r = ctx->ring();
  std::vector<Scalar> v(ctx->dimension(), r.zero());
  for (Arrow a = 0; a < v.size(); ++a)
    if (c(a) == degree && coin(0.7)) v[a] = nonzero_scalar(r);
  return ctx->element(std::move(v));
}

Coboundary Gen::coboundary(const std::shared_ptr<const FiniteGroupoid>& g, std::uint32_t order) {
  Coboundary b(g, order);
  for (Arrow a = 0; a < g->size(); ++a)
    if (!g->is_unit(a)) b.set(a, static_cast<std::int64_t>(below(order)));
  return b;
}

std::vector<Arrow> Gen::permutation(std::size_t n) {
  std::vector<Arrow> p(n);
  std::iota(p.begin(), p.end(), Arrow{0});
  for (std::size_t i = n; i > 1; --i) std::swap(p[i - 1], p[below(i)]);
  return p;
}

std::shared_ptr<const AlgebraContext> context(const std::string& entry, const std::string& cocycle, const Ring& ring,
                                              std::optional<Involution> inv) {
  const auto& e = catalog_entry(entry);
  TwoCocycle s = cocycle.empty() || cocycle == "trivial" ? TwoCocycle(e.groupoid, 1) : e.cocycle(cocycle);
  return AlgebraContext::create(std::move(s), ring, inv);
}

TwoCocycle trivial(const std::string& entry, std::uint32_t order) {
  return TwoCocycle(catalog_entry(entry).groupoid, order);
}

namespace {

Arrow map_or_none(const std::vector<Arrow>& perm, Arrow a) { return a == kNoArrow ? kNoArrow : perm[a]; }

}  // namespace

DiscreteTwist relabel(const DiscreteTwist& t, const std::vector<Arrow>& perm) {
  const auto& old = t.total().data();
  const std::size_t m = old.names.size();
  FiniteGroupoid::Data d;
  d.names.resize(m);
  d.is_unit.resize(m);
  d.source.resize(m);
  d.range.resize(m);
  d.inverse.resize(m);
  d.comp.assign(m * m, kNoArrow);
  for (Arrow a = 0; a < m; ++a) {
    const Arrow n = perm[a];
    d.names[n] = old.names[a];
    d.is_unit[n] = old.is_unit[a];
    d.source[n] = perm[old.source[a]];
    d.range[n] = perm[old.range[a]];
    d.inverse[n] = map_or_none(perm, old.inverse[a]);
    for (Arrow b = 0; b < m; ++b) d.comp[std::size_t{n} * m + perm[b]] = map_or_none(perm, old.comp[std::size_t{a} * m + b]);
  }
  auto inclusion = t.inclusion_table();
  for (auto& row : inclusion)
    for (auto& e : row) e = perm[e];
  std::vector<Arrow> quotient(m);
  for (Arrow e = 0; e < m; ++e) quotient[perm[e]] = t.quotient(e);
  return DiscreteTwist(t.base_ptr(), t.order(), FiniteGroupoid(std::move(d)), std::move(inclusion),
                       std::move(quotient));
}

DiscreteTwist drop_arrow(const DiscreteTwist& t, Arrow victim) {
  const auto& old = t.total().data();
  const std::size_t m = old.names.size();
  std::vector<Arrow> shift(m, kNoArrow);
  Arrow next = 0;
  for (Arrow a = 0; a < m; ++a)
    if (a != victim) shift[a] = next++;
  FiniteGroupoid::Data d;
  d.comp.assign((m - 1) * (m - 1), kNoArrow);
  for (Arrow a = 0; a < m; ++a) {
    if (a == victim) continue;
    d.names.push_back(old.names[a]);
    d.is_unit.push_back(old.is_unit[a]);
    d.source.push_back(shift[old.source[a]]);
    d.range.push_back(shift[old.range[a]]);
    d.inverse.push_back(map_or_none(shift, old.inverse[a]));
    for (Arrow b = 0; b < m; ++b)
      if (b != victim) d.comp[std::size_t{shift[a]} * (m - 1) + shift[b]] = map_or_none(shift, old.comp[std::size_t{a} * m + b]);
  }
  auto inclusion = t.inclusion_table();
  for (auto& row : inclusion)
    for (auto& e : row) e = map_or_none(shift, e);
  std::vector<Arrow> quotient;
  for (Arrow e = 0; e < m; ++e)
    if (e != victim) quotient.push_back(t.quotient(e));
  return DiscreteTwist(t.base_ptr(), t.order(), FiniteGroupoid(std::move(d)), std::move(inclusion),
                       std::move(quotient));
}

DiscreteTwist redirect_inclusion(const DiscreteTwist& t, Arrow unit, Exponent k, Arrow target) {
  auto inclusion = t.inclusion_table();
  inclusion.at(unit).at(k) = target;
  return DiscreteTwist(t.base_ptr(), t.order(), t.total(), std::move(inclusion), t.quotient_table());
}

namespace oracle {

std::vector<Scalar> convolve(const AlgebraContext& ctx, const std::vector<Scalar>& f, const std::vector<Scalar>& g) {
  const auto& G = ctx.groupoid();
  const Ring& r = ctx.ring();
  std::vector<Scalar> out(G.size(), r.zero());
  for (Arrow a = 0; a < G.size(); ++a)
    for (Arrow b = 0; b < G.size(); ++b) {
      if (G.source(a) != G.range(b)) continue;
      const Scalar term = r.mul(ctx.units().embed(ctx.cocycle()(a, b)), r.mul(f[a], g[b]));
      const Arrow c = G.compose(a, b);
      out[c] = r.add(out[c], term);
    }
  return out;
}

namespace {

using Row = std::vector<std::int64_t>;

std::int64_t inv_mod(std::int64_t a, std::int64_t p) {
  std::int64_t r = 1, e = p - 2;
  a %= p;
  while (e > 0) {
    if (e & 1) r = r * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return r;
}

std::size_t rank_mod(std::vector<Row> rows, std::int64_t p) {
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    const std::int64_t s = inv_mod(rows[rank][c], p);
    for (auto& x : rows[rank]) x = x * s % p;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == rank || rows[i][c] == 0) continue;
      const std::int64_t k = rows[i][c];
      for (std::size_t j = 0; j < cols; ++j) rows[i][j] = ((rows[i][j] - k * rows[rank][j]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

std::vector<Row> span_rows(const AlgebraContext& ctx, const std::vector<std::vector<Scalar>>& generators) {
  const Ring& r = ctx.ring();
  if (r.kind() != RingKind::PrimeField) throw std::logic_error("oracle needs GF(p)");
  const std::size_t m = ctx.dimension();
  std::vector<Row> rows;
  for (const auto& f : generators)
    for (Arrow a = 0; a < m; ++a) {
      std::vector<Scalar> da(m, r.zero());
      da[a] = r.one();
      const auto left = convolve(ctx, da, f);
      for (Arrow b = 0; b < m; ++b) {
        std::vector<Scalar> db(m, r.zero());
        db[b] = r.one();
        const auto v = convolve(ctx, left, db);
        Row row(m);
        for (std::size_t i = 0; i < m; ++i) row[i] = static_cast<std::int64_t>(r.index_of(v[i]));
        rows.push_back(std::move(row));
      }
    }
  return rows;
}

}  // namespace

std::size_t ideal_rank_gfp(const AlgebraContext& ctx, const std::vector<std::vector<Scalar>>& generators) {
  return rank_mod(span_rows(ctx, generators), ctx.ring().parameter());
}

bool in_ideal_gfp(const AlgebraContext& ctx, const std::vector<std::vector<Scalar>>& generators,
                  const std::vector<Scalar>& v) {
  auto rows = span_rows(ctx, generators);
  const std::int64_t p = ctx.ring().parameter();
  const std::size_t before = rank_mod(rows, p);
  Row extra(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) extra[i] = static_cast<std::int64_t>(ctx.ring().index_of(v[i]));
  rows.push_back(std::move(extra));
  return rank_mod(std::move(rows), p) == before;
}

SimplicityScan scan_gfp(const AlgebraContext& ctx) {
  const Ring& r = ctx.ring();
  const std::uint64_t p = static_cast<std::uint64_t>(r.parameter());
  const std::size_t m = ctx.dimension();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < m; ++i) total *= p;
  for (std::uint64_t idx = 1; idx < total; ++idx) {
    std::vector<Scalar> f(m);
    std::uint64_t rest = idx;
    for (std::size_t a = 0; a < m; ++a) {
      f[a] = r.element_at(rest % p);
      rest /= p;
    }
    if (ideal_rank_gfp(ctx, {f}) < m) return {false, idx};
  }
  return {true, 0};
}

CohomologyCount count_cohomology(const FiniteGroupoid& g, std::uint32_t n) {
  const std::size_t m = g.size();
  std::vector<std::pair<Arrow, Arrow>> free;
  for (Arrow a = 0; a < m; ++a)
    for (Arrow b = 0; b < m; ++b)
      if (g.source(a) == g.range(b) && !g.is_unit(a) && !g.is_unit(b)) free.emplace_back(a, b);
  std::uint64_t tables = 1;
  for (std::size_t i = 0; i < free.size(); ++i) tables *= n;
  using Table = std::vector<std::uint32_t>;
  std::vector<Table> valid;
  for (std::uint64_t idx = 0; idx < tables; ++idx) {
    Table s(m * m, 0);
    std::uint64_t rest = idx;
    for (const auto& [a, b] : free) {
      s[a * m + b] = static_cast<std::uint32_t>(rest % n);
      rest /= n;
    }
    bool ok = true;
    for (Arrow a = 0; a < m && ok; ++a)
      for (Arrow b = 0; b < m && ok; ++b)
        for (Arrow c = 0; c < m && ok; ++c) {
          if (g.source(a) != g.range(b) || g.source(b) != g.range(c)) continue;
          const Arrow ab = g.compose(a, b), bc = g.compose(b, c);
          ok = (s[a * m + b] + s[ab * m + c]) % n == (s[a * m + bc] + s[b * m + c]) % n;
        }
    if (ok) valid.push_back(std::move(s));
  }
  std::map<Table, std::size_t> index;
  for (std::size_t i = 0; i < valid.size(); ++i) index[valid[i]] = i;
  std::vector<std::size_t> parent(valid.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<Arrow> nonunits;
  for (Arrow a = 0; a < m; ++a)
    if (!g.is_unit(a)) nonunits.push_back(a);
  std::uint64_t choices = 1;
  for (std::size_t i = 0; i < nonunits.size(); ++i) choices *= n;
  for (std::uint64_t idx = 0; idx < choices; ++idx) {
    std::vector<std::uint32_t> b(m, 0);
    std::uint64_t rest = idx;
    for (Arrow a : nonunits) {
      b[a] = static_cast<std::uint32_t>(rest % n);
      rest /= n;
    }
    for (std::size_t i = 0; i < valid.size(); ++i) {
      Table t = valid[i];
      for (Arrow a = 0; a < m; ++a)
        for (Arrow c = 0; c < m; ++c)
          if (g.source(a) == g.range(c)) t[a * m + c] = (t[a * m + c] + b[a] + b[c] + n - b[g.compose(a, c)]) % n;
      const std::size_t j = index.at(t);
      parent[find(i)] = find(j);
    }
  }
  std::size_t classes = 0;
  for (std::size_t i = 0; i < valid.size(); ++i)
    if (find(i) == i) ++classes;
  return {valid.size(), classes};
}

std::size_t arrow_order(const FiniteGroupoid& sigma, Arrow e) {
  const Arrow unit = sigma.range(e);
  Arrow x = e;
  std::size_t k = 1;
  while (x != unit) {
    x = sigma.compose(x, e);
    ++k;
    if (k > sigma.size() + 1) throw std::logic_error("no finite order");
  }
  return k;
}

}  // namespace oracle

}  // namespace testing
