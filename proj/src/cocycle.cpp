#include "steinberg/cocycle.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace steinberg {

namespace {

__extension__ typedef __int128 i128;

std::int64_t mod(i128 v, std::int64_t n) {
  v %= n;
  return static_cast<std::int64_t>(v < 0 ? v + n : v);
}

void require_same_context(const TwoCocycle& s, const TwoCocycle& t) {
  if (s.order() != t.order()) throw Error("cocycles have different orders " + std::to_string(s.order()) + " and " + std::to_string(t.order()));
  if (&s.groupoid() != &t.groupoid() && !(s.groupoid() == t.groupoid()))
    throw Error("cocycles live on different groupoids");
}

// s*a + u*b = g = gcd(a, b) for a, b > 0.
std::int64_t ext_gcd(std::int64_t a, std::int64_t b, std::int64_t& s, std::int64_t& u) {
  std::int64_t r0 = a, r1 = b, s0 = 1, s1 = 0, u0 = 0, u1 = 1;
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    std::tie(r0, r1) = std::make_pair(r1, r0 - q * r1);
    std::tie(s0, s1) = std::make_pair(s1, s0 - q * s1);
    std::tie(u0, u1) = std::make_pair(u1, u0 - q * u1);
  }
  s = s0;
  u = u0;
  return r0;
}

// Solve A x = d over Z/n by unimodular row and column operations.
std::optional<std::vector<std::int64_t>> solve_mod(std::vector<std::vector<std::int64_t>> a,
                                                   std::vector<std::int64_t> d, std::size_t cols,
                                                   std::int64_t n) {
  const std::size_t rows = a.size();
  std::vector<std::vector<std::int64_t>> v(cols, std::vector<std::int64_t>(cols, 0));
  for (std::size_t i = 0; i < cols; ++i) v[i][i] = 1 % n;

  // new_i = p*row_i + q*row_j ; new_j = r*row_i + s*row_j
  auto row_op = [&](std::size_t i, std::size_t j, std::int64_t p, std::int64_t q, std::int64_t r, std::int64_t s) {
    for (std::size_t k = 0; k < cols; ++k) {
      const std::int64_t x = a[i][k], y = a[j][k];
      a[i][k] = mod(i128(p) * x + i128(q) * y, n);
      a[j][k] = mod(i128(r) * x + i128(s) * y, n);
    }
    const std::int64_t x = d[i], y = d[j];
    d[i] = mod(i128(p) * x + i128(q) * y, n);
    d[j] = mod(i128(r) * x + i128(s) * y, n);
  };
  auto col_op = [&](std::size_t i, std::size_t j, std::int64_t p, std::int64_t q, std::int64_t r, std::int64_t s) {
    auto apply = [&](std::vector<std::vector<std::int64_t>>& m) {
      for (auto& row : m) {
        const std::int64_t x = row[i], y = row[j];
        row[i] = mod(i128(p) * x + i128(q) * y, n);
        row[j] = mod(i128(r) * x + i128(s) * y, n);
      }
    };
    apply(a);
    apply(v);
  };

  std::size_t t = 0;
  for (; t < std::min(rows, cols); ++t) {
    std::size_t pi = rows, pj = cols;
    for (std::size_t i = t; i < rows && pi == rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (a[i][j] != 0) {
          pi = i;
          pj = j;
          break;
        }
    if (pi == rows) break;
    std::swap(a[t], a[pi]);
    std::swap(d[t], d[pi]);
    if (pj != t) col_op(t, pj, 0, 1, 1, 0);

    for (bool dirty = true; dirty;) {
      dirty = false;
      for (std::size_t i = t + 1; i < rows; ++i) {
        const std::int64_t p = a[t][t], b = a[i][t];
        if (b == 0) continue;
        if (b % p == 0) {
          row_op(t, i, 1, 0, -(b / p), 1);
        } else {
          std::int64_t s, u;
          const std::int64_t g = ext_gcd(p, b, s, u);
          row_op(t, i, s, u, -(b / g), p / g);
        }
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        const std::int64_t p = a[t][t], b = a[t][j];
        if (b == 0) continue;
        if (b % p == 0) {
          col_op(t, j, 1, 0, -(b / p), 1);
        } else {
          std::int64_t s, u;
          const std::int64_t g = ext_gcd(p, b, s, u);
          col_op(t, j, s, u, -(b / g), p / g);
          dirty = true;
        }
      }
      for (std::size_t i = t + 1; i < rows && !dirty; ++i) dirty = a[i][t] != 0;
    }
  }
  for (std::size_t i = t; i < rows; ++i)
    if (d[i] != 0) return std::nullopt;
  std::vector<std::int64_t> y(cols, 0);
  for (std::size_t k = 0; k < t; ++k) {
    const std::int64_t p = a[k][k];
    const std::int64_t g = std::gcd(p, n);
    if (d[k] % g != 0) return std::nullopt;
    const std::int64_t m = n / g;
    std::int64_t s, u;
    ext_gcd(p / g, m, s, u);
    y[k] = mod(i128(d[k] / g) * mod(s, m), m);
  }
  std::vector<std::int64_t> x(cols, 0);
  for (std::size_t i = 0; i < cols; ++i) {
    i128 acc = 0;
    for (std::size_t k = 0; k < cols; ++k) acc += i128(v[i][k]) * y[k];
    x[i] = mod(acc, n);
  }
  return x;
}

}  // namespace

TwoCocycle::TwoCocycle(std::shared_ptr<const FiniteGroupoid> g, std::uint32_t order)
    : g_(std::move(g)), order_(order), table_(g_->size() * g_->size(), 0) {
  if (order == 0) throw Error("cocycle order must be positive");
}

void TwoCocycle::set(Arrow a, Arrow b, std::int64_t k) {
  if (a >= g_->size() || b >= g_->size() || !g_->composable(a, b))
    throw Error("cocycle value on a non-composable pair");
  table_[static_cast<std::size_t>(a) * g_->size() + b] = static_cast<Exponent>(mod(k, order_));
}

bool TwoCocycle::is_trivial() const {
  return std::all_of(table_.begin(), table_.end(), [](Exponent e) { return e == 0; });
}

Violations validate_cocycle(const TwoCocycle& s) {
  Violations out;
  const auto& g = s.groupoid();
  const std::uint32_t n = s.order();
  auto add = [&](std::string rule, std::vector<Arrow> w, std::string msg) {
    if (out.size() >= 200) return;
    Violation v{std::move(rule), {}, std::move(msg)};
    for (Arrow a : w) v.witnesses.push_back(g.name(a));
    out.push_back(std::move(v));
  };
  for (Arrow a = 0; a < g.size(); ++a) {
    if (s(g.range(a), a) != 0) add("normalisation", {g.range(a), a}, "s(r(g), g) != 1 at " + g.name(a));
    if (s(a, g.source(a)) != 0) add("normalisation", {a, g.source(a)}, "s(g, s(g)) != 1 at " + g.name(a));
  }
  for_each_composable_triple(g, [&](Arrow a, Arrow b, Arrow c) {
    const Arrow ab = g.compose(a, b), bc = g.compose(b, c);
    if ((s(a, b) + s(ab, c)) % n != (s(a, bc) + s(b, c)) % n)
      add("cocycle-identity", {a, b, c},
          "s(a,b)s(ab,c) != s(a,bc)s(b,c) at (" + g.name(a) + ", " + g.name(b) + ", " + g.name(c) + ")");
  });
  return out;
}

TwoCocycle invert_cocycle(const TwoCocycle& s) {
  TwoCocycle out(s.groupoid_ptr(), s.order());
  for_each_composable_pair(s.groupoid(), [&](Arrow a, Arrow b) { out.set(a, b, -static_cast<std::int64_t>(s(a, b))); });
  return out;
}

TwoCocycle multiply_cocycles(const TwoCocycle& s, const TwoCocycle& t) {
  require_same_context(s, t);
  TwoCocycle out(s.groupoid_ptr(), s.order());
  for_each_composable_pair(s.groupoid(), [&](Arrow a, Arrow b) { out.set(a, b, std::int64_t{s(a, b)} + t(a, b)); });
  return out;
}

Coboundary::Coboundary(std::shared_ptr<const FiniteGroupoid> g, std::uint32_t order)
    : g_(std::move(g)), order_(order), values_(g_->size(), 0) {
  if (order == 0) throw Error("coboundary order must be positive");
}

void Coboundary::set(Arrow a, std::int64_t k) {
  const auto v = static_cast<Exponent>(mod(k, order_));
  if (g_->is_unit(a) && v != 0) throw Error("coboundary must vanish on unit " + g_->name(a));
  values_.at(a) = v;
}

TwoCocycle apply_coboundary(const TwoCocycle& s, const Coboundary& b) {
  if (b.order() != s.order() || !(b.groupoid() == s.groupoid())) throw Error("coboundary and cocycle contexts differ");
  TwoCocycle out(s.groupoid_ptr(), s.order());
  const auto& g = s.groupoid();
  for_each_composable_pair(g, [&](Arrow x, Arrow y) {
    out.set(x, y, std::int64_t{s(x, y)} + b(x) + b(y) - std::int64_t{b(g.compose(x, y))});
  });
  return out;
}

std::optional<Coboundary> check_cohomologous(const TwoCocycle& s, const TwoCocycle& t) {
  require_same_context(s, t);
  const auto& g = s.groupoid();
  const std::int64_t n = s.order();
  std::vector<std::size_t> column(g.size(), SIZE_MAX);
  std::vector<Arrow> unknowns;
  for (Arrow a = 0; a < g.size(); ++a)
    if (!g.is_unit(a)) {
      column[a] = unknowns.size();
      unknowns.push_back(a);
    }
  std::vector<std::vector<std::int64_t>> rows;
  std::vector<std::int64_t> rhs;
  bool consistent = true;
  for_each_composable_pair(g, [&](Arrow x, Arrow y) {
    std::vector<std::int64_t> row(unknowns.size(), 0);
    auto bump = [&](Arrow a, std::int64_t c) {
      if (column[a] != SIZE_MAX) row[column[a]] = mod(row[column[a]] + c, n);
    };
    bump(x, 1);
    bump(y, 1);
    bump(g.compose(x, y), -1);
    const std::int64_t d = mod(std::int64_t{s(x, y)} - t(x, y), n);
    if (std::all_of(row.begin(), row.end(), [](std::int64_t c) { return c == 0; })) {
      if (d != 0) consistent = false;
      return;
    }
    rows.push_back(std::move(row));
    rhs.push_back(d);
  });
  if (!consistent) return std::nullopt;
  Coboundary b(s.groupoid_ptr(), s.order());
  if (!unknowns.empty()) {
    auto x = solve_mod(std::move(rows), std::move(rhs), unknowns.size(), n);
    if (!x) return std::nullopt;
    for (std::size_t k = 0; k < unknowns.size(); ++k) b.set(unknowns[k], (*x)[k]);
  }
  if (!(apply_coboundary(t, b) == s)) throw Error("internal: coboundary solver produced a wrong witness");
  return b;
}

namespace {

struct BruteForceSpace {
  std::vector<Arrow> unknowns;
  std::uint64_t total = 1;
};

BruteForceSpace brute_force_space(const TwoCocycle& s, const TwoCocycle& t, std::uint64_t cap) {
  require_same_context(s, t);
  BruteForceSpace sp;
  const auto& g = s.groupoid();
  for (Arrow a = 0; a < g.size(); ++a)
    if (!g.is_unit(a)) sp.unknowns.push_back(a);
  for (std::size_t i = 0; i < sp.unknowns.size(); ++i) {
    if (sp.total > cap / s.order()) throw Error("brute-force coboundary search exceeds cap " + std::to_string(cap));
    sp.total *= s.order();
  }
  return sp;
}

// Candidate idx assigns digits to unknowns with the first unknown most significant.
bool candidate_works(const TwoCocycle& s, const TwoCocycle& t, const BruteForceSpace& sp, std::uint64_t idx,
                     std::vector<std::int64_t>& b) {
  const auto& g = s.groupoid();
  const std::uint32_t n = s.order();
  for (std::size_t k = sp.unknowns.size(); k-- > 0;) {
    b[sp.unknowns[k]] = static_cast<std::int64_t>(idx % n);
    idx /= n;
  }
  for (Arrow x = 0; x < g.size(); ++x)
    for (Arrow y : g.range_fiber(g.source(x)))
      if (mod(std::int64_t{t(x, y)} + b[x] + b[y] - b[g.compose(x, y)], n) != s(x, y)) return false;
  return true;
}

std::optional<Coboundary> decode(const TwoCocycle& s, const TwoCocycle& t, const BruteForceSpace& sp,
                                 std::uint64_t idx) {
  std::vector<std::int64_t> b(s.groupoid().size(), 0);
  candidate_works(s, t, sp, idx, b);
  Coboundary out(s.groupoid_ptr(), s.order());
  for (Arrow a : sp.unknowns) out.set(a, b[a]);
  return out;
}

}  // namespace

std::optional<Coboundary> find_coboundary_brute_force(const TwoCocycle& s, const TwoCocycle& t, std::uint64_t cap) {
  const auto sp = brute_force_space(s, t, cap);
  const std::int64_t total = static_cast<std::int64_t>(sp.total);
  std::uint64_t best = UINT64_MAX;
#pragma omp parallel reduction(min : best)
  {
    std::vector<std::int64_t> b(s.groupoid().size(), 0);
#pragma omp for schedule(static)
    for (std::int64_t idx = 0; idx < total; ++idx) {
      if (static_cast<std::uint64_t>(idx) >= best) continue;
      if (candidate_works(s, t, sp, static_cast<std::uint64_t>(idx), b)) best = static_cast<std::uint64_t>(idx);
    }
  }
  if (best == UINT64_MAX) return std::nullopt;
  return decode(s, t, sp, best);
}

namespace reference {

std::optional<Coboundary> find_coboundary_brute_force(const TwoCocycle& s, const TwoCocycle& t, std::uint64_t cap) {
  const auto sp = brute_force_space(s, t, cap);
  std::vector<std::int64_t> b(s.groupoid().size(), 0);
  for (std::uint64_t idx = 0; idx < sp.total; ++idx)
    if (candidate_works(s, t, sp, idx, b)) return decode(s, t, sp, idx);
  return std::nullopt;
}

}  // namespace reference

GradingGroup GradingGroup::integers() { return GradingGroup(); }

GradingGroup GradingGroup::cyclic(std::uint32_t k) {
  if (k == 0) throw Error("Z/k requires k >= 1");
  GradingGroup g;
  g.kind_ = Kind::Cyclic;
  g.k_ = k;
  return g;
}

GradingGroup GradingGroup::from_table(std::uint32_t k, std::vector<std::uint32_t> table) {
  if (k == 0 || table.size() != std::size_t{k} * k) throw Error("group table must be k*k with k >= 1");
  for (auto v : table)
    if (v >= k) throw Error("group table entry out of range");
  auto mul = [&](std::uint32_t a, std::uint32_t b) { return table[std::size_t{a} * k + b]; };
  std::optional<std::uint32_t> e;
  for (std::uint32_t c = 0; c < k && !e; ++c) {
    bool ok = true;
    for (std::uint32_t x = 0; x < k && ok; ++x) ok = mul(c, x) == x && mul(x, c) == x;
    if (ok) e = c;
  }
  if (!e) throw Error("group table has no identity");
  for (std::uint32_t x = 0; x < k; ++x) {
    bool has_inverse = false;
    for (std::uint32_t y = 0; y < k && !has_inverse; ++y) has_inverse = mul(x, y) == *e && mul(y, x) == *e;
    if (!has_inverse) throw Error("group table element " + std::to_string(x) + " has no inverse");
    for (std::uint32_t y = 0; y < k; ++y)
      for (std::uint32_t z = 0; z < k; ++z)
        if (mul(mul(x, y), z) != mul(x, mul(y, z))) throw Error("group table is not associative");
  }
  GradingGroup g;
  g.kind_ = Kind::Table;
  g.k_ = k;
  g.table_ = std::move(table);
  g.identity_ = *e;
  return g;
}

std::int64_t GradingGroup::multiply(std::int64_t a, std::int64_t b) const {
  switch (kind_) {
    case Kind::Integers: return a + b;
    case Kind::Cyclic: return (a + b) % k_;
    case Kind::Table: return table_[static_cast<std::size_t>(a) * k_ + static_cast<std::size_t>(b)];
  }
  return 0;
}

bool GradingGroup::contains(std::int64_t a) const { return kind_ == Kind::Integers || (a >= 0 && a < k_); }

std::string GradingGroup::name() const {
  switch (kind_) {
    case Kind::Integers: return "Z";
    case Kind::Cyclic: return "Z/" + std::to_string(k_);
    case Kind::Table: return "table " + std::to_string(k_);
  }
  return {};
}

Grading::Grading(std::shared_ptr<const FiniteGroupoid> g, GradingGroup group)
    : g_(std::move(g)), group_(std::move(group)), degree_(g_->size(), group_.identity()) {}

void Grading::set(Arrow a, std::int64_t d) {
  if (!group_.contains(d)) throw Error("degree " + std::to_string(d) + " is not in " + group_.name());
  degree_.at(a) = d;
}

std::vector<std::int64_t> Grading::support() const {
  std::set<std::int64_t> s(degree_.begin(), degree_.end());
  return {s.begin(), s.end()};
}

Violations validate_grading(const Grading& c) {
  Violations out;
  const auto& g = c.groupoid();
  const auto& gamma = c.group();
  for (Arrow a = 0; a < g.size(); ++a) {
    if (!gamma.contains(c(a)))
      out.push_back({"grading-range", {g.name(a)}, "degree of " + g.name(a) + " is not in " + gamma.name()});
    else if (g.is_unit(a) && c(a) != gamma.identity())
      out.push_back({"grading-unit", {g.name(a)}, "unit " + g.name(a) + " must have the identity degree"});
  }
  if (!out.empty()) return out;
  for_each_composable_pair(g, [&](Arrow x, Arrow y) {
    const Arrow xy = g.compose(x, y);
    const std::int64_t lhs = c(xy), rhs = gamma.multiply(c(x), c(y));
    if (lhs != rhs && out.size() < 200)
      out.push_back({"grading-homomorphism",
                     {g.name(x), g.name(y)},
                     "c(" + g.name(x) + g.name(y) + ") = c(" + g.name(xy) + ") = " + std::to_string(lhs) +
                         " must equal c(" + g.name(x) + ")c(" + g.name(y) + ") = " + std::to_string(rhs)});
  });
  return out;
}

}  // namespace steinberg
