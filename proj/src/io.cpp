#include "steinberg/io.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>
#include <unordered_map>

namespace steinberg {

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

[[noreturn]] void fail(const Line& l, const std::string& msg) {
  throw ParseError("line " + std::to_string(l.number) + ": " + msg);
}

std::vector<Line> lex(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view raw = text.substr(pos, end - pos);
    ++number;
    pos = end + 1;
    std::istringstream is{std::string(raw)};
    Line l{number, {}};
    std::string tok;
    while (is >> tok) {
      if (tok[0] == '#') break;
      l.tokens.push_back(tok);
    }
    if (!l.tokens.empty()) out.push_back(std::move(l));
    if (end == text.size()) break;
  }
  return out;
}

std::vector<Line> body(std::string_view text, const std::string& kind) {
  auto lines = lex(text);
  if (lines.empty()) throw ParseError("empty input, expected a " + kind + " file");
  if (lines.front().tokens != std::vector<std::string>{kind})
    fail(lines.front(), "expected header '" + kind + "', got '" + lines.front().tokens[0] + "'");
  lines.erase(lines.begin());
  return lines;
}

void arity(const Line& l, std::size_t n) {
  if (l.tokens.size() != n)
    fail(l, "'" + l.tokens[0] + "' takes " + std::to_string(n - 1) + " argument(s), got " + std::to_string(l.tokens.size() - 1));
}

std::int64_t to_int(const Line& l, const std::string& s) {
  std::int64_t v = 0;
  const char* b = s.data();
  const char* e = s.data() + s.size();
  auto [p, ec] = std::from_chars(b, e, v);
  if (ec != std::errc() || p != e) fail(l, "expected an integer, got '" + s + "'");
  return v;
}

std::uint32_t to_order(const Line& l, const std::string& s) {
  const auto v = to_int(l, s);
  if (v < 1 || v > (std::int64_t{1} << 30)) fail(l, "order must be a positive integer, got '" + s + "'");
  return static_cast<std::uint32_t>(v);
}

Arrow lookup(const Line& l, const FiniteGroupoid& g, const std::string& name) {
  auto a = g.find(name);
  if (!a) fail(l, "unknown arrow '" + name + "'");
  return *a;
}

std::string rest(const Line& l, std::size_t from) {
  std::string s;
  for (std::size_t i = from; i < l.tokens.size(); ++i) s += l.tokens[i];
  return s;
}

Scalar literal(const Line& l, const Ring& ring, std::size_t from) {
  if (l.tokens.size() <= from) fail(l, "missing ring literal");
  try {
    return ring.parse_literal(rest(l, from));
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    fail(l, e.what());
  }
}

void check_ring(const Line& l, const Ring& ring) {
  arity(l, 2);
  Ring declared = Ring::rationals();
  try {
    declared = Ring::parse(l.tokens[1]);
  } catch (const Error& e) {
    fail(l, e.what());
  }
  if (!(declared == ring)) fail(l, "file is over " + declared.name() + " but " + ring.name() + " was requested");
}

bool is_groupoid_line(const Line& l) {
  const auto& k = l.tokens[0];
  return k == "unit" || k == "arrow" || k == "inverse" || k == "comp";
}

FiniteGroupoid build_groupoid(const std::vector<const Line*>& lines) {
  FiniteGroupoid::Data d;
  std::unordered_map<std::string, Arrow> index;
  for (const Line* l : lines) {
    const auto& k = l->tokens[0];
    if (k != "unit" && k != "arrow") continue;
    arity(*l, k == "unit" ? 2 : 4);
    if (!index.emplace(l->tokens[1], static_cast<Arrow>(d.names.size())).second)
      fail(*l, "duplicate arrow '" + l->tokens[1] + "'");
    d.names.push_back(l->tokens[1]);
    d.is_unit.push_back(k == "unit");
  }
  const std::size_t m = d.names.size();
  auto find = [&](const Line& l, const std::string& n) {
    auto it = index.find(n);
    if (it == index.end()) fail(l, "unknown arrow '" + n + "'");
    return it->second;
  };
  d.source.assign(m, kNoArrow);
  d.range.assign(m, kNoArrow);
  d.inverse.assign(m, kNoArrow);
  d.comp.assign(m * m, kNoArrow);
  for (const Line* l : lines) {
    const auto& k = l->tokens[0];
    if (k == "unit") {
      const Arrow a = index.at(l->tokens[1]);
      d.source[a] = d.range[a] = a;
    } else if (k == "arrow") {
      const Arrow a = index.at(l->tokens[1]);
      d.source[a] = find(*l, l->tokens[2]);
      d.range[a] = find(*l, l->tokens[3]);
    } else if (k == "inverse") {
      arity(*l, 3);
      const Arrow a = find(*l, l->tokens[1]);
      if (d.inverse[a] != kNoArrow) fail(*l, "second inverse for '" + l->tokens[1] + "'");
      d.inverse[a] = find(*l, l->tokens[2]);
    } else if (k == "comp") {
      arity(*l, 4);
      const std::size_t at = std::size_t{find(*l, l->tokens[1])} * m + find(*l, l->tokens[2]);
      if (d.comp[at] != kNoArrow) fail(*l, "second composition for '" + l->tokens[1] + " " + l->tokens[2] + "'");
      d.comp[at] = find(*l, l->tokens[3]);
    }
  }
  std::vector<Arrow> declared_inverse = d.inverse;
  for (Arrow a = 0; a < m; ++a) {
    if (d.is_unit[a] && d.inverse[a] == kNoArrow) d.inverse[a] = a;
    if (declared_inverse[a] != kNoArrow && d.inverse[declared_inverse[a]] == kNoArrow &&
        declared_inverse[declared_inverse[a]] == kNoArrow)
      d.inverse[declared_inverse[a]] = a;
  }
  for (Arrow a = 0; a < m; ++a) {
    auto& left = d.comp[std::size_t{d.range[a]} * m + a];
    if (left == kNoArrow) left = a;
    auto& right = d.comp[std::size_t{a} * m + d.source[a]];
    if (right == kNoArrow) right = a;
  }
  return FiniteGroupoid(std::move(d));
}

void write_groupoid_lines(std::ostream& os, const FiniteGroupoid& g) {
  for (Arrow a = 0; a < g.size(); ++a) {
    if (g.is_unit(a) && g.source(a) == a && g.range(a) == a)
      os << "unit " << g.name(a) << "\n";
    else
      os << "arrow " << g.name(a) << " " << g.name(g.source(a)) << " " << g.name(g.range(a)) << "\n";
  }
  for (Arrow a = 0; a < g.size(); ++a)
    if (g.inverse(a) != kNoArrow && !(g.is_unit(a) && g.inverse(a) == a))
      os << "inverse " << g.name(a) << " " << g.name(g.inverse(a)) << "\n";
  for (Arrow a = 0; a < g.size(); ++a)
    for (Arrow b = 0; b < g.size(); ++b) {
      const Arrow c = g.compose(a, b);
      if (c == kNoArrow) continue;
      if (a == g.range(b) && c == b) continue;
      if (b == g.source(a) && c == a) continue;
      os << "comp " << g.name(a) << " " << g.name(b) << " " << g.name(c) << "\n";
    }
}

std::optional<std::string> keyword_value(std::string_view text, const std::string& key) {
  for (const auto& l : lex(text))
    if (l.tokens[0] == key && l.tokens.size() == 2) return l.tokens[1];
  return std::nullopt;
}

void write_coefficients(std::ostream& os, const FiniteGroupoid& g, const Ring& ring, const std::vector<Scalar>& v) {
  for (Arrow a = 0; a < g.size(); ++a)
    if (!ring.is_zero(v[a])) os << "coeff " << g.name(a) << " " << ring.format(v[a]) << "\n";
}

void read_coefficient(const Line& l, const FiniteGroupoid& g, const Ring& ring, std::vector<Scalar>& v,
                      std::vector<bool>& seen) {
  if (l.tokens.size() < 3) fail(l, "'coeff' takes an arrow and a literal");
  const Arrow a = lookup(l, g, l.tokens[1]);
  if (seen[a]) fail(l, "second coefficient for '" + l.tokens[1] + "'");
  seen[a] = true;
  v[a] = literal(l, ring, 2);
}

}  // namespace

std::string file_kind(std::string_view text) {
  auto lines = lex(text);
  if (lines.empty()) throw ParseError("empty input");
  return lines.front().tokens[0];
}

std::optional<std::string> referenced_groupoid(std::string_view text) { return keyword_value(text, "groupoid"); }
std::optional<std::string> referenced_ring(std::string_view text) { return keyword_value(text, "ring"); }

std::string write_groupoid(const FiniteGroupoid& g) {
  std::ostringstream os;
  os << "groupoid\n";
  write_groupoid_lines(os, g);
  return os.str();
}

FiniteGroupoid read_groupoid(std::string_view text) {
  const auto lines = body(text, "groupoid");
  std::vector<const Line*> ptrs;
  for (const auto& l : lines) {
    if (!is_groupoid_line(l)) fail(l, "unexpected '" + l.tokens[0] + "' in groupoid file");
    ptrs.push_back(&l);
  }
  try {
    return build_groupoid(ptrs);
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
}

std::string write_cocycle(const TwoCocycle& s, const std::optional<std::string>& groupoid_path) {
  std::ostringstream os;
  os << "cocycle\n";
  if (groupoid_path) os << "groupoid " << *groupoid_path << "\n";
  os << "order " << s.order() << "\n";
  const auto& g = s.groupoid();
  for_each_composable_pair(g, [&](Arrow a, Arrow b) {
    if (s(a, b) != 0) os << "value " << g.name(a) << " " << g.name(b) << " " << s(a, b) << "\n";
  });
  return os.str();
}

TwoCocycle read_cocycle(std::string_view text, const std::shared_ptr<const FiniteGroupoid>& g) {
  const auto lines = body(text, "cocycle");
  std::optional<std::uint32_t> order;
  for (const auto& l : lines)
    if (l.tokens[0] == "order") {
      arity(l, 2);
      if (order) fail(l, "second 'order' line");
      order = to_order(l, l.tokens[1]);
    }
  if (!order) throw ParseError("cocycle file has no 'order' line");
  TwoCocycle s(g, *order);
  std::vector<bool> seen(g->size() * g->size(), false);
  for (const auto& l : lines) {
    const auto& k = l.tokens[0];
    if (k == "order") continue;
    if (k == "groupoid") {
      arity(l, 2);
      continue;
    }
    if (k != "value") fail(l, "unexpected '" + k + "' in cocycle file");
    arity(l, 4);
    const Arrow a = lookup(l, *g, l.tokens[1]), b = lookup(l, *g, l.tokens[2]);
    if (!g->composable(a, b)) fail(l, "pair " + l.tokens[1] + " " + l.tokens[2] + " is not composable");
    if (seen[std::size_t{a} * g->size() + b]) fail(l, "second value for " + l.tokens[1] + " " + l.tokens[2]);
    seen[std::size_t{a} * g->size() + b] = true;
    s.set(a, b, to_int(l, l.tokens[3]));
  }
  return s;
}

std::string write_coboundary(const Coboundary& b) {
  std::ostringstream os;
  os << "coboundary\norder " << b.order() << "\n";
  for (Arrow a = 0; a < b.groupoid().size(); ++a)
    if (b(a) != 0) os << "value " << b.groupoid().name(a) << " " << b(a) << "\n";
  return os.str();
}

Coboundary read_coboundary(std::string_view text, const std::shared_ptr<const FiniteGroupoid>& g) {
  const auto lines = body(text, "coboundary");
  std::optional<Coboundary> b;
  for (const auto& l : lines) {
    const auto& k = l.tokens[0];
    if (k == "order") {
      arity(l, 2);
      if (b) fail(l, "'order' must come first and only once");
      b.emplace(g, to_order(l, l.tokens[1]));
    } else if (k == "value") {
      arity(l, 3);
      if (!b) fail(l, "'value' before 'order'");
      try {
        b->set(lookup(l, *g, l.tokens[1]), to_int(l, l.tokens[2]));
      } catch (const ParseError&) {
        throw;
      } catch (const Error& e) {
        fail(l, e.what());
      }
    } else {
      fail(l, "unexpected '" + k + "' in coboundary file");
    }
  }
  if (!b) throw ParseError("coboundary file has no 'order' line");
  return *b;
}

std::string write_grading(const Grading& c, const std::optional<std::string>& groupoid_path) {
  std::ostringstream os;
  os << "grading\n";
  if (groupoid_path) os << "groupoid " << *groupoid_path << "\n";
  const auto& gamma = c.group();
  os << "group " << gamma.name() << "\n";
  if (gamma.is_table())
    for (std::uint32_t a = 0; a < gamma.size(); ++a) {
      os << "row";
      for (std::uint32_t b = 0; b < gamma.size(); ++b) os << " " << gamma.table()[std::size_t{a} * gamma.size() + b];
      os << "\n";
    }
  for (Arrow a = 0; a < c.groupoid().size(); ++a) os << "degree " << c.groupoid().name(a) << " " << c(a) << "\n";
  return os.str();
}

Grading read_grading(std::string_view text, const std::shared_ptr<const FiniteGroupoid>& g) {
  const auto lines = body(text, "grading");
  std::optional<GradingGroup> group;
  std::optional<std::uint32_t> table_size;
  std::vector<std::uint32_t> table;
  std::size_t rows = 0;
  const Line* group_line = nullptr;
  for (const auto& l : lines) {
    const auto& k = l.tokens[0];
    if (k == "group") {
      if (group || table_size) fail(l, "second 'group' line");
      group_line = &l;
      if (l.tokens.size() == 2 && l.tokens[1] == "Z") {
        group = GradingGroup::integers();
      } else if (l.tokens.size() == 2 && l.tokens[1].rfind("Z/", 0) == 0) {
        group = GradingGroup::cyclic(to_order(l, l.tokens[1].substr(2)));
      } else if (l.tokens.size() == 3 && l.tokens[1] == "table") {
        table_size = to_order(l, l.tokens[2]);
      } else {
        fail(l, "expected 'group Z', 'group Z/k' or 'group table k'");
      }
    } else if (k == "row") {
      if (!table_size) fail(l, "'row' outside a table group");
      arity(l, *table_size + 1);
      for (std::size_t i = 1; i < l.tokens.size(); ++i) table.push_back(static_cast<std::uint32_t>(to_int(l, l.tokens[i])));
      ++rows;
    }
  }
  if (table_size) {
    if (rows != *table_size) fail(*group_line, "table group needs " + std::to_string(*table_size) + " rows");
    try {
      group = GradingGroup::from_table(*table_size, table);
    } catch (const Error& e) {
      fail(*group_line, e.what());
    }
  }
  if (!group) throw ParseError("grading file has no 'group' line");
  Grading c(g, *group);
  std::vector<bool> seen(g->size(), false);
  for (const auto& l : lines) {
    const auto& k = l.tokens[0];
    if (k == "group" || k == "row") continue;
    if (k == "groupoid") {
      arity(l, 2);
      continue;
    }
    if (k != "degree") fail(l, "unexpected '" + k + "' in grading file");
    arity(l, 3);
    const Arrow a = lookup(l, *g, l.tokens[1]);
    if (seen[a]) fail(l, "second degree for '" + l.tokens[1] + "'");
    seen[a] = true;
    const auto d = to_int(l, l.tokens[2]);
    if (!group->contains(d)) fail(l, "degree " + l.tokens[2] + " is not in " + group->name());
    c.set(a, d);
  }
  return c;
}

std::string write_function(const FiniteGroupoid& g, const Ring& ring, const std::vector<Scalar>& values) {
  std::ostringstream os;
  os << "element\nring " << ring.name() << "\n";
  write_coefficients(os, g, ring, values);
  return os.str();
}

std::vector<Scalar> read_function(std::string_view text, const FiniteGroupoid& g, const Ring& ring) {
  const auto lines = body(text, "element");
  std::vector<Scalar> v(g.size(), ring.zero());
  std::vector<bool> seen(g.size(), false);
  for (const auto& l : lines) {
    if (l.tokens[0] == "ring")
      check_ring(l, ring);
    else if (l.tokens[0] == "coeff")
      read_coefficient(l, g, ring, v, seen);
    else
      fail(l, "unexpected '" + l.tokens[0] + "' in element file");
  }
  return v;
}

std::string write_element(const AlgebraElement& f) {
  return write_function(f.context().groupoid(), f.context().ring(), f.coefficients());
}

AlgebraElement read_element(std::string_view text, const std::shared_ptr<const AlgebraContext>& ctx) {
  return ctx->element(read_function(text, ctx->groupoid(), ctx->ring()));
}

std::string write_twist(const DiscreteTwist& t, const std::optional<std::string>& groupoid_path) {
  std::ostringstream os;
  os << "twist\n";
  if (groupoid_path) os << "groupoid " << *groupoid_path << "\n";
  os << "order " << t.order() << "\n";
  write_groupoid_lines(os, t.total());
  const auto& g = t.base();
  for (Arrow x : g.units())
    for (Exponent k = 0; k < t.order(); ++k)
      os << "include " << g.name(x) << " " << k << " " << t.total().name(t.include(x, k)) << "\n";
  for (Arrow e = 0; e < t.total().size(); ++e)
    os << "quotient " << t.total().name(e) << " " << g.name(t.quotient(e)) << "\n";
  return os.str();
}

DiscreteTwist read_twist(std::string_view text, const std::shared_ptr<const FiniteGroupoid>& base) {
  const auto lines = body(text, "twist");
  std::optional<std::uint32_t> order;
  std::vector<const Line*> glines;
  for (const auto& l : lines) {
    if (l.tokens[0] == "order") {
      arity(l, 2);
      if (order) fail(l, "second 'order' line");
      order = to_order(l, l.tokens[1]);
    } else if (is_groupoid_line(l)) {
      glines.push_back(&l);
    }
  }
  if (!order) throw ParseError("twist file has no 'order' line");
  FiniteGroupoid total;
  try {
    total = build_groupoid(glines);
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
  std::vector<std::vector<Arrow>> inclusion(base->size());
  for (Arrow x : base->units()) inclusion[x].assign(*order, kNoArrow);
  std::vector<Arrow> quotient(total.size(), kNoArrow);
  for (const auto& l : lines) {
    const auto& k = l.tokens[0];
    if (k == "order" || is_groupoid_line(l)) continue;
    if (k == "groupoid") {
      arity(l, 2);
    } else if (k == "include") {
      arity(l, 4);
      const Arrow x = lookup(l, *base, l.tokens[1]);
      if (!base->is_unit(x)) fail(l, "'" + l.tokens[1] + "' is not a unit of the base groupoid");
      const auto z = to_int(l, l.tokens[2]);
      if (z < 0 || z >= *order) fail(l, "exponent out of range");
      auto& slot = inclusion[x][static_cast<std::size_t>(z)];
      if (slot != kNoArrow) fail(l, "second inclusion for " + l.tokens[1] + " " + l.tokens[2]);
      slot = lookup(l, total, l.tokens[3]);
    } else if (k == "quotient") {
      arity(l, 3);
      const Arrow e = lookup(l, total, l.tokens[1]);
      if (quotient[e] != kNoArrow) fail(l, "second quotient for '" + l.tokens[1] + "'");
      quotient[e] = lookup(l, *base, l.tokens[2]);
    } else {
      fail(l, "unexpected '" + k + "' in twist file");
    }
  }
  for (Arrow x : base->units())
    for (Exponent z = 0; z < *order; ++z)
      if (inclusion[x][z] == kNoArrow) throw ParseError("missing inclusion for " + base->name(x) + " " + std::to_string(z));
  for (Arrow e = 0; e < total.size(); ++e)
    if (quotient[e] == kNoArrow) throw ParseError("missing quotient for " + total.name(e));
  try {
    return DiscreteTwist(base, *order, std::move(total), std::move(inclusion), std::move(quotient));
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
}

std::string write_section(const DiscreteTwist& t, const GlobalSection& p) {
  std::ostringstream os;
  os << "section\n";
  for (Arrow a = 0; a < p.image.size(); ++a) os << "map " << t.base().name(a) << " " << t.total().name(p(a)) << "\n";
  return os.str();
}

GlobalSection read_section(std::string_view text, const DiscreteTwist& t) {
  const auto lines = body(text, "section");
  GlobalSection p{std::vector<Arrow>(t.base().size(), kNoArrow)};
  for (const auto& l : lines) {
    if (l.tokens[0] != "map") fail(l, "unexpected '" + l.tokens[0] + "' in section file");
    arity(l, 3);
    const Arrow a = lookup(l, t.base(), l.tokens[1]);
    if (p.image[a] != kNoArrow) fail(l, "second image for '" + l.tokens[1] + "'");
    p.image[a] = lookup(l, t.total(), l.tokens[2]);
  }
  for (Arrow a = 0; a < p.image.size(); ++a)
    if (p.image[a] == kNoArrow) throw ParseError("section has no image for " + t.base().name(a));
  return p;
}

std::string write_morphism(const DiscreteTwist& from, const DiscreteTwist& to, const TwistMorphism& m) {
  std::ostringstream os;
  os << "morphism\n";
  for (Arrow e = 0; e < m.map.size(); ++e) os << "map " << from.total().name(e) << " " << to.total().name(m(e)) << "\n";
  return os.str();
}

TwistMorphism read_morphism(std::string_view text, const DiscreteTwist& from, const DiscreteTwist& to) {
  const auto lines = body(text, "morphism");
  TwistMorphism m{std::vector<Arrow>(from.total().size(), kNoArrow)};
  for (const auto& l : lines) {
    if (l.tokens[0] != "map") fail(l, "unexpected '" + l.tokens[0] + "' in morphism file");
    arity(l, 3);
    const Arrow e = lookup(l, from.total(), l.tokens[1]);
    if (m.map[e] != kNoArrow) fail(l, "second image for '" + l.tokens[1] + "'");
    m.map[e] = lookup(l, to.total(), l.tokens[2]);
  }
  for (Arrow e = 0; e < m.map.size(); ++e)
    if (m.map[e] == kNoArrow) throw ParseError("morphism has no image for " + from.total().name(e));
  return m;
}

std::string write_ideal(const Ideal& ideal) {
  const auto& ctx = ideal.context();
  std::ostringstream os;
  os << "ideal\nring " << ctx.ring().name() << "\ndimension " << ideal.dimension() << "\n";
  for (const auto& row : ideal.space().rows()) {
    os << "row\n";
    write_coefficients(os, ctx.groupoid(), ctx.ring(), row);
  }
  return os.str();
}

Ideal read_ideal(std::string_view text, const std::shared_ptr<const AlgebraContext>& ctx) {
  const auto lines = body(text, "ideal");
  const auto& g = ctx->groupoid();
  const Ring& ring = ctx->ring();
  std::optional<std::size_t> declared;
  std::vector<std::vector<Scalar>> rows;
  std::vector<bool> seen;
  for (const auto& l : lines) {
    const auto& k = l.tokens[0];
    if (k == "ring") {
      check_ring(l, ring);
    } else if (k == "dimension") {
      arity(l, 2);
      const auto d = to_int(l, l.tokens[1]);
      if (d < 0) fail(l, "negative dimension");
      declared = static_cast<std::size_t>(d);
    } else if (k == "row") {
      arity(l, 1);
      rows.emplace_back(g.size(), ring.zero());
      seen.assign(g.size(), false);
    } else if (k == "coeff") {
      if (rows.empty()) fail(l, "'coeff' before the first 'row'");
      read_coefficient(l, g, ring, rows.back(), seen);
    } else {
      fail(l, "unexpected '" + k + "' in ideal file");
    }
  }
  RowSpace space(ring, g.size());
  for (auto& r : rows)
    if (!space.add(std::move(r))) throw ParseError("ideal rows are linearly dependent");
  if (declared && *declared != space.rank())
    throw ParseError("ideal declares dimension " + std::to_string(*declared) + " but has " + std::to_string(space.rank()) + " rows");
  Ideal ideal(ctx, std::move(space));
  if (!is_closed(ideal)) throw ParseError("ideal rows are not closed under multiplication by point masses");
  return ideal;
}

std::string write_decomposition(const AlgebraContext& ctx, const std::vector<DecompositionTerm>& terms) {
  std::ostringstream os;
  os << "decomposition\nring " << ctx.ring().name() << "\n";
  for (const auto& t : terms) {
    os << "term " << ctx.ring().format(t.coefficient);
    for (Arrow a : t.bisection.arrows()) os << " " << ctx.groupoid().name(a);
    os << "\n";
  }
  return os.str();
}

std::vector<DecompositionTerm> read_decomposition(std::string_view text, const AlgebraContext& ctx) {
  const auto lines = body(text, "decomposition");
  std::vector<DecompositionTerm> out;
  for (const auto& l : lines) {
    if (l.tokens[0] == "ring") {
      check_ring(l, ctx.ring());
      continue;
    }
    if (l.tokens[0] != "term") fail(l, "unexpected '" + l.tokens[0] + "' in decomposition file");
    if (l.tokens.size() < 3) fail(l, "'term' takes a literal and at least one arrow");
    Scalar c = [&] {
      try {
        return ctx.ring().parse_literal(l.tokens[1]);
      } catch (const Error& e) {
        fail(l, e.what());
      }
    }();
    std::vector<Arrow> arrows;
    for (std::size_t i = 2; i < l.tokens.size(); ++i) arrows.push_back(lookup(l, ctx.groupoid(), l.tokens[i]));
    try {
      out.push_back({std::move(c), make_bisection(ctx.groupoid(), arrows)});
    } catch (const Error& e) {
      fail(l, e.what());
    }
  }
  return out;
}

std::string write_components(const AlgebraContext& ctx, const Grading& c,
                             const std::vector<std::pair<std::int64_t, AlgebraElement>>& comps) {
  std::ostringstream os;
  os << "components\nring " << ctx.ring().name() << "\ngroup " << c.group().name() << "\n";
  for (const auto& [d, f] : comps) {
    os << "component " << d << "\n";
    write_coefficients(os, ctx.groupoid(), ctx.ring(), f.coefficients());
  }
  return os.str();
}

std::vector<std::pair<std::int64_t, AlgebraElement>> read_components(std::string_view text,
                                                                     const std::shared_ptr<const AlgebraContext>& ctx) {
  const auto lines = body(text, "components");
  const auto& g = ctx->groupoid();
  std::vector<std::pair<std::int64_t, std::vector<Scalar>>> raw;
  std::vector<bool> seen;
  for (const auto& l : lines) {
    const auto& k = l.tokens[0];
    if (k == "ring") {
      check_ring(l, ctx->ring());
    } else if (k == "group") {
      continue;
    } else if (k == "component") {
      arity(l, 2);
      raw.emplace_back(to_int(l, l.tokens[1]), std::vector<Scalar>(g.size(), ctx->ring().zero()));
      seen.assign(g.size(), false);
    } else if (k == "coeff") {
      if (raw.empty()) fail(l, "'coeff' before the first 'component'");
      read_coefficient(l, g, ctx->ring(), raw.back().second, seen);
    } else {
      fail(l, "unexpected '" + k + "' in components file");
    }
  }
  std::vector<std::pair<std::int64_t, AlgebraElement>> out;
  for (auto& [d, v] : raw) out.emplace_back(d, ctx->element(std::move(v)));
  return out;
}

}  // namespace steinberg
