// Acceptance run: one [PASS]/[FAIL] line per criterion, exit 1 on any failure.
#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "corpus.hpp"
#include "frozen.hpp"
#include "support.hpp"

using namespace steinberg;
using testing::Gen;

namespace {

/// Failures collected by one criterion; the first few are printed.
struct Tally {
  std::size_t checks = 0;
  std::vector<std::string> failures;

  void check(bool ok, const std::string& what) {
    ++checks;
    if (!ok) failures.push_back(what);
  }
};

std::string name_of(const FiniteGroupoid& g, const Bisection& b) {
  std::string s = "{";
  for (Arrow a : b.arrows()) s += (s.size() > 1 ? "," : "") + g.name(a);
  return s + "}";
}

bool fits_cap(std::uint64_t q, std::size_t dim, std::uint64_t cap) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < dim; ++i) {
    if (total > cap / q) return false;
    total *= q;
  }
  return total <= cap;
}

// 1. Every catalog groupoid satisfies the axioms, associativity over all composable triples.
void axioms(Tally& t) {
  for (const auto& e : catalog()) {
    const auto& g = *e.groupoid;
    const auto vs = validate_groupoid(g);
    t.check(vs.empty(), e.name + ": " + (vs.empty() ? "" : to_string(vs.front())));
    std::size_t bad = 0;
    for_each_composable_triple(g, [&](Arrow a, Arrow b, Arrow c) {
      bad += g.compose(g.compose(a, b), c) != g.compose(a, g.compose(b, c));
    });
    t.check(bad == 0, e.name + ": " + std::to_string(bad) + " non-associative triples");
  }
}

// 2. Twisted convolution is associative; the involution reverses products and squares to 1.
void algebra_laws(Tally& t) {
  struct Ctx {
    const char* entry;
    const char* cocycle;
    Ring ring;
    std::optional<Involution> inv;
  };
  const std::vector<Ctx> ctxs{{"Z2", "neg", Ring::prime_field(3), Involution::identity()},
                              {"R3", "trivial", Ring::prime_field(2), Involution::identity()},
                              {"R3", "cob", Ring::prime_field(3), Involution::identity()},
                              {"Z4", "carry4", Ring::cyclotomic(4), Involution::conjugation()},
                              {"K4", "bilinear", Ring::rationals(), Involution::identity()},
                              {"S3", "trivial", Ring::rationals(), Involution::identity()},
                              {"swap", "cob", Ring::cyclotomic(4), Involution::conjugation()},
                              {"R2+R2", "cob", Ring::prime_field(3), Involution::identity()},
                              {"R3", "cob4", Ring::cyclotomic(4), Involution::conjugation()},
                              {"Z4", "carry4", Ring::quadratic_field(3), Involution::frobenius()}};
  Gen gen(1001);
  std::size_t triples = 0, pairs = 0;
  for (const auto& c : ctxs) {
    const auto ctx = testing::context(c.entry, c.cocycle, c.ring, c.inv);
    const std::string where = std::string(c.entry) + "/" + c.cocycle + "/" + c.ring.name();
    for (int i = 0; i < 130; ++i, ++triples) {
      const auto f = gen.element(ctx), g = gen.element(ctx), h = gen.element(ctx);
      t.check((f * g) * h == f * (g * h), where + ": associativity");
    }
    for (int i = 0; i < 60; ++i, ++pairs) {
      const auto f = gen.element(ctx), g = gen.element(ctx);
      t.check(involute(f * g) == involute(g) * involute(f), where + ": (fg)* = g*f*");
      t.check(involute(involute(f)) == f, where + ": f** = f");
    }
  }
  t.check(triples >= 1000, "fewer than 1000 triples");
  t.check(pairs >= 500, "fewer than 500 pairs");
}

// 3. Characteristic functions of bisections.
void bisection_identities(Tally& t) {
  struct Ctx {
    const char* entry;
    const char* cocycle;
    Ring ring;
    Involution inv;
  };
  const std::vector<Ctx> ctxs{{"R3", "cob", Ring::prime_field(3), Involution::identity()},
                              {"R3", "cob4", Ring::cyclotomic(4), Involution::conjugation()},
                              {"Z4", "carry4", Ring::cyclotomic(4), Involution::conjugation()},
                              {"Z4", "carry", Ring::prime_field(3), Involution::identity()}};
  for (const auto& c : ctxs) {
    const auto ctx = testing::context(c.entry, c.cocycle, c.ring, c.inv);
    const auto& g = ctx->groupoid();
    const Ring& r = ctx->ring();
    const std::string where = std::string(c.entry) + "/" + c.cocycle + " ";
    const auto bs = all_bisections(g);
    for (const auto& b : bs) {
      const auto one_b = char_fn(*ctx, b);
      const auto star_b = involute(one_b);
      const auto binv = bisection_inverse(g, b);
      for (const auto& d : bs) {
        const auto prod = one_b * char_fn(*ctx, d);
        auto expect = ctx->zero().coefficients();
        for (Arrow x : b.arrows())
          for (Arrow y : d.arrows())
            if (g.composable(x, y)) expect[g.compose(x, y)] = ctx->cocycle_value(x, y);
        t.check(prod.coefficients() == expect, where + "(a) at " + name_of(g, b) + name_of(g, d));
        const bool unit_side = std::all_of(b.arrows().begin(), b.arrows().end(), [&](Arrow a) { return g.is_unit(a); }) ||
                               std::all_of(d.arrows().begin(), d.arrows().end(), [&](Arrow a) { return g.is_unit(a); });
        if (unit_side)
          t.check(prod == char_fn(*ctx, bisection_product(g, b, d)), where + "(b) at " + name_of(g, b) + name_of(g, d));
      }
      for (Arrow x = 0; x < g.size(); ++x) {
        const Scalar want = binv.contains(x) ? r.inverse(ctx->cocycle_value(x, g.inverse(x))) : r.zero();
        t.check(star_b[x] == want, where + "(c) at " + name_of(g, b));
      }
      const auto rb = range_set(g, b), sb = source_set(g, b);
      t.check(one_b * star_b == char_fn(*ctx, rb), where + "(d) range at " + name_of(g, b));
      t.check(star_b * one_b == char_fn(*ctx, sb), where + "(d) source at " + name_of(g, b));
      t.check(one_b * star_b * one_b == one_b, where + "(e) at " + name_of(g, b));
    }
  }
}

// 4. Cohomologous, isomorphic twists and induced cocycles coincide; class counts.
void three_way(Tally& t) {
  for (const char* entry : {"Z2", "R2"}) {
    const auto g = catalog_entry(entry).groupoid;
    const auto all = enumerate_cocycles(g, 2);
    const auto counted = testing::oracle::count_cohomology(*g, 2);
    t.check(all.size() == counted.cocycles, std::string(entry) + ": cocycle count differs from the oracle");
    std::vector<DiscreteTwist> twists;
    for (const auto& s : all) twists.push_back(build_twist(s));
    std::vector<std::size_t> cls(all.size());
    std::size_t classes = 0;
    for (std::size_t i = 0; i < all.size(); ++i) {
      cls[i] = classes;
      for (std::size_t j = 0; j < i; ++j) {
        const bool coh = check_cohomologous(all[i], all[j]).has_value();
        const bool brute = find_coboundary_brute_force(all[i], all[j]).has_value();
        const bool iso = twists_isomorphic(twists[i], twists[j]).has_value();
        // The section of twist j induces a cocycle; compare it with cocycle i.
        const auto induced = induced_cocycle(twists[j], find_section(twists[j]));
        const bool ind = check_cohomologous(all[i], induced).has_value();
        const std::string at = std::string(entry) + " pair " + std::to_string(i) + "," + std::to_string(j);
        t.check(coh == brute, at + ": solver and brute force disagree");
        t.check(coh == iso, at + ": cohomology and twist isomorphism disagree");
        t.check(coh == ind, at + ": cohomology and induced cocycle disagree");
        if (coh && cls[i] == classes) cls[i] = cls[j];
      }
      if (cls[i] == classes) ++classes;
    }
    const std::size_t want = std::string(entry) == "Z2" ? 2 : 1;
    t.check(classes == want, std::string(entry) + ": " + std::to_string(classes) + " classes");
    t.check(classes == counted.classes, std::string(entry) + ": class count differs from the oracle");
  }
  // Frozen counts, recounted by brute-force coboundary search alone.
  for (const auto& f : testing::frozen::kCohomology) {
    const auto all = enumerate_cocycles(catalog_entry(f.entry).groupoid, f.order);
    std::vector<std::size_t> reps;
    for (std::size_t i = 0; i < all.size(); ++i) {
      bool fresh = true;
      for (std::size_t r : reps) fresh = fresh && !find_coboundary_brute_force(all[i], all[r]).has_value();
      if (fresh) reps.push_back(i);
    }
    const std::string at = std::string(f.entry) + " mod " + std::to_string(f.order);
    t.check(all.size() == f.cocycles, at + ": cocycle count");
    t.check(reps.size() == f.classes, at + ": class count");
  }
  const auto& z2 = catalog_entry("Z2");
  const auto neg_twist = build_twist(z2.cocycle("neg"));
  const auto flat_twist = build_twist(TwoCocycle(z2.groupoid, 2));
  const auto& sigma_neg = neg_twist.total();
  const auto& sigma_flat = flat_twist.total();
  std::size_t neg_max = 0, flat_max = 0;
  for (Arrow e = 0; e < 4; ++e) {
    neg_max = std::max(neg_max, testing::oracle::arrow_order(sigma_neg, e));
    flat_max = std::max(flat_max, testing::oracle::arrow_order(sigma_flat, e));
  }
  t.check(neg_max == testing::frozen::kZ2NegCarrierOrder, "neg carrier is not cyclic of order 4");
  t.check(flat_max == testing::frozen::kZ2TrivialCarrierOrder, "trivial carrier is not the Klein group");
}

// 5. Sections and the isomorphism they induce.
void sections(Tally& t) {
  Gen gen(1005);
  for (const auto& e : catalog()) {
    std::vector<TwoCocycle> cocycles{TwoCocycle(e.groupoid, 2)};
    for (const auto& [n, s] : e.cocycles) cocycles.push_back(s);
    for (const auto& s : cocycles) {
      const auto tw = build_twist(s);
      const std::string at = e.name + " order " + std::to_string(s.order());
      const auto canonical = find_section(tw);
      t.check(induced_cocycle(tw, canonical) == s, at + ": canonical section does not induce the cocycle");
      std::vector<std::pair<DiscreteTwist, GlobalSection>> cases{{tw, canonical}};
      const auto moved = testing::relabel(tw, gen.permutation(tw.total().size()));
      cases.emplace_back(moved, find_section(moved));
      cases.emplace_back(tw, shift_section(tw, canonical, gen.coboundary(e.groupoid, s.order())));
      for (const auto& [x, p] : cases) {
        t.check(validate_section(x, p).empty(), at + ": invalid section");
        const auto induced = induced_cocycle(x, p);
        t.check(check_cohomologous(induced, s).has_value(), at + ": induced cocycle not cohomologous");
        const auto phi = section_iso(x, p);
        const auto from = build_twist(induced);
        t.check(validate_twist_morphism(from, x, phi).empty(), at + ": section isomorphism fails its diagram");
        t.check(respects_t_action(from, x, phi), at + ": section isomorphism ignores the T-action");
        std::size_t bad = 0;
        for_each_composable_pair(from.total(), [&](Arrow a, Arrow b) {
          bad += phi(from.total().compose(a, b)) != x.total().compose(phi(a), phi(b));
        });
        t.check(bad == 0, at + ": section isomorphism is not multiplicative");
      }
    }
  }
}

// 6. Psi is a star-preserving algebra isomorphism, independent of the summation section.
void psi_iso(Tally& t) {
  struct Case {
    const char* entry;
    const char* cocycle;
    Ring ring;
  };
  Gen gen(1006);
  for (const auto& c : {Case{"Z2", "neg", Ring::rationals()}, Case{"R2", "cob", Ring::prime_field(3)}}) {
    const auto& e = catalog_entry(c.entry);
    const auto s = e.cocycle(c.cocycle);
    const auto tw = build_twist(s);
    const auto p = find_section(tw);
    Coboundary b(e.groupoid, s.order());
    for (Arrow a = 0; a < e.groupoid->size(); ++a)
      if (!e.groupoid->is_unit(a)) b.set(a, 1);
    const auto p2 = shift_section(tw, p, b);
    t.check(!(p2 == p), std::string(c.entry) + ": second section equals the first");
    const auto ctx = EquivariantContext::create(tw, p, c.ring, Involution::identity());
    const auto target = ctx->psi_target();
    const std::string at = std::string(c.entry) + "/" + c.cocycle + " ";
    for (int i = 0; i < 200; ++i) {
      const auto f = ctx->encode(gen.element(target).coefficients());
      const auto g = ctx->encode(gen.element(target).coefficients());
      const auto fg = equiv_convolve(f, g);
      t.check(psi(fg) == psi(f) * psi(g), at + "psi not multiplicative");
      t.check(psi(equiv_involute(f)) == involute(psi(f)), at + "psi not star-compatible");
      t.check(psi_inverse(ctx, psi(f)) == f, at + "psi_inverse(psi(f)) != f");
      const auto h = gen.element(target);
      t.check(psi(psi_inverse(ctx, h)) == h, at + "psi(psi_inverse(h)) != h");
      t.check(equiv_convolve(f, g, p2) == fg, at + "product depends on the summation section");
    }
  }
}

// 7. Every nonzero ideal of an effective algebra contains some 1_V.
void ck_witnesses(Tally& t) {
  Gen gen(1007);
  for (const char* entry : {"R3", "swap"})
    for (const auto& [ring, coc] : std::vector<std::pair<Ring, const char*>>{
             {Ring::prime_field(2), "trivial"}, {Ring::prime_field(3), "trivial"}, {Ring::prime_field(3), "cob"}}) {
      const auto ctx = testing::context(entry, coc, ring);
      const std::string at = std::string(entry) + "/" + coc + "/" + ring.name() + " ";
      for (int i = 0; i < 100; ++i) {
        const auto f = gen.nonzero_element(ctx);
        const std::vector<AlgebraElement> gens{f};
        const auto ideal = ideal_generated(ctx, gens);
        const auto v = ck_witness(ideal);
        t.check(!v.empty(), at + "empty witness");
        const auto one_v = char_fn(*ctx, v);
        t.check(ideal.contains(one_v), at + "1_V outside the ideal");
        t.check(testing::oracle::in_ideal_gfp(*ctx, {f.coefficients()}, one_v.coefficients()),
                at + "oracle disagrees on 1_V");
      }
    }
}

// 8. Exhaustive and structural simplicity agree on effective contexts.
void simplicity(Tally& t) {
  std::size_t positive = 0;
  for (const auto& e : catalog()) {
    if (!is_effective(*e.groupoid)) continue;
    for (std::int64_t p : {2, 3}) {
      const Ring ring = Ring::prime_field(p);
      if (!fits_cap(static_cast<std::uint64_t>(p), e.groupoid->size(), kDefaultExhaustiveCap)) continue;
      std::vector<TwoCocycle> cocycles{TwoCocycle(e.groupoid, 1)};
      for (const auto& [n, s] : e.cocycles)
        if (static_cast<std::int64_t>(s.order()) <= p - 1 && (p - 1) % s.order() == 0) cocycles.push_back(s);
      for (const auto& s : cocycles) {
        const auto ctx = AlgebraContext::create(s, ring);
        const std::string at = e.name + " order " + std::to_string(s.order()) + " " + ring.name();
        const auto ex = is_simple(ctx, SimplicityMode::Exhaustive);
        const auto st = is_simple(ctx, SimplicityMode::Structural);
        t.check(ex.verdict != Verdict::Unknown && ex.verdict == st.verdict, at + ": verdicts disagree");
        if (st.verdict == Verdict::Simple && (e.name == "R2" || e.name == "R3")) ++positive;
        if (st.verdict == Verdict::NotSimple) {
          t.check(st.proper_ideal && !st.proper_ideal->is_whole() && st.proper_ideal->dimension() > 0 &&
                      is_closed(*st.proper_ideal),
                  at + ": structural certificate is not a proper ideal");
          t.check(st.proper_ideal && *st.proper_ideal == restriction_ideal(ctx, st.invariant_units),
                  at + ": certificate is not the restriction ideal");
          t.check(ex.generator && !ideal_generated(ctx, std::vector<AlgebraElement>{*ex.generator}).is_whole(),
                  at + ": exhaustive generator spans the whole algebra");
        }
        if (fits_cap(static_cast<std::uint64_t>(p), e.groupoid->size(), 1 << 12)) {
          const auto scan = testing::oracle::scan_gfp(*ctx);
          t.check(scan.simple == (ex.verdict == Verdict::Simple), at + ": oracle scan disagrees");
        }
      }
    }
  }
  t.check(positive >= 4, "fewer than four positive pair-groupoid cases");
  const auto ctx = testing::context("R2+R2", "trivial", Ring::prime_field(2));
  const auto st = is_simple(ctx, SimplicityMode::Structural);
  const auto& g = ctx->groupoid();
  const std::vector<Arrow> u{g.arrow("1.(1,1)"), g.arrow("1.(2,2)")};
  t.check(st.verdict == Verdict::NotSimple && st.proper_ideal && *st.proper_ideal == restriction_ideal(ctx, u),
          "R2+R2: certificate is not A(G_U) for the first copy");
}

// 9. Z/2 over GF(3): the trivial cocycle is not simple, s(g,g) = -1 is.
void simplicity_flip(Tally& t) {
  const auto flat = testing::context("Z2", "trivial", Ring::prime_field(3));
  const auto neg = testing::context("Z2", "neg", Ring::prime_field(3));
  const auto& g = neg->groupoid();
  t.check(neg->ring().format(neg->cocycle_value(g.arrow("g"), g.arrow("g"))) == "2", "s(g,g) is not 2 in GF(3)");
  std::map<std::string, testing::frozen::Scan> frozen;
  for (const auto& s : testing::frozen::kScans)
    if (std::string(s.entry) == "Z2") frozen[s.cocycle] = s;
  const auto a = is_simple(flat, SimplicityMode::Exhaustive);
  const auto b = is_simple(neg, SimplicityMode::Exhaustive);
  t.check(a.verdict == Verdict::NotSimple, "trivial cocycle reported simple");
  t.check(b.verdict == Verdict::Simple, "neg cocycle reported not simple");
  t.check(a.generator && *a.generator == enumerate_element(flat, frozen.at("trivial").first_proper),
          "certificate is not the least non-generating element");
  const auto ra = reference::exhaustive_simplicity(flat), rb = reference::exhaustive_simplicity(neg);
  t.check(ra.verdict == a.verdict && rb.verdict == b.verdict, "serial reference disagrees");
  t.check(!frozen.at("trivial").simple && frozen.at("neg").simple, "frozen values changed");
  std::set<std::string> seen;
  for (std::uint64_t i = 0; i < 9; ++i) {
    const auto f = enumerate_element(neg, i);
    seen.insert(neg->ring().format(f[0]) + " " + neg->ring().format(f[1]));
  }
  t.check(seen.size() == 9, "enumeration does not reach all 9 elements");
}

// 10. Gradings: reassembly, A_x A_y in A_xy, graded witnesses.
void gradings(Tally& t) {
  struct Case {
    const char* entry;
    const char* cocycle;
    const char* grading;
    Ring ring;
  };
  Gen gen(1010);
  std::size_t ideals = 0;
  for (const auto& c : {Case{"Z4", "carry", "id", Ring::prime_field(3)}, Case{"Z4", "trivial", "id", Ring::rationals()},
                        Case{"R3", "cob", "diff", Ring::prime_field(3)}, Case{"R3", "trivial", "diff", Ring::prime_field(2)}}) {
    const auto ctx = testing::context(c.entry, c.cocycle, c.ring);
    const auto& gr = catalog_entry(c.entry).grading(c.grading);
    const std::string at = std::string(c.entry) + "/" + c.cocycle + "/" + c.ring.name() + " ";
    const auto degrees = gr.support();
    for (int i = 0; i < 30; ++i) {
      const auto f = gen.element(ctx);
      auto sum = ctx->zero();
      for (const auto& [d, part] : graded_components(f, gr)) {
        sum = sum + part;
        for (Arrow a : part.support()) t.check(gr(a) == d, at + "component is not homogeneous");
      }
      t.check(sum == f, at + "components do not reassemble");
      const auto x = degrees[gen.below(degrees.size())], y = degrees[gen.below(degrees.size())];
      const auto prod = gen.homogeneous(ctx, gr, x) * gen.homogeneous(ctx, gr, y);
      const auto xy = gr.group().multiply(x, y);
      t.check(graded_component(prod, gr, xy) == prod, at + "A_x A_y leaves A_xy");
    }
    for (int i = 0; i < 13; ++i, ++ideals) {
      std::vector<AlgebraElement> gens;
      for (int k = 0; k <= static_cast<int>(gen.below(2)); ++k) {
        auto h = gen.homogeneous(ctx, gr, degrees[gen.below(degrees.size())]);
        while (h.is_zero()) h = gen.homogeneous(ctx, gr, degrees[gen.below(degrees.size())]);
        gens.push_back(h);
      }
      const auto ideal = ideal_generated(ctx, gens);
      t.check(is_graded_ideal(ideal, gr), at + "homogeneous generators give a non-graded ideal");
      const auto v = graded_ck_witness(ideal, gr);
      t.check(!v.empty() && ideal.contains(char_fn(*ctx, v)), at + "graded witness missing");
    }
  }
  t.check(ideals >= 50, "fewer than 50 graded ideals");
}

// 11. dim A = |G| and local units.
void dimension_and_units(Tally& t) {
  Gen gen(1011);
  std::vector<Ring> rings{Ring::prime_field(2), Ring::prime_field(3), Ring::prime_field(5), Ring::rationals(),
                          Ring::cyclotomic(4), Ring::quadratic_field(3)};
  std::size_t contexts = 0;
  for (const auto& e : catalog()) {
    std::vector<TwoCocycle> cocycles{TwoCocycle(e.groupoid, 1)};
    for (const auto& [n, s] : e.cocycles) cocycles.push_back(s);
    for (const auto& ring : rings)
      for (const auto& s : cocycles) {
        std::shared_ptr<const AlgebraContext> ctx;
        try {
          ctx = AlgebraContext::create(s, ring);
        } catch (const Error&) {
          continue;  // ring lacks a unit subgroup of this order
        }
        ++contexts;
        const std::string at = e.name + " order " + std::to_string(s.order()) + " " + ring.name();
        RowSpace span(ring, ctx->dimension());
        for (Arrow a = 0; a < e.groupoid->size(); ++a) span.add(ctx->delta(a).coefficients());
        t.check(ctx->dimension() == e.groupoid->size() && span.rank() == e.groupoid->size(), at + ": dimension");
        for (int i = 0; i < 3; ++i) {
          std::vector<AlgebraElement> fs;
          for (std::uint64_t k = 0; k <= gen.below(3); ++k) fs.push_back(gen.element(ctx, 0.3));
          const auto u = local_unit(*ctx, fs);
          for (const auto& f : fs) t.check(u * f == f && f * u == f, at + ": local unit fails");
        }
      }
  }
  t.check(contexts >= 50, "fewer than 50 contexts");
}

// 12. Command line determinism and round trips on the fixture corpus.
void cli_corpus(Tally& t) {
  const std::string dir = FIXTURE_DIR;
  const std::set<std::string> verbs{"validate", "orbits", "effective", "minimal", "mul", "star", "decompose",
                                    "cohomologous", "twist", "psi", "grade", "ideal", "ck-witness", "graded-witness",
                                    "simple", "catalog"};
  std::set<std::string> seen;
  for (const auto& c : testing::load_corpus(dir)) {
    seen.insert(c.args.at(0));
    const auto a = testing::run_cli(dir, c.args);
    const auto b = testing::run_cli(dir, c.args);
    t.check(a.code == 0, c.text + ": exit " + std::to_string(a.code) + " " + a.err);
    t.check(a.out == b.out && a.err == b.err, c.text + ": output differs between runs");
    for (const auto& [kind, text] : testing::split_output(a.out).blocks)
      t.check(testing::rewrite_block(dir, c, kind, text) == text, c.text + ": " + kind + " does not round-trip");
  }
  for (const auto& v : verbs) t.check(seen.count(v) == 1, "corpus has no '" + v + "' command");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Tally&)>>> criteria{
      {"groupoid axioms on the catalog", axioms},
      {"twisted convolution and involution laws", algebra_laws},
      {"bisection characteristic-function identities", bisection_identities},
      {"cohomology, twist isomorphism and induced cocycles agree", three_way},
      {"global sections and their isomorphisms", sections},
      {"psi isomorphism", psi_iso},
      {"Cuntz-Krieger witnesses", ck_witnesses},
      {"simplicity versus minimality", simplicity},
      {"Z/2 over GF(3) simplicity flip", simplicity_flip},
      {"graded components and graded witnesses", gradings},
      {"module dimension and local units", dimension_and_units},
      {"command line determinism and round trips", cli_corpus}};
  int failed = 0, index = 0;
  const auto start = std::chrono::steady_clock::now();
  for (const auto& [name, run] : criteria) {
    ++index;
    Tally t;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      run(t);
    } catch (const std::exception& e) {
      t.failures.push_back(std::string("exception: ") + e.what());
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
    const bool ok = t.failures.empty();
    failed += !ok;
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << index << ". " << name << " (" << t.checks << " checks, " << ms
              << " ms)\n";
    for (std::size_t i = 0; i < t.failures.size() && i < 5; ++i) std::cout << "       " << t.failures[i] << "\n";
    if (t.failures.size() > 5) std::cout << "       ... " << t.failures.size() - 5 << " more\n";
  }
  const auto total = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size() << " criteria passed in "
            << total << " ms\n";
  return failed == 0 ? 0 : 1;
}
