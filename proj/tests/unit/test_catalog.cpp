#include <doctest.h>

#include <set>

#include "support.hpp"

using namespace steinberg;

TEST_CASE("catalog entries validate and match their recorded facts") {
  std::set<std::string> names;
  for (const auto& e : catalog()) {
    CAPTURE(e.name);
    names.insert(e.name);
    const auto& g = *e.groupoid;
    CHECK(validate_groupoid(g).empty());
    CHECK(is_effective(g) == e.facts.effective);
    CHECK(is_minimal(g) == e.facts.minimal);
    CHECK(orbits(g).size() == e.facts.orbit_count);
    CHECK(g.size() == e.facts.dimension);
    for (const auto& [n, s] : e.cocycles) CHECK(validate_cocycle(s).empty());
    for (const auto& [n, c] : e.gradings) CHECK(validate_grading(c).empty());
  }
  CHECK(names.size() == catalog().size());
  for (const char* n : {"R1", "R2", "R3", "R4", "Z2", "Z3", "Z4", "K4", "S3", "Z8", "D4", "Q8", "swap", "swap_fix",
                        "Z3_rot", "R2+R2", "R2+Z2"})
    CHECK(names.count(n) == 1);
  CHECK_THROWS_AS(catalog_entry("R9"), Error);
  CHECK_THROWS_AS(catalog_entry("Z2").cocycle("nope"), Error);
}

TEST_CASE("group tables") {
  for (const auto& t : {cyclic_group(1), cyclic_group(5), klein_group(), symmetric_group3(), dihedral_group4(), quaternion_group()}) {
    CHECK_NOTHROW(validate_group_table(t));
    for (std::uint32_t a = 0; a < t.order(); ++a) CHECK(t(a, t.inverse(a)) == t.identity());
  }
  const auto k = klein_group();
  for (std::uint32_t a = 0; a < 4; ++a) CHECK(k(a, a) == k.identity());
  CHECK(validate_groupoid(group_groupoid(k)).empty());
  GroupTable broken = cyclic_group(3);
  broken.mul[4] = 0;
  CHECK_THROWS_AS(validate_group_table(broken), Error);
  const auto s3 = symmetric_group3();
  bool commutative = true;
  for (std::uint32_t a = 0; a < 6; ++a)
    for (std::uint32_t b = 0; b < 6; ++b) commutative = commutative && s3(a, b) == s3(b, a);
  CHECK_FALSE(commutative);
}

TEST_CASE("action groupoids and unions") {
  const auto& swap = *catalog_entry("swap").groupoid;
  CHECK(swap.size() == 4);
  CHECK(is_effective(swap));
  CHECK(is_minimal(swap));
  const auto& fix = *catalog_entry("swap_fix").groupoid;
  CHECK_FALSE(is_effective(fix));
  CHECK_FALSE(is_minimal(fix));
  const auto r3 = pair_groupoid(3);
  CHECK(is_effective(r3));
  CHECK(is_minimal(r3));
  const auto mixed = disjoint_union(pair_groupoid(2), group_groupoid(cyclic_group(2)));
  CHECK(validate_groupoid(mixed).empty());
  CHECK_FALSE(is_effective(mixed));
  const auto twice = disjoint_union(pair_groupoid(2), pair_groupoid(2));
  CHECK(twice.find("1.(1,2)").has_value());
  CHECK(twice.find("2.(1,2)").has_value());
  CHECK_THROWS_AS(action_groupoid(cyclic_group(2), {"1", "2"}, {{0, 1}, {0, 0}}), Error);
}

TEST_CASE("cocycle enumeration") {
  const auto z2 = catalog_entry("Z2").groupoid;
  const auto all = enumerate_cocycles(z2, 2);
  REQUIRE(all.size() == 2);
  CHECK(all[0].is_trivial());
  CHECK(all[1] == catalog_entry("Z2").cocycle("neg"));
  const auto r2 = catalog_entry("R2").groupoid;
  for (const auto& s : enumerate_cocycles(r2, 2)) CHECK(check_cohomologous(s, TwoCocycle(r2, 2)).has_value());
  for (const char* name : {"Z4", "K4", "Z3"}) {
    const auto g = catalog_entry(name).groupoid;
    const auto list = enumerate_cocycles(g, 2);
    const std::set<std::vector<Exponent>> seen = [&] {
      std::set<std::vector<Exponent>> out;
      for (const auto& s : list) {
        std::vector<Exponent> row;
        for_each_composable_pair(*g, [&](Arrow a, Arrow b) { row.push_back(s(a, b)); });
        out.insert(row);
      }
      return out;
    }();
    auto key = [&](const TwoCocycle& s) {
      std::vector<Exponent> row;
      for_each_composable_pair(*g, [&](Arrow a, Arrow b) { row.push_back(s(a, b)); });
      return row;
    };
    for (const auto& s : list) {
      CHECK(seen.count(key(invert_cocycle(s))) == 1);
      for (const auto& t : list) CHECK(seen.count(key(multiply_cocycles(s, t))) == 1);
    }
  }
  CHECK_THROWS_AS(enumerate_cocycles(catalog_entry("S3").groupoid, 2), Error);
}

TEST_CASE("ring catalog involutions invert small unit subgroups") {
  for (const auto& rc : ring_catalog()) {
    CAPTURE(rc.ring.name());
    CHECK(rc.involution.supported_by(rc.ring));
    for (std::uint32_t n = 1; n <= 12; ++n) {
      std::optional<UnitSubgroup> t;
      try {
        t = UnitSubgroup::canonical(rc.ring, n);
      } catch (const Error&) {
        continue;
      }
      if (n <= 2) CHECK(check_t_inverse_involution(rc.ring, rc.involution, *t));
    }
  }
}
