// Prints the oracle results frozen in frozen.hpp.
#include <iostream>

#include "support.hpp"

using namespace testing;

int main() {
  for (auto [name, n] : std::vector<std::pair<std::string, std::uint32_t>>{
           {"Z2", 2}, {"R2", 2}, {"Z4", 2}, {"K4", 2}, {"R3", 2}, {"Z3", 3}, {"Z2", 4}}) {
    const auto c = oracle::count_cohomology(*catalog_entry(name).groupoid, n);
    std::cout << "cohomology " << name << " mod " << n << ": cocycles " << c.cocycles << " classes " << c.classes
              << "\n";
  }
  for (const char* coc : {"trivial", "neg"}) {
    const auto& e = catalog_entry("Z2");
    const auto s = std::string(coc) == "trivial" ? TwoCocycle(e.groupoid, 2) : e.cocycle("neg");
    const auto t = build_twist(s);
    std::size_t best = 0;
    for (Arrow a = 0; a < t.total().size(); ++a) best = std::max(best, oracle::arrow_order(t.total(), a));
    std::cout << "twist Z2 " << coc << ": max arrow order " << best << "\n";
  }
  struct Case {
    const char* entry;
    const char* cocycle;
    int p;
  };
  for (auto c : std::vector<Case>{{"Z2", "trivial", 3}, {"Z2", "neg", 3}, {"R2", "trivial", 2}, {"R2", "cob", 3},
                                  {"R2+R2", "trivial", 2}, {"swap", "trivial", 2}, {"R1", "trivial", 2}}) {
    const auto ctx = context(c.entry, c.cocycle, Ring::prime_field(c.p));
    const auto r = oracle::scan_gfp(*ctx);
    std::cout << "scan " << c.entry << " " << c.cocycle << " GF(" << c.p << "): simple " << r.simple << " first "
              << r.first_proper << "\n";
  }
  {
    const auto ctx = context("Z2", "neg", Ring::prime_field(3));
    const auto& g = ctx->groupoid();
    std::vector<Scalar> dg(2, ctx->ring().zero());
    dg[g.arrow("g")] = ctx->ring().one();
    const auto v = oracle::convolve(*ctx, dg, dg);
    std::cout << "Z2 neg GF(3) dg*dg: e " << ctx->ring().format(v[g.arrow("e")]) << " g "
              << ctx->ring().format(v[g.arrow("g")]) << "\n";
  }
}
