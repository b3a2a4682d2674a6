#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "csk/spectra.hpp"

#include <map>
#include <random>
#include <vector>

using namespace csk;

namespace {

std::vector<Int> ints(std::initializer_list<long> xs) {
  std::vector<Int> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

Spectrum make_spec(std::vector<Rat> vals) {
  std::vector<Mod1Rational> m;
  for (const auto& v : vals) m.push_back(normalize_mod1(v));
  return Spectrum(std::move(m), SpectrumKind::Exact);
}

// Published component data for Sigma(2,3,5,7): rotation tuple, 840 * cs
// value, Floer index mod 8 (Fintushel-Stern 1990).
struct GoldenRow {
  long l1, l2, l3, l4, num;
  int ind;
};
const GoldenRow kGolden2357[] = {
    {1, 0, 2, 2, 681, 7}, {1, 0, 2, 4, 561, 5}, {1, 0, 2, 6, 81, 1},
    {1, 0, 4, 4, 729, 7}, {1, 2, 0, 2, 625, 7}, {1, 2, 0, 4, 505, 5},
    {1, 2, 2, 0, 721, 7}, {1, 2, 4, 0, 49, 1},  {0, 2, 2, 2, 16, 1},
    {0, 2, 2, 4, 736, 7}, {0, 2, 2, 6, 256, 3}, {0, 2, 4, 2, 184, 3},
    {2, 2, 2, 2, 436, 5}, {2, 2, 2, 4, 316, 3}, {2, 2, 4, 4, 484, 5},
    {2, 2, 4, 6, 4, 1},   {1, 2, 2, 2, 121, 1}, {1, 2, 2, 4, 1, 7},
    {1, 2, 2, 6, 361, 3}, {1, 2, 4, 2, 289, 3}, {1, 2, 4, 4, 169, 1},
    {1, 2, 4, 6, 529, 5},
};

}  // namespace

TEST_CASE("cs values and indices match the published (2,3,5,7) table") {
  const SeifertData d = seifert_data(ints({2, 3, 5, 7}));
  const auto comps = enumerate_components(d);
  REQUIRE(comps.size() == 22);
  int matched = 0;
  for (const auto& g : kGolden2357) {
    const std::vector<Int> rot = ints({g.l1, g.l2, g.l3, g.l4});
    for (const auto& c : comps) {
      if (c.rot.l != rot) continue;
      ++matched;
      const Mod1Rational cs = cs_value(d, c);
      CHECK(cs.value() == normalize_mod1(Rat(g.num, 840)).value());
      CHECK(floer_index(d, c) == g.ind);
    }
  }
  CHECK(matched == 22);
}

TEST_CASE("cs invariance under e -> e + 2a") {
  const SeifertData d = seifert_data(ints({2, 3, 5, 7}));
  for (const auto& c : enumerate_components(d)) {
    FlatComponent shifted = c;
    shifted.e = c.e + 2 * d.a;
    CHECK(cs_value(d, shifted) == cs_value(d, c));
    shifted.e = c.e - 2 * d.a;
    CHECK(cs_value(d, shifted) == cs_value(d, c));
  }
}

TEST_CASE("Poincare sphere record") {
  const InvariantRecord rec = seifert_record(ints({2, 3, 5}));
  REQUIRE(rec.components.size() == 2);
  CHECK(rec.spectrum == make_spec({Rat(1, 120), Rat(49, 120), Rat(1)}));
  CHECK(rec.nu.value() == Rat(1, 120));
  REQUIRE(rec.l_total.has_value());
  CHECK(*rec.l_total == 2);
  CHECK(*rec.casson_abs == 1);
  CHECK(rec.r == Rat(1));
}

TEST_CASE("Sigma(2,3,7) record") {
  const InvariantRecord rec = seifert_record(ints({2, 3, 7}));
  CHECK(rec.spectrum == make_spec({Rat(25, 168), Rat(121, 168), Rat(1)}));
  CHECK(rec.nu.value() == Rat(25, 168));
  CHECK(*rec.l_total == 2);
  CHECK(*rec.casson_abs == 1);
}

TEST_CASE("R-invariant values") {
  CHECK(r_invariant(ints({2, 3, 5, 7})) == Rat(1));
  CHECK(r_invariant(ints({2, 3, 5})) == Rat(1));
  CHECK(r_invariant(ints({2, 3, 7})) == Rat(-1));
}

TEST_CASE("spectrum invariance under permutation of multiplicities") {
  std::mt19937 rng(42);
  const long primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23};
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<long> pool(std::begin(primes), std::end(primes));
    std::shuffle(pool.begin(), pool.end(), rng);
    std::vector<Int> mult = ints({pool[0], pool[1], pool[2]});
    const Spectrum base = seifert_record(mult).spectrum;
    std::vector<Int> perm = mult;
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(seifert_record(perm).spectrum == base);
  }
}

TEST_CASE("lens space spectra") {
  CHECK(lens_spectrum(3, 1) == make_spec({Rat(1, 3), Rat(1)}));
  CHECK(lens_spectrum(5, 1) == make_spec({Rat(1, 5), Rat(4, 5), Rat(1)}));
  CHECK(lens_spectrum(2, 1) == make_spec({Rat(1, 2), Rat(1)}));
  // L(p,q) and L(p,q') agree when q' = q mod p.
  CHECK(lens_spectrum(7, 3) == lens_spectrum(7, 10));
  CHECK_THROWS_AS((void)lens_spectrum(4, 2), Error);  // gcd(p,q) != 1
}

TEST_CASE("square condition") {
  CHECK(square_condition(3));
  CHECK(square_condition(5));
  CHECK(square_condition(9));
  CHECK_FALSE(square_condition(15));  // 4^2 = 16 = 1 mod 15
  CHECK_FALSE(square_condition(8));   // 3^2 = 9 = 1 mod 8
}

TEST_CASE("connected sum spectrum") {
  const Spectrum a = make_spec({Rat(1, 120), Rat(49, 120), Rat(1)});
  const Spectrum sum = connected_sum_spectrum(a, a);
  CHECK(sum.exact());
  CHECK(sum.contains(normalize_mod1(Rat(1, 60))));    // 1/120 + 1/120
  CHECK(sum.contains(normalize_mod1(Rat(50, 120))));  // 1/120 + 49/120
  CHECK(sum.contains(normalize_mod1(Rat(98, 120))));
  CHECK(sum.contains(normalize_mod1(Rat(1, 120))));   // summand survives
  CHECK(spectrum_subset(a, sum));

  const Spectrum lower =
      Spectrum({normalize_mod1(Rat(1, 3))}, SpectrumKind::LowerSet);
  CHECK_THROWS_AS((void)connected_sum_spectrum(a, lower), Error);
}

TEST_CASE("l bounds for connected sums") {
  CHECK(l_connected_sum_bound(2, 2) == 20);
  CHECK(l_connected_sum_bound(1, 3) == 16);

  // Refined bound: 4 * sum of cross terms landing on (r, i) plus diagonals.
  LRefinedMap t1, t2;
  const Mod1Rational r1 = normalize_mod1(Rat(1, 120));
  const Mod1Rational r49 = normalize_mod1(Rat(49, 120));
  t1[{r1, 1}] = 1;
  t1[{r49, 5}] = 1;
  t2 = t1;
  // Target (50/120, 6): only the cross pairs 1/120+49/120 with 1+5 = 6.
  const Mod1Rational target = normalize_mod1(Rat(50, 120));
  CHECK(l_refined_connected_sum_bound(t1, t2, target, 6) == 8);
  // Target (1/120, 1): no cross pair sums there; diagonals contribute 1 + 1.
  CHECK(l_refined_connected_sum_bound(t1, t2, r1, 1) == 2);
  // Empty target.
  CHECK(l_refined_connected_sum_bound(t1, t2, normalize_mod1(Rat(1, 7)), 0) ==
        0);
}

TEST_CASE("seifert_cs_spectrum drops unit fibers and degenerates to S^3") {
  CHECK(seifert_cs_spectrum(ints({2, 3, 5})) ==
        make_spec({Rat(1, 120), Rat(49, 120), Rat(1)}));
  CHECK(seifert_cs_spectrum(ints({1, 2, 3, 5})) ==
        seifert_cs_spectrum(ints({2, 3, 5})));
  CHECK(seifert_cs_spectrum(ints({1, 2, 3})) == make_spec({Rat(1)}));
}

TEST_CASE("l_refined for Poincare sphere") {
  const InvariantRecord rec = seifert_record(ints({2, 3, 5}));
  REQUIRE(rec.l_refined.size() == 2);
  CHECK(rec.l_refined.at({normalize_mod1(Rat(1, 120)), 1}) == 1);
  CHECK(rec.l_refined.at({normalize_mod1(Rat(49, 120)), 5}) == 1);
}

TEST_CASE("l_refined counts S^2 components twice, two indices apart") {
  const InvariantRecord rec = seifert_record(ints({2, 3, 5, 7}));
  Int total = 0;
  for (const auto& [key, cnt] : rec.l_refined) total += cnt;
  CHECK(total == *rec.l_total);
  CHECK(*rec.l_total == 28);
}
