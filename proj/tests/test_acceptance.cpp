// Acceptance gate. Runs the ten acceptance criteria and prints one
// pass/fail line per criterion. With an argument N, runs criterion N only
// and exits nonzero on failure.
//
// Criterion 3's "all indices even" clause is expected to fail: the index
// convention is calibrated against the published (2,3,5,7) table, and under
// that convention the Sigma(2,3,6k-1) components land in odd gradings
// (e.g. the known Floer gradings {1,5} of the Poincare sphere). The line is
// reported red on purpose; everything else in criterion 3 is verified.

#include "csk/knot2.hpp"
#include "csk/obstruct.hpp"
#include "csk/spectra.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "su2_oracle.hpp"

using namespace csk;

namespace {

struct Check {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

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

// ---- criterion 1: published (2,3,5,7) table reproduction ----

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

Check criterion1() {
  Check c;
  const auto t0 = std::chrono::steady_clock::now();
  const SeifertData d = seifert_data(ints({2, 3, 5, 7}));
  const auto comps = enumerate_components(d);
  c.require(comps.size() == 22,
            "expected 22 components, got " + std::to_string(comps.size()));
  int matched = 0;
  for (const auto& g : kGolden2357) {
    const std::vector<Int> rot = ints({g.l1, g.l2, g.l3, g.l4});
    for (const auto& comp : comps) {
      if (comp.rot.l != rot) continue;
      ++matched;
      const Rat want = Rat(g.num, 840);
      const Mod1Rational cs = cs_value(d, comp);
      c.require(cs.value() == want, "cs mismatch at (" + rot[0].str() + "," +
                                        rot[1].str() + "," + rot[2].str() +
                                        "," + rot[3].str() + ")");
      c.require(floer_index(d, comp) == g.ind,
                "index mismatch at numerator " + std::to_string(g.num));
    }
  }
  c.require(matched == 22, "rotation tuples missing from the enumeration");
  c.require(seconds_since(t0) < 1.0, "runtime >= 1 s");
  return c;
}

Check criterion2() {
  Check c;
  const auto t0 = std::chrono::steady_clock::now();
  const InvariantRecord rec = seifert_record(ints({2, 3, 5, 7}));
  int points = 0, spheres = 0;
  for (const auto& comp : rec.components) {
    if (comp.topology == Topology::Point) ++points;
    if (comp.topology == Topology::Sphere2) ++spheres;
  }
  c.require(points == 16, "point components: " + std::to_string(points));
  c.require(spheres == 6, "S^2 components: " + std::to_string(spheres));
  c.require(rec.l_total && *rec.l_total == 28, "l_total != 28");
  c.require(rec.casson_abs && *rec.casson_abs == 14, "|lambda| != 14");
  c.require(seconds_since(t0) < 1.0, "runtime >= 1 s");
  return c;
}

Check criterion3() {
  Check c;
  const auto t0 = std::chrono::steady_clock::now();
  for (long k = 1; k <= 5; ++k) {
    const long q = 6 * k - 1;
    const SeifertData d = seifert_data(ints({2, 3, q}));
    const InvariantRecord rec = seifert_record(d);
    const std::string tag = " (k=" + std::to_string(k) + ")";

    // Components exactly {(1,2,l3) : l3 in {k,...,5k-1} and even}.
    std::set<std::vector<Int>> want;
    for (long l3 = k; l3 <= 5 * k - 1; ++l3)
      if (l3 % 2 == 0) want.insert(ints({1, 2, l3}));
    std::set<std::vector<Int>> got;
    for (const auto& comp : rec.components) got.insert(comp.rot.l);
    c.require(got == want, "component set mismatch" + tag);

    // Spectrum {(12(3k^2 - k + 3 l^2) + 1) / (24(6k-1)) mod 1} over the same
    // l range, plus the trivial class.
    std::vector<Rat> formula{Rat(1)};
    for (long l = k; l <= 5 * k - 1; ++l)
      if (l % 2 == 0)
        formula.emplace_back(12 * (3 * k * k - k + 3 * l * l) + 1, 24 * q);
    c.require(rec.spectrum == make_spec(formula), "spectrum formula" + tag);

    c.require(rec.l_total && *rec.l_total == 2 * k, "l_total != 2k" + tag);

    // Expected red: the calibrated convention yields odd indices here.
    for (int ind : rec.index)
      c.require(ind % 2 == 0, "odd index " + std::to_string(ind) + tag);
  }
  c.require(seconds_since(t0) < 1.0, "runtime >= 1 s");
  return c;
}

Check criterion4() {
  Check c;
  const KnotPtr k = parse_knot("mirror(tspin(torus(2,3),5))");
  const auto res = knot_spectrum(*k, 1, Orientation::Raw);
  c.require(res.spectrum == make_spec({Rat(1, 120), Rat(49, 120), Rat(1)}),
            "mirror(tspin(torus(2,3),5)) raw spectrum");
  c.require(res.spectrum.exact(), "spectrum not exact");
  const auto ribbon = knot_spectrum(*parse_knot("ribbon"), 1);
  c.require(ribbon.spectrum == make_spec({Rat(1)}) && ribbon.spectrum.exact(),
            "ribbon spectrum");
  return c;
}

Check criterion5() {
  Check c;
  c.require(lens_spectrum(3, 1) == make_spec({Rat(1, 3), Rat(1)}),
            "L(3,1) raw");
  c.require(mirror_spectrum(lens_spectrum(3, 1)) ==
                make_spec({Rat(2, 3), Rat(1)}),
            "L(3,1) mirrored");
  c.require(lens_spectrum(5, 1) == make_spec({Rat(1, 5), Rat(4, 5), Rat(1)}),
            "L(5,1) raw");
  c.require(square_condition(3), "square_condition(3)");
  c.require(!square_condition(15), "square_condition(15)");
  return c;
}

Check criterion6() {
  Check c;
  const InvariantTable& table = InvariantTable::builtin();
  const KnotPtr bridge = parse_knot("tspin(twobridge(3/1),2)");
  for (long k = 2; k <= 5; ++k) {
    const YDescriptor y = parse_y("mirror-brieskorn(2,3," +
                                  std::to_string(6 * k - 1) + ")");
    const Verdict v = check_seifert_hypersurface(table, y, *bridge);
    c.require(v.status == VerdictStatus::Obstructed,
              "k=" + std::to_string(k) + " not obstructed");
  }
  const Verdict v = check_seifert_hypersurface(
      table, parse_y("mirror-brieskorn(2,3,5)"),
      *parse_knot("mirror(tspin(torus(2,3),5))"));
  c.require(v.status == VerdictStatus::NoObstruction,
            "Poincare sphere vs mirrored 5-spin not NoObstruction");
  return c;
}

Check criterion7() {
  Check c;
  const InvariantTable& table = InvariantTable::builtin();
  const auto rigid = rigid_spectrum(table, parse_y("mirror-brieskorn(2,3,5)"));
  c.require(rigid.has_value() &&
                *rigid == make_spec({Rat(1, 120), Rat(49, 120), Rat(1)}),
            "rigid_spectrum(mirror-brieskorn(2,3,5))");
  for (int n = 1; n <= 4; ++n) {
    const auto q = q_rigidity(
        table, parse_y(std::to_string(n) + "*mirror-brieskorn(2,3,5,7)"));
    c.require(q.has_value() && q->value() == Rat(1, 840),
              "q_rigidity n=" + std::to_string(n));
  }
  return c;
}

Check criterion8() {
  Check c;
  std::mt19937 rng(8848);

  // Mirror involution on 1000 random spectra.
  {
    std::uniform_int_distribution<int> size_d(0, 6), num_d(-50, 50),
        den_d(1, 40);
    for (int trial = 0; trial < 1000; ++trial) {
      std::vector<Mod1Rational> vals{Mod1Rational()};
      const int n = size_d(rng);
      for (int i = 0; i < n; ++i)
        vals.push_back(normalize_mod1(Rat(num_d(rng), den_d(rng))));
      const Spectrum s(std::move(vals), SpectrumKind::Exact);
      if (mirror_spectrum(mirror_spectrum(s)) != s) {
        c.require(false, "mirror involution failed");
        break;
      }
    }
  }

  // Union algebra laws.
  {
    const Spectrum a = make_spec({Rat(1, 3), Rat(1)});
    const Spectrum b = make_spec({Rat(1, 2), Rat(2, 7), Rat(1)});
    const Spectrum d = make_spec({Rat(5, 9), Rat(1)});
    auto u = [](const Spectrum& x, const Spectrum& y) {
      return spectrum_union(x, y, SpectrumKind::Exact);
    };
    c.require(u(a, b) == u(b, a), "union commutativity");
    c.require(u(u(a, b), d) == u(a, u(b, d)), "union associativity");
    c.require(u(a, a) == a, "union idempotence");
    c.require(spectrum_subset(a, u(a, b)) && spectrum_subset(b, u(a, b)),
              "union upper bound");
  }

  // j-monotonicity (here: equality) for every implemented constructor.
  for (const char* text :
       {"unknot", "ribbon", "tspin(torus(2,3),5)",
        "tspin(montesinos(3,5,7),2)", "tspin(twobridge(5/1),2)",
        "mirror(tspin(torus(2,3),5))",
        "sum(tspin(torus(2,3),5),tspin(torus(2,5),3))"}) {
    const KnotPtr k = parse_knot(text);
    const Spectrum s1 = knot_spectrum(*k, 1).spectrum;
    for (long j = 1; j <= 12; ++j) {
      for (long m = 1; m <= 12; ++m)
        if (!check_j_monotonicity(*k, j, m)) {
          c.require(false, std::string("j-monotonicity: ") + text);
          break;
        }
      if (knot_spectrum(*k, Int(j)).spectrum != s1) {
        c.require(false, std::string("j-equality: ") + text);
        break;
      }
    }
  }

  // cs invariance under e -> e + 2a on all enumerated components.
  for (auto mult : {ints({2, 3, 5}), ints({2, 3, 7}), ints({3, 5, 7}),
                    ints({2, 3, 5, 7})}) {
    const SeifertData d = seifert_data(mult);
    for (const auto& comp : enumerate_components(d)) {
      FlatComponent shifted = comp;
      shifted.e = comp.e + 2 * d.a;
      if (cs_value(d, shifted) != cs_value(d, comp))
        c.require(false, "cs not invariant under e -> e + 2a");
    }
  }

  // Spectrum invariance under permutation of multiplicities and under
  // alternative valid presentations, for 20 random coprime triples.
  {
    const long primes[] = {2, 3, 5, 7, 11, 13, 17, 19};
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<long> pool(std::begin(primes), std::end(primes));
      std::shuffle(pool.begin(), pool.end(), rng);
      std::vector<Int> mult = ints({pool[0], pool[1], pool[2]});

      const Spectrum base = seifert_record(mult).spectrum;

      std::vector<Int> perm = mult;
      std::shuffle(perm.begin(), perm.end(), rng);
      if (seifert_record(perm).spectrum != base) {
        c.require(false, "permutation invariance (trial " +
                             std::to_string(trial) + ")");
        continue;
      }

      // Alternative presentation: b_1 += a_1 regauges the first generator
      // (legal for any parity class), compensated by b += 1.
      const SeifertData canon = seifert_data(mult);
      std::vector<Int> coeff = canon.coeff;
      coeff[0] += canon.mult[0];
      const SeifertData alt =
          make_seifert_data(canon.mult, canon.b + 1, coeff);
      if (seifert_record(alt).spectrum != base)
        c.require(false, "presentation invariance (trial " +
                             std::to_string(trial) + ")");
    }
  }
  return c;
}

Check criterion9() {
  Check c;
  const auto t0 = std::chrono::steady_clock::now();
  unsigned seed = 90;
  for (auto mult : {ints({2, 3, 5}), ints({2, 3, 7}), ints({2, 5, 7}),
                    ints({3, 4, 5})}) {
    const SeifertData d = seifert_data(mult);
    std::set<csk_test::Signature> lib;
    for (const auto& comp : enumerate_components(d)) {
      std::vector<int> l;
      for (const auto& v : comp.rot.l) l.push_back(v.convert_to<int>());
      lib.insert({l, comp.rot.holonomy_sign});
    }
    const auto oracle = csk_test::oracle_signatures(d, seed += 7);
    std::string tag = "(";
    for (std::size_t i = 0; i < d.mult.size(); ++i)
      tag += (i ? "," : "") + d.mult[i].str();
    tag += ")";
    c.require(lib == oracle, "oracle disagreement for " + tag);
  }
  c.require(seconds_since(t0) < 60.0, "runtime >= 60 s");
  return c;
}

Check criterion10() {
  Check c;
  const auto t0 = std::chrono::steady_clock::now();
  c.require(r_invariant(ints({2, 3, 5, 7})) == Rat(1), "R(2,3,5,7) != 1");
  c.require(r_invariant(ints({2, 3, 5})) > 0, "R(2,3,5) <= 0");
  c.require(seconds_since(t0) < 1.0, "runtime >= 1 s");
  return c;
}

struct Criterion {
  int id;
  const char* name;
  std::function<Check()> run;
  bool expected_red;
};

const Criterion kCriteria[] = {
    {1, "published (2,3,5,7) component table reproduced exactly", criterion1,
     false},
    {2, "(2,3,5,7) census: 16 points + 6 spheres, l_total 28, |lambda| 14",
     criterion2, false},
    {3, "Sigma(2,3,6k-1) family k=1..5: components, spectrum formula, "
        "l_total, all indices even", criterion3, true},
    {4, "2-knot values: mirrored 5-twist-spun trefoil and ribbon", criterion4,
     false},
    {5, "lens formula L(3,1), L(5,1) and the square condition", criterion5,
     false},
    {6, "obstruction suite: hypersurface verdicts", criterion6, false},
    {7, "rigidity: forced spectrum and forced Q invariant", criterion7, false},
    {8, "property suites: involution, union laws, j-monotonicity, cs and "
        "presentation invariance", criterion8, false},
    {9, "numerical SU(2) oracle equivalence on four Brieskorn triples",
     criterion9, false},
    {10, "R-invariant exact values", criterion10, false},
};

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  if (argc > 1) only = std::atoi(argv[1]);

  bool all_ok = true;
  for (const auto& cr : kCriteria) {
    if (only != 0 && cr.id != only) continue;
    Check result;
    try {
      result = cr.run();
    } catch (const std::exception& e) {
      result.ok = false;
      result.detail = std::string("exception: ") + e.what();
    }
    std::cout << "criterion " << cr.id << " ["
              << (result.ok ? "PASS" : "FAIL") << "] " << cr.name;
    if (!result.ok) {
      std::cout << " -- " << result.detail;
      if (cr.expected_red)
        std::cout << " (expected red: see docs/acceptance.md)";
    }
    std::cout << "\n";
    all_ok = all_ok && result.ok;
  }
  return all_ok ? 0 : 1;
}
