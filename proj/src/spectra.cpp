#include "csk/spectra.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>

namespace csk {

namespace {

const Real& pi() {
  static const Real p = boost::math::constants::pi<Real>();
  return p;
}

Real cot(const Real& x) { return cos(x) / sin(x); }

// sum_{k=1}^{a_i-1} cot(pi a k / a_i^2) cot(pi k / a_i) sin^2(pi w k / a_i),
// with the first argument reduced mod a_i^2 so the angle stays in (0, pi).
// gcd(a/a_i, a_i) = 1 guarantees a k is never 0 mod a_i^2 for 0 < k < a_i.
Real cot_sum(const Int& a, const Int& ai, const Int& w) {
  const Int ai2 = ai * ai;
  Real sum = 0;
  for (Int k = 1; k < ai; ++k) {
    const Int wk = pos_mod(w * k, ai);
    if (wk == 0) continue;
    const Real s = sin(pi() * to_real(Rat(wk, ai)));
    sum += cot(pi() * to_real(Rat(pos_mod(a * k, ai2), ai2))) *
           cot(pi() * to_real(Rat(k, ai))) * s * s;
  }
  return sum;
}

Int round_to_int(const Real& x) {
  return static_cast<Int>(boost::multiprecision::round(x).convert_to<Int>());
}

// The closed formulas below are calibrated against the canonical
// presentation. A component enumerated from an alternative presentation
// carries the same intrinsic angles but regauged labels: replacing b_i by
// b_i + t_i * a_i regauges x_i by h^{-t_i}, which multiplies rho(x_i) by
// rho(h)^{t_i} and so flips l_i to a_i - l_i for odd t_i when the central
// holonomy is -1 (when it is +1 the labels are untouched). This maps the
// labels back to the canonical presentation before e is formed, making
// cs_value and floer_index presentation-independent.
Int canonical_e(const SeifertData& data, const FlatComponent& c) {
  if (c.rot.holonomy_sign == 1)
    return c.e;  // rho(h) = 1: regauging fixes every image

  const SeifertData canon = seifert_data(data.mult);
  Int e = 0;
  for (std::size_t i = 0; i < data.size(); ++i) {
    std::size_t j = 0;
    while (canon.mult[j] != data.mult[i]) ++j;
    Int li = c.rot.l[i];
    const Int t = (data.coeff[i] - canon.coeff[j]) / data.mult[i];
    if (pos_mod(t, 2) == 1) li = data.mult[i] - li;
    e += (canon.a / data.mult[i]) * li;
  }
  return e;
}

}  // namespace

Mod1Rational cs_value(const SeifertData& data, const FlatComponent& c) {
  const Int e = canonical_e(data, c);
  return normalize_mod1(Rat(e * e, 4 * data.a));
}

int floer_index(const SeifertData& data, const FlatComponent& c) {
  const Int e = canonical_e(data, c);
  int m = 0;
  Real sum = 0;
  for (std::size_t i = 0; i < data.size(); ++i) {
    const Int& li = c.rot.l[i];
    if (li == 0 || li == data.mult[i]) continue;
    ++m;
    sum += to_real(Rat(2, data.mult[i])) * cot_sum(data.a, data.mult[i], e);
  }
  const Real total = to_real(Rat(2 * e * e, data.a)) + (3 - m) + sum;
  const Int nearest = round_to_int(total);
  if (abs(total - to_real(nearest)) > Real("1e-6"))
    throw Error(Errc::NonIntegral, "Floer index trig sum is not integral");
  return static_cast<int>(pos_mod(nearest, 8));
}

Rat r_invariant(const std::vector<Int>& mult) {
  if (mult.size() < 3 || !pairwise_coprime(mult))
    throw Error(Errc::NotPairwiseCoprime,
                "R-invariant needs >= 3 pairwise coprime multiplicities");
  for (const Int& m : mult)
    if (m < 2) throw Error(Errc::Constraint, "multiplicities must be >= 2");

  Int a = 1;
  for (const Int& m : mult) a *= m;

  Real x = to_real(Rat(2, a)) - 3 + static_cast<int>(mult.size());
  for (const Int& ai : mult) x += to_real(Rat(2, ai)) * cot_sum(a, ai, 1);

  const Real scaled = x * to_real(a);
  const Int num = round_to_int(scaled);
  if (abs(scaled - to_real(num)) > Real("1e-20"))
    throw Error(Errc::NonRational, "R-invariant reconstruction residual too large");
  return Rat(num, a);
}

Spectrum lens_spectrum(const Int& p, const Int& q) {
  if (p < 2) throw Error(Errc::Constraint, "lens space needs p >= 2");
  if (gcd(p, q) != 1) throw Error(Errc::NotCoprime, "gcd(p,q) must be 1");
  const Int r = pos_mod(-mod_inverse(pos_mod(q, p), p), p);
  std::vector<Mod1Rational> vals;
  for (Int n = 0; 2 * n <= p + 1; ++n) {
    const Int num = -n * n * r;
    vals.push_back(normalize_mod1(Rat(num, p)));
  }
  return Spectrum(std::move(vals), SpectrumKind::Exact);
}

bool square_condition(const Int& p) {
  for (Int s = 2; s <= p - 2; ++s)
    if ((s * s - 1) % p == 0) return false;
  return true;
}

Spectrum connected_sum_spectrum(const Spectrum& s1, const Spectrum& s2) {
  if (!s1.exact() || !s2.exact())
    throw Error(Errc::InexactInput, "connected sum needs exact spectra");
  std::vector<Mod1Rational> vals;
  for (const auto& r1 : s1.values())
    for (const auto& r2 : s2.values())
      vals.push_back(normalize_mod1(r1.value() + r2.value()));
  vals.insert(vals.end(), s1.values().begin(), s1.values().end());
  vals.insert(vals.end(), s2.values().begin(), s2.values().end());
  return Spectrum(std::move(vals), SpectrumKind::Exact);
}

Int l_connected_sum_bound(const Int& l1, const Int& l2) {
  return 4 * l1 * l2 + l1 + l2;
}

Int l_refined_connected_sum_bound(const LRefinedMap& t1, const LRefinedMap& t2,
                                  const Mod1Rational& r, int i) {
  Int cross = 0;
  for (const auto& [k1, v1] : t1)
    for (const auto& [k2, v2] : t2) {
      if (normalize_mod1(k1.first.value() + k2.first.value()) != r) continue;
      if ((k1.second + k2.second) % 8 != i) continue;
      cross += v1 * v2;
    }
  auto at = [](const LRefinedMap& t, const Mod1Rational& rr, int ii) {
    auto it = t.find({rr, ii});
    return it == t.end() ? Int(0) : it->second;
  };
  return 4 * cross + at(t1, r, i) + at(t2, r, i);
}

InvariantRecord seifert_record(const SeifertData& data) {
  InvariantRecord rec;
  rec.data = data;
  rec.components = enumerate_components(data);

  std::vector<Mod1Rational> vals;
  vals.emplace_back();  // trivial class 1
  bool higher = false;
  Int l_total = 0;
  for (const auto& c : rec.components) {
    rec.cs.push_back(cs_value(data, c));
    rec.index.push_back(floer_index(data, c));
    vals.push_back(rec.cs.back());
    switch (c.topology) {
      case Topology::Point: l_total += 1; break;
      case Topology::Sphere2: l_total += 2; break;
      case Topology::HigherDim: higher = true; break;
    }
  }
  rec.spectrum = Spectrum(std::move(vals), SpectrumKind::Exact);
  rec.nu = rec.spectrum.min_nontrivial();
  if (!higher) {
    rec.l_total = l_total;
    rec.casson_abs = l_total / 2;
    for (std::size_t i = 0; i < rec.components.size(); ++i) {
      const auto& c = rec.components[i];
      rec.l_refined[{rec.cs[i], rec.index[i]}] += 1;
      if (c.topology == Topology::Sphere2)
        rec.l_refined[{rec.cs[i], (rec.index[i] + 2) % 8}] += 1;
    }
  }
  rec.r = r_invariant(data.mult);
  return rec;
}

InvariantRecord seifert_record(std::vector<Int> mult) {
  return seifert_record(seifert_data(std::move(mult)));
}

Spectrum seifert_cs_spectrum(std::vector<Int> mult) {
  std::erase(mult, Int(1));
  if (mult.size() < 3)
    return Spectrum({Mod1Rational()}, SpectrumKind::Exact);
  const SeifertData data = seifert_data(std::move(mult));
  std::vector<Mod1Rational> vals;
  vals.emplace_back();
  for (const auto& c : enumerate_components(data))
    vals.push_back(cs_value(data, c));
  return Spectrum(std::move(vals), SpectrumKind::Exact);
}

}  // namespace csk
