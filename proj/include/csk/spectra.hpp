#pragma once

#include "csk/ratmod1.hpp"
#include "csk/seifert.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace csk {

/// Chern-Simons value of a component: e^2/(4a) mod 1 in (0,1], exact.
Mod1Rational cs_value(const SeifertData& data, const FlatComponent& c);

/// Floer index mod 8 of a component, via the cotangent-sum formula
///   2e^2/a + 3 - m + sum_{i: 0<l_i<a_i} (2/a_i) sum_{k=1}^{a_i-1}
///     cot(pi a k / a_i^2) cot(pi k / a_i) sin^2(pi e k / a_i),
/// evaluated at ~100-digit precision. The sign convention is the unique one
/// of the four candidates matching the published index table for (2,3,5,7);
/// a calibration test re-verifies it on every run.
int floer_index(const SeifertData& data, const FlatComponent& c);

/// Fintushel-Stern R-invariant
///   R(a_1,...,a_n) = 2/a - 3 + n + sum_i (2/a_i) sum_{k=1}^{a_i-1}
///     cot(pi a k / a_i^2) cot(pi k / a_i) sin^2(pi k / a_i),
/// reconstructed as an exact rational with denominator dividing a.
Rat r_invariant(const std::vector<Int>& mult);

/// Chern-Simons spectrum of the lens space L(p,q):
/// { -n^2 r / p mod 1 : 0 <= n <= ceil(p/2) } with q r = -1 mod p. Exact.
Spectrum lens_spectrum(const Int& p, const Int& q);

/// True iff no s in {2,...,p-2} satisfies p | s^2 - 1.
bool square_condition(const Int& p);

/// { r1 + r2 mod 1 } union S1 union S2, Exact. Both inputs must be Exact.
Spectrum connected_sum_spectrum(const Spectrum& s1, const Spectrum& s2);

/// 4*l1*l2 + l1 + l2.
Int l_connected_sum_bound(const Int& l1, const Int& l2);

/// Perturbed critical point counts keyed by (cs value, Floer index mod 8).
using LRefinedMap = std::map<std::pair<Mod1Rational, int>, Int>;

/// 4 * sum_{r = r1+r2 mod 1, i = i1+i2 mod 8} T1(r1,i1) T2(r2,i2)
///   + T1(r,i) + T2(r,i), missing keys counting 0.
Int l_refined_connected_sum_bound(const LRefinedMap& t1, const LRefinedMap& t2,
                                  const Mod1Rational& r, int i);

struct InvariantRecord {
  SeifertData data;
  std::vector<FlatComponent> components;
  std::vector<Mod1Rational> cs;  // aligned with components
  std::vector<int> index;        // aligned with components
  Spectrum spectrum;             // {cs values} ∪ {1}, Exact
  Mod1Rational nu;               // min of spectrum excluding 1 when nonempty
  std::optional<Int> l_total;    // 1 per point + 2 per S^2; unset if HigherDim
  LRefinedMap l_refined;         // empty when l_total is unset
  std::optional<Int> casson_abs; // l_total / 2
  Rat r;                         // R-invariant
};

InvariantRecord seifert_record(const SeifertData& data);
InvariantRecord seifert_record(std::vector<Int> mult);

/// {cs values of all components} ∪ {1}, Exact. Multiplicity-1 entries are
/// dropped; fewer than three genuine fibers gives S^3, spectrum {1}.
Spectrum seifert_cs_spectrum(std::vector<Int> mult);

}  // namespace csk
