#include "csk/ratmod1.hpp"

#include <algorithm>

namespace csk {

Mod1Rational Mod1Rational::normalized(const Rat& x) {
  const Int num = numerator(x);
  const Int den = denominator(x);
  Int rem = pos_mod(num, den);
  if (rem == 0) return Mod1Rational(Rat(1));
  return Mod1Rational(Rat(rem, den));
}

Mod1Rational normalize_mod1(const Rat& x) { return Mod1Rational::normalized(x); }

Mod1Rational mirror_value(const Mod1Rational& x) {
  if (x.is_one()) return x;
  return Mod1Rational::normalized(Rat(1) - x.value());
}

Spectrum::Spectrum(std::vector<Mod1Rational> values, SpectrumKind kind)
    : values_(std::move(values)), kind_(kind) {
  std::sort(values_.begin(), values_.end());
  values_.erase(std::unique(values_.begin(), values_.end()), values_.end());
}

bool Spectrum::contains(const Mod1Rational& x) const {
  return std::binary_search(values_.begin(), values_.end(), x);
}

std::size_t Spectrum::interior_count() const {
  std::size_t n = 0;
  for (const auto& v : values_)
    if (!v.is_one()) ++n;
  return n;
}

Mod1Rational Spectrum::min_nontrivial() const {
  for (const auto& v : values_)
    if (!v.is_one()) return v;
  return Mod1Rational();
}

Spectrum mirror_spectrum(const Spectrum& s) {
  std::vector<Mod1Rational> out;
  out.reserve(s.size() + 1);
  for (const auto& v : s.values())
    if (!v.is_one()) out.push_back(mirror_value(v));
  out.push_back(Mod1Rational());
  return Spectrum(std::move(out), s.kind());
}

Spectrum spectrum_union(const Spectrum& s1, const Spectrum& s2) {
  return spectrum_union(s1, s2, SpectrumKind::LowerSet);
}

Spectrum spectrum_union(const Spectrum& s1, const Spectrum& s2,
                        SpectrumKind certified) {
  std::vector<Mod1Rational> out = s1.values();
  out.insert(out.end(), s2.values().begin(), s2.values().end());
  return Spectrum(std::move(out), certified);
}

bool spectrum_subset(const Spectrum& sub, const Spectrum& super) {
  return std::all_of(sub.values().begin(), sub.values().end(),
                     [&](const Mod1Rational& v) { return super.contains(v); });
}

}  // namespace csk
