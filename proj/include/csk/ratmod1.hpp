#pragma once

#include "csk/numeric.hpp"

#include <compare>
#include <vector>

namespace csk {

/// A reduced rational in the half-open-above interval (0, 1]; the class of
/// 0 mod 1 is represented by 1.
class Mod1Rational {
 public:
  Mod1Rational() : v_(1) {}

  static Mod1Rational normalized(const Rat& x);

  const Rat& value() const { return v_; }
  bool is_one() const { return v_ == 1; }

  std::string str() const { return rational_string(v_); }

  friend bool operator==(const Mod1Rational& a, const Mod1Rational& b) {
    return a.v_ == b.v_;
  }
  friend bool operator<(const Mod1Rational& a, const Mod1Rational& b) {
    return a.v_ < b.v_;
  }
  friend bool operator<=(const Mod1Rational& a, const Mod1Rational& b) {
    return a.v_ <= b.v_;
  }
  friend bool operator!=(const Mod1Rational& a, const Mod1Rational& b) {
    return !(a == b);
  }

 private:
  explicit Mod1Rational(Rat v) : v_(std::move(v)) {}
  Rat v_;
};

Mod1Rational normalize_mod1(const Rat& x);

/// 1-x on (0,1), fixing 1.
Mod1Rational mirror_value(const Mod1Rational& x);

enum class SpectrumKind { Exact, LowerSet };

/// A finite set of Chern-Simons values in (0,1], canonically sorted.
/// Exact: the set equals the mathematical image. LowerSet: every member is
/// certified to belong but the set may be incomplete.
class Spectrum {
 public:
  Spectrum() : kind_(SpectrumKind::Exact) {}
  Spectrum(std::vector<Mod1Rational> values, SpectrumKind kind);

  const std::vector<Mod1Rational>& values() const { return values_; }
  SpectrumKind kind() const { return kind_; }
  bool exact() const { return kind_ == SpectrumKind::Exact; }

  bool contains(const Mod1Rational& x) const;
  std::size_t size() const { return values_.size(); }

  /// Members strictly inside (0,1), i.e. excluding the trivial class.
  std::size_t interior_count() const;

  /// Minimal element excluding 1 when one exists, else 1.
  Mod1Rational min_nontrivial() const;

  friend bool operator==(const Spectrum& a, const Spectrum& b) {
    return a.kind_ == b.kind_ && a.values_ == b.values_;
  }

 private:
  std::vector<Mod1Rational> values_;
  SpectrumKind kind_;
};

/// {1-r : r in S ∩ (0,1)} ∪ {1}; kind preserved.
Spectrum mirror_spectrum(const Spectrum& s);

/// Set union. Kind is Exact only when the caller certifies it via an
/// exactness theorem; plain unions are LowerSet.
Spectrum spectrum_union(const Spectrum& s1, const Spectrum& s2);
Spectrum spectrum_union(const Spectrum& s1, const Spectrum& s2,
                        SpectrumKind certified);

/// True iff every member of `sub` belongs to `super`.
bool spectrum_subset(const Spectrum& sub, const Spectrum& super);

}  // namespace csk
