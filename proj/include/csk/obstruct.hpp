#pragma once

#include "csk/knot2.hpp"
#include "csk/spectra.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace csk {

/// A value in (0, infinity]; used for the tabulated r_s and Gamma invariants.
struct ExtendedRat {
  std::optional<Rat> value;  // unset means +infinity

  bool infinite() const { return !value.has_value(); }
  static ExtendedRat inf() { return {}; }
  static ExtendedRat finite(Rat v) { return {std::move(v)}; }

  friend bool operator==(const ExtendedRat& a, const ExtendedRat& b) {
    return a.value == b.value;
  }
};

/// Oriented 3-manifold descriptor:
///   y := [int "*"] atom | "sum" "(" y { "," y } ")"
///   atom := "brieskorn" "(" ints ")" | "mirror-brieskorn" "(" ints ")"
struct YDescriptor {
  enum class Kind { Brieskorn, MirrorBrieskorn, ConnSum };
  Kind kind = Kind::Brieskorn;
  std::vector<Int> mult;               // leaf kinds
  std::vector<YDescriptor> summands;   // ConnSum

  friend bool operator==(const YDescriptor&, const YDescriptor&) = default;
};

YDescriptor parse_y(std::string_view text);
std::string print_y(const YDescriptor& y);

/// Flattened multiset of leaves, canonically sorted; two descriptors denote
/// the same manifold iff their canonical leaf lists agree.
std::vector<YDescriptor> canonical_leaves(const YDescriptor& y);

/// Chern-Simons spectrum of Y. The raw Seifert formula e^2/4a is reported
/// for mirror-brieskorn leaves and mirrored for brieskorn leaves, matching
/// the published table of critical values for -Sigma(2,3,5,7); connected
/// sums fold with connected_sum_spectrum. Always Exact.
Spectrum y_spectrum(const YDescriptor& y);

/// Tabulated instanton invariants of Y. All built-in families have r_s
/// constant in s, so a single value `r_all_s` is stored.
struct KnownInvariantEntry {
  std::optional<ExtendedRat> r;             // tabulated r_s(Y) value
  bool r_valid_for_all_s = false;           // false: known at s = 0 only
  std::map<Int, ExtendedRat> gamma;         // Gamma_Y(k)
  bool gamma_tail_infinite = false;         // Gamma_Y(k) = inf beyond the map
  std::optional<Int> l_s;                   // l^s_Y (constant in s)
  std::map<Int, Int> l_k;                   // l^k_Y
  bool provisional = false;
  std::string source;
};

/// Curated invariant table: built-in family rules (toggled by name) plus
/// explicit JSON entries, which take precedence. Every finite tabulated
/// value is checked against the computed spectrum at load time.
class InvariantTable {
 public:
  static const InvariantTable& builtin();
  static InvariantTable from_json_text(const std::string& text);
  static InvariantTable from_file(const std::string& path);

  std::optional<KnownInvariantEntry> lookup(const YDescriptor& y) const;

  bool family_enabled(const std::string& name) const;

 private:
  struct ExplicitEntry {
    std::vector<YDescriptor> key;  // canonical leaves
    KnownInvariantEntry entry;
  };
  std::vector<ExplicitEntry> entries_;
  std::map<std::string, bool> families_;

  std::optional<KnownInvariantEntry> family_lookup(const YDescriptor& y) const;
  void check_consistency() const;
};

enum class VerdictStatus { Obstructed, NoObstruction, Unknown };

const char* verdict_name(VerdictStatus s);

struct Verdict {
  VerdictStatus status = VerdictStatus::Unknown;
  std::vector<std::string> reasoning;  // cited rule applications / gaps
};

/// Tests whether the tabulated r_s (or Gamma(1)) value of Y lies in
/// F = Im cs_{K,j} (j-independent here). Membership under either orientation
/// flag of K is NoObstruction; exclusion under both with F exact is
/// Obstructed; anything else is Unknown.
Verdict check_seifert_hypersurface(const InvariantTable& table,
                                   const YDescriptor& y, const TwoKnotExpr& k);

/// Obstructed means: no 2-knot with Seifert hypersurface Y is ribbon.
/// Requires a finite tabulated r_s or Gamma value in (0,1) and a finite
/// l-invariant.
Verdict check_ribbon_obstruction(const InvariantTable& table,
                                 const YDescriptor& y);

/// Obstructed iff the representation space is connected for some j and
/// R(a) > 0, which certifies h(Sigma(a)) > 0. Y must be a brieskorn leaf.
Verdict check_embedding_negative_definite(const YDescriptor& y,
                                          bool rep_space_connected_for_some_j);

/// When the table certifies that the finite r_s/Gamma values exhaust the
/// spectrum interior with all l-invariants equal to 1, the spectrum of every
/// 2-knot with Seifert hypersurface Y is forced to this exact set.
std::optional<Spectrum> rigid_spectrum(const InvariantTable& table,
                                       const YDescriptor& y);

/// When the table certifies r_0(Y) = nu(Y) and l^0_Y = 1, Q^j_K is forced to
/// r_0(Y) for every j and every K with Seifert hypersurface Y.
std::optional<Mod1Rational> q_rigidity(const InvariantTable& table,
                                       const YDescriptor& y);

/// min(r1 + s2, r2 + s1) with infinity absorbing; the connected-sum lower
/// bound for r_s (Nozaki, Sato, Taniguchi 2019).
ExtendedRat rs_connected_sum_lower_bound(const ExtendedRat& r1,
                                         const ExtendedRat& r2, const Rat& s1,
                                         const Rat& s2);

enum class MappingClass { Tau, Iota };

/// Spectrum of the mapping torus of Sigma(p,q,r) under tau or iota; equal to
/// the Seifert spectrum for both maps and every j.
Spectrum mapping_torus_spectrum(const Int& p, const Int& q, const Int& r,
                                MappingClass map, const Int& j);

}  // namespace csk
