#pragma once

#include "csk/ratmod1.hpp"

#include <memory>
#include <string>
#include <string_view>

namespace csk {

/// Evaluation convention for the base-case spectra: `Raw` reports them as
/// the formulas compute them (e^2/4a for twist-spun torus and Montesinos
/// knots, the lens formula for 2-bridge knots); `Mirror` reports the
/// mirrored sets. Published examples use both conventions, so the choice is
/// a caller flag rather than a baked-in orientation claim.
enum class Orientation { Raw, Mirror };

Orientation flip(Orientation o);

/// 2-knot expression:
///   expr := "unknot" | "ribbon" | "tspin" "(" base "," int ")"
///         | "sum" "(" expr "," expr ")" | "mirror" "(" expr ")"
///   base := "torus" "(" int "," int ")" | "montesinos" "(" int "," int "," int ")"
///         | "twobridge" "(" int "/" int ")"
struct TwoKnotExpr {
  enum class Kind {
    Unknot,
    Ribbon,
    TwistSpunTorus,      // K(T(p,q), m), pairwise coprime, p,q >= 2, m >= 1
    TwistSpunMontesinos, // 2-twist-spun M(p,q,r), pairwise coprime positive
    TwistSpunTwoBridge,  // 2-twist-spun 2-bridge K(p/q), p odd >= 3
    ConnSum,
    Mirror,
  };

  Kind kind = Kind::Unknot;
  Int p = 0, q = 0, r = 0, m = 0;
  std::shared_ptr<const TwoKnotExpr> left, right;  // ConnSum; Mirror uses left
};

using KnotPtr = std::shared_ptr<const TwoKnotExpr>;

/// Parses the grammar above; validates all parameter constraints.
/// Errors carry the byte offset of the offending token.
KnotPtr parse_knot(std::string_view text);

/// Canonical printer; parse_knot(print_knot(k)) reproduces k.
std::string print_knot(const TwoKnotExpr& k);

struct KnotSpectrumResult {
  Spectrum spectrum;  // contains 1
  Int j = 1;
  Mod1Rational q_invariant;  // min(spectrum)
  bool q_is_exact = true;    // Exact spectrum: Q^j_K itself; LowerSet: upper bound
  Int irreducible_rep_lower_bound = 0;  // 2 * #(spectrum ∩ (0,1))
};

/// Im cs_{K,j}. Identical for every j >= 1 on the implemented constructors;
/// j is validated and echoed. ConnSum yields a LowerSet unless both sides are
/// ribbon-like, in which case the ribbon rule gives Exact {1}.
KnotSpectrumResult knot_spectrum(const TwoKnotExpr& k, const Int& j,
                                 Orientation orientation = Orientation::Raw);

/// True iff spectrum(K, j) ⊆ spectrum(K, m*j).
bool check_j_monotonicity(const TwoKnotExpr& k, const Int& j, const Int& m,
                          Orientation orientation = Orientation::Raw);

}  // namespace csk
