#include "csk/knot2.hpp"

#include "csk/spectra.hpp"

#include <cctype>
#include <utility>

namespace csk {

Orientation flip(Orientation o) {
  return o == Orientation::Raw ? Orientation::Mirror : Orientation::Raw;
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  KnotPtr parse() {
    KnotPtr k = expr();
    skip_ws();
    if (pos_ != text_.size())
      throw Error(Errc::Syntax, "trailing input after expression", pos_);
    return k;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != c)
      throw Error(Errc::Syntax, std::string("expected '") + c + "'", pos_);
    ++pos_;
  }

  std::string ident() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           std::isalpha(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (pos_ == start)
      throw Error(Errc::Syntax, "expected a name", start);
    return std::string(text_.substr(start, pos_ - start));
  }

  Int integer() {
    skip_ws();
    const std::size_t start = pos_;
    if (pos_ < text_.size() && text_[pos_] == '-') ++pos_;
    const std::size_t digits = pos_;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (pos_ == digits)
      throw Error(Errc::Syntax, "expected an integer", start);
    return Int(std::string(text_.substr(start, pos_ - start)));
  }

  KnotPtr expr() {
    skip_ws();
    const std::size_t start = pos_;
    const std::string name = ident();
    auto node = std::make_shared<TwoKnotExpr>();
    if (name == "unknot") {
      node->kind = TwoKnotExpr::Kind::Unknot;
    } else if (name == "ribbon") {
      node->kind = TwoKnotExpr::Kind::Ribbon;
    } else if (name == "mirror") {
      node->kind = TwoKnotExpr::Kind::Mirror;
      expect('(');
      node->left = expr();
      expect(')');
    } else if (name == "sum") {
      node->kind = TwoKnotExpr::Kind::ConnSum;
      expect('(');
      node->left = expr();
      expect(',');
      node->right = expr();
      expect(')');
    } else if (name == "tspin") {
      expect('(');
      tspin_base(*node, start);
      expect(',');
      node->m = integer();
      expect(')');
      validate_tspin(*node, start);
    } else {
      throw Error(Errc::Syntax, "unknown constructor '" + name + "'", start);
    }
    return node;
  }

  void tspin_base(TwoKnotExpr& node, std::size_t start) {
    const std::string base = ident();
    if (base == "torus") {
      node.kind = TwoKnotExpr::Kind::TwistSpunTorus;
      expect('(');
      node.p = integer();
      expect(',');
      node.q = integer();
      expect(')');
    } else if (base == "montesinos") {
      node.kind = TwoKnotExpr::Kind::TwistSpunMontesinos;
      expect('(');
      node.p = integer();
      expect(',');
      node.q = integer();
      expect(',');
      node.r = integer();
      expect(')');
    } else if (base == "twobridge") {
      node.kind = TwoKnotExpr::Kind::TwistSpunTwoBridge;
      expect('(');
      node.p = integer();
      expect('/');
      node.q = integer();
      expect(')');
    } else {
      throw Error(Errc::Syntax, "unknown base knot '" + base + "'", start);
    }
  }

  void validate_tspin(const TwoKnotExpr& n, std::size_t start) {
    switch (n.kind) {
      case TwoKnotExpr::Kind::TwistSpunTorus: {
        if (n.p < 2 || n.q < 2)
          throw Error(Errc::Constraint, "torus knot needs p,q >= 2", start);
        if (n.m < 1)
          throw Error(Errc::Constraint, "twist count must be >= 1", start);
        const Int v[] = {n.p, n.q, n.m};
        if (!pairwise_coprime(v))
          throw Error(Errc::Constraint, "p, q, m must be pairwise coprime",
                      start);
        break;
      }
      case TwoKnotExpr::Kind::TwistSpunMontesinos: {
        if (n.p < 1 || n.q < 1 || n.r < 1)
          throw Error(Errc::Constraint, "montesinos parameters must be positive",
                      start);
        const Int v[] = {n.p, n.q, n.r};
        if (!pairwise_coprime(v))
          throw Error(Errc::Constraint, "p, q, r must be pairwise coprime",
                      start);
        if (n.m != 2)
          throw Error(Errc::UnsupportedKnot,
                      "montesinos spins are supported only with twist count 2",
                      start);
        break;
      }
      case TwoKnotExpr::Kind::TwistSpunTwoBridge: {
        if (n.p < 3 || n.p % 2 == 0)
          throw Error(Errc::Constraint, "2-bridge knot needs odd p >= 3", start);
        if (gcd(n.p, n.q) != 1)
          throw Error(Errc::Constraint, "gcd(p,q) must be 1", start);
        if (n.m != 2)
          throw Error(Errc::UnsupportedKnot,
                      "2-bridge spins are supported only with twist count 2",
                      start);
        if (!square_condition(n.p))
          throw Error(Errc::UnsupportedKnot,
                      "p fails the square condition (s^2 = 1 mod p has a "
                      "nontrivial root)",
                      start);
        break;
      }
      default:
        break;
    }
  }
};

bool is_ribbon(const TwoKnotExpr& k) {
  switch (k.kind) {
    case TwoKnotExpr::Kind::Unknot:
    case TwoKnotExpr::Kind::Ribbon:
      return true;
    case TwoKnotExpr::Kind::ConnSum:
      return is_ribbon(*k.left) && is_ribbon(*k.right);
    case TwoKnotExpr::Kind::Mirror:
      return is_ribbon(*k.left);
    default:
      return false;
  }
}

Spectrum trivial_spectrum() {
  return Spectrum({Mod1Rational()}, SpectrumKind::Exact);
}

Spectrum oriented(Spectrum s, Orientation o) {
  return o == Orientation::Raw ? s : mirror_spectrum(s);
}

Spectrum eval(const TwoKnotExpr& k, Orientation o) {
  switch (k.kind) {
    case TwoKnotExpr::Kind::Unknot:
    case TwoKnotExpr::Kind::Ribbon:
      return trivial_spectrum();
    case TwoKnotExpr::Kind::TwistSpunTorus:
      // The m-fold branched cover of the m-twist-spun (p,q) torus knot is
      // -Sigma(p,q,m): the published Im cs of the *mirrored* 5-twist-spun
      // trefoil is {1/120, 49/120, 1}, the Sigma(2,3,5) spectrum itself.
      return oriented(mirror_spectrum(seifert_cs_spectrum({k.p, k.q, k.m})),
                      o);
    case TwoKnotExpr::Kind::TwistSpunMontesinos:
      return oriented(seifert_cs_spectrum({k.p, k.q, k.r}), o);
    case TwoKnotExpr::Kind::TwistSpunTwoBridge:
      return oriented(lens_spectrum(k.p, k.q), o);
    case TwoKnotExpr::Kind::ConnSum:
      if (is_ribbon(k)) return trivial_spectrum();
      return spectrum_union(eval(*k.left, o), eval(*k.right, o));
    case TwoKnotExpr::Kind::Mirror:
      return eval(*k.left, flip(o));
  }
  throw Error(Errc::Internal, "unreachable knot kind");
}

}  // namespace

KnotPtr parse_knot(std::string_view text) { return Parser(text).parse(); }

std::string print_knot(const TwoKnotExpr& k) {
  auto istr = [](const Int& n) { return n.str(); };
  switch (k.kind) {
    case TwoKnotExpr::Kind::Unknot:
      return "unknot";
    case TwoKnotExpr::Kind::Ribbon:
      return "ribbon";
    case TwoKnotExpr::Kind::TwistSpunTorus:
      return "tspin(torus(" + istr(k.p) + "," + istr(k.q) + ")," + istr(k.m) +
             ")";
    case TwoKnotExpr::Kind::TwistSpunMontesinos:
      return "tspin(montesinos(" + istr(k.p) + "," + istr(k.q) + "," +
             istr(k.r) + ")," + istr(k.m) + ")";
    case TwoKnotExpr::Kind::TwistSpunTwoBridge:
      return "tspin(twobridge(" + istr(k.p) + "/" + istr(k.q) + ")," +
             istr(k.m) + ")";
    case TwoKnotExpr::Kind::ConnSum:
      return "sum(" + print_knot(*k.left) + "," + print_knot(*k.right) + ")";
    case TwoKnotExpr::Kind::Mirror:
      return "mirror(" + print_knot(*k.left) + ")";
  }
  throw Error(Errc::Internal, "unreachable knot kind");
}

KnotSpectrumResult knot_spectrum(const TwoKnotExpr& k, const Int& j,
                                 Orientation orientation) {
  if (j < 1) throw Error(Errc::Constraint, "j must be a positive integer");
  KnotSpectrumResult res;
  res.spectrum = eval(k, orientation);
  res.j = j;
  res.q_invariant = res.spectrum.values().front();
  res.q_is_exact = res.spectrum.exact();
  res.irreducible_rep_lower_bound = 2 * Int(res.spectrum.interior_count());
  return res;
}

bool check_j_monotonicity(const TwoKnotExpr& k, const Int& j, const Int& m,
                          Orientation orientation) {
  const Spectrum sj = knot_spectrum(k, j, orientation).spectrum;
  const Spectrum smj = knot_spectrum(k, m * j, orientation).spectrum;
  return spectrum_subset(sj, smj);
}

}  // namespace csk
