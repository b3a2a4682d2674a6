#include "csk/numeric.hpp"

#include <boost/integer/common_factor_rt.hpp>

namespace csk {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::NotPairwiseCoprime: return "NotPairwiseCoprime";
    case Errc::NotCoprime: return "NotCoprime";
    case Errc::NonIntegral: return "NonIntegral";
    case Errc::NonRational: return "NonRational";
    case Errc::InexactInput: return "InexactInput";
    case Errc::Syntax: return "SyntaxError";
    case Errc::Constraint: return "ConstraintError";
    case Errc::UnsupportedKnot: return "UnsupportedKnot";
    case Errc::NotFound: return "NotFound";
    case Errc::Internal: return "Internal";
  }
  return "Unknown";
}

Int floor_div(const Int& num, const Int& den) {
  Int q = num / den;
  if ((num % den) != 0 && ((num < 0) != (den < 0))) --q;
  return q;
}

Int pos_mod(const Int& x, const Int& m) {
  Int r = x % m;
  if (r < 0) r += (m < 0 ? -m : m);
  return r;
}

Int mod_inverse(const Int& a, const Int& m) {
  Int old_r = pos_mod(a, m), r = m;
  Int old_s = 1, s = 0;
  while (r != 0) {
    Int q = old_r / r;
    Int tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
  }
  if (old_r != 1) throw Error(Errc::Internal, "mod_inverse: arguments not coprime");
  return pos_mod(old_s, m);
}

bool pairwise_coprime(std::span<const Int> xs) {
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = i + 1; j < xs.size(); ++j)
      if (boost::integer::gcd(xs[i], xs[j]) != 1) return false;
  return true;
}

std::string rational_string(const Rat& r) {
  const Int num = numerator(r);
  const Int den = denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rat parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  auto parse_int = [](std::string_view s) -> Int {
    if (s.empty()) throw Error(Errc::Syntax, "empty integer in rational");
    try {
      return Int(std::string(s));
    } catch (const std::exception&) {
      throw Error(Errc::Syntax, "bad integer in rational: '" + std::string(s) + "'");
    }
  };
  if (slash == std::string_view::npos) return Rat(parse_int(text));
  const Int num = parse_int(text.substr(0, slash));
  const Int den = parse_int(text.substr(slash + 1));
  if (den == 0) throw Error(Errc::Syntax, "zero denominator");
  return Rat(num, den);
}

Real to_real(const Rat& r) {
  return Real(numerator(r)) / Real(denominator(r));
}

Real to_real(const Int& n) { return Real(n); }

}  // namespace csk
