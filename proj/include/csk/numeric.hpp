#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

namespace csk {

// Exact integers and rationals everywhere; spectrum denominators like 4a = 840
// must never pass through floating point.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Working precision for the cotangent sums (~100 decimal digits, leaving
// plenty of headroom over the 1e-6 / 1e-20 acceptance tolerances).
using Real = boost::multiprecision::cpp_bin_float_100;

enum class Errc {
  NotPairwiseCoprime,
  NotCoprime,
  NonIntegral,
  NonRational,
  InexactInput,
  Syntax,
  Constraint,
  UnsupportedKnot,
  NotFound,
  Internal,
};

class Error : public std::runtime_error {
 public:
  static constexpr std::size_t no_offset = static_cast<std::size_t>(-1);

  Error(Errc code, const std::string& msg, std::size_t offset = no_offset)
      : std::runtime_error(msg), code_(code), offset_(offset) {}

  Errc code() const { return code_; }
  std::size_t offset() const { return offset_; }

 private:
  Errc code_;
  std::size_t offset_;
};

const char* errc_name(Errc code);

// Floor division / nonnegative remainder for cpp_int.
Int floor_div(const Int& num, const Int& den);
Int pos_mod(const Int& x, const Int& m);

// Inverse of a modulo m (gcd(a, m) = 1 required).
Int mod_inverse(const Int& a, const Int& m);

bool pairwise_coprime(std::span<const Int> xs);

// "p/q" in lowest terms, "p" when the denominator is one.
std::string rational_string(const Rat& r);
Rat parse_rational(std::string_view text);

Real to_real(const Rat& r);
Real to_real(const Int& n);

}  // namespace csk
