#pragma once

#include "csk/numeric.hpp"

#include <vector>

namespace csk {

/// Seifert invariant (b, (a_1,b_1), ..., (a_n,b_n)) of the homology sphere
/// Sigma(a_1,...,a_n), satisfying a * sum(b_k/a_k) = 1 + a*b with
/// a = a_1 * ... * a_n. When some multiplicity is even it is indexed first
/// and all other b_j are even.
struct SeifertData {
  std::vector<Int> mult;   // a_i, pairwise coprime, each >= 2
  std::vector<Int> coeff;  // b_i
  Int b = 0;
  Int a = 0;  // product of the multiplicities

  std::size_t size() const { return mult.size(); }
};

/// Canonical presentation for the given multiplicities (even one first,
/// remaining ascending; coefficients chosen deterministically: smallest |b|,
/// then smallest b, then lexicographically smallest (b_1,...,b_n) among the
/// normalized solutions with |b_i| <= a_i).
SeifertData seifert_data(std::vector<Int> mult);

/// Builds a presentation from explicit coefficients, validating all
/// invariants. Multiplicity order is kept as given (the even one, if any,
/// must already be first).
SeifertData make_seifert_data(std::vector<Int> mult, Int b,
                              std::vector<Int> coeff);

struct AngleInterval {
  Rat lo, hi;  // in units of pi, subset of [0,1]
};

/// Rotation angles (in pi units) achievable by a product of two SU(2)
/// rotations with angles pi*t1 and pi*t2:
/// [|t1-t2|, min(t1+t2, 2-t1-t2)].
AngleInterval product_angle_interval(const Rat& t1, const Rat& t2);

/// Image of a whole interval of first factors under the product rule.
AngleInterval product_angle_interval(const AngleInterval& first, const Rat& t2);

enum class RepStatus { None, Degenerate, Irreducible };

/// Decides whether the rotation tuple (l_1,...,l_n), 0 <= l_i <= a_i,
/// carries an SU(2) representation: folds the angle-product interval over
/// theta_i = l_i/a_i for i < n and tests theta_n against the reachable set.
RepStatus exists_representation(const SeifertData& data,
                                const std::vector<Int>& l);

/// Same test with the central holonomy rho(h) fixed explicitly. Needed when
/// every b_i is even: an all-even tuple is then compatible with both signs,
/// and the two choices are distinct flat connections.
RepStatus exists_representation(const SeifertData& data,
                                const std::vector<Int>& l, int holonomy_sign);

struct RotationNumbers {
  std::vector<Int> l;     // 0 <= l_i <= a_i
  int holonomy_sign = 1;  // value of the central holonomy rho(h)
};

enum class Topology { Point, Sphere2, HigherDim };

const char* topology_name(Topology t);

/// One connected component of irreducible SU(2) flat connections.
struct FlatComponent {
  RotationNumbers rot;
  Int e = 0;          // sum_i (a/a_i) * l_i
  int dimension = 0;  // 2m - 6 with m = #{i : 0 < l_i < a_i}
  Topology topology = Topology::Point;
};

/// All components, sorted by (e mod 4a, rotation tuple). Parallelized with
/// OpenMP when available; the result is identical to the serial reference.
std::vector<FlatComponent> enumerate_components(const SeifertData& data);

/// Serial reference enumeration, kept for testing and benchmarking.
std::vector<FlatComponent> enumerate_components_serial(const SeifertData& data);

}  // namespace csk
