#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "csk/seifert.hpp"
#include "su2_oracle.hpp"

#include <set>

using namespace csk;
using csk_test::Signature;

namespace {

std::set<Signature> library_signatures(const SeifertData& data) {
  std::set<Signature> out;
  for (const auto& c : enumerate_components(data)) {
    std::vector<int> l;
    for (const auto& v : c.rot.l) l.push_back(v.convert_to<int>());
    out.insert({l, c.rot.holonomy_sign});
  }
  return out;
}

void compare(std::vector<Int> mult, unsigned seed) {
  const SeifertData data = seifert_data(std::move(mult));
  const std::set<Signature> lib = library_signatures(data);
  const std::set<Signature> oracle = csk_test::oracle_signatures(data, seed);
  CHECK(lib == oracle);
  CHECK_FALSE(lib.empty());
}

}  // namespace

TEST_CASE("numerical SU(2) solver agrees with the interval rule: (2,3,5)") {
  compare({Int(2), Int(3), Int(5)}, 101);
}

TEST_CASE("numerical SU(2) solver agrees with the interval rule: (2,3,7)") {
  compare({Int(2), Int(3), Int(7)}, 202);
}

TEST_CASE("numerical SU(2) solver agrees with the interval rule: (2,5,7)") {
  compare({Int(2), Int(5), Int(7)}, 303);
}

TEST_CASE("numerical SU(2) solver agrees with the interval rule: (3,4,5)") {
  compare({Int(3), Int(4), Int(5)}, 404);
}

TEST_CASE("solver rejects central and abelian-only tuples") {
  std::mt19937 rng(7);
  // l = (0, 2, 2): X1 central, the rest must commute; no irreducible rep.
  CHECK_FALSE(csk_test::oracle_has_irreducible({2, 3, 5}, {0, 2, 2}, 1, rng));
  // l = (1, 2, 0): X3 = 1 central, so X1 X2 = -1 would be needed, but the
  // product scalar only reaches [-sqrt(3)/2, sqrt(3)/2].
  CHECK_FALSE(csk_test::oracle_has_irreducible({2, 3, 5}, {1, 2, 0}, -1, rng));
  // The Poincare tuples succeed.
  CHECK(csk_test::oracle_has_irreducible({2, 3, 5}, {1, 2, 2}, -1, rng));
  CHECK(csk_test::oracle_has_irreducible({2, 3, 5}, {1, 2, 4}, -1, rng));
}
