#include "csk/seifert.hpp"

#include <algorithm>
#include <cstdint>
#include <iostream>
#include <map>
#include <optional>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace csk {

namespace {

void validate_multiplicities(const std::vector<Int>& mult) {
  if (mult.size() < 3)
    throw Error(Errc::Constraint, "need at least 3 multiplicities");
  for (const Int& m : mult)
    if (m < 2) throw Error(Errc::Constraint, "multiplicities must be >= 2");
  if (!pairwise_coprime(mult))
    throw Error(Errc::NotPairwiseCoprime, "multiplicities not pairwise coprime");
}

Int product(const std::vector<Int>& xs) {
  Int p = 1;
  for (const Int& x : xs) p *= x;
  return p;
}

}  // namespace

SeifertData make_seifert_data(std::vector<Int> mult, Int b,
                              std::vector<Int> coeff) {
  validate_multiplicities(mult);
  if (coeff.size() != mult.size())
    throw Error(Errc::Constraint, "coefficient count mismatch");
  const Int a = product(mult);

  Int lhs = 0;
  for (std::size_t i = 0; i < mult.size(); ++i) lhs += (a / mult[i]) * coeff[i];
  if (lhs != 1 + a * b)
    throw Error(Errc::Constraint, "Seifert relation a*sum(b_k/a_k) = 1 + a*b fails");

  bool any_even = false;
  for (std::size_t i = 0; i < mult.size(); ++i)
    if (mult[i] % 2 == 0) {
      any_even = true;
      if (i != 0)
        throw Error(Errc::Constraint, "even multiplicity must be indexed first");
    }
  if (any_even) {
    for (std::size_t j = 1; j < coeff.size(); ++j)
      if (coeff[j] % 2 != 0)
        throw Error(Errc::Constraint,
                    "b_j must be even for j != 1 when a_1 is even");
  }

  SeifertData d;
  d.mult = std::move(mult);
  d.coeff = std::move(coeff);
  d.b = std::move(b);
  d.a = a;
  return d;
}

SeifertData seifert_data(std::vector<Int> mult) {
  validate_multiplicities(mult);

  // Canonical order: the even multiplicity (unique, if present) first, the
  // rest ascending.
  std::sort(mult.begin(), mult.end());
  for (std::size_t i = 0; i < mult.size(); ++i)
    if (mult[i] % 2 == 0) {
      std::rotate(mult.begin(), mult.begin() + i, mult.begin() + i + 1);
      break;
    }
  const bool any_even = mult[0] % 2 == 0;

  const std::size_t n = mult.size();
  const Int a = product(mult);

  // b_i is pinned mod a_i by (a/a_i) * b_i = 1 (mod a_i); the parity
  // normalization halves the choices further. Collect the admissible values
  // in [-a_i, a_i] per index.
  std::vector<std::vector<Int>> candidates(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Int ai = mult[i];
    const Int ci = (a / ai) % ai;
    const Int residue = mod_inverse(ci, ai);
    const bool need_even = any_even && i != 0;
    for (Int v = residue - 2 * ai; v <= ai; v += ai) {
      if (v < -ai) continue;
      if (need_even && v % 2 != 0) continue;
      candidates[i].push_back(v);
    }
    if (candidates[i].empty())
      throw Error(Errc::Internal, "no even normalization found");  // cannot occur
  }

  struct Candidate {
    Int b;
    std::vector<Int> coeff;
  };
  std::optional<Candidate> best;
  auto better = [](const Candidate& x, const Candidate& y) {
    const Int ax = abs(x.b), ay = abs(y.b);
    if (ax != ay) return ax < ay;
    if (x.b != y.b) return x.b < y.b;
    return x.coeff < y.coeff;
  };

  std::vector<std::size_t> idx(n, 0);
  while (true) {
    Int lhs = 0;
    std::vector<Int> coeff(n);
    for (std::size_t i = 0; i < n; ++i) {
      coeff[i] = candidates[i][idx[i]];
      lhs += (a / mult[i]) * coeff[i];
    }
    const Int num = lhs - 1;
    if (num % a != 0)
      throw Error(Errc::Internal, "Seifert relation residue not divisible by a");
    Candidate cand{num / a, std::move(coeff)};
    if (!best || better(cand, *best)) best = std::move(cand);

    std::size_t k = 0;
    while (k < n && ++idx[k] == candidates[k].size()) idx[k++] = 0;
    if (k == n) break;
  }

  return make_seifert_data(std::move(mult), best->b, std::move(best->coeff));
}

AngleInterval product_angle_interval(const Rat& t1, const Rat& t2) {
  const Rat diff = t1 >= t2 ? t1 - t2 : t2 - t1;
  const Rat sum = t1 + t2;
  return {diff, std::min(sum, Rat(2) - sum)};
}

AngleInterval product_angle_interval(const AngleInterval& first, const Rat& t2) {
  Rat lo;
  if (first.lo <= t2 && t2 <= first.hi) {
    lo = 0;
  } else {
    const Rat d1 = first.lo >= t2 ? first.lo - t2 : t2 - first.lo;
    const Rat d2 = first.hi >= t2 ? first.hi - t2 : t2 - first.hi;
    lo = std::min(d1, d2);
  }
  // x |-> min(x + t2, 2 - x - t2) peaks with value 1 at x = 1 - t2.
  const Rat peak = Rat(1) - t2;
  Rat hi;
  if (first.lo <= peak && peak <= first.hi) {
    hi = 1;
  } else if (first.hi < peak) {
    hi = first.hi + t2;
  } else {
    hi = Rat(2) - first.lo - t2;
  }
  return {lo, hi};
}

RepStatus exists_representation(const SeifertData& data,
                                const std::vector<Int>& l, int holonomy_sign) {
  const std::size_t n = data.size();
  if (l.size() != n) throw Error(Errc::Constraint, "rotation tuple size mismatch");
  if (holonomy_sign != 1 && holonomy_sign != -1)
    throw Error(Errc::Constraint, "holonomy sign must be +1 or -1");
  // The generator images must satisfy X_1 ... X_n = rho(h)^b. Generators
  // with l_i = 0 map to I and impose no constraint; generators with
  // l_i = a_i map to -I. Both central targets fold into a single sign that
  // flips the angle the nontrivial product must realize.
  std::vector<Rat> theta;
  bool flip = false;
  for (std::size_t i = 0; i < n; ++i) {
    if (l[i] < 0 || l[i] > data.mult[i])
      throw Error(Errc::Constraint, "rotation number out of range");
    if (l[i] == data.mult[i])
      flip = !flip;
    else if (l[i] != 0)
      theta.emplace_back(l[i], data.mult[i]);
  }
  if (holonomy_sign == -1 && data.b % 2 != 0) flip = !flip;  // rho(h)^b = -1
  if (theta.size() < 3) return RepStatus::None;

  AngleInterval reach{theta[0], theta[0]};
  for (std::size_t i = 1; i + 1 < theta.size(); ++i)
    reach = product_angle_interval(reach, theta[i]);

  const Rat t = flip ? Rat(1) - theta.back() : theta.back();
  if (reach.lo < t && t < reach.hi) return RepStatus::Irreducible;
  if (t == reach.lo || t == reach.hi) return RepStatus::Degenerate;
  return RepStatus::None;
}

RepStatus exists_representation(const SeifertData& data,
                                const std::vector<Int>& l) {
  // The parity rule (-1)^{l_i} = sign^{b_i} usually pins rho(h): an odd l_i
  // forces sign = -1; with every l_i even an odd b_i forces sign = +1. Only
  // when l and all b_i are even are both central holonomies admissible.
  bool any_l_odd = false;
  for (const Int& v : l)
    if (v % 2 != 0) any_l_odd = true;
  if (any_l_odd) return exists_representation(data, l, -1);

  bool any_b_odd = false;
  for (const Int& v : data.coeff)
    if (v % 2 != 0) any_b_odd = true;
  if (any_b_odd) return exists_representation(data, l, 1);

  const RepStatus plus = exists_representation(data, l, 1);
  const RepStatus minus = exists_representation(data, l, -1);
  return std::max(plus, minus);
}

const char* topology_name(Topology t) {
  switch (t) {
    case Topology::Point: return "point";
    case Topology::Sphere2: return "sphere2";
    case Topology::HigherDim: return "higher";
  }
  return "unknown";
}

namespace {

FlatComponent make_component(const SeifertData& data, std::vector<Int> l,
                             int sign) {
  FlatComponent c;
  c.rot.holonomy_sign = sign;
  c.e = 0;
  int m = 0;
  for (std::size_t i = 0; i < l.size(); ++i) {
    c.e += (data.a / data.mult[i]) * l[i];
    if (l[i] != 0 && l[i] != data.mult[i]) ++m;
  }
  c.rot.l = std::move(l);
  c.dimension = 2 * m - 6;
  c.topology = c.dimension == 0   ? Topology::Point
               : c.dimension == 2 ? Topology::Sphere2
                                  : Topology::HigherDim;
  return c;
}

std::vector<FlatComponent> enumerate_impl(const SeifertData& data,
                                          bool parallel) {
  const std::size_t n = data.size();
  std::vector<FlatComponent> found;

  for (int sign : {+1, -1}) {
    // Parity rule: (-1)^{l_i} = sign^{b_i}.
    std::vector<std::vector<Int>> cand(n);
    for (std::size_t i = 0; i < n; ++i) {
      const bool want_odd = sign == -1 && data.coeff[i] % 2 != 0;
      for (Int v = want_odd ? 1 : 0; v <= data.mult[i]; v += 2)
        cand[i].push_back(v);
    }

    std::int64_t total = 1;
    for (const auto& c : cand) total *= static_cast<std::int64_t>(c.size());

    auto decode = [&](std::int64_t idx) {
      std::vector<Int> l(n);
      for (std::size_t i = 0; i < n; ++i) {
        l[i] = cand[i][static_cast<std::size_t>(
            idx % static_cast<std::int64_t>(cand[i].size()))];
        idx /= static_cast<std::int64_t>(cand[i].size());
      }
      return l;
    };

    std::vector<std::optional<FlatComponent>> slot(
        static_cast<std::size_t>(total));
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 64) if (parallel)
#endif
    for (std::int64_t idx = 0; idx < total; ++idx) {
      std::vector<Int> l = decode(idx);
      if (exists_representation(data, l, sign) == RepStatus::Irreducible)
        slot[static_cast<std::size_t>(idx)] =
            make_component(data, std::move(l), sign);
    }
    for (auto& s : slot)
      if (s) found.push_back(std::move(*s));
  }

  // A tuple can legitimately appear under both holonomy signs when every
  // b_i is even (the two signs are then distinct flat connections), so the
  // dedupe key includes the sign; same-sign duplicates cannot occur, but are
  // deduped and logged defensively.
  std::map<std::pair<int, std::vector<Int>>, std::size_t> seen;
  std::vector<FlatComponent> unique;
  unique.reserve(found.size());
  for (auto& c : found) {
    auto [it, inserted] =
        seen.emplace(std::make_pair(c.rot.holonomy_sign, c.rot.l),
                     unique.size());
    if (inserted) {
      unique.push_back(std::move(c));
    } else {
      std::cerr << "warning: duplicate rotation tuple within a holonomy branch\n";
    }
  }

  const Int four_a = 4 * data.a;
  std::sort(unique.begin(), unique.end(),
            [&](const FlatComponent& x, const FlatComponent& y) {
              const Int ex = pos_mod(x.e, four_a), ey = pos_mod(y.e, four_a);
              if (ex != ey) return ex < ey;
              if (x.rot.l != y.rot.l) return x.rot.l < y.rot.l;
              return x.rot.holonomy_sign > y.rot.holonomy_sign;
            });
  return unique;
}

}  // namespace

std::vector<FlatComponent> enumerate_components(const SeifertData& data) {
  return enumerate_impl(data, true);
}

std::vector<FlatComponent> enumerate_components_serial(const SeifertData& data) {
  return enumerate_impl(data, false);
}

}  // namespace csk
