#include "csk/obstruct.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <tuple>

namespace csk {

extern const char* const kDefaultInvariantTableJson;

namespace {

void validate_leaf_mult(const std::vector<Int>& mult, std::size_t offset) {
  if (mult.size() < 3)
    throw Error(Errc::Constraint, "descriptor needs at least 3 multiplicities",
                offset);
  for (const Int& m : mult)
    if (m < 2)
      throw Error(Errc::Constraint, "multiplicities must be >= 2", offset);
  if (!pairwise_coprime(mult))
    throw Error(Errc::NotPairwiseCoprime, "multiplicities not pairwise coprime",
                offset);
}

class YParser {
 public:
  explicit YParser(std::string_view text) : text_(text) {}

  YDescriptor parse() {
    YDescriptor y = element();
    skip_ws();
    if (pos_ != text_.size())
      throw Error(Errc::Syntax, "trailing input after descriptor", pos_);
    return y;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != c)
      throw Error(Errc::Syntax, std::string("expected '") + c + "'", pos_);
    ++pos_;
  }

  Int integer() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (pos_ == start) throw Error(Errc::Syntax, "expected an integer", start);
    return Int(std::string(text_.substr(start, pos_ - start)));
  }

  std::string name() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalpha(static_cast<unsigned char>(text_[pos_])) ||
            text_[pos_] == '-'))
      ++pos_;
    if (pos_ == start) throw Error(Errc::Syntax, "expected a name", start);
    return std::string(text_.substr(start, pos_ - start));
  }

  // element := [int "*"] base
  YDescriptor element() {
    skip_ws();
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      const std::size_t start = pos_;
      const Int count = integer();
      expect('*');
      if (count < 1)
        throw Error(Errc::Constraint, "repetition count must be >= 1", start);
      YDescriptor inner = base();
      if (count == 1) return inner;
      YDescriptor sum;
      sum.kind = YDescriptor::Kind::ConnSum;
      for (Int i = 0; i < count; ++i) sum.summands.push_back(inner);
      return sum;
    }
    return base();
  }

  YDescriptor base() {
    skip_ws();
    const std::size_t start = pos_;
    const std::string id = name();
    YDescriptor y;
    if (id == "sum") {
      y.kind = YDescriptor::Kind::ConnSum;
      expect('(');
      y.summands.push_back(element());
      while (peek() == ',') {
        expect(',');
        y.summands.push_back(element());
      }
      expect(')');
      if (y.summands.size() < 2)
        throw Error(Errc::Syntax, "sum needs at least 2 summands", start);
      return y;
    }
    if (id == "brieskorn") {
      y.kind = YDescriptor::Kind::Brieskorn;
    } else if (id == "mirror-brieskorn") {
      y.kind = YDescriptor::Kind::MirrorBrieskorn;
    } else {
      throw Error(Errc::Syntax, "unknown descriptor '" + id + "'", start);
    }
    expect('(');
    y.mult.push_back(integer());
    while (peek() == ',') {
      expect(',');
      y.mult.push_back(integer());
    }
    expect(')');
    validate_leaf_mult(y.mult, start);
    return y;
  }
};

bool leaf_less(const YDescriptor& a, const YDescriptor& b) {
  return std::tie(a.kind, a.mult) < std::tie(b.kind, b.mult);
}

void flatten(const YDescriptor& y, std::vector<YDescriptor>& out) {
  if (y.kind == YDescriptor::Kind::ConnSum) {
    for (const auto& s : y.summands) flatten(s, out);
  } else {
    YDescriptor leaf = y;
    std::sort(leaf.mult.begin(), leaf.mult.end());
    out.push_back(std::move(leaf));
  }
}

std::string print_leaf(const YDescriptor& y) {
  std::string s = y.kind == YDescriptor::Kind::Brieskorn ? "brieskorn("
                                                         : "mirror-brieskorn(";
  for (std::size_t i = 0; i < y.mult.size(); ++i) {
    if (i) s += ',';
    s += y.mult[i].str();
  }
  return s + ")";
}

YDescriptor from_leaves(std::vector<YDescriptor> leaves) {
  if (leaves.size() == 1) return std::move(leaves.front());
  YDescriptor y;
  y.kind = YDescriptor::Kind::ConnSum;
  y.summands = std::move(leaves);
  return y;
}

Rat parse_table_rational(const nlohmann::json& j, const std::string& what) {
  if (!j.is_string())
    throw Error(Errc::Constraint, "table: " + what + " must be a string");
  return parse_rational(j.get<std::string>());
}

ExtendedRat parse_extended(const nlohmann::json& j, const std::string& what) {
  if (j.is_string() && j.get<std::string>() == "inf") return ExtendedRat::inf();
  return ExtendedRat::finite(parse_table_rational(j, what));
}

Int json_key_int(const std::string& key) { return Int(key); }

}  // namespace

YDescriptor parse_y(std::string_view text) { return YParser(text).parse(); }

std::vector<YDescriptor> canonical_leaves(const YDescriptor& y) {
  std::vector<YDescriptor> leaves;
  flatten(y, leaves);
  std::sort(leaves.begin(), leaves.end(), leaf_less);
  return leaves;
}

std::string print_y(const YDescriptor& y) {
  const std::vector<YDescriptor> leaves = canonical_leaves(y);
  std::vector<std::string> parts;
  std::size_t i = 0;
  while (i < leaves.size()) {
    std::size_t j = i;
    while (j < leaves.size() && leaves[j] == leaves[i]) ++j;
    const std::size_t count = j - i;
    parts.push_back(count == 1 ? print_leaf(leaves[i])
                               : std::to_string(count) + "*" +
                                     print_leaf(leaves[i]));
    i = j;
  }
  if (parts.size() == 1) return parts.front();
  std::string out = "sum(";
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (k) out += ',';
    out += parts[k];
  }
  return out + ")";
}

Spectrum y_spectrum(const YDescriptor& y) {
  switch (y.kind) {
    case YDescriptor::Kind::MirrorBrieskorn:
      return seifert_cs_spectrum(y.mult);
    case YDescriptor::Kind::Brieskorn:
      return mirror_spectrum(seifert_cs_spectrum(y.mult));
    case YDescriptor::Kind::ConnSum: {
      if (y.summands.empty())
        throw Error(Errc::Constraint, "empty connected sum");
      Spectrum acc = y_spectrum(y.summands.front());
      for (std::size_t i = 1; i < y.summands.size(); ++i)
        acc = connected_sum_spectrum(acc, y_spectrum(y.summands[i]));
      return acc;
    }
  }
  throw Error(Errc::Internal, "unreachable descriptor kind");
}

// ---- built-in family rules ----

namespace {

constexpr const char* kFam6kMinus1 = "mirror-brieskorn-2-3-6k-1";
constexpr const char* kFam2357 = "mirror-brieskorn-2-3-5-7";
constexpr const char* kFamConnSum2357 = "connsum-mirror-brieskorn-2-3-5-7";
constexpr const char* kFamConnSumExtended = "connsum-extended-2-3-6k-1";
constexpr const char* kFamProvisional = "connsum-2-3-6k-5-with-poincare";

const char* kSourceDaemi =
    "Daemi, Chern-Simons functional and the homology cobordism group";
const char* kSourceNST =
    "Nozaki, Sato, Taniguchi, Filtered instanton Floer homology and the "
    "homology cobordism group";

bool is_mirror_2_3_q(const YDescriptor& leaf, Int& q_out) {
  if (leaf.kind != YDescriptor::Kind::MirrorBrieskorn) return false;
  if (leaf.mult.size() != 3 || leaf.mult[0] != 2 || leaf.mult[1] != 3)
    return false;
  q_out = leaf.mult[2];
  return true;
}

bool is_6k_minus_1(const Int& q) { return q >= 5 && q % 6 == 5; }

std::optional<KnownInvariantEntry> leaf_entry(const YDescriptor& leaf,
                                              const InvariantTable& table) {
  Int q;
  if (table.family_enabled(kFam6kMinus1) && is_mirror_2_3_q(leaf, q) &&
      is_6k_minus_1(q)) {
    KnownInvariantEntry e;
    e.r = ExtendedRat::finite(Rat(1, 24 * q));
    e.r_valid_for_all_s = true;
    e.l_s = 1;
    e.gamma[1] = *e.r;
    e.l_k[1] = 1;
    if (q == 5) {
      e.gamma[2] = ExtendedRat::finite(Rat(49, 120));
      e.gamma_tail_infinite = true;
      e.l_k[2] = 1;
    }
    e.source = kSourceDaemi;
    return e;
  }
  if (table.family_enabled(kFam2357) &&
      leaf.kind == YDescriptor::Kind::MirrorBrieskorn &&
      leaf.mult == std::vector<Int>{2, 3, 5, 7}) {
    KnownInvariantEntry e;
    e.r = ExtendedRat::finite(Rat(1, 840));
    e.r_valid_for_all_s = true;
    e.l_s = 1;
    e.gamma[1] = *e.r;
    e.l_k[1] = 1;
    e.source = kSourceDaemi;
    return e;
  }
  return std::nullopt;
}

std::optional<KnownInvariantEntry> sum_entry(
    const std::vector<YDescriptor>& leaves, const InvariantTable& table) {
  // n-fold connected sum of -Sigma(2,3,5,7).
  if (table.family_enabled(kFamConnSum2357)) {
    const bool all_2357 = std::all_of(
        leaves.begin(), leaves.end(), [](const YDescriptor& l) {
          return l.kind == YDescriptor::Kind::MirrorBrieskorn &&
                 l.mult == std::vector<Int>{2, 3, 5, 7};
        });
    if (all_2357) {
      KnownInvariantEntry e;
      e.r = ExtendedRat::finite(Rat(1, 840));
      e.l_s = 1;
      e.source = kSourceDaemi;
      return e;
    }
  }

  // (#_n -Sigma(2,3,q)) # extra positive Brieskorn summands whose products
  // lie strictly between 6q and 24q, q = 6k-1.
  if (table.family_enabled(kFamConnSumExtended)) {
    Int q = 0;
    bool ok = true;
    std::vector<const YDescriptor*> extras;
    for (const auto& l : leaves) {
      Int lq;
      if (is_mirror_2_3_q(l, lq) && is_6k_minus_1(lq) && (q == 0 || lq == q)) {
        q = lq;
      } else if (l.kind == YDescriptor::Kind::Brieskorn) {
        extras.push_back(&l);
      } else {
        ok = false;
        break;
      }
    }
    if (ok && q != 0) {
      for (const auto* l : extras) {
        Int prod = 1;
        for (const Int& m : l->mult) prod *= m;
        if (!(6 * q < prod && prod < 24 * q)) {
          ok = false;
          break;
        }
      }
      if (ok) {
        KnownInvariantEntry e;
        e.r = ExtendedRat::finite(Rat(1, 24 * q));
        e.l_s = 1;
        e.source = kSourceNST;
        return e;
      }
    }
  }

  // -Sigma(2,3,6k+5) # Sigma(2,3,5), provisional: the value follows from the
  // connected-sum lower bound plus spectrum membership.
  if (table.family_enabled(kFamProvisional) && leaves.size() == 2) {
    Int q;
    const auto match = [&](const YDescriptor& a, const YDescriptor& b) {
      return is_mirror_2_3_q(a, q) && q >= 11 && is_6k_minus_1(q) &&
             b.kind == YDescriptor::Kind::Brieskorn &&
             b.mult == std::vector<Int>{2, 3, 5};
    };
    if (match(leaves[0], leaves[1]) || match(leaves[1], leaves[0])) {
      KnownInvariantEntry e;
      e.r = ExtendedRat::finite(Rat(1, 24 * q));
      e.l_s = 1;
      e.provisional = true;
      e.source = kSourceNST;
      return e;
    }
  }
  return std::nullopt;
}

}  // namespace

bool InvariantTable::family_enabled(const std::string& name) const {
  auto it = families_.find(name);
  return it != families_.end() && it->second;
}

std::optional<KnownInvariantEntry> InvariantTable::family_lookup(
    const YDescriptor& y) const {
  const std::vector<YDescriptor> leaves = canonical_leaves(y);
  if (leaves.size() == 1) return leaf_entry(leaves.front(), *this);
  return sum_entry(leaves, *this);
}

std::optional<KnownInvariantEntry> InvariantTable::lookup(
    const YDescriptor& y) const {
  const std::vector<YDescriptor> key = canonical_leaves(y);
  for (const auto& e : entries_)
    if (e.key == key) return e.entry;
  return family_lookup(y);
}

InvariantTable InvariantTable::from_json_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(Errc::Syntax, std::string("table JSON: ") + e.what());
  }

  InvariantTable t;
  if (j.contains("families"))
    for (const auto& [name, enabled] : j.at("families").items())
      t.families_[name] = enabled.get<bool>();

  for (const auto& je : j.value("entries", nlohmann::json::array())) {
    ExplicitEntry e;
    e.key = canonical_leaves(parse_y(je.at("y").get<std::string>()));
    if (je.contains("r_s")) {
      e.entry.r = parse_extended(je.at("r_s"), "r_s");
      e.entry.r_valid_for_all_s = je.value("r_valid_for_all_s", false);
    }
    if (je.contains("gamma"))
      for (const auto& [k, v] : je.at("gamma").items())
        e.entry.gamma[json_key_int(k)] = parse_extended(v, "gamma");
    e.entry.gamma_tail_infinite = je.value("gamma_tail", "") == std::string("inf");
    if (je.contains("l_s")) e.entry.l_s = Int(je.at("l_s").get<long long>());
    if (je.contains("l_k"))
      for (const auto& [k, v] : je.at("l_k").items())
        e.entry.l_k[json_key_int(k)] = Int(v.get<long long>());
    e.entry.provisional = je.value("provisional", false);
    e.entry.source = je.value("source", "");
    t.entries_.push_back(std::move(e));
  }

  t.check_consistency();
  return t;
}

InvariantTable InvariantTable::from_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Error(Errc::NotFound, "cannot open table file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return from_json_text(buf.str());
}

const InvariantTable& InvariantTable::builtin() {
  static const InvariantTable t = from_json_text(kDefaultInvariantTableJson);
  return t;
}

void InvariantTable::check_consistency() const {
  auto check_entry = [](const YDescriptor& y, const KnownInvariantEntry& e) {
    const Spectrum spec = y_spectrum(y);
    auto require_member = [&](const Rat& v, const char* what) {
      if (!spec.contains(normalize_mod1(v)))
        throw Error(Errc::Constraint,
                    std::string("table: ") + what + " value " +
                        rational_string(v) + " not in the spectrum of " +
                        print_y(y));
    };
    if (e.r && !e.r->infinite()) require_member(*e.r->value, "r_s");
    for (const auto& [k, g] : e.gamma)
      if (!g.infinite()) require_member(*g.value, "gamma");
  };

  for (const auto& e : entries_) {
    std::vector<YDescriptor> key = e.key;
    check_entry(from_leaves(std::move(key)), e.entry);
  }

  // Spot-check the enabled family rules on small instances.
  std::vector<std::string> samples;
  if (family_enabled(kFam6kMinus1))
    samples.insert(samples.end(), {"mirror-brieskorn(2,3,5)",
                                   "mirror-brieskorn(2,3,11)",
                                   "mirror-brieskorn(2,3,17)"});
  if (family_enabled(kFam2357)) samples.push_back("mirror-brieskorn(2,3,5,7)");
  if (family_enabled(kFamConnSum2357))
    samples.push_back("2*mirror-brieskorn(2,3,5,7)");
  if (family_enabled(kFamConnSumExtended))
    samples.push_back("sum(mirror-brieskorn(2,3,5),brieskorn(2,3,7))");
  if (family_enabled(kFamProvisional))
    samples.push_back("sum(mirror-brieskorn(2,3,11),brieskorn(2,3,5))");
  for (const auto& s : samples) {
    const YDescriptor y = parse_y(s);
    if (auto e = family_lookup(y)) check_entry(y, *e);
  }
}

// ---- verdicts ----

const char* verdict_name(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::Obstructed: return "obstructed";
    case VerdictStatus::NoObstruction: return "no-obstruction";
    case VerdictStatus::Unknown: return "unknown";
  }
  return "unknown";
}

namespace {

// The tabulated value driving the membership test: r_s when present,
// otherwise Gamma(1). Returns the value together with its l-invariant.
struct PrimaryValue {
  Rat value;
  Int l;
  std::string source;
  bool provisional;
};

std::optional<PrimaryValue> primary_value(const KnownInvariantEntry& e,
                                          std::vector<std::string>& gaps) {
  if (e.r) {
    if (e.r->infinite()) {
      gaps.push_back("tabulated r_s is infinite; the membership test is vacuous");
      return std::nullopt;
    }
    if (!e.l_s) {
      gaps.push_back("l^s unknown; cannot bound the subgroup index");
      return std::nullopt;
    }
    return PrimaryValue{*e.r->value, *e.l_s, e.source, e.provisional};
  }
  auto g1 = e.gamma.find(1);
  if (g1 != e.gamma.end() && !g1->second.infinite()) {
    auto lk1 = e.l_k.find(1);
    if (lk1 == e.l_k.end()) {
      gaps.push_back("l^1 unknown; cannot bound the subgroup index");
      return std::nullopt;
    }
    return PrimaryValue{*g1->second.value, lk1->second, e.source,
                        e.provisional};
  }
  gaps.push_back("no finite tabulated r_s or Gamma(1) value");
  return std::nullopt;
}

}  // namespace

Verdict check_seifert_hypersurface(const InvariantTable& table,
                                   const YDescriptor& y,
                                   const TwoKnotExpr& k) {
  Verdict v;
  auto entry = table.lookup(y);
  if (!entry) {
    v.reasoning.push_back("no invariant table entry for " + print_y(y));
    return v;
  }
  auto pv = primary_value(*entry, v.reasoning);
  if (!pv) return v;

  const Mod1Rational frac = normalize_mod1(pv->value);
  bool member = false;
  bool all_exact = true;
  for (Orientation o : {Orientation::Raw, Orientation::Mirror}) {
    const Spectrum f = knot_spectrum(k, 1, o).spectrum;
    const bool in = f.contains(frac);
    member = member || in;
    all_exact = all_exact && f.exact();
    v.reasoning.push_back(
        std::string(o == Orientation::Raw ? "raw" : "mirror") +
        " orientation: " + frac.str() + (in ? " is in" : " is not in") +
        " Im cs_K" + (f.exact() ? "" : " (incomplete lower set)"));
  }

  if (member) {
    v.status = VerdictStatus::NoObstruction;
    v.reasoning.push_back(
        "the tabulated Chern-Simons value of Y is realized by K; the "
        "hypersurface obstruction does not apply [" + pv->source + "]");
  } else if (all_exact) {
    v.status = VerdictStatus::Obstructed;
    v.reasoning.push_back(
        "frac(r_s(Y)) lies outside Im cs_{K,j} for 1 <= j <= l^s = " +
        pv->l.str() + " under both orientations, so Y is not a Seifert "
        "hypersurface of K [" + pv->source + "]");
    if (pv->provisional)
      v.reasoning.push_back("warning: the table entry is provisional");
  } else {
    v.reasoning.push_back(
        "value absent from an incomplete spectrum; membership undecided");
  }
  return v;
}

Verdict check_ribbon_obstruction(const InvariantTable& table,
                                 const YDescriptor& y) {
  Verdict v;
  auto entry = table.lookup(y);
  if (!entry) {
    v.reasoning.push_back("no invariant table entry for " + print_y(y));
    return v;
  }
  auto pv = primary_value(*entry, v.reasoning);
  if (!pv) return v;

  const Mod1Rational frac = normalize_mod1(pv->value);
  if (frac.is_one()) {
    v.reasoning.push_back(
        "tabulated value is integral; the non-ribbon criterion needs a value "
        "in (0,1)");
    return v;
  }
  v.status = VerdictStatus::Obstructed;
  v.reasoning.push_back(
      "r_s(Y) has fractional part " + frac.str() + " in (0,1) with finite "
      "l-invariant " + pv->l.str() + ": no 2-knot with Seifert hypersurface " +
      print_y(y) + " is ribbon [" + pv->source + "]");
  if (pv->provisional)
    v.reasoning.push_back("warning: the table entry is provisional");
  return v;
}

Verdict check_embedding_negative_definite(
    const YDescriptor& y, bool rep_space_connected_for_some_j) {
  if (y.kind != YDescriptor::Kind::Brieskorn)
    throw Error(Errc::Constraint,
                "embedding check applies to brieskorn(...) descriptors");
  Verdict v;
  if (!rep_space_connected_for_some_j) {
    v.reasoning.push_back(
        "representation-space connectedness hypothesis not asserted");
    return v;
  }
  const Rat r = r_invariant(y.mult);
  if (r > 0) {
    v.status = VerdictStatus::Obstructed;
    v.reasoning.push_back(
        "R" + print_y(y).substr(std::string("brieskorn").size()) + " = " +
        rational_string(r) +
        " > 0 certifies h > 0 (Fintushel-Stern 1990), so the manifold admits "
        "no embedding into a negative definite closed 4-manifold");
  } else {
    v.reasoning.push_back("R = " + rational_string(r) +
                          " <= 0 certifies nothing about h");
  }
  return v;
}

std::optional<Spectrum> rigid_spectrum(const InvariantTable& table,
                                       const YDescriptor& y) {
  auto entry = table.lookup(y);
  if (!entry || entry->provisional) return std::nullopt;
  if (!entry->gamma_tail_infinite) return std::nullopt;
  if (!entry->l_s || *entry->l_s != 1) return std::nullopt;

  std::vector<Mod1Rational> finite;
  if (entry->r && !entry->r->infinite())
    finite.push_back(normalize_mod1(*entry->r->value));
  for (const auto& [k, g] : entry->gamma) {
    if (g.infinite()) continue;
    auto lk = entry->l_k.find(k);
    if (lk == entry->l_k.end() || lk->second != 1) return std::nullopt;
    finite.push_back(normalize_mod1(*g.value));
  }
  std::sort(finite.begin(), finite.end());
  finite.erase(std::unique(finite.begin(), finite.end()), finite.end());

  const Spectrum spec = y_spectrum(y);
  std::vector<Mod1Rational> interior;
  for (const auto& v : spec.values())
    if (!v.is_one()) interior.push_back(v);
  if (finite != interior) return std::nullopt;
  return spec;
}

std::optional<Mod1Rational> q_rigidity(const InvariantTable& table,
                                       const YDescriptor& y) {
  auto entry = table.lookup(y);
  if (!entry || entry->provisional) return std::nullopt;
  if (!entry->r || entry->r->infinite()) return std::nullopt;
  if (!entry->l_s || *entry->l_s != 1) return std::nullopt;
  const Mod1Rational r0 = normalize_mod1(*entry->r->value);
  if (r0 != y_spectrum(y).min_nontrivial()) return std::nullopt;
  return r0;
}

ExtendedRat rs_connected_sum_lower_bound(const ExtendedRat& r1,
                                         const ExtendedRat& r2, const Rat& s1,
                                         const Rat& s2) {
  if (s1 > 0 || s2 > 0)
    throw Error(Errc::Constraint, "s parameters must be <= 0");
  if (r1.infinite() && r2.infinite()) return ExtendedRat::inf();
  if (r1.infinite()) return ExtendedRat::finite(*r2.value + s1);
  if (r2.infinite()) return ExtendedRat::finite(*r1.value + s2);
  return ExtendedRat::finite(std::min(*r1.value + s2, *r2.value + s1));
}

Spectrum mapping_torus_spectrum(const Int& p, const Int& q, const Int& r,
                                MappingClass, const Int& j) {
  if (j < 1) throw Error(Errc::Constraint, "j must be a positive integer");
  return seifert_cs_spectrum({p, q, r});
}

}  // namespace csk
