// Command-line front end: Chern-Simons spectra of Seifert homology spheres
// and lens spaces, 2-knot spectrum evaluation, and obstruction verdicts.
//
// Exit codes: 0 success, 1 definite verdict (obstructed / no-obstruction),
// 2 input error, 3 internal assertion failure.

#include "csk/knot2.hpp"
#include "csk/obstruct.hpp"
#include "csk/spectra.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using csk::Int;
using csk::Mod1Rational;
using csk::Orientation;
using csk::Spectrum;
using json = nlohmann::ordered_json;

constexpr const char* kSchemaVersion = "1";

constexpr const char* kCiteFS =
    "Fintushel, Stern, Instanton homology of Seifert fibred homology three "
    "spheres (1990)";
constexpr const char* kCiteNST =
    "Nozaki, Sato, Taniguchi, Filtered instanton Floer homology and the "
    "homology cobordism group";
constexpr const char* kCiteDaemi =
    "Daemi, Chern-Simons functional and the homology cobordism group";

json spectrum_json(const Spectrum& s) {
  json values = json::array();
  for (const auto& v : s.values()) values.push_back(v.str());
  return json{{"values", values},
              {"kind", s.exact() ? "exact" : "lower-set"}};
}

json envelope(const std::string& command, json inputs, json result,
              json citations = json::array()) {
  return json{{"schema_version", kSchemaVersion},
              {"command", command},
              {"inputs", std::move(inputs)},
              {"result", std::move(result)},
              {"citations", std::move(citations)}};
}

void emit_json(const json& j) { std::cout << j.dump(2) << "\n"; }

std::vector<Int> parse_int_list(const std::string& text) {
  std::vector<Int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty())
      throw csk::Error(csk::Errc::Syntax, "empty entry in integer list");
    try {
      out.push_back(Int(item));
    } catch (const std::exception&) {
      throw csk::Error(csk::Errc::Syntax, "bad integer '" + item + "'");
    }
  }
  if (out.empty())
    throw csk::Error(csk::Errc::Syntax, "empty integer list");
  return out;
}

Int parse_cli_int(const std::string& s) {
  try {
    return Int(s);
  } catch (const std::exception&) {
    throw csk::Error(csk::Errc::Syntax, "bad integer '" + s + "'");
  }
}

Orientation parse_orientation(const std::string& s) {
  if (s == "raw") return Orientation::Raw;
  if (s == "mirror") return Orientation::Mirror;
  throw csk::Error(csk::Errc::Syntax,
                   "orientation must be 'raw' or 'mirror'");
}

const csk::InvariantTable& load_table(const std::string& flag_path) {
  static csk::InvariantTable loaded;
  if (!flag_path.empty()) {
    loaded = csk::InvariantTable::from_file(flag_path);
    return loaded;
  }
  if (const char* env = std::getenv("CS_SPECTRUM_TABLE"); env && *env) {
    loaded = csk::InvariantTable::from_file(env);
    return loaded;
  }
  return csk::InvariantTable::builtin();
}

json verdict_json(const csk::Verdict& v) {
  return json{{"status", csk::verdict_name(v.status)},
              {"reasoning", v.reasoning}};
}

int verdict_exit(const csk::Verdict& v) {
  return v.status == csk::VerdictStatus::Unknown ? 0 : 1;
}

// Golden copy of the published table of critical values of -Sigma(2,3,5,7):
// rotation numbers, cs numerator over 840, Floer index.
struct GoldenRow {
  int l1, l2, l3, l4;
  int num;
  int ind;
};
const GoldenRow kGolden2357[] = {
    {1, 0, 2, 2, 681, 7}, {1, 0, 2, 4, 561, 5}, {1, 0, 2, 6, 81, 1},
    {1, 0, 4, 4, 729, 7}, {1, 2, 0, 2, 625, 7}, {1, 2, 0, 4, 505, 5},
    {1, 2, 2, 0, 721, 7}, {1, 2, 4, 0, 49, 1},  {0, 2, 2, 2, 16, 1},
    {0, 2, 2, 4, 736, 7}, {0, 2, 2, 6, 256, 3}, {0, 2, 4, 2, 184, 3},
    {2, 2, 2, 2, 436, 5}, {2, 2, 2, 4, 316, 3}, {2, 2, 4, 4, 484, 5},
    {2, 2, 4, 6, 4, 1},   {1, 2, 2, 2, 121, 1}, {1, 2, 2, 4, 1, 7},
    {1, 2, 2, 6, 361, 3}, {1, 2, 4, 2, 289, 3}, {1, 2, 4, 4, 169, 1},
    {1, 2, 4, 6, 529, 5},
};

struct Options {
  std::string format = "json";
  std::string table_path;
};

void print_tsv_row(std::initializer_list<std::string> cols) {
  bool first = true;
  for (const auto& c : cols) {
    if (!first) std::cout << '\t';
    std::cout << c;
    first = false;
  }
  std::cout << '\n';
}

int cmd_seifert(const std::vector<Int>& mult, const Options& opt) {
  const csk::InvariantRecord rec = csk::seifert_record(mult);

  if (opt.format == "tsv") {
    print_tsv_row({"rotation", "e", "cs", "index", "topology"});
    for (std::size_t i = 0; i < rec.components.size(); ++i) {
      const auto& c = rec.components[i];
      std::string rot;
      for (std::size_t k = 0; k < c.rot.l.size(); ++k)
        rot += (k ? "," : "") + c.rot.l[k].str();
      print_tsv_row({rot, c.e.str(), rec.cs[i].str(),
                     std::to_string(rec.index[i]),
                     csk::topology_name(c.topology)});
    }
    return 0;
  }

  json comps = json::array();
  for (std::size_t i = 0; i < rec.components.size(); ++i) {
    const auto& c = rec.components[i];
    json rot = json::array();
    for (const auto& l : c.rot.l) rot.push_back(l.str());
    comps.push_back(json{{"rotation", rot},
                         {"holonomy_sign", c.rot.holonomy_sign},
                         {"e", c.e.str()},
                         {"cs", rec.cs[i].str()},
                         {"index", rec.index[i]},
                         {"dimension", c.dimension},
                         {"topology", csk::topology_name(c.topology)}});
  }
  json coeff = json::array();
  for (const auto& b : rec.data.coeff) coeff.push_back(b.str());
  json inputs_a = json::array();
  for (const auto& a : mult) inputs_a.push_back(a.str());

  json result{{"presentation",
               json{{"b", rec.data.b.str()}, {"coeff", coeff}}},
              {"components", comps},
              {"spectrum", spectrum_json(rec.spectrum)},
              {"nu", rec.nu.str()},
              {"r_invariant", csk::rational_string(rec.r)}};
  result["l_total"] =
      rec.l_total ? json(rec.l_total->str()) : json("unknown");
  result["casson_abs"] =
      rec.casson_abs ? json(rec.casson_abs->str()) : json("unknown");

  emit_json(envelope("seifert", json{{"a", inputs_a}}, std::move(result),
                     json::array({kCiteFS})));
  return 0;
}

int cmd_lens(const Int& p, const Int& q, const Options& opt) {
  const Spectrum s = csk::lens_spectrum(p, q);
  if (opt.format == "tsv") {
    print_tsv_row({"cs"});
    for (const auto& v : s.values()) print_tsv_row({v.str()});
    return 0;
  }
  emit_json(envelope("lens", json{{"p", p.str()}, {"q", q.str()}},
                     json{{"spectrum", spectrum_json(s)}},
                     json::array({kCiteNST})));
  return 0;
}

int cmd_knot(const std::string& expr, const Int& j,
             const std::string& orientation, const Options& opt) {
  const csk::KnotPtr k = csk::parse_knot(expr);
  const csk::KnotSpectrumResult res =
      csk::knot_spectrum(*k, j, parse_orientation(orientation));
  if (opt.format == "tsv") {
    print_tsv_row({"cs"});
    for (const auto& v : res.spectrum.values()) print_tsv_row({v.str()});
    return 0;
  }
  emit_json(envelope(
      "knot",
      json{{"expr", csk::print_knot(*k)},
           {"j", j.str()},
           {"orientation", orientation}},
      json{{"spectrum", spectrum_json(res.spectrum)},
           {"q_invariant", res.q_invariant.str()},
           {"q_role", res.q_is_exact ? "min-exact" : "upper-bound"},
           {"irreducible_rep_lower_bound",
            res.irreducible_rep_lower_bound.str()}},
      json::array({kCiteNST})));
  return 0;
}

int cmd_table1(const Options& opt) {
  const csk::SeifertData data = csk::seifert_data({2, 3, 5, 7});
  const auto comps = csk::enumerate_components(data);

  struct Row {
    std::string rot;
    Int num;
    int ind;
  };
  std::vector<Row> rows;
  for (const auto& c : comps) {
    const Mod1Rational cs = csk::cs_value(data, c);
    std::string rot;
    for (std::size_t k = 0; k < c.rot.l.size(); ++k)
      rot += (k ? "," : "") + c.rot.l[k].str();
    const csk::Rat scaled = cs.value() * 840;
    rows.push_back(
        {rot, numerator(scaled), csk::floer_index(data, c)});
  }

  std::vector<std::string> diffs;
  if (rows.size() != std::size(kGolden2357))
    diffs.push_back("component count " + std::to_string(rows.size()) +
                    " != 22");
  for (const auto& g : kGolden2357) {
    const std::string rot = std::to_string(g.l1) + "," + std::to_string(g.l2) +
                            "," + std::to_string(g.l3) + "," +
                            std::to_string(g.l4);
    bool found = false;
    for (const auto& r : rows)
      if (r.rot == rot) {
        found = true;
        if (r.num != g.num || r.ind != g.ind)
          diffs.push_back("(" + rot + "): computed " + r.num.str() + "/840 ind " +
                          std::to_string(r.ind) + ", golden " +
                          std::to_string(g.num) + "/840 ind " +
                          std::to_string(g.ind));
      }
    if (!found) diffs.push_back("(" + rot + "): missing from enumeration");
  }

  if (opt.format == "tsv") {
    print_tsv_row({"rotation", "cs_numerator_over_840", "index"});
    for (const auto& r : rows)
      print_tsv_row({r.rot, r.num.str(), std::to_string(r.ind)});
    for (const auto& d : diffs) print_tsv_row({"DIFF", d});
    return diffs.empty() ? 0 : 3;
  }

  json jrows = json::array();
  for (const auto& r : rows)
    jrows.push_back(json{{"rotation", r.rot},
                         {"cs_numerator_over_840", r.num.str()},
                         {"index", r.ind}});
  emit_json(envelope("table1", json::object(),
                     json{{"rows", jrows},
                          {"matches_golden", diffs.empty()},
                          {"diffs", diffs}},
                     json::array({kCiteFS})));
  return diffs.empty() ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Chern-Simons spectra of Seifert homology spheres, 2-knot "
               "spectrum invariants, and obstruction verdicts"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--format", opt.format, "Output format: json or tsv")
      ->check(CLI::IsMember({"json", "tsv"}))
      ->capture_default_str();
  app.add_option("--table", opt.table_path,
                 "Path to an invariant table JSON (overrides the embedded "
                 "table and CS_SPECTRUM_TABLE)");

  std::string a_list, expr, orientation = "raw", y_text, knot_text;
  std::string p_str = "0", q_str = "0", r_str = "0", j_str = "1", map_name = "tau";
  bool connected_rep_space = false;

  auto* seifert = app.add_subcommand("seifert",
      "Flat SU(2) connections and spectrum of Sigma(a_1,...,a_n)");
  seifert->add_option("--a", a_list, "Comma-separated multiplicities")
      ->required();

  auto* lens = app.add_subcommand("lens", "Spectrum of the lens space L(p,q)");
  lens->add_option("--p", p_str)->required();
  lens->add_option("--q", q_str)->required();

  auto* knot = app.add_subcommand("knot", "Im cs_{K,j} of a 2-knot expression");
  knot->add_option("--expr", expr, "2-knot expression")->required();
  knot->add_option("--j", j_str, "Subgroup index j >= 1");
  knot->add_option("--orientation", orientation, "raw or mirror")
      ->check(CLI::IsMember({"raw", "mirror"}));

  auto* obstruct = app.add_subcommand("obstruct", "Obstruction verdicts");
  obstruct->require_subcommand(1);

  auto* ob_ribbon = obstruct->add_subcommand("ribbon",
      "Is any 2-knot with Seifert hypersurface Y ribbon?");
  ob_ribbon->add_option("--y", y_text, "3-manifold descriptor")->required();

  auto* ob_hyper = obstruct->add_subcommand("hypersurface",
      "Can Y be a Seifert hypersurface of the given 2-knot?");
  ob_hyper->add_option("--y", y_text, "3-manifold descriptor")->required();
  ob_hyper->add_option("--knot", knot_text, "2-knot expression")->required();

  auto* ob_embed = obstruct->add_subcommand("embed",
      "Embedding obstruction into negative definite 4-manifolds");
  ob_embed->add_option("--y", y_text, "brieskorn(...) descriptor")->required();
  ob_embed->add_flag("--connected-rep-space", connected_rep_space,
                     "Assert the representation space is connected for some j");

  auto* ob_rigid = obstruct->add_subcommand("rigid",
      "Forced spectrum of every 2-knot with Seifert hypersurface Y");
  ob_rigid->add_option("--y", y_text, "3-manifold descriptor")->required();

  auto* ob_qrigid = obstruct->add_subcommand("qrigid",
      "Forced Q^j_K for every 2-knot with Seifert hypersurface Y");
  ob_qrigid->add_option("--y", y_text, "3-manifold descriptor")->required();

  auto* ob_torus = obstruct->add_subcommand("mapping-torus",
      "Spectrum of the mapping torus of Sigma(p,q,r)");
  ob_torus->add_option("--p", p_str)->required();
  ob_torus->add_option("--q", q_str)->required();
  ob_torus->add_option("--r", r_str)->required();
  ob_torus->add_option("--map", map_name, "tau or iota")
      ->check(CLI::IsMember({"tau", "iota"}));
  ob_torus->add_option("--j", j_str, "Subgroup index j >= 1");

  auto* table1 = app.add_subcommand("table1",
      "Regenerate the published (2,3,5,7) table and diff against the golden copy");
  (void)table1;

  // Let --format/--table appear after the subcommand name as well.
  for (CLI::App* sub : app.get_subcommands(nullptr)) {
    sub->fallthrough();
    for (CLI::App* nested : sub->get_subcommands(nullptr))
      nested->fallthrough();
  }

  CLI11_PARSE(app, argc, argv);

  try {
    if (seifert->parsed()) return cmd_seifert(parse_int_list(a_list), opt);
    if (lens->parsed()) return cmd_lens(parse_cli_int(p_str), parse_cli_int(q_str), opt);
    if (knot->parsed()) return cmd_knot(expr, parse_cli_int(j_str), orientation, opt);
    if (table1->parsed()) return cmd_table1(opt);

    const auto& table = load_table(opt.table_path);
    if (ob_ribbon->parsed()) {
      const csk::YDescriptor y = csk::parse_y(y_text);
      const csk::Verdict v = csk::check_ribbon_obstruction(table, y);
      emit_json(envelope("obstruct.ribbon", json{{"y", csk::print_y(y)}},
                         verdict_json(v), json(v.reasoning)));
      return verdict_exit(v);
    }
    if (ob_hyper->parsed()) {
      const csk::YDescriptor y = csk::parse_y(y_text);
      const csk::KnotPtr k = csk::parse_knot(knot_text);
      const csk::Verdict v = csk::check_seifert_hypersurface(table, y, *k);
      emit_json(envelope(
          "obstruct.hypersurface",
          json{{"y", csk::print_y(y)}, {"knot", csk::print_knot(*k)}},
          verdict_json(v), json(v.reasoning)));
      return verdict_exit(v);
    }
    if (ob_embed->parsed()) {
      const csk::YDescriptor y = csk::parse_y(y_text);
      const csk::Verdict v =
          csk::check_embedding_negative_definite(y, connected_rep_space);
      emit_json(envelope("obstruct.embed",
                         json{{"y", csk::print_y(y)},
                              {"connected_rep_space", connected_rep_space}},
                         verdict_json(v), json(v.reasoning)));
      return verdict_exit(v);
    }
    if (ob_rigid->parsed()) {
      const csk::YDescriptor y = csk::parse_y(y_text);
      const auto s = csk::rigid_spectrum(table, y);
      json result = s ? json{{"forced", true}, {"spectrum", spectrum_json(*s)}}
                      : json{{"forced", false}};
      emit_json(envelope("obstruct.rigid", json{{"y", csk::print_y(y)}},
                         std::move(result), json::array({kCiteDaemi})));
      return 0;
    }
    if (ob_qrigid->parsed()) {
      const csk::YDescriptor y = csk::parse_y(y_text);
      const auto q = csk::q_rigidity(table, y);
      json result = q ? json{{"forced", true}, {"q", q->str()}}
                      : json{{"forced", false}};
      emit_json(envelope("obstruct.qrigid", json{{"y", csk::print_y(y)}},
                         std::move(result), json::array({kCiteDaemi})));
      return 0;
    }
    if (ob_torus->parsed()) {
      const Spectrum s = csk::mapping_torus_spectrum(
          parse_cli_int(p_str), parse_cli_int(q_str), parse_cli_int(r_str),
          map_name == "tau" ? csk::MappingClass::Tau : csk::MappingClass::Iota,
          parse_cli_int(j_str));
      emit_json(envelope("obstruct.mapping-torus",
                         json{{"p", p_str},
                              {"q", q_str},
                              {"r", r_str},
                              {"map", map_name},
                              {"j", j_str}},
                         json{{"spectrum", spectrum_json(s)}},
                         json::array({kCiteNST})));
      return 0;
    }
  } catch (const csk::Error& e) {
    const bool internal = e.code() == csk::Errc::NonIntegral ||
                          e.code() == csk::Errc::NonRational ||
                          e.code() == csk::Errc::Internal;
    json err{{"error", csk::errc_name(e.code())}, {"message", e.what()}};
    if (e.offset() != csk::Error::no_offset) err["offset"] = e.offset();
    std::cerr << err.dump(2) << "\n";
    return internal ? 3 : 2;
  } catch (const std::exception& e) {
    std::cerr << json{{"error", "Internal"}, {"message", e.what()}}.dump(2)
              << "\n";
    return 3;
  }
  return 2;
}
