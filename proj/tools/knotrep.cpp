// Command-line front end: homomorphism counting and the derived invariants
// for knot and handlebody-knot group presentations.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "knotrep/knotrep.hpp"
#include "knotrep/rules.hpp"

namespace {

using namespace knotrep;

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  if (!f)
    fail("cannot open file: " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path);
  if (!f)
    fail("cannot write file: " + out_path);
  f << text;
}

bool looks_like_pd(const std::string& text) {
  for (std::string_view line : detail::split(text, '\n')) {
    std::string_view t = detail::trim(line);
    if (t.empty() || t[0] == '#')
      continue;
    return t[0] == 'X';
  }
  return false;
}

// PD inputs pass through the Wirtinger construction.
Presentation load_presentation(const std::string& path, unsigned base_edge) {
  std::string text = slurp(path);
  if (looks_like_pd(text))
    return PDCode::parse(text).wirtinger(base_edge);
  return parse_presentation(text);
}

struct CommonOpts {
  std::string group = "A5";
  std::string aut = "sn";
  std::string format = "text";
  unsigned jobs = 1;
  std::uint64_t node_limit = 1000000000;
  unsigned base_edge = 1;

  void attach(CLI::App* cmd, bool with_group = true) {
    if (with_group)
      cmd->add_option("--group", group, "target group, e.g. A5, S4, A6");
    cmd->add_option("--aut", aut, "action identifying homomorphisms")
        ->check(CLI::IsMember({"sn", "inner", "full"}));
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--jobs", jobs, "parallel workers for the search");
    cmd->add_option("--node-limit", node_limit, "search node limit");
    cmd->add_option("--base", base_edge, "base edge for PD inputs");
  }

  TargetGroup make_group() const {
    return TargetGroup::parse(group, *parse_aut_action(aut));
  }

  SearchOptions search() const {
    SearchOptions o;
    o.jobs = jobs;
    o.node_limit = node_limit;
    return o;
  }

  bool json() const { return format == "json"; }
};

int cmd_homcount(const std::string& input, const CommonOpts& common,
                 bool surjective, bool verbose) {
  Presentation p = load_presentation(input, common.base_edge);
  TargetGroup g = common.make_group();
  SearchOptions o = common.search();
  o.surjective_only = surjective;
  HomClassSet set = enumerate_homs(p, g, o);
  if (common.json()) {
    std::cout << to_json(set).dump(2) << "\n";
    return 0;
  }
  if (verbose)
    std::cout << format_listing(set);
  std::cout << "Result: " << set.count() << "\n";
  return 0;
}

int cmd_gimage(const std::string& input, const CommonOpts& common) {
  Presentation p = load_presentation(input, common.base_edge);
  TargetGroup g = common.make_group();
  MeridianImageSet s = g_image(p, g, common.search());
  if (common.json())
    std::cout << to_json(s).dump(2) << "\n";
  else
    std::cout << format_gimage(s) << "\n";
  return 0;
}

int cmd_gindex(const std::string& input, const CommonOpts& common,
               const std::string& meridian) {
  Presentation p = load_presentation(input, common.base_edge);
  TargetGroup g = common.make_group();
  IndexPolynomial poly =
      g_index(p, g, SelectedRole::parse(meridian), common.search());
  if (common.json())
    std::cout << to_json(poly).dump(2) << "\n";
  else
    std::cout << format_gindex(poly) << "\n";
  return 0;
}

int cmd_chirality(const std::string& input, const CommonOpts& common,
                  bool all_classes, const std::string& compare) {
  Presentation p = load_presentation(input, common.base_edge);
  TargetGroup g = common.make_group();
  ChiralityTable t = chirality_table(p, g, all_classes, common.search());
  if (compare.empty()) {
    if (common.json())
      std::cout << to_json(t).dump(2) << "\n";
    else
      std::cout << format_chirality(t);
    return 0;
  }
  Presentation q = load_presentation(compare, common.base_edge);
  ChiralityTable u = chirality_table(q, g, all_classes, common.search());
  std::string verdict = t == u ? "not distinguished by " + common.group
                               : "chiral (distinguished by " + common.group + ")";
  if (common.json()) {
    nlohmann::json j{{"table", to_json(t)},
                     {"compare", to_json(u)},
                     {"verdict", verdict}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "-- " << input << "\n" << format_chirality(t);
    std::cout << "-- " << compare << "\n" << format_chirality(u);
    std::cout << verdict << "\n";
  }
  return 0;
}

int cmd_twist(const std::string& input, const std::string& rules_path,
              const std::string& name, bool keep_surface,
              const std::string& out_path) {
  Presentation p = parse_presentation(slurp(input));
  auto sets = parse_rules_file(slurp(rules_path));
  auto it = sets.find(name);
  if (it == sets.end()) {
    std::string known;
    for (auto& [k, v] : sets)
      known += (known.empty() ? "" : ", ") + k;
    fail("unknown rule set '" + name + "' (have: " + known + ")");
  }
  Presentation q = substitute(p, it->second, keep_surface);
  emit(format_presentation_file(q), out_path);
  return 0;
}

int cmd_wirtinger(const std::string& input, unsigned base_edge,
                  const std::string& out_path) {
  PDCode pd = PDCode::parse(slurp(input));
  emit(format_presentation_file(pd.wirtinger(base_edge)), out_path);
  return 0;
}

int cmd_mirror(const std::string& input, const std::string& out_path) {
  PDCode pd = PDCode::parse(slurp(input));
  emit(pd.mirror().format(), out_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-group invariants of knot and handlebody-knot groups"};
  app.require_subcommand(1);

  CommonOpts common;
  std::string input, compare, rules_path, rule_name, meridian = "m1";
  std::string out_path;
  bool surjective = false, verbose = false, all_classes = false;
  bool keep_surface = false;
  unsigned base_edge = 1;

  auto* homcount = app.add_subcommand(
      "homcount", "count homomorphism classes into a finite group");
  homcount->add_option("input", input)->required();
  homcount->add_flag("--surjective", surjective, "surjective classes only");
  homcount->add_flag("-v,--verbose", verbose, "list every class");
  common.attach(homcount);

  auto* gimage = app.add_subcommand(
      "gimage", "G-image of meridians over the proper classes");
  gimage->add_option("input", input)->required();
  common.attach(gimage);

  auto* gindex = app.add_subcommand(
      "gindex", "G-index polynomial for an associated meridian");
  gindex->add_option("input", input)->required();
  gindex->add_option("--meridian", meridian, "associated meridian role tag");
  common.attach(gindex);

  auto* chirality = app.add_subcommand(
      "chirality", "order table of meridian and meridian*longitude images");
  chirality->add_option("input", input)->required();
  chirality->add_flag("--all-classes", all_classes,
                      "include non-surjective classes");
  chirality->add_option("--compare", compare, "second input to diff against");
  common.attach(chirality);

  auto* twist = app.add_subcommand(
      "twist", "rewrite selected meridians through a named rule set");
  twist->add_option("input", input)->required();
  twist->add_option("--rules", rules_path, "rules file")->required();
  twist->add_option("--name", rule_name, "rule set name")->required();
  twist->add_flag("--keep-surface", keep_surface,
                  "append the original meridian words as aux selectors");
  twist->add_option("--out", out_path, "output file (default stdout)");

  auto* wirtinger = app.add_subcommand(
      "wirtinger", "Wirtinger presentation with peripheral system from a PD");
  wirtinger->add_option("input", input)->required();
  wirtinger->add_option("--base", base_edge, "base edge label");
  wirtinger->add_option("--out", out_path, "output file (default stdout)");

  auto* mirror = app.add_subcommand("mirror", "mirror image of a PD code");
  mirror->add_option("input", input)->required();
  mirror->add_option("--out", out_path, "output file (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (homcount->parsed())
      return cmd_homcount(input, common, surjective, verbose);
    if (gimage->parsed())
      return cmd_gimage(input, common);
    if (gindex->parsed())
      return cmd_gindex(input, common, meridian);
    if (chirality->parsed())
      return cmd_chirality(input, common, all_classes, compare);
    if (twist->parsed())
      return cmd_twist(input, rules_path, rule_name, keep_surface, out_path);
    if (wirtinger->parsed())
      return cmd_wirtinger(input, base_edge, out_path);
    if (mirror->parsed())
      return cmd_mirror(input, out_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
