// Copyright 2026 The Parcoh Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.h"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "parcoh/cohomology.h"
#include "parcoh/constructions.h"
#include "parcoh/errors.h"
#include "parcoh/extensions.h"
#include "parcoh/homotopy.h"
#include "parcoh/io.h"
#include "parcoh/partial_group.h"

namespace parcoh::cli {

namespace {

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

struct Report {
  std::string text;
  Json json = Json::object();
  int code = kExitOk;
};

std::string degree_note(int n) { return "up to degree " + std::to_string(n); }

Json names_of(const PartialGroup& t, const std::vector<ElementId>& xs) {
  Json a = Json::array();
  for (ElementId x : xs) a.push_back(t.name(x));
  return a;
}

std::string set_text(const PartialGroup& t, const std::vector<ElementId>& xs) {
  std::string s = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? ", " : "") + t.name(xs[i]);
  return s + "}";
}

Json factors_json(const FinAbGroup& g) {
  Json a = Json::array();
  for (const Integer& m : g.invariant_factors()) a.push_back(m.str());
  return a;
}

std::string map_text(const PartialGroup& t, const ElementMap& f) {
  std::string s;
  for (ElementId x = 1; x < f.size(); ++x) {
    s += (x > 1 ? ", " : "") + t.name(x) + " -> " + t.name(f[x]);
  }
  return s.empty() ? "(identity)" : s;
}

Json map_json(const PartialGroup& t, const ElementMap& f) {
  Json j = Json::object();
  for (ElementId x = 0; x < f.size(); ++x) j[t.name(x)] = t.name(f[x]);
  return j;
}

std::string read_map_argument(const std::string& arg) {
  if (!arg.empty() && arg.front() == '{') return arg;
  return read_text(arg);
}

// ---------------------------------------------------------------------------

Report do_validate(const std::string& path) {
  const PartialGroup t = read_partial_group(path);
  const ValidationReport r = validate(t);
  Report out;
  Json violations = Json::array();
  std::ostringstream text;
  for (const Violation& v : r.violations) {
    violations.push_back({{"kind", std::string(to_string(v.kind))},
                          {"witness", t.format_word(v.witness)},
                          {"detail", v.detail}});
    text << "  " << to_string(v.kind) << " at " << t.format_word(v.witness) << ": " << v.detail
         << "\n";
  }
  out.json = {{"valid", r.ok()},
              {"max_degree", t.max_degree()},
              {"elements", t.size()},
              {"violations", violations},
              {"suppressed", r.suppressed}};
  if (r.ok()) {
    out.text = "valid " + degree_note(t.max_degree()) + "\n";
  } else {
    out.text = "invalid " + degree_note(t.max_degree()) + ": " +
               std::to_string(r.violations.size() + r.suppressed) + " violation(s)\n" +
               text.str();
    if (r.suppressed) out.text += "  ... " + std::to_string(r.suppressed) + " more\n";
    out.code = kExitMathFailure;
  }
  return out;
}

Report emit_table(const PartialGroup& t, const std::string& output) {
  Report out;
  if (output.empty()) {
    out.text = partial_group_to_json(t);
    out.json = Json::parse(out.text);
    return out;
  }
  write_partial_group(output, t);
  out.text = "wrote " + output + ": " + std::to_string(t.size()) + " elements, |D_2| = " +
             std::to_string(t.words(2).size()) + "\n";
  out.json = {{"output", output}, {"elements", t.size()}, {"d2", t.words(2).size()}};
  return out;
}

Report do_cohomology(const std::string& path, int degree, const std::string& theory) {
  const PGAction action = read_action(path);
  Report out;
  if (const CheckResult r = validate_action(action); !r) {
    out.text = "invalid action at " + action.table.format_word(r.witness) + ": " + r.reason + "\n";
    out.json = {{"valid", false}, {"witness", action.table.format_word(r.witness)},
                {"reason", r.reason}};
    out.code = kExitMathFailure;
    return out;
  }
  if (degree < 0) throw StructuralError("--degree must be nonnegative");
  if (degree + 1 > action.table.max_degree()) {
    throw TruncationError("H^" + std::to_string(degree) + " needs simplices of degree " +
                          std::to_string(degree + 1) + " but the table stops at " +
                          std::to_string(action.table.max_degree()) +
                          "; rebuild it with --max-degree " + std::to_string(degree + 1));
  }
  const std::string h = "H^" + std::to_string(degree);
  out.json = {{"degree", degree}, {"theory", theory}};
  if (theory == "action") {
    const FinAbGroup g = cohomology_group(action, degree);
    out.text = h + " = " + g.to_string() + "\n";
    out.json["group"] = g.to_string();
    out.json["invariant_factors"] = factors_json(g);
  } else if (theory == "local") {
    const FinAbGroup g = local_cohomology_group(local_system_from_action(action), degree);
    out.text = h + " = " + g.to_string() + "\n";
    out.json["group"] = g.to_string();
    out.json["invariant_factors"] = factors_json(g);
  } else {
    const TheoryComparison c = compare_theories(action, degree);
    out.text = h + " = " + c.action_theory.to_string() + " (action)\n" + h + " = " +
               c.local_theory.to_string() + " (local coefficients)\n" +
               (c.equal ? "theories agree\n" : "theories DISAGREE\n");
    out.json["action"] = c.action_theory.to_string();
    out.json["local"] = c.local_theory.to_string();
    out.json["equal"] = c.equal;
    if (!c.equal) out.code = kExitMathFailure;
  }
  return out;
}

Report do_normalizer(const std::string& path) {
  const PartialGroup t = read_partial_group(path);
  std::vector<ElementId> n;
  for (const NormalizerEntry& e : normalizer(t)) n.push_back(e.eta);
  const std::vector<ElementId> z = center(t);
  Report out;
  out.text = "N = " + set_text(t, n) + "\nZ = " + set_text(t, z) + "\n(" +
             degree_note(t.max_degree()) + ")\n";
  out.json = {{"normalizer", names_of(t, n)},
              {"center", names_of(t, z)},
              {"max_degree", t.max_degree()}};
  return out;
}

Report do_aut(const std::string& path) {
  const PartialGroup t = read_partial_group(path);
  const OuterClasses oc = outer_classes(t);
  Report out;
  std::ostringstream text;
  text << "|Aut| = " << oc.automorphisms.size() << "\n|N| = " << oc.normalizer.size()
       << "\n|Z| = " << oc.center.size() << "\n|Out| = " << oc.classes.size()
       << "\nexact: " << (oc.sequence_exact ? "yes" : "NO") << " ("
       << degree_note(t.max_degree()) << ")\nautomorphisms:\n";
  Json autos = Json::array();
  for (std::size_t i = 0; i < oc.automorphisms.size(); ++i) {
    text << "  #" << i << " [class " << oc.class_of[i] << "] "
         << map_text(t, oc.automorphisms[i]) << "\n";
    autos.push_back({{"map", map_json(t, oc.automorphisms[i])}, {"class", oc.class_of[i]}});
  }
  out.text = text.str();
  std::vector<ElementId> n;
  for (const NormalizerEntry& e : oc.normalizer) n.push_back(e.eta);
  out.json = {{"aut", oc.automorphisms.size()},
              {"normalizer", names_of(t, n)},
              {"center", names_of(t, oc.center)},
              {"out", oc.classes.size()},
              {"exact", oc.sequence_exact},
              {"max_degree", t.max_degree()},
              {"automorphisms", autos}};
  if (!oc.sequence_exact) out.code = kExitMathFailure;
  return out;
}

Report do_homotopy(const std::string& path, const std::string& eta_name,
                   const std::string& f_arg, const std::string& g_arg) {
  const PartialGroup t = read_partial_group(path);
  const std::optional<ElementId> eta = t.find(eta_name);
  if (!eta) throw StructuralError("unknown element \"" + eta_name + "\" for --eta");
  const ElementMap f = f_arg.empty() ? identity_map(t) : parse_element_map(read_map_argument(f_arg), t, t);
  const ElementMap g = g_arg.empty() ? identity_map(t) : parse_element_map(read_map_argument(g_arg), t, t);
  Report out;
  for (const auto& [label, map] : {std::pair{"f", &f}, std::pair{"g", &g}}) {
    if (const CheckResult r = is_homomorphism(t, t, *map); !r) {
      out.text = std::string(label) + " is not a homomorphism at " + t.format_word(r.witness) +
                 ": " + r.reason + "\n";
      out.json = {{"homotopy", false}, {"map", label}, {"witness", t.format_word(r.witness)},
                  {"reason", r.reason}};
      out.code = kExitMathFailure;
      return out;
    }
  }
  const CheckResult r = check_homotopy(t, t, f, g, *eta);
  if (r) {
    out.text = "f <-" + eta_name + "- g holds " + degree_note(t.max_degree()) + "\n";
    out.json = {{"homotopy", true}, {"eta", eta_name}, {"max_degree", t.max_degree()}};
  } else {
    out.text = "no homotopy with eta = " + eta_name + ": at " + t.format_word(r.witness) + ", " +
               r.reason + "\n";
    out.json = {{"homotopy", false}, {"eta", eta_name}, {"witness", t.format_word(r.witness)},
                {"reason", r.reason}};
    out.code = kExitMathFailure;
  }
  return out;
}

Report pair_violations(const TwistingPair& pair, const TwistingReport& report) {
  Report out;
  Json list = Json::array();
  out.text = "invalid twisting pair: " + std::to_string(report.violations.size()) +
             " violation(s)\n";
  for (const TwistingViolation& v : report.violations) {
    out.text += "  " + std::string(to_string(v.condition)) + " at " +
                pair.base.format_word(v.witness) + ": " + v.detail + "\n";
    list.push_back({{"condition", std::string(to_string(v.condition))},
                    {"witness", pair.base.format_word(v.witness)},
                    {"detail", v.detail}});
  }
  out.json = {{"valid", false}, {"violations", list}};
  out.code = kExitMathFailure;
  return out;
}

Report do_extend(const std::string& path, const std::string& output, int max_degree) {
  const TwistingPair pair = read_twisting_pair(path);
  const TwistingReport report = validate_twisting_pair(pair);
  if (!report.ok()) return pair_violations(pair, report);
  const ExtensionTable e = twisted_product(pair, max_degree);
  Report out;
  const ValidationReport v = validate(e.total);
  const CheckResult c = check_extension(e);
  if (!v.ok() || !c) {
    out.text = "total space fails: " +
               (v.ok() ? c.reason : std::string(to_string(v.violations.front().kind))) + "\n";
    out.json = {{"valid", false}, {"reason", out.text}};
    out.code = kExitMathFailure;
    return out;
  }
  if (output.empty()) {
    out.text = partial_group_to_json(e.total);
    out.json = Json::parse(out.text);
    return out;
  }
  fs::path sidecar = output;
  sidecar.replace_extension(".projection.json");
  write_partial_group(output, e.total);
  std::ofstream(sidecar) << projection_to_json(e);
  out.text = "wrote " + output + " (" + std::to_string(e.total.size()) + " elements, " +
             degree_note(e.total.max_degree()) + ") and " + sidecar.string() + "\n";
  out.json = {{"output", output}, {"projection", sidecar.string()},
              {"elements", e.total.size()}, {"max_degree", e.total.max_degree()}};
  return out;
}

// Order histogram and commutativity of a total space that is a group.
std::string describe_group(const PartialGroup& t, Json& j) {
  std::map<std::size_t, std::size_t> orders;
  bool abelian = true;
  for (ElementId x = 0; x < t.size(); ++x) {
    std::size_t k = 1;
    for (ElementId p = x; p != kUnit && p != kUndefined; p = t.product(p, x)) ++k;
    ++orders[k];
    for (ElementId y = 0; y < t.size(); ++y) abelian = abelian && t.product(x, y) == t.product(y, x);
  }
  std::string s = "|E| = " + std::to_string(t.size()) + (abelian ? ", abelian" : ", nonabelian") +
                  ", element orders";
  Json hist = Json::object();
  for (const auto& [order, count] : orders) {
    s += " " + std::to_string(order) + "^" + std::to_string(count);
    hist[std::to_string(order)] = count;
  }
  j = {{"order", t.size()}, {"abelian", abelian}, {"element_orders", hist}};
  return s;
}

Report do_classify(const std::string& fiber_path, const std::string& base_path,
                   const std::string& alpha_path, int max_degree) {
  const FiniteGroup k = read_finite_group(fiber_path);
  const FiniteGroup h = read_finite_group(base_path);
  std::vector<ElementMap> alpha;
  if (!alpha_path.empty()) {
    alpha = parse_outer_action(read_map_argument(alpha_path), bar(h, max_degree),
                               bar(k, max_degree));
  }
  const ExtensionClassification c = classify_group_extensions(k, h, alpha, max_degree);
  Report out;
  out.json = {{"classes", c.representatives.size()}, {"h2", c.h2.to_string()},
              {"twisting_cochains", c.twisting_cochains}};
  if (c.representatives.empty()) {
    out.text = "no extension found up to search bound\nH^2 = " + c.h2.to_string() + "\n";
    out.code = kExitMathFailure;
    return out;
  }
  std::ostringstream text;
  text << "classes: " << c.representatives.size() << "\nH^2 = " << c.h2.to_string() << "\n";
  Json reps = Json::array();
  for (std::size_t i = 0; i < c.representatives.size(); ++i) {
    Json j;
    text << "  [" << i + 1 << "] " << describe_group(c.representatives[i].total, j) << "\n";
    reps.push_back(j);
  }
  out.json["representatives"] = reps;
  const bool torsor = c.h2.is_finite() && Integer(c.representatives.size()) == c.h2.order();
  text << (torsor ? "class count equals |H^2|\n" : "class count differs from |H^2|\n");
  out.json["torsor"] = torsor;
  if (!torsor) out.code = kExitMathFailure;
  out.text = text.str();
  return out;
}

Report do_count_free(std::size_t x, std::size_t y) {
  const FreeExtensionCount c = count_free_extensions(x, y);
  Report out;
  out.json = {{"x", x}, {"y", y}, {"enumerated", c.enumerated.str()},
              {"formula", c.formula.str()}};
  if (c.enumerated == c.formula) {
    out.text = c.enumerated.str() + "\n";
  } else {
    out.text = "enumerated " + c.enumerated.str() + ", formula " + c.formula.str() + "\n";
    out.code = kExitMathFailure;
  }
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite partial groups: validation, cohomology and extensions", "parcoh"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "Report format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  std::function<Report()> action;
  std::string path, path2, output, eta, f_map, g_map, theory = "action", group_path;
  std::string fiber_path, base_path, alpha_path;
  std::vector<std::string> generators;
  int degree = 0;
  int max_degree = kDefaultMaxDegree;
  int classify_degree = 3;
  int extend_degree = 0;
  std::size_t nx = 0, ny = 0;

  auto* validate_cmd = app.add_subcommand("validate", "Check the partial-group axioms");
  validate_cmd->add_option("file", path, "Partial-group file")->required();
  validate_cmd->callback([&] { action = [&] { return do_validate(path); }; });

  auto* build = app.add_subcommand("build", "Construct a partial group");
  build->require_subcommand(1);
  auto* build_bar = build->add_subcommand("bar", "Bar construction of a finite group");
  build_bar->add_option("--group", group_path, "Group file")->required();
  build_bar->add_option("--max-degree", max_degree, "Truncation degree")->capture_default_str();
  build_bar->add_option("-o,--output", output, "Output file (default: stdout)");
  build_bar->callback([&] {
    action = [&] { return emit_table(bar(read_finite_group(group_path), max_degree), output); };
  });
  auto* build_free = build->add_subcommand("free", "Free partial group on generators");
  build_free->add_option("--generators", generators, "Generator names")
      ->delimiter(',')
      ->expected(0, -1);
  build_free->add_option("--max-degree", max_degree, "Truncation degree")->capture_default_str();
  build_free->add_option("-o,--output", output, "Output file (default: stdout)");
  build_free->callback([&] {
    action = [&] { return emit_table(free_partial_group(generators, max_degree), output); };
  });
  auto* build_product = build->add_subcommand("product", "Cartesian product of two tables");
  build_product->add_option("first", path, "Partial-group file")->required();
  build_product->add_option("second", path2, "Partial-group file")->required();
  build_product->add_option("-o,--output", output, "Output file (default: stdout)");
  build_product->callback([&] {
    action = [&] {
      return emit_table(product(read_partial_group(path), read_partial_group(path2)), output);
    };
  });
  auto* build_twisted = build->add_subcommand("twisted", "Twisted product of a twisting pair");
  build_twisted->add_option("pair", path, "Twisting-pair file")->required();
  build_twisted->add_option("--max-degree", extend_degree, "Truncation degree");
  build_twisted->add_option("-o,--output", output, "Output file (default: stdout)");
  build_twisted->callback([&] {
    action = [&] {
      const TwistingPair pair = read_twisting_pair(path);
      const TwistingReport r = validate_twisting_pair(pair);
      if (!r.ok()) return pair_violations(pair, r);
      return emit_table(twisted_product(pair, extend_degree).total, output);
    };
  });

  auto* coh = app.add_subcommand("cohomology", "Cohomology of a partial group with coefficients");
  coh->add_option("action", path, "Action file")->required();
  coh->add_option("--degree", degree, "Cohomological degree")->required();
  coh->add_option("--theory", theory, "action, local, or both")
      ->check(CLI::IsMember({"action", "local", "both"}))
      ->capture_default_str();
  coh->callback([&] { action = [&] { return do_cohomology(path, degree, theory); }; });

  auto* norm = app.add_subcommand("normalizer", "Normalizer and center");
  norm->add_option("file", path, "Partial-group file")->required();
  norm->callback([&] { action = [&] { return do_normalizer(path); }; });

  auto* aut = app.add_subcommand("aut", "Automorphisms and outer classes");
  aut->add_option("file", path, "Partial-group file")->required();
  aut->callback([&] { action = [&] { return do_aut(path); }; });

  auto* hom = app.add_subcommand("homotopy", "Check a homotopy f <-eta- g");
  hom->add_option("file", path, "Partial-group file")->required();
  hom->add_option("--eta", eta, "Homotopy element")->required();
  hom->add_option("--f", f_map, "Element map (file or inline JSON, default identity)");
  hom->add_option("--g", g_map, "Element map (file or inline JSON, default identity)");
  hom->callback([&] { action = [&] { return do_homotopy(path, eta, f_map, g_map); }; });

  auto* extend = app.add_subcommand("extend", "Build the extension of a twisting pair");
  extend->add_option("pair", path, "Twisting-pair file")->required();
  extend->add_option("-o,--output", output, "Output file; a .projection.json sidecar is added");
  extend->add_option("--max-degree", extend_degree, "Truncation degree");
  extend->callback([&] { action = [&] { return do_extend(path, output, extend_degree); }; });

  auto* classify = app.add_subcommand("classify", "Classify extensions of finite groups");
  classify->add_option("--fiber", fiber_path, "Kernel group file")->required();
  classify->add_option("--base", base_path, "Quotient group file")->required();
  classify->add_option("--alpha", alpha_path, "Outer action (file or inline JSON)");
  classify->add_option("--max-degree", classify_degree, "Truncation degree")
      ->capture_default_str();
  classify->callback([&] {
    action = [&] { return do_classify(fiber_path, base_path, alpha_path, classify_degree); };
  });

  auto* count = app.add_subcommand("count-free", "Count extensions of free partial groups");
  count->add_option("--x", nx, "Generators of the base")->required();
  count->add_option("--y", ny, "Generators of the fiber")->required();
  count->callback([&] { action = [&] { return do_count_free(nx, ny); }; });

  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--format") {
      ++i;
      continue;
    }
    if (args[i].empty() || args[i][0] == '-') continue;
    if (!app.get_subcommand_no_throw(args[i])) {
      std::string verbs;
      for (const CLI::App* sub : app.get_subcommands({})) {
        verbs += (verbs.empty() ? "" : ", ") + sub->get_name();
      }
      err << "error: unknown command \"" << args[i] << "\" (expected one of " << verbs << ")\n";
      return kExitStructural;
    }
    break;
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitStructural;
  }

  try {
    const Report r = action();
    if (format == "json") {
      out << r.json.dump(2) << "\n";
    } else {
      out << r.text;
    }
    return r.code;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return kExitMathFailure;
  } catch (const ComplexError& e) {
    err << "error: " << e.what() << "\n";
    return kExitMathFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitStructural;
  }
}

}  // namespace parcoh::cli
