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

#include "parcoh/io.h"

#include <fstream>
#include <map>
#include <sstream>
#include <utility>

#include <nlohmann/json.hpp>

#include "parcoh/errors.h"

namespace parcoh {

namespace {

using nlohmann::json;

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw StructuralError(std::string("invalid JSON: ") + e.what());
  }
}

const json& field(const json& j, const char* key, const char* what) {
  if (!j.is_object()) throw StructuralError(std::string(what) + " must be a JSON object");
  const auto it = j.find(key);
  if (it == j.end()) {
    throw StructuralError(std::string(what) + " is missing \"" + key + "\"");
  }
  return *it;
}

long long as_integer(const json& j, const std::string& what) {
  if (!j.is_number_integer()) throw StructuralError(what + " must be an integer");
  return j.get<long long>();
}

// Resolves a name or an index against a list of names.
class Names {
 public:
  explicit Names(const std::vector<std::string>& names) : names_(names) {
    for (std::size_t i = 0; i < names.size(); ++i) index_.emplace(names[i], i);
  }

  std::size_t operator()(const json& j, const std::string& what) const {
    if (j.is_string()) {
      const auto it = index_.find(j.get<std::string>());
      if (it == index_.end()) {
        throw StructuralError("unknown element \"" + j.get<std::string>() + "\" in " + what);
      }
      return it->second;
    }
    if (j.is_number_integer()) {
      const long long i = j.get<long long>();
      if (i < 0 || static_cast<std::size_t>(i) >= names_.size()) {
        throw StructuralError("element index " + std::to_string(i) + " out of range in " + what);
      }
      return static_cast<std::size_t>(i);
    }
    throw StructuralError("element in " + what + " must be a name or an index");
  }

 private:
  const std::vector<std::string>& names_;
  std::map<std::string, std::size_t, std::less<>> index_;
};

std::vector<std::string> element_names(const json& j, const char* what) {
  const json& e = field(j, "elements", what);
  if (!e.is_array()) throw StructuralError(std::string(what) + ": \"elements\" must be an array");
  std::vector<std::string> names;
  for (const json& x : e) {
    if (!x.is_string()) throw StructuralError(std::string(what) + ": element names must be strings");
    names.push_back(x.get<std::string>());
  }
  return names;
}

Word word_from(const json& j, const Names& names, const std::string& what) {
  if (!j.is_array()) throw StructuralError(what + " must be an array of elements");
  Word w;
  for (const json& x : j) w.push_back(static_cast<ElementId>(names(x, what)));
  return w;
}

PartialGroup partial_group_from(const json& j) {
  const char* what = "partial group";
  PartialGroup::Data d;
  d.names = element_names(j, what);
  const Names names(d.names);
  const std::size_t m = d.names.size();

  d.inverse.assign(m, kUndefined);
  if (m > 0) d.inverse[kUnit] = kUnit;
  const json& inv = field(j, "inv", what);
  if (!inv.is_object()) throw StructuralError("\"inv\" must be an object");
  for (const auto& [key, value] : inv.items()) {
    d.inverse[names(json(key), "inv")] = static_cast<ElementId>(names(value, "inv"));
  }
  for (std::size_t x = 0; x < m; ++x) {
    if (d.inverse[x] == kUndefined) {
      throw StructuralError("\"inv\" has no entry for \"" + d.names[x] + "\"");
    }
  }

  if (j.contains("max_degree")) {
    d.max_degree = static_cast<int>(as_integer(j["max_degree"], "max_degree"));
  }
  if (d.max_degree < 2) throw StructuralError("max_degree must be at least 2");
  d.domain.resize(static_cast<std::size_t>(d.max_degree) + 1);
  if (j.contains("domain")) {
    const json& dom = j["domain"];
    if (!dom.is_object()) throw StructuralError("\"domain\" must be an object");
    for (const auto& [key, level] : dom.items()) {
      int n = 0;
      try {
        n = std::stoi(key);
      } catch (const std::exception&) {
        throw StructuralError("domain key \"" + key + "\" is not a degree");
      }
      if (n < 2 || n > d.max_degree) {
        throw StructuralError("domain degree " + key + " is outside 2.." +
                              std::to_string(d.max_degree));
      }
      if (!level.is_array()) throw StructuralError("domain level " + key + " must be an array");
      for (const json& w : level) {
        Word word = word_from(w, names, "domain level " + key);
        if (word.size() != static_cast<std::size_t>(n)) {
          throw StructuralError("domain level " + key + " contains a word of length " +
                                std::to_string(word.size()));
        }
        d.domain[static_cast<std::size_t>(n)].push_back(std::move(word));
      }
    }
  }

  d.product.assign(m * m, kUndefined);
  const json& prod = field(j, "product", what);
  if (!prod.is_array()) throw StructuralError("\"product\" must be an array");
  for (const json& entry : prod) {
    const Word w = word_from(entry, names, "product");
    if (w.size() != 3) throw StructuralError("product entries must be [a, b, ab]");
    ElementId& slot = d.product[static_cast<std::size_t>(w[0]) * m + w[1]];
    if (slot != kUndefined && slot != w[2]) {
      throw StructuralError("product (" + d.names[w[0]] + "," + d.names[w[1]] +
                            ") is given twice");
    }
    slot = w[2];
  }
  return PartialGroup(std::move(d));
}

PartialGroup partial_group_at(const json& j, const std::filesystem::path& base_dir) {
  if (j.is_string()) return read_partial_group(base_dir / j.get<std::string>());
  return partial_group_from(j);
}

std::string quoted(const std::string& s) { return json(s).dump(); }

std::string word_json(const PartialGroup& t, WordView w) {
  std::string out = "[";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ", ";
    out += quoted(t.name(w[i]));
  }
  return out + "]";
}

ElementMap element_map_from(const json& j, const PartialGroup& source,
                             const PartialGroup& target, const std::string& what) {
  if (!j.is_object()) throw StructuralError(what + " must be an object");
  const Names src(source.names());
  const Names dst(target.names());
  ElementMap f(source.size(), kUndefined);
  for (const auto& [key, value] : j.items()) {
    f[src(json(key), what)] = static_cast<ElementId>(dst(value, what));
  }
  for (ElementId x = 0; x < f.size(); ++x) {
    if (f[x] != kUndefined) continue;
    if (source.size() != target.size()) {
      throw StructuralError(what + " has no image for \"" + source.name(x) + "\"");
    }
    f[x] = x;
  }
  return f;
}

}  // namespace

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw StructuralError("cannot read " + path.string());
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

PartialGroup parse_partial_group(std::string_view text) {
  return partial_group_from(parse_json(text));
}

PartialGroup read_partial_group(const std::filesystem::path& path) {
  return parse_partial_group(read_text(path));
}

std::string partial_group_to_json(const PartialGroup& t) {
  std::ostringstream out;
  out << "{\n  \"elements\": [";
  for (ElementId x = 0; x < t.size(); ++x) out << (x ? ", " : "") << quoted(t.name(x));
  out << "],\n  \"inv\": {";
  bool first = true;
  for (ElementId x = 1; x < t.size(); ++x) {
    out << (first ? "" : ", ") << quoted(t.name(x)) << ": " << quoted(t.name(t.inverse(x)));
    first = false;
  }
  out << "},\n  \"max_degree\": " << t.max_degree() << ",\n  \"domain\": {";
  for (int n = 2; n <= t.max_degree(); ++n) {
    out << (n > 2 ? "," : "") << "\n    \"" << n << "\": [";
    const std::vector<Word>& words = t.words(n);
    for (std::size_t i = 0; i < words.size(); ++i) {
      out << (i ? ",\n      " : "\n      ") << word_json(t, words[i]);
    }
    out << (words.empty() ? "]" : "\n    ]");
  }
  out << "\n  },\n  \"product\": [";
  const std::vector<Word>& pairs = t.words(2);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const Word triple{pairs[i][0], pairs[i][1], t.product(pairs[i][0], pairs[i][1])};
    out << (i ? ",\n    " : "\n    ") << word_json(t, triple);
  }
  out << (pairs.empty() ? "]" : "\n  ]") << "\n}\n";
  return out.str();
}

void write_partial_group(const std::filesystem::path& path, const PartialGroup& table) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw StructuralError("cannot write " + path.string());
  out << partial_group_to_json(table);
}

FiniteGroup parse_finite_group(std::string_view text) {
  const json j = parse_json(text);
  std::vector<std::string> names = element_names(j, "group");
  const Names lookup(names);
  const json& rows = field(j, "table", "group");
  if (!rows.is_array()) throw StructuralError("group \"table\" must be an array of rows");
  std::vector<std::vector<std::size_t>> table;
  for (const json& row : rows) {
    if (!row.is_array()) throw StructuralError("group \"table\" rows must be arrays");
    std::vector<std::size_t> r;
    for (const json& x : row) r.push_back(lookup(x, "group table"));
    table.push_back(std::move(r));
  }
  return FiniteGroup(std::move(names), std::move(table));
}

FiniteGroup read_finite_group(const std::filesystem::path& path) {
  return parse_finite_group(read_text(path));
}

std::string finite_group_to_json(const FiniteGroup& g) {
  nlohmann::ordered_json j;
  j["elements"] = g.names();
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : g.table()) {
    nlohmann::ordered_json r = nlohmann::ordered_json::array();
    for (std::size_t x : row) r.push_back(g.names()[x]);
    rows.push_back(std::move(r));
  }
  j["table"] = std::move(rows);
  return j.dump(2) + "\n";
}

PGAction parse_action(std::string_view text, const std::filesystem::path& base_dir) {
  const json j = parse_json(text);
  PartialGroup table = partial_group_at(field(j, "group", "action"), base_dir);
  const json& c = field(j, "coeffs", "action");
  if (!c.is_array()) throw StructuralError("\"coeffs\" must be an array of cyclic orders");
  std::vector<Integer> orders;
  for (const json& m : c) orders.emplace_back(as_integer(m, "coefficient order"));
  FinAbGroup coeffs(std::move(orders));

  std::vector<AbHom> phi(table.size(), AbHom::identity(coeffs));
  if (j.contains("phi")) {
    const json& p = j["phi"];
    if (!p.is_object()) throw StructuralError("\"phi\" must be an object");
    const Names names(table.names());
    const std::size_t r = coeffs.rank();
    for (const auto& [key, mat] : p.items()) {
      const std::size_t x = names(json(key), "phi");
      if (!mat.is_array() || mat.size() != r) {
        throw StructuralError("phi(" + key + ") must be a " + std::to_string(r) + "x" +
                              std::to_string(r) + " matrix");
      }
      IntMatrix m(r, r);
      for (std::size_t a = 0; a < r; ++a) {
        if (!mat[a].is_array() || mat[a].size() != r) {
          throw StructuralError("phi(" + key + ") must be a " + std::to_string(r) + "x" +
                                std::to_string(r) + " matrix");
        }
        for (std::size_t b = 0; b < r; ++b) m(a, b) = as_integer(mat[a][b], "phi entry");
      }
      phi[x] = AbHom(coeffs, coeffs, std::move(m)).reduced();
    }
  }
  return PGAction{std::move(table), std::move(coeffs), std::move(phi)};
}

PGAction read_action(const std::filesystem::path& path) {
  return parse_action(read_text(path), path.parent_path());
}

TwistingPair parse_twisting_pair(std::string_view text, const std::filesystem::path& base_dir) {
  const json j = parse_json(text);
  const PartialGroup base = partial_group_at(field(j, "base", "twisting pair"), base_dir);
  const PartialGroup fiber = partial_group_at(field(j, "fiber", "twisting pair"), base_dir);
  TwistingPair pair = trivial_twisting_pair(base, fiber);
  const Names base_names(base.names());
  const Names fiber_names(fiber.names());
  if (j.contains("t")) {
    if (!j["t"].is_object()) throw StructuralError("\"t\" must be an object");
    for (const auto& [key, value] : j["t"].items()) {
      pair.t[base_names(json(key), "t")] = element_map_from(value, fiber, fiber, "t(" + key + ")");
    }
  }
  if (j.contains("eta")) {
    if (!j["eta"].is_array()) throw StructuralError("\"eta\" must be an array of [g, h, x]");
    for (const json& entry : j["eta"]) {
      if (!entry.is_array() || entry.size() != 3) {
        throw StructuralError("\"eta\" entries must be [g, h, x]");
      }
      const Word gh{static_cast<ElementId>(base_names(entry[0], "eta")),
                    static_cast<ElementId>(base_names(entry[1], "eta"))};
      const std::optional<std::size_t> i = base.index_of(gh);
      if (!i) throw StructuralError("eta given on " + base.format_word(gh) + ", not a 2-simplex");
      pair.eta[*i] = static_cast<ElementId>(fiber_names(entry[2], "eta"));
    }
  }
  return pair;
}

TwistingPair read_twisting_pair(const std::filesystem::path& path) {
  return parse_twisting_pair(read_text(path), path.parent_path());
}

ElementMap parse_element_map(std::string_view text, const PartialGroup& source,
                             const PartialGroup& target) {
  return element_map_from(parse_json(text), source, target, "element map");
}

std::vector<ElementMap> parse_outer_action(std::string_view text, const PartialGroup& base,
                                           const PartialGroup& fiber) {
  const json j = parse_json(text);
  if (!j.is_object()) throw StructuralError("outer action must be an object");
  std::vector<ElementMap> out(base.size(), identity_map(fiber));
  const Names names(base.names());
  for (const auto& [key, value] : j.items()) {
    out[names(json(key), "outer action")] =
        element_map_from(value, fiber, fiber, "outer action of " + key);
  }
  return out;
}

std::string projection_to_json(const ExtensionTable& e) {
  nlohmann::ordered_json j;
  nlohmann::ordered_json proj = nlohmann::ordered_json::object();
  for (ElementId a = 0; a < e.total.size(); ++a) {
    proj[e.total.name(a)] = e.base.name(e.projection[a]);
  }
  nlohmann::ordered_json incl = nlohmann::ordered_json::object();
  for (ElementId x = 0; x < e.fiber.size(); ++x) {
    incl[e.fiber.name(x)] = e.total.name(e.fiber_inclusion[x]);
  }
  j["projection"] = std::move(proj);
  j["fiber_inclusion"] = std::move(incl);
  return j.dump(2) + "\n";
}

}  // namespace parcoh
