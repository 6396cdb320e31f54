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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include <unistd.h>

#include "corpus.h"
#include "parcoh/errors.h"
#include "parcoh/io.h"

namespace parcoh {
namespace {

namespace fs = std::filesystem;

class TempDir {
 public:
  TempDir() : path_(fs::temp_directory_path() / ("parcoh_io_" + std::to_string(::getpid()))) {
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  const fs::path& path() const { return path_; }
  fs::path write(const std::string& name, const std::string& text) const {
    const fs::path p = path_ / name;
    std::ofstream(p) << text;
    return p;
  }

 private:
  fs::path path_;
};

constexpr const char* kZ2 = R"({
  "elements": ["1", "g"],
  "inv": {"g": "g"},
  "max_degree": 3,
  "domain": {
    "2": [["1","1"],["1","g"],["g","1"],["g","g"]],
    "3": [["1","1","1"],["1","1","g"],["1","g","1"],["1","g","g"],
          ["g","1","1"],["g","1","g"],["g","g","1"],["g","g","g"]]
  },
  "product": [["1","1","1"],["1","g","g"],["g","1","g"],["g","g","1"]]
})";

TEST(PartialGroupIo, ParsesNamesAndIndices) {
  const PartialGroup t = parse_partial_group(kZ2);
  EXPECT_TRUE(t == bar(FiniteGroup::cyclic(2), 3));
  const PartialGroup by_index = parse_partial_group(R"({
    "elements": ["1", "g"], "inv": {"g": 1}, "max_degree": 2,
    "domain": {"2": [[0,0],[0,1],[1,0],[1,1]]},
    "product": [[0,0,0],[0,1,1],[1,0,1],[1,1,0]]})");
  EXPECT_TRUE(by_index == bar(FiniteGroup::cyclic(2), 2));
}

TEST(PartialGroupIo, RoundTripsCorpus) {
  for (const auto& nt : testing::table_corpus()) {
    const std::string text = partial_group_to_json(nt.table);
    EXPECT_TRUE(parse_partial_group(text) == nt.table) << nt.name;
    EXPECT_EQ(partial_group_to_json(parse_partial_group(text)), text) << nt.name;
  }
}

TEST(PartialGroupIo, StructuralErrors) {
  EXPECT_THROW(parse_partial_group("{"), StructuralError);
  EXPECT_THROW(parse_partial_group(R"({"elements": ["1", "g"], "product": []})"),
               StructuralError);
  EXPECT_THROW(parse_partial_group(R"({"elements": ["1", "g"], "inv": {"g": "h"},
                                       "product": []})"),
               StructuralError);
  EXPECT_THROW(parse_partial_group(R"({"elements": ["1"], "inv": {}, "max_degree": 2,
                                       "domain": {"5": []}, "product": [["1","1","1"]]})"),
               StructuralError);
  EXPECT_THROW(read_partial_group("/nonexistent/parcoh.json"), StructuralError);
}

TEST(PartialGroupIo, FileRoundTrip) {
  TempDir dir;
  const PartialGroup t = free_partial_group({"a", "b"});
  write_partial_group(dir.path() / "fab.json", t);
  EXPECT_TRUE(read_partial_group(dir.path() / "fab.json") == t);
}

TEST(FiniteGroupIo, RoundTrip) {
  const FiniteGroup s3 = FiniteGroup::symmetric3();
  const FiniteGroup back = parse_finite_group(finite_group_to_json(s3));
  EXPECT_EQ(back.names(), s3.names());
  EXPECT_EQ(back.table(), s3.table());
  EXPECT_THROW(parse_finite_group(R"({"elements": ["e", "a"], "table": [[0, 1], [1, 1]]})"),
               StructuralError);
}

TEST(ActionIo, InlineAndRelativeGroup) {
  TempDir dir;
  dir.write("z2.json", kZ2);
  const PGAction a = read_action(dir.write("a.json", R"({"group": "z2.json", "coeffs": [3],
                                                        "phi": {"g": [[2]]}})"));
  EXPECT_EQ(a.table.size(), 2u);
  EXPECT_EQ(a.coeffs.to_string(), "Z/3");
  EXPECT_TRUE(a.phi[1].equals(AbHom(a.coeffs, a.coeffs, IntMatrix{{2}})));
  EXPECT_TRUE(a.phi[0].equals(AbHom::identity(a.coeffs)));

  const PGAction inline_action =
      parse_action(std::string(R"({"coeffs": [2, 2], "group": )") + kZ2 + "}");
  EXPECT_EQ(inline_action.coeffs.rank(), 2u);
  EXPECT_THROW(parse_action(std::string(R"({"coeffs": [1], "group": )") + kZ2 + "}"),
               StructuralError);
  EXPECT_THROW(parse_action(R"({"coeffs": [2], "group": "missing.json"})", dir.path()),
               StructuralError);
}

TEST(TwistingPairIo, ParsesTAndEta) {
  TempDir dir;
  dir.write("z2.json", kZ2);
  const TwistingPair p = parse_twisting_pair(
      R"({"base": "z2.json", "fiber": "z2.json", "eta": [["g", "g", "g"]]})", dir.path());
  EXPECT_EQ(p.eta_of(1, 1), 1u);
  EXPECT_EQ(p.eta_of(0, 1), 0u);
  EXPECT_TRUE(validate_twisting_pair(p).ok());

  dir.write("z3.json", partial_group_to_json(bar(FiniteGroup::cyclic(3), 3)));
  const TwistingPair q = parse_twisting_pair(
      R"({"base": "z2.json", "fiber": "z3.json", "t": {"g": {"g": "g^2", "g^2": "g"}}})",
      dir.path());
  EXPECT_EQ(q.t[1], (ElementMap{0, 2, 1}));
  EXPECT_EQ(q.t[0], (ElementMap{0, 1, 2}));
  EXPECT_THROW(parse_twisting_pair(R"({"base": "z2.json", "fiber": "z3.json",
                                       "eta": [["g", "h", "g"]]})",
                                   dir.path()),
               StructuralError);
}

TEST(ElementMapIo, DefaultsToIdentity) {
  const PartialGroup fa = free_partial_group({"a"});
  EXPECT_EQ(parse_element_map(R"({"a": "~a", "~a": "a"})", fa, fa), (ElementMap{0, 2, 1}));
  EXPECT_EQ(parse_element_map("{}", fa, fa), (ElementMap{0, 1, 2}));
}

TEST(ProjectionIo, ListsBothMaps) {
  const std::string text = projection_to_json(twisted_product(testing::z4_pair(3)));
  EXPECT_NE(text.find("\"projection\""), std::string::npos);
  EXPECT_NE(text.find("\"fiber_inclusion\""), std::string::npos);
}

}  // namespace
}  // namespace parcoh
