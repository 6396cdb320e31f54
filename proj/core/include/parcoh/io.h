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

#ifndef PARCOH_IO_H_
#define PARCOH_IO_H_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "parcoh/cohomology.h"
#include "parcoh/constructions.h"
#include "parcoh/extensions.h"
#include "parcoh/homotopy.h"
#include "parcoh/partial_group.h"

namespace parcoh {

// All readers throw StructuralError on unreadable files, malformed JSON, or
// data that does not fit the schema. Elements may be given by name or index.
// Paths inside a file are resolved relative to `base_dir`.

// {"elements", "inv", "max_degree", "domain": {"2": [...], ...}, "product"}
PartialGroup parse_partial_group(std::string_view text);
PartialGroup read_partial_group(const std::filesystem::path& path);
std::string partial_group_to_json(const PartialGroup& table);
void write_partial_group(const std::filesystem::path& path, const PartialGroup& table);

// {"elements", "table"}
FiniteGroup parse_finite_group(std::string_view text);
FiniteGroup read_finite_group(const std::filesystem::path& path);
std::string finite_group_to_json(const FiniteGroup& group);

// {"group": <partial group or path>, "coeffs": [...], "phi": {"x": matrix}}
PGAction parse_action(std::string_view text, const std::filesystem::path& base_dir = {});
PGAction read_action(const std::filesystem::path& path);

// {"base", "fiber": <partial group or path>, "t": {g: {x: y}}, "eta": [[g, h, x]]}
TwistingPair parse_twisting_pair(std::string_view text,
                                 const std::filesystem::path& base_dir = {});
TwistingPair read_twisting_pair(const std::filesystem::path& path);

// {"x": "y", ...}; unlisted elements map to themselves.
ElementMap parse_element_map(std::string_view text, const PartialGroup& source,
                             const PartialGroup& target);

// {g: {x: y}} over bar(h) and bar(k); unlisted entries are identities.
std::vector<ElementMap> parse_outer_action(std::string_view text, const PartialGroup& base,
                                           const PartialGroup& fiber);

// Sidecar written next to an emitted total space.
std::string projection_to_json(const ExtensionTable& e);

std::string read_text(const std::filesystem::path& path);

}  // namespace parcoh

#endif  // PARCOH_IO_H_
