// Copyright 2026 The Authors.
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

#ifndef WHITNEY_IO_HPP_
#define WHITNEY_IO_HPP_

#include <map>
#include <string>

#include <nlohmann/json.hpp>

#include "whitney/matroid.hpp"
#include "whitney/superalgebra.hpp"
#include "whitney/tableaux.hpp"
#include "whitney/whitney.hpp"

namespace whitney {

using Json = nlohmann::json;

// Matroid files: {"n": int, "circuits": [[int, ...], ...]} or
// {"matrix": {"rows": [[rational, ...], ...]}} with rationals as "p/q"
// strings or plain JSON integers. Errors surface as std::invalid_argument.
Matroid matroid_from_json(const Json& j);
Json matroid_to_json(const Matroid& m);
Matroid load_matroid_file(const std::string& path);

RatMatrix matrix_from_json(const Json& j);
Json matrix_to_json(const RatMatrix& m);

// Canonical element form: list of {"coeff": "p/q", "pairs": [[letter,
// place], ...]} sorted by monomial.
Json element_to_json(const Element& e);
Element element_from_json(const Json& j);

Json bidegree_to_json(const Bidegree& d);
Bidegree bidegree_from_json(const Json& j);

Json tableau_to_json(const Tableau& t);
Tableau tableau_from_json(const Json& j);
Json tab_pair_to_json(const TabPair& p);
TabPair tab_pair_from_json(const Json& j);

Json graded_piece_to_json(const Bidegree& d, const GradedPieceReport& report);

// Multiplicity table rows, one per partition label of n: the
// character-method count, the nbc count (hooks only, null elsewhere), and
// the dominance predicate against the rank partition.
Json multiplicity_report_json(const Matroid& m,
                              const std::map<Partition, long>& table);
std::string multiplicity_report_csv(const Matroid& m,
                                    const std::map<Partition, long>& table);

Json read_json_file(const std::string& path);

}  // namespace whitney

#endif  // WHITNEY_IO_HPP_
