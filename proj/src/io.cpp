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

#include "whitney/io.hpp"

#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "whitney/symrep.hpp"

namespace whitney {

namespace {

Rat rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rat(j.get<long long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw std::invalid_argument("rational entries must be integers or strings");
}

std::vector<int> int_vector_from_json(const Json& j, const char* what) {
  if (!j.is_array()) {
    throw std::invalid_argument(std::string(what) + " must be an array");
  }
  std::vector<int> out;
  for (const Json& v : j) {
    if (!v.is_number_integer()) {
      throw std::invalid_argument(std::string(what) + " entries must be ints");
    }
    out.push_back(v.get<int>());
  }
  return out;
}

}  // namespace

Matroid matroid_from_json(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("matroid: expected object");
  if (j.contains("matrix")) {
    return Matroid::from_matrix(matrix_from_json(j.at("matrix")));
  }
  if (!j.contains("n") || !j.at("n").is_number_integer()) {
    throw std::invalid_argument("matroid: missing n");
  }
  const int n = j.at("n").get<int>();
  std::vector<std::vector<int>> circuits;
  if (j.contains("circuits")) {
    for (const Json& c : j.at("circuits")) {
      circuits.push_back(int_vector_from_json(c, "circuit"));
    }
  }
  return Matroid::from_circuits(n, std::move(circuits));
}

Json matroid_to_json(const Matroid& m) {
  Json j;
  j["n"] = m.n();
  j["circuits"] = Json::array();
  for (const auto& c : m.circuits()) j["circuits"].push_back(c);
  return j;
}

Matroid load_matroid_file(const std::string& path) {
  return matroid_from_json(read_json_file(path));
}

RatMatrix matrix_from_json(const Json& j) {
  const Json& rows = j.is_object() && j.contains("rows") ? j.at("rows") : j;
  if (!rows.is_array() || rows.empty()) {
    throw std::invalid_argument("matrix: expected a nonempty row array");
  }
  RatMatrix m;
  m.rows = rows.size();
  for (const Json& row : rows) {
    if (!row.is_array() || (m.cols != 0 && row.size() != m.cols)) {
      throw std::invalid_argument("matrix: ragged rows");
    }
    m.cols = row.size();
    std::vector<Rat> out;
    out.reserve(row.size());
    for (const Json& v : row) out.push_back(rational_from_json(v));
    m.a.push_back(std::move(out));
  }
  if (m.cols == 0) throw std::invalid_argument("matrix: empty rows");
  return m;
}

Json matrix_to_json(const RatMatrix& m) {
  Json rows = Json::array();
  for (const auto& row : m.a) {
    Json r = Json::array();
    for (const Rat& v : row) r.push_back(rational_string(v));
    rows.push_back(std::move(r));
  }
  return Json{{"rows", std::move(rows)}};
}

Json element_to_json(const Element& e) {
  Json out = Json::array();
  for (const auto& [mono, coeff] : e.terms()) {
    Json pairs = Json::array();
    for (const auto& [letter, place] : mono) {
      pairs.push_back(Json::array({letter, place}));
    }
    out.push_back(Json{{"coeff", rational_string(coeff)},
                       {"pairs", std::move(pairs)}});
  }
  return out;
}

Element element_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("element: expected array");
  Element e;
  for (const Json& term : j) {
    const Rat coeff = rational_from_json(term.at("coeff"));
    LetterPlaceMonomial mono;
    for (const Json& pair : term.at("pairs")) {
      if (!pair.is_array() || pair.size() != 2) {
        throw std::invalid_argument("element: pairs must be [letter, place]");
      }
      mono.emplace_back(pair[0].get<int>(), pair[1].get<int>());
    }
    e += Element::monomial(std::move(mono), coeff);
  }
  return e;
}

Json bidegree_to_json(const Bidegree& d) {
  return Json{{"letters", d.letters}, {"places", d.places}};
}

Bidegree bidegree_from_json(const Json& j) {
  Bidegree d;
  d.letters = int_vector_from_json(j.at("letters"), "letters");
  d.places = int_vector_from_json(j.at("places"), "places");
  for (int v : d.letters) {
    if (v < 0) throw std::invalid_argument("bidegree: negative multiplicity");
  }
  for (int v : d.places) {
    if (v < 0) throw std::invalid_argument("bidegree: negative multiplicity");
  }
  return d;
}

Json tableau_to_json(const Tableau& t) {
  Json rows = Json::array();
  for (const auto& row : t.rows) rows.push_back(row);
  return rows;
}

Tableau tableau_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("tableau: expected rows");
  Tableau t;
  for (const Json& row : j) {
    t.rows.push_back(int_vector_from_json(row, "tableau row"));
  }
  return t;
}

Json tab_pair_to_json(const TabPair& p) {
  return Json{{"letters", tableau_to_json(p.letters)},
              {"places", tableau_to_json(p.places)}};
}

TabPair tab_pair_from_json(const Json& j) {
  TabPair p;
  p.letters = tableau_from_json(j.at("letters"));
  p.places = tableau_from_json(j.at("places"));
  return p;
}

Json graded_piece_to_json(const Bidegree& d, const GradedPieceReport& report) {
  Json torsion = Json::array();
  for (const Int& v : report.torsion_invariants) torsion.push_back(v.str());
  return Json{{"bidegree", bidegree_to_json(d)},
              {"monomials", report.monomial_count},
              {"relation_rank", report.relation_rank},
              {"free_rank", report.free_rank},
              {"torsion", std::move(torsion)},
              {"standard_pairs", report.standard_pair_count}};
}

namespace {

// A hook label (k, 1^{n-k}) is eligible for the nbc column.
int hook_first_part(const Partition& lam) {
  for (std::size_t i = 1; i < lam.size(); ++i) {
    if (lam[i] != 1) return 0;
  }
  return lam.empty() ? 0 : lam[0];
}

std::string partition_label(const Partition& lam) {
  std::string out;
  for (std::size_t i = 0; i < lam.size(); ++i) {
    if (i > 0) out += '+';
    out += std::to_string(lam[i]);
  }
  return out;
}

}  // namespace

Json multiplicity_report_json(const Matroid& m,
                              const std::map<Partition, long>& table) {
  const Partition rho = rank_partition(m);
  Json rows = Json::array();
  for (const auto& [lam, count] : table) {
    Json row{{"lambda", lam},
             {"character", count},
             {"dominance", dominance_leq(lam, rho)}};
    const int k = hook_first_part(lam);
    if (k > 0) {
      row["nbc"] = hook_multiplicity_nbc(m, k);
    } else {
      row["nbc"] = nullptr;
    }
    rows.push_back(std::move(row));
  }
  return Json{{"n", m.n()},
              {"rank_partition", rho},
              {"rows", std::move(rows)}};
}

std::string multiplicity_report_csv(const Matroid& m,
                                    const std::map<Partition, long>& table) {
  const Partition rho = rank_partition(m);
  std::ostringstream out;
  out << "lambda,character,nbc,dominance\n";
  for (const auto& [lam, count] : table) {
    out << partition_label(lam) << ',' << count << ',';
    const int k = hook_first_part(lam);
    if (k > 0) out << hook_multiplicity_nbc(m, k);
    out << ',' << (dominance_leq(lam, rho) ? "true" : "false") << '\n';
  }
  return out.str();
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  Json j;
  in >> j;
  return j;
}

}  // namespace whitney
