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

// Command-line front end. Exit codes: 0 = all checks pass, 1 = a theorem
// check found a counterexample (printed), 2 = input error.

#include <cstdint>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "whitney/io.hpp"
#include "whitney/matroid.hpp"
#include "whitney/symrep.hpp"
#include "whitney/tableaux.hpp"
#include "whitney/whitney.hpp"

namespace {

using whitney::Json;

struct MatroidSource {
  std::string file;
  std::string circuits;
  std::string matrix;
  std::string freedom_bits;

  bool present() const {
    return !file.empty() || !circuits.empty() || !matrix.empty() ||
           !freedom_bits.empty();
  }
};

void add_source_flags(CLI::App* cmd, MatroidSource& src) {
  auto* file = cmd->add_option("--matroid", src.file, "Matroid JSON file");
  auto* circuits = cmd->add_option(
      "--circuits", src.circuits,
      "Inline matroid JSON: {\"n\":..,\"circuits\":[[..],..]}, or a bare "
      "circuit array (n = largest element)");
  auto* matrix = cmd->add_option(
      "--matrix", src.matrix,
      "Inline realization JSON: {\"rows\":[[..],..]} or [[..],..]; entries "
      "are integers or \"p/q\" strings");
  auto* freedom = cmd->add_option("--freedom", src.freedom_bits,
                                  "Freedom matroid bit string, e.g. 101010");
  file->excludes(circuits)->excludes(matrix)->excludes(freedom);
  circuits->excludes(matrix)->excludes(freedom);
  matrix->excludes(freedom);
}

std::vector<int> parse_bits(const std::string& text) {
  std::vector<int> bits;
  for (char c : text) {
    if (c != '0' && c != '1') {
      throw std::invalid_argument("freedom bits must be 0s and 1s");
    }
    bits.push_back(c - '0');
  }
  if (bits.empty()) throw std::invalid_argument("empty freedom bit string");
  return bits;
}

whitney::Matroid resolve_matroid(const MatroidSource& src) {
  if (!src.file.empty()) return whitney::load_matroid_file(src.file);
  if (!src.circuits.empty()) {
    const Json j = Json::parse(src.circuits);
    if (j.is_array()) {
      int n = 0;
      std::vector<std::vector<int>> circuits;
      for (const Json& c : j) {
        circuits.push_back(c.get<std::vector<int>>());
        for (int e : circuits.back()) n = std::max(n, e);
      }
      return whitney::Matroid::from_circuits(n, std::move(circuits));
    }
    return whitney::matroid_from_json(j);
  }
  if (!src.matrix.empty()) {
    return whitney::Matroid::from_matrix(
        whitney::matrix_from_json(Json::parse(src.matrix)));
  }
  if (!src.freedom_bits.empty()) {
    return whitney::freedom(parse_bits(src.freedom_bits));
  }
  throw std::invalid_argument(
      "a matroid source is required: --matroid, --circuits, --matrix, or "
      "--freedom");
}

// A realization matrix, for commands that act on one rather than on the
// abstract matroid.
whitney::RatMatrix resolve_matrix(const MatroidSource& src,
                                  std::uint64_t seed) {
  if (!src.matrix.empty()) {
    return whitney::matrix_from_json(Json::parse(src.matrix));
  }
  if (!src.file.empty()) {
    const Json j = whitney::read_json_file(src.file);
    if (!j.is_object() || !j.contains("matrix")) {
      throw std::invalid_argument("matroid file has no matrix realization");
    }
    return whitney::matrix_from_json(j.at("matrix"));
  }
  if (!src.freedom_bits.empty()) {
    return whitney::generic_freedom_matrix(parse_bits(src.freedom_bits), seed);
  }
  throw std::invalid_argument(
      "a realization is required: --matrix, --matroid (matrix form), or "
      "--freedom");
}

void print_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

int run_matroid_info(const MatroidSource& src) {
  const whitney::Matroid m = resolve_matroid(src);
  Json info = whitney::matroid_to_json(m);
  info["rank"] = m.rank();
  info["rank_partition"] = whitney::rank_partition(m);
  info["broken_circuits"] = whitney::broken_circuits(m);
  Json nbc = Json::array();
  for (int k = 1; k <= m.rank(); ++k) {
    nbc.push_back(
        Json{{"size", k},
             {"count", whitney::nbc_sets(m, k, false).size()},
             {"count_containing_1", whitney::nbc_sets(m, k, true).size()}});
  }
  info["nbc"] = std::move(nbc);
  print_json(info);
  return 0;
}

int run_whitney_piece(const MatroidSource& src, const std::string& bidegree) {
  const whitney::Matroid m = resolve_matroid(src);
  const whitney::Bidegree d =
      whitney::bidegree_from_json(Json::parse(bidegree));
  print_json(whitney::graded_piece_to_json(d, whitney::graded_piece(m, d)));
  return 0;
}

int run_freedom_check(const std::string& bits_text, int max_places,
                      int max_letters) {
  const std::vector<int> bits = parse_bits(bits_text);
  const whitney::FreedomCheckReport report =
      whitney::freedom_basis_check(bits, max_places, max_letters);
  Json j{{"ok", report.ok}, {"bidegrees_checked", report.bidegrees_checked}};
  if (!report.ok) {
    j["first_failure"] = whitney::graded_piece_to_json(report.first_failure,
                                                       report.failure_data);
  }
  print_json(j);
  return report.ok ? 0 : 1;
}

int run_um_table(const MatroidSource& src, int n_cap,
                 const std::string& format) {
  const whitney::Matroid m = resolve_matroid(src);
  const std::map<whitney::Partition, long> table =
      whitney::multiplicity_table(m, n_cap);
  if (format == "csv") {
    std::cout << whitney::multiplicity_report_csv(m, table);
  } else {
    print_json(whitney::multiplicity_report_json(m, table));
  }
  for (const auto& [lam, count] : table) {
    bool hook = true;
    for (std::size_t i = 1; i < lam.size(); ++i) hook = hook && lam[i] == 1;
    if (hook && !lam.empty() &&
        count != whitney::hook_multiplicity_nbc(m, lam[0])) {
      return 1;
    }
  }
  return 0;
}

int run_um_hook(const MatroidSource& src, int n_cap,
                const std::string& format) {
  const whitney::Matroid m = resolve_matroid(src);
  const whitney::ClassFunction chi = whitney::u_module_character(m, n_cap);
  bool all_match = true;
  Json rows = Json::array();
  std::string csv = "k,character,nbc,match\n";
  for (int k = 1; k <= m.n(); ++k) {
    const whitney::HookShape hook{k, m.n()};
    const long by_character =
        whitney::multiplicity_from_character(chi, hook.partition());
    const long by_nbc = whitney::hook_multiplicity_nbc(m, k);
    const bool match = by_character == by_nbc;
    all_match = all_match && match;
    rows.push_back(Json{{"k", k},
                        {"character", by_character},
                        {"nbc", by_nbc},
                        {"match", match}});
    csv += std::to_string(k) + ',' + std::to_string(by_character) + ',' +
           std::to_string(by_nbc) + ',' + (match ? "true" : "false") + '\n';
  }
  if (format == "csv") {
    std::cout << csv;
  } else {
    print_json(Json{{"n", m.n()}, {"rows", std::move(rows)}});
  }
  return all_match ? 0 : 1;
}

int run_gamas(const MatroidSource& src, int max_boxes, std::uint64_t seed) {
  const whitney::RatMatrix f = resolve_matrix(src, seed);
  const whitney::GamasReport report = whitney::gamas_check(f, max_boxes);
  Json j{{"ok", report.ok}, {"pairs_checked", report.pairs_checked}};
  if (!report.ok) {
    j["counterexample"] = whitney::tab_pair_to_json(report.counterexample);
    j["counterexample_nonzero"] = report.counterexample_nonzero;
  }
  print_json(j);
  return report.ok ? 0 : 1;
}

int run_straighten(const MatroidSource& src, const std::string& pair_text) {
  const whitney::TabPair pair =
      whitney::tab_pair_from_json(Json::parse(pair_text));
  whitney::StraighteningResult result;
  if (src.present()) {
    const whitney::Matroid m = resolve_matroid(src);
    result = whitney::straighten(&m, pair);
  } else {
    result = whitney::straighten(nullptr, pair);
  }
  Json terms = Json::array();
  for (const auto& [term, coeff] : result.coefficients) {
    terms.push_back(Json{{"pair", whitney::tab_pair_to_json(term)},
                         {"coeff", whitney::rational_string(coeff)}});
  }
  print_json(Json{{"basis_certified", result.basis_certified},
                  {"in_span", result.in_span},
                  {"dominance_ok", result.dominance_ok},
                  {"content_ok", result.content_ok},
                  {"terms", std::move(terms)}});
  const bool ok = result.basis_certified && result.in_span &&
                  result.dominance_ok && result.content_ok;
  return ok ? 0 : 1;
}

int run_laplace(const std::string& word_text, const std::string& places_text) {
  const Json wj = Json::parse(word_text);
  const whitney::Word w = wj.get<std::vector<int>>();
  const Json pj = Json::parse(places_text);
  whitney::PlaceMonomial q;
  for (const Json& factor : pj) {
    if (!factor.is_array() || factor.size() != 2) {
      throw std::invalid_argument("places must be [[place, power], ...]");
    }
    const int place = factor[0].get<int>();
    const int power = factor[1].get<int>();
    if (place < 1 || power < 1) {
      throw std::invalid_argument("places and powers must be positive");
    }
    q[place] += power;
  }
  print_json(whitney::element_to_json(whitney::laplace_pair(w, q)));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Letter-place superalgebra and matroid module calculator"};
  app.require_subcommand(1);

  MatroidSource src;
  std::string bidegree_text, pair_text, word_text, places_text;
  std::string freedom_bits, format = "json";
  int max_places = 3, max_letters = 4, max_boxes = 6, n_cap = 7;
  std::uint64_t seed = 12345;
  int exit_code = 0;

  auto* matroid = app.add_subcommand("matroid", "Matroid data");
  auto* info = matroid->add_subcommand("info", "Rank, circuits, nbc data");
  add_source_flags(info, src);
  info->callback([&] { exit_code = run_matroid_info(src); });
  matroid->require_subcommand(1);

  auto* wh = app.add_subcommand("whitney", "Graded module computations");
  auto* piece = wh->add_subcommand("piece", "One graded piece report");
  add_source_flags(piece, src);
  piece->add_option("--bidegree", bidegree_text,
                    "JSON {\"letters\":[..],\"places\":[..]}")
      ->required();
  piece->callback([&] { exit_code = run_whitney_piece(src, bidegree_text); });
  auto* fc = wh->add_subcommand(
      "freedom-check", "Basis theorem sweep for a freedom matroid");
  fc->add_option("--freedom", freedom_bits, "Bit string, e.g. 10110")
      ->required();
  fc->add_option("--max-places", max_places, "Largest place index (default 3)");
  fc->add_option("--max-letters", max_letters,
                 "Largest letter total (default 4)");
  fc->callback(
      [&] { exit_code = run_freedom_check(freedom_bits, max_places,
                                          max_letters); });
  wh->require_subcommand(1);

  auto* um = app.add_subcommand("um", "Place-permutation module of a matroid");
  auto* table = um->add_subcommand("table", "All multiplicities, cross-checked");
  add_source_flags(table, src);
  table->add_option("--n-cap", n_cap, "Group algebra size cap (default 7)");
  table->add_option("--format", format, "json|csv")
      ->check(CLI::IsMember({"json", "csv"}));
  table->callback([&] { exit_code = run_um_table(src, n_cap, format); });
  auto* hook = um->add_subcommand("hook", "Hook multiplicities vs nbc counts");
  add_source_flags(hook, src);
  hook->add_option("--n-cap", n_cap, "Group algebra size cap (default 7)");
  hook->add_option("--format", format, "json|csv")
      ->check(CLI::IsMember({"json", "csv"}));
  hook->callback([&] { exit_code = run_um_hook(src, n_cap, format); });
  um->require_subcommand(1);

  auto* gamas = app.add_subcommand(
      "gamas", "Nonvanishing sweep over a realization matrix");
  add_source_flags(gamas, src);
  gamas->add_option("--max-boxes", max_boxes, "Shape size bound (default 6)");
  gamas->add_option("--seed", seed, "Seed for generated realizations");
  gamas->callback([&] { exit_code = run_gamas(src, max_boxes, seed); });

  auto* straighten = app.add_subcommand(
      "straighten", "Expand a tableau pair over the standard pairs");
  add_source_flags(straighten, src);
  straighten
      ->add_option("--pair", pair_text,
                   "JSON {\"letters\":[[..],..],\"places\":[[..],..]}")
      ->required();
  straighten->callback([&] { exit_code = run_straighten(src, pair_text); });

  auto* laplace = app.add_subcommand(
      "laplace", "Pair a letter word against a divided-power place monomial");
  laplace->add_option("--word", word_text, "JSON letter list, e.g. [1,2,3]")
      ->required();
  laplace
      ->add_option("--places", places_text,
                   "JSON [[place, power], ...], e.g. [[1,2],[2,1]]")
      ->required();
  laplace->callback([&] { exit_code = run_laplace(word_text, places_text); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const Json::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}
