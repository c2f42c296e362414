#pragma once

// JSON formats: lattices as ordered upper-cover lists, recipes, and the P
// poset emitted by the congruences command.  nlohmann::ordered_json keeps key
// order (and thus bytes) stable.

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "slatt/congruence.hpp"
#include "slatt/construct.hpp"
#include "slatt/lattice.hpp"
#include "slatt/layout.hpp"

namespace slatt {

using Json = nlohmann::ordered_json;

class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

inline Json lattice_to_json(const Lattice& K) {
  Json j;
  j["n"] = K.size();
  j["upper_covers"] = K.all_upper_covers();
  return j;
}

inline Lattice lattice_from_json(const Json& j) {
  if (!j.contains("n") || !j.contains("upper_covers"))
    throw ParseError("lattice JSON needs \"n\" and \"upper_covers\"");
  const int n = j.at("n").get<int>();
  auto upper = j.at("upper_covers").get<std::vector<std::vector<int>>>();
  if (static_cast<int>(upper.size()) != n)
    throw ParseError("\"n\" disagrees with the upper_covers list length");
  Lattice K = Lattice::from_upper_covers(std::move(upper));
  // Recover the planar lower-cover order when the lattice qualifies; inputs
  // that fail the validators keep id order, and the order-dependent machinery
  // is never reached for them.
  if (!validate_semimodular(K) && !validate_slim(K) && validate_rectangular(K).ok())
    return with_planar_lower_order(K);
  return K;
}

inline Json recipe_to_json(const Recipe& r) {
  Json j;
  j["grid"] = {r.grid_m, r.grid_n};
  j["forks"] = r.forks;
  if (r.seed) j["seed"] = *r.seed;
  return j;
}

inline Recipe recipe_from_json(const Json& j) {
  if (!j.contains("grid")) throw ParseError("recipe JSON needs \"grid\"");
  const auto grid = j.at("grid").get<std::vector<int>>();
  if (grid.size() != 2) throw ParseError("\"grid\" must be [m, n]");
  Recipe r;
  r.grid_m = grid[0];
  r.grid_n = grid[1];
  if (j.contains("forks")) r.forks = j.at("forks").get<std::vector<int>>();
  if (j.contains("seed")) r.seed = j.at("seed").get<uint64_t>();
  return r;
}

inline bool looks_like_recipe(const Json& j) { return j.is_object() && j.contains("grid"); }

struct LoadedInput {
  std::optional<Recipe> recipe;  // set when the input was a recipe
  Lattice lattice;
};

inline LoadedInput input_from_json(const Json& j) {
  if (looks_like_recipe(j)) {
    Recipe r = recipe_from_json(j);
    return {r, apply_recipe(r)};
  }
  return {std::nullopt, lattice_from_json(j)};
}

inline Json parse_json_text(const std::string& text) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ParseError("malformed JSON");
  return j;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

// The P poset report: {"elements", "leq", "maximal", "col"} with edges named
// "bottom-top".
inline Json ji_poset_to_json(const Lattice& K, const JiPoset& P) {
  Json j;
  j["schema"] = 1;
  j["elements"] = P.poset.size();
  std::vector<std::vector<int>> leq(P.poset.size(), std::vector<int>(P.poset.size(), 0));
  for (int a = 0; a < P.poset.size(); ++a)
    for (int b = 0; b < P.poset.size(); ++b) leq[a][b] = P.poset.leq(a, b) ? 1 : 0;
  j["leq"] = leq;
  j["maximal"] = P.poset.maximal();
  Json col = Json::object();
  for (size_t i = 0; i < K.edges().size(); ++i)
    col[edge_name(K.edges()[i])] = P.edge_color[i];
  j["col"] = col;
  return j;
}

}  // namespace slatt
