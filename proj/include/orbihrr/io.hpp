#pragma once

#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "orbihrr/errors.hpp"
#include "orbihrr/groups.hpp"
#include "orbihrr/text.hpp"

// JSON input files for finite groups and their representations.
//
//   group:          {"degree": 3, "generators": [[1,0,2], [1,2,0]]}
//   representation: {"cyclotomic_order": 3, "dimension": 2,
//                    "matrices": [[["0","1"],["1","0"]], [["z3","0"],["0","z3^2"]]]}
//
// Matrix entries are strings in the cyclotomic text grammar (plain integers
// are also accepted). Generator order in the representation file matches the
// group file.
namespace orbihrr::io {

inline nlohmann::json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("invalid JSON in '" + path + "': " + e.what());
  }
}

inline GroupHandle group_from_json(const nlohmann::json& j, std::size_t max_order = kDefaultMaxGroupOrder) {
  try {
    auto degree = j.at("degree").get<std::size_t>();
    std::vector<Permutation> gens;
    for (const auto& g : j.at("generators")) gens.push_back(g.get<Permutation>());
    return group_from_generators(degree, std::move(gens), max_order);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed group description: ") + e.what());
  }
}

inline nlohmann::json group_to_json(const PermGroup& g) {
  return {{"degree", g.degree()}, {"generators", g.generators()}};
}

inline Cyclotomic cyclotomic_from_json(const nlohmann::json& v) {
  if (v.is_string()) return parse_cyclotomic(v.get<std::string>());
  if (v.is_number_integer()) return Cyclotomic(v.get<long>());
  throw ParseError("matrix entry must be a string or an integer");
}

/// With `verify`, the homomorphism property is checked by brute force.
inline Representation representation_from_json(const GroupHandle& group, const nlohmann::json& j,
                                                bool verify = true) {
  try {
    int order = j.at("cyclotomic_order").get<int>();
    auto dim = j.at("dimension").get<std::size_t>();
    std::vector<CMatrix> mats;
    for (const auto& m : j.at("matrices")) {
      if (m.size() != dim) throw ParseError("matrix has the wrong number of rows");
      std::vector<Cyclotomic> data;
      for (const auto& row : m) {
        if (row.size() != dim) throw ParseError("matrix row has the wrong length");
        for (const auto& v : row) data.push_back(cyclotomic_from_json(v));
      }
      mats.emplace_back(dim, dim, std::move(data));
    }
    return Representation(group, order, dim, std::move(mats), verify);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed representation description: ") + e.what());
  }
}

inline nlohmann::json representation_to_json(const Representation& rep) {
  nlohmann::json mats = nlohmann::json::array();
  for (const auto& m : rep.generator_images()) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
      nlohmann::json row = nlohmann::json::array();
      for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(m(i, k).to_string());
      rows.push_back(row);
    }
    mats.push_back(rows);
  }
  return {{"cyclotomic_order", rep.cyclotomic_order()}, {"dimension", rep.dim()}, {"matrices", mats}};
}

}  // namespace orbihrr::io
