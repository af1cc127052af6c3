#pragma once

#include <json.hpp>
#include <map>
#include <string>
#include <vector>

#include "finmodal/topo.hpp"

namespace finmodal {

struct CensusRow {
  int id = 0;
  int points = 0;
  int open_sets = 0;
  SpacePredicates flags;
  std::map<std::string, bool> d_valid_axioms;
  std::map<std::string, bool> c_valid_axioms;
};

/// One row per labeled topology of size 1..max_points (cap 4): the
/// classification flags plus d-/C-validity of every named axiom.
std::vector<CensusRow> census(int max_points);

std::string census_to_csv(const std::vector<CensusRow>& rows);
nlohmann::json census_to_json(const std::vector<CensusRow>& rows);

}  // namespace finmodal
