#include "finmodal/census.hpp"

#include <sstream>

#include "finmodal/dsem.hpp"

namespace finmodal {

std::vector<CensusRow> census(int max_points) {
  if (max_points < 1 || max_points > 4)
    throw CapExceeded("census supports 1..4 points, got " +
                      std::to_string(max_points));
  std::vector<CensusRow> rows;
  enumerate_topologies(max_points, [&](const TopSpace& x) {
    CensusRow row;
    row.id = static_cast<int>(rows.size());
    row.points = x.points();
    row.open_sets = static_cast<int>(x.opens().size());
    row.flags = classify(x);
    for (const auto& name : axiom_names()) {
      Formula ax = named_axiom(name);
      row.d_valid_axioms[name] = d_valid(x, ax).valid;
      row.c_valid_axioms[name] = c_valid(x, ax).valid;
    }
    rows.push_back(std::move(row));
    return true;
  });
  return rows;
}

std::string census_to_csv(const std::vector<CensusRow>& rows) {
  std::ostringstream out;
  out << "id,points,open_sets,TD,T1,scattered,crowded,densely_discrete,door,"
         "isolated";
  for (const auto& name : axiom_names()) out << ",d:" << name;
  for (const auto& name : axiom_names()) out << ",c:" << name;
  out << '\n';
  for (const auto& r : rows) {
    out << r.id << ',' << r.points << ',' << r.open_sets << ','
        << r.flags.is_TD << ',' << r.flags.is_T1 << ',' << r.flags.is_scattered
        << ',' << r.flags.is_crowded << ',' << r.flags.is_densely_discrete
        << ',' << r.flags.is_door << ',' << set_size(r.flags.isolated_points);
    for (const auto& name : axiom_names()) out << ',' << r.d_valid_axioms.at(name);
    for (const auto& name : axiom_names()) out << ',' << r.c_valid_axioms.at(name);
    out << '\n';
  }
  return out.str();
}

nlohmann::json census_to_json(const std::vector<CensusRow>& rows) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : rows) {
    nlohmann::json flags = {
        {"TD", r.flags.is_TD},
        {"T1", r.flags.is_T1},
        {"scattered", r.flags.is_scattered},
        {"crowded", r.flags.is_crowded},
        {"densely_discrete", r.flags.is_densely_discrete},
        {"door", r.flags.is_door},
        {"isolated_points", set_size(r.flags.isolated_points)}};
    out.push_back({{"id", r.id},
                   {"points", r.points},
                   {"open_sets", r.open_sets},
                   {"flags", flags},
                   {"d_valid", r.d_valid_axioms},
                   {"c_valid", r.c_valid_axioms}});
  }
  return out;
}

}  // namespace finmodal
