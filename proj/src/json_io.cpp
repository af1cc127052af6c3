#include "finmodal/json_io.hpp"

namespace finmodal {

using nlohmann::json;

json point_set_to_json(PointSet s) {
  json out = json::array();
  while (s) {
    out.push_back(first_point(s));
    s &= s - 1;
  }
  return out;
}

PointSet point_set_from_json(const json& j, int n) {
  if (!j.is_array()) throw std::invalid_argument("point set must be an array");
  PointSet out = 0;
  for (const auto& e : j) {
    int x = e.get<int>();
    if (x < 0 || x >= n)
      throw std::invalid_argument("point " + std::to_string(x) +
                                  " out of range 0.." + std::to_string(n - 1));
    out |= point_bit(x);
  }
  return out;
}

json frame_to_json(const Frame& frame) {
  json edges = json::array();
  for (int x = 0; x < frame.n; ++x) {
    PointSet rest = frame.succ[x];
    while (rest) {
      int y = first_point(rest);
      rest &= rest - 1;
      edges.push_back(json::array({x, y}));
    }
  }
  return json{{"points", frame.n}, {"edges", edges}};
}

Frame frame_from_json(const json& j) {
  if (!j.contains("points"))
    throw std::invalid_argument("frame JSON needs a \"points\" field");
  int n = j.at("points").get<int>();
  std::vector<std::pair<int, int>> edges;
  if (j.contains("edges")) {
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2)
        throw std::invalid_argument("each edge must be a pair [i,j]");
      edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
  }
  return Frame::from_edges(n, edges);
}

json space_to_json(const TopSpace& space) {
  json opens = json::array();
  for (PointSet o : space.opens()) opens.push_back(point_set_to_json(o));
  return json{{"points", space.points()}, {"opens", opens}, {"complete", false}};
}

TopSpace space_from_json(const json& j) {
  if (!j.contains("points"))
    throw std::invalid_argument("space JSON needs a \"points\" field");
  int n = j.at("points").get<int>();
  bool complete = j.value("complete", false);
  std::vector<PointSet> family;
  if (j.contains("opens"))
    for (const auto& e : j.at("opens"))
      family.push_back(point_set_from_json(e, n));
  return make_space(n, family, complete);
}

ClusterAssignment assignment_from_json(const json& j, const Frame& frame) {
  ClusterDecomposition dec = clusters(frame);
  ClusterAssignment out;
  out.clusters.resize(dec.count());
  std::vector<bool> seen(dec.count(), false);
  if (!j.contains("clusters"))
    throw std::invalid_argument("assignment JSON needs a \"clusters\" array");
  for (const auto& entry : j.at("clusters")) {
    PointSet members = point_set_from_json(entry.at("members"), frame.n);
    int idx = -1;
    for (int i = 0; i < dec.count(); ++i)
      if (dec.clusters[i] == members) idx = i;
    if (idx < 0)
      throw std::invalid_argument(
          "assignment entry does not match any cluster of the frame");
    if (seen[idx])
      throw std::invalid_argument("duplicate assignment entry for a cluster");
    seen[idx] = true;
    ClusterSpaceAssignment& cs = out.clusters[idx];
    cs.space = space_from_json(entry.at("space"));
    for (const auto& [key, cell] : entry.at("cells").items()) {
      int w = std::stoi(key);
      cs.cells[w] = point_set_from_json(cell, cs.space.points());
    }
  }
  for (int i = 0; i < dec.count(); ++i)
    if (!seen[i])
      throw std::invalid_argument("assignment entry missing for cluster " +
                                  std::to_string(i));
  return out;
}

json valuation_to_json(const Valuation& val) {
  json out = json::object();
  for (const auto& [name, s] : val) out[name] = point_set_to_json(s);
  return out;
}

}  // namespace finmodal
