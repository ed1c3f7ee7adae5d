#include "surfcx/graph_io.hpp"

#include "surfcx/json_support.hpp"

#include <sstream>

namespace surfcx::torus {

std::string to_dot(const ComplexGraph& g) {
  std::ostringstream os;
  os << "graph \"" << to_string(g.kind()) << "-h" << g.height() << "\" {\n";
  for (const auto& v : g.vertices()) os << "  \"" << v.to_string() << "\";\n";
  for (const auto& [i, j] : g.edges())
    os << "  \"" << g.vertices()[i].to_string() << "\" -- \"" << g.vertices()[j].to_string()
       << "\";\n";
  os << "}\n";
  return os.str();
}

nlohmann::json to_json(const ComplexGraph& g) {
  nlohmann::json out;
  out["kind"] = std::string(to_string(g.kind()));
  out["height"] = g.height();
  auto vertices = nlohmann::json::array();
  for (const auto& v : g.vertices()) vertices.push_back(vector_json(v.coords()));
  out["vertices"] = std::move(vertices);
  auto edges = nlohmann::json::array();
  for (const auto& [i, j] : g.edges()) edges.push_back({i, j});
  out["edges"] = std::move(edges);
  return out;
}

nlohmann::json to_json(const PathCertificate& path) {
  nlohmann::json out;
  out["edges"] = path.edge_count();
  auto waypoints = nlohmann::json::array();
  for (const auto& v : path.waypoints) waypoints.push_back(vector_json(v.coords()));
  out["waypoints"] = std::move(waypoints);
  auto witnesses = nlohmann::json::array();
  for (const auto& w : path.witnesses) witnesses.push_back(matrix_json(w));
  out["witnesses"] = std::move(witnesses);
  out["transform"] = matrix_json(path.transform);
  return out;
}

}  // namespace surfcx::torus
