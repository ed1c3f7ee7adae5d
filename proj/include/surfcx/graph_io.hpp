#pragma once

#include "surfcx/toruscomplex.hpp"

#include "json.hpp"

#include <string>

namespace surfcx::torus {

/// Undirected DOT; each node is named by its quoted comma-joined coordinates.
std::string to_dot(const ComplexGraph& g);

/// {"kind", "height", "vertices": [[...]], "edges": [[i, j]]}, vertices in
/// lexicographic order and i < j in every edge.
nlohmann::json to_json(const ComplexGraph& g);

nlohmann::json to_json(const PathCertificate& path);

}  // namespace surfcx::torus
