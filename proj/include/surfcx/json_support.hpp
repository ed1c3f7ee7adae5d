#pragma once

#include "surfcx/exactlin.hpp"

#include "json.hpp"

#include <cstdint>
#include <limits>
#include <span>

namespace surfcx {

/// Integers that fit in int64 become JSON numbers; larger ones become
/// decimal strings so nothing is truncated.
inline nlohmann::json integer_json(const Integer& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() &&
      x <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(x);
  return x.str();
}

inline nlohmann::json vector_json(std::span<const Integer> v) {
  auto out = nlohmann::json::array();
  for (const auto& x : v) out.push_back(integer_json(x));
  return out;
}

inline nlohmann::json matrix_json(const exactlin::IntMatrix& m) {
  auto out = nlohmann::json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(vector_json(m.row(r)));
  return out;
}

}  // namespace surfcx
