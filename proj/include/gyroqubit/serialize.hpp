#pragma once

// JSON forms: vectors as [x, y, z], matrices as row-major nested arrays,
// Hermitian2 as {"a11", "a22", "re12", "im12"}, states as {"bloch": [...]}.
// nlohmann::json prints doubles with the shortest round-trip representation
// (at most 17 significant digits).

#include <json.hpp>

#include "gyroqubit/gyrovector.hpp"
#include "gyroqubit/hermitian2.hpp"
#include "gyroqubit/qubit_density.hpp"

namespace gyroqubit {

using json = nlohmann::json;

namespace detail {

// Drops the sign of negative zero so that -0.0 prints as 0.0.
template <std::floating_point T>
double unsigned_zero(T x) {
  return double(x) + 0.0;
}

}  // namespace detail

template <std::floating_point T>
json to_json(const BlochVector<T>& v) {
  return json::array({detail::unsigned_zero(v.x), detail::unsigned_zero(v.y), detail::unsigned_zero(v.z)});
}

template <std::floating_point T>
json to_json(const Hermitian2<T>& h) {
  return {{"a11", detail::unsigned_zero(h.a11)},
          {"a22", detail::unsigned_zero(h.a22)},
          {"re12", detail::unsigned_zero(h.re12)},
          {"im12", detail::unsigned_zero(h.im12)}};
}

template <std::floating_point T>
json to_json(const Rotation3<T>& r) {
  json rows = json::array();
  for (const auto& row : r.m) rows.push_back({detail::unsigned_zero(row[0]), detail::unsigned_zero(row[1]), detail::unsigned_zero(row[2])});
  return rows;
}

template <std::floating_point T>
json to_json(const Boost4<T>& b) {
  json rows = json::array();
  for (const auto& row : b.m) rows.push_back({detail::unsigned_zero(row[0]), detail::unsigned_zero(row[1]), detail::unsigned_zero(row[2]),
                    detail::unsigned_zero(row[3])});
  return rows;
}

template <std::floating_point T>
json to_json(const DensityMatrix<T>& rho, bool expanded = false) {
  json j{{"bloch", to_json(rho.bloch)}};
  if (expanded) j["matrix"] = to_json(rho.matrix());
  return j;
}

inline BlochVector<double> bloch_from_json(const json& j) {
  if (!j.is_array() || j.size() != 3) throw std::invalid_argument("expected a 3-element array");
  return {j.at(0).get<double>(), j.at(1).get<double>(), j.at(2).get<double>()};
}

inline Hermitian2<double> hermitian_from_json(const json& j) {
  return {j.at("a11").get<double>(), j.at("a22").get<double>(), j.at("re12").get<double>(),
          j.at("im12").get<double>()};
}

}  // namespace gyroqubit
