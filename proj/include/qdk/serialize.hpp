#pragma once

#include "qdk/qd.hpp"

#include "json.hpp"

namespace qdk {

using Json = nlohmann::ordered_json;

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Json scalar_row_json(const QRow& r, std::size_t dim);
QRow scalar_row_from_json(const Json& j, std::size_t dim);

Json graded_to_json(const GradedSpace& v);
GradedSpace graded_from_json(const Json& j);

// { flavor, generators: [{label, degree}], relations: [[p/q, ...]] }
Json qd_to_json(const QuadraticData& q);
QuadraticData qd_from_json(const Json& j);

}  // namespace qdk
