#pragma once

#include <json.hpp>

#include "scc/exact/matrix.hpp"

namespace scc {

// {order, coeffs: [[num, den], ...]} with decimal strings for big integers
nlohmann::json to_json(const Cyclotomic& x);
Cyclotomic cyclotomic_from_json(const nlohmann::json& j);

// {dim, order, entries: row-major list of coefficient lists}
nlohmann::json to_json(const ExactMatrix& m);
ExactMatrix matrix_from_json(const nlohmann::json& j);

nlohmann::json to_json(const IntPolynomial& p);
IntPolynomial intpoly_from_json(const nlohmann::json& j);

}  // namespace scc
