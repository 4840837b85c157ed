#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "qcox/algebra.hpp"
#include "qcox/matrix.hpp"
#include "qcox/polynomial.hpp"

namespace qcox {

/// Ascending coefficient strings: 1 + 2q^2 -> ["1","0","2"].
nlohmann::json poly_to_json(const Polynomial& p);
/// Throws Error(SyntaxError) on anything but an array of rational strings.
Polynomial poly_from_json(const nlohmann::json& j);

/// Array of rows of polynomials.
nlohmann::json matrix_to_json(const PolyMatrix& m);
PolyMatrix matrix_from_json(const nlohmann::json& j);
nlohmann::json vector_to_json(const PolyVector& v);
nlohmann::json matrix_to_json(const RationalMatrix& m);

nlohmann::json to_json(const GradedDimTable& table, const Quiver& q);

/// Ascending powers, q^{k} exponents, unit coefficients suppressed.
std::string to_latex(const Polynomial& p);
std::string to_latex(const PolyMatrix& m);
std::string to_latex(const PolyVector& v);
std::string to_latex(const RationalMatrix& m);

/// Rows on separate lines, columns aligned.
std::string to_plain(const PolyMatrix& m);
std::string to_plain(const PolyVector& v);
std::string to_plain(const RationalMatrix& m);

}  // namespace qcox
