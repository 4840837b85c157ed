#include "qcox/format.hpp"

#include <algorithm>
#include <sstream>

#include "qcox/error.hpp"

namespace qcox {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::SyntaxError, what); }

std::string latex_rational(const Rational& r) {
    if (r.is_integer()) return r.to_string();
    const std::string num = mpz_class(abs(r.numerator())).get_str();
    return std::string(r.sign() < 0 ? "-" : "") + "\\frac{" + num + "}{" + r.denominator().get_str() + "}";
}

std::string latex_power(std::size_t k) {
    if (k == 0) return "";
    if (k == 1) return "q";
    return "q^{" + std::to_string(k) + "}";
}

std::string array_block(std::size_t rows, std::size_t cols, const auto& cell) {
    std::ostringstream os;
    os << "\\left( \\begin{array}{" << std::string(cols, 'c') << "}\n";
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            if (j) os << " & ";
            os << cell(i, j);
        }
        os << (i + 1 < rows ? " \\\\\n" : "\n");
    }
    os << "\\end{array} \\right)";
    return os.str();
}

std::string aligned(std::size_t rows, std::size_t cols, const auto& cell) {
    std::vector<std::string> text(rows * cols);
    std::vector<std::size_t> width(cols, 0);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            text[i * cols + j] = cell(i, j);
            width[j] = std::max(width[j], text[i * cols + j].size());
        }
    }
    std::ostringstream os;
    for (std::size_t i = 0; i < rows; ++i) {
        os << "[ ";
        for (std::size_t j = 0; j < cols; ++j) {
            if (j) os << ", ";
            const auto& t = text[i * cols + j];
            os << std::string(width[j] - t.size(), ' ') << t;
        }
        os << " ]\n";
    }
    return os.str();
}

}  // namespace

nlohmann::json poly_to_json(const Polynomial& p) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& c : p.coeffs()) out.push_back(c.to_string());
    return out;
}

Polynomial poly_from_json(const nlohmann::json& j) {
    if (!j.is_array()) bad("polynomial must be an array of coefficient strings");
    std::vector<Rational> coeffs;
    for (const auto& c : j) {
        if (!c.is_string()) bad("polynomial coefficient must be a string");
        coeffs.push_back(Rational::parse(c.get<std::string>()));
    }
    return Polynomial(std::move(coeffs));
}

nlohmann::json matrix_to_json(const PolyMatrix& m) {
    nlohmann::json out = nlohmann::json::array();
    for (std::size_t i = 0; i < m.order(); ++i) out.push_back(vector_to_json(m.row(i)));
    return out;
}

PolyMatrix matrix_from_json(const nlohmann::json& j) {
    if (!j.is_array()) bad("matrix must be an array of rows");
    PolyMatrix m(j.size());
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_array() || j[i].size() != j.size()) bad("matrix must be square");
        for (std::size_t k = 0; k < j.size(); ++k) m(i, k) = poly_from_json(j[i][k]);
    }
    return m;
}

nlohmann::json vector_to_json(const PolyVector& v) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& p : v) out.push_back(poly_to_json(p));
    return out;
}

nlohmann::json matrix_to_json(const RationalMatrix& m) {
    nlohmann::json out = nlohmann::json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(m(i, k).to_string());
        out.push_back(row);
    }
    return out;
}

nlohmann::json to_json(const GradedDimTable& table, const Quiver& q) {
    nlohmann::json dims = nlohmann::json::array();
    const std::size_t n = table.vertex_count();
    for (std::size_t d = 0; d < table.max_degree(); ++d) {
        for (Vertex i = 0; i < n; ++i) {
            for (Vertex j = 0; j < n; ++j) {
                const std::size_t dim = table.dim(i, j, d);
                if (dim == 0) continue;
                dims.push_back({{"source", q.vertex_name(i)}, {"target", q.vertex_name(j)}, {"degree", d}, {"dim", dim}});
            }
        }
    }
    return {{"dims", dims}, {"max_degree", table.max_degree()}};
}

std::string to_latex(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
        const Rational& c = p.coeffs()[k];
        if (c.is_zero()) continue;
        const bool negative = c.sign() < 0;
        const Rational mag = negative ? -c : c;
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? "-" : "+";
        }
        if (k == 0 || mag != Rational(1)) out += latex_rational(mag);
        out += latex_power(k);
    }
    return out;
}

std::string to_latex(const PolyMatrix& m) {
    return array_block(m.order(), m.order(), [&](std::size_t i, std::size_t j) { return to_latex(m(i, j)); });
}

std::string to_latex(const PolyVector& v) {
    return array_block(v.size(), 1, [&](std::size_t i, std::size_t) { return to_latex(v[i]); });
}

std::string to_latex(const RationalMatrix& m) {
    return array_block(m.rows(), m.cols(), [&](std::size_t i, std::size_t j) { return latex_rational(m(i, j)); });
}

std::string to_plain(const PolyMatrix& m) {
    return aligned(m.order(), m.order(), [&](std::size_t i, std::size_t j) { return m(i, j).to_string(); });
}

std::string to_plain(const PolyVector& v) {
    return aligned(v.size(), 1, [&](std::size_t i, std::size_t) { return v[i].to_string(); });
}

std::string to_plain(const RationalMatrix& m) {
    return aligned(m.rows(), m.cols(), [&](std::size_t i, std::size_t j) { return m(i, j).to_string(); });
}

}  // namespace qcox
