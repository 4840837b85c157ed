#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "qcox/polynomial.hpp"
#include "qcox/rational.hpp"

namespace qcox {

using PolyVector = std::vector<Polynomial>;
using RationalVector = std::vector<Rational>;

/// Square matrix over Q[q]. Vectors are columns: the matrix of a linear map
/// f has f(e_j) as its column j.
class PolyMatrix {
public:
    PolyMatrix() = default;
    explicit PolyMatrix(std::size_t n);
    PolyMatrix(std::initializer_list<std::initializer_list<Polynomial>> rows);

    static PolyMatrix identity(std::size_t n);

    std::size_t order() const noexcept { return n_; }

    Polynomial& operator()(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }
    const Polynomial& operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }

    PolyVector row(std::size_t i) const;
    PolyVector column(std::size_t j) const;

    PolyMatrix transpose() const;
    bool is_symmetric() const;
    bool is_lower_unitriangular() const;
    bool has_integer_coeffs() const;

    PolyMatrix& operator+=(const PolyMatrix& rhs);
    PolyMatrix& operator-=(const PolyMatrix& rhs);
    PolyMatrix& operator*=(const Polynomial& c);

    friend PolyMatrix operator+(PolyMatrix a, const PolyMatrix& b) { return a += b; }
    friend PolyMatrix operator-(PolyMatrix a, const PolyMatrix& b) { return a -= b; }
    friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
    friend PolyMatrix operator*(PolyMatrix a, const Polynomial& c) { return a *= c; }
    friend PolyMatrix operator*(const Polynomial& c, PolyMatrix a) { return a *= c; }
    friend PolyVector operator*(const PolyMatrix& a, const PolyVector& x);
    PolyMatrix operator-() const;

    friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

    /// Matrix with rows and columns permuted: result(i,j) = this(perm[i], perm[j]).
    PolyMatrix permuted(std::span<const std::size_t> perm) const;

    std::string to_string() const;

private:
    void require_same_order(const PolyMatrix& other) const;

    std::size_t n_ = 0;
    std::vector<Polynomial> entries_;
};

std::ostream& operator<<(std::ostream& os, const PolyMatrix& m);

/// Rectangular matrix over Q.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols);
    RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

    static RationalMatrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    RationalMatrix transpose() const;
    friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
    RationalMatrix operator-() const;

    friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> entries_;
};

std::ostream& operator<<(std::ostream& os, const RationalMatrix& m);

/// Exact determinant by fraction-free (Bareiss) elimination over Q[q].
Polynomial det(const PolyMatrix& m);

/// Inverse of a matrix whose determinant is +1 or -1; the result again has
/// polynomial entries. Throws Error(NotUnimodular) otherwise.
PolyMatrix inverse_unimodular(const PolyMatrix& m);

/// Exact rank over Q, by fraction-free elimination on integer-scaled rows.
std::size_t rank_rational(const RationalMatrix& m);

/// Reduced row echelon form over Q. Zero rows are dropped; `pivots` receives
/// the pivot column of each remaining row.
RationalMatrix reduced_row_echelon(const RationalMatrix& m, std::vector<std::size_t>* pivots = nullptr);

/// Inverse over Q; throws Error(InvalidArgument) when singular.
RationalMatrix inverse(const RationalMatrix& m);

/// Entrywise evaluation at q = at.
RationalMatrix specialize(const PolyMatrix& m, const Rational& at);

PolyVector unit_vector(std::size_t n, std::size_t i);
Polynomial dot(const PolyVector& x, const PolyVector& y);

}  // namespace qcox
