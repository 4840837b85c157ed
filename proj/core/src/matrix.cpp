#include "qcox/matrix.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <ostream>
#include <sstream>
#include <utility>

#include "qcox/error.hpp"

namespace qcox {

// ---------------------------------------------------------------- PolyMatrix

PolyMatrix::PolyMatrix(std::size_t n) : n_(n), entries_(n * n) {}

PolyMatrix::PolyMatrix(std::initializer_list<std::initializer_list<Polynomial>> rows)
    : n_(rows.size()), entries_() {
    entries_.reserve(n_ * n_);
    for (const auto& row : rows) {
        if (row.size() != n_) throw Error(ErrorKind::DimensionMismatch, "PolyMatrix rows must have length equal to the row count");
        entries_.insert(entries_.end(), row.begin(), row.end());
    }
}

PolyMatrix PolyMatrix::identity(std::size_t n) {
    PolyMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Polynomial(1);
    return m;
}

PolyVector PolyMatrix::row(std::size_t i) const {
    return PolyVector(entries_.begin() + static_cast<std::ptrdiff_t>(i * n_),
                      entries_.begin() + static_cast<std::ptrdiff_t>((i + 1) * n_));
}

PolyVector PolyMatrix::column(std::size_t j) const {
    PolyVector out;
    out.reserve(n_);
    for (std::size_t i = 0; i < n_; ++i) out.push_back((*this)(i, j));
    return out;
}

PolyMatrix PolyMatrix::transpose() const {
    PolyMatrix t(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

bool PolyMatrix::is_symmetric() const {
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = i + 1; j < n_; ++j)
            if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
}

bool PolyMatrix::is_lower_unitriangular() const {
    for (std::size_t i = 0; i < n_; ++i) {
        if ((*this)(i, i) != Polynomial(1)) return false;
        for (std::size_t j = i + 1; j < n_; ++j)
            if (!(*this)(i, j).is_zero()) return false;
    }
    return true;
}

bool PolyMatrix::has_integer_coeffs() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const Polynomial& p) { return p.has_integer_coeffs(); });
}

void PolyMatrix::require_same_order(const PolyMatrix& other) const {
    if (other.n_ != n_) {
        throw Error(ErrorKind::DimensionMismatch,
                    "matrix orders differ: " + std::to_string(n_) + " vs " + std::to_string(other.n_));
    }
}

PolyMatrix& PolyMatrix::operator+=(const PolyMatrix& rhs) {
    require_same_order(rhs);
    for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += rhs.entries_[k];
    return *this;
}

PolyMatrix& PolyMatrix::operator-=(const PolyMatrix& rhs) {
    require_same_order(rhs);
    for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= rhs.entries_[k];
    return *this;
}

PolyMatrix& PolyMatrix::operator*=(const Polynomial& c) {
    for (auto& e : entries_) e *= c;
    return *this;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
    a.require_same_order(b);
    const std::size_t n = a.n_;
    PolyMatrix out(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            const Polynomial& aik = a(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j) {
                if (!b(k, j).is_zero()) out(i, j) += aik * b(k, j);
            }
        }
    }
    return out;
}

PolyVector operator*(const PolyMatrix& a, const PolyVector& x) {
    if (x.size() != a.n_) {
        throw Error(ErrorKind::DimensionMismatch,
                    "vector of length " + std::to_string(x.size()) + " against matrix of order " + std::to_string(a.n_));
    }
    PolyVector out(a.n_);
    for (std::size_t i = 0; i < a.n_; ++i)
        for (std::size_t j = 0; j < a.n_; ++j) out[i] += a(i, j) * x[j];
    return out;
}

PolyMatrix PolyMatrix::operator-() const {
    PolyMatrix out = *this;
    for (auto& e : out.entries_) e = -e;
    return out;
}

PolyMatrix PolyMatrix::permuted(std::span<const std::size_t> perm) const {
    if (perm.size() != n_) throw Error(ErrorKind::DimensionMismatch, "permutation length differs from matrix order");
    PolyMatrix out(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) out(i, j) = (*this)(perm[i], perm[j]);
    return out;
}

std::string PolyMatrix::to_string() const {
    std::ostringstream os;
    os << *this;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const PolyMatrix& m) {
    os << '[';
    for (std::size_t i = 0; i < m.order(); ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < m.order(); ++j) os << (j ? ", " : "") << m(i, j);
        os << ']';
    }
    return os << ']';
}

// ------------------------------------------------------------ RationalMatrix

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
    entries_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_) throw Error(ErrorKind::DimensionMismatch, "ragged RationalMatrix initializer");
        entries_.insert(entries_.end(), row.begin(), row.end());
    }
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Rational(1);
    return m;
}

RationalMatrix RationalMatrix::transpose() const {
    RationalMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.cols_ != b.rows_) throw Error(ErrorKind::DimensionMismatch, "incompatible shapes in rational matrix product");
    RationalMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            if (a(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += a(i, k) * b(k, j);
        }
    return out;
}

RationalMatrix RationalMatrix::operator-() const {
    RationalMatrix out = *this;
    for (auto& e : out.entries_) e = -e;
    return out;
}

std::string RationalMatrix::to_string() const {
    std::ostringstream os;
    os << *this;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const RationalMatrix& m) {
    os << '[';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << m(i, j);
        os << ']';
    }
    return os << ']';
}

// ---------------------------------------------------------------- algorithms

namespace {

using PolyGrid = std::vector<std::vector<Polynomial>>;

PolyGrid to_grid(const PolyMatrix& m, std::size_t extra_cols = 0) {
    const std::size_t n = m.order();
    PolyGrid g(n, std::vector<Polynomial>(n + extra_cols));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) g[i][j] = m(i, j);
    return g;
}

// Nonzero entry of lowest degree in column k at or below row k; keeps the
// intermediate degrees small.
std::optional<std::size_t> find_pivot(const PolyGrid& g, std::size_t k) {
    std::optional<std::size_t> best;
    for (std::size_t r = k; r < g.size(); ++r) {
        if (g[r][k].is_zero()) continue;
        if (!best || g[r][k].degree() < g[*best][k].degree()) best = r;
    }
    return best;
}

}  // namespace

Polynomial det(const PolyMatrix& m) {
    const std::size_t n = m.order();
    if (n == 0) return Polynomial(1);
    PolyGrid a = to_grid(m);
    Polynomial prev(1);
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        auto pivot = find_pivot(a, k);
        if (!pivot) return {};
        if (*pivot != k) {
            std::swap(a[*pivot], a[k]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a[i][j] = divide_exact(a[i][j] * a[k][k] - a[i][k] * a[k][j], prev);
            }
            a[i][k] = Polynomial{};
        }
        prev = a[k][k];
    }
    return negate ? -a[n - 1][n - 1] : a[n - 1][n - 1];
}

PolyMatrix inverse_unimodular(const PolyMatrix& m) {
    const std::size_t n = m.order();
    // Fraction-free Gauss-Jordan on [M | E]. On completion every diagonal
    // entry equals the last pivot p = +-det(M) and the right block is p*M^-1.
    PolyGrid a = to_grid(m, n);
    for (std::size_t i = 0; i < n; ++i) a[i][n + i] = Polynomial(1);
    Polynomial prev(1);
    for (std::size_t k = 0; k < n; ++k) {
        auto pivot = find_pivot(a, k);
        if (!pivot) throw Error(ErrorKind::NotUnimodular, "matrix is singular (det = 0)");
        if (*pivot != k) std::swap(a[*pivot], a[k]);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k) continue;
            for (std::size_t j = 0; j < 2 * n; ++j) {
                if (j == k) continue;
                a[i][j] = divide_exact(a[k][k] * a[i][j] - a[i][k] * a[k][j], prev);
            }
            a[i][k] = Polynomial{};
        }
        prev = a[k][k];
    }
    if (!prev.is_unit_sign()) {
        throw Error(ErrorKind::NotUnimodular, "determinant is +-(" + prev.to_string() + "), not a unit");
    }
    PolyMatrix inv(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = divide_exact(a[i][n + j], prev);
    return inv;
}

std::size_t rank_rational(const RationalMatrix& m) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    // Clear denominators row by row; rank is unchanged.
    std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
    for (std::size_t i = 0; i < rows; ++i) {
        mpz_class scale = 1;
        for (std::size_t j = 0; j < cols; ++j) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), m(i, j).raw().get_den_mpz_t());
        for (std::size_t j = 0; j < cols; ++j) a[i][j] = m(i, j).numerator() * (scale / m(i, j).denominator());
    }
    std::size_t rank = 0;
    mpz_class prev = 1;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t p = rank;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[rank]);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                mpz_class t = a[rank][c] * a[i][j] - a[i][c] * a[rank][j];
                if (!mpz_divisible_p(t.get_mpz_t(), prev.get_mpz_t())) {
                    throw Error(ErrorKind::Internal, "inexact fraction-free step in rank computation");
                }
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][c] = 0;
        }
        prev = a[rank][c];
        ++rank;
    }
    return rank;
}

RationalMatrix reduced_row_echelon(const RationalMatrix& m, std::vector<std::size_t>* pivots) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(cols));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) a[i][j] = m(i, j);

    std::vector<std::size_t> piv;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        const Rational inv = Rational(1) / a[r][c];
        for (std::size_t j = c; j < cols; ++j) a[r][j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c].is_zero()) continue;
            const Rational f = a[i][c];
            for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
        }
        piv.push_back(c);
        ++r;
    }
    RationalMatrix out(r, cols);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < cols; ++j) out(i, j) = a[i][j];
    if (pivots) *pivots = std::move(piv);
    return out;
}

RationalMatrix inverse(const RationalMatrix& m) {
    if (m.rows() != m.cols()) throw Error(ErrorKind::DimensionMismatch, "inverse of a non-square matrix");
    const std::size_t n = m.rows();
    RationalMatrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = Rational(1);
    }
    std::vector<std::size_t> pivots;
    RationalMatrix r = reduced_row_echelon(aug, &pivots);
    if (n == 0) return {};
    if (r.rows() < n || pivots[n - 1] != n - 1) throw Error(ErrorKind::InvalidArgument, "matrix is singular");
    RationalMatrix out(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out(i, j) = r(i, n + j);
    return out;
}

RationalMatrix specialize(const PolyMatrix& m, const Rational& at) {
    RationalMatrix out(m.order(), m.order());
    for (std::size_t i = 0; i < m.order(); ++i)
        for (std::size_t j = 0; j < m.order(); ++j) out(i, j) = m(i, j).evaluate(at);
    return out;
}

PolyVector unit_vector(std::size_t n, std::size_t i) {
    if (i >= n) throw Error(ErrorKind::InvalidVertex, "index " + std::to_string(i) + " out of range for dimension " + std::to_string(n));
    PolyVector v(n);
    v[i] = Polynomial(1);
    return v;
}

Polynomial dot(const PolyVector& x, const PolyVector& y) {
    if (x.size() != y.size()) throw Error(ErrorKind::DimensionMismatch, "dot product of vectors with different lengths");
    Polynomial s;
    for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
    return s;
}

}  // namespace qcox
