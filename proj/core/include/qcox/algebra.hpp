#pragma once

#include <cstddef>
#include <vector>

#include "qcox/matrix.hpp"
#include "qcox/quiver.hpp"

namespace qcox {

inline constexpr std::size_t kDefaultDegreeCap = 64;

/// dim (e_i A e_j)_d for A = kQ/<I>, for all vertex pairs and every degree
/// below `max_degree`, the first degree d >= 1 at which A_d = 0.
class GradedDimTable {
public:
    GradedDimTable(std::size_t n_vertices, std::vector<std::vector<std::size_t>> dims_by_degree);

    std::size_t vertex_count() const noexcept { return n_; }
    std::size_t max_degree() const noexcept { return dims_.size(); }
    /// Zero for every degree >= max_degree().
    std::size_t dim(Vertex i, Vertex j, std::size_t degree) const;
    std::size_t total(std::size_t degree) const;

    friend bool operator==(const GradedDimTable&, const GradedDimTable&) = default;

private:
    std::size_t n_;
    std::vector<std::vector<std::size_t>> dims_;  // [degree][i * n + j]
};

/// The graded quotient with a path basis for every homogeneous component.
/// Basis paths are chosen deterministically: at each degree, the candidate
/// paths b*alpha (b a basis path one degree lower) are ordered
/// lexicographically by arrow index and the non-pivot columns of the reduced
/// relation span are kept.
class GradedAlgebra {
public:
    const GradedDimTable& dims() const noexcept { return table_; }
    /// Basis of (e_i A e_j)_d as residue classes of paths.
    const std::vector<Path>& basis(Vertex i, Vertex j, std::size_t degree) const;

private:
    friend GradedAlgebra compute_graded_algebra(const BoundQuiver&, std::size_t);
    GradedAlgebra(GradedDimTable table, std::vector<std::vector<std::vector<Path>>> bases);

    GradedDimTable table_;
    std::vector<std::vector<std::vector<Path>>> bases_;  // [degree][i * n + j]
};

/// All paths of length `degree` from i to j, lexicographic in arrow indices.
std::vector<Path> enumerate_paths(const Quiver& q, Vertex i, Vertex j, std::size_t degree);

/// Throws Error(DegreeCapExceeded) when no vanishing degree is found up to
/// `degree_cap`.
GradedAlgebra compute_graded_algebra(const BoundQuiver& bq, std::size_t degree_cap = kDefaultDegreeCap);
GradedDimTable graded_dims(const BoundQuiver& bq, std::size_t degree_cap = kDefaultDegreeCap);

/// c_ij(q) = sum_d dim(e_i A e_j)_d q^d.
PolyMatrix cartan_matrix(const GradedDimTable& table);
PolyMatrix cartan_matrix(const BoundQuiver& bq, std::size_t degree_cap = kDefaultDegreeCap);

enum class DimKind { Simple, Projective, Injective };

/// Graded dimension vector of S(i), P(i) (row i of C_q) or I(i) (column i).
PolyVector dim_vector(const PolyMatrix& cartan, DimKind kind, Vertex i);
PolyVector dim_vector(const BoundQuiver& bq, DimKind kind, Vertex i, std::size_t degree_cap = kDefaultDegreeCap);

struct DeterminantCheck {
    Polynomial det;
    bool unimodular = false;
};

/// det C_q and whether it is +-1. Unimodularity is necessary for finite
/// global dimension, not sufficient.
DeterminantCheck cartan_det_check(const PolyMatrix& cartan);
DeterminantCheck cartan_det_check(const BoundQuiver& bq, std::size_t degree_cap = kDefaultDegreeCap);

}  // namespace qcox
