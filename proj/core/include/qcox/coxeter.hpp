#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "qcox/algebra.hpp"
#include "qcox/matrix.hpp"
#include "qcox/quiver.hpp"

namespace qcox {

/// Vertex order (a_1, ..., a_n) in which a_k is a sink of the full subquiver
/// on the vertices not yet listed.
struct AdmissibleNumbering {
    std::vector<Vertex> order;

    friend bool operator==(const AdmissibleNumbering&, const AdmissibleNumbering&) = default;
};

/// Smallest-index sink first at every step. Throws Error(NotAcyclic).
AdmissibleNumbering admissible_numbering(const Quiver& q);
/// Largest-index sink first at every step; differs from the default exactly
/// when some step offers a choice.
AdmissibleNumbering admissible_numbering_largest_first(const Quiver& q);
bool is_admissible_numbering(const Quiver& q, const std::vector<Vertex>& order);

enum class ReflectionFlavor { GraphS, CartanGamma };

/// Matrix of a reflection in the standard basis (images of e_j are columns);
/// it differs from the identity only in row `vertex`.
struct ReflectionMatrix {
    PolyMatrix matrix;
    Vertex vertex = 0;
    ReflectionFlavor flavor = ReflectionFlavor::GraphS;
};

// ----------------------------------------------------- graph reflections

/// s_i(e_i) = -e_i, s_i(e_j) = e_j + q a_ji e_i. Throws Error(LoopAtVertex).
ReflectionMatrix graph_reflection(const Quiver& q, Vertex i);

/// Product S_{a_1} S_{a_2} ... S_{a_n} along `numbering` (a_1 leftmost).
PolyMatrix coxeter_matrix_graph(const Quiver& q, const AdmissibleNumbering& numbering);
/// Same along the default admissible numbering. Throws Error(NotAcyclic).
PolyMatrix coxeter_matrix_graph(const Quiver& q);

/// Gram matrix of the symmetric form: G = E - (q/2)(B + B^T), b_ij = #arrows i->j.
PolyMatrix gram_matrix_graph(const Quiver& q);
Polynomial bilinear_form_graph(const Quiver& q, const PolyVector& x, const PolyVector& y);
Polynomial quadratic_form_graph(const Quiver& q, const PolyVector& x);

/// Reverses every arrow incident to `a`; names and order of arrows are kept.
Quiver sigma_reflect(const Quiver& q, Vertex a);
/// Throws Error(RelationsPresent) unless the bound quiver has no relations.
BoundQuiver sigma_reflect(const BoundQuiver& bq, Vertex a);

// ----------------------------------------------------- Cartan-based forms

/// A_q = C^-1 + (C^-1)^T. The symmetric form is (x, y)_q = 1/2 x^T A_q y.
struct SymmetricFormMatrix {
    PolyMatrix matrix;

    Polynomial value(const PolyVector& x, const PolyVector& y) const;
};

/// Throws Error(NotUnimodular).
SymmetricFormMatrix symmetric_form_matrix(const PolyMatrix& cartan);

/// gamma_i(e_j) = e_j - a_ij(q) e_i. Throws Error(NotUnimodular).
ReflectionMatrix gamma_reflection(const PolyMatrix& cartan, Vertex i);
ReflectionMatrix gamma_reflection(const SymmetricFormMatrix& form, Vertex i);

/// <x, y>_q = x^T C^-1 y. Throws Error(NotUnimodular) or Error(DimensionMismatch).
Polynomial euler_form(const PolyMatrix& cartan, const PolyVector& x, const PolyVector& y);

/// -C^T C^-1.
PolyMatrix coxeter_matrix_from_cartan(const PolyMatrix& cartan);
/// gamma_{a_1} ... gamma_{a_n} along `numbering`.
PolyMatrix coxeter_matrix_gamma(const PolyMatrix& cartan, const AdmissibleNumbering& numbering);

enum class CoxeterMethod { Reflections, Cartan };

/// Reflections: product of gamma reflections along the default admissible
/// numbering (acyclic quivers only). Cartan: -C^T C^-1 (any quiver whose
/// Cartan matrix is unimodular).
PolyMatrix coxeter_matrix_bound(const BoundQuiver& bq, CoxeterMethod method, std::size_t degree_cap = kDefaultDegreeCap);

}  // namespace qcox
