#include "qcox/coxeter.hpp"

#include <algorithm>

#include "qcox/error.hpp"

namespace qcox {

namespace {

void require_vertex(const Quiver& q, Vertex v) {
    if (v >= q.vertex_count()) throw Error(ErrorKind::InvalidVertex, "vertex index " + std::to_string(v) + " out of range");
}

void require_length(std::size_t n, const PolyVector& x) {
    if (x.size() != n) {
        throw Error(ErrorKind::DimensionMismatch,
                    "vector of length " + std::to_string(x.size()) + " where " + std::to_string(n) + " was expected");
    }
}

template <class Pick>
AdmissibleNumbering numbering_by(const Quiver& q, Pick pick) {
    const std::size_t n = q.vertex_count();
    std::vector<bool> removed(n, false);
    // Remaining out-degree once listed vertices are deleted.
    std::vector<std::size_t> out_degree(n, 0);
    for (const auto& a : q.arrows()) ++out_degree[a.source];
    AdmissibleNumbering num;
    for (std::size_t step = 0; step < n; ++step) {
        std::vector<Vertex> sinks;
        for (Vertex v = 0; v < n; ++v)
            if (!removed[v] && out_degree[v] == 0) sinks.push_back(v);
        if (sinks.empty()) throw Error(ErrorKind::NotAcyclic, "quiver has an oriented cycle; no admissible numbering exists");
        const Vertex s = pick(sinks);
        removed[s] = true;
        num.order.push_back(s);
        for (const auto& a : q.arrows()) {
            if (a.target == s && !removed[a.source]) --out_degree[a.source];
        }
    }
    return num;
}

PolyMatrix product(std::size_t n, const std::vector<Vertex>& order, const auto& reflection_of) {
    PolyMatrix acc = PolyMatrix::identity(n);
    for (Vertex v : order) acc = acc * reflection_of(v);
    return acc;
}

const Polynomial kHalfQ = Polynomial::monomial(Rational(1, 2), 1);

}  // namespace

AdmissibleNumbering admissible_numbering(const Quiver& q) {
    return numbering_by(q, [](const std::vector<Vertex>& s) { return s.front(); });
}

AdmissibleNumbering admissible_numbering_largest_first(const Quiver& q) {
    return numbering_by(q, [](const std::vector<Vertex>& s) { return s.back(); });
}

bool is_admissible_numbering(const Quiver& q, const std::vector<Vertex>& order) {
    const std::size_t n = q.vertex_count();
    if (order.size() != n) return false;
    std::vector<bool> seen(n, false);
    for (Vertex v : order) {
        if (v >= n || seen[v]) return false;
        seen[v] = true;
    }
    std::vector<bool> removed(n, false);
    for (Vertex v : order) {
        for (ArrowId a : q.out_arrows(v)) {
            if (!removed[q.arrow(a).target]) return false;
        }
        removed[v] = true;
    }
    return true;
}

ReflectionMatrix graph_reflection(const Quiver& q, Vertex i) {
    require_vertex(q, i);
    if (q.has_loop_at(i)) throw Error(ErrorKind::LoopAtVertex, "loop at vertex " + q.vertex_name(i));
    const std::size_t n = q.vertex_count();
    PolyMatrix s = PolyMatrix::identity(n);
    s(i, i) = Polynomial(-1);
    for (Vertex j = 0; j < n; ++j) {
        if (j == i) continue;
        const auto a = q.edges_between(j, i);
        if (a) s(i, j) = Polynomial::monomial(Rational(static_cast<std::int64_t>(a)), 1);
    }
    return {std::move(s), i, ReflectionFlavor::GraphS};
}

PolyMatrix coxeter_matrix_graph(const Quiver& q, const AdmissibleNumbering& numbering) {
    if (!is_admissible_numbering(q, numbering.order)) throw Error(ErrorKind::InvalidArgument, "not an admissible numbering");
    return product(q.vertex_count(), numbering.order, [&](Vertex v) { return graph_reflection(q, v).matrix; });
}

PolyMatrix coxeter_matrix_graph(const Quiver& q) { return coxeter_matrix_graph(q, admissible_numbering(q)); }

PolyMatrix gram_matrix_graph(const Quiver& q) {
    const std::size_t n = q.vertex_count();
    PolyMatrix g = PolyMatrix::identity(n);
    for (const auto& a : q.arrows()) {
        g(a.source, a.target) -= kHalfQ;
        g(a.target, a.source) -= kHalfQ;
    }
    return g;
}

Polynomial bilinear_form_graph(const Quiver& q, const PolyVector& x, const PolyVector& y) {
    require_length(q.vertex_count(), x);
    require_length(q.vertex_count(), y);
    Polynomial diag;
    for (std::size_t i = 0; i < x.size(); ++i) diag += x[i] * y[i];
    Polynomial cross;
    for (const auto& a : q.arrows()) cross += x[a.source] * y[a.target] + x[a.target] * y[a.source];
    return diag - kHalfQ * cross;
}

Polynomial quadratic_form_graph(const Quiver& q, const PolyVector& x) {
    require_length(q.vertex_count(), x);
    // sum x_i^2 - q sum_{edges} x_i x_j, each edge counted once
    Polynomial out;
    for (const auto& xi : x) out += xi * xi;
    Polynomial edges;
    for (const auto& a : q.arrows()) edges += x[a.source] * x[a.target];
    return out - Polynomial::q() * edges;
}

Quiver sigma_reflect(const Quiver& q, Vertex a) {
    require_vertex(q, a);
    std::vector<Arrow> arrows = q.arrows();
    for (auto& arr : arrows) {
        if (arr.source == a || arr.target == a) std::swap(arr.source, arr.target);
    }
    return Quiver(q.vertices(), std::move(arrows));
}

BoundQuiver sigma_reflect(const BoundQuiver& bq, Vertex a) {
    if (!bq.relations.empty()) {
        throw Error(ErrorKind::RelationsPresent, "sigma reflection is defined for quivers without relations");
    }
    BoundQuiver out = bq;
    out.quiver = sigma_reflect(bq.quiver, a);
    return out;
}

Polynomial SymmetricFormMatrix::value(const PolyVector& x, const PolyVector& y) const {
    return Polynomial(Rational(1, 2)) * dot(x, matrix * y);
}

SymmetricFormMatrix symmetric_form_matrix(const PolyMatrix& cartan) {
    const PolyMatrix inv = inverse_unimodular(cartan);
    return {inv + inv.transpose()};
}

ReflectionMatrix gamma_reflection(const SymmetricFormMatrix& form, Vertex i) {
    const std::size_t n = form.matrix.order();
    if (i >= n) throw Error(ErrorKind::InvalidVertex, "vertex index " + std::to_string(i) + " out of range");
    PolyMatrix s = PolyMatrix::identity(n);
    for (Vertex j = 0; j < n; ++j) s(i, j) -= form.matrix(i, j);
    return {std::move(s), i, ReflectionFlavor::CartanGamma};
}

ReflectionMatrix gamma_reflection(const PolyMatrix& cartan, Vertex i) {
    return gamma_reflection(symmetric_form_matrix(cartan), i);
}

Polynomial euler_form(const PolyMatrix& cartan, const PolyVector& x, const PolyVector& y) {
    if (x.size() != cartan.order() || y.size() != cartan.order()) {
        throw Error(ErrorKind::DimensionMismatch, "Euler form arguments must have length " + std::to_string(cartan.order()));
    }
    return dot(x, inverse_unimodular(cartan) * y);
}

PolyMatrix coxeter_matrix_from_cartan(const PolyMatrix& cartan) {
    return -(cartan.transpose() * inverse_unimodular(cartan));
}

PolyMatrix coxeter_matrix_gamma(const PolyMatrix& cartan, const AdmissibleNumbering& numbering) {
    const SymmetricFormMatrix form = symmetric_form_matrix(cartan);
    return product(cartan.order(), numbering.order, [&](Vertex v) { return gamma_reflection(form, v).matrix; });
}

PolyMatrix coxeter_matrix_bound(const BoundQuiver& bq, CoxeterMethod method, std::size_t degree_cap) {
    if (method == CoxeterMethod::Reflections) {
        const AdmissibleNumbering numbering = admissible_numbering(bq.quiver);
        return coxeter_matrix_gamma(cartan_matrix(bq, degree_cap), numbering);
    }
    return coxeter_matrix_from_cartan(cartan_matrix(bq, degree_cap));
}

}  // namespace qcox
