#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qcox/rational.hpp"

namespace qcox {

using Vertex = std::size_t;
using ArrowId = std::size_t;

struct Arrow {
    std::string name;
    Vertex source = 0;
    Vertex target = 0;

    friend bool operator==(const Arrow&, const Arrow&) = default;
};

/// Finite directed multigraph. Vertex order is significant: it fixes the
/// row/column indexing of every matrix computed from the quiver.
class Quiver {
public:
    Quiver() = default;
    Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows);

    std::size_t vertex_count() const noexcept { return vertices_.size(); }
    std::size_t arrow_count() const noexcept { return arrows_.size(); }
    const std::vector<std::string>& vertices() const noexcept { return vertices_; }
    const std::vector<Arrow>& arrows() const noexcept { return arrows_; }
    const Arrow& arrow(ArrowId a) const { return arrows_.at(a); }
    const std::string& vertex_name(Vertex v) const { return vertices_.at(v); }

    std::optional<Vertex> find_vertex(std::string_view name) const;
    std::optional<ArrowId> find_arrow(std::string_view name) const;
    /// Like find_vertex, but throws Error(InvalidVertex).
    Vertex vertex(std::string_view name) const;

    /// Arrow ids leaving v, ascending.
    const std::vector<ArrowId>& out_arrows(Vertex v) const { return out_.at(v); }

    /// b_ij: number of arrows i -> j.
    std::size_t arrows_between(Vertex i, Vertex j) const;
    /// a_ij = b_ij + b_ji: number of edges joining i and j in the underlying graph.
    std::size_t edges_between(Vertex i, Vertex j) const;

    bool has_loops() const;
    bool has_loop_at(Vertex v) const;
    bool is_acyclic() const;
    bool is_connected() const;
    bool is_sink(Vertex v) const;
    std::vector<Vertex> sinks() const;

    friend bool operator==(const Quiver& a, const Quiver& b) {
        return a.vertices_ == b.vertices_ && a.arrows_ == b.arrows_;
    }

private:
    std::vector<std::string> vertices_;
    std::vector<Arrow> arrows_;
    std::vector<std::vector<ArrowId>> out_;
};

/// Sequence of arrows traversed left to right (a*b: first a, then b). The
/// empty sequence is the trivial path at `source`.
struct Path {
    std::vector<ArrowId> arrows;
    Vertex source = 0;
    Vertex target = 0;

    static Path trivial(Vertex v) { return Path{{}, v, v}; }
    /// Builds the path from arrow ids; throws Error(ValidationError) when
    /// consecutive arrows do not compose or the list is empty.
    static Path from_arrows(const Quiver& q, std::vector<ArrowId> arrows);

    std::size_t length() const noexcept { return arrows.size(); }
    bool composes(const Quiver& q) const;
    std::string to_string(const Quiver& q) const;

    friend bool operator==(const Path&, const Path&) = default;
    friend auto operator<=>(const Path& a, const Path& b) { return a.arrows <=> b.arrows; }
};

struct RelationTerm {
    Rational coeff;
    Path path;

    friend bool operator==(const RelationTerm&, const RelationTerm&) = default;
};

/// Linear combination of parallel paths of one common length.
struct Relation {
    std::vector<RelationTerm> terms;

    Vertex source() const { return terms.front().path.source; }
    Vertex target() const { return terms.front().path.target; }
    std::size_t degree() const { return terms.front().path.length(); }

    friend bool operator==(const Relation&, const Relation&) = default;
};

struct BoundQuiver {
    std::string name = "Q";
    Quiver quiver;
    std::vector<Relation> relations;

    std::size_t vertex_count() const noexcept { return quiver.vertex_count(); }

    friend bool operator==(const BoundQuiver&, const BoundQuiver&) = default;
};

struct RelationCheck {
    std::size_t index = 0;
    bool nonempty = true;
    bool composable = true;
    bool parallel = true;
    bool homogeneous = true;
    bool degree_at_least_two = true;
    bool distinct_paths = true;
    bool nonzero_coeffs = true;

    bool ok() const noexcept {
        return nonempty && composable && parallel && homogeneous && degree_at_least_two && distinct_paths && nonzero_coeffs;
    }
};

struct ValidationReport {
    bool nonempty = true;
    bool vertex_names_unique = true;
    bool arrow_names_unique = true;
    bool endpoints_valid = true;
    bool connected = true;
    bool acyclic = true;
    bool has_loops = false;
    std::vector<RelationCheck> relations;

    bool passes() const;
    /// Failure names in a fixed order, e.g. "Disconnected", "NonHomogeneous(relation 2)".
    std::vector<std::string> failures() const;
};

/// Checks the bound-quiver invariants: nonempty, unique names, valid
/// endpoints, connected underlying graph, and per relation: composable,
/// parallel, homogeneous, degree >= 2, distinct paths, nonzero coefficients.
/// Loops and oriented cycles are reported but do not fail validation.
ValidationReport validate(const BoundQuiver& bq);

/// Throws Error(ValidationError) naming the first failure.
void require_valid(const BoundQuiver& bq);

}  // namespace qcox
