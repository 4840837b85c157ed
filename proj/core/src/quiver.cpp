#include "qcox/quiver.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "qcox/error.hpp"

namespace qcox {

Quiver::Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows)
    : vertices_(std::move(vertices)), arrows_(std::move(arrows)), out_(vertices_.size()) {
    for (ArrowId a = 0; a < arrows_.size(); ++a) {
        if (arrows_[a].source < vertices_.size()) out_[arrows_[a].source].push_back(a);
    }
}

std::optional<Vertex> Quiver::find_vertex(std::string_view name) const {
    auto it = std::find(vertices_.begin(), vertices_.end(), name);
    if (it == vertices_.end()) return std::nullopt;
    return static_cast<Vertex>(it - vertices_.begin());
}

std::optional<ArrowId> Quiver::find_arrow(std::string_view name) const {
    for (ArrowId a = 0; a < arrows_.size(); ++a) {
        if (arrows_[a].name == name) return a;
    }
    return std::nullopt;
}

Vertex Quiver::vertex(std::string_view name) const {
    if (auto v = find_vertex(name)) return *v;
    throw Error(ErrorKind::InvalidVertex, "no vertex named '" + std::string(name) + "'");
}

std::size_t Quiver::arrows_between(Vertex i, Vertex j) const {
    return static_cast<std::size_t>(
        std::count_if(arrows_.begin(), arrows_.end(), [&](const Arrow& a) { return a.source == i && a.target == j; }));
}

std::size_t Quiver::edges_between(Vertex i, Vertex j) const {
    if (i == j) return arrows_between(i, i);
    return arrows_between(i, j) + arrows_between(j, i);
}

bool Quiver::has_loops() const {
    return std::any_of(arrows_.begin(), arrows_.end(), [](const Arrow& a) { return a.source == a.target; });
}

bool Quiver::has_loop_at(Vertex v) const { return arrows_between(v, v) > 0; }

bool Quiver::is_acyclic() const {
    // Kahn: repeatedly strip sinks.
    const std::size_t n = vertices_.size();
    std::vector<std::size_t> out_degree(n, 0);
    for (const auto& a : arrows_) ++out_degree[a.source];
    std::vector<Vertex> stack;
    for (Vertex v = 0; v < n; ++v)
        if (out_degree[v] == 0) stack.push_back(v);
    std::size_t removed = 0;
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        ++removed;
        for (const auto& a : arrows_) {
            if (a.target == v && --out_degree[a.source] == 0) stack.push_back(a.source);
        }
    }
    return removed == n;
}

bool Quiver::is_connected() const {
    const std::size_t n = vertices_.size();
    if (n == 0) return false;
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& a : arrows_) parent[find(a.source)] = find(a.target);
    const std::size_t root = find(0);
    for (Vertex v = 1; v < n; ++v)
        if (find(v) != root) return false;
    return true;
}

bool Quiver::is_sink(Vertex v) const { return out_.at(v).empty(); }

std::vector<Vertex> Quiver::sinks() const {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < vertices_.size(); ++v)
        if (is_sink(v)) out.push_back(v);
    return out;
}

Path Path::from_arrows(const Quiver& q, std::vector<ArrowId> arrows) {
    if (arrows.empty()) throw Error(ErrorKind::ValidationError, "empty arrow list for a path");
    Path p{std::move(arrows), 0, 0};
    p.source = q.arrow(p.arrows.front()).source;
    p.target = q.arrow(p.arrows.back()).target;
    if (!p.composes(q)) throw Error(ErrorKind::ValidationError, "NotComposable: " + p.to_string(q));
    return p;
}

bool Path::composes(const Quiver& q) const {
    if (arrows.empty()) return source == target;
    if (q.arrow(arrows.front()).source != source || q.arrow(arrows.back()).target != target) return false;
    for (std::size_t k = 1; k < arrows.size(); ++k) {
        if (q.arrow(arrows[k - 1]).target != q.arrow(arrows[k]).source) return false;
    }
    return true;
}

std::string Path::to_string(const Quiver& q) const {
    if (arrows.empty()) return "e_" + q.vertex_name(source);
    std::string out;
    for (std::size_t k = 0; k < arrows.size(); ++k) {
        if (k) out += '*';
        out += q.arrow(arrows[k]).name;
    }
    return out;
}

bool ValidationReport::passes() const { return failures().empty(); }

std::vector<std::string> ValidationReport::failures() const {
    std::vector<std::string> out;
    if (!nonempty) out.emplace_back("NoVertices");
    if (!vertex_names_unique) out.emplace_back("DuplicateVertexName");
    if (!arrow_names_unique) out.emplace_back("DuplicateArrowName");
    if (!endpoints_valid) out.emplace_back("InvalidArrowEndpoint");
    if (nonempty && !connected) out.emplace_back("Disconnected");
    for (const auto& r : relations) {
        const std::string where = "(relation " + std::to_string(r.index + 1) + ")";
        if (!r.nonempty) out.push_back("EmptyRelation" + where);
        if (!r.composable) out.push_back("NotComposable" + where);
        if (!r.parallel) out.push_back("NotParallel" + where);
        if (!r.homogeneous) out.push_back("NonHomogeneous" + where);
        if (!r.degree_at_least_two) out.push_back("DegreeBelowTwo" + where);
        if (!r.distinct_paths) out.push_back("DuplicatePath" + where);
        if (!r.nonzero_coeffs) out.push_back("ZeroCoefficient" + where);
    }
    return out;
}

ValidationReport validate(const BoundQuiver& bq) {
    const Quiver& q = bq.quiver;
    ValidationReport report;
    report.nonempty = q.vertex_count() > 0;
    report.vertex_names_unique =
        std::set<std::string>(q.vertices().begin(), q.vertices().end()).size() == q.vertex_count();
    std::set<std::string> arrow_names;
    for (const auto& a : q.arrows()) {
        arrow_names.insert(a.name);
        if (a.source >= q.vertex_count() || a.target >= q.vertex_count()) report.endpoints_valid = false;
    }
    report.arrow_names_unique = arrow_names.size() == q.arrow_count();
    if (!report.endpoints_valid) {
        report.connected = false;
        report.acyclic = false;
        return report;
    }
    report.connected = q.is_connected();
    report.acyclic = q.is_acyclic();
    report.has_loops = q.has_loops();

    for (std::size_t r = 0; r < bq.relations.size(); ++r) {
        const Relation& rel = bq.relations[r];
        RelationCheck check;
        check.index = r;
        if (rel.terms.empty()) {
            check.nonempty = false;
            report.relations.push_back(check);
            continue;
        }
        std::set<std::vector<ArrowId>> seen;
        const auto& first = rel.terms.front().path;
        for (const auto& term : rel.terms) {
            const Path& p = term.path;
            bool ids_ok = std::all_of(p.arrows.begin(), p.arrows.end(), [&](ArrowId a) { return a < q.arrow_count(); });
            if (!ids_ok || !p.composes(q)) check.composable = false;
            if (p.source != first.source || p.target != first.target) check.parallel = false;
            if (p.length() != first.length()) check.homogeneous = false;
            if (p.length() < 2) check.degree_at_least_two = false;
            if (!seen.insert(p.arrows).second) check.distinct_paths = false;
            if (term.coeff.is_zero()) check.nonzero_coeffs = false;
        }
        report.relations.push_back(check);
    }
    return report;
}

void require_valid(const BoundQuiver& bq) {
    auto failures = validate(bq).failures();
    if (!failures.empty()) throw Error(ErrorKind::ValidationError, failures.front());
}

}  // namespace qcox
