#include "qcox/algebra.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "qcox/error.hpp"

namespace qcox {

GradedDimTable::GradedDimTable(std::size_t n_vertices, std::vector<std::vector<std::size_t>> dims_by_degree)
    : n_(n_vertices), dims_(std::move(dims_by_degree)) {}

std::size_t GradedDimTable::dim(Vertex i, Vertex j, std::size_t degree) const {
    if (i >= n_ || j >= n_) throw Error(ErrorKind::InvalidVertex, "vertex index out of range");
    if (degree >= dims_.size()) return 0;
    return dims_[degree][i * n_ + j];
}

std::size_t GradedDimTable::total(std::size_t degree) const {
    if (degree >= dims_.size()) return 0;
    return std::accumulate(dims_[degree].begin(), dims_[degree].end(), std::size_t{0});
}

GradedAlgebra::GradedAlgebra(GradedDimTable table, std::vector<std::vector<std::vector<Path>>> bases)
    : table_(std::move(table)), bases_(std::move(bases)) {}

const std::vector<Path>& GradedAlgebra::basis(Vertex i, Vertex j, std::size_t degree) const {
    static const std::vector<Path> empty;
    const std::size_t n = table_.vertex_count();
    if (i >= n || j >= n) throw Error(ErrorKind::InvalidVertex, "vertex index out of range");
    if (degree >= bases_.size()) return empty;
    return bases_[degree][i * n + j];
}

std::vector<Path> enumerate_paths(const Quiver& q, Vertex i, Vertex j, std::size_t degree) {
    if (i >= q.vertex_count() || j >= q.vertex_count()) throw Error(ErrorKind::InvalidVertex, "vertex index out of range");
    std::vector<Path> out;
    if (degree == 0) {
        if (i == j) out.push_back(Path::trivial(i));
        return out;
    }
    std::vector<ArrowId> stack;
    // Depth-first over out-arrows in ascending id order yields lexicographic order.
    auto dfs = [&](auto&& self, Vertex at) -> void {
        if (stack.size() == degree) {
            if (at == j) out.push_back(Path{stack, i, j});
            return;
        }
        for (ArrowId a : q.out_arrows(at)) {
            stack.push_back(a);
            self(self, q.arrow(a).target);
            stack.pop_back();
        }
    };
    dfs(dfs, i);
    return out;
}

namespace {

using Dense = std::vector<Rational>;

// One homogeneous block (e_i kQ e_j)_d seen through its candidate paths.
struct Block {
    std::vector<Path> candidates;
    std::map<std::vector<ArrowId>, std::size_t> index;
    std::vector<std::size_t> basis;              // candidate ids kept as basis
    std::vector<std::ptrdiff_t> basis_pos;       // candidate id -> basis position, -1 for pivots
    std::vector<Dense> pivot_expr;               // candidate id -> expression over the basis
};

class GradedBuilder {
public:
    explicit GradedBuilder(const BoundQuiver& bq) : bq_(bq), q_(bq.quiver), n_(q_.vertex_count()) {
        std::vector<Block> level0(n_ * n_);
        for (Vertex v = 0; v < n_; ++v) {
            Block& b = level0[v * n_ + v];
            b.candidates.push_back(Path::trivial(v));
            b.index.emplace(std::vector<ArrowId>{}, 0);
            b.basis = {0};
            b.basis_pos = {0};
            b.pivot_expr.resize(1);
        }
        levels_.push_back(std::move(level0));
    }

    std::size_t total_dim(std::size_t d) const {
        std::size_t s = 0;
        for (const auto& b : levels_[d]) s += b.basis.size();
        return s;
    }

    void build_next() {
        const std::size_t d = levels_.size();
        std::vector<Block> level(n_ * n_);
        for (Vertex i = 0; i < n_; ++i) {
            for (Vertex j = 0; j < n_; ++j) {
                Block& blk = level[i * n_ + j];
                for (Vertex k = 0; k < n_; ++k) {
                    const Block& prev = levels_[d - 1][i * n_ + k];
                    if (prev.basis.empty()) continue;
                    for (ArrowId a : q_.out_arrows(k)) {
                        if (q_.arrow(a).target != j) continue;
                        for (std::size_t c : prev.basis) {
                            Path p = prev.candidates[c];
                            p.arrows.push_back(a);
                            p.target = j;
                            blk.candidates.push_back(std::move(p));
                        }
                    }
                }
                std::sort(blk.candidates.begin(), blk.candidates.end());
                for (std::size_t c = 0; c < blk.candidates.size(); ++c) blk.index.emplace(blk.candidates[c].arrows, c);
            }
        }
        levels_.push_back(std::move(level));
        for (Vertex i = 0; i < n_; ++i)
            for (Vertex j = 0; j < n_; ++j) reduce_block(d, i, j);
    }

    std::vector<std::vector<std::size_t>> dims() const {
        std::vector<std::vector<std::size_t>> out;
        for (const auto& level : levels_) {
            std::vector<std::size_t> row;
            for (const auto& b : level) row.push_back(b.basis.size());
            out.push_back(std::move(row));
        }
        return out;
    }

    std::vector<std::vector<std::vector<Path>>> bases() const {
        std::vector<std::vector<std::vector<Path>>> out;
        for (const auto& level : levels_) {
            std::vector<std::vector<Path>> per_block;
            for (const auto& b : level) {
                std::vector<Path> paths;
                for (std::size_t c : b.basis) paths.push_back(b.candidates[c]);
                per_block.push_back(std::move(paths));
            }
            out.push_back(std::move(per_block));
        }
        return out;
    }

    void drop_last_level() { levels_.pop_back(); }

private:
    // v (over the basis of block (i,k) at degree d-1) times arrow a, written in
    // candidate coordinates of block (i, t(a)) at degree d.
    Dense extend(std::size_t d, Vertex i, Vertex k, const Dense& v, ArrowId a) const {
        const Block& prev = levels_[d - 1][i * n_ + k];
        const Block& next = levels_[d][i * n_ + q_.arrow(a).target];
        Dense out(next.candidates.size());
        for (std::size_t pos = 0; pos < v.size(); ++pos) {
            if (v[pos].is_zero()) continue;
            std::vector<ArrowId> key = prev.candidates[prev.basis[pos]].arrows;
            key.push_back(a);
            out[next.index.at(key)] += v[pos];
        }
        return out;
    }

    Dense normal_form(std::size_t d, Vertex i, Vertex j, const Dense& cand) const {
        const Block& blk = levels_[d][i * n_ + j];
        Dense out(blk.basis.size());
        for (std::size_t c = 0; c < cand.size(); ++c) {
            if (cand[c].is_zero()) continue;
            if (blk.basis_pos[c] >= 0) {
                out[static_cast<std::size_t>(blk.basis_pos[c])] += cand[c];
            } else {
                for (std::size_t pos = 0; pos < out.size(); ++pos) {
                    if (!blk.pivot_expr[c][pos].is_zero()) out[pos] += cand[c] * blk.pivot_expr[c][pos];
                }
            }
        }
        return out;
    }

    void reduce_block(std::size_t d, Vertex i, Vertex j) {
        Block& blk = levels_[d][i * n_ + j];
        const std::size_t width = blk.candidates.size();
        std::vector<Dense> generators;
        if (width > 0) {
            for (const Relation& rel : bq_.relations) {
                if (rel.target() != j || rel.degree() > d) continue;
                const std::size_t e = d - rel.degree();
                const Block& left = levels_[e][i * n_ + rel.source()];
                for (std::size_t pos = 0; pos < left.basis.size(); ++pos) {
                    Dense gen(width);
                    for (const RelationTerm& term : rel.terms) {
                        Dense v(left.basis.size());
                        v[pos] = Rational(1);
                        Vertex at = rel.source();
                        std::size_t deg = e;
                        for (std::size_t s = 0; s + 1 < term.path.length(); ++s) {
                            const ArrowId a = term.path.arrows[s];
                            v = normal_form(deg + 1, i, q_.arrow(a).target, extend(deg + 1, i, at, v, a));
                            at = q_.arrow(a).target;
                            ++deg;
                        }
                        Dense cand = extend(d, i, at, v, term.path.arrows.back());
                        for (std::size_t c = 0; c < width; ++c) {
                            if (!cand[c].is_zero()) gen[c] += term.coeff * cand[c];
                        }
                    }
                    if (std::any_of(gen.begin(), gen.end(), [](const Rational& r) { return !r.is_zero(); })) {
                        generators.push_back(std::move(gen));
                    }
                }
            }
        }

        RationalMatrix span(generators.size(), width);
        for (std::size_t r = 0; r < generators.size(); ++r)
            for (std::size_t c = 0; c < width; ++c) span(r, c) = generators[r][c];
        std::vector<std::size_t> pivots;
        RationalMatrix rref = reduced_row_echelon(span, &pivots);

        blk.basis_pos.assign(width, -1);
        std::vector<bool> is_pivot(width, false);
        for (std::size_t p : pivots) is_pivot[p] = true;
        for (std::size_t c = 0; c < width; ++c) {
            if (!is_pivot[c]) {
                blk.basis_pos[c] = static_cast<std::ptrdiff_t>(blk.basis.size());
                blk.basis.push_back(c);
            }
        }
        blk.pivot_expr.assign(width, Dense{});
        for (std::size_t r = 0; r < pivots.size(); ++r) {
            Dense expr(blk.basis.size());
            for (std::size_t pos = 0; pos < blk.basis.size(); ++pos) expr[pos] = -rref(r, blk.basis[pos]);
            blk.pivot_expr[pivots[r]] = std::move(expr);
        }
    }

    const BoundQuiver& bq_;
    const Quiver& q_;
    std::size_t n_;
    std::vector<std::vector<Block>> levels_;
};

}  // namespace

GradedAlgebra compute_graded_algebra(const BoundQuiver& bq, std::size_t degree_cap) {
    const std::size_t n = bq.vertex_count();
    if (n == 0) throw Error(ErrorKind::ValidationError, "NoVertices");
    GradedBuilder builder(bq);
    for (std::size_t d = 1; d <= degree_cap; ++d) {
        builder.build_next();
        if (builder.total_dim(d) != 0) continue;
        // A is generated in degree <= 1, so A_d = 0 forces A_{d+1} = 0.
        builder.build_next();
        if (builder.total_dim(d + 1) != 0) {
            throw Error(ErrorKind::Internal, "graded component vanished at degree " + std::to_string(d) + " but not at degree " +
                                                 std::to_string(d + 1));
        }
        builder.drop_last_level();
        builder.drop_last_level();
        return GradedAlgebra(GradedDimTable(n, builder.dims()), builder.bases());
    }
    throw Error(ErrorKind::DegreeCapExceeded,
                "graded components do not vanish up to degree " + std::to_string(degree_cap) + "; the algebra may be infinite-dimensional");
}

GradedDimTable graded_dims(const BoundQuiver& bq, std::size_t degree_cap) {
    return compute_graded_algebra(bq, degree_cap).dims();
}

PolyMatrix cartan_matrix(const GradedDimTable& table) {
    const std::size_t n = table.vertex_count();
    PolyMatrix c(n);
    for (Vertex i = 0; i < n; ++i) {
        for (Vertex j = 0; j < n; ++j) {
            std::vector<Rational> coeffs;
            for (std::size_t d = 0; d < table.max_degree(); ++d) coeffs.emplace_back(static_cast<std::int64_t>(table.dim(i, j, d)));
            c(i, j) = Polynomial(std::move(coeffs));
        }
    }
    return c;
}

PolyMatrix cartan_matrix(const BoundQuiver& bq, std::size_t degree_cap) { return cartan_matrix(graded_dims(bq, degree_cap)); }

PolyVector dim_vector(const PolyMatrix& cartan, DimKind kind, Vertex i) {
    const std::size_t n = cartan.order();
    if (i >= n) throw Error(ErrorKind::InvalidVertex, "vertex index " + std::to_string(i) + " out of range");
    switch (kind) {
        case DimKind::Simple: return unit_vector(n, i);
        case DimKind::Projective: return cartan.row(i);
        case DimKind::Injective: return cartan.column(i);
    }
    throw Error(ErrorKind::InvalidArgument, "unknown dimension-vector kind");
}

PolyVector dim_vector(const BoundQuiver& bq, DimKind kind, Vertex i, std::size_t degree_cap) {
    if (i >= bq.vertex_count()) throw Error(ErrorKind::InvalidVertex, "vertex index " + std::to_string(i) + " out of range");
    if (kind == DimKind::Simple) return unit_vector(bq.vertex_count(), i);
    return dim_vector(cartan_matrix(bq, degree_cap), kind, i);
}

DeterminantCheck cartan_det_check(const PolyMatrix& cartan) {
    DeterminantCheck out;
    out.det = det(cartan);
    out.unimodular = out.det.is_unit_sign();
    return out;
}

DeterminantCheck cartan_det_check(const BoundQuiver& bq, std::size_t degree_cap) {
    return cartan_det_check(cartan_matrix(bq, degree_cap));
}

}  // namespace qcox
