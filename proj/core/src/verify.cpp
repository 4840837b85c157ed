#include "qcox/verify.hpp"

#include <algorithm>
#include <optional>
#include <random>
#include <sstream>

#include "qcox/coxeter.hpp"
#include "qcox/error.hpp"

namespace qcox {

std::string_view to_string(CheckStatus status) noexcept {
    switch (status) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        case CheckStatus::Skipped: return "skipped";
    }
    return "unknown";
}

bool CheckReport::all_passed() const {
    return std::none_of(checks.begin(), checks.end(), [](const Check& c) { return c.status == CheckStatus::Fail; });
}

std::size_t CheckReport::count(CheckStatus status) const {
    return static_cast<std::size_t>(
        std::count_if(checks.begin(), checks.end(), [&](const Check& c) { return c.status == status; }));
}

const Check* CheckReport::find(std::string_view name) const {
    for (const auto& c : checks)
        if (c.identity == name) return &c;
    return nullptr;
}

nlohmann::json to_json(const CheckReport& report) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& c : report.checks) {
        out.push_back({{"identity", c.identity}, {"status", std::string(to_string(c.status))}, {"reason", c.reason}});
    }
    return out;
}

namespace {

// Accumulates instance results of one identity family into a single line.
class Tally {
public:
    explicit Tally(std::string identity) : identity_(std::move(identity)) {}

    void record(bool ok, const std::string& instance) {
        ++checked_;
        if (!ok && !first_failure_) first_failure_ = instance;
        if (!ok) ++failed_;
    }

    void note(std::string text) { notes_.push_back(std::move(text)); }

    Check finish(const std::string& none_reason = "no applicable instances") const {
        Check c{identity_, CheckStatus::Pass, {}};
        std::ostringstream os;
        if (checked_ == 0) {
            c.status = CheckStatus::Skipped;
            os << none_reason;
        } else if (failed_ > 0) {
            c.status = CheckStatus::Fail;
            os << failed_ << " of " << checked_ << " instances failed; first: " << *first_failure_;
        } else {
            os << checked_ << " instance" << (checked_ == 1 ? "" : "s") << " checked";
        }
        for (const auto& n : notes_) os << "; " << n;
        c.reason = os.str();
        return c;
    }

private:
    std::string identity_;
    std::size_t checked_ = 0;
    std::size_t failed_ = 0;
    std::optional<std::string> first_failure_;
    std::vector<std::string> notes_;
};

Check skipped(const char* identity, const std::string& reason) { return {identity, CheckStatus::Skipped, reason}; }

class Verifier {
public:
    Verifier(const BoundQuiver& bq, const VerifyOptions& opt) : bq_(bq), q_(bq.quiver), n_(q_.vertex_count()), opt_(opt) {}

    CheckReport run() {
        graph_checks();
        cartan_checks();
        return std::move(report_);
    }

private:
    std::string name(Vertex v) const { return q_.vertex_name(v); }

    std::optional<std::string> graph_blocker() const {
        if (q_.has_loops()) return std::string("LoopAtVertex: graph reflections need a loop-free quiver");
        if (!q_.is_acyclic()) return std::string("NotAcyclic: graph reflections need an acyclic orientation");
        return std::nullopt;
    }

    void graph_checks() {
        static constexpr const char* names[] = {identity::kGraphInvolution,     identity::kGraphCommute,
                                                identity::kGraphBraid,          identity::kGraphFormInvariance,
                                                identity::kNumberingIndependence, identity::kCoxeterCartanGraph,
                                                identity::kSigmaCartan,         identity::kSigmaCoxeter};
        if (auto why = graph_blocker()) {
            for (const char* id : names) report_.checks.push_back(skipped(id, *why));
            return;
        }

        std::vector<PolyMatrix> s;
        for (Vertex i = 0; i < n_; ++i) s.push_back(graph_reflection(q_, i).matrix);
        const PolyMatrix e = PolyMatrix::identity(n_);

        Tally involution(identity::kGraphInvolution);
        Tally commute(identity::kGraphCommute);
        Tally braid(identity::kGraphBraid);
        for (Vertex i = 0; i < n_; ++i) {
            involution.record(s[i] * s[i] == e, "vertex " + name(i));
            for (Vertex j = i + 1; j < n_; ++j) {
                const std::string pair = "(" + name(i) + ", " + name(j) + ")";
                const auto a = static_cast<std::int64_t>(q_.edges_between(i, j));
                if (a == 0) {
                    commute.record(s[i] * s[j] == s[j] * s[i], pair);
                } else {
                    // m_q = q^2 a_ij a_ji with a_ij = a_ji
                    const Polynomial m = Polynomial::monomial(Rational(a * a), 2);
                    const PolyMatrix lhs = s[i] * s[j] * s[i] - s[j] * s[i] * s[j];
                    const PolyMatrix rhs = (m - Polynomial(1)) * (s[i] - s[j]);
                    braid.record(lhs == rhs, pair);
                }
            }
        }
        report_.checks.push_back(involution.finish());
        report_.checks.push_back(commute.finish("no pair of non-neighbours"));
        report_.checks.push_back(braid.finish("no pair of neighbours"));

        Tally invariance(identity::kGraphFormInvariance);
        const PolyMatrix g = gram_matrix_graph(q_);
        for (Vertex k = 0; k < n_; ++k) invariance.record(s[k].transpose() * g * s[k] == g, "vertex " + name(k));
        if (opt_.random_instances > 0) {
            std::mt19937_64 rng(opt_.seed);
            for (std::size_t t = 0; t < opt_.random_instances; ++t) {
                const PolyVector x = random_vector(rng);
                const PolyVector y = random_vector(rng);
                const Vertex k = static_cast<Vertex>(rng() % n_);
                invariance.record(bilinear_form_graph(q_, s[k] * x, s[k] * y) == bilinear_form_graph(q_, x, y),
                                  "random vectors at vertex " + name(k));
            }
        }
        report_.checks.push_back(invariance.finish());

        const AdmissibleNumbering numbering = admissible_numbering(q_);
        const PolyMatrix phi = coxeter_matrix_graph(q_, numbering);
        const AdmissibleNumbering other = admissible_numbering_largest_first(q_);
        if (other == numbering) {
            report_.checks.push_back(skipped(identity::kNumberingIndependence, "the admissible numbering is unique"));
        } else {
            Tally indep(identity::kNumberingIndependence);
            indep.record(coxeter_matrix_graph(q_, other) == phi, "largest-sink-first numbering");
            report_.checks.push_back(indep.finish());
        }

        // The Coxeter/Cartan identities concern the path algebra of Q itself.
        const BoundQuiver free_bq{bq_.name, q_, {}};
        const PolyMatrix c = cartan_matrix(free_bq, opt_.degree_cap);
        const std::string underlying = bq_.relations.empty() ? "" : "uses the Cartan matrix of Q without relations";

        Tally thm(identity::kCoxeterCartanGraph);
        thm.record(c.transpose() == -(phi * c), "Q");
        if (!underlying.empty()) thm.note(underlying);
        report_.checks.push_back(thm.finish());

        Tally sigma_c(identity::kSigmaCartan);
        Tally sigma_phi(identity::kSigmaCoxeter);
        for (Vertex i : q_.sinks()) {
            const Quiver reflected = sigma_reflect(q_, i);
            const PolyMatrix c2 = cartan_matrix(BoundQuiver{bq_.name, reflected, {}}, opt_.degree_cap);
            const PolyMatrix phi2 = coxeter_matrix_graph(reflected);
            sigma_c.record(c2 == s[i] * c * s[i].transpose(), "sink " + name(i));
            sigma_phi.record(phi2 == s[i] * phi * s[i], "sink " + name(i));
        }
        if (!underlying.empty()) sigma_c.note(underlying);
        report_.checks.push_back(sigma_c.finish());
        report_.checks.push_back(sigma_phi.finish());
    }

    void cartan_checks() {
        static constexpr const char* names[] = {identity::kUnimodular,        identity::kUnitriangular,
                                                identity::kSymmetricForm,     identity::kGammaInvolution,
                                                identity::kGammaCommute,      identity::kGammaNonNeighbours,
                                                identity::kGammaCoxeter,      identity::kGammaBridge,
                                                identity::kProjectiveInjective, identity::kEulerSkew,
                                                identity::kEulerInvariance};
        PolyMatrix c;
        try {
            c = cartan_matrix(bq_, opt_.degree_cap);
        } catch (const Error& err) {
            for (const char* id : names) report_.checks.push_back(skipped(id, std::string(to_string(err.kind())) + ": " + err.what()));
            return;
        }

        const DeterminantCheck dc = cartan_det_check(c);
        if (!dc.unimodular) {
            report_.checks.push_back({identity::kUnimodular, CheckStatus::Skipped,
                                      "det C_q = " + dc.det.to_string() +
                                          "; the global dimension is infinite, the identity does not apply"});
            for (const char* id : names) {
                if (std::string_view(id) != identity::kUnimodular) {
                    report_.checks.push_back(skipped(id, "NotUnimodular: det C_q = " + dc.det.to_string()));
                }
            }
            return;
        }
        report_.checks.push_back({identity::kUnimodular, CheckStatus::Pass, "det C_q = " + dc.det.to_string()});

        const bool acyclic = q_.is_acyclic();
        std::optional<AdmissibleNumbering> numbering;
        if (acyclic) numbering = admissible_numbering(q_);

        if (numbering) {
            Tally tri(identity::kUnitriangular);
            std::vector<std::size_t> perm(numbering->order.begin(), numbering->order.end());
            tri.record(c.permuted(perm).is_lower_unitriangular(), "admissible order");
            report_.checks.push_back(tri.finish());
        } else {
            report_.checks.push_back(skipped(identity::kUnitriangular, "NotAcyclic: no admissible numbering"));
        }

        const SymmetricFormMatrix form = symmetric_form_matrix(c);
        {
            Tally sym(identity::kSymmetricForm);
            sym.record(form.matrix.is_symmetric(), "A_q");
            report_.checks.push_back(sym.finish());
        }

        std::vector<PolyMatrix> gamma;
        for (Vertex i = 0; i < n_; ++i) gamma.push_back(gamma_reflection(form, i).matrix);
        const PolyMatrix e = PolyMatrix::identity(n_);

        Tally inv(identity::kGammaInvolution);
        for (Vertex i = 0; i < n_; ++i) {
            if (form.matrix(i, i) == Polynomial(2)) inv.record(gamma[i] * gamma[i] == e, "vertex " + name(i));
        }
        report_.checks.push_back(inv.finish("no vertex with a_ii(q) = 2"));

        Tally comm(identity::kGammaCommute);
        std::vector<std::string> noncommuting;
        std::size_t non_neighbour_pairs = 0;
        for (Vertex i = 0; i < n_; ++i) {
            for (Vertex j = i + 1; j < n_; ++j) {
                const std::string pair = "(" + name(i) + ", " + name(j) + ")";
                const bool commutes = gamma[i] * gamma[j] == gamma[j] * gamma[i];
                if (form.matrix(i, j).is_zero()) comm.record(commutes, pair);
                if (q_.edges_between(i, j) == 0) {
                    ++non_neighbour_pairs;
                    if (!commutes) noncommuting.push_back(pair);
                }
            }
        }
        report_.checks.push_back(comm.finish("no pair with a_ij(q) = 0"));
        {
            Check info{identity::kGammaNonNeighbours, CheckStatus::Pass, {}};
            if (non_neighbour_pairs == 0) {
                info = skipped(identity::kGammaNonNeighbours, "no pair of non-neighbours");
            } else if (noncommuting.empty()) {
                info.reason = "all " + std::to_string(non_neighbour_pairs) + " non-neighbour pairs commute";
            } else {
                info.reason = "non-commuting non-neighbour pairs:";
                for (const auto& p : noncommuting) info.reason += " " + p;
            }
            report_.checks.push_back(info);
        }

        const PolyMatrix phi = coxeter_matrix_from_cartan(c);
        if (numbering) {
            Tally thm(identity::kGammaCoxeter);
            thm.record(coxeter_matrix_gamma(c, *numbering) == phi, "default numbering");
            const AdmissibleNumbering other = admissible_numbering_largest_first(q_);
            if (other != *numbering) thm.record(coxeter_matrix_gamma(c, other) == phi, "largest-sink-first numbering");
            report_.checks.push_back(thm.finish());
        } else {
            report_.checks.push_back(skipped(identity::kGammaCoxeter, "NotAcyclic: no admissible numbering"));
        }

        if (!acyclic || q_.has_loops()) {
            report_.checks.push_back(skipped(identity::kGammaBridge, "NotAcyclic: graph reflections need an acyclic orientation"));
        } else if (!bq_.relations.empty()) {
            report_.checks.push_back(skipped(identity::kGammaBridge, "relations present"));
        } else {
            Tally bridge(identity::kGammaBridge);
            for (Vertex i = 0; i < n_; ++i) bridge.record(gamma[i] == graph_reflection(q_, i).matrix, "vertex " + name(i));
            report_.checks.push_back(bridge.finish());
        }

        Tally pi(identity::kProjectiveInjective);
        for (Vertex i = 0; i < n_; ++i) {
            const PolyVector p = dim_vector(c, DimKind::Projective, i);
            const PolyVector in = dim_vector(c, DimKind::Injective, i);
            PolyVector rhs = phi * in;
            for (auto& x : rhs) x = -x;
            pi.record(p == rhs, "vertex " + name(i));
        }
        report_.checks.push_back(pi.finish());

        // Matrix forms of the two Euler identities: C^-1 = -C^-T Phi and
        // C^-1 = Phi^T C^-1 Phi.
        const PolyMatrix inv_c = inverse_unimodular(c);
        Tally skew(identity::kEulerSkew);
        Tally invariance(identity::kEulerInvariance);
        skew.record(inv_c == -(inv_c.transpose() * phi), "matrix form");
        invariance.record(inv_c == phi.transpose() * inv_c * phi, "matrix form");
        if (opt_.random_instances > 0) {
            std::mt19937_64 rng(opt_.seed ^ 0x9e3779b97f4a7c15ULL);
            auto euler = [&](const PolyVector& x, const PolyVector& y) { return dot(x, inv_c * y); };
            for (std::size_t t = 0; t < opt_.random_instances; ++t) {
                const PolyVector x = random_vector(rng);
                const PolyVector y = random_vector(rng);
                const Polynomial lhs = euler(x, y);
                skew.record(lhs == -euler(phi * y, x), "random pair " + std::to_string(t));
                invariance.record(lhs == euler(phi * x, phi * y), "random pair " + std::to_string(t));
            }
        }
        report_.checks.push_back(skew.finish());
        report_.checks.push_back(invariance.finish());
    }

    PolyVector random_vector(std::mt19937_64& rng) const {
        std::uniform_int_distribution<int> dist(-3, 3);
        PolyVector v(n_);
        for (auto& x : v) x = Polynomial(dist(rng));
        return v;
    }

    const BoundQuiver& bq_;
    const Quiver& q_;
    std::size_t n_;
    VerifyOptions opt_;
    CheckReport report_;
};

}  // namespace

CheckReport verify_identities(const BoundQuiver& bq, const VerifyOptions& options) {
    if (bq.vertex_count() == 0) throw Error(ErrorKind::ValidationError, "NoVertices");
    return Verifier(bq, options).run();
}

}  // namespace qcox
