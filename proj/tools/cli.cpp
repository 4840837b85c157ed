#include "cli.hpp"

#include <sstream>

#include "qcox/coxeter.hpp"
#include "qcox/dsl.hpp"
#include "qcox/error.hpp"
#include "qcox/format.hpp"
#include "qcox/verify.hpp"

namespace qcox::cli {

namespace {

bool ends_with(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

BoundQuiver load(const CliConfig& cfg, const std::string& input) {
    if (ends_with(cfg.input_path, ".json")) return parse_quiver_json(input);
    return parse_quiver(input);
}

PolyVector parse_csv(const std::string& text, std::size_t n, const char* what) {
    PolyVector v;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto b = item.find_first_not_of(" \t");
        const auto e = item.find_last_not_of(" \t");
        if (b == std::string::npos) throw Error(ErrorKind::InvalidArgument, std::string("empty entry in --") + what);
        v.emplace_back(Rational::parse(item.substr(b, e - b + 1)));
    }
    if (v.size() != n) {
        throw Error(ErrorKind::DimensionMismatch, std::string("--") + what + " has " + std::to_string(v.size()) +
                                                       " entries, the quiver has " + std::to_string(n) + " vertices");
    }
    return v;
}

class Emitter {
public:
    explicit Emitter(const CliConfig& cfg) : cfg_(cfg) {}

    std::string matrix(const PolyMatrix& m) const {
        if (cfg_.at_q) {
            const RationalMatrix r = specialize(m, *cfg_.at_q);
            switch (cfg_.format) {
                case Format::Plain: return to_plain(r);
                case Format::Json: return matrix_to_json(r).dump() + "\n";
                case Format::Latex: return to_latex(r) + "\n";
            }
        }
        switch (cfg_.format) {
            case Format::Plain: return to_plain(m);
            case Format::Json: return matrix_to_json(m).dump() + "\n";
            case Format::Latex: return to_latex(m) + "\n";
        }
        return {};
    }

    std::string vector(const PolyVector& v) const {
        if (cfg_.at_q) {
            RationalMatrix r(v.size(), 1);
            for (std::size_t i = 0; i < v.size(); ++i) r(i, 0) = v[i].evaluate(*cfg_.at_q);
            switch (cfg_.format) {
                case Format::Plain: return to_plain(r);
                case Format::Json: {
                    nlohmann::json out = nlohmann::json::array();
                    for (std::size_t i = 0; i < v.size(); ++i) out.push_back(r(i, 0).to_string());
                    return out.dump() + "\n";
                }
                case Format::Latex: return to_latex(r) + "\n";
            }
        }
        switch (cfg_.format) {
            case Format::Plain: return to_plain(v);
            case Format::Json: return vector_to_json(v).dump() + "\n";
            case Format::Latex: return to_latex(v) + "\n";
        }
        return {};
    }

    std::string scalar(const Polynomial& p) const {
        if (cfg_.at_q) {
            const Rational r = p.evaluate(*cfg_.at_q);
            if (cfg_.format == Format::Json) return nlohmann::json(r.to_string()).dump() + "\n";
            if (cfg_.format == Format::Latex) return to_latex(Polynomial(r)) + "\n";
            return r.to_string() + "\n";
        }
        switch (cfg_.format) {
            case Format::Plain: return p.to_string() + "\n";
            case Format::Json: return poly_to_json(p).dump() + "\n";
            case Format::Latex: return to_latex(p) + "\n";
        }
        return {};
    }

private:
    const CliConfig& cfg_;
};

std::string dims_table_plain(const GradedDimTable& t, const Quiver& q) {
    std::ostringstream os;
    os << "max_degree " << t.max_degree() << "\n";
    for (std::size_t d = 0; d < t.max_degree(); ++d) {
        for (Vertex i = 0; i < q.vertex_count(); ++i) {
            for (Vertex j = 0; j < q.vertex_count(); ++j) {
                if (const auto dim = t.dim(i, j, d)) {
                    os << "degree " << d << "  " << q.vertex_name(i) << " -> " << q.vertex_name(j) << "  " << dim << "\n";
                }
            }
        }
    }
    return os.str();
}

std::string report_plain(const CheckReport& r) {
    std::ostringstream os;
    for (const auto& c : r.checks) os << "[" << to_string(c.status) << "] " << c.identity << ": " << c.reason << "\n";
    os << r.count(CheckStatus::Pass) << " passed, " << r.count(CheckStatus::Fail) << " failed, "
       << r.count(CheckStatus::Skipped) << " skipped\n";
    return os.str();
}

void unsupported(const char* what) {
    throw Error(ErrorKind::InvalidArgument, std::string("latex output is not available for ") + what);
}

CliResult dispatch(const CliConfig& cfg, const std::string& input) {
    if (cfg.degree_cap < 2) throw Error(ErrorKind::InvalidArgument, "--degree-cap must be at least 2");
    const BoundQuiver bq = load(cfg, input);
    const Quiver& q = bq.quiver;
    const Emitter emit(cfg);
    CliResult res;

    switch (cfg.command) {
        case Command::Cartan:
            res.out = emit.matrix(cartan_matrix(bq, cfg.degree_cap));
            break;
        case Command::Coxeter: {
            const auto method = cfg.method == Method::Reflections ? CoxeterMethod::Reflections : CoxeterMethod::Cartan;
            res.out = emit.matrix(coxeter_matrix_bound(bq, method, cfg.degree_cap));
            break;
        }
        case Command::Dims: {
            if (cfg.dims_mode == DimsMode::Table) {
                const GradedDimTable t = graded_dims(bq, cfg.degree_cap);
                if (cfg.format == Format::Latex) unsupported("the graded dimension table");
                res.out = cfg.format == Format::Json ? to_json(t, q).dump() + "\n" : dims_table_plain(t, q);
                break;
            }
            const DimKind kind = cfg.dims_mode == DimsMode::Simple       ? DimKind::Simple
                                 : cfg.dims_mode == DimsMode::Projective ? DimKind::Projective
                                                                         : DimKind::Injective;
            const PolyMatrix c = cartan_matrix(bq, cfg.degree_cap);
            if (cfg.vertex) {
                res.out = emit.vector(dim_vector(c, kind, q.vertex(*cfg.vertex)));
            } else {
                // column i is the dimension vector of the i-th module
                PolyMatrix all(q.vertex_count());
                for (Vertex i = 0; i < q.vertex_count(); ++i) {
                    const PolyVector v = dim_vector(c, kind, i);
                    for (Vertex j = 0; j < q.vertex_count(); ++j) all(j, i) = v[j];
                }
                res.out = emit.matrix(all);
            }
            break;
        }
        case Command::Forms: {
            const PolyVector x = parse_csv(cfg.x, q.vertex_count(), "x");
            const PolyVector y = parse_csv(cfg.y, q.vertex_count(), "y");
            const PolyMatrix c = cartan_matrix(bq, cfg.degree_cap);
            res.out = emit.scalar(cfg.form_mode == FormMode::Euler ? euler_form(c, x, y)
                                                                   : symmetric_form_matrix(c).value(x, y));
            break;
        }
        case Command::Reflect: {
            if (!cfg.vertex) throw Error(ErrorKind::InvalidArgument, "reflect needs --vertex");
            const Vertex v = q.vertex(*cfg.vertex);
            res.out = emit.matrix(bq.relations.empty() ? graph_reflection(q, v).matrix
                                                       : gamma_reflection(cartan_matrix(bq, cfg.degree_cap), v).matrix);
            break;
        }
        case Command::Numbering: {
            const AdmissibleNumbering num = admissible_numbering(q);
            if (cfg.format == Format::Latex) unsupported("numbering");
            if (cfg.format == Format::Json) {
                nlohmann::json out = nlohmann::json::array();
                for (Vertex v : num.order) out.push_back(q.vertex_name(v));
                res.out = out.dump() + "\n";
            } else {
                for (std::size_t k = 0; k < num.order.size(); ++k) res.out += (k ? " " : "") + q.vertex_name(num.order[k]);
                res.out += "\n";
            }
            break;
        }
        case Command::Verify: {
            if (cfg.format == Format::Latex) unsupported("verify");
            VerifyOptions opt;
            opt.degree_cap = cfg.degree_cap;
            opt.seed = cfg.seed;
            opt.random_instances = cfg.random;
            const CheckReport report = verify_identities(bq, opt);
            res.out = cfg.format == Format::Json ? to_json(report).dump(2) + "\n" : report_plain(report);
            if (!report.all_passed()) res.exit_code = 1;
            break;
        }
    }
    return res;
}

}  // namespace

std::optional<Command> parse_command(const std::string& name) {
    if (name == "cartan") return Command::Cartan;
    if (name == "coxeter") return Command::Coxeter;
    if (name == "dims") return Command::Dims;
    if (name == "forms") return Command::Forms;
    if (name == "reflect") return Command::Reflect;
    if (name == "numbering") return Command::Numbering;
    if (name == "verify") return Command::Verify;
    return std::nullopt;
}

std::optional<Format> parse_format(const std::string& name) {
    if (name == "plain") return Format::Plain;
    if (name == "json") return Format::Json;
    if (name == "latex") return Format::Latex;
    return std::nullopt;
}

CliResult run(const CliConfig& config, const std::string& input) {
    try {
        return dispatch(config, input);
    } catch (const SyntaxError& e) {
        std::ostringstream os;
        os << "error: SyntaxError: " << config.input_path << ":" << e.line() << ":" << e.column() << ": " << e.what()
           << "\n";
        return {2, {}, os.str()};
    } catch (const Error& e) {
        return {2, {}, "error: " + std::string(to_string(e.kind())) + ": " + e.what() + "\n"};
    } catch (const nlohmann::json::exception& e) {
        return {2, {}, std::string("error: SyntaxError: ") + e.what() + "\n"};
    }
}

}  // namespace qcox::cli
