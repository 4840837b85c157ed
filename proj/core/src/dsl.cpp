#include "qcox/dsl.hpp"

#include <cctype>
#include <map>
#include <sstream>

#include "qcox/error.hpp"

namespace qcox {

namespace {

bool is_name_char(unsigned char c) { return std::isalnum(c) || c == '_' || c == '\'' || c >= 0x80; }

bool all_digits(std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

enum class Tok { Name, Integer, Fraction, LBrace, RBrace, Colon, Semicolon, Comma, Arrow, Star, Plus, Minus, End };

struct Token {
    Tok kind;
    std::string text;
    int line;
    int column;
};

std::string describe(const Token& t) {
    switch (t.kind) {
        case Tok::End: return "end of input";
        case Tok::Name: return "name '" + t.text + "'";
        case Tok::Integer:
        case Tok::Fraction: return "number '" + t.text + "'";
        default: return "'" + t.text + "'";
    }
}

std::vector<Token> tokenize(std::string_view src) {
    std::vector<Token> out;
    int line = 1;
    int col = 1;
    std::size_t i = 0;
    auto advance = [&](std::size_t k) {
        for (std::size_t s = 0; s < k; ++s) {
            if (src[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
            ++i;
        }
    };
    while (i < src.size()) {
        const unsigned char c = static_cast<unsigned char>(src[i]);
        if (std::isspace(c)) {
            advance(1);
            continue;
        }
        if (c == '#') {
            while (i < src.size() && src[i] != '\n') advance(1);
            continue;
        }
        const int tl = line;
        const int tc = col;
        if (is_name_char(c)) {
            std::size_t j = i;
            while (j < src.size() && is_name_char(static_cast<unsigned char>(src[j]))) ++j;
            std::string word(src.substr(i, j - i));
            if (all_digits(word) && j + 1 < src.size() && src[j] == '/' &&
                std::isdigit(static_cast<unsigned char>(src[j + 1]))) {
                std::size_t k = j + 1;
                while (k < src.size() && std::isdigit(static_cast<unsigned char>(src[k]))) ++k;
                if (k < src.size() && is_name_char(static_cast<unsigned char>(src[k]))) {
                    throw SyntaxError("malformed fraction", tl, tc);
                }
                out.push_back({Tok::Fraction, std::string(src.substr(i, k - i)), tl, tc});
                advance(k - i);
                continue;
            }
            out.push_back({all_digits(word) ? Tok::Integer : Tok::Name, word, tl, tc});
            advance(j - i);
            continue;
        }
        if (c == '-' && i + 1 < src.size() && src[i + 1] == '>') {
            out.push_back({Tok::Arrow, "->", tl, tc});
            advance(2);
            continue;
        }
        Tok kind;
        switch (c) {
            case '{': kind = Tok::LBrace; break;
            case '}': kind = Tok::RBrace; break;
            case ':': kind = Tok::Colon; break;
            case ';': kind = Tok::Semicolon; break;
            case ',': kind = Tok::Comma; break;
            case '*': kind = Tok::Star; break;
            case '+': kind = Tok::Plus; break;
            case '-': kind = Tok::Minus; break;
            default: throw SyntaxError(std::string("unexpected character '") + static_cast<char>(c) + "'", tl, tc);
        }
        out.push_back({kind, std::string(1, static_cast<char>(c)), tl, tc});
        advance(1);
    }
    out.push_back({Tok::End, "", line, col});
    return out;
}

class Parser {
public:
    explicit Parser(std::string_view src) : toks_(tokenize(src)) {}

    BoundQuiver parse() {
        BoundQuiver bq;
        expect_keyword("quiver");
        bq.name = expect_name("quiver name", /*allow_numeric=*/false).text;
        expect(Tok::LBrace, "'{'");

        expect_keyword("vertices");
        expect(Tok::Colon, "':'");
        std::vector<std::string> vertices;
        std::vector<Token> vertex_tokens;
        while (peek().kind != Tok::Semicolon) {
            if (!vertices.empty() && peek().kind == Tok::Comma) next();
            Token t = expect_name("vertex name", true);
            vertices.push_back(t.text);
            vertex_tokens.push_back(t);
        }
        expect(Tok::Semicolon, "';'");

        expect_keyword("arrows");
        expect(Tok::Colon, "':'");
        std::vector<Arrow> arrows;
        auto vertex_of = [&](const Token& t) -> Vertex {
            for (Vertex v = 0; v < vertices.size(); ++v)
                if (vertices[v] == t.text) return v;
            throw SyntaxError("unknown vertex '" + t.text + "'", t.line, t.column);
        };
        while (peek().kind == Tok::Name || peek().kind == Tok::Integer) {
            if (peek().kind == Tok::Name && peek().text == "relations" && peek(1).kind == Tok::Colon) break;
            Token name = next();
            if (name.kind == Tok::Integer) throw SyntaxError("arrow names must not be numerals", name.line, name.column);
            expect(Tok::Colon, "':'");
            Token from = expect_name("source vertex", true);
            expect(Tok::Arrow, "'->'");
            Token to = expect_name("target vertex", true);
            expect(Tok::Semicolon, "';'");
            arrows.push_back(Arrow{name.text, vertex_of(from), vertex_of(to)});
        }
        bq.quiver = Quiver(std::move(vertices), std::move(arrows));

        if (peek().kind == Tok::Name && peek().text == "relations") {
            next();
            expect(Tok::Colon, "':'");
            while (peek().kind != Tok::RBrace) bq.relations.push_back(parse_relation(bq.quiver));
        }
        expect(Tok::RBrace, "'}'");
        expect(Tok::End, "end of input");
        return bq;
    }

private:
    const Token& peek(std::size_t ahead = 0) const { return toks_[std::min(pos_ + ahead, toks_.size() - 1)]; }
    Token next() {
        Token t = peek();
        if (pos_ < toks_.size() - 1) ++pos_;
        return t;
    }

    [[noreturn]] void fail(const std::string& wanted) const {
        const Token& t = peek();
        throw SyntaxError("expected " + wanted + ", found " + describe(t), t.line, t.column);
    }

    Token expect(Tok kind, const std::string& wanted) {
        if (peek().kind != kind) fail(wanted);
        return next();
    }

    Token expect_name(const std::string& wanted, bool allow_numeric) {
        if (peek().kind == Tok::Name || (allow_numeric && peek().kind == Tok::Integer)) return next();
        fail(wanted);
    }

    void expect_keyword(const std::string& word) {
        if (peek().kind != Tok::Name || peek().text != word) fail("'" + word + "'");
        next();
    }

    Relation parse_relation(const Quiver& q) {
        // Like terms are merged in order of first appearance; zero sums vanish.
        std::vector<std::pair<std::vector<ArrowId>, Rational>> acc;
        Rational sign(1);
        if (peek().kind == Tok::Plus || peek().kind == Tok::Minus) sign = next().kind == Tok::Minus ? Rational(-1) : Rational(1);
        while (true) {
            Rational coeff = sign;
            if (peek().kind == Tok::Integer || peek().kind == Tok::Fraction) {
                Token num = next();
                coeff *= Rational::parse(num.text);
                expect(Tok::Star, "'*' after coefficient");
            }
            std::vector<ArrowId> arrows;
            while (true) {
                Token name = expect_name("arrow name", false);
                auto a = q.find_arrow(name.text);
                if (!a) throw SyntaxError("unknown arrow '" + name.text + "'", name.line, name.column);
                arrows.push_back(*a);
                if (peek().kind != Tok::Star) break;
                next();
            }
            auto it = std::find_if(acc.begin(), acc.end(), [&](const auto& e) { return e.first == arrows; });
            if (it == acc.end()) {
                acc.emplace_back(std::move(arrows), coeff);
            } else {
                it->second += coeff;
            }
            if (peek().kind == Tok::Semicolon) {
                next();
                break;
            }
            if (peek().kind != Tok::Plus && peek().kind != Tok::Minus) fail("'+', '-' or ';'");
            sign = next().kind == Tok::Minus ? Rational(-1) : Rational(1);
        }
        Relation rel;
        for (auto& [arrows, coeff] : acc) {
            if (coeff.is_zero()) continue;
            Path p{arrows, q.arrow(arrows.front()).source, q.arrow(arrows.back()).target};
            rel.terms.push_back(RelationTerm{coeff, std::move(p)});
        }
        return rel;
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

void check_or_throw(const BoundQuiver& bq, bool check) {
    if (check) require_valid(bq);
}

}  // namespace

bool is_valid_vertex_name(std::string_view name) {
    if (name.empty()) return false;
    if (!std::all_of(name.begin(), name.end(), [](char c) { return is_name_char(static_cast<unsigned char>(c)); })) return false;
    static constexpr std::string_view keywords[] = {"quiver", "vertices", "arrows", "relations"};
    return std::find(std::begin(keywords), std::end(keywords), name) == std::end(keywords);
}

bool is_valid_arrow_name(std::string_view name) { return is_valid_vertex_name(name) && !all_digits(name); }

BoundQuiver parse_quiver_unchecked(std::string_view text) { return Parser(text).parse(); }

BoundQuiver parse_quiver(std::string_view text) {
    BoundQuiver bq = parse_quiver_unchecked(text);
    require_valid(bq);
    return bq;
}

std::string emit_text(const BoundQuiver& bq) {
    const Quiver& q = bq.quiver;
    if (!is_valid_arrow_name(bq.name)) throw Error(ErrorKind::InvalidArgument, "quiver name '" + bq.name + "' is not a valid name token");
    for (const auto& v : q.vertices()) {
        if (!is_valid_vertex_name(v)) throw Error(ErrorKind::InvalidArgument, "vertex name '" + v + "' is not a valid name token");
    }
    for (const auto& a : q.arrows()) {
        if (!is_valid_arrow_name(a.name)) throw Error(ErrorKind::InvalidArgument, "arrow name '" + a.name + "' is not a valid name token");
    }

    std::ostringstream os;
    os << "quiver " << bq.name << " {\n  vertices: ";
    for (std::size_t v = 0; v < q.vertex_count(); ++v) os << (v ? ", " : "") << q.vertex_name(v);
    os << ";\n  arrows:\n";
    for (const auto& a : q.arrows()) {
        os << "    " << a.name << ": " << q.vertex_name(a.source) << " -> " << q.vertex_name(a.target) << ";\n";
    }
    if (!bq.relations.empty()) {
        os << "  relations:\n";
        for (const auto& rel : bq.relations) {
            os << "    ";
            for (std::size_t t = 0; t < rel.terms.size(); ++t) {
                const auto& term = rel.terms[t];
                const bool negative = term.coeff.sign() < 0;
                if (t == 0) {
                    if (negative) os << '-';
                } else {
                    os << (negative ? " - " : " + ");
                }
                const Rational mag = negative ? -term.coeff : term.coeff;
                if (mag != Rational(1)) os << mag << '*';
                os << term.path.to_string(q);
            }
            os << ";\n";
        }
    }
    os << "}\n";
    return os.str();
}

nlohmann::json to_json(const BoundQuiver& bq) {
    const Quiver& q = bq.quiver;
    nlohmann::json j;
    j["name"] = bq.name;
    j["vertices"] = q.vertices();
    j["arrows"] = nlohmann::json::array();
    for (const auto& a : q.arrows()) {
        j["arrows"].push_back({{"name", a.name}, {"source", q.vertex_name(a.source)}, {"target", q.vertex_name(a.target)}});
    }
    j["relations"] = nlohmann::json::array();
    for (const auto& rel : bq.relations) {
        nlohmann::json terms = nlohmann::json::array();
        for (const auto& term : rel.terms) {
            nlohmann::json path = nlohmann::json::array();
            for (ArrowId a : term.path.arrows) path.push_back(q.arrow(a).name);
            terms.push_back({{"coeff", term.coeff.to_string()}, {"path", path}});
        }
        j["relations"].push_back(terms);
    }
    return j;
}

BoundQuiver bound_quiver_from_json(const nlohmann::json& j, bool check) {
    auto invalid = [](const std::string& msg) { return Error(ErrorKind::SyntaxError, "JSON quiver: " + msg); };
    try {
        BoundQuiver bq;
        if (j.contains("name")) bq.name = j.at("name").get<std::string>();
        std::vector<std::string> vertices;
        for (const auto& v : j.at("vertices")) vertices.push_back(v.is_string() ? v.get<std::string>() : v.dump());
        auto vertex_of = [&](const nlohmann::json& v) -> Vertex {
            const std::string name = v.is_string() ? v.get<std::string>() : v.dump();
            for (Vertex k = 0; k < vertices.size(); ++k)
                if (vertices[k] == name) return k;
            throw invalid("unknown vertex '" + name + "'");
        };
        std::vector<Arrow> arrows;
        for (const auto& a : j.at("arrows")) {
            arrows.push_back(Arrow{a.at("name").get<std::string>(), vertex_of(a.at("source")), vertex_of(a.at("target"))});
        }
        bq.quiver = Quiver(std::move(vertices), std::move(arrows));
        if (j.contains("relations")) {
            for (const auto& rel_json : j.at("relations")) {
                Relation rel;
                for (const auto& term : rel_json) {
                    Rational coeff(1);
                    if (term.contains("coeff")) {
                        const auto& c = term.at("coeff");
                        coeff = c.is_string() ? Rational::parse(c.get<std::string>()) : Rational(c.get<std::int64_t>());
                    }
                    std::vector<ArrowId> ids;
                    for (const auto& name : term.at("path")) {
                        auto id = bq.quiver.find_arrow(name.get<std::string>());
                        if (!id) throw invalid("unknown arrow '" + name.get<std::string>() + "'");
                        ids.push_back(*id);
                    }
                    if (ids.empty()) throw invalid("relation term with an empty path");
                    Path p{ids, bq.quiver.arrow(ids.front()).source, bq.quiver.arrow(ids.back()).target};
                    rel.terms.push_back(RelationTerm{coeff, std::move(p)});
                }
                bq.relations.push_back(std::move(rel));
            }
        }
        check_or_throw(bq, check);
        return bq;
    } catch (const nlohmann::json::exception& e) {
        throw invalid(e.what());
    }
}

BoundQuiver parse_quiver_json(std::string_view text, bool check) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(ErrorKind::SyntaxError, std::string("JSON: ") + e.what());
    }
    return bound_quiver_from_json(j, check);
}

}  // namespace qcox
