#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "qcox/dsl.hpp"
#include "qcox/error.hpp"

using namespace qcox;

namespace {

const char* kExample = R"(# commutative square with a zero relation
quiver Sq {
  vertices: 1, 2, 3;
  arrows:
    alpha: 1 -> 2;
    delta: 2 -> 1;
    beta: 2 -> 3;
    gamma: 3 -> 2;
  relations:
    alpha*beta;
    gamma*delta;
    delta*alpha - beta*gamma;
}
)";

ErrorKind kind_of(const std::string& text) {
    try {
        parse_quiver(text);
    } catch (const Error& e) {
        return e.kind();
    }
    return ErrorKind::Internal;
}

std::string validation_message(const std::string& text) {
    try {
        parse_quiver(text);
    } catch (const Error& e) {
        return e.what();
    }
    return {};
}

}  // namespace

TEST_CASE("parse a bound quiver") {
    const BoundQuiver bq = parse_quiver(kExample);
    CHECK(bq.name == "Sq");
    REQUIRE(bq.vertex_count() == 3);
    CHECK(bq.quiver.arrow_count() == 4);
    REQUIRE(bq.relations.size() == 3);
    CHECK(bq.relations[0].degree() == 2);
    CHECK(bq.relations[2].terms.size() == 2);
    CHECK(bq.relations[2].terms[1].coeff == Rational(-1));
    CHECK(bq.relations[2].source() == 1);
    CHECK(bq.relations[2].target() == 1);
    CHECK(bq.quiver.arrows_between(0, 1) == 1);
    CHECK(bq.quiver.edges_between(0, 1) == 2);
    CHECK(bq.quiver.edges_between(1, 0) == 2);
    CHECK_FALSE(bq.quiver.is_acyclic());
    for (const auto& r : bq.relations)
        for (const auto& t : r.terms) CHECK(t.path.composes(bq.quiver));
}

TEST_CASE("coefficients, signs and comments") {
    const BoundQuiver bq = parse_quiver(R"(
quiver K {   # header
  vertices: x y z;
  arrows:
    a: x -> y;  b: x -> y;
    c: y -> z;
  relations:
    -3/2*a*c + 2*b*c;
    a*c + a*c - b*c - 2*a*c + b*c + b*c;
}
)");
    REQUIRE(bq.relations.size() == 2);
    CHECK(bq.relations[0].terms[0].coeff == Rational(-3, 2));
    CHECK(bq.relations[0].terms[1].coeff == Rational(2));
    // like terms merged: a*c cancels, b*c survives with coefficient 1
    REQUIRE(bq.relations[1].terms.size() == 1);
    CHECK(bq.relations[1].terms[0].coeff == Rational(1));
}

TEST_CASE("quiver without arrows") {
    const BoundQuiver bq = parse_quiver("quiver P { vertices: 1; arrows: }");
    CHECK(bq.vertex_count() == 1);
    CHECK(bq.quiver.arrow_count() == 0);
}

TEST_CASE("syntax errors carry a location") {
    try {
        parse_quiver("quiver Q {\n  vertices: 1, 2;\n  arrows:\n    a: 1 -> 3;\n}");
        FAIL("expected SyntaxError");
    } catch (const SyntaxError& e) {
        CHECK(e.line() == 4);
        CHECK(e.column() > 1);
    }
    CHECK(kind_of("quiver Q { vertices: 1; arrows: a 1 -> 1; }") == ErrorKind::SyntaxError);
    CHECK(kind_of("quiver Q { vertices: 1, 2; arrows: a: 1 -> 2; relations: a*z; }") == ErrorKind::SyntaxError);
    CHECK(kind_of("quiver Q { vertices: 1, 2; arrows: 7: 1 -> 2; }") == ErrorKind::SyntaxError);
    CHECK(kind_of("quiver Q { vertices: 1, 2; arrows: a: 1 -> 2;") == ErrorKind::SyntaxError);
    CHECK(kind_of("quiver Q { vertices: 1, 2; arrows: a: 1 -> 2; } trailing") == ErrorKind::SyntaxError);
}

TEST_CASE("validation failures are named") {
    CHECK(kind_of("quiver Q { vertices: 1, 2; arrows: }") == ErrorKind::ValidationError);
    CHECK(validation_message("quiver Q { vertices: 1, 2; arrows: }").find("Disconnected") != std::string::npos);
    CHECK(validation_message("quiver Q { vertices: 1, 1; arrows: a: 1 -> 1; }").find("DuplicateVertexName") !=
          std::string::npos);
    CHECK(validation_message("quiver Q { vertices: 1, 2; arrows: a: 1 -> 2; a: 2 -> 1; }").find("DuplicateArrowName") !=
          std::string::npos);
    const char* base = "quiver Q { vertices: 1, 2, 3; arrows: a: 1 -> 2; b: 2 -> 3; c: 1 -> 3; d: 1 -> 2; relations: ";
    CHECK(validation_message(std::string(base) + "a*b - c; }").find("NonHomogeneous") != std::string::npos);
    CHECK(validation_message(std::string(base) + "a - b; }").find("NotParallel") != std::string::npos);
    CHECK(validation_message(std::string(base) + "a*a; }").find("NotComposable") != std::string::npos);
    CHECK(validation_message(std::string(base) + "a - d; }").find("DegreeBelowTwo") != std::string::npos);
    CHECK(validation_message(std::string(base) + "a*b - a*b; }").find("EmptyRelation") != std::string::npos);
    // loops and cycles are accepted by the parser
    CHECK_NOTHROW(parse_quiver("quiver L { vertices: 1; arrows: x: 1 -> 1; }"));
    const ValidationReport rep = validate(parse_quiver("quiver L { vertices: 1; arrows: x: 1 -> 1; }"));
    CHECK(rep.has_loops);
    CHECK_FALSE(rep.acyclic);
    CHECK(rep.passes());
}

TEST_CASE("text round trip") {
    const BoundQuiver bq = parse_quiver(kExample);
    CHECK(parse_quiver(emit_text(bq)) == bq);
    std::mt19937_64 rng(3);
    for (int t = 0; t < 50; ++t) {
        BoundQuiver r = oracle::random_bound_quiver(rng, 2, 6, 2);
        r.name = "R";
        CHECK(parse_quiver(emit_text(r)) == r);
    }
}

TEST_CASE("json round trip") {
    const BoundQuiver bq = parse_quiver(kExample);
    const nlohmann::json j = to_json(bq);
    CHECK(j["vertices"].size() == 3);
    CHECK(j["arrows"][0]["name"] == "alpha");
    CHECK(j["arrows"][0]["source"] == "1");
    CHECK(j["relations"][2][1]["coeff"] == "-1");
    CHECK(j["relations"][2][1]["path"] == nlohmann::json::array({"beta", "gamma"}));
    CHECK(bound_quiver_from_json(j) == bq);
    CHECK(parse_quiver_json(j.dump()) == bq);
    CHECK_THROWS_AS(parse_quiver_json("{\"vertices\": 3}"), Error);
}

TEST_CASE("degree sums and symmetry of edge counts") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 30; ++t) {
        const Quiver q = oracle::random_acyclic_quiver(rng, 2, 7, 3);
        for (Vertex i = 0; i < q.vertex_count(); ++i) {
            std::size_t sum = 0;
            for (Vertex j = 0; j < q.vertex_count(); ++j) {
                sum += q.arrows_between(i, j);
                CHECK(q.edges_between(i, j) == q.edges_between(j, i));
            }
            CHECK(sum == q.out_arrows(i).size());
        }
        CHECK(q.is_connected());
        CHECK(q.is_acyclic());
    }
}

TEST_CASE("name rules") {
    CHECK(is_valid_vertex_name("12"));
    CHECK(is_valid_arrow_name("alpha'"));
    CHECK_FALSE(is_valid_arrow_name("12"));
    CHECK_FALSE(is_valid_vertex_name("arrows"));
    CHECK_FALSE(is_valid_vertex_name("a b"));
    CHECK_FALSE(is_valid_vertex_name(""));
}
