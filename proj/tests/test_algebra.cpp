#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "qcox/algebra.hpp"
#include "qcox/dsl.hpp"
#include "qcox/error.hpp"

using namespace qcox;

namespace {
const Polynomial q = Polynomial::q();
const Polynomial q2 = q * q;

BoundQuiver load(const char* text) { return parse_quiver(text); }

const char* kE22 = R"(quiver E { vertices: 1, 2, 3;
  arrows: alpha: 1 -> 2; delta: 2 -> 1; beta: 2 -> 3; gamma: 3 -> 2;
  relations: alpha*beta; gamma*delta; delta*alpha - beta*gamma; })";
}  // namespace

TEST_CASE("cartan matrix of the three-vertex commutative example") {
    const BoundQuiver bq = load(kE22);
    const PolyMatrix c = cartan_matrix(bq);
    CHECK(c == PolyMatrix{{1 + q2, q, 0}, {q, 1 + q2, q}, {0, q, 1 + q2}});
    CHECK(c == oracle::naive_cartan(bq));
    const GradedDimTable t = graded_dims(bq);
    CHECK(t.max_degree() == 3);
    CHECK(t.total(0) == 3);
    CHECK(t.total(1) == 4);
    CHECK(t.total(2) == 3);
    CHECK(t.total(3) == 0);
    CHECK(t.dim(0, 0, 2) == 1);
    CHECK(t.dim(0, 2, 2) == 0);
    const DeterminantCheck dc = cartan_det_check(c);
    CHECK(dc.det == Polynomial{1, 0, 1, 0, 1, 0, 1});
    CHECK_FALSE(dc.unimodular);
}

TEST_CASE("cartan matrices of the parallel-path examples") {
    const BoundQuiver p = load(R"(quiver P { vertices: 1, 2, 3;
      arrows: alpha: 1 -> 2; beta: 1 -> 2; delta: 2 -> 3;
      relations: alpha*delta - beta*delta; })");
    CHECK(cartan_matrix(p) == PolyMatrix{{1, 2 * q, q2}, {0, 1, q}, {0, 0, 1}});

    const BoundQuiver k = load(R"(quiver K { vertices: 1, 2;
      arrows: alpha: 1 -> 2; beta: 1 -> 2; delta: 2 -> 1;
      relations: alpha*delta; beta*delta; })");
    const PolyMatrix c = cartan_matrix(k);
    CHECK(c == PolyMatrix{{1, 2 * q}, {q, 1 + 2 * q2}});
    CHECK(c == oracle::naive_cartan(k));
    CHECK(cartan_det_check(c).det == Polynomial(1));
    CHECK(cartan_det_check(c).unimodular);
}

TEST_CASE("trivial inputs") {
    const BoundQuiver one = load("quiver P { vertices: 1; arrows: }");
    CHECK(cartan_matrix(one) == PolyMatrix{{1}});
    CHECK(graded_dims(one).max_degree() == 1);

    const BoundQuiver a2 = load("quiver A { vertices: 1, 2; arrows: a: 1 -> 2; }");
    CHECK(cartan_matrix(a2) == PolyMatrix{{1, q}, {0, 1}});
    CHECK(dim_vector(a2, DimKind::Projective, 0) == PolyVector{1, q});
    CHECK(dim_vector(a2, DimKind::Injective, 1) == PolyVector{q, 1});
    CHECK(dim_vector(a2, DimKind::Simple, 1) == PolyVector{0, 1});
}

TEST_CASE("infinite-dimensional input hits the degree cap") {
    const BoundQuiver c2 = load("quiver C { vertices: 1, 2; arrows: a: 1 -> 2; b: 2 -> 1; }");
    try {
        graded_dims(c2, 10);
        FAIL("expected DegreeCapExceeded");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::DegreeCapExceeded);
    }
    const BoundQuiver loop = load("quiver L { vertices: 1; arrows: x: 1 -> 1; }");
    CHECK_THROWS_AS(cartan_matrix(loop, 8), Error);
    // a nilpotent loop is fine
    const BoundQuiver nil = load("quiver N { vertices: 1; arrows: x: 1 -> 1; relations: x*x*x; }");
    CHECK(cartan_matrix(nil) == PolyMatrix{{Polynomial{1, 1, 1}}});
}

TEST_CASE("path enumeration") {
    const BoundQuiver k = load("quiver K { vertices: 1, 2, 3; arrows: a: 1 -> 2; b: 1 -> 2; c: 2 -> 3; }");
    const auto ps = enumerate_paths(k.quiver, 0, 2, 2);
    REQUIRE(ps.size() == 2);
    CHECK(ps[0].to_string(k.quiver) == "a*c");
    CHECK(ps[1].to_string(k.quiver) == "b*c");
    CHECK(enumerate_paths(k.quiver, 2, 0, 1).empty());
    CHECK(enumerate_paths(k.quiver, 1, 1, 0).size() == 1);
}

TEST_CASE("graded basis") {
    const BoundQuiver p = load(R"(quiver P { vertices: 1, 2, 3;
      arrows: alpha: 1 -> 2; beta: 1 -> 2; delta: 2 -> 3;
      relations: alpha*delta - beta*delta; })");
    const GradedAlgebra alg = compute_graded_algebra(p);
    CHECK(alg.basis(0, 1, 1).size() == 2);
    REQUIRE(alg.basis(0, 2, 2).size() == 1);
    CHECK(alg.basis(0, 2, 2)[0].length() == 2);
}

TEST_CASE("normal-form dimensions equal full enumeration") {
    std::mt19937_64 rng(17);
    for (int t = 0; t < 60; ++t) {
        const BoundQuiver bq = oracle::random_bound_quiver(rng, 2, 5, 2);
        const auto naive = oracle::naive_graded_dims(bq);
        const GradedDimTable table = graded_dims(bq);
        CHECK(table == GradedDimTable(bq.vertex_count(), naive));
    }
}

TEST_CASE("relation-free cartan at q = 1 counts paths") {
    std::mt19937_64 rng(23);
    for (int t = 0; t < 40; ++t) {
        const Quiver qv = oracle::random_acyclic_quiver(rng, 2, 6, 2);
        const BoundQuiver bq{"R", qv, {}};
        const PolyMatrix c = cartan_matrix(bq);
        CHECK(specialize(c, Rational(1)) == oracle::classical_cartan(qv));
        CHECK(c.has_integer_coeffs());
    }
}
