#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "qcox/algebra.hpp"
#include "qcox/coxeter.hpp"
#include "qcox/dsl.hpp"
#include "qcox/format.hpp"

using namespace qcox;
using namespace qcox::cli;

namespace {

std::string read(const std::string& name) {
    std::ifstream in(std::string(QCOX_DATA_DIR) + "/" + name);
    REQUIRE(in);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

CliResult run_on(CliConfig cfg, const std::string& file) {
    cfg.input_path = file;
    return run(cfg, read(file));
}

CliConfig make(Command c, Format f = Format::Plain) {
    CliConfig cfg;
    cfg.command = c;
    cfg.format = f;
    return cfg;
}

// The displayed matrices in the literature write q^2 rather than q^{2}.
std::string strip_braces(std::string s) {
    std::string out;
    for (char ch : s)
        if (ch != '{' && ch != '}') out += ch;
    return out;
}

}  // namespace

TEST_CASE("latex cartan matrix") {
    const CliResult r = run_on(make(Command::Cartan, Format::Latex), "example2_2.qv");
    CHECK(r.exit_code == 0);
    CHECK(r.out ==
          "\\left( \\begin{array}{ccc}\n"
          "1+q^{2} & q & 0 \\\\\n"
          "q & 1+q^{2} & q \\\\\n"
          "0 & q & 1+q^{2}\n"
          "\\end{array} \\right)\n");
    CHECK(strip_braces(r.out).find("1+q^2 & q & 0") != std::string::npos);
}

TEST_CASE("verify exit codes") {
    const CliResult ok = run_on(make(Command::Verify), "a3.qv");
    CHECK(ok.exit_code == 0);
    CHECK(ok.out.find("[fail]") == std::string::npos);
    CHECK(ok.out.find("19 passed, 0 failed, 0 skipped") != std::string::npos);

    const CliResult json = run_on(make(Command::Verify, Format::Json), "a3.qv");
    CHECK(nlohmann::json::parse(json.out).size() == 19);
}

TEST_CASE("errors map to exit 2") {
    const CliResult r = run_on(make(Command::Cartan), "twocycle.qv");
    CHECK(r.exit_code == 2);
    CHECK(r.out.empty());
    CHECK(r.err.find("error: DegreeCapExceeded") == 0);

    CliConfig bad = make(Command::Cartan);
    bad.input_path = "broken.qv";
    const CliResult s = run(bad, "quiver Q {\n vertices: 1, 2;\n arrows: a: 1 -> 9;\n}\n");
    CHECK(s.exit_code == 2);
    CHECK(s.err.find("error: SyntaxError: broken.qv:3:") == 0);

    CliConfig cap = make(Command::Cartan);
    cap.degree_cap = 1;
    CHECK(run_on(cap, "a3.qv").exit_code == 2);

    CliConfig rv = make(Command::Reflect);
    rv.vertex = "7";
    CHECK(run_on(rv, "a3.qv").err.find("InvalidVertex") != std::string::npos);

    CHECK(run_on(make(Command::Coxeter), "example2_2.qv").err.find("NotUnimodular") != std::string::npos);
    CHECK(run_on(make(Command::Numbering), "kronecker_back.qv").err.find("NotAcyclic") != std::string::npos);
}

TEST_CASE("json matrix output round trips") {
    for (const char* file : {"example2_2.qv", "a3.qv", "parallel_path.qv", "kronecker_back.qv"}) {
        const BoundQuiver bq = parse_quiver(read(file));
        const CliResult r = run_on(make(Command::Cartan, Format::Json), file);
        REQUIRE(r.exit_code == 0);
        CHECK(matrix_from_json(nlohmann::json::parse(r.out)) == cartan_matrix(bq));
    }
    const CliResult phi = run_on(make(Command::Coxeter, Format::Json), "parallel_path.qv");
    CHECK(matrix_from_json(nlohmann::json::parse(phi.out)) ==
          coxeter_matrix_from_cartan(cartan_matrix(parse_quiver(read("parallel_path.qv")))));
}

TEST_CASE("at-q specialization") {
    CliConfig cfg = make(Command::Coxeter, Format::Json);
    cfg.at_q = Rational(1);
    const CliResult r = run_on(cfg, "a3.qv");
    CHECK(r.out == "[[\"0\",\"-1\",\"1\"],[\"1\",\"-1\",\"1\"],[\"1\",\"-1\",\"0\"]]\n");
    cfg.method = Method::Reflections;
    CHECK(run_on(cfg, "a3.qv").out == r.out);
}

TEST_CASE("json input selected by extension") {
    const std::string json = to_json(parse_quiver(read("a3.qv"))).dump();
    CliConfig cfg = make(Command::Cartan);
    cfg.input_path = "a3.json";
    const CliResult r = run(cfg, json);
    CHECK(r.exit_code == 0);
    CHECK(r.out == run_on(make(Command::Cartan), "a3.qv").out);
}

TEST_CASE("other commands") {
    CHECK(run_on(make(Command::Numbering), "a3.qv").out == "1 3 2\n");
    CHECK(run_on(make(Command::Numbering, Format::Json), "a3.qv").out == "[\"1\",\"3\",\"2\"]\n");

    CliConfig refl = make(Command::Reflect);
    refl.vertex = "2";
    CHECK(run_on(refl, "a3.qv").out == "[ 1,  0, 0 ]\n[ q, -1, q ]\n[ 0,  0, 1 ]\n");

    CliConfig dims = make(Command::Dims, Format::Json);
    const nlohmann::json table = nlohmann::json::parse(run_on(dims, "example2_2.qv").out);
    CHECK(table["max_degree"] == 3);
    CHECK(table["dims"].size() == 10);

    dims.dims_mode = DimsMode::Projective;
    dims.vertex = "1";
    CHECK(run_on(dims, "parallel_path.qv").out == R"([["1"],["0","2"],["0","0","1"]])"
                                                   "\n");

    CliConfig forms = make(Command::Forms);
    forms.x = "1,0,0";
    forms.y = "0,0,1";
    CHECK(run_on(forms, "parallel_path.qv").out == "q^2\n");
    forms.form_mode = FormMode::Symmetric;
    CHECK(run_on(forms, "parallel_path.qv").out == "(1/2)q^2\n");
    forms.x = "1,0";
    CHECK(run_on(forms, "parallel_path.qv").exit_code == 2);
}

TEST_CASE("output is deterministic") {
    for (Command c : {Command::Cartan, Command::Verify, Command::Dims}) {
        CHECK(run_on(make(c, Format::Json), "parallel_path.qv").out == run_on(make(c, Format::Json), "parallel_path.qv").out);
    }
}
