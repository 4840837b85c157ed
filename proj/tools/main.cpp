#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "cli.hpp"
#include "qcox/error.hpp"

using namespace qcox;

int main(int argc, char** argv) {
    CLI::App app{"q-Cartan and q-Coxeter matrices of homogeneous bound quivers"};
    app.require_subcommand(1);
    app.fallthrough();

    cli::CliConfig cfg;
    std::string format = "plain";
    std::string at_q;
    app.add_option("--format", format, "plain, json or latex")->check(CLI::IsMember({"plain", "json", "latex"}));
    app.add_option("--degree-cap", cfg.degree_cap, "largest path degree explored")->check(CLI::Range(std::size_t{2}, std::size_t{1} << 20));
    app.add_option("--at-q", at_q, "evaluate the result at this rational value of q");

    auto with_input = [&](CLI::App* sub) {
        sub->add_option("input", cfg.input_path, ".qv or .json quiver file")->required();
        return sub;
    };

    auto* cartan = with_input(app.add_subcommand("cartan", "q-Cartan matrix"));
    auto* coxeter = with_input(app.add_subcommand("coxeter", "q-Coxeter matrix"));
    std::string method = "cartan";
    coxeter->add_option("--method", method)->check(CLI::IsMember({"reflections", "cartan"}));

    auto* dims = with_input(app.add_subcommand("dims", "graded dimensions"));
    bool projective = false, injective = false, simple = false;
    auto* p_flag = dims->add_flag("--projective", projective);
    auto* i_flag = dims->add_flag("--injective", injective);
    auto* s_flag = dims->add_flag("--simple", simple);
    p_flag->excludes(i_flag)->excludes(s_flag);
    i_flag->excludes(s_flag);
    std::string vertex;
    dims->add_option("--vertex", vertex);

    auto* forms = with_input(app.add_subcommand("forms", "Euler or symmetric form"));
    bool euler = false, symmetric = false;
    forms->add_flag("--euler", euler)->excludes(forms->add_flag("--symmetric", symmetric));
    forms->add_option("--x", cfg.x)->required();
    forms->add_option("--y", cfg.y)->required();

    auto* reflect = with_input(app.add_subcommand("reflect", "reflection matrix at a vertex"));
    reflect->add_option("--vertex", vertex)->required();

    auto* numbering = with_input(app.add_subcommand("numbering", "admissible numbering"));
    auto* verify = with_input(app.add_subcommand("verify", "check the identities"));
    verify->add_option("--seed", cfg.seed);
    verify->add_option("--random", cfg.random, "randomized instances per form identity");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    cfg.format = *cli::parse_format(format);
    if (!at_q.empty()) {
        try {
            cfg.at_q = Rational::parse(at_q);
        } catch (const Error& e) {
            std::cerr << "error: InvalidArgument: --at-q: " << e.what() << "\n";
            return 2;
        }
    }
    if (!vertex.empty()) cfg.vertex = vertex;

    if (*cartan) cfg.command = cli::Command::Cartan;
    if (*coxeter) {
        cfg.command = cli::Command::Coxeter;
        cfg.method = method == "reflections" ? cli::Method::Reflections : cli::Method::Cartan;
    }
    if (*dims) {
        cfg.command = cli::Command::Dims;
        cfg.dims_mode = projective  ? cli::DimsMode::Projective
                        : injective ? cli::DimsMode::Injective
                        : simple    ? cli::DimsMode::Simple
                                    : cli::DimsMode::Table;
    }
    if (*forms) {
        cfg.command = cli::Command::Forms;
        cfg.form_mode = symmetric ? cli::FormMode::Symmetric : cli::FormMode::Euler;
    }
    if (*reflect) cfg.command = cli::Command::Reflect;
    if (*numbering) cfg.command = cli::Command::Numbering;
    if (*verify) cfg.command = cli::Command::Verify;

    std::ifstream in(cfg.input_path, std::ios::binary);
    if (!in) {
        std::cerr << "error: InvalidArgument: cannot read " << cfg.input_path << "\n";
        return 2;
    }
    std::ostringstream buf;
    buf << in.rdbuf();

    const cli::CliResult res = cli::run(cfg, buf.str());
    std::cout << res.out;
    std::cerr << res.err;
    return res.exit_code;
}
