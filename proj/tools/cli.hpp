#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "qcox/algebra.hpp"
#include "qcox/rational.hpp"

namespace qcox::cli {

enum class Command { Cartan, Coxeter, Dims, Forms, Reflect, Numbering, Verify };
enum class Format { Plain, Json, Latex };
enum class Method { Reflections, Cartan };
enum class DimsMode { Table, Simple, Projective, Injective };
enum class FormMode { Euler, Symmetric };

struct CliConfig {
    Command command = Command::Cartan;
    std::string input_path;
    Format format = Format::Plain;
    std::size_t degree_cap = kDefaultDegreeCap;
    Method method = Method::Cartan;
    std::optional<Rational> at_q;

    DimsMode dims_mode = DimsMode::Table;
    std::optional<std::string> vertex;
    FormMode form_mode = FormMode::Euler;
    std::string x;
    std::string y;
    std::uint64_t seed = 0;
    std::size_t random = 0;
};

struct CliResult {
    int exit_code = 0;
    std::string out;
    std::string err;
};

std::optional<Command> parse_command(const std::string& name);
std::optional<Format> parse_format(const std::string& name);

/// `input` is the contents of config.input_path; the path only selects the
/// parser (".json" or DSL).
CliResult run(const CliConfig& config, const std::string& input);

}  // namespace qcox::cli
