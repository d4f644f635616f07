// divzeta: zeta functions of stable marked curves from their dual graphs.

#include <iostream>

#include <CLI11.hpp>

#include <divzeta/cli.hpp>

int main(int argc, char **argv)
{
    using namespace divzeta;

    CLI::App app{"Divisorial, Hilbert and Kapranov motivic zeta functions of stable marked curves"};
    app.set_version_flag("--version", "divzeta 0.1.0");

    RunConfig config;
    std::string mode = "compute";
    std::string zeta;
    std::string measure;
    std::string output = "coefficients";
    long long q = 0;

    app.add_option("--input", config.input, "Dual graph JSON document")->required();
    app.add_option("--mode", mode, "compute | verify | count-strata")
        ->check(CLI::IsMember({"compute", "verify", "count-strata"}));
    app.add_option("--zeta", zeta, "divisorial | hilbert | kapranov-nodal")
        ->check(CLI::IsMember({"divisorial", "hilbert", "kapranov-nodal"}));
    app.add_option("--max-degree", config.max_degree, "Truncation order N")->check(CLI::NonNegativeNumber);
    app.add_option("--measure", measure, "symbolic | euler | point-count")
        ->check(CLI::IsMember({"symbolic", "euler", "point-count"}));
    auto *q_opt = app.add_option("--q", q, "Field size for point counting")->check(CLI::PositiveNumber);
    app.add_option("--measure-config", config.measure_config, "Measure spec JSON file")->check(CLI::ExistingFile);
    app.add_option("--output", output, "coefficients | rational | json")
        ->check(CLI::IsMember({"coefficients", "rational", "json"}));
    app.add_flag("--allow-unstable", config.allow_unstable, "Accept an unstable single smooth vertex");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int rc = app.exit(e);
        return rc == 0 ? exit_ok : exit_usage;
    }

    config.mode = parse_mode(mode);
    if (!zeta.empty()) {
        config.zeta = parse_zeta_kind(zeta);
    }
    if (!measure.empty()) {
        config.measure = parse_measure_kind(measure);
    }
    if (q_opt->count() != 0) {
        config.q = Integer(std::to_string(q));
    }
    config.output = parse_output_format(output);

    return run(config, std::cout, std::cerr);
}
