//
//  ladder_cli.cpp
//  ladder
//
//  ladder solve    --c C --d D --cross X --s S [--check] [--svg FILE]
//  ladder critical --c C --d D --cross X
//  ladder inscribe --u U --v V --w W --t T
//
//  --cross is the xy coefficient C of d²x² + c²y² + 2Cxy − 2cd²x − 2c²dy + c²d² = 0.
//

#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "ladder/cli.hpp"

namespace {

void add_ellipse_flags(CLI::App* app, ladder::cli::CliConfig& config) {
    app->add_option("--c", config.c, "x-axis tangency abscissa (c > 0)")->required();
    app->add_option("--d", config.d, "y-axis tangency ordinate (d > 0)")->required();
    app->add_option("--cross", config.cross, "xy coefficient C, with cd > |C|")->required();
}

void add_output_flags(CLI::App* app, ladder::cli::CliConfig& config) {
    const std::map<std::string, ladder::cli::Format> formats{
        {"text", ladder::cli::Format::text}, {"json", ladder::cli::Format::json}};
    app->add_option("--format", config.format, "output format: text or json")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case))
        ->option_text("text|json");
    app->add_option("-o,--output", config.output_path, "write the document to FILE instead of stdout");
}

} // namespace

int main(int argc, char** argv) {
    using namespace ladder::cli;
    CliConfig config;

    CLI::App app{"Ladder positions touching an ellipse tangent to both positive axes"};
    app.require_subcommand(1);

    auto* solve = app.add_subcommand("solve", "all ladders of length s touching the ellipse");
    add_ellipse_flags(solve, config);
    solve->add_option("--s", config.s, "ladder length")->required();
    solve->add_flag("--check", config.check, "verify every solution independently");
    solve->add_option("--tolerance", config.tolerance, "tolerance for --check")
        ->capture_default_str();
    solve->add_option("--svg", config.svg_path, "write an SVG figure to FILE");
    add_output_flags(solve, config);
    solve->callback([&] { config.command = Command::solve; });

    auto* critical = app.add_subcommand("critical", "critical ladder length s0");
    add_ellipse_flags(critical, config);
    add_output_flags(critical, config);
    critical->callback([&] { config.command = Command::critical; });

    auto* inscribe = app.add_subcommand("inscribe", "ellipse inscribed in a right triangle");
    inscribe->add_option("--u", config.u, "x-axis leg")->required();
    inscribe->add_option("--v", config.v, "y-axis leg")->required();
    inscribe->add_option("--w", config.w, "wall parameter in (0,1)")->required();
    inscribe->add_option("--t", config.t, "floor parameter in (0,1)")->required();
    add_output_flags(inscribe, config);
    inscribe->callback([&] { config.command = Command::inscribe; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInvalidInput;
    }
    return run(config, std::cout, std::cerr);
}
