// ctori: conformal class of tori of revolution, flat product tori and Hopf tori.

#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "ctori/cli.hpp"
#include "ctori/errors.hpp"

namespace {

using ctori::cli::JobKind;

struct Options {
    std::string format = "json";
    std::string plot;
    std::string tol;
};

int fail(const std::string& kind, const std::string& message, const std::string& field, int code) {
    std::cout << ctori::cli::error_json(kind, message, field);
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Conformal classes of tori: period ratios, SL(2,Z) reduction, Hopf tori"};
    app.require_subcommand(1);

    Options global;
    app.add_option("--format", global.format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--plot", global.plot, "Write an SVG of the reduced points");
    app.add_option("--tol", global.tol, "Equivalence tolerance");

    std::map<std::string, std::string> params;
    auto param = [&params](CLI::App* sub, const std::string& flag, const std::string& key,
                           const std::string& help, bool required) {
        auto* opt = sub->add_option_function<std::string>(
            flag, [&params, key](const std::string& v) { params[key] = v; }, help);
        if (required) opt->required();
        return opt;
    };

    auto* standard = app.add_subcommand("standard", "Torus of revolution T_{R,r}");
    param(standard, "--R", "R", "Outer radius", true);
    param(standard, "--r", "r", "Tube radius", true);

    auto* product = app.add_subcommand("product", "Flat product torus b dtheta^2 + a dphi^2");
    param(product, "--a", "a", "Coefficient of dphi^2", true);
    param(product, "--b", "b", "Coefficient of dtheta^2", true);

    auto* circle = app.add_subcommand("hopf-circle", "Hopf torus over the circle of parameter t");
    param(circle, "--t", "t", "Circle parameter in (0, 1)", true);
    param(circle, "--n", "n", "Number of samples (default 16384)", false);
    param(circle, "--save-curve", "save_curve", "Also write the sampled curve as JSON", false);

    auto* curve = app.add_subcommand("hopf-curve", "Hopf torus over a curve file");
    param(curve, "--input", "path", "Curve file {\"points\": [[c1, cj, ck], ...]}", true);

    auto* reduce = app.add_subcommand("reduce", "Reduce tau to the fundamental domain");
    param(reduce, "--re", "re", "Real part", true);
    param(reduce, "--im", "im", "Imaginary part (> 0)", true);

    auto* equiv = app.add_subcommand("equiv", "Test SL(2,Z) equivalence of two points");
    param(equiv, "--tau1", "tau1", "First point as re,im", true);
    param(equiv, "--tau2", "tau2", "Second point as re,im", true);

    auto* sweep = app.add_subcommand("sweep", "Evaluate a family over a parameter range");
    param(sweep, "--kind", "kind", "standard (R/r), product (a/b) or hopf-circle (t)", true);
    param(sweep, "--from", "from", "First parameter value", true);
    param(sweep, "--to", "to", "Last parameter value", true);
    param(sweep, "--steps", "steps", "Number of intervals", true);
    param(sweep, "--n", "n", "Samples per circle (hopf-circle)", false);
    param(sweep, "--curve-dir", "curve_dir", "Write sampled circles here (hopf-circle)", false);

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        return fail("validation", e.what(), {}, 2);
    }

    try {
        ctori::cli::JobSpec job;
        job.kind = ctori::cli::parse_job_kind(app.get_subcommands().front()->get_name());
        job.parameters = params;
        job.output_format = ctori::cli::parse_output_format(global.format);
        if (!global.tol.empty()) job.parameters["tol"] = global.tol;

        const ctori::cli::RunResult result = ctori::cli::run(job);
        if (job.output_format == ctori::cli::OutputFormat::csv) {
            std::cout << ctori::cli::render_csv(result);
        } else {
            std::cout << ctori::cli::render_json(result);
        }
        if (!global.plot.empty()) {
            std::vector<ctori::modular::Tau> points;
            for (const auto& r : result.reports) points.push_back(r.tau_reduced);
            ctori::cli::emit_svg(points, global.plot);
        }
        return 0;
    } catch (const ctori::Error& e) {
        return fail(std::string(ctori::to_string(e.kind())), e.what(), e.field(),
                    ctori::exit_code(e.kind()));
    } catch (const std::exception& e) {
        return fail("internal", e.what(), {}, 3);
    }
}
