// lobachevsky: solve triangles, tabulate the angle of parallelism and run the
// verification suites in constant-curvature geometry.

#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "commands.hpp"

namespace {

const std::map<std::string, lob::GeometryKind> geometries{{"spherical", lob::GeometryKind::Spherical},
                                                          {"euclidean", lob::GeometryKind::Euclidean},
                                                          {"hyperbolic", lob::GeometryKind::Hyperbolic}};
const std::map<std::string, lob::OutputFormat> formats{
    {"json", lob::OutputFormat::Json}, {"csv", lob::OutputFormat::Csv}, {"human", lob::OutputFormat::Human}};
const std::map<std::string, lobcli::SolveMode> modes{{"sss", lobcli::SolveMode::Sss},
                                                     {"sas", lobcli::SolveMode::Sas},
                                                     {"asa", lobcli::SolveMode::Asa},
                                                     {"aaa", lobcli::SolveMode::Aaa}};

std::vector<std::string> suite_names() {
    std::vector<std::string> names;
    for (lob::Suite s : lob::all_suites) names.emplace_back(lob::to_string(s));
    names.emplace_back("all");
    return names;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Triangle solving and verification in spherical, Euclidean and hyperbolic geometry"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string geometry = "hyperbolic";
    double k = 1.0;
    std::uint64_t seed = 0;
    std::size_t samples = 10000;
    double tol = 1e-9;
    std::string format = "human";
    std::string out_path;

    app.add_option("--geometry", geometry, "spherical | euclidean | hyperbolic")
        ->check(CLI::IsMember(geometries));
    app.add_option("--curvature-scale", k, "curvature scale k > 0 (curvature is +-1/k^2)")
        ->check(CLI::PositiveNumber);
    app.add_option("--seed", seed, "generator seed");
    app.add_option("--samples", samples, "samples per suite")->check(CLI::Range(std::size_t{1}, std::size_t{100000000}));
    app.add_option("--tol", tol, "residual tolerance")->check(CLI::PositiveNumber);
    app.add_option("--format", format, "json | csv | human")->check(CLI::IsMember(formats));
    app.add_option("--out", out_path, "write output to this file instead of stdout");

    auto* solve = app.add_subcommand("solve", "solve a triangle from three elements (angles in radians)");
    std::string mode;
    std::vector<double> values;
    solve->add_option("--mode", mode, "sss: a b c | sas: b A c | asa: B a C | aaa: A B C")
        ->required()
        ->check(CLI::IsMember(modes));
    solve->add_option("values", values, "three elements")->required()->expected(3);

    auto* par = app.add_subcommand("parallelism", "tabulate the angle of parallelism");
    double p_min = 0.0, p_max = 5.0;
    int steps = 51;
    par->add_option("--p-min", p_min, "first distance");
    par->add_option("--p-max", p_max, "last distance");
    par->add_option("--steps", steps, "number of rows (>= 2)");

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    std::string suite_name = "all";
    verify->add_option("suite", suite_name, "suite name")->check(CLI::IsMember(suite_names()));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return lobcli::usage_error;
    }

    std::ofstream file;
    if (!out_path.empty()) {
        file.open(out_path, std::ios::binary);
        if (!file) {
            std::cerr << "error: cannot open " << out_path << '\n';
            return lobcli::usage_error;
        }
    }
    std::ostream& out = out_path.empty() ? std::cout : file;

    const lob::Curvature curvature = lob::Curvature::of(geometries.at(geometry), k);
    const lob::OutputFormat fmt = formats.at(format);
    int code = lobcli::ok;
    if (*solve) {
        code = lobcli::cmd_solve(curvature, modes.at(mode), {values[0], values[1], values[2]}, fmt, out, std::cerr);
    } else if (*par) {
        code = lobcli::cmd_parallelism_curve(curvature, p_min, p_max, steps, fmt, out, std::cerr);
    } else {
        lob::SuiteConfig cfg;
        cfg.seed = seed;
        cfg.samples = samples;
        cfg.tolerance = tol;
        cfg.curvature = lob::Curvature::hyperbolic(k);
        cfg.format = fmt;
        code = lobcli::cmd_verify(*lob::parse_suite(suite_name), cfg, out, std::cerr);
    }
    out.flush();
    return code;
}
