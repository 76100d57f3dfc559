#include "semitrans/tools/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <optional>
#include <stdexcept>

#include "semitrans/classify.hpp"
#include "semitrans/curvature.hpp"
#include "semitrans/curve_builder.hpp"
#include "semitrans/error.hpp"
#include "semitrans/model_spec.hpp"
#include "semitrans/moduli.hpp"
#include "semitrans/semigroup.hpp"
#include "semitrans/tangency.hpp"
#include "semitrans/tools/report.hpp"
#include "semitrans/tools/reproduce.hpp"
#include "semitrans/tools/svg.hpp"

namespace semitrans::tools {

namespace {

// bad model files are a usage problem, not a failed computation
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

NormModel load(const std::string& path) {
    try {
        return load_model_spec(path);
    } catch (const Error& e) {
        throw UsageError(path + ": " + e.what());
    }
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f || !(f << text)) throw std::runtime_error("cannot write " + path);
}

struct Options {
    std::string model;
    std::string svg, out, csv;
    std::string overlay = "none";
    std::vector<double> eps_grid;
    std::optional<double> at, from, to;
    int depth = kStaircaseDepth;
    std::string target;
    bool no_dual = false, no_pilgrim = false;
};

int cmd_classify(const Options& o, std::ostream& out) {
    const NormModel m = load(o.model);
    json j = envelope(m, "classify");
    j["verdict"] = to_json(classify(m, {!o.no_dual, !o.no_pilgrim}));
    out << dump(j);
    return 0;
}

int cmd_curvature(const Options& o, std::ostream& out) {
    const NormModel m = load(o.model);
    out << profile_csv(profile(m, NormModel::kTableSize));
    if (!o.svg.empty()) write_file(o.svg, render_svg(m));
    return 0;
}

int cmd_moduli(const Options& o, std::ostream& out) {
    const NormModel m = load(o.model);
    const auto grid = o.eps_grid.empty() ? modulus_grid() : o.eps_grid;
    const ModulusCurve uc = uc_curve(m, grid);
    if (!o.csv.empty()) write_file(o.csv, curve_csv(uc));
    json j = envelope(m, "moduli");
    j["uc"] = to_json(uc);
    const auto fit = power2_fit(uc);
    j["power2"] = fit ? number(*fit) : json(nullptr);
    if (o.at) {
        const SpherePoint x = m.sphere_point(*o.at);
        j["strong"] = to_json(strong_curve(m, x, grid));
        j["strong"]["x"] = to_json(x);
    }
    out << dump(j);
    return 0;
}

int cmd_orbit(const Options& o, std::ostream& out) {
    const NormModel m = load(o.model);
    const SpherePoint x = m.sphere_point(*o.from), y = m.sphere_point(*o.to);
    json j = envelope(m, "orbit");
    j["from"] = to_json(x);
    j["to"] = to_json(y);
    if (const auto c = orbit_map(m, x, y)) {
        j["certificate"] = to_json(*c);
    } else {
        // why the tangent construction fails
        j["certificate"] = nullptr;
        j["obstruction"] = {{"from", to_json(tangency_report(m, x))}, {"to", to_json(tangency_report(m, y))},
                            {"inv_norm_lower_bound", number(inv_norm_lower_bound(m, x, y))}};
    }
    out << dump(j);
    return 0;
}

int cmd_build_nobst(const Options& o, std::ostream& out) {
    const BuiltCurve curve = integrate_curve(staircase(o.depth));
    if (!o.csv.empty()) write_file(o.csv, curve_csv(curve));
    const std::string spec = write_model_spec(close_sphere(curve, "nobst"));
    if (o.out.empty()) {
        out << spec;
    } else {
        write_file(o.out, spec);
    }
    return 0;
}

int cmd_render(const Options& o, std::ostream& out) {
    const NormModel m = load(o.model);
    SvgOptions so;
    so.overlay = o.overlay == "discs" ? Overlay::Discs : o.overlay == "ellipses" ? Overlay::Ellipses : Overlay::None;
    const std::string svg = render_svg(m, so);
    if (o.out.empty()) {
        out << svg;
    } else {
        write_file(o.out, svg);
    }
    return 0;
}

int cmd_reproduce(const Options& o, std::ostream& out) {
    int failed = 0;
    for (const Check& c : reproduce(o.target)) {
        out << (c.pass ? "PASS " : "FAIL ") << c.name;
        if (!c.detail.empty()) out << " [" << c.detail << ']';
        out << '\n';
        failed += !c.pass;
    }
    out << o.target << ": " << (failed ? std::to_string(failed) + " failed" : "all passed") << '\n';
    return failed ? 1 : 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Semitransitivity toolkit for planar norms", "semitrans"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kToolVersion));
    Options o;
    auto model_arg = [&](CLI::App* s) { s->add_option("model", o.model, "model-spec file")->required(); };

    auto* classify = app.add_subcommand("classify", "st/bst/umst verdicts as JSON");
    model_arg(classify);
    classify->add_flag("--no-dual", o.no_dual, "skip the dual-norm cross-check");
    classify->add_flag("--no-pilgrim", o.no_pilgrim, "skip the orbit density probe");

    auto* curvature = app.add_subcommand("curvature", "curvature profile as CSV");
    model_arg(curvature);
    curvature->add_option("--svg", o.svg, "also write the sphere as SVG");

    auto* moduli = app.add_subcommand("moduli", "moduli of convexity as JSON");
    model_arg(moduli);
    moduli->add_option("--eps-grid", o.eps_grid, "comma separated eps values in (0, 2]")
        ->delimiter(',')
        ->check(CLI::Range(1e-12, 2.0));
    moduli->add_option("--csv", o.csv, "write the uc curve as CSV");
    moduli->add_option("--at", o.at, "polar angle for the strong-extremality modulus");

    auto* orbit = app.add_subcommand("orbit", "contraction from one sphere point to another");
    model_arg(orbit);
    orbit->add_option("--from", o.from, "polar angle of x")->required();
    orbit->add_option("--to", o.to, "polar angle of y")->required();

    auto* nobst = app.add_subcommand("build-nobst", "the staircase-curvature sphere as a model spec");
    nobst->add_option("--depth", o.depth, "number of curvature steps")->check(CLI::Range(1, 40));
    nobst->add_option("--out", o.out, "write the spec here instead of stdout");
    nobst->add_option("--csv", o.csv, "write the integrated curve as CSV");

    auto* render = app.add_subcommand("render", "the sphere as SVG");
    model_arg(render);
    render->add_option("--overlay", o.overlay, "none, discs or ellipses")
        ->check(CLI::IsMember({"none", "discs", "ellipses"}));
    render->add_option("--out", o.out, "write here instead of stdout");

    auto* reproduce_cmd = app.add_subcommand("reproduce", "PASS/FAIL checks for a worked example");
    reproduce_cmd->add_option("target", o.target, "example name")->required()->check(CLI::IsMember(reproduce_targets()));

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (classify->parsed()) return cmd_classify(o, out);
        if (curvature->parsed()) return cmd_curvature(o, out);
        if (moduli->parsed()) return cmd_moduli(o, out);
        if (orbit->parsed()) return cmd_orbit(o, out);
        if (nobst->parsed()) return cmd_build_nobst(o, out);
        if (render->parsed()) return cmd_render(o, out);
        if (reproduce_cmd->parsed()) return cmd_reproduce(o, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    return run(std::vector<std::string>(argv + std::min(argc, 1), argv + argc), out, err);
}

}  // namespace semitrans::tools
