// Command-line front end: scene files in, reports and figures out.
//
// Exit codes: 0 success, 1 negative verdict (singular locus, failed
// verification, unsatisfied smoothness gate), 2 input error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "toric/toric.hpp"

namespace {

toric::SceneDocument load_scene(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw toric::IOError("cannot read scene file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return toric::parse_scene(buffer.str());
}

toric::DelzantPolytope require_polytope(const toric::SceneDocument& scene) {
    auto result = toric::verify_delzant(scene.polytope);
    if (!result.ok()) {
        std::cout << toric::delzant_text(result);
        throw toric::SemanticError("scene polytope failed verification");
    }
    return *result.polytope;
}

toric::AffineSubtorus require_subspace(const toric::SceneDocument& scene) {
    if (!scene.subspace)
        throw toric::SemanticError("this command needs a 'subspace' entry in the scene");
    return toric::validate_subspace(*scene.subspace, scene.offset_exp);
}

void print_machine(const nlohmann::json& doc) {
    std::cout << "--- machine-readable ---\n" << doc.dump(2) << "\n";
}

int run_verify(const std::string& path) {
    auto scene = load_scene(path);
    auto result = toric::verify_delzant(scene.polytope);
    std::cout << toric::delzant_text(result);
    return result.ok() ? 0 : 1;
}

int run_equations(const std::string& path) {
    auto scene = load_scene(path);
    toric::AnalysisReport report;
    report.delzant = {require_polytope(scene), {}};
    report.atlas = toric::build_atlas(*report.delzant.polytope);
    report.subtorus = require_subspace(scene);
    report.with_equations = true;
    std::cout << report.text();
    print_machine(report.machine());
    return 0;
}

int run_smoothness(const std::string& path) {
    auto scene = load_scene(path);
    toric::AnalysisReport report;
    report.delzant = {require_polytope(scene), {}};
    report.atlas = toric::build_atlas(*report.delzant.polytope);
    report.subtorus = require_subspace(scene);
    report.smoothness = toric::classify(*report.atlas, *report.subtorus);
    std::cout << report.text();
    print_machine(report.machine());
    return report.smoothness->smooth() ? 0 : 1;
}

int run_moment(const std::string& path, bool unchecked) {
    auto scene = load_scene(path);
    toric::AnalysisReport report;
    report.delzant = {require_polytope(scene), {}};
    report.atlas = toric::build_atlas(*report.delzant.polytope);
    report.subtorus = require_subspace(scene);
    try {
        report.moment = toric::moment_image(*report.delzant.polytope, *report.atlas,
                                            *report.subtorus, !unchecked);
    } catch (const toric::NotSmooth& e) {
        std::cout << "moment image not computed: " << e.what() << "\n";
        return 1;
    }
    std::cout << report.text();
    print_machine(report.machine());
    return 0;
}

int run_figure(const std::string& path, const std::string& out, int samples_override) {
    auto scene = load_scene(path);
    auto poly = require_polytope(scene);
    auto v = require_subspace(scene);
    int samples = samples_override > 0 ? samples_override : scene.options.samples;
    auto pts = toric::sample_moment_curve(poly, v, samples);
    const toric::Rat slack(1, 1000000000);
    for (const auto& p : pts)
        if (!toric::contains_rounded(poly, p, slack))
            throw toric::SemanticError("sampled point escaped the polytope");
    toric::emit_svg(poly, pts, out);
    std::cout << "wrote " << out << " (" << pts.size() << " samples)\n";
    return 0;
}

int run_classify_directions(const std::string& path, int box_override) {
    auto scene = load_scene(path);
    auto poly = require_polytope(scene);
    auto atlas = toric::build_atlas(poly);
    int box = box_override > 0 ? box_override : scene.options.box;
    const int n = poly.n;
    double combos = std::pow(2.0 * box + 1.0, n);
    if (combos > 2e5) throw toric::SemanticError("direction box too large to enumerate");

    std::vector<toric::IntVec> directions;
    toric::IntVec cur(n, toric::Int(-box));
    while (true) {
        bool zero = true;
        for (const auto& x : cur)
            if (x != 0) zero = false;
        if (!zero) {
            toric::IntVec cand = toric::sign_normalized(cur);
            if (cand == cur && toric::primitive_part(cur) == cur)
                directions.push_back(cur);
        }
        int i = n - 1;
        while (i >= 0) {
            if (cur[i] < box) { ++cur[i]; break; }
            cur[i] = -box;
            --i;
        }
        if (i < 0) break;
    }
    std::sort(directions.begin(), directions.end(), toric::lex_less<toric::IntVec>);

    int smooth_count = 0;
    for (const auto& p : directions) {
        auto v = toric::validate_subspace({p}, scene.offset_exp);
        bool smooth = toric::classify(atlas, v).smooth();
        if (smooth) ++smooth_count;
        std::cout << "p=" << toric::vec_to_string(p) << ": "
                  << (smooth ? "SMOOTH" : "SINGULAR") << "\n";
    }
    std::cout << smooth_count << " of " << directions.size()
              << " primitive directions give a smooth closure\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact analysis of subtorus closures in toric manifolds"};
    app.require_subcommand(1);

    std::string scene_path, out_path;
    int samples = 0, box = 0;
    bool unchecked = false;

    auto* verify = app.add_subcommand("verify", "check the polytope conditions");
    verify->add_option("scene", scene_path)->required();
    auto* equations = app.add_subcommand("equations", "print the defining binomials per chart");
    equations->add_option("scene", scene_path)->required();
    auto* smoothness = app.add_subcommand("smoothness", "decide whether the closure is smooth");
    smoothness->add_option("scene", scene_path)->required();
    auto* moment = app.add_subcommand("moment", "projected moment polytope and fixed points");
    moment->add_option("scene", scene_path)->required();
    moment->add_flag("--unchecked", unchecked, "skip the smoothness gate");
    auto* figure = app.add_subcommand("figure", "render the sampled moment image as SVG");
    figure->add_option("scene", scene_path)->required();
    figure->add_option("-o,--output", out_path)->required();
    figure->add_option("--samples", samples, "sample count (default from scene)");
    auto* classify = app.add_subcommand("classify-directions",
                                        "smoothness verdict for every primitive direction in a box");
    classify->add_option("scene", scene_path)->required();
    classify->add_option("--box", box, "enumeration box half-width (default from scene)");

    CLI11_PARSE(app, argc, argv);

    auto start = std::chrono::steady_clock::now();
    int code = 2;
    try {
        if (verify->parsed()) code = run_verify(scene_path);
        else if (equations->parsed()) code = run_equations(scene_path);
        else if (smoothness->parsed()) code = run_smoothness(scene_path);
        else if (moment->parsed()) code = run_moment(scene_path, unchecked);
        else if (figure->parsed()) code = run_figure(scene_path, out_path, samples);
        else if (classify->parsed()) code = run_classify_directions(scene_path, box);
    } catch (const toric::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();
    std::cerr << "elapsed: " << elapsed << " ms\n";
    return code;
}
