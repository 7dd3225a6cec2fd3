#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "equilib/clip.hpp"
#include "equilib/construct.hpp"
#include "equilib/dynamics.hpp"
#include "equilib/equilibria.hpp"
#include "equilib/errors.hpp"
#include "equilib/hull.hpp"
#include "equilib/metrics.hpp"
#include "equilib/off_io.hpp"
#include "equilib/report.hpp"

namespace {

constexpr int kExitDegenerate = 2;
constexpr int kExitGenerationFailed = 3;
constexpr int kExitNotMonostable = 1;
constexpr int kExitUsage = 64;
constexpr int kExitIo = 66;
constexpr int kExitInternal = 70;

equilib::Vec3 parse_point(const std::string& s) {
    equilib::Vec3 v;
    if (std::sscanf(s.c_str(), "%lf,%lf,%lf", &v.x, &v.y, &v.z) != 3)
        throw CLI::ValidationError("expected x,y,z");
    return v;
}

int cmd_analyze(const std::string& path, const std::optional<std::string>& ref,
                bool roll) {
    using namespace equilib;
    ConvexPolyhedron poly = read_off(path);
    AnalysisDocument doc;
    doc.input = path;
    doc.vertex_count = poly.vertex_count();
    doc.edge_count = poly.edge_count();
    doc.face_count = poly.face_count();
    doc.mass = mass_properties(poly);
    doc.reference = ref ? parse_point(*ref) : doc.mass.centroid;
    doc.reference_is_centroid = !ref.has_value();
    doc.report = classify_equilibria(poly, doc.reference);
    doc.metrics = compute_metrics(poly);
    if (roll) {
        std::vector<RollTrace> traces;
        for (int f = 0; f < poly.face_count(); ++f)
            traces.push_back(roll_trace(poly, doc.reference, f));
        doc.traces = std::move(traces);
    }
    std::cout << to_json(doc).dump(2) << "\n";
    return doc.report.any_degenerate ? kExitDegenerate : 0;
}

int cmd_generate(const equilib::GeneratorParams& params, const std::string& out) {
    using namespace equilib;
    GeneratorResult res = generate_monostable(params);
    write_off(res.polyhedron, out);
    nlohmann::json j = to_json(res, params);
    j["output"] = out;
    std::cout << j.dump(2) << "\n";
    return 0;
}

int cmd_metrics(const std::string& path, int sym_n,
                const std::optional<std::string>& axis) {
    using namespace equilib;
    ConvexPolyhedron poly = read_off(path);
    MetricsOptions opts;
    opts.symmetry_order = sym_n;
    if (axis) opts.symmetry_axis = parse_point(*axis);
    std::cout << to_json(compute_metrics(poly, opts)).dump(2) << "\n";
    return 0;
}

int cmd_chain(double beta, double target, int k) {
    using namespace equilib;
    ChainSpec spec{beta, target, k};
    std::cout << chain_to_json(spec, conway_chain(spec)).dump(2) << "\n";
    return 0;
}

int cmd_verify(const std::string& path) {
    using namespace equilib;
    ConvexPolyhedron poly = read_off(path);
    Vec3 c = mass_properties(poly).centroid;
    EquilibriumReport rep = classify_equilibria(poly, c);
    bool mono = false;
    if (!rep.any_degenerate) mono = monostable_oracle(poly);
    nlohmann::json j = {{"schema_version", kSchemaVersion},
                        {"tool_version", kToolVersion},
                        {"input", path},
                        {"monostable", mono},
                        {"S", rep.S},
                        {"H", rep.H},
                        {"U", rep.U},
                        {"any_degenerate", rep.any_degenerate}};
    std::cout << j.dump(2) << "\n";
    if (rep.any_degenerate) return kExitDegenerate;
    return mono ? 0 : kExitNotMonostable;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Static equilibrium analysis and monostable generation for convex polyhedra"};
    app.require_subcommand(1);
    app.set_version_flag("--version", equilib::kToolVersion);

    auto* analyze = app.add_subcommand("analyze", "Classify equilibria of an OFF mesh");
    std::string mesh;
    std::optional<std::string> ref;
    bool roll = false;
    analyze->add_option("mesh", mesh, "OFF mesh path")->required();
    analyze->add_option("--ref", ref, "reference point x,y,z (default: centroid)");
    analyze->add_flag("--roll", roll, "include roll traces from every face");

    auto* generate = app.add_subcommand("generate", "Generate a monostable polyhedron");
    equilib::GeneratorParams params;
    std::string out, mode = "axis_apex";
    generate->add_option("--n", params.n, "rotational symmetry order (>= 3)")->required();
    generate->add_option("--eps", params.eps, "Hausdorff budget to the unit ball")
        ->required();
    generate->add_option("--mode", mode, "axis_apex | n_spikes")
        ->check(CLI::IsMember({"axis_apex", "n_spikes"}));
    generate->add_option("--seed", params.seed, "retry perturbation seed");
    generate->add_option("--s", params.s, "initial azimuthal refinement (0 = auto)");
    generate->add_option("--k", params.k, "initial meridian steps (0 = auto)");
    generate->add_option("--max-attempts", params.max_attempts, "retry budget");
    generate->add_option("--out", out, "output OFF path")->required();

    auto* metrics = app.add_subcommand("metrics", "Diameter, girth and ball distance");
    std::string mmesh;
    int sym_n = 0;
    std::optional<std::string> sym_axis;
    metrics->add_option("mesh", mmesh, "OFF mesh path")->required();
    metrics->add_option("--symmetry-n", sym_n, "also report the n-fold residual");
    metrics->add_option("--symmetry-axis", sym_axis, "axis x,y,z (default 0,0,1)");

    auto* chain = app.add_subcommand("chain", "Emit an obtuse monotone chain");
    double beta = 0, target = 0;
    int ck = 1;
    chain->add_option("--beta", beta, "swept polar angle in (0, pi)")->required();
    chain->add_option("--target", target, "final radius in (0, 1)")->required();
    chain->add_option("--k", ck, "chain steps");

    auto* verify = app.add_subcommand("verify-monostable", "Rolling-oracle verdict");
    std::string vmesh;
    verify->add_option("mesh", vmesh, "OFF mesh path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (analyze->parsed()) return cmd_analyze(mesh, ref, roll);
        if (generate->parsed()) {
            params.mode = mode == "n_spikes" ? equilib::GeneratorMode::NSpikes
                                             : equilib::GeneratorMode::AxisApex;
            return cmd_generate(params, out);
        }
        if (metrics->parsed()) return cmd_metrics(mmesh, sym_n, sym_axis);
        if (chain->parsed()) return cmd_chain(beta, target, ck);
        if (verify->parsed()) return cmd_verify(vmesh);
    } catch (const equilib::GenerationFailed& e) {
        std::cerr << "generation failed: " << e.what() << "\n" << e.diagnostics;
        return kExitGenerationFailed;
    } catch (const equilib::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitIo;
    } catch (const equilib::NotConvex& e) {
        std::cerr << "not convex: " << e.what() << "\n";
        return kExitIo;
    } catch (const equilib::IoError& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return kExitIo;
    } catch (const equilib::DegenerateGeometry& e) {
        std::cerr << "degenerate geometry: " << e.what() << "\n";
        return kExitIo;
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const equilib::InfeasibleChain& e) {
        std::cerr << "infeasible chain: " << e.what() << "\n";
        return kExitUsage;
    } catch (const equilib::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitUsage;
}
