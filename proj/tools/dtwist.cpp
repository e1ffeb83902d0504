// Command-line front end: one subcommand per pipeline operation.
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dtwist/errors.hpp"
#include "dtwist/floer/twist.hpp"
#include "dtwist/model/verify.hpp"
#include "dtwist/pipeline/pipeline.hpp"

using namespace dtwist;
using namespace dtwist::pipeline;
using json = nlohmann::ordered_json;

namespace {

struct Common {
    std::string file;
    std::string format = "table";
    std::uint64_t seed = 1;
    int subdivide = 0;
    std::string out;
};

void add_common(CLI::App* app, Common& c, bool needs_file) {
    if (needs_file) app->add_option("file", c.file, "scenario .surf file")->required()->check(CLI::ExistingFile);
    app->add_option("--format", c.format, "table or structured")->check(CLI::IsMember({"table", "structured"}));
    app->add_option("--seed", c.seed, "RNG seed, recorded in the report");
    app->add_option("--subdivide", c.subdivide, "quad refinements applied before computing")->check(CLI::NonNegativeNumber);
    app->add_option("--out", c.out, "write the output here instead of stdout");
}

int emit(const Common& c, const std::string& text, bool pass) {
    if (c.out.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(c.out);
        if (!f) throw Error("cannot write '" + c.out + "'");
        f << text;
        std::cout << (pass ? "PASS" : "FAIL") << "  wrote " << c.out << "\n";
    }
    return pass ? 0 : 1;
}

int emit(const Common& c, VerificationReport r) {
    r.seed = c.seed;
    return emit(c, emit_report(r, parse_format(c.format)), r.pass());
}

TwistScenario scenario(const Common& c) { return load_scenario(c.file, c.subdivide); }

/// The file's scenario with some keys replaced.
TwistScenario scenario_with(const Common& c, const std::vector<std::pair<std::string, std::string>>& keys) {
    auto file = surface::load_surface_file(c.file);
    for (const auto& [k, v] : keys) {
        bool found = false;
        for (auto& kv : file.scenario)
            if (kv.first == k) kv.second = v, found = true;
        if (!found) file.scenario.push_back({k, v});
    }
    return scenario_from_file(file, c.subdivide);
}

int run_cut(const Common& c) {
    const auto x = scenario(c);
    validate_scenario(x);
    const auto t = hf_inverse_twist(x);
    std::vector<std::size_t> faces(t.cut.components.size(), 0);
    for (int k : t.cut.face_component) ++faces[static_cast<std::size_t>(k)];
    if (c.format == "structured") {
        json j;
        j["scenario"] = x.describe();
        json comps = json::array();
        for (std::size_t i = 0; i < t.cut.components.size(); ++i) {
            const auto& p = t.cut.components[i];
            const long b = static_cast<long>(p.num_boundary_components());
            comps.push_back({{"faces", faces[i]},
                             {"euler", p.euler()},
                             {"boundary_components", b},
                             {"genus", (2 - p.euler() - b) / 2}});
        }
        j["components"] = comps;
        return emit(c, j.dump(2) + "\n", true);
    }
    std::string s = "scenario  " + x.describe() + "\n\ncut along " + x.s.name + ": " +
                    std::to_string(t.cut.components.size()) + " component(s)\n";
    for (std::size_t i = 0; i < t.cut.components.size(); ++i) {
        const auto& p = t.cut.components[i];
        const long b = static_cast<long>(p.num_boundary_components());
        s += "  [" + std::to_string(i) + "]  faces " + std::to_string(faces[i]) + "  chi " + std::to_string(p.euler()) +
             "  boundary " + std::to_string(b) + "  genus " + std::to_string((2 - p.euler() - b) / 2) + "\n";
    }
    return emit(c, s, true);
}

int run_twist(const Common& c, int power, const std::string& curve) {
    const auto x = curve.empty() ? scenario(c) : scenario_with(c, {{"N", curve}});
    validate_scenario(x);
    if (!x.n) throw CurveError("twist needs --curve or N in the scenario");
    const CellCurve n = *x.n;
    std::vector<CellCurve> others;
    if (x.q && !surface::same_loop(*x.q, n, false)) others.push_back(*x.q);
    const auto tw = floer::combinatorial_dehn_twist(x.surface, n, x.s, power, others);

    surface::SurfaceFile out;
    out.name = x.name + "_twisted";
    out.surface = tw.surface;
    out.curves = {CellCurve{x.s.name, tw.core.darts}, tw.twisted};
    for (const auto& o : tw.carried) out.curves.push_back(o);
    out.scenario = {{"S", x.s.name}, {"N", tw.twisted.name}};
    if (!others.empty()) out.scenario.push_back({"Q", others.front().name});
    const std::string word = surface::curve_word(tw.surface, tw.twisted);
    const auto crossings = floer::find_intersections(tw.surface, CellCurve{x.s.name, tw.core.darts}, tw.twisted).size();
    if (c.format == "structured") {
        json j;
        j["scenario"] = x.describe();
        j["power"] = power;
        j["curve"] = word;
        j["crossings_with_S"] = crossings;
        j["surface_file"] = surface::format_surface_file(out);
        return emit(c, j.dump(2) + "\n", true);
    }
    std::string s = "scenario  " + x.describe() + "\n\ntau_S^" + std::to_string(power) + "(" + n.name + ") = " + word +
                    "\ncrossings with S: " + std::to_string(crossings) + "\n\n" + surface::format_surface_file(out);
    return emit(c, s, true);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Dehn twists, Floer cohomology surrogates and the fixed-point check for anti-symplectic involutions"};
    app.require_subcommand(1);
    Common c;

    auto* hf_cmd = app.add_subcommand("hf", "ranks of HF*(tau_S^-1) = H*(X \\ S), or of HF(A, B) with --pair");
    add_common(hf_cmd, c, true);
    std::vector<std::string> pair;
    hf_cmd->add_option("--pair", pair, "two curve names")->expected(2);

    auto* a_cmd = app.add_subcommand("element-a", "the distinguished element A in the component basis");
    add_common(a_cmd, c, true);
    auto* inv_cmd = app.add_subcommand("involution", "c* on H*(X \\ S) per degree");
    add_common(inv_cmd, c, true);
    auto* thm_cmd = app.add_subcommand("verify-theorem-a", "check c*(A) = A");
    add_common(thm_cmd, c, true);
    auto* les_cmd = app.add_subcommand("les-check", "rank constraints of the twist exact sequence for Q, N");
    add_common(les_cmd, c, true);

    auto* tw_cmd = app.add_subcommand("twist", "apply tau_S^k to N (or --curve) and print the result");
    add_common(tw_cmd, c, true);
    int power = 1;
    std::string curve;
    tw_cmd->add_option("--power", power, "k; positive twists to the right");
    tw_cmd->add_option("--curve", curve, "curve to twist instead of N");

    auto* coh_cmd = app.add_subcommand("cohomology", "cellular cohomology of X");
    add_common(coh_cmd, c, true);
    auto* cut_cmd = app.add_subcommand("cut", "components of X cut along S");
    add_common(cut_cmd, c, true);

    auto* model_cmd = app.add_subcommand("verify-model", "model-geometry identity verifiers");
    add_common(model_cmd, c, false);
    model::ModelOptions mo;
    std::string kind = "id";
    double tol = -1;
    bool serial = false;
    std::vector<std::string> verifiers;
    model_cmd->add_option("--kind", kind, "id or r")->check(CLI::IsMember({"id", "r"}));
    model_cmd->add_option("--dim", mo.dim, "n in T*S^n")->check(CLI::PositiveNumber);
    model_cmd->add_option("--samples", mo.samples, "samples per identity")->check(CLI::PositiveNumber);
    model_cmd->add_option("--epsilon", mo.epsilon, "profile support radius");
    model_cmd->add_option("--lambda", mo.lambda, "admissible profile height");
    model_cmd->add_option("--tolerance", tol, "override every tolerance");
    model_cmd->add_option("--verifier", verifiers, "subset of: " + [] {
        std::string s;
        for (const auto& n : model::model_verifier_names()) s += (s.empty() ? "" : ", ") + n;
        return s;
    }());
    model_cmd->add_flag("--serial", serial, "serial reference kernels instead of OpenMP");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*hf_cmd) {
            const auto x = scenario(c);
            VerificationReport r;
            r.scenario = x.describe();
            if (pair.empty()) {
                r.ranks[keys::twist] = hf_inverse_twist(x).ranks();
            } else {
                const auto y = scenario_with(c, {{"Q", pair[0]}, {"N", pair[1]}});
                r.ranks["HF(" + pair[0] + "," + pair[1] + ")"] = floer::hf(y.surface, *y.q, *y.n);
            }
            return emit(c, r);
        }
        if (*a_cmd) return emit(c, element_a_report(scenario(c)));
        if (*inv_cmd) return emit(c, involution_report(scenario(c)));
        if (*thm_cmd) return emit(c, verify_theorem_a(scenario(c)));
        if (*les_cmd) return emit(c, les_rank_check(scenario(c)));
        if (*tw_cmd) return run_twist(c, power, curve);
        if (*coh_cmd) {
            const auto x = scenario(c);
            VerificationReport r;
            r.scenario = x.describe();
            r.ranks["H(X)"] = surface::cellular_cohomology(x.surface).homology.ranks;
            return emit(c, r);
        }
        if (*cut_cmd) return run_cut(c);
        if (*model_cmd) {
            mo.kind = model::parse_kind(kind);
            mo.seed = c.seed;
            mo.exec = serial ? model::Exec::Serial : model::Exec::Parallel;
            if (tol >= 0) mo.tolerance = tol;
            if (verifiers.empty()) verifiers = model::model_verifier_names();
            std::vector<model::ModelReport> reports;
            for (const auto& v : verifiers) reports.push_back(model::run_model_verifier(v, mo));
            return emit(c, model_report(reports, c.seed));
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
