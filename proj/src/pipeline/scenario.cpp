#include "dtwist/pipeline/scenario.hpp"

#include "dtwist/errors.hpp"
#include "dtwist/floer/floer.hpp"
#include "dtwist/surface/subdivide.hpp"

namespace dtwist::pipeline {

std::string TwistScenario::describe() const {
    std::string out = name + " (genus " + std::to_string(surface.genus()) + ", S = " + s.name;
    if (c) out += ", c = " + c->name;
    if (q) out += ", Q = " + q->name;
    if (n) out += ", N = " + n->name;
    return out + ")";
}

TwistScenario scenario_from_file(const surface::SurfaceFile& f, int subdivide) {
    if (subdivide < 0) throw DomainError("--subdivide needs n >= 0");
    TwistScenario x;
    x.name = f.name;
    x.surface = f.surface;
    bool has_s = false;
    for (const auto& [key, value] : f.scenario) {
        if (key == "S") {
            x.s = f.curve(value);
            has_s = true;
        } else if (key == "c") {
            x.c = f.involution(value);
        } else if (key == "Q") {
            x.q = f.curve(value);
        } else if (key == "N") {
            x.n = f.curve(value);
        } else {
            throw ParseError(0, 0, "unknown scenario key '" + key + "'");
        }
    }
    if (!has_s) throw ParseError(0, 0, "scenario section has no S");
    for (int i = 0; i < subdivide; ++i) {
        const auto sub = surface::subdivide_once(x.surface);
        x.s = sub.map_curve(x.s);
        if (x.c) x.c = sub.map_involution(x.surface, *x.c);
        if (x.q) x.q = sub.map_curve(*x.q);
        if (x.n) x.n = sub.map_curve(*x.n);
        x.surface = sub.surface;
    }
    return x;
}

TwistScenario load_scenario(const std::string& path, int subdivide) {
    return scenario_from_file(surface::load_surface_file(path), subdivide);
}

void validate_scenario(const TwistScenario& x) {
    surface::validate_curve(x.surface, x.s);
    floer::require_essential(x.surface, x.s);
    for (const auto* t : {&x.q, &x.n}) {
        if (!*t) continue;
        surface::validate_curve(x.surface, **t);
        floer::require_essential(x.surface, **t);
    }
    if (x.c) {
        const auto chk = surface::validate_involution(x.surface, *x.c);
        if (!chk.ok) {
            std::string msg = "involution '" + x.c->name + "' is invalid";
            for (const auto& d : chk.diagnostics) msg += "; " + d;
            throw InvolutionError(msg);
        }
        if (!surface::same_loop(x.c->apply(x.s), x.s, false))
            throw InvolutionError("involution '" + x.c->name + "' does not preserve '" + x.s.name + "'");
    }
}

}  // namespace dtwist::pipeline
