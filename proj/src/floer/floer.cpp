#include "dtwist/floer/floer.hpp"

#include <map>

#include "dtwist/errors.hpp"
#include "dtwist/floer/tighten.hpp"
#include "dtwist/floer/twist.hpp"
#include "dtwist/surface/cut.hpp"

namespace dtwist::floer {

using gf2::BitMatrix;

bool is_contractible(const CombinatorialSurface& x, const CellCurve& c) {
    const auto cut = surface::cut_along(x, c);
    for (const auto& comp : cut.components)
        if (comp.euler() == 1 && comp.num_boundary_components() == 1) return true;
    return false;
}

void require_essential(const CombinatorialSurface& x, const CellCurve& c) {
    if (is_contractible(x, c))
        throw ContractibleCurveError("curve '" + c.name + "' bounds a disk; Floer cohomology needs essential curves");
}

FloerComplex floer_complex(const CombinatorialSurface& x, const CellCurve& l0, const CellCurve& l1) {
    surface::validate_curve(x, l0);
    surface::validate_curve(x, l1);
    require_essential(x, l0);
    require_essential(x, l1);

    FloerComplex fc;
    std::map<int, std::pair<int, std::size_t>> slot;  // vertex -> (degree, index)
    for (const auto& p : find_intersections(x, l0, l1)) {
        auto& gens = fc.generators[p.degree];
        slot[p.vertex] = {p.degree, gens.size()};
        gens.push_back(p);
    }
    const std::size_t n0 = fc.generators[0].size(), n1 = fc.generators[1].size();
    BitMatrix d0(n1, n0), d1(n0, n1);
    const auto bigons = find_bigons(x, l0, l1);
    fc.bigon_count = bigons.size();
    for (const auto& b : bigons) {
        const auto [dx, ix] = slot.at(b.from);
        const auto [dy, iy] = slot.at(b.to);
        if (dx == dy)
            throw InternalConsistencyError("bigon joins two intersection points of the same degree");
        if (dx == 0)
            d0.flip(iy, ix);
        else
            d1.flip(iy, ix);
    }
    fc.complex = gf2::ChainComplex::mod2(n0, n1, d0, d1);
    const auto chk = gf2::validate_complex(fc.complex);
    if (!chk.ok) throw InternalConsistencyError("Floer differential does not square to zero: " + chk.message);
    return fc;
}

FloerComplex hf_complex(const CombinatorialSurface& x, const CellCurve& l0, const CellCurve& l1, HfOptions opts) {
    if (opts.self_floer) {
        const bool equal = same_loop(l0, l1, false);
        bool isotopic = equal;
        if (!equal) {
            bool shares = false;
            for (auto d : l0.darts) shares = shares || l1.uses_edge(surface::edge_of(d));
            isotopic = !shares && disjoint_isotopic(x, l0, l1);
        }
        if (isotopic) {
            require_essential(x, l0);
            const auto model = pushoff_model(x, l0);
            return floer_complex(model.surface, model.curve, model.pushoff);
        }
    }
    // Embedded bigons alone do not give the right homology, but once none is
    // left the pair is in minimal position and the differential vanishes.
    const auto t = tighten_pair(x, l0, l1, {opts.self_floer});
    return floer_complex(t.surface, t.l0, t.l1);
}

gf2::GradedDims hf(const CombinatorialSurface& x, const CellCurve& l0, const CellCurve& l1, HfOptions opts) {
    return gf2::homology(hf_complex(x, l0, l1, opts).complex).ranks;
}

}  // namespace dtwist::floer
