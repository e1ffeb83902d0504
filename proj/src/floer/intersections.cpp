#include "dtwist/floer/intersections.hpp"

#include <algorithm>
#include <map>

#include "dtwist/errors.hpp"

namespace dtwist::floer {

namespace {

/// Position of each dart in the counterclockwise star of v.
std::map<Dart, std::size_t> star_positions(const CombinatorialSurface& x, int v) {
    std::map<Dart, std::size_t> pos;
    const auto star = x.darts_at(v);
    for (std::size_t i = 0; i < star.size(); ++i) pos[star[i]] = i;
    return pos;
}

/// True when c lies strictly inside the counterclockwise arc from a to b.
bool in_ccw_arc(std::size_t a, std::size_t b, std::size_t c, std::size_t n) {
    const std::size_t to_b = (b + n - a) % n;
    const std::size_t to_c = (c + n - a) % n;
    return to_c > 0 && to_c < to_b;
}

}  // namespace

std::vector<IntersectionPoint> find_intersections(const CombinatorialSurface& x, const CellCurve& l0,
                                                  const CellCurve& l1) {
    std::map<int, std::size_t> at1;  // vertex -> index of the L1 dart leaving it
    for (std::size_t j = 0; j < l1.darts.size(); ++j) at1[x.tail(l1.darts[j])] = j;
    for (Dart d : l0.darts) {
        if (l1.uses_edge(surface::edge_of(d)))
            throw TransversalityError("curves '" + l0.name + "' and '" + l1.name + "' share edge " +
                                      x.edge_name(surface::edge_of(d)) + "; subdivide or perturb one of them");
    }
    std::vector<IntersectionPoint> out;
    const std::size_t n0 = l0.darts.size(), n1 = l1.darts.size();
    for (std::size_t i = 0; i < n0; ++i) {
        const int v = x.tail(l0.darts[i]);
        auto it = at1.find(v);
        if (it == at1.end()) continue;
        const std::size_t j = it->second;
        if (x.is_boundary_vertex(v)) throw TransversalityError("curves meet on the boundary");
        const auto pos = star_positions(x, v);
        const std::size_t n = pos.size();
        const std::size_t out0 = pos.at(l0.darts[i]);
        const std::size_t back0 = pos.at(surface::reverse(l0.darts[(i + n0 - 1) % n0]));
        const std::size_t out1 = pos.at(l1.darts[j]);
        const std::size_t back1 = pos.at(surface::reverse(l1.darts[(j + n1 - 1) % n1]));
        const bool a = in_ccw_arc(out0, back0, out1, n);
        const bool b = in_ccw_arc(out0, back0, back1, n);
        if (a == b)
            throw TransversalityError("curves '" + l0.name + "' and '" + l1.name + "' touch at a vertex without crossing");
        IntersectionPoint p;
        p.vertex = v;
        p.sign = a ? 1 : -1;
        p.degree = p.sign > 0 ? 1 : 0;
        p.index0 = i;
        p.index1 = j;
        out.push_back(p);
    }
    return out;
}

int algebraic_intersection(const CombinatorialSurface& x, const CellCurve& l0, const CellCurve& l1) {
    int s = 0;
    for (const auto& p : find_intersections(x, l0, l1)) s += p.sign;
    return s;
}

}  // namespace dtwist::floer
