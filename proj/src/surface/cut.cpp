#include "dtwist/surface/cut.hpp"

#include <map>

#include "dtwist/errors.hpp"

namespace dtwist::surface {

CutResult cut_along(const CombinatorialSurface& x, const CellCurve& s) {
    validate_curve(x, s);
    const std::size_t ne = x.num_edges();
    std::vector<int> curve_pos(ne, -1);
    for (std::size_t i = 0; i < s.darts.size(); ++i) curve_pos[static_cast<std::size_t>(edge_of(s.darts[i]))] = static_cast<int>(i);

    std::vector<std::string> names = x.edge_names();
    std::vector<int> edge_to_original(ne);
    for (std::size_t e = 0; e < ne; ++e) edge_to_original[e] = static_cast<int>(e);
    std::vector<int> right_edge(ne, -1);
    for (Dart d : s.darts) {
        const auto e = static_cast<std::size_t>(edge_of(d));
        names[e] = x.edge_name(edge_of(d)) + "^L";
        right_edge[e] = static_cast<int>(names.size());
        names.push_back(x.edge_name(edge_of(d)) + "^R");
        edge_to_original.push_back(static_cast<int>(e));
    }

    // The face on the left of a curve dart keeps the left copy; the other side
    // gets the right copy, traversed the same way as in X.
    std::vector<std::vector<Dart>> faces = x.faces();
    for (auto& word : faces) {
        for (Dart& d : word) {
            const auto e = static_cast<std::size_t>(edge_of(d));
            if (curve_pos[e] < 0) continue;
            const Dart sd = s.darts[static_cast<std::size_t>(curve_pos[e])];
            if (d != sd) d = dart_of(right_edge[e], is_reversed(d));
        }
    }

    CutResult out;
    out.cut = CombinatorialSurface::build(names, faces, {.allow_boundary = true, .allow_disconnected = true});
    out.edge_to_original = std::move(edge_to_original);
    for (Dart d : s.darts) {
        out.left_copy.push_back(d);
        out.right_copy.push_back(dart_of(right_edge[static_cast<std::size_t>(edge_of(d))], is_reversed(d)));
    }
    out.vertex_to_original.assign(out.cut.num_vertices(), -1);
    for (std::size_t d = 0; d < out.cut.num_darts(); ++d) {
        const Dart cd = static_cast<Dart>(d);
        const Dart od = dart_of(out.edge_to_original[static_cast<std::size_t>(edge_of(cd))], is_reversed(cd));
        out.vertex_to_original[static_cast<std::size_t>(out.cut.tail(cd))] = x.tail(od);
    }

    std::size_t ncomp = 0;
    out.face_component = out.cut.face_components(&ncomp);
    for (std::size_t k = 0; k < ncomp; ++k) {
        std::map<int, int> renumber;
        std::vector<std::string> cnames;
        std::vector<std::vector<Dart>> cfaces;
        for (std::size_t f = 0; f < out.cut.num_faces(); ++f) {
            if (out.face_component[f] != static_cast<int>(k)) continue;
            std::vector<Dart> w;
            for (Dart d : out.cut.face(f)) {
                auto [it, fresh] = renumber.emplace(edge_of(d), static_cast<int>(cnames.size()));
                if (fresh) cnames.push_back(out.cut.edge_name(edge_of(d)));
                w.push_back(dart_of(it->second, is_reversed(d)));
            }
            cfaces.push_back(std::move(w));
        }
        out.components.push_back(CombinatorialSurface::build(cnames, cfaces, {.allow_boundary = true}));
    }

    long chi = 0;
    for (const auto& c : out.components) chi += c.euler();
    if (chi != x.euler())
        throw InternalConsistencyError("cut changed the Euler characteristic: " + std::to_string(x.euler()) + " -> " +
                                       std::to_string(chi));
    if (x.closed() && out.cut.num_boundary_components() != 2)
        throw InternalConsistencyError("cutting a closed surface along a loop must leave two boundary circles, got " +
                                       std::to_string(out.cut.num_boundary_components()));
    return out;
}

}  // namespace dtwist::surface
