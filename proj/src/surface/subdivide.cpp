#include "dtwist/surface/subdivide.hpp"

#include "dtwist/errors.hpp"

namespace dtwist::surface {

Subdivision subdivide_once(const CombinatorialSurface& x) {
    const std::size_t ne = x.num_edges();
    std::vector<std::string> names;
    names.reserve(2 * ne);
    // Edge e.0 runs tail(e) -> mid, e.1 runs mid -> head(e).
    for (std::size_t e = 0; e < ne; ++e) {
        names.push_back(x.edge_name(static_cast<int>(e)) + ".0");
        names.push_back(x.edge_name(static_cast<int>(e)) + ".1");
    }
    Subdivision s;
    s.halves.resize(x.num_darts());
    for (std::size_t e = 0; e < ne; ++e) {
        const int a = static_cast<int>(2 * e), b = static_cast<int>(2 * e + 1);
        s.halves[2 * e] = {dart_of(a, false), dart_of(b, false)};
        s.halves[2 * e + 1] = {dart_of(b, true), dart_of(a, true)};
    }
    s.spoke.resize(x.num_faces());
    for (std::size_t f = 0; f < x.num_faces(); ++f) {
        for (std::size_t i = 0; i < x.face(f).size(); ++i) {
            s.spoke[f].push_back(dart_of(static_cast<int>(names.size()), false));
            names.push_back("f" + std::to_string(f) + "/" + std::to_string(i));
        }
    }
    std::vector<std::vector<Dart>> faces;
    for (std::size_t f = 0; f < x.num_faces(); ++f) {
        const auto& w = x.face(f);
        const std::size_t k = w.size();
        for (std::size_t i = 0; i < k; ++i) {
            const std::size_t p = (i + k - 1) % k;
            const Dart in = w[p], out = w[i];
            faces.push_back({s.halves[static_cast<std::size_t>(in)][1], s.halves[static_cast<std::size_t>(out)][0],
                             reverse(s.spoke[f][i]), s.spoke[f][p]});
        }
    }
    s.surface = CombinatorialSurface::build(std::move(names), std::move(faces),
                                            {.allow_boundary = !x.closed(), .allow_disconnected = true});
    s.centre.resize(x.num_faces());
    for (std::size_t f = 0; f < x.num_faces(); ++f) s.centre[f] = s.surface.tail(s.spoke[f][0]);
    s.midpoint.resize(ne);
    for (std::size_t e = 0; e < ne; ++e) s.midpoint[e] = s.surface.head(s.halves[2 * e][0]);
    return s;
}

CellCurve Subdivision::map_curve(const CellCurve& c) const {
    CellCurve out{c.name, {}};
    for (Dart d : c.darts) {
        out.darts.push_back(halves[static_cast<std::size_t>(d)][0]);
        out.darts.push_back(halves[static_cast<std::size_t>(d)][1]);
    }
    return out;
}

CellInvolution Subdivision::map_involution(const CombinatorialSurface& old, const CellInvolution& c) const {
    CellInvolution out{c.name, std::vector<Dart>(surface.num_darts(), -1)};
    auto set = [&](Dart from, Dart to) {
        out.dart_map[static_cast<std::size_t>(from)] = to;
        out.dart_map[static_cast<std::size_t>(reverse(from))] = reverse(to);
    };
    for (std::size_t d = 0; d < old.num_darts(); ++d) {
        const auto& h = halves[d];
        const auto& ih = halves[static_cast<std::size_t>(c(static_cast<Dart>(d)))];
        set(h[0], ih[0]);
        set(h[1], ih[1]);
    }
    // The centre of f goes to the centre of the face left of reverse(c(d_i)),
    // and the midpoint of d_i to the midpoint of c(d_i).
    for (std::size_t f = 0; f < old.num_faces(); ++f) {
        for (std::size_t i = 0; i < old.face(f).size(); ++i) {
            const Dart img = reverse(c(old.face(f)[i]));
            const int g = old.face_of(img);
            if (g < 0) throw InvolutionError("cell map sends a face dart to the boundary");
            set(spoke[f][i], spoke[static_cast<std::size_t>(g)][static_cast<std::size_t>(old.position_in_face(img))]);
        }
    }
    return out;
}

CombinatorialSurface subdivide(const CombinatorialSurface& x, int n) {
    CombinatorialSurface y = x;
    for (int i = 0; i < n; ++i) y = subdivide_once(y).surface;
    return y;
}

}  // namespace dtwist::surface
