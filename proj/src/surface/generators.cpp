#include "dtwist/surface/generators.hpp"

#include <algorithm>
#include <map>

#include "dtwist/errors.hpp"

namespace dtwist::surface {

CombinatorialSurface polygon_surface(int genus) {
    if (genus < 1) throw SurfaceError(SurfaceError::Kind::Other, "polygon model needs genus >= 1");
    std::string w;
    for (int i = 1; i <= genus; ++i) {
        const std::string a = "a" + std::to_string(i), b = "b" + std::to_string(i);
        w += a + " " + b + " " + a + "' " + b + "' ";
    }
    return CombinatorialSurface::from_words({w});
}

std::string grid_edge(char kind, int i, int j) {
    return std::string(1, kind) + std::to_string(i) + "_" + std::to_string(j);
}

CombinatorialSurface grid_surface(int nx, int ny, const std::vector<std::pair<int, int>>& holes, bool periodic) {
    auto wrap = [&](int i, int n) { return periodic ? ((i % n) + n) % n : i; };
    std::vector<std::string> faces;
    for (int j = 0; j < ny; ++j) {
        for (int i = 0; i < nx; ++i) {
            if (std::find(holes.begin(), holes.end(), std::pair{i, j}) != holes.end()) continue;
            faces.push_back(grid_edge('h', i, j) + " " + grid_edge('v', wrap(i + 1, nx), j) + " " +
                            grid_edge('h', i, wrap(j + 1, ny)) + "' " + grid_edge('v', i, j) + "'");
        }
    }
    return CombinatorialSurface::from_words(faces, {.allow_boundary = true});
}

DoubledSurface double_surface(const CombinatorialSurface& y) {
    std::vector<std::string> names;
    std::vector<int> top(y.num_edges()), bottom(y.num_edges());
    for (std::size_t e = 0; e < y.num_edges(); ++e) {
        if (y.is_boundary_edge(static_cast<int>(e))) {
            top[e] = bottom[e] = static_cast<int>(names.size());
            names.push_back(y.edge_name(static_cast<int>(e)));
        } else {
            top[e] = static_cast<int>(names.size());
            names.push_back("t." + y.edge_name(static_cast<int>(e)));
            bottom[e] = static_cast<int>(names.size());
            names.push_back("b." + y.edge_name(static_cast<int>(e)));
        }
    }
    std::vector<std::vector<Dart>> faces;
    for (const auto& w : y.faces()) {
        std::vector<Dart> t;
        for (Dart d : w) t.push_back(dart_of(top[static_cast<std::size_t>(edge_of(d))], is_reversed(d)));
        faces.push_back(std::move(t));
    }
    for (const auto& w : y.faces()) {
        std::vector<Dart> b;
        for (auto it = w.rbegin(); it != w.rend(); ++it)
            b.push_back(dart_of(bottom[static_cast<std::size_t>(edge_of(*it))], !is_reversed(*it)));
        faces.push_back(std::move(b));
    }
    DoubledSurface out;
    out.surface = CombinatorialSurface::build(names, faces);
    out.reflection.name = "c";
    out.reflection.dart_map.resize(out.surface.num_darts());
    for (std::size_t e = 0; e < y.num_edges(); ++e) {
        for (bool r : {false, true}) {
            out.reflection.dart_map[static_cast<std::size_t>(dart_of(top[e], r))] = dart_of(bottom[e], r);
            out.reflection.dart_map[static_cast<std::size_t>(dart_of(bottom[e], r))] = dart_of(top[e], r);
        }
    }
    return out;
}

}  // namespace dtwist::surface
