#include "dtwist/floer/regions.hpp"

#include <numeric>
#include <set>

#include "dtwist/errors.hpp"

namespace dtwist::floer {

using surface::edge_of;
using surface::reverse;

std::size_t Region::corner_count() const {
    std::size_t n = 0;
    for (const auto& b : boundary) n += b.corners.size();
    return n;
}

std::vector<Region> complementary_regions(const CombinatorialSurface& x, const CellCurve& l0, const CellCurve& l1) {
    std::vector<int> on_curve(x.num_edges(), -1);
    for (Dart d : l0.darts) on_curve[static_cast<std::size_t>(edge_of(d))] = 0;
    for (Dart d : l1.darts) {
        auto& c = on_curve[static_cast<std::size_t>(edge_of(d))];
        if (c == 0) throw TransversalityError("curves share an edge");
        c = 1;
    }
    std::vector<char> vertex_on_curve(x.num_vertices(), 0);
    for (const auto* c : {&l0, &l1})
        for (Dart d : c->darts) vertex_on_curve[static_cast<std::size_t>(x.tail(d))] = 1;

    // Faces glued across edges off the curves.
    std::vector<int> parent(x.num_faces());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int f) {
        while (parent[static_cast<std::size_t>(f)] != f) f = parent[static_cast<std::size_t>(f)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(f)])];
        return f;
    };
    for (std::size_t e = 0; e < x.num_edges(); ++e) {
        if (on_curve[e] >= 0) continue;
        const int a = x.face_of(surface::dart_of(static_cast<int>(e), false));
        const int b = x.face_of(surface::dart_of(static_cast<int>(e), true));
        if (a >= 0 && b >= 0) parent[static_cast<std::size_t>(find(a))] = find(b);
    }
    std::vector<int> region_of(x.num_faces());
    std::vector<Region> regions;
    std::map<int, int> label;
    for (std::size_t f = 0; f < x.num_faces(); ++f) {
        auto [it, fresh] = label.emplace(find(static_cast<int>(f)), static_cast<int>(regions.size()));
        if (fresh) regions.emplace_back();
        region_of[f] = it->second;
        regions[static_cast<std::size_t>(it->second)].faces.push_back(static_cast<int>(f));
    }

    std::vector<std::set<int>> verts(regions.size());
    std::vector<long> edges(regions.size(), 0);
    for (std::size_t e = 0; e < x.num_edges(); ++e) {
        if (on_curve[e] >= 0) continue;
        const int f = x.face_of(surface::dart_of(static_cast<int>(e), false));
        ++edges[static_cast<std::size_t>(region_of[static_cast<std::size_t>(f)])];
    }
    for (std::size_t d = 0; d < x.num_darts(); ++d) {
        const int v = x.tail(static_cast<Dart>(d));
        const int f = x.face_of(static_cast<Dart>(d));
        if (f >= 0 && !vertex_on_curve[static_cast<std::size_t>(v)]) verts[static_cast<std::size_t>(region_of[static_cast<std::size_t>(f)])].insert(v);
    }
    for (std::size_t r = 0; r < regions.size(); ++r)
        regions[r].euler = static_cast<long>(verts[r].size()) - edges[r] + static_cast<long>(regions[r].faces.size());

    // Boundary walks: from a curve dart, follow the face and skip across edges off the curves.
    std::vector<char> seen(x.num_darts(), 0);
    for (std::size_t d0 = 0; d0 < x.num_darts(); ++d0) {
        const Dart start = static_cast<Dart>(d0);
        if (on_curve[static_cast<std::size_t>(edge_of(start))] < 0 || seen[d0] || x.face_of(start) < 0) continue;
        RegionBoundary b;
        Dart d = start;
        do {
            seen[static_cast<std::size_t>(d)] = 1;
            b.darts.push_back(d);
            b.curve.push_back(on_curve[static_cast<std::size_t>(edge_of(d))]);
            Dart n = x.next(d);
            while (on_curve[static_cast<std::size_t>(edge_of(n))] < 0) n = x.next(reverse(n));
            d = n;
        } while (d != start);
        for (std::size_t i = 0; i < b.darts.size(); ++i) {
            const std::size_t p = (i + b.darts.size() - 1) % b.darts.size();
            if (b.curve[p] != b.curve[i]) b.corners.push_back({x.tail(b.darts[i]), i});
        }
        regions[static_cast<std::size_t>(region_of[static_cast<std::size_t>(x.face_of(start))])].boundary.push_back(std::move(b));
    }
    return regions;
}

std::vector<Bigon> find_bigons(const std::vector<Region>& regions) {
    std::vector<Bigon> out;
    for (std::size_t r = 0; r < regions.size(); ++r) {
        const Region& reg = regions[r];
        if (!reg.is_disk() || reg.boundary.size() != 1) continue;
        const RegionBoundary& b = reg.boundary.front();
        if (b.corners.size() != 2) continue;
        if (b.corners[0].vertex == b.corners[1].vertex) continue;
        Bigon g;
        g.region = r;
        const std::size_t n = b.darts.size();
        for (const auto& c : b.corners) {
            std::vector<Dart> run;
            const int curve = b.curve[c.at];
            for (std::size_t i = c.at; b.curve[i % n] == curve && run.size() < n; ++i) run.push_back(b.darts[i % n]);
            if (curve == 0) {
                g.arc0 = run;
                g.from = c.vertex;
            } else {
                g.arc1 = run;
            }
        }
        if (g.arc0.empty() || g.arc1.empty()) continue;
        for (const auto& c : b.corners)
            if (c.vertex != g.from) g.to = c.vertex;
        out.push_back(std::move(g));
    }
    return out;
}

std::vector<Bigon> find_bigons(const CombinatorialSurface& x, const CellCurve& l0, const CellCurve& l1) {
    return find_bigons(complementary_regions(x, l0, l1));
}

bool disjoint_isotopic(const CombinatorialSurface& x, const CellCurve& l0, const CellCurve& l1) {
    if (!find_intersections(x, l0, l1).empty()) return false;
    for (const auto& r : complementary_regions(x, l0, l1)) {
        if (r.euler != 0 || r.boundary.size() != 2) continue;
        const auto& a = r.boundary[0];
        const auto& b = r.boundary[1];
        if (a.darts.size() != (a.curve[0] == 0 ? l0 : l1).darts.size()) continue;
        if (b.darts.size() != (b.curve[0] == 0 ? l0 : l1).darts.size()) continue;
        if (a.corners.empty() && b.corners.empty() && a.curve[0] != b.curve[0]) return true;
    }
    return false;
}

}  // namespace dtwist::floer
