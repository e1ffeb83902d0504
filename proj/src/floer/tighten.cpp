#include "dtwist/floer/tighten.hpp"

#include <map>
#include <optional>
#include <set>
#include <unordered_set>

#include "dtwist/errors.hpp"
#include "dtwist/floer/regions.hpp"
#include "dtwist/surface/subdivide.hpp"

namespace dtwist::floer {

using surface::dart_of;
using surface::edge_of;
using surface::reverse;

namespace {

/// Split some edges at their midpoints and cone some faces off a new centre.
struct Refinement {
    CombinatorialSurface surface;
    /// halves[d]: one or two new darts traversing old dart d.
    std::vector<std::vector<Dart>> halves;
    /// spoke[f][new boundary dart b] = spoke from the centre of f to tail(b).
    std::map<int, std::map<Dart, Dart>> spoke;

    CellCurve map_curve(const CellCurve& c) const {
        CellCurve out{c.name, {}};
        for (Dart d : c.darts) {
            const auto& h = halves[static_cast<std::size_t>(d)];
            out.darts.insert(out.darts.end(), h.begin(), h.end());
        }
        return out;
    }

    /// Spoke from the centre of refined face f to the midpoint of old dart d.
    Dart to_midpoint(int f, Dart d) const {
        const auto& h = halves[static_cast<std::size_t>(d)];
        if (h.size() != 2) throw InternalConsistencyError("tighten: edge was not split");
        return spoke.at(f).at(h[1]);
    }
};

Refinement refine(const CombinatorialSurface& x, const std::set<int>& faces, const std::set<int>& edges) {
    std::vector<std::string> names = x.edge_names();
    std::unordered_set<std::string> used(names.begin(), names.end());
    auto unique = [&](const std::string& base) {
        std::string nm = base;
        for (int k = 1; used.count(nm); ++k) nm = base + "+" + std::to_string(k);
        used.insert(nm);
        return nm;
    };
    auto fresh = [&](const std::string& base) {
        names.push_back(unique(base));
        return static_cast<int>(names.size()) - 1;
    };

    Refinement r;
    r.halves.resize(x.num_darts());
    for (std::size_t e = 0; e < x.num_edges(); ++e) {
        const Dart fwd = dart_of(static_cast<int>(e), false), bwd = dart_of(static_cast<int>(e), true);
        if (!edges.count(static_cast<int>(e))) {
            r.halves[static_cast<std::size_t>(fwd)] = {fwd};
            r.halves[static_cast<std::size_t>(bwd)] = {bwd};
            continue;
        }
        // The old index becomes the first half.
        const std::string base = x.edge_name(static_cast<int>(e));
        names[e] = unique(base + ".0");
        const int second = fresh(base + ".1");
        const Dart h0 = dart_of(static_cast<int>(e), false), h1 = dart_of(second, false);
        r.halves[static_cast<std::size_t>(fwd)] = {h0, h1};
        r.halves[static_cast<std::size_t>(bwd)] = {reverse(h1), reverse(h0)};
    }

    std::vector<std::vector<Dart>> out_faces;
    for (std::size_t f = 0; f < x.num_faces(); ++f) {
        std::vector<Dart> w;
        for (Dart d : x.face(f)) {
            const auto& h = r.halves[static_cast<std::size_t>(d)];
            w.insert(w.end(), h.begin(), h.end());
        }
        if (!faces.count(static_cast<int>(f))) {
            out_faces.push_back(std::move(w));
            continue;
        }
        const std::size_t k = w.size();
        std::vector<Dart> sp(k);
        auto& table = r.spoke[static_cast<int>(f)];
        for (std::size_t i = 0; i < k; ++i) {
            sp[i] = dart_of(fresh("c" + std::to_string(f) + "/" + std::to_string(i)), false);
            table[w[i]] = sp[i];
        }
        // Triangle i: tail(w_i) -> head(w_i) -> centre -> tail(w_i).
        for (std::size_t i = 0; i < k; ++i) out_faces.push_back({w[i], reverse(sp[(i + 1) % k]), sp[i]});
    }
    surface::BuildOptions opts;
    opts.allow_boundary = !x.closed();
    opts.allow_disconnected = true;
    r.surface = CombinatorialSurface::build(names, out_faces, opts);
    if (r.surface.euler() != x.euler()) throw InternalConsistencyError("tighten: refinement changed the Euler characteristic");
    return r;
}

struct Pair {
    CombinatorialSurface x;
    CellCurve l0, l1;
    std::vector<CellCurve> others;
};

std::vector<CellCurve> map_all(const Refinement& r, const std::vector<CellCurve>& cs) {
    std::vector<CellCurve> out;
    for (const auto& c : cs) out.push_back(r.map_curve(c));
    return out;
}

/// Index i with tail(c.darts[i]) == v.
std::size_t index_at(const CombinatorialSurface& x, const CellCurve& c, int v) {
    for (std::size_t i = 0; i < c.darts.size(); ++i)
        if (x.tail(c.darts[i]) == v) return i;
    throw InternalConsistencyError("tighten: vertex not on curve");
}

/// Reroute L1 around the far side of the bigon's L0 arc. Empty when the
/// faces along that side repeat and a finer cell structure is needed.
std::optional<Pair> remove_bigon(const Pair& p, const Bigon& b) {
    const CombinatorialSurface& x = p.x;
    const int vx = b.from, vy = b.to;
    std::vector<int> on_curve(x.num_edges(), 0);
    for (Dart d : p.l0.darts) on_curve[static_cast<std::size_t>(edge_of(d))] = 1;
    for (Dart d : p.l1.darts) on_curve[static_cast<std::size_t>(edge_of(d))] = 1;

    // L1 darts leaving x and y off the bigon.
    const Dart along_x = reverse(b.arc1.back()), along_y = b.arc1.front();
    auto other_l1 = [&](int v, Dart along) {
        const std::size_t i = index_at(x, p.l1, v);
        const std::size_t n = p.l1.darts.size();
        const Dart out = p.l1.darts[i], back = reverse(p.l1.darts[(i + n - 1) % n]);
        if (out == along) return back;
        if (back == along) return out;
        throw InternalConsistencyError("tighten: bigon arc does not leave the corner along L1");
    };
    const Dart e = other_l1(vx, along_x), f = other_l1(vy, along_y);

    std::vector<std::pair<Dart, Dart>> pivots;
    pivots.push_back({e, b.arc0.front()});
    for (std::size_t i = 1; i < b.arc0.size(); ++i) pivots.push_back({reverse(b.arc0[i - 1]), b.arc0[i]});
    pivots.push_back({reverse(b.arc0.back()), f});

    std::vector<int> faces{x.face_of(e)};
    std::vector<Dart> crossing;  // crossing[k] separates faces[k] and faces[k+1]; lies in faces[k+1]
    for (const auto& [start, stop] : pivots) {
        if (x.face_of(start) != faces.back()) throw InternalConsistencyError("tighten: far side is not a strip");
        for (Dart d = x.rotate(start); d != stop; d = x.rotate(d)) {
            if (d < 0) throw InternalConsistencyError("tighten: bigon side meets the boundary");
            if (on_curve[static_cast<std::size_t>(edge_of(d))]) throw InternalConsistencyError("tighten: curve inside the far sector");
            crossing.push_back(d);
            faces.push_back(x.face_of(d));
        }
    }
    if (std::set<int>(faces.begin(), faces.end()).size() != faces.size()) return std::nullopt;

    std::set<int> split{edge_of(e), edge_of(f)};
    for (Dart d : crossing) split.insert(edge_of(d));
    const Refinement r = refine(x, std::set<int>(faces.begin(), faces.end()), split);
    const CombinatorialSurface& y = r.surface;

    std::vector<Dart> path{reverse(r.to_midpoint(faces.front(), e))};
    for (std::size_t k = 0; k < crossing.size(); ++k) {
        path.push_back(r.to_midpoint(faces[k], reverse(crossing[k])));
        path.push_back(reverse(r.to_midpoint(faces[k + 1], crossing[k])));
    }
    path.push_back(r.to_midpoint(faces.back(), reverse(f)));

    const CellCurve old = r.map_curve(p.l1);
    const int me = y.head(r.halves[static_cast<std::size_t>(e)][0]);
    const int mf = y.head(r.halves[static_cast<std::size_t>(f)][0]);
    const std::size_t n = old.darts.size();
    const std::size_t pe = index_at(y, old, me), pf = index_at(y, old, mf);
    CellCurve l1{p.l1.name, {}};
    auto append_between = [&](std::size_t from, std::size_t to) {
        for (std::size_t i = from; i != to; i = (i + 1) % n) l1.darts.push_back(old.darts[i]);
    };
    const int yx = y.tail(r.halves[static_cast<std::size_t>(b.arc0.front())].front());
    if (y.head(old.darts[pe]) == yx) {
        l1.darts = path;
        if (me != mf) append_between(pf, pe);
    } else {
        if (me != mf) append_between(pe, pf);
        for (auto it = path.rbegin(); it != path.rend(); ++it) l1.darts.push_back(reverse(*it));
    }
    surface::validate_curve(y, l1);
    return Pair{y, r.map_curve(p.l0), std::move(l1), map_all(r, p.others)};
}

Pair subdivided(const Pair& p) {
    const auto sub = surface::subdivide_once(p.x);
    Pair out{sub.surface, sub.map_curve(p.l0), sub.map_curve(p.l1), {}};
    for (const auto& c : p.others) out.others.push_back(sub.map_curve(c));
    return out;
}

}  // namespace

TightenResult tighten_pair(const CombinatorialSurface& x, const CellCurve& l0, const CellCurve& l1, TightenOptions opts,
                           const std::vector<CellCurve>& others) {
    surface::validate_curve(x, l0);
    surface::validate_curve(x, l1);
    Pair cur{x, l0, l1, others};
    TightenResult res;
    for (int step = 0; step < opts.max_steps; ++step) {
        const auto bigons = find_bigons(cur.x, cur.l0, cur.l1);
        if (bigons.empty()) break;
        const std::size_t before = find_intersections(cur.x, cur.l0, cur.l1).size();
        auto next = remove_bigon(cur, bigons.front());
        if (!next) {
            cur = subdivided(cur);
            continue;
        }
        const std::size_t after = find_intersections(next->x, next->l0, next->l1).size();
        if (after + 2 != before) throw InternalConsistencyError("tighten: bigon removal did not drop two crossings");
        if (opts.self_floer && after == 0 && disjoint_isotopic(next->x, next->l0, next->l1)) {
            res.kept_pushoff = true;
            break;
        }
        cur = std::move(*next);
        ++res.bigons_removed;
    }
    res.surface = std::move(cur.x);
    res.l0 = std::move(cur.l0);
    res.l1 = std::move(cur.l1);
    res.carried = std::move(cur.others);
    return res;
}

}  // namespace dtwist::floer
