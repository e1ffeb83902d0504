#include "dtwist/surface/surface.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "dtwist/errors.hpp"

namespace dtwist::surface {

namespace {

using Kind = SurfaceError::Kind;

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            auto& p = parent[static_cast<std::size_t>(x)];
            p = parent[static_cast<std::size_t>(p)];
            x = p;
        }
        return x;
    }
    void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream is(s);
    std::vector<std::string> out;
    for (std::string t; is >> t;) out.push_back(t);
    return out;
}

}  // namespace

CombinatorialSurface CombinatorialSurface::build(std::vector<std::string> edge_names,
                                                 std::vector<std::vector<Dart>> faces, BuildOptions opts) {
    CombinatorialSurface x;
    x.edge_names_ = std::move(edge_names);
    x.faces_ = std::move(faces);
    const std::size_t ne = x.edge_names_.size();
    const std::size_t nd = 2 * ne;
    for (std::size_t e = 0; e < ne; ++e) {
        if (!x.edge_index_.emplace(x.edge_names_[e], static_cast<int>(e)).second)
            throw SurfaceError(Kind::Other, "duplicate edge name '" + x.edge_names_[e] + "'");
    }

    x.face_of_.assign(nd, -1);
    x.pos_.assign(nd, -1);
    std::vector<int> uses(ne, 0);
    for (std::size_t f = 0; f < x.faces_.size(); ++f) {
        const auto& word = x.faces_[f];
        if (word.empty()) throw SurfaceError(Kind::Other, "face " + std::to_string(f) + " is empty");
        for (std::size_t i = 0; i < word.size(); ++i) {
            const Dart d = word[i];
            if (d < 0 || static_cast<std::size_t>(d) >= nd)
                throw SurfaceError(Kind::UnknownEdge, "face " + std::to_string(f) + " uses an unknown dart");
            const auto e = static_cast<std::size_t>(edge_of(d));
            if (++uses[e] > 2)
                throw SurfaceError(Kind::EdgeUsage, "edge '" + x.edge_names_[e] + "' is used more than twice");
            if (x.face_of_[static_cast<std::size_t>(d)] >= 0)
                throw SurfaceError(Kind::NonOrientable, "edge '" + x.edge_names_[e] +
                                                            "' is glued to itself with the same orientation");
            x.face_of_[static_cast<std::size_t>(d)] = static_cast<int>(f);
            x.pos_[static_cast<std::size_t>(d)] = static_cast<int>(i);
        }
    }
    for (std::size_t e = 0; e < ne; ++e) {
        if (uses[e] == 0) throw SurfaceError(Kind::EdgeUsage, "edge '" + x.edge_names_[e] + "' is not used by any face");
        if (uses[e] == 1 && !opts.allow_boundary)
            throw SurfaceError(Kind::EdgeUsage, "edge '" + x.edge_names_[e] + "' is used only once");
    }

    // Dart d stands for its tail; corners glue head(d_i) = tail(reverse d_i) to tail(d_{i+1}).
    UnionFind uf(nd);
    for (const auto& word : x.faces_)
        for (std::size_t i = 0; i < word.size(); ++i) uf.unite(reverse(word[i]), word[(i + 1) % word.size()]);
    std::vector<int> label(nd, -1);
    x.tail_.assign(nd, -1);
    int nv = 0;
    for (std::size_t d = 0; d < nd; ++d) {
        const int r = uf.find(static_cast<int>(d));
        if (label[static_cast<std::size_t>(r)] < 0) label[static_cast<std::size_t>(r)] = nv++;
        x.tail_[d] = label[static_cast<std::size_t>(r)];
    }
    x.num_vertices_ = static_cast<std::size_t>(nv);

    std::size_t ncomp = 0;
    x.face_components(&ncomp);
    if (ncomp > 1 && !opts.allow_disconnected)
        throw SurfaceError(Kind::Disconnected, "surface has " + std::to_string(ncomp) + " connected components");

    // Each vertex star must be a single fan (a disk or half-disk neighbourhood).
    std::vector<std::vector<Dart>> at(x.num_vertices_);
    for (std::size_t d = 0; d < nd; ++d) at[static_cast<std::size_t>(x.tail_[d])].push_back(static_cast<Dart>(d));
    x.star_.assign(x.num_vertices_, {});
    for (std::size_t v = 0; v < x.num_vertices_; ++v) {
        Dart start = at[v].front();
        for (Dart d : at[v]) {
            if (x.face_of(reverse(d)) < 0) {
                start = d;
                break;
            }
        }
        std::vector<Dart> fan{start};
        for (Dart d = x.rotate(start); d >= 0 && d != start; d = x.rotate(d)) fan.push_back(d);
        if (fan.size() != at[v].size())
            throw SurfaceError(Kind::Other, "vertex " + std::to_string(v) + " is not a manifold point (" +
                                                std::to_string(at[v].size()) + " edge ends, fan of " +
                                                std::to_string(fan.size()) + ")");
        x.star_[v] = std::move(fan);
    }
    return x;
}

CombinatorialSurface CombinatorialSurface::from_words(const std::vector<std::string>& words, BuildOptions opts) {
    std::vector<std::string> names;
    std::map<std::string, int> index;
    std::vector<std::vector<Dart>> faces;
    for (const auto& w : words) {
        std::vector<Dart> face;
        for (auto tok : split_ws(w)) {
            bool rev = false;
            if (!tok.empty() && tok.back() == '\'') {
                rev = true;
                tok.pop_back();
            }
            if (tok.empty()) throw SurfaceError(Kind::UnknownEdge, "empty edge symbol");
            auto [it, fresh] = index.emplace(tok, static_cast<int>(names.size()));
            if (fresh) names.push_back(tok);
            face.push_back(dart_of(it->second, rev));
        }
        faces.push_back(std::move(face));
    }
    return build(std::move(names), std::move(faces), opts);
}

long CombinatorialSurface::euler() const {
    return static_cast<long>(num_vertices_) - static_cast<long>(num_edges()) + static_cast<long>(num_faces());
}

bool CombinatorialSurface::closed() const {
    return std::none_of(face_of_.begin(), face_of_.end(), [](int f) { return f < 0; });
}

int CombinatorialSurface::genus() const { return static_cast<int>((2 - euler()) / 2); }

std::size_t CombinatorialSurface::num_boundary_components() const {
    // A boundary dart with the hole on its left continues at the boundary
    // dart leaving its head.
    std::vector<Dart> out_of(num_vertices_, -1);
    for (std::size_t d = 0; d < num_darts(); ++d)
        if (face_of_[d] < 0) out_of[static_cast<std::size_t>(tail_[d])] = static_cast<Dart>(d);
    std::vector<char> seen(num_darts(), 0);
    std::size_t count = 0;
    for (std::size_t d = 0; d < num_darts(); ++d) {
        if (face_of_[d] >= 0 || seen[d]) continue;
        ++count;
        for (Dart b = static_cast<Dart>(d); b >= 0 && !seen[static_cast<std::size_t>(b)];
             b = out_of[static_cast<std::size_t>(head(b))])
            seen[static_cast<std::size_t>(b)] = 1;
    }
    return count;
}

std::optional<int> CombinatorialSurface::find_edge(const std::string& name) const {
    auto it = edge_index_.find(name);
    if (it == edge_index_.end()) return std::nullopt;
    return it->second;
}

std::string CombinatorialSurface::dart_name(Dart d) const {
    return edge_name(edge_of(d)) + (is_reversed(d) ? "'" : "");
}

Dart CombinatorialSurface::parse_dart(const std::string& token) const {
    std::string t = token;
    bool rev = false;
    if (!t.empty() && t.back() == '\'') {
        rev = true;
        t.pop_back();
    }
    auto e = find_edge(t);
    if (!e) throw SurfaceError(Kind::UnknownEdge, "unknown edge '" + t + "'");
    return dart_of(*e, rev);
}

Dart CombinatorialSurface::next(Dart d) const {
    const int f = face_of(d);
    if (f < 0) return -1;
    const auto& w = faces_[static_cast<std::size_t>(f)];
    return w[(static_cast<std::size_t>(pos_[static_cast<std::size_t>(d)]) + 1) % w.size()];
}

Dart CombinatorialSurface::prev(Dart d) const {
    const int f = face_of(d);
    if (f < 0) return -1;
    const auto& w = faces_[static_cast<std::size_t>(f)];
    return w[(static_cast<std::size_t>(pos_[static_cast<std::size_t>(d)]) + w.size() - 1) % w.size()];
}

Dart CombinatorialSurface::rotate(Dart d) const {
    const Dart p = prev(d);
    return p < 0 ? -1 : reverse(p);
}

std::vector<Dart> CombinatorialSurface::darts_at(int v) const { return star_.at(static_cast<std::size_t>(v)); }

bool CombinatorialSurface::is_boundary_edge(int e) const {
    return face_of(dart_of(e, false)) < 0 || face_of(dart_of(e, true)) < 0;
}

bool CombinatorialSurface::is_boundary_vertex(int v) const {
    for (Dart d : star_.at(static_cast<std::size_t>(v)))
        if (face_of(d) < 0) return true;
    return false;
}

std::vector<int> CombinatorialSurface::face_components(std::size_t* count) const {
    UnionFind uf(faces_.size());
    for (std::size_t e = 0; e < num_edges(); ++e) {
        const int a = face_of_[2 * e], b = face_of_[2 * e + 1];
        if (a >= 0 && b >= 0) uf.unite(a, b);
    }
    std::vector<int> comp(faces_.size(), -1);
    std::map<int, int> label;
    for (std::size_t f = 0; f < faces_.size(); ++f) {
        auto [it, fresh] = label.emplace(uf.find(static_cast<int>(f)), static_cast<int>(label.size()));
        comp[f] = it->second;
    }
    if (count) *count = label.size();
    return comp;
}

std::vector<int> CombinatorialSurface::vertex_components(std::size_t* count) const {
    const auto fc = face_components(count);
    std::vector<int> out(num_vertices_, -1);
    for (std::size_t d = 0; d < num_darts(); ++d) {
        int f = face_of_[d];
        if (f < 0) f = face_of_[d ^ 1];
        out[static_cast<std::size_t>(tail_[d])] = fc[static_cast<std::size_t>(f)];
    }
    return out;
}

CellCurve CellCurve::reversed() const {
    CellCurve r{name, {}};
    for (auto it = darts.rbegin(); it != darts.rend(); ++it) r.darts.push_back(reverse(*it));
    return r;
}

std::vector<int> CellCurve::vertices(const CombinatorialSurface& x) const {
    std::vector<int> out;
    out.reserve(darts.size());
    for (Dart d : darts) out.push_back(x.tail(d));
    return out;
}

bool CellCurve::uses_edge(int e) const {
    return std::any_of(darts.begin(), darts.end(), [e](Dart d) { return edge_of(d) == e; });
}

void validate_curve(const CombinatorialSurface& x, const CellCurve& c) {
    const std::string who = c.name.empty() ? std::string("curve") : "curve '" + c.name + "'";
    if (c.darts.empty()) throw CurveError(who + " is empty");
    std::set<int> edges, verts;
    for (std::size_t i = 0; i < c.darts.size(); ++i) {
        const Dart d = c.darts[i];
        if (d < 0 || static_cast<std::size_t>(d) >= x.num_darts()) throw CurveError(who + " uses an unknown dart");
        const Dart n = c.darts[(i + 1) % c.darts.size()];
        if (x.head(d) != x.tail(n))
            throw CurveError(who + " is not closed: " + x.dart_name(d) + " does not end where " + x.dart_name(n) +
                             " starts");
        if (!edges.insert(edge_of(d)).second) throw CurveError(who + " repeats edge " + x.edge_name(edge_of(d)));
        if (!verts.insert(x.tail(d)).second) throw CurveError(who + " is not embedded: it revisits a vertex");
    }
}

CellCurve curve_from_words(const CombinatorialSurface& x, const std::string& name, const std::string& word) {
    CellCurve c{name, {}};
    for (const auto& tok : split_ws(word)) c.darts.push_back(x.parse_dart(tok));
    validate_curve(x, c);
    return c;
}

std::string curve_word(const CombinatorialSurface& x, const CellCurve& c) {
    std::string out;
    for (Dart d : c.darts) {
        if (!out.empty()) out += ' ';
        out += x.dart_name(d);
    }
    return out;
}

bool same_loop(const CellCurve& a, const CellCurve& b, bool oriented) {
    auto rotated_equal = [](const std::vector<Dart>& p, const std::vector<Dart>& q) {
        if (p.size() != q.size()) return false;
        if (p.empty()) return true;
        for (std::size_t s = 0; s < q.size(); ++s) {
            bool ok = true;
            for (std::size_t i = 0; i < p.size() && ok; ++i) ok = p[i] == q[(i + s) % q.size()];
            if (ok) return true;
        }
        return false;
    };
    if (rotated_equal(a.darts, b.darts)) return true;
    return !oriented && rotated_equal(a.darts, b.reversed().darts);
}

}  // namespace dtwist::surface
