#include "dtwist/floer/twist.hpp"

#include <cstdlib>
#include <functional>

#include "dtwist/errors.hpp"
#include "dtwist/surface/cut.hpp"
#include "dtwist/surface/subdivide.hpp"

namespace dtwist::floer {

using surface::Dart;
using surface::dart_of;
using surface::edge_of;
using surface::reverse;

namespace {

/**
 * X cut along S with a grid annulus glued in. Column j sits over the tail
 * of S's j-th dart; row 0 is the right side of S and row h the left side.
 * `diag` splits every square along (j,r)-(j+1,r+1) when +1, along
 * (j+1,r)-(j,r+1) when -1, and not at all when 0.
 */
class Annulus {
public:
    Annulus(const CombinatorialSurface& x, const CellCurve& s, int h, int diag) : x_(x), s_(s), h_(h), diag_(diag) {
        surface::validate_curve(x, s);
        m_ = static_cast<int>(s.darts.size());
        cut_ = surface::cut_along(x, s);
        names_ = cut_.cut.edge_names();
        prefix_ = fresh_prefix();
        const int m = m_;
        hid_.assign(static_cast<std::size_t>(m * (h + 1)), -1);
        vid_.assign(static_cast<std::size_t>(m * h), -1);
        did_.assign(static_cast<std::size_t>(m * h), -1);
        for (int j = 0; j < m; ++j) {
            hid_[idx_h(j, 0)] = cut_.right_copy[static_cast<std::size_t>(j)];
            hid_[idx_h(j, h)] = cut_.left_copy[static_cast<std::size_t>(j)];
            for (int r = 1; r < h; ++r) hid_[idx_h(j, r)] = dart_of(add_edge("h", j, r), false);
            for (int r = 0; r < h; ++r) vid_[idx_v(j, r)] = dart_of(add_edge("v", j, r), false);
            if (diag_ != 0)
                for (int r = 0; r < h; ++r) did_[idx_v(j, r)] = dart_of(add_edge("d", j, r), false);
        }
        std::vector<std::vector<Dart>> faces = cut_.cut.faces();
        for (int r = 0; r < h; ++r) {
            for (int j = 0; j < m; ++j) {
                const Dart bottom = H(j, r), right = V(j + 1, r), top = reverse(H(j, r + 1)), left = reverse(V(j, r));
                if (diag_ == 0) {
                    faces.push_back({bottom, right, top, left});
                } else if (diag_ > 0) {
                    faces.push_back({bottom, right, reverse(D(j, r))});
                    faces.push_back({D(j, r), top, left});
                } else {
                    faces.push_back({bottom, D(j, r), left});
                    faces.push_back({right, top, reverse(D(j, r))});
                }
            }
        }
        result_ = CombinatorialSurface::build(names_, faces);
        if (result_.euler() != x.euler()) throw InternalConsistencyError("annulus insertion changed the Euler characteristic");
    }

    const CombinatorialSurface& surface() const { return result_; }
    int columns() const { return m_; }
    int rows() const { return h_; }

    Dart H(int j, int r) const { return hid_[idx_h(mod(j), r)]; }
    Dart V(int j, int r) const { return vid_[idx_v(mod(j), r)]; }
    /// Diagonal in square (j, r), oriented upwards.
    Dart D(int j, int r) const { return did_[idx_v(mod(j), r)]; }
    /// Straight path from row 0 to row h at column j.
    std::vector<Dart> vertical(int j) const {
        std::vector<Dart> p;
        for (int r = 0; r < h_; ++r) p.push_back(V(j, r));
        return p;
    }

    std::vector<Dart> row(int r) const {
        std::vector<Dart> p;
        for (int j = 0; j < m_; ++j) p.push_back(H(j, r));
        return p;
    }

    /**
     * Rewrite a curve of X on the new surface. At each crossing with S the
     * path produced by `upward(column)` (row 0 to row h) is inserted, reversed
     * when the curve crosses from the left side to the right side.
     */
    CellCurve carry(const CellCurve& c, const std::function<std::vector<Dart>(int)>& upward) const {
        if (same_loop(c, s_, false)) throw CurveError("carry: use the core for S itself");
        std::vector<int> column_of(x_.num_vertices(), -1);
        for (int j = 0; j < m_; ++j) column_of[static_cast<std::size_t>(x_.tail(s_.darts[static_cast<std::size_t>(j)]))] = j;
        CellCurve out{c.name, {}};
        const std::size_t n = c.darts.size();
        for (std::size_t i = 0; i < n; ++i) {
            const Dart d = c.darts[i];
            if (s_.uses_edge(edge_of(d)))
                throw TransversalityError("curve '" + c.name + "' runs along '" + s_.name + "'; subdivide or perturb");
            // Non-curve edges keep their index through the cut and the gluing.
            out.darts.push_back(d);
            const int col = column_of[static_cast<std::size_t>(x_.head(d))];
            if (col < 0) continue;
            const Dart nd = c.darts[(i + 1) % n];
            const int arrive = result_.head(d), leave = result_.tail(nd);
            const int bottom = node(col, 0), top = node(col, h_);
            std::vector<Dart> path = upward(col);
            if (arrive == top && leave == bottom) {
                std::vector<Dart> down;
                for (auto it = path.rbegin(); it != path.rend(); ++it) down.push_back(reverse(*it));
                path = std::move(down);
            } else if (arrive != bottom || leave != top) {
                throw TransversalityError("curve '" + c.name + "' touches '" + s_.name + "' without crossing it");
            }
            out.darts.insert(out.darts.end(), path.begin(), path.end());
        }
        surface::validate_curve(result_, out);
        return out;
    }

private:
    int mod(int j) const { return ((j % m_) + m_) % m_; }
    std::size_t idx_h(int j, int r) const { return static_cast<std::size_t>(r * m_ + j); }
    std::size_t idx_v(int j, int r) const { return static_cast<std::size_t>(r * m_ + j); }
    int node(int j, int r) const { return r < h_ ? result_.tail(V(j, r)) : result_.head(V(j, h_ - 1)); }

    std::string fresh_prefix() const {
        for (int i = 1;; ++i) {
            const std::string p = "A" + std::to_string(i) + ".";
            bool clash = false;
            for (const auto& nm : names_)
                if (nm.rfind(p, 0) == 0) clash = true;
            if (!clash) return p;
        }
    }

    int add_edge(const char* kind, int j, int r) {
        names_.push_back(prefix_ + kind + std::to_string(j) + "_" + std::to_string(r));
        return static_cast<int>(names_.size()) - 1;
    }

    const CombinatorialSurface& x_;
    CellCurve s_;
    int h_, diag_, m_ = 0;
    surface::CutResult cut_;
    std::vector<std::string> names_;
    std::string prefix_;
    std::vector<Dart> hid_, vid_, did_;
    CombinatorialSurface result_;
};

std::vector<CellCurve> carry_all(const Annulus& a, const CellCurve& s, const CellCurve& core,
                                 const std::vector<CellCurve>& others) {
    std::vector<CellCurve> out;
    for (const auto& c : others) {
        if (same_loop(c, s, true)) {
            out.push_back(CellCurve{c.name, core.darts});
        } else if (same_loop(c, s, false)) {
            out.push_back(CellCurve{c.name, core.reversed().darts});
        } else {
            out.push_back(a.carry(c, [&](int j) { return a.vertical(j); }));
        }
    }
    return out;
}

}  // namespace

TwistResult combinatorial_dehn_twist(const CombinatorialSurface& x, const CellCurve& n, const CellCurve& s, int k,
                                     const std::vector<CellCurve>& others) {
    if (k == 0) return {x, n, s, others};
    const int m = static_cast<int>(s.darts.size());
    const int turns = std::abs(k) * m;
    const Annulus a(x, s, turns + 2, k > 0 ? 1 : -1);
    TwistResult out;
    out.surface = a.surface();
    out.core = CellCurve{s.name, a.row(1)};
    out.twisted = a.carry(n, [&](int col) {
        std::vector<Dart> p{a.V(col, 0)};
        for (int t = 0; t < turns; ++t) p.push_back(k > 0 ? a.D(col + t, 1 + t) : a.D(col - 1 - t, 1 + t));
        p.push_back(a.V(col, turns + 1));
        return p;
    });
    out.carried = carry_all(a, s, out.core, others);
    return out;
}

PushoffResult pushoff_model(const CombinatorialSurface& x, const CellCurve& l, const std::vector<CellCurve>& others) {
    // The pushoff changes rows at two columns, which must be off the other curves.
    std::vector<int> free;
    for (std::size_t j = 0; j < l.darts.size(); ++j) {
        const int v = x.tail(l.darts[j]);
        bool busy = false;
        for (const auto& c : others)
            for (int w : c.vertices(x)) busy = busy || w == v;
        if (!busy) free.push_back(static_cast<int>(j));
    }
    if (free.size() < 2) {
        const auto sub = surface::subdivide_once(x);
        std::vector<CellCurve> moved;
        for (const auto& c : others) moved.push_back(sub.map_curve(c));
        return pushoff_model(sub.surface, sub.map_curve(l), moved);
    }
    const Annulus a(x, l, 4, 0);
    const int m = a.columns();
    const int ja = free.front(), jb = free[free.size() / 2];
    PushoffResult out;
    out.surface = a.surface();
    out.curve = CellCurve{l.name, a.row(2)};
    CellCurve p{l.name + "'", {}};
    for (int j = ja; j < jb; ++j) p.darts.push_back(a.H(j, 1));
    p.darts.push_back(a.V(jb, 1));
    p.darts.push_back(a.V(jb, 2));
    for (int j = jb; j < ja + m; ++j) p.darts.push_back(a.H(j % m, 3));
    p.darts.push_back(reverse(a.V(ja, 2)));
    p.darts.push_back(reverse(a.V(ja, 1)));
    surface::validate_curve(out.surface, p);
    out.pushoff = std::move(p);
    out.carried = carry_all(a, l, out.curve, others);
    return out;
}

}  // namespace dtwist::floer
