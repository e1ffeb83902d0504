#include "dtwist/surface/involution.hpp"

#include <cctype>

#include "dtwist/errors.hpp"

namespace dtwist::surface {

using gf2::BitMatrix;

CellCurve CellInvolution::apply(const CellCurve& c) const {
    CellCurve out{c.name, {}};
    for (Dart d : c.darts) out.darts.push_back((*this)(d));
    return out;
}

CellInvolution identity_involution(const CombinatorialSurface& x) {
    CellInvolution c{"id", std::vector<Dart>(x.num_darts())};
    for (std::size_t d = 0; d < x.num_darts(); ++d) c.dart_map[d] = static_cast<Dart>(d);
    return c;
}

CellInvolution involution_from_cycles(const CombinatorialSurface& x, const std::string& name, const std::string& text) {
    CellInvolution c = identity_involution(x);
    c.name = name;
    std::vector<char> assigned(x.num_darts(), 0);
    auto assign = [&](Dart from, Dart to, int col) {
        auto& slot = c.dart_map[static_cast<std::size_t>(from)];
        if (assigned[static_cast<std::size_t>(from)] && slot != to)
            throw ParseError(1, col, "dart " + x.dart_name(from) + " is assigned twice");
        slot = to;
        assigned[static_cast<std::size_t>(from)] = 1;
    };

    std::size_t i = 0;
    auto col = [&](std::size_t at) { return static_cast<int>(at) + 1; };
    while (i < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[i]))) {
            ++i;
            continue;
        }
        if (text[i] != '(') throw ParseError(1, col(i), "expected '('");
        ++i;
        std::vector<std::pair<Dart, int>> cycle;
        for (;;) {
            while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
            if (i >= text.size()) throw ParseError(1, col(i), "unterminated cycle");
            if (text[i] == ')') {
                ++i;
                break;
            }
            const std::size_t start = i;
            while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])) && text[i] != ')' &&
                   text[i] != '(')
                ++i;
            const std::string tok = text.substr(start, i - start);
            if (tok.empty()) throw ParseError(1, col(start), "unexpected '('");
            try {
                cycle.emplace_back(x.parse_dart(tok), col(start));
            } catch (const SurfaceError& e) {
                throw ParseError(1, col(start), e.what());
            }
        }
        if (cycle.empty()) continue;
        for (std::size_t k = 0; k < cycle.size(); ++k) {
            const auto [from, at] = cycle[k];
            const Dart to = cycle[(k + 1) % cycle.size()].first;
            assign(from, to, at);
            assign(reverse(from), reverse(to), at);
        }
    }
    return c;
}

std::string involution_cycles(const CombinatorialSurface& x, const CellInvolution& c) {
    std::vector<char> seen(x.num_darts(), 0);
    std::string out;
    for (std::size_t d0 = 0; d0 < x.num_darts(); ++d0) {
        if (seen[d0]) continue;
        std::vector<Dart> orbit;
        for (Dart d = static_cast<Dart>(d0); !seen[static_cast<std::size_t>(d)]; d = c(d)) {
            seen[static_cast<std::size_t>(d)] = 1;
            orbit.push_back(d);
        }
        for (Dart d : orbit) seen[static_cast<std::size_t>(reverse(d))] = 1;
        if (orbit.size() == 1 && c(orbit[0]) == orbit[0]) continue;
        if (!out.empty()) out += ' ';
        out += '(';
        for (std::size_t k = 0; k < orbit.size(); ++k) {
            if (k) out += ' ';
            out += x.dart_name(orbit[k]);
        }
        out += ')';
    }
    return out;
}

namespace {

/// Face g whose word is (d_0 .. d_{k-1}) mapped by `image` and read as
/// given (reversed = false) or backwards with each dart reversed.
int image_face(const CombinatorialSurface& x, const std::vector<Dart>& word, const CellInvolution& c, bool reversed) {
    const std::size_t k = word.size();
    auto target = [&](std::size_t t) {
        // Entry t of the expected word of the image face, starting at the image of d_0.
        if (!reversed) return c(word[t]);
        return reverse(c(word[(k - t) % k]));
    };
    const Dart first = target(0);
    const int g = x.face_of(first);
    if (g < 0) return -1;
    const auto& gw = x.face(static_cast<std::size_t>(g));
    if (gw.size() != k) return -1;
    const auto p = static_cast<std::size_t>(x.position_in_face(first));
    for (std::size_t t = 0; t < k; ++t)
        if (gw[(p + t) % k] != target(t)) return -1;
    return g;
}

}  // namespace

InvolutionCheck validate_involution(const CombinatorialSurface& x, const CellInvolution& c) {
    InvolutionCheck r;
    const std::size_t nd = x.num_darts();
    if (c.dart_map.size() != nd) {
        r.diagnostics.push_back("dart map has " + std::to_string(c.dart_map.size()) + " entries, expected " +
                                std::to_string(nd));
        return r;
    }
    bool bijective = true;
    std::vector<char> hit(nd, 0);
    for (Dart d : c.dart_map) {
        if (d < 0 || static_cast<std::size_t>(d) >= nd || hit[static_cast<std::size_t>(d)]) {
            bijective = false;
            break;
        }
        hit[static_cast<std::size_t>(d)] = 1;
    }
    if (!bijective) {
        r.diagnostics.push_back("dart map is not a permutation");
        return r;
    }

    r.order_two = true;
    for (std::size_t d = 0; d < nd; ++d) {
        if (c(c(static_cast<Dart>(d))) != static_cast<Dart>(d)) {
            r.order_two = false;
            // Report the order of the offending orbit.
            std::size_t order = 1;
            for (Dart e = c(static_cast<Dart>(d)); e != static_cast<Dart>(d); e = c(e)) ++order;
            r.diagnostics.push_back("not of order 2: dart " + x.dart_name(static_cast<Dart>(d)) + " has orbit of length " +
                                    std::to_string(order));
            break;
        }
        if (c(reverse(static_cast<Dart>(d))) != reverse(c(static_cast<Dart>(d)))) {
            r.order_two = false;
            r.diagnostics.push_back("dart map does not commute with reversal at " + x.dart_name(static_cast<Dart>(d)));
            break;
        }
    }

    bool vertices_ok = true;
    r.vertex_map.assign(x.num_vertices(), -1);
    for (std::size_t d = 0; d < nd; ++d) {
        auto& slot = r.vertex_map[static_cast<std::size_t>(x.tail(static_cast<Dart>(d)))];
        const int img = x.tail(c(static_cast<Dart>(d)));
        if (slot >= 0 && slot != img) {
            vertices_ok = false;
            r.diagnostics.push_back("incidence: the vertex map is not well defined at the tail of " +
                                    x.dart_name(static_cast<Dart>(d)));
            break;
        }
        slot = img;
    }

    std::vector<int> rev_map(x.num_faces(), -1), pres_map(x.num_faces(), -1);
    bool all_rev = true, all_pres = true;
    for (std::size_t f = 0; f < x.num_faces(); ++f) {
        rev_map[f] = image_face(x, x.face(f), c, true);
        pres_map[f] = image_face(x, x.face(f), c, false);
        all_rev = all_rev && rev_map[f] >= 0;
        all_pres = all_pres && pres_map[f] >= 0;
    }
    r.incidence = vertices_ok && (all_rev || all_pres);
    if (!(all_rev || all_pres)) r.diagnostics.push_back("incidence: some face does not map onto a face");
    r.orientation_reversing = r.incidence && all_rev;
    if (r.incidence && !all_rev) r.diagnostics.push_back("orientation: the map preserves the orientation");
    if (r.incidence) {
        r.face_map = all_rev ? rev_map : pres_map;
    } else {
        r.vertex_map.clear();
    }
    r.ok = r.order_two && r.incidence && r.orientation_reversing;
    return r;
}

InducedAction involution_induced_map(const CombinatorialSurface& x, const CellCurve& s, const CellInvolution& c) {
    const InvolutionCheck chk = validate_involution(x, c);
    if (!chk.ok) {
        std::string msg = "involution '" + c.name + "' is not a valid orientation-reversing involution:";
        for (const auto& d : chk.diagnostics) msg += " " + d + ";";
        throw InvolutionError(msg);
    }
    if (!same_loop(c.apply(s), s, false))
        throw InvolutionError("involution '" + c.name + "' does not preserve the curve '" + s.name + "'");

    InducedAction out;
    out.cut = cut_along(x, s);
    const CombinatorialSurface& y = out.cut.cut;
    std::vector<int> vmap(y.num_vertices(), -1), emap(y.num_edges(), -1);
    auto put = [](std::vector<int>& m, int at, int val) {
        auto& slot = m[static_cast<std::size_t>(at)];
        if (slot >= 0 && slot != val) throw InternalConsistencyError("cell map on the cut surface is ill defined");
        slot = val;
    };
    for (std::size_t f = 0; f < y.num_faces(); ++f) {
        const int g = chk.face_map[f];
        for (std::size_t i = 0; i < y.face(f).size(); ++i) {
            const Dart img = reverse(c(x.face(f)[i]));
            const auto j = static_cast<std::size_t>(x.position_in_face(img));
            const Dart here = y.face(f)[i];
            const Dart there = y.face(static_cast<std::size_t>(g))[j];
            put(vmap, y.tail(here), y.head(there));
            put(emap, edge_of(here), edge_of(there));
        }
    }
    auto pullback = [](const std::vector<int>& m) {
        BitMatrix p(m.size(), m.size());
        for (std::size_t i = 0; i < m.size(); ++i) p.set(i, static_cast<std::size_t>(m[i]), true);
        return p;
    };
    std::vector<int> fmap(chk.face_map.begin(), chk.face_map.end());

    out.cohomology = cellular_cohomology(y);
    out.cochain_map = gf2::make_chain_map(out.cohomology.cochains, out.cohomology.cochains,
                                          {{0, pullback(vmap)}, {1, pullback(emap)}, {2, pullback(fmap)}});
    out.matrices = gf2::induced_map(out.cochain_map, out.cohomology.homology, out.cohomology.homology);
    return out;
}

}  // namespace dtwist::surface
