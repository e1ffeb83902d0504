#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "doctest.h"
#include "dtwist/errors.hpp"
#include "dtwist/surface/cohomology.hpp"
#include "dtwist/surface/cut.hpp"
#include "dtwist/surface/format.hpp"
#include "dtwist/surface/generators.hpp"
#include "dtwist/surface/involution.hpp"
#include "dtwist/surface/subdivide.hpp"

using namespace dtwist::surface;
using dtwist::SurfaceError;

namespace {

// Betti numbers of a compact surface from counts alone: b0 = components,
// b2 = closed components, b1 from the Euler characteristic.
std::array<long, 3> betti_oracle(const CombinatorialSurface& x) {
    std::size_t comps = 0;
    const auto fc = x.face_components(&comps);
    std::vector<char> has_boundary(comps, 0);
    for (std::size_t d = 0; d < x.num_darts(); ++d)
        if (x.face_of(static_cast<Dart>(d)) < 0) has_boundary[static_cast<std::size_t>(fc[static_cast<std::size_t>(x.face_of(static_cast<Dart>(d ^ 1)))])] = 1;
    const long b0 = static_cast<long>(comps);
    const long b2 = static_cast<long>(std::count(has_boundary.begin(), has_boundary.end(), 0));
    return {b0, b0 + b2 - x.euler(), b2};
}

std::array<long, 3> ranks(const CellularCohomology& h) {
    return {static_cast<long>(h.homology.ranks.at(0)), static_cast<long>(h.homology.ranks.at(1)),
            static_cast<long>(h.homology.ranks.at(2))};
}

struct Corpus {
    DoubledSurface d;
    CellCurve s;
};

Corpus genus2_double() {
    Corpus c{double_surface(grid_surface(3, 3, {{1, 1}}, true)), {}};
    c.s = curve_from_words(c.d.surface, "S", "h1_1 v2_1 h1_2' v1_1'");
    return c;
}

Corpus torus_double() {
    Corpus c{double_surface(grid_surface(3, 3, {{1, 1}}, false)), {}};
    c.s = curve_from_words(c.d.surface, "S", "t.h0_1 b.h0_1'");
    return c;
}

Corpus genus3_double() {
    Corpus c{double_surface(grid_surface(8, 3, {{1, 1}, {4, 1}, {6, 1}}, false)), {}};
    c.s = curve_from_words(c.d.surface, "S", "t.v3_0 t.v3_1 t.v3_2 b.v3_2' b.v3_1' b.v3_0'");
    return c;
}

// Image of each component under the face permutation, read directly off the cells.
std::vector<int> component_images(const CutResult& cut, const InvolutionCheck& chk) {
    std::vector<int> img(cut.components.size(), -1);
    for (std::size_t f = 0; f < chk.face_map.size(); ++f)
        img[static_cast<std::size_t>(cut.face_component[f])] = cut.face_component[static_cast<std::size_t>(chk.face_map[f])];
    return img;
}

}  // namespace

TEST_CASE("polygon words") {
    const auto g2 = CombinatorialSurface::from_words({"a b a' b' c d c' d'"});
    CHECK(g2.num_vertices() == 1);
    CHECK(g2.num_edges() == 4);
    CHECK(g2.num_faces() == 1);
    CHECK(g2.euler() == -2);
    CHECK(g2.genus() == 2);
    CHECK(CombinatorialSurface::from_words({"a b a' b'"}).genus() == 1);
}

TEST_CASE("invalid gluings have distinct diagnostics") {
    auto kind_of = [](const std::vector<std::string>& w) {
        try {
            CombinatorialSurface::from_words(w);
        } catch (const SurfaceError& e) {
            return e.kind();
        }
        FAIL("accepted");
        return SurfaceError::Kind::Other;
    };
    CHECK(kind_of({"a a b b'"}) == SurfaceError::Kind::NonOrientable);
    CHECK(kind_of({"a b a' b' a"}) == SurfaceError::Kind::EdgeUsage);
    CHECK(kind_of({"a b a'"}) == SurfaceError::Kind::EdgeUsage);
    CHECK(kind_of({"a b a' b'", "c d c' d'"}) == SurfaceError::Kind::Disconnected);
}

TEST_CASE("cohomology of closed surfaces up to genus 5") {
    for (int g = 1; g <= 5; ++g) {
        const auto x = polygon_surface(g);
        CHECK(x.genus() == g);
        const auto h = cellular_cohomology(x);
        CHECK(ranks(h) == std::array<long, 3>{1, 2L * g, 1});
        const auto y = subdivide(x, 1);
        CHECK(ranks(cellular_cohomology(y)) == std::array<long, 3>{1, 2L * g, 1});
    }
    for (const auto& c : {genus2_double(), torus_double(), genus3_double()}) {
        const auto& x = c.d.surface;
        CHECK(x.closed());
        CHECK(ranks(cellular_cohomology(x)) == betti_oracle(x));
    }
    CHECK(genus2_double().d.surface.genus() == 2);
    CHECK(torus_double().d.surface.genus() == 1);
    CHECK(genus3_double().d.surface.genus() == 3);
}

TEST_CASE("subdivision keeps chi and genus") {
    const auto g2 = polygon_surface(2);
    CHECK(subdivide(g2, 1).euler() == -2);
    const auto t = polygon_surface(1);
    const auto t1 = subdivide(t, 1), t2 = subdivide(t, 2);
    CHECK(t2.genus() == 1);
    CHECK(t2.num_faces() > t1.num_faces());
    CHECK(t2.num_vertices() + t2.num_edges() > t1.num_vertices() + t1.num_edges());
    const auto same = subdivide(g2, 0);
    CHECK(same.faces() == g2.faces());
    CHECK(same.edge_names() == g2.edge_names());
}

TEST_CASE("subdivision carries curves and involutions") {
    const auto c = genus2_double();
    const auto sub = subdivide_once(c.d.surface);
    const auto s2 = sub.map_curve(c.s);
    CHECK_NOTHROW(validate_curve(sub.surface, s2));
    const auto inv = sub.map_involution(c.d.surface, c.d.reflection);
    CHECK(validate_involution(sub.surface, inv).ok);
    CHECK(same_loop(inv.apply(s2), s2, false));
}

TEST_CASE("cut along a separating curve on genus 2") {
    const auto c = genus2_double();
    const auto cut = cut_along(c.d.surface, c.s);
    REQUIRE(cut.components.size() == 2);
    for (const auto& comp : cut.components) {
        CHECK(comp.euler() == -1);
        CHECK(comp.num_boundary_components() == 1);
    }
    const auto h = cellular_cohomology(cut.cut);
    CHECK(h.homology.ranks.at(0) == 2);
    CHECK(h.homology.ranks.at(1) == 4);
    CHECK(ranks(h) == betti_oracle(cut.cut));
}

TEST_CASE("cut torus is one annulus") {
    const auto c = torus_double();
    const auto cut = cut_along(c.d.surface, c.s);
    REQUIRE(cut.components.size() == 1);
    CHECK(cut.components[0].euler() == 0);
    CHECK(cut.components[0].num_boundary_components() == 2);
    CHECK(cellular_cohomology(cut.cut).homology.ranks.at(0) == 1);
}

TEST_CASE("cut genus 3 into genus 1 and genus 2 pieces") {
    const auto c = genus3_double();
    const auto cut = cut_along(c.d.surface, c.s);
    REQUIRE(cut.components.size() == 2);
    std::vector<long> chis;
    long sum = 0;
    for (const auto& comp : cut.components) {
        chis.push_back(comp.euler());
        sum += comp.euler();
    }
    std::sort(chis.begin(), chis.end());
    CHECK(chis == std::vector<long>{-3, -1});
    CHECK(sum == c.d.surface.euler());
}

TEST_CASE("cut Euler characteristics add up along every grid column") {
    const auto c = genus3_double();
    for (int x = 1; x < 8; ++x) {
        std::string w;
        for (int j = 0; j < 3; ++j) w += "t." + grid_edge('v', x, j) + " ";
        for (int j = 2; j >= 0; --j) w += "b." + grid_edge('v', x, j) + "' ";
        CellCurve s;
        try {
            s = curve_from_words(c.d.surface, "col", w);
        } catch (const dtwist::Error&) {
            continue;  // column runs along a hole
        }
        const auto cut = cut_along(c.d.surface, s);
        long sum = 0;
        for (const auto& comp : cut.components) sum += comp.euler();
        CHECK(sum == c.d.surface.euler());
    }
}

TEST_CASE("non-embedded curves are rejected") {
    const auto t = CombinatorialSurface::from_words({"a b a' b'"});
    CHECK_THROWS_AS(curve_from_words(t, "x", "a b"), dtwist::CurveError);
    const auto g = genus2_double();
    CHECK_THROWS_AS(curve_from_words(g.d.surface, "x", "h1_1 v2_1"), dtwist::CurveError);
}

TEST_CASE("validate involutions") {
    const auto g2 = genus2_double();
    CHECK(validate_involution(g2.d.surface, g2.d.reflection).ok);
    const auto id = validate_involution(g2.d.surface, identity_involution(g2.d.surface));
    CHECK_FALSE(id.ok);
    CHECK(id.order_two);
    CHECK(id.incidence);
    CHECK_FALSE(id.orientation_reversing);

    const auto t = CombinatorialSurface::from_words({"a b a' b'"});
    const auto rot = involution_from_cycles(t, "rot", "(a b a' b')");
    const auto r = validate_involution(t, rot);
    CHECK_FALSE(r.ok);
    CHECK_FALSE(r.order_two);
    CHECK(r.diagnostics.front().find("length 4") != std::string::npos);
}

TEST_CASE("the octagon has a reflection swapping its handles") {
    const auto x = polygon_surface(2);
    // All 384 signed edge permutations; keep the valid ones swapping {a1,b1} and {a2,b2}.
    std::vector<int> perm{0, 1, 2, 3};
    int swapping = 0;
    do {
        for (int signs = 0; signs < 16; ++signs) {
            CellInvolution c{"c", std::vector<Dart>(8)};
            for (int e = 0; e < 4; ++e) {
                const bool flip = (signs >> e) & 1;
                c.dart_map[static_cast<std::size_t>(dart_of(e, false))] = dart_of(perm[static_cast<std::size_t>(e)], flip);
                c.dart_map[static_cast<std::size_t>(dart_of(e, true))] = dart_of(perm[static_cast<std::size_t>(e)], !flip);
            }
            if (!validate_involution(x, c).ok) continue;
            const auto a1 = *x.find_edge("a1"), b1 = *x.find_edge("b1");
            const auto to = [&](int e) { return x.edge_name(edge_of(c(dart_of(e, false)))); };
            if (to(a1).back() == '2' && to(b1).back() == '2') ++swapping;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    CHECK(swapping == 1);
    const auto shipped = involution_from_cycles(x, "c", "(a1 b2) (b1 a2)");
    CHECK(validate_involution(x, shipped).ok);
}

TEST_CASE("induced maps on the cut surface") {
    SUBCASE("genus 2 reflection swaps the components") {
        const auto c = genus2_double();
        const auto act = involution_induced_map(c.d.surface, c.s, c.d.reflection);
        CHECK(act.matrices.at(0).to_string() == "((0,1),(1,0))");
        const auto chk = validate_involution(c.d.surface, c.d.reflection);
        const auto img = component_images(act.cut, chk);
        CHECK(img == std::vector<int>{1, 0});
        CHECK(act.matrices.at(1).rows() == 4);
        CHECK((act.matrices.at(1) * act.matrices.at(1)).is_identity());
    }
    SUBCASE("torus") {
        const auto c = torus_double();
        const auto act = involution_induced_map(c.d.surface, c.s, c.d.reflection);
        CHECK(act.matrices.at(0).to_string() == "((1))");
    }
    SUBCASE("genus 3 side-preserving reflection") {
        const auto c = genus3_double();
        const auto act = involution_induced_map(c.d.surface, c.s, c.d.reflection);
        const auto img = component_images(act.cut, validate_involution(c.d.surface, c.d.reflection));
        const bool preserved = img == std::vector<int>{0, 1};
        CHECK(preserved);
        CHECK(act.matrices.at(0).is_identity() == preserved);
        for (const auto& [k, m] : act.matrices) CHECK((m * m).is_identity());
    }
    SUBCASE("curve not preserved") {
        const auto c = genus2_double();
        const auto alpha = curve_from_words(c.d.surface, "a", "t.h0_0 t.h1_0 t.h2_0");
        CHECK_THROWS_AS(involution_induced_map(c.d.surface, alpha, c.d.reflection), dtwist::InvolutionError);
    }
}

TEST_CASE("degree-0 matrices are permutations on subdivided corpora") {
    for (auto c : {genus2_double(), torus_double(), genus3_double()}) {
        auto sub = subdivide_once(c.d.surface);
        const auto s = sub.map_curve(c.s);
        const auto inv = sub.map_involution(c.d.surface, c.d.reflection);
        const auto act = involution_induced_map(sub.surface, s, inv);
        const auto& m0 = act.matrices.at(0);
        for (std::size_t i = 0; i < m0.rows(); ++i) CHECK(m0.row(i) == m0.row(i));
        std::size_t ones = m0.count_ones();
        CHECK(ones == m0.rows());
        CHECK(m0.rank() == m0.rows());
        for (const auto& [k, m] : act.matrices) CHECK((m * m).is_identity());
    }
}

TEST_CASE("surface file round trip and errors") {
    const std::string text = R"(# torus
surface t
faces:
  a b a' b'
curves:
  m = a
  l = b
involutions:
  c = (a) (b b')
scenario:
  S = m
)";
    const auto f = parse_surface_file(text);
    CHECK(f.name == "t");
    CHECK(f.surface.genus() == 1);
    CHECK(f.curve("l").darts.size() == 1);
    CHECK(f.scenario_value("S") == "m");
    const auto again = parse_surface_file(format_surface_file(f));
    CHECK(again.surface.faces() == f.surface.faces());
    CHECK(again.curves.size() == 2);
    CHECK(again.involution("c").dart_map == f.involution("c").dart_map);

    try {
        parse_surface_file("faces:\n  a b a' b'\ncurves:\n  m = a zz\n");
        FAIL("accepted unknown edge");
    } catch (const dtwist::ParseError& e) {
        CHECK(e.line() == 4);
        CHECK(e.column() == 9);
    }
    try {
        parse_surface_file("faces:\n  a b a' b'\ninvolutions:\n  c = (a b) (a b')\n");
        FAIL("accepted double assignment");
    } catch (const dtwist::ParseError& e) {
        CHECK(e.line() == 4);
        CHECK(e.column() == 14);
    }
    CHECK_THROWS_AS(parse_surface_file("faces:\n  a a b b'\n"), SurfaceError);
    CHECK_THROWS_AS(parse_surface_file("stuff:\n"), dtwist::ParseError);
}
