#include <cstdlib>
#include <numeric>
#include <random>

#include "doctest.h"
#include "dtwist/errors.hpp"
#include "dtwist/floer/torus.hpp"
#include "dtwist/pipeline/pipeline.hpp"
#include "dtwist/surface/generators.hpp"
#include "dtwist/surface/subdivide.hpp"

using namespace dtwist::pipeline;
using dtwist::gf2::BitVector;
namespace surf = dtwist::surface;

namespace {

TwistScenario corpus(const std::string& name, int subdivide = 0) {
    return load_scenario(std::string(DTWIST_DATA_DIR) + "/" + name + ".surf", subdivide);
}

// Components of X \ S by union-find over faces sharing an edge off S, and
// whether c maps each one into itself. Independent of the cut construction.
bool preserves_sides(const TwistScenario& x) {
    const auto& s = x.surface;
    std::vector<int> parent(s.num_faces());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int f) {
        while (parent[static_cast<std::size_t>(f)] != f) f = parent[static_cast<std::size_t>(f)];
        return f;
    };
    for (std::size_t e = 0; e < s.num_edges(); ++e) {
        if (x.s.uses_edge(static_cast<int>(e))) continue;
        const int a = s.face_of(surf::dart_of(static_cast<int>(e), false)), b = s.face_of(surf::dart_of(static_cast<int>(e), true));
        if (a >= 0 && b >= 0) parent[static_cast<std::size_t>(find(a))] = find(b);
    }
    const auto chk = surf::validate_involution(s, *x.c);
    for (std::size_t f = 0; f < s.num_faces(); ++f)
        if (find(static_cast<int>(f)) != find(chk.face_map[f])) return false;
    return true;
}

long det(std::pair<int, int> u, std::pair<int, int> v) { return static_cast<long>(u.first) * v.second - static_cast<long>(u.second) * v.first; }

// Flat-torus Floer rank: |det|, or 2 for parallel (isotopic) slopes.
std::size_t torus_hf(std::pair<int, int> u, std::pair<int, int> v) {
    const long d = std::labs(det(u, v));
    return d == 0 ? 2 : static_cast<std::size_t>(d);
}

}  // namespace

TEST_CASE("genus 2 example") {
    for (int sub : {0, 1}) {
        const auto x = corpus("genus2", sub);
        const auto t = hf_inverse_twist(x);
        CHECK(t.ranks().at(0) == 2);
        CHECK(t.ranks().at(1) == 4);
        CHECK(t.ranks().at(2) == 0);
        CHECK(involution_action(x).at(0).to_string() == "((0,1),(1,0))");
        CHECK(distinguished_element(x) == BitVector{1, 1});
        const auto r = verify_theorem_a(x);
        CHECK(r.pass());
        CHECK(!preserves_sides(x));
    }
}

TEST_CASE("torus example") {
    const auto x = corpus("torus");
    const auto t = hf_inverse_twist(x);
    CHECK(t.ranks().at(0) == 1);
    CHECK(t.ranks().at(1) == 1);
    CHECK(involution_action(x).at(0).to_string() == "((1))");
    CHECK(distinguished_element(x) == BitVector{1});
    CHECK(verify_theorem_a(x).pass());
}

TEST_CASE("genus 3 example") {
    const auto x = corpus("genus3");
    CHECK(hf_inverse_twist(x).ranks().at(0) == 2);
    CHECK(distinguished_element(x) == BitVector{1, 1});
    CHECK(involution_action(x).at(0).is_identity());
    CHECK(preserves_sides(x));
    CHECK(verify_theorem_a(x).pass());
}

TEST_CASE("degree-0 c* is the identity iff c keeps the sides") {
    for (const auto* name : {"genus2", "genus2_sides", "torus", "genus3"}) {
        const auto x = corpus(name);
        CAPTURE(name);
        const auto m = involution_action(x);
        CHECK(m.at(0).is_identity() == preserves_sides(x));
        for (const auto& [k, a] : m) CHECK((a * a).is_identity());
        CHECK(verify_theorem_a(x).pass());
    }
}

TEST_CASE("invalid scenarios") {
    auto x = corpus("genus2");
    auto bad = x;
    bad.s = surf::curve_from_words(x.surface, "a", "t.h0_0 t.h1_0 t.h2_0");
    CHECK_THROWS_AS(involution_action(bad), dtwist::InvolutionError);
    bad = x;
    bad.c.reset();
    CHECK_THROWS_AS(verify_theorem_a(bad), dtwist::InvolutionError);
    bad = x;
    bad.n.reset();
    CHECK_THROWS_AS(les_rank_check(bad), dtwist::CurveError);
    bad = x;
    bad.s = surf::curve_from_words(x.surface, "loop", "t.h0_0 t.v1_0 t.h0_1' t.v0_0'");
    CHECK_THROWS_AS(hf_inverse_twist(bad), dtwist::ContractibleCurveError);
    CHECK_THROWS_AS(
        scenario_from_file(surf::parse_surface_file("faces:\n  a b a' b'\ncurves:\n  m = a\nscenario:\n  T = m\n")),
        dtwist::ParseError);
}

TEST_CASE("randomized symmetric scenarios satisfy the theorem") {
    std::mt19937_64 rng(23);
    int checked = 0;
    for (int trial = 0; trial < 40; ++trial) {
        // Holes at x = 1, 4, 7, ...; columns x = 3, 6 run between them.
        const int holes = 1 + static_cast<int>(rng() % 3);
        std::vector<std::pair<int, int>> hs;
        for (int h = 0; h < holes; ++h) hs.push_back({1 + 3 * h, 1});
        const bool periodic = holes == 1 && rng() % 2 == 0;
        auto d = surf::double_surface(surf::grid_surface(3 * holes + static_cast<int>(rng() % 2), 3, hs, periodic));
        TwistScenario x{"random", d.surface, {}, d.reflection, {}, {}};
        const int h = static_cast<int>(rng() % static_cast<unsigned>(holes));
        const int i = hs[static_cast<std::size_t>(h)].first;
        const int pick = static_cast<int>(rng() % 3);
        std::string w;
        if (pick == 0 || (pick == 2 && holes == 1)) {
            // Hole boundary: fixed pointwise by c.
            w = surf::grid_edge('h', i, 1) + " " + surf::grid_edge('v', i + 1, 1) + " " + surf::grid_edge('h', i, 2) + "' " +
                surf::grid_edge('v', i, 1) + "'";
        } else if (pick == 1) {
            // From the hole down across both sheets to the outer boundary (or around, when periodic).
            w = "t." + surf::grid_edge('v', i, 0) + " b." + surf::grid_edge('v', i, 0) + "'";
            if (periodic) w = "t." + surf::grid_edge('v', i, 2) + " t." + surf::grid_edge('v', i, 0) + " b." +
                              surf::grid_edge('v', i, 0) + "' b." + surf::grid_edge('v', i, 2) + "'";
        } else {
            const int col = 3 * (1 + static_cast<int>(rng() % static_cast<unsigned>(holes - 1)));
            for (int j = 0; j < 3; ++j) w += "t." + surf::grid_edge('v', col, j) + " ";
            for (int j = 2; j >= 0; --j) w += "b." + surf::grid_edge('v', col, j) + "' ";
        }
        x.s = surf::curve_from_words(x.surface, "S", w);
        try {
            validate_scenario(x);
        } catch (const dtwist::ContractibleCurveError&) {
            continue;
        }
        if (rng() % 3 == 0) {
            const auto sub = surf::subdivide_once(x.surface);
            x.s = sub.map_curve(x.s);
            x.c = sub.map_involution(x.surface, *x.c);
            x.surface = sub.surface;
        }
        CHECK(x.surface.genus() <= 3);
        const auto r = verify_theorem_a(x);
        CHECK(r.pass());
        CHECK(r.verdicts == recompute_verdicts(r));
        ++checked;
    }
    CHECK(checked >= 20);
}

TEST_CASE("LES rank checks on the corpus") {
    struct Row {
        const char* name;
        std::size_t r1, r2, r3;
    };
    for (const auto& row : {Row{"torus", 1, 2, 1}, Row{"genus2", 4, 2, 4}, Row{"genus2_sides", 4, 2, 4}, Row{"genus3", 4, 2, 4}}) {
        CAPTURE(row.name);
        const auto x = corpus(row.name);
        const auto l = les_ranks(x);
        CHECK(l.r1() == row.r1);
        CHECK(l.r2() == row.r2);
        CHECK(l.r3() == row.r3);
        const auto r = les_rank_check(x);
        CHECK(r.pass());
        CHECK(r.verdicts == recompute_verdicts(r));
    }
}

TEST_CASE("Q = N is pushed off before twisting") {
    auto x = corpus("genus2");
    x.n = x.q;
    const auto l = les_ranks(x);
    CHECK(l.r2() == 2);
    CHECK(l.r3() == 4);
    CHECK(les_rank_check(x).pass());
}

TEST_CASE("Q disjoint from S forces r3 = r2") {
    auto x = corpus("genus2");
    x.q = surf::curve_from_words(x.surface, "Q", "t.h0_0 t.h1_0 t.h2_0");
    const auto l = les_ranks(x);
    CHECK(l.r1() == 0);
    CHECK(l.r3() == l.r2());
    CHECK(les_rank_check(x).pass());
}

TEST_CASE("randomized torus LES scenarios") {
    std::mt19937_64 rng(29);
    std::uniform_int_distribution<int> u(-3, 3);
    auto slope = [&] {
        for (;;) {
            const int a = u(rng), b = u(rng);
            if (std::gcd(std::abs(a), std::abs(b)) == 1) return std::pair<int, int>{a, b};
        }
    };
    int done = 0;
    while (done < 50) {
        const auto s = slope(), q = slope(), n = slope();
        if (det(s, q) == 0 && det(s, n) == 0) continue;
        const auto ov = dtwist::floer::torus_overlay({s, q, n});
        TwistScenario x{"torus", ov.surface, ov.curves[0], {}, ov.curves[1], ov.curves[2]};
        const std::pair<int, int> tn{static_cast<int>(n.first + det(s, n) * s.first),
                                     static_cast<int>(n.second + det(s, n) * s.second)};
        CAPTURE(s.first);
        CAPTURE(s.second);
        CAPTURE(q.first);
        CAPTURE(q.second);
        CAPTURE(n.first);
        CAPTURE(n.second);
        const auto l = les_ranks(x);
        CHECK(l.r1() == torus_hf(s, n) * torus_hf(q, s));
        CHECK(l.r2() == torus_hf(q, n));
        CHECK(l.r3() == torus_hf(q, tn));
        CHECK(les_rank_check(x).pass());
        ++done;
    }
}

TEST_CASE("reports are deterministic and round-trip") {
    const auto x = corpus("genus2");
    auto r = verify_theorem_a(x);
    const auto l = les_rank_check(x);
    r.ranks.insert(l.ranks.begin(), l.ranks.end());
    r.verdicts.insert(r.verdicts.end(), l.verdicts.begin(), l.verdicts.end());
    dtwist::model::ModelOptions o;
    o.samples = 200;
    r.model.push_back(dtwist::model::run_model_verifier("lemma", o));
    r.verdicts.push_back({"model lemma (id, n = 1)", r.model.back().pass()});
    r.seed = o.seed;

    const auto text = emit_report(r, Format::Structured);
    auto again = r;
    again.model[0] = dtwist::model::run_model_verifier("lemma", o);
    CHECK(emit_report(again, Format::Structured) == text);
    const auto parsed = parse_report(text);
    CHECK(parsed == r);
    CHECK(recompute_verdicts(parsed) == parsed.verdicts);
    CHECK(emit_report(parsed, Format::Structured) == text);
    CHECK(emit_report(r, Format::Table).find("((0,1),(1,0))") != std::string::npos);

    // A tampered matrix is caught by recomputation.
    auto bad = parsed;
    bad.involution[0] = dtwist::gf2::BitMatrix::from_rows({{1, 1}, {0, 1}});
    CHECK(recompute_verdicts(bad) != bad.verdicts);
    CHECK_THROWS_AS(parse_report("{"), dtwist::ParseError);
    CHECK_THROWS_AS(parse_format("xml"), dtwist::ParseError);
}
