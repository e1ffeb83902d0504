#include <random>

#include "doctest.h"
#include "dtwist/errors.hpp"
#include "dtwist/gf2/chain_complex.hpp"
#include "oracles/gf2_oracle.hpp"

using namespace dtwist::gf2;

namespace {

BitMatrix m(std::vector<std::vector<int>> rows) { return BitMatrix::from_rows(rows); }

}  // namespace

TEST_CASE("bit matrix basics") {
    const BitMatrix a = m({{1, 0, 1}, {0, 1, 1}});
    CHECK(a.rank() == 2);
    CHECK(a.transpose().rows() == 3);
    CHECK((a * a.transpose()).to_string() == "((0,1),(1,0))");
    const auto ker = a.kernel_basis();
    REQUIRE(ker.size() == 1);
    CHECK(is_zero(a * ker[0]));
    auto x = a.solve({1, 1});
    REQUIRE(x);
    CHECK(a * *x == BitVector{1, 1});
    CHECK_FALSE(m({{1, 1}, {1, 1}}).solve({1, 0}));
    CHECK(BitMatrix::identity(2).kronecker(a).rows() == 4);
}

TEST_CASE("bit matrix matches the naive rank on random input") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t r = rng() % 9, c = rng() % 70 + 1;
        const auto a = oracle::random_matrix(r, c, rng);
        const auto b = oracle::to_bits(a, r, c);
        CHECK(b.rank() == static_cast<std::size_t>(oracle::rank(a)));
        for (const auto& v : b.kernel_basis()) CHECK(is_zero(b * v));
        CHECK(b.kernel_basis().size() + b.rank() == c);
    }
}

TEST_CASE("zero differential homology equals the chain groups") {
    const auto c = ChainComplex::zero_differential(0, {2, 4});
    const auto h = homology(c);
    CHECK(h.ranks.at(0) == 2);
    CHECK(h.ranks.at(1) == 4);
}

TEST_CASE("validation reports the first failing degree") {
    const auto c = ChainComplex::integer(0, {1, 1, 1}, {m({{1}}), m({{1}}), BitMatrix(0, 1)});
    const auto chk = validate_complex(c);
    CHECK_FALSE(chk.ok);
    REQUIRE(chk.degree);
    CHECK(*chk.degree == 0);
    CHECK_THROWS_AS(homology(c), dtwist::InvalidComplex);
}

TEST_CASE("shape errors are raised on construction") {
    CHECK_THROWS_AS(ChainComplex::integer(0, {1, 2}, {m({{1}}), BitMatrix(0, 2)}), dtwist::ShapeError);
}

TEST_CASE("random complexes validate and have the planted homology") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        const auto rc = oracle::random_complex(rng, static_cast<int>(rng() % 5) - 2, 1 + rng() % 4, 7);
        CHECK(validate_complex(rc.complex).ok);
        const auto h = homology(rc.complex);
        CHECK(h.ranks.dims == rc.expected_ranks);
        CHECK(h.ranks.dims == oracle::homology_ranks(rc.complex));
    }
    for (int trial = 0; trial < 50; ++trial) {
        const auto rc = oracle::random_mod2_complex(rng, 8);
        CHECK(validate_complex(rc.complex).ok);
        CHECK(homology(rc.complex).ranks.dims == rc.expected_ranks);
    }
}

TEST_CASE("identity and swap induced maps") {
    const auto c = ChainComplex::zero_differential(0, {2});
    CHECK(induced_map(identity_map(c)).at(0).is_identity());
    const auto swap = make_chain_map(c, c, {{0, m({{0, 1}, {1, 0}})}});
    CHECK(induced_map(swap).at(0).to_string() == "((0,1),(1,0))");
}

TEST_CASE("non chain maps are rejected") {
    const auto s = ChainComplex::integer(0, {1, 1}, {m({{1}}), BitMatrix(0, 1)});
    const auto t = ChainComplex::zero_differential(0, {1, 1});
    CHECK_THROWS_AS(make_chain_map(s, t, {{0, m({{1}})}, {1, m({{1}})}}), dtwist::NotChainMap);
}

TEST_CASE("induced maps agree with brute force, including after a change of representatives") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 60; ++trial) {
        const bool periodic = trial % 2 == 1;
        const int lo = -1;
        const int n = 1 + static_cast<int>(rng() % 3);
        const auto s = periodic ? oracle::random_mod2_complex(rng, 6) : oracle::random_complex(rng, lo, n, 6);
        const auto t = periodic ? oracle::random_mod2_complex(rng, 6) : oracle::random_complex(rng, lo, n, 6);
        const auto f = oracle::random_chain_map(rng, s, t);
        auto hs = homology(s.complex);
        auto ht = homology(t.complex);
        for (int k : s.complex.degrees()) {
            // Perturb the target representatives by boundaries.
            auto reps = ht.representatives[k];
            const BitMatrix b = t.complex.diff(k - 1);
            for (auto& r : reps)
                if (b.cols()) r = add(r, b.column(rng() % b.cols()));
            ht = with_basis(t.complex, ht, k, reps);
        }
        const auto ind = induced_map(f, hs, ht);
        for (int k : s.complex.degrees()) CHECK(ind.at(k) == oracle::brute_force_induced(f, hs, ht, k));
    }
}

TEST_CASE("with_basis rejects non-bases") {
    const auto c = ChainComplex::zero_differential(0, {2});
    auto h = homology(c);
    CHECK_THROWS(with_basis(c, h, 0, {{1, 1}, {1, 1}}));
}

TEST_CASE("cones of identity and zero") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        const auto s = oracle::random_complex(rng, 0, 3, 5);
        const auto hc = homology(cone(identity_map(s.complex)));
        CHECK(hc.ranks.total() == 0);
        const auto t = oracle::random_complex(rng, 0, 3, 5);
        const auto hz = homology(cone(zero_map(s.complex, t.complex)));
        const auto hs = homology(s.complex), ht = homology(t.complex);
        for (int k = -1; k <= 2; ++k) CHECK(hz.ranks.at(k) == hs.ranks.at(k + 1) + ht.ranks.at(k));
    }
}

TEST_CASE("cone Euler characteristic") {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 30; ++trial) {
        const auto s = oracle::random_complex(rng, 0, 3, 5);
        const auto t = oracle::random_complex(rng, 0, 3, 5);
        const auto f = oracle::random_chain_map(rng, s, t);
        const auto c = cone(f);
        CHECK(c.dims().euler() == t.complex.dims().euler() - s.complex.dims().euler());
        CHECK(validate_complex(c).ok);
    }
}

TEST_CASE("long exact sequence of a cone is exact") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 100; ++trial) {
        const bool periodic = trial % 3 == 0;
        const auto s = periodic ? oracle::random_mod2_complex(rng, 6) : oracle::random_complex(rng, 0, 3, 5);
        const auto t = periodic ? oracle::random_mod2_complex(rng, 6) : oracle::random_complex(rng, 0, 3, 5);
        const auto f = oracle::random_chain_map(rng, s, t);
        LongExactSequence les;
        REQUIRE_NOTHROW(les = les_of_cone(f));
        CHECK(exactness_defects(les).empty());
        if (periodic) {
            CHECK(les.cyclic);
            CHECK(les.nodes.size() == 6);
        }
    }
}

TEST_CASE("induced maps are functorial") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 30; ++trial) {
        const auto a = oracle::random_complex(rng, 0, 3, 5);
        const auto b = oracle::random_complex(rng, 0, 3, 5);
        const auto c = oracle::random_complex(rng, 0, 3, 5);
        const auto f = oracle::random_chain_map(rng, a, b);
        const auto g = oracle::random_chain_map(rng, b, c);
        const auto ha = homology(a.complex), hb = homology(b.complex), hc = homology(c.complex);
        const auto gf = induced_map(compose(g, f), ha, hc);
        const auto fs = induced_map(f, ha, hb), gs = induced_map(g, hb, hc);
        for (int k : a.complex.degrees()) CHECK(gf.at(k) == gs.at(k) * fs.at(k));
    }
}

TEST_CASE("tensor products follow the Kunneth formula") {
    const auto c = ChainComplex::zero_differential(0, {2, 4});
    const auto h = homology(tensor_complex(c, c));
    CHECK(h.ranks.at(0) == 4);
    CHECK(h.ranks.at(1) == 16);
    CHECK(h.ranks.at(2) == 16);
    const auto r = h.ranks.reduced_mod2();
    CHECK(r.at(0) == 20);
    CHECK(r.at(1) == 16);

    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 20; ++trial) {
        const bool periodic = trial % 2 == 0;
        const auto a = periodic ? oracle::random_mod2_complex(rng, 5) : oracle::random_complex(rng, -1, 3, 4);
        const auto b = periodic ? oracle::random_mod2_complex(rng, 5) : oracle::random_complex(rng, 0, 2, 4);
        const auto t = tensor_complex(a.complex, b.complex);
        CHECK(validate_complex(t).ok);
        const auto expect = convolve(homology(a.complex).ranks, homology(b.complex).ranks);
        CHECK(homology(t).ranks.dims == expect.dims);
    }
    const auto unit = ChainComplex::zero_differential(0, {1});
    const auto a = oracle::random_complex(rng, 0, 3, 4);
    CHECK(homology(tensor_complex(a.complex, unit)).ranks.dims == homology(a.complex).ranks.dims);
}
