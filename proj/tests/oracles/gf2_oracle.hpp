#pragma once

// Test-only reference arithmetic over GF(2). Deliberately naive: plain
// vectors of ints, textbook Gaussian elimination, no bit packing. Shares no
// code with dtwist::gf2 beyond the conversion helpers at the bottom.

#include <cstddef>
#include <random>
#include <vector>

#include "dtwist/gf2/bit_matrix.hpp"
#include "dtwist/gf2/chain_complex.hpp"

namespace oracle {

using Mat = std::vector<std::vector<int>>;
using Vec = std::vector<int>;

Mat zeros(std::size_t r, std::size_t c);
Mat eye(std::size_t n);
Mat mul(const Mat& a, const Mat& b, std::size_t inner);
int rank(Mat m);
/// Gauss-Jordan inverse; the input must be square and invertible.
Mat inverse(const Mat& m);
Mat random_invertible(std::size_t n, std::mt19937_64& rng);
Mat random_matrix(std::size_t r, std::size_t c, std::mt19937_64& rng);
bool in_span(const std::vector<Vec>& vectors, const Vec& v, std::size_t dim);

Mat to_mat(const dtwist::gf2::BitMatrix& m);
dtwist::gf2::BitMatrix to_bits(const Mat& m, std::size_t rows, std::size_t cols);

/// A complex together with the homology ranks it was built to have.
struct RandomComplex {
    dtwist::gf2::ChainComplex complex;
    std::map<int, std::size_t> expected_ranks;
    /// Normal-form data kept so chain maps can be built on top.
    std::vector<std::size_t> ranks;     ///< rank of d_k, indexed from lo
    std::vector<std::size_t> homology;  ///< h_k
    std::vector<Mat> basis_change;      ///< A_k, columns are the normal-form basis
    int lo = 0;
};

/// Integer-graded complex on degrees lo..lo+n-1 with each dimension <= max_dim.
/// d_k = A_{k+1} N_k A_k^{-1} where N_k is an identity block, so d^2 = 0 by construction.
RandomComplex random_complex(std::mt19937_64& rng, int lo, int n_degrees, std::size_t max_dim);
/// Two-periodic analogue.
RandomComplex random_mod2_complex(std::mt19937_64& rng, std::size_t max_dim);

/// A chain map between two random complexes of the same grading: a
/// normal-form map conjugated into the random bases plus a null-homotopic term.
dtwist::gf2::ChainMap random_chain_map(std::mt19937_64& rng, const RandomComplex& s, const RandomComplex& t);

/// Homology ranks by direct rank computations: dim ker d_k - rank d_{k-1}.
std::map<int, std::size_t> homology_ranks(const dtwist::gf2::ChainComplex& c);

/// Induced map on homology by brute force over cosets: for each source
/// representative, enumerate all 2^r combinations of target representatives.
dtwist::gf2::BitMatrix brute_force_induced(const dtwist::gf2::ChainMap& f, const dtwist::gf2::Homology& hs,
                                           const dtwist::gf2::Homology& ht, int degree);

}  // namespace oracle
