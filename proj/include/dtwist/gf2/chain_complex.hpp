#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dtwist/gf2/bit_matrix.hpp"

namespace dtwist::gf2 {

/// Integer gradings carry a finite degree window; Mod2 complexes are
/// two-periodic with degrees {0, 1} and d_1 landing back in degree 0.
enum class Grading { Integer, Mod2 };

struct GradedDims {
    Grading grading = Grading::Integer;
    std::map<int, std::size_t> dims;

    std::size_t at(int degree) const;
    std::size_t total() const;
    /// dim(even) - dim(odd).
    long euler() const;
    /// The mod-2 view: even degrees collapsed onto 0, odd onto 1.
    GradedDims reduced_mod2() const;
    bool operator==(const GradedDims&) const = default;
};

/**
 * Cochain complex of finite-dimensional GF(2) vector spaces.
 *
 * diff(k) is the matrix of d_k: C^k -> C^{k+1}. Shapes are checked on
 * construction; d^2 = 0 is not, see validate_complex().
 */
class ChainComplex {
public:
    ChainComplex() = default;

    /// Degrees lo .. lo+dims.size()-1. d[i] is the map out of degree lo+i;
    /// the last one must have zero rows.
    static ChainComplex integer(int lo, std::vector<std::size_t> dims, std::vector<BitMatrix> d);
    /// Integer complex with all differentials zero.
    static ChainComplex zero_differential(int lo, std::vector<std::size_t> dims);
    static ChainComplex mod2(std::size_t dim0, std::size_t dim1, BitMatrix d0, BitMatrix d1);

    Grading grading() const { return grading_; }
    int lo() const { return lo_; }
    int hi() const { return lo_ + static_cast<int>(dims_.size()) - 1; }
    std::vector<int> degrees() const;

    /// Canonical degree: reduces mod 2 for Mod2 complexes.
    int normalize(int degree) const;
    std::size_t dim(int degree) const;
    BitMatrix diff(int degree) const;
    GradedDims dims() const;
    std::size_t total_dim() const;

private:
    Grading grading_ = Grading::Integer;
    int lo_ = 0;
    std::vector<std::size_t> dims_;
    std::vector<BitMatrix> d_;
};

struct ComplexCheck {
    bool ok = true;
    std::optional<int> degree;
    /// A basis vector e_j with d(d(e_j)) != 0.
    std::optional<std::size_t> witness_column;
    std::string message;
};

/// d_{k+1} d_k = 0 in every degree. Shape problems throw ShapeError.
ComplexCheck validate_complex(const ChainComplex& c);

struct Homology {
    GradedDims ranks;
    /// Cycle representatives per degree; they map to a basis of H^k.
    std::map<int, std::vector<BitVector>> representatives;
};

/// H^k = ker d_k / im d_{k-1}. Throws InvalidComplex when d^2 != 0.
Homology homology(const ChainComplex& c);

/**
 * Replace the representatives in one degree by caller-chosen cycles.
 * Throws if the vectors are not cycles or do not form a basis of H^k.
 */
Homology with_basis(const ChainComplex& c, Homology h, int degree, std::vector<BitVector> reps);

/// Coordinates of the class of cycle z in the basis of `h`.
BitVector class_coordinates(const ChainComplex& c, const Homology& h, int degree, const BitVector& z);

struct ChainMap {
    ChainComplex source;
    ChainComplex target;
    /// components[k]: source^k -> target^k, for every degree of source.
    std::map<int, BitMatrix> components;

    BitMatrix at(int degree) const;
};

/// Build a chain map; throws ShapeError on shape mismatch and NotChainMap
/// when f d != d f in some degree.
ChainMap make_chain_map(ChainComplex source, ChainComplex target, std::map<int, BitMatrix> components);
/// Degree where f d != d f, or nullopt for a chain map.
std::optional<int> chain_map_defect(const ChainMap& f);
ChainMap identity_map(const ChainComplex& c);
ChainMap zero_map(const ChainComplex& source, const ChainComplex& target);
ChainMap compose(const ChainMap& g, const ChainMap& f);

/// Matrices of f_* in the bases of hs (source) and ht (target).
std::map<int, BitMatrix> induced_map(const ChainMap& f, const Homology& hs, const Homology& ht);
std::map<int, BitMatrix> induced_map(const ChainMap& f);

/// C[s]^k = C^{k+s}.
ChainComplex shift(const ChainComplex& c, int s);

struct ConeData {
    ChainComplex cone;
    ChainMap inclusion;   ///< target -> cone
    ChainMap projection;  ///< cone -> source[1]
};

/// Cone(f)^k = source^{k+1} (+) target^k, d = [[d_s, 0], [f, d_t]].
ConeData cone_data(const ChainMap& f);
ChainComplex cone(const ChainMap& f);

struct LesNode {
    std::string space;  ///< "source", "target" or "cone"
    int degree = 0;
    std::size_t dim = 0;
};

/**
 * H(source) -> H(target) -> H(cone) -> H(source)[1] -> ...
 *
 * maps[i] goes from nodes[i] to nodes[i+1]; for cyclic sequences the last
 * map returns to nodes[0]. Non-cyclic sequences are bounded by zero groups.
 */
struct LongExactSequence {
    std::vector<LesNode> nodes;
    std::vector<BitMatrix> maps;
    bool cyclic = false;
};

/// Nodes where image(incoming) != kernel(outgoing).
std::vector<std::size_t> exactness_defects(const LongExactSequence& les);
/// Throws InternalConsistencyError when the computed sequence is not exact.
LongExactSequence les_of_cone(const ChainMap& f);

/// (C (x) D)^n = sum_{i+j=n} C^i (x) D^j with d = d_C (x) 1 + 1 (x) d_D.
ChainComplex tensor_complex(const ChainComplex& c, const ChainComplex& d);

/// Degreewise convolution of two rank tables.
GradedDims convolve(const GradedDims& a, const GradedDims& b);

}  // namespace dtwist::gf2
