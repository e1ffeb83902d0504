#include "dtwist/surface/cohomology.hpp"

namespace dtwist::surface {

using gf2::BitMatrix;
using gf2::BitVector;

gf2::ChainComplex cochain_complex(const CombinatorialSurface& x) {
    const std::size_t nv = x.num_vertices(), ne = x.num_edges(), nf = x.num_faces();
    BitMatrix d0(ne, nv);
    for (std::size_t e = 0; e < ne; ++e) {
        const Dart d = dart_of(static_cast<int>(e), false);
        // A loop edge has coboundary zero.
        d0.flip(e, static_cast<std::size_t>(x.tail(d)));
        d0.flip(e, static_cast<std::size_t>(x.head(d)));
    }
    BitMatrix d1(nf, ne);
    for (std::size_t f = 0; f < nf; ++f)
        for (Dart d : x.face(f)) d1.flip(f, static_cast<std::size_t>(edge_of(d)));
    return gf2::ChainComplex::integer(0, {nv, ne, nf}, {d0, d1, BitMatrix(0, nf)});
}

CellularCohomology cellular_cohomology(const CombinatorialSurface& x) {
    CellularCohomology out;
    out.cochains = cochain_complex(x);
    const auto vc = x.vertex_components(&out.components);
    std::vector<BitVector> indicators(out.components, BitVector(x.num_vertices(), 0));
    for (std::size_t v = 0; v < vc.size(); ++v) indicators[static_cast<std::size_t>(vc[v])][v] = 1;
    out.homology = gf2::with_basis(out.cochains, gf2::homology(out.cochains), 0, indicators);
    return out;
}

}  // namespace dtwist::surface
