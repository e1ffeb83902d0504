#include "dtwist/gf2/chain_complex.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "dtwist/errors.hpp"

namespace dtwist::gf2 {

namespace {

int mod2(int k) { return ((k % 2) + 2) % 2; }

BitMatrix hstack(const std::vector<BitVector>& a, const std::vector<BitVector>& b, std::size_t rows) {
    std::vector<BitVector> cols = a;
    cols.insert(cols.end(), b.begin(), b.end());
    return BitMatrix::from_columns(rows, cols);
}

void require_same_grading(const ChainComplex& a, const ChainComplex& b, const char* where) {
    if (a.grading() != b.grading()) throw ShapeError(std::string(where) + ": gradings differ");
}

/// Degrees on which a map between a and b can be nonzero or must be checked.
std::vector<int> degree_union(const ChainComplex& a, const ChainComplex& b) {
    if (a.grading() == Grading::Mod2) return {0, 1};
    const int lo = std::min(a.lo(), b.lo());
    const int hi = std::max(a.hi(), b.hi());
    std::vector<int> out;
    for (int k = lo; k <= hi; ++k) out.push_back(k);
    return out;
}

}  // namespace

// ---------------------------------------------------------------- GradedDims

std::size_t GradedDims::at(int degree) const {
    const int k = grading == Grading::Mod2 ? mod2(degree) : degree;
    auto it = dims.find(k);
    return it == dims.end() ? 0 : it->second;
}

std::size_t GradedDims::total() const {
    std::size_t t = 0;
    for (const auto& [k, v] : dims) t += v;
    return t;
}

long GradedDims::euler() const {
    long e = 0;
    for (const auto& [k, v] : dims) e += (mod2(k) == 0 ? 1 : -1) * static_cast<long>(v);
    return e;
}

GradedDims GradedDims::reduced_mod2() const {
    GradedDims out{Grading::Mod2, {{0, 0}, {1, 0}}};
    for (const auto& [k, v] : dims) out.dims[mod2(k)] += v;
    return out;
}

// -------------------------------------------------------------- ChainComplex

ChainComplex ChainComplex::integer(int lo, std::vector<std::size_t> dims, std::vector<BitMatrix> d) {
    if (d.size() != dims.size()) throw ShapeError("integer complex: need one differential per degree");
    for (std::size_t i = 0; i < dims.size(); ++i) {
        const std::size_t next = i + 1 < dims.size() ? dims[i + 1] : 0;
        if (d[i].rows() != next || d[i].cols() != dims[i]) {
            std::ostringstream os;
            os << "differential out of degree " << lo + static_cast<int>(i) << " has shape " << d[i].rows()
               << "x" << d[i].cols() << ", expected " << next << "x" << dims[i];
            throw ShapeError(os.str());
        }
    }
    ChainComplex c;
    c.grading_ = Grading::Integer;
    c.lo_ = lo;
    c.dims_ = std::move(dims);
    c.d_ = std::move(d);
    return c;
}

ChainComplex ChainComplex::zero_differential(int lo, std::vector<std::size_t> dims) {
    std::vector<BitMatrix> d;
    for (std::size_t i = 0; i < dims.size(); ++i)
        d.emplace_back(i + 1 < dims.size() ? dims[i + 1] : 0, dims[i]);
    return integer(lo, std::move(dims), std::move(d));
}

ChainComplex ChainComplex::mod2(std::size_t dim0, std::size_t dim1, BitMatrix d0, BitMatrix d1) {
    if (d0.rows() != dim1 || d0.cols() != dim0) throw ShapeError("mod2 complex: d_0 has the wrong shape");
    if (d1.rows() != dim0 || d1.cols() != dim1) throw ShapeError("mod2 complex: d_1 has the wrong shape");
    ChainComplex c;
    c.grading_ = Grading::Mod2;
    c.lo_ = 0;
    c.dims_ = {dim0, dim1};
    c.d_ = {std::move(d0), std::move(d1)};
    return c;
}

std::vector<int> ChainComplex::degrees() const {
    std::vector<int> out;
    for (int k = lo(); k <= hi(); ++k) out.push_back(k);
    return out;
}

int ChainComplex::normalize(int degree) const { return grading_ == Grading::Mod2 ? ::dtwist::gf2::mod2(degree) : degree; }

std::size_t ChainComplex::dim(int degree) const {
    const int k = normalize(degree);
    if (dims_.empty() || k < lo() || k > hi()) return 0;
    return dims_[static_cast<std::size_t>(k - lo_)];
}

BitMatrix ChainComplex::diff(int degree) const {
    const int k = normalize(degree);
    if (dims_.empty() || k < lo() || k > hi()) return BitMatrix::zero(dim(k + 1), dim(k));
    return d_[static_cast<std::size_t>(k - lo_)];
}

GradedDims ChainComplex::dims() const {
    GradedDims g{grading_, {}};
    for (int k : degrees()) g.dims[k] = dim(k);
    return g;
}

std::size_t ChainComplex::total_dim() const {
    std::size_t t = 0;
    for (auto v : dims_) t += v;
    return t;
}

// ---------------------------------------------------------------- validation

ComplexCheck validate_complex(const ChainComplex& c) {
    for (int k : c.degrees()) {
        const BitMatrix a = c.diff(k);
        const BitMatrix b = c.diff(k + 1);
        if (a.cols() != c.dim(k) || a.rows() != c.dim(k + 1) || b.cols() != c.dim(k + 1))
            throw ShapeError("validate_complex: inconsistent shapes at degree " + std::to_string(k));
        const BitMatrix sq = b * a;
        if (sq.is_zero()) continue;
        ComplexCheck bad;
        bad.ok = false;
        bad.degree = k;
        for (std::size_t j = 0; j < sq.cols(); ++j) {
            if (!is_zero(sq.column(j))) {
                bad.witness_column = j;
                break;
            }
        }
        bad.message = "d_{k+1} d_k != 0 at degree " + std::to_string(k) + ", column " +
                      std::to_string(bad.witness_column.value_or(0));
        return bad;
    }
    return {};
}

// ------------------------------------------------------------------ homology

Homology homology(const ChainComplex& c) {
    const ComplexCheck chk = validate_complex(c);
    if (!chk.ok) throw InvalidComplex(*chk.degree, "homology: " + chk.message);
    Homology h;
    h.ranks.grading = c.grading();
    for (int k : c.degrees()) {
        const std::vector<BitVector> cycles = c.diff(k).kernel_basis();
        const std::vector<BitVector> bounds = c.diff(k - 1).image_basis();
        std::vector<std::size_t> pivots;
        hstack(bounds, cycles, c.dim(k)).rref(&pivots);
        std::vector<BitVector> reps;
        for (auto p : pivots)
            if (p >= bounds.size()) reps.push_back(cycles[p - bounds.size()]);
        h.ranks.dims[k] = reps.size();
        h.representatives[k] = std::move(reps);
    }
    return h;
}

BitVector class_coordinates(const ChainComplex& c, const Homology& h, int degree, const BitVector& z) {
    const int k = c.normalize(degree);
    auto it = h.representatives.find(k);
    const std::vector<BitVector> reps = it == h.representatives.end() ? std::vector<BitVector>{} : it->second;
    if (z.size() != c.dim(k)) throw ShapeError("class_coordinates: vector length mismatch");
    if (!is_zero(c.diff(k) * z)) throw Error("class_coordinates: vector is not a cycle");
    const std::vector<BitVector> bounds = c.diff(k - 1).image_basis();
    const auto x = hstack(bounds, reps, c.dim(k)).solve(z);
    if (!x) throw InternalConsistencyError("class_coordinates: homology basis does not span");
    return BitVector(x->begin() + static_cast<long>(bounds.size()), x->end());
}

Homology with_basis(const ChainComplex& c, Homology h, int degree, std::vector<BitVector> reps) {
    const int k = c.normalize(degree);
    for (const auto& v : reps) {
        if (v.size() != c.dim(k)) throw ShapeError("with_basis: vector length mismatch");
        if (!is_zero(c.diff(k) * v)) throw Error("with_basis: representative is not a cycle");
    }
    const std::vector<BitVector> bounds = c.diff(k - 1).image_basis();
    if (reps.size() != h.ranks.at(k) || hstack(bounds, reps, c.dim(k)).rank() != bounds.size() + reps.size())
        throw Error("with_basis: vectors do not form a basis of H^" + std::to_string(k));
    h.representatives[k] = std::move(reps);
    return h;
}

// ---------------------------------------------------------------- chain maps

BitMatrix ChainMap::at(int degree) const {
    const int k = source.normalize(degree);
    auto it = components.find(k);
    if (it != components.end()) return it->second;
    return BitMatrix::zero(target.dim(k), source.dim(k));
}

std::optional<int> chain_map_defect(const ChainMap& f) {
    for (int k : degree_union(f.source, f.target)) {
        if (!(f.at(k + 1) * f.source.diff(k) == f.target.diff(k) * f.at(k))) return k;
    }
    return std::nullopt;
}

ChainMap make_chain_map(ChainComplex source, ChainComplex target, std::map<int, BitMatrix> components) {
    require_same_grading(source, target, "make_chain_map");
    ChainMap f{std::move(source), std::move(target), {}};
    for (auto& [deg, m] : components) {
        const int k = f.source.normalize(deg);
        if (m.rows() != f.target.dim(k) || m.cols() != f.source.dim(k))
            throw ShapeError("make_chain_map: component in degree " + std::to_string(k) + " has the wrong shape");
        f.components[k] = std::move(m);
    }
    if (auto bad = chain_map_defect(f))
        throw NotChainMap(*bad, "make_chain_map: f d != d f at degree " + std::to_string(*bad));
    return f;
}

ChainMap identity_map(const ChainComplex& c) {
    ChainMap f{c, c, {}};
    for (int k : c.degrees()) f.components[k] = BitMatrix::identity(c.dim(k));
    return f;
}

ChainMap zero_map(const ChainComplex& source, const ChainComplex& target) {
    require_same_grading(source, target, "zero_map");
    return ChainMap{source, target, {}};
}

ChainMap compose(const ChainMap& g, const ChainMap& f) {
    if (!(g.source.dims() == f.target.dims())) throw ShapeError("compose: g.source != f.target");
    ChainMap h{f.source, g.target, {}};
    for (int k : f.source.degrees()) h.components[k] = g.at(k) * f.at(k);
    return h;
}

std::map<int, BitMatrix> induced_map(const ChainMap& f, const Homology& hs, const Homology& ht) {
    if (auto bad = chain_map_defect(f))
        throw NotChainMap(*bad, "induced_map: not a chain map at degree " + std::to_string(*bad));
    std::map<int, BitMatrix> out;
    for (int k : degree_union(f.source, f.target)) {
        const std::size_t rs = hs.ranks.at(k);
        const std::size_t rt = ht.ranks.at(k);
        BitMatrix m(rt, rs);
        if (rs > 0 && rt > 0) {
            const auto& reps = hs.representatives.at(f.source.normalize(k));
            for (std::size_t j = 0; j < rs; ++j) {
                const BitVector coords = class_coordinates(f.target, ht, k, f.at(k) * reps[j]);
                for (std::size_t i = 0; i < rt; ++i) m.set(i, j, coords[i] != 0);
            }
        }
        out[f.source.normalize(k)] = std::move(m);
    }
    return out;
}

std::map<int, BitMatrix> induced_map(const ChainMap& f) {
    return induced_map(f, homology(f.source), homology(f.target));
}

// --------------------------------------------------------------------- cones

ChainComplex shift(const ChainComplex& c, int s) {
    if (c.grading() == Grading::Mod2) {
        if (mod2(s) == 0) return c;
        return ChainComplex::mod2(c.dim(1), c.dim(0), c.diff(1), c.diff(0));
    }
    std::vector<std::size_t> dims;
    std::vector<BitMatrix> d;
    for (int k : c.degrees()) {
        dims.push_back(c.dim(k));
        d.push_back(c.diff(k));
    }
    return ChainComplex::integer(c.lo() - s, std::move(dims), std::move(d));
}

namespace {

Homology shifted_homology(const Homology& h, int s, Grading g) {
    Homology out;
    out.ranks.grading = g;
    for (const auto& [k, v] : h.ranks.dims) {
        const int nk = g == Grading::Mod2 ? mod2(k - s) : k - s;
        out.ranks.dims[nk] = v;
        out.representatives[nk] = h.representatives.at(k);
    }
    return out;
}

}  // namespace

ConeData cone_data(const ChainMap& f) {
    const ChainComplex& s = f.source;
    const ChainComplex& t = f.target;
    require_same_grading(s, t, "cone");
    std::vector<int> degs;
    if (s.grading() == Grading::Mod2) {
        degs = {0, 1};
    } else {
        for (int k = std::min(s.lo() - 1, t.lo()); k <= std::max(s.hi() - 1, t.hi()); ++k) degs.push_back(k);
    }

    std::vector<std::size_t> dims;
    std::vector<BitMatrix> d;
    for (int k : degs) {
        dims.push_back(s.dim(k + 1) + t.dim(k));
        BitMatrix m(s.dim(k + 2) + t.dim(k + 1), s.dim(k + 1) + t.dim(k));
        m.paste(s.diff(k + 1), 0, 0);
        m.paste(f.at(k + 1), s.dim(k + 2), 0);
        m.paste(t.diff(k), s.dim(k + 2), s.dim(k + 1));
        d.push_back(std::move(m));
    }
    ChainComplex c = s.grading() == Grading::Mod2
                         ? ChainComplex::mod2(dims[0], dims[1], d[0], d[1])
                         : ChainComplex::integer(degs.front(), dims, [&] {
                               // The top differential must land in the zero space.
                               auto dd = d;
                               dd.back() = BitMatrix::zero(0, dims.back());
                               return dd;
                           }());

    std::map<int, BitMatrix> incl, proj;
    for (int k : degs) {
        BitMatrix i(c.dim(k), t.dim(k));
        i.paste(BitMatrix::identity(t.dim(k)), s.dim(k + 1), 0);
        incl[k] = std::move(i);
        BitMatrix p(s.dim(k + 1), c.dim(k));
        p.paste(BitMatrix::identity(s.dim(k + 1)), 0, 0);
        proj[k] = std::move(p);
    }
    ChainComplex s1 = shift(s, 1);
    ChainMap inclusion{t, c, {}};
    for (int k : t.degrees()) inclusion.components[k] = incl.count(k) ? incl[k] : BitMatrix(c.dim(k), t.dim(k));
    ChainMap projection{c, s1, {}};
    for (int k : c.degrees()) projection.components[k] = proj.count(k) ? proj[k] : BitMatrix(s1.dim(k), c.dim(k));
    return {std::move(c), std::move(inclusion), std::move(projection)};
}

ChainComplex cone(const ChainMap& f) { return cone_data(f).cone; }

std::vector<std::size_t> exactness_defects(const LongExactSequence& les) {
    std::vector<std::size_t> bad;
    const std::size_t n = les.nodes.size();
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t dim = les.nodes[i].dim;
        BitMatrix in, out;
        if (i > 0)
            in = les.maps[i - 1];
        else if (les.cyclic)
            in = les.maps[n - 1];
        else
            in = BitMatrix::zero(dim, 0);
        if (i + 1 < n || les.cyclic)
            out = les.maps[i];
        else
            out = BitMatrix::zero(0, dim);
        const bool composes_to_zero = (out * in).is_zero();
        if (!composes_to_zero || in.rank() + out.rank() != dim) bad.push_back(i);
    }
    return bad;
}

LongExactSequence les_of_cone(const ChainMap& f) {
    if (auto bad = chain_map_defect(f))
        throw NotChainMap(*bad, "les_of_cone: not a chain map at degree " + std::to_string(*bad));
    const ConeData cd = cone_data(f);
    const Homology hs = homology(f.source);
    const Homology ht = homology(f.target);
    const Homology hc = homology(cd.cone);
    const Homology hs1 = shifted_homology(hs, 1, f.source.grading());
    const auto fstar = induced_map(f, hs, ht);
    const auto istar = induced_map(cd.inclusion, ht, hc);
    const auto pstar = induced_map(cd.projection, hc, hs1);

    std::vector<int> degs;
    LongExactSequence les;
    if (f.source.grading() == Grading::Mod2) {
        degs = {0, 1};
        les.cyclic = true;
    } else {
        const int lo = std::min({f.source.lo(), f.target.lo(), cd.cone.lo()});
        const int hi = std::max({f.source.hi(), f.target.hi(), cd.cone.hi()});
        for (int k = lo; k <= hi; ++k) degs.push_back(k);
    }
    auto get = [](const std::map<int, BitMatrix>& m, int k, std::size_t r, std::size_t c) {
        auto it = m.find(k);
        return it == m.end() ? BitMatrix::zero(r, c) : it->second;
    };
    for (std::size_t idx = 0; idx < degs.size(); ++idx) {
        const int k = degs[idx];
        les.nodes.push_back({"source", k, hs.ranks.at(k)});
        les.nodes.push_back({"target", k, ht.ranks.at(k)});
        les.nodes.push_back({"cone", k, hc.ranks.at(k)});
        les.maps.push_back(get(fstar, k, ht.ranks.at(k), hs.ranks.at(k)));
        les.maps.push_back(get(istar, k, hc.ranks.at(k), ht.ranks.at(k)));
        les.maps.push_back(get(pstar, k, hs.ranks.at(k + 1), hc.ranks.at(k)));
    }
    if (!les.cyclic) les.maps.pop_back();  // H^hi(cone) -> H^{hi+1}(source) = 0
    const auto defects = exactness_defects(les);
    if (!defects.empty())
        throw InternalConsistencyError("les_of_cone: sequence not exact at node " + std::to_string(defects.front()));
    return les;
}

// -------------------------------------------------------------------- tensor

ChainComplex tensor_complex(const ChainComplex& c, const ChainComplex& d) {
    require_same_grading(c, d, "tensor_complex");
    const bool periodic = c.grading() == Grading::Mod2;
    std::vector<int> degs;
    if (periodic) {
        degs = {0, 1};
    } else {
        for (int n = c.lo() + d.lo(); n <= c.hi() + d.hi(); ++n) degs.push_back(n);
    }
    auto norm = [&](int n) { return periodic ? mod2(n) : n; };
    // Block layout of degree n: pairs (i, j) with i ascending.
    auto blocks = [&](int n) {
        std::vector<std::pair<int, int>> out;
        for (int i : c.degrees()) {
            for (int j : d.degrees())
                if (norm(i + j) == norm(n)) out.emplace_back(i, j);
        }
        return out;
    };
    auto offsets = [&](int n) {
        std::map<std::pair<int, int>, std::size_t> off;
        std::size_t acc = 0;
        for (auto b : blocks(n)) {
            off[b] = acc;
            acc += c.dim(b.first) * d.dim(b.second);
        }
        return std::make_pair(off, acc);
    };

    std::vector<std::size_t> dims;
    std::vector<BitMatrix> diffs;
    for (int n : degs) {
        const auto [src_off, src_dim] = offsets(n);
        const auto [dst_off, dst_dim] = offsets(n + 1);
        BitMatrix m(dst_dim, src_dim);
        for (auto [i, j] : blocks(n)) {
            const std::size_t col = src_off.at({i, j});
            const int i1 = c.normalize(i + 1);
            const int j1 = d.normalize(j + 1);
            if (dst_off.count({i1, j})) {
                m.paste(c.diff(i).kronecker(BitMatrix::identity(d.dim(j))), dst_off.at({i1, j}), col);
            }
            if (dst_off.count({i, j1})) {
                const BitMatrix blk = BitMatrix::identity(c.dim(i)).kronecker(d.diff(j));
                const std::size_t row = dst_off.at({i, j1});
                for (std::size_t r = 0; r < blk.rows(); ++r)
                    for (std::size_t q = 0; q < blk.cols(); ++q)
                        if (blk.get(r, q)) m.flip(row + r, col + q);
            }
        }
        dims.push_back(src_dim);
        diffs.push_back(std::move(m));
    }
    if (periodic) return ChainComplex::mod2(dims[0], dims[1], diffs[0], diffs[1]);
    return ChainComplex::integer(degs.front(), dims, diffs);
}

GradedDims convolve(const GradedDims& a, const GradedDims& b) {
    GradedDims out{a.grading, {}};
    for (const auto& [i, x] : a.dims) {
        for (const auto& [j, y] : b.dims) {
            const int n = a.grading == Grading::Mod2 ? mod2(i + j) : i + j;
            out.dims[n] += x * y;
        }
    }
    return out;
}

}  // namespace dtwist::gf2
