#include "gf2_oracle.hpp"

#include <stdexcept>
#include <utility>

using dtwist::gf2::BitMatrix;
using dtwist::gf2::ChainComplex;
using dtwist::gf2::ChainMap;
using dtwist::gf2::Grading;
using dtwist::gf2::Homology;

namespace oracle {

Mat zeros(std::size_t r, std::size_t c) { return Mat(r, Vec(c, 0)); }

Mat eye(std::size_t n) {
    Mat m = zeros(n, n);
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

Mat mul(const Mat& a, const Mat& b, std::size_t inner) {
    const std::size_t r = a.size();
    const std::size_t c = b.empty() ? 0 : b[0].size();
    Mat out = zeros(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) {
            int s = 0;
            for (std::size_t k = 0; k < inner; ++k) s += a[i][k] * b[k][j];
            out[i][j] = s % 2;
        }
    return out;
}

int rank(Mat m) {
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i != r && m[i][c]) {
                for (std::size_t j = 0; j < cols; ++j) m[i][j] ^= m[r][j];
            }
        }
        ++r;
    }
    return static_cast<int>(r);
}

Mat inverse(const Mat& m) {
    const std::size_t n = m.size();
    Mat a = m;
    Mat inv = eye(n);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p][c] == 0) ++p;
        if (p == n) throw std::runtime_error("oracle::inverse: singular");
        std::swap(a[p], a[c]);
        std::swap(inv[p], inv[c]);
        for (std::size_t i = 0; i < n; ++i) {
            if (i != c && a[i][c]) {
                for (std::size_t j = 0; j < n; ++j) {
                    a[i][j] ^= a[c][j];
                    inv[i][j] ^= inv[c][j];
                }
            }
        }
    }
    return inv;
}

Mat random_matrix(std::size_t r, std::size_t c, std::mt19937_64& rng) {
    Mat m = zeros(r, c);
    for (auto& row : m)
        for (auto& x : row) x = static_cast<int>(rng() & 1);
    return m;
}

Mat random_invertible(std::size_t n, std::mt19937_64& rng) {
    for (;;) {
        Mat m = random_matrix(n, n, rng);
        if (rank(m) == static_cast<int>(n)) return m;
    }
}

bool in_span(const std::vector<Vec>& vectors, const Vec& v, std::size_t dim) {
    Mat a = zeros(dim, vectors.size());
    for (std::size_t j = 0; j < vectors.size(); ++j)
        for (std::size_t i = 0; i < dim; ++i) a[i][j] = vectors[j][i];
    Mat b = a;
    for (std::size_t i = 0; i < dim; ++i) b[i].push_back(v[i]);
    return rank(a) == rank(b);
}

Mat to_mat(const BitMatrix& m) { return m.to_rows().empty() ? zeros(m.rows(), m.cols()) : m.to_rows(); }

BitMatrix to_bits(const Mat& m, std::size_t rows, std::size_t cols) {
    BitMatrix b(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) b.set(i, j, m[i][j] != 0);
    return b;
}

namespace {

std::size_t pick(std::mt19937_64& rng, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(0, hi)(rng);
}

/// Normal-form differential: source block of C^k onto target block of C^{k+1}.
Mat normal_diff(std::size_t rows, std::size_t cols, std::size_t src_offset, std::size_t r) {
    Mat n = zeros(rows, cols);
    for (std::size_t a = 0; a < r; ++a) n[a][src_offset + a] = 1;
    return n;
}

Mat conjugate(const Mat& a_next, const Mat& n, const Mat& a_inv, std::size_t rows, std::size_t cols) {
    return mul(mul(a_next, n, rows), a_inv, cols);
}

}  // namespace

RandomComplex random_complex(std::mt19937_64& rng, int lo, int n_degrees, std::size_t max_dim) {
    RandomComplex rc;
    rc.lo = lo;
    const auto n = static_cast<std::size_t>(n_degrees);
    rc.ranks.assign(n, 0);
    rc.homology.assign(n, 0);
    std::vector<std::size_t> dims(n);
    std::size_t prev_rank = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t room = max_dim - prev_rank;
        const std::size_t r = i + 1 < n ? pick(rng, room) : 0;
        const std::size_t h = pick(rng, room - r);
        rc.ranks[i] = r;
        rc.homology[i] = h;
        dims[i] = prev_rank + r + h;
        prev_rank = r;
    }
    for (std::size_t i = 0; i < n; ++i) rc.basis_change.push_back(random_invertible(dims[i], rng));
    std::vector<BitMatrix> d;
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t rows = i + 1 < n ? dims[i + 1] : 0;
        const std::size_t src_offset = i > 0 ? rc.ranks[i - 1] : 0;
        const Mat nf = normal_diff(rows, dims[i], src_offset, rc.ranks[i]);
        const Mat di = rows ? conjugate(rc.basis_change[i + 1], nf, inverse(rc.basis_change[i]), rows, dims[i])
                            : zeros(0, dims[i]);
        d.push_back(to_bits(di, rows, dims[i]));
        rc.expected_ranks[lo + static_cast<int>(i)] = rc.homology[i];
    }
    rc.complex = ChainComplex::integer(lo, dims, d);
    return rc;
}

RandomComplex random_mod2_complex(std::mt19937_64& rng, std::size_t max_dim) {
    RandomComplex rc;
    const std::size_t r0 = pick(rng, max_dim / 2);
    const std::size_t r1 = pick(rng, max_dim - r0 > max_dim / 2 ? max_dim / 2 : max_dim - r0);
    const std::size_t h0 = pick(rng, max_dim - r0 - r1);
    const std::size_t h1 = pick(rng, max_dim - r0 - r1);
    rc.ranks = {r0, r1};
    rc.homology = {h0, h1};
    const std::size_t n0 = r1 + r0 + h0;  // [targets of d1 | sources of d0 | H^0]
    const std::size_t n1 = r0 + r1 + h1;  // [targets of d0 | sources of d1 | H^1]
    rc.basis_change = {random_invertible(n0, rng), random_invertible(n1, rng)};
    const Mat d0 = conjugate(rc.basis_change[1], normal_diff(n1, n0, r1, r0), inverse(rc.basis_change[0]), n1, n0);
    const Mat d1 = conjugate(rc.basis_change[0], normal_diff(n0, n1, r0, r1), inverse(rc.basis_change[1]), n0, n1);
    rc.complex = ChainComplex::mod2(n0, n1, to_bits(d0, n1, n0), to_bits(d1, n0, n1));
    rc.expected_ranks = {{0, h0}, {1, h1}};
    return rc;
}

ChainMap random_chain_map(std::mt19937_64& rng, const RandomComplex& s, const RandomComplex& t) {
    const ChainComplex& cs = s.complex;
    const ChainComplex& ct = t.complex;
    const bool periodic = cs.grading() == Grading::Mod2;
    const std::vector<int> degs = cs.degrees();
    auto idx = [&](int k) -> std::size_t {
        if (periodic) return static_cast<std::size_t>(((k % 2) + 2) % 2);
        return static_cast<std::size_t>(k - s.lo);
    };
    auto valid = [&](int k) { return periodic || (k >= s.lo && k < s.lo + static_cast<int>(s.ranks.size())); };
    auto rank_of = [&](const RandomComplex& c, int k) -> std::size_t { return valid(k) ? c.ranks[idx(k)] : 0; };

    // M_k on the (sources at k, targets at k+1) pairs.
    std::map<int, Mat> m;
    for (int k : degs) m[k] = random_matrix(rank_of(t, k), rank_of(s, k), rng);
    auto get_m = [&](int k) {
        const int kk = periodic ? static_cast<int>(idx(k)) : k;
        auto it = m.find(kk);
        return it == m.end() ? zeros(rank_of(t, k), rank_of(s, k)) : it->second;
    };

    std::map<int, BitMatrix> comps;
    for (int k : degs) {
        const std::size_t ns = cs.dim(k);
        const std::size_t nt = ct.dim(k);
        const std::size_t s_tgt = rank_of(s, k - 1), s_src = rank_of(s, k);
        const std::size_t t_tgt = rank_of(t, k - 1), t_src = rank_of(t, k);
        Mat f = zeros(nt, ns);
        const Mat mk = get_m(k), mk1 = get_m(k - 1);
        for (std::size_t i = 0; i < t_tgt; ++i)
            for (std::size_t j = 0; j < s_tgt; ++j) f[i][j] = mk1[i][j];
        for (std::size_t i = 0; i < t_src; ++i)
            for (std::size_t j = 0; j < s_src; ++j) f[t_tgt + i][s_tgt + j] = mk[i][j];
        // Columns outside the boundary block may pick up any cycle of T.
        for (std::size_t i = 0; i < nt; ++i) {
            if (i >= t_tgt && i < t_tgt + t_src) continue;
            for (std::size_t j = s_tgt; j < ns; ++j) f[i][j] = static_cast<int>(rng() & 1);
        }
        const Mat conj = mul(mul(t.basis_change[idx(k)], f, nt), inverse(s.basis_change[idx(k)]), ns);
        comps[k] = to_bits(conj, nt, ns);
    }
    // Null-homotopic term d h + h d with h: S^k -> T^{k-1}.
    std::map<int, BitMatrix> h;
    for (int k : degs)
        h[k] = to_bits(random_matrix(ct.dim(k - 1), cs.dim(k), rng), ct.dim(k - 1), cs.dim(k));
    auto get_h = [&](int k) {
        const int kk = periodic ? static_cast<int>(idx(k)) : k;
        auto it = h.find(kk);
        return it == h.end() ? BitMatrix::zero(ct.dim(k - 1), cs.dim(k)) : it->second;
    };
    for (int k : degs) comps[k] = comps[k] + ct.diff(k - 1) * get_h(k) + get_h(k + 1) * cs.diff(k);
    return dtwist::gf2::make_chain_map(cs, ct, comps);
}

std::map<int, std::size_t> homology_ranks(const ChainComplex& c) {
    std::map<int, std::size_t> out;
    for (int k : c.degrees()) {
        const int rk = rank(to_mat(c.diff(k)));
        const int rk_prev = rank(to_mat(c.diff(k - 1)));
        out[k] = c.dim(k) - static_cast<std::size_t>(rk) - static_cast<std::size_t>(rk_prev);
    }
    return out;
}

BitMatrix brute_force_induced(const ChainMap& f, const Homology& hs, const Homology& ht, int degree) {
    const std::size_t rs = hs.ranks.at(degree);
    const std::size_t rt = ht.ranks.at(degree);
    const std::size_t dim = f.target.dim(degree);
    BitMatrix out(rt, rs);
    if (rs == 0 || rt == 0) return out;
    const int k = f.source.normalize(degree);
    const Mat bound = to_mat(f.target.diff(k - 1));
    std::vector<Vec> bounds;
    for (std::size_t j = 0; j < f.target.dim(k - 1); ++j) {
        Vec col(dim);
        for (std::size_t i = 0; i < dim; ++i) col[i] = bound[i][j];
        bounds.push_back(col);
    }
    const Mat fk = to_mat(f.at(k));
    const auto& src_reps = hs.representatives.at(k);
    const auto& tgt_reps = ht.representatives.at(k);
    for (std::size_t j = 0; j < rs; ++j) {
        Vec w(dim, 0);
        for (std::size_t i = 0; i < dim; ++i) {
            int acc = 0;
            for (std::size_t q = 0; q < src_reps[j].size(); ++q) acc += fk[i][q] * src_reps[j][q];
            w[i] = acc % 2;
        }
        int found = 0;
        for (std::size_t mask = 0; mask < (std::size_t{1} << rt); ++mask) {
            Vec diff = w;
            for (std::size_t b = 0; b < rt; ++b)
                if (mask >> b & 1)
                    for (std::size_t i = 0; i < dim; ++i) diff[i] ^= tgt_reps[b][i];
            if (in_span(bounds, diff, dim)) {
                ++found;
                for (std::size_t b = 0; b < rt; ++b) out.set(b, j, (mask >> b & 1) != 0);
            }
        }
        if (found != 1) throw std::runtime_error("brute_force_induced: class not uniquely determined");
    }
    return out;
}

}  // namespace oracle
