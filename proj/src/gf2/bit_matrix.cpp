#include "dtwist/gf2/bit_matrix.hpp"

#include <bit>
#include <ostream>
#include <sstream>
#include <utility>

#include "dtwist/errors.hpp"

namespace dtwist::gf2 {

namespace {
constexpr std::size_t kWordBits = 64;

std::size_t words_for(std::size_t cols) { return (cols + kWordBits - 1) / kWordBits; }
}  // namespace

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), words_per_row_(words_for(cols)), data_(rows * words_for(cols), 0) {}

BitMatrix BitMatrix::identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

BitMatrix BitMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
    if (rows.empty()) return {};
    const std::size_t cols = rows.front().size();
    BitMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw ShapeError("from_rows: ragged rows");
        for (std::size_t c = 0; c < cols; ++c) m.set(r, c, (rows[r][c] & 1) != 0);
    }
    return m;
}

BitMatrix BitMatrix::from_columns(std::size_t rows, const std::vector<BitVector>& columns) {
    BitMatrix m(rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (columns[c].size() != rows) throw ShapeError("from_columns: column length mismatch");
        for (std::size_t r = 0; r < rows; ++r) m.set(r, c, columns[c][r] != 0);
    }
    return m;
}

bool BitMatrix::get(std::size_t r, std::size_t c) const {
    return (data_[r * words_per_row_ + c / kWordBits] >> (c % kWordBits)) & 1u;
}

void BitMatrix::set(std::size_t r, std::size_t c, bool value) {
    auto& w = data_[r * words_per_row_ + c / kWordBits];
    const std::uint64_t mask = std::uint64_t{1} << (c % kWordBits);
    if (value)
        w |= mask;
    else
        w &= ~mask;
}

void BitMatrix::flip(std::size_t r, std::size_t c) {
    data_[r * words_per_row_ + c / kWordBits] ^= std::uint64_t{1} << (c % kWordBits);
}

BitVector BitMatrix::column(std::size_t c) const {
    BitVector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = get(r, c);
    return v;
}

BitVector BitMatrix::row(std::size_t r) const {
    BitVector v(cols_);
    for (std::size_t c = 0; c < cols_; ++c) v[c] = get(r, c);
    return v;
}

bool BitMatrix::is_zero() const {
    for (auto w : data_)
        if (w != 0) return false;
    return true;
}

bool BitMatrix::is_identity() const {
    if (rows_ != cols_) return false;
    return *this == identity(rows_);
}

std::size_t BitMatrix::count_ones() const {
    std::size_t n = 0;
    for (auto w : data_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
}

BitMatrix BitMatrix::transpose() const {
    BitMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (get(r, c)) t.set(c, r, true);
    return t;
}

BitMatrix BitMatrix::operator*(const BitMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw ShapeError("matrix product: inner dimensions differ");
    BitMatrix out(rows_, rhs.cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        std::uint64_t* dst = &out.data_[r * out.words_per_row_];
        for (std::size_t k = 0; k < cols_; ++k) {
            if (!get(r, k)) continue;
            const std::uint64_t* src = &rhs.data_[k * rhs.words_per_row_];
            for (std::size_t w = 0; w < out.words_per_row_; ++w) dst[w] ^= src[w];
        }
    }
    return out;
}

BitVector BitMatrix::operator*(const BitVector& v) const {
    if (v.size() != cols_) throw ShapeError("matrix-vector product: length mismatch");
    BitVector out(rows_, 0);
    for (std::size_t r = 0; r < rows_; ++r) {
        std::uint8_t acc = 0;
        for (std::size_t c = 0; c < cols_; ++c) acc ^= static_cast<std::uint8_t>(get(r, c) & (v[c] & 1));
        out[r] = acc;
    }
    return out;
}

BitMatrix BitMatrix::operator+(const BitMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw ShapeError("matrix sum: shapes differ");
    BitMatrix out = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] ^= rhs.data_[i];
    return out;
}

bool BitMatrix::operator==(const BitMatrix& rhs) const {
    return rows_ == rhs.rows_ && cols_ == rhs.cols_ && data_ == rhs.data_;
}

void BitMatrix::paste(const BitMatrix& block, std::size_t r, std::size_t c) {
    if (r + block.rows_ > rows_ || c + block.cols_ > cols_) throw ShapeError("paste: block out of range");
    for (std::size_t i = 0; i < block.rows_; ++i)
        for (std::size_t j = 0; j < block.cols_; ++j) set(r + i, c + j, block.get(i, j));
}

BitMatrix BitMatrix::kronecker(const BitMatrix& rhs) const {
    BitMatrix out(rows_ * rhs.rows_, cols_ * rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (get(i, j)) out.paste(rhs, i * rhs.rows_, j * rhs.cols_);
    return out;
}

void BitMatrix::xor_row_into(std::size_t src, std::size_t dst) {
    for (std::size_t w = 0; w < words_per_row_; ++w)
        data_[dst * words_per_row_ + w] ^= data_[src * words_per_row_ + w];
}

void BitMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t w = 0; w < words_per_row_; ++w)
        std::swap(data_[a * words_per_row_ + w], data_[b * words_per_row_ + w]);
}

BitMatrix BitMatrix::rref(std::vector<std::size_t>* pivot_columns) const {
    BitMatrix m = *this;
    std::vector<std::size_t> pivots;
    std::size_t lead = 0;
    for (std::size_t c = 0; c < cols_ && lead < rows_; ++c) {
        std::size_t p = lead;
        while (p < rows_ && !m.get(p, c)) ++p;
        if (p == rows_) continue;
        m.swap_rows(p, lead);
        for (std::size_t r = 0; r < rows_; ++r)
            if (r != lead && m.get(r, c)) m.xor_row_into(lead, r);
        pivots.push_back(c);
        ++lead;
    }
    if (pivot_columns) *pivot_columns = std::move(pivots);
    return m;
}

std::size_t BitMatrix::rank() const {
    std::vector<std::size_t> pivots;
    rref(&pivots);
    return pivots.size();
}

std::vector<BitVector> BitMatrix::kernel_basis() const {
    std::vector<std::size_t> pivots;
    const BitMatrix r = rref(&pivots);
    std::vector<int> pivot_row(cols_, -1);
    for (std::size_t i = 0; i < pivots.size(); ++i) pivot_row[pivots[i]] = static_cast<int>(i);
    std::vector<BitVector> basis;
    for (std::size_t free = 0; free < cols_; ++free) {
        if (pivot_row[free] >= 0) continue;
        BitVector v(cols_, 0);
        v[free] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i)
            if (r.get(i, free)) v[pivots[i]] = 1;
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<BitVector> BitMatrix::image_basis() const {
    std::vector<std::size_t> pivots;
    rref(&pivots);
    std::vector<BitVector> basis;
    basis.reserve(pivots.size());
    for (auto c : pivots) basis.push_back(column(c));
    return basis;
}

std::optional<BitVector> BitMatrix::solve(const BitVector& b) const {
    if (b.size() != rows_) throw ShapeError("solve: right-hand side length mismatch");
    BitMatrix aug(rows_, cols_ + 1);
    aug.paste(*this, 0, 0);
    for (std::size_t r = 0; r < rows_; ++r) aug.set(r, cols_, b[r] != 0);
    std::vector<std::size_t> pivots;
    const BitMatrix red = aug.rref(&pivots);
    if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;
    BitVector x(cols_, 0);
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = red.get(i, cols_);
    return x;
}

std::vector<std::vector<int>> BitMatrix::to_rows() const {
    std::vector<std::vector<int>> out(rows_, std::vector<int>(cols_, 0));
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) out[r][c] = get(r, c) ? 1 : 0;
    return out;
}

std::string BitMatrix::to_string() const {
    std::ostringstream os;
    os << *this;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const BitMatrix& m) {
    os << '(';
    for (std::size_t r = 0; r < m.rows(); ++r) {
        if (r) os << ',';
        os << '(';
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (c) os << ',';
            os << (m.get(r, c) ? 1 : 0);
        }
        os << ')';
    }
    return os << ')';
}

BitVector add(const BitVector& a, const BitVector& b) {
    if (a.size() != b.size()) throw ShapeError("vector sum: length mismatch");
    BitVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = static_cast<std::uint8_t>((a[i] ^ b[i]) & 1);
    return out;
}

bool is_zero(const BitVector& v) {
    for (auto x : v)
        if (x & 1) return false;
    return true;
}

BitVector unit(std::size_t n, std::size_t i) {
    BitVector v(n, 0);
    v.at(i) = 1;
    return v;
}

}  // namespace dtwist::gf2
