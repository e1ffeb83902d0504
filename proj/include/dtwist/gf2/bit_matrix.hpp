#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace dtwist::gf2 {

/// Column vector over GF(2), one byte per entry. Small dimensions only.
using BitVector = std::vector<std::uint8_t>;

/**
 * Dense matrix over GF(2) with bit-packed rows.
 *
 * A matrix of shape rows x cols represents a linear map GF(2)^cols ->
 * GF(2)^rows acting on column vectors. Zero-sized shapes are allowed and
 * are used for maps into or out of the zero space.
 */
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols);

    static BitMatrix zero(std::size_t rows, std::size_t cols) { return {rows, cols}; }
    static BitMatrix identity(std::size_t n);
    /// Rows given as 0/1 lists; all rows must have equal length.
    static BitMatrix from_rows(const std::vector<std::vector<int>>& rows);
    static BitMatrix from_columns(std::size_t rows, const std::vector<BitVector>& columns);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    bool get(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, bool value);
    void flip(std::size_t r, std::size_t c);

    BitVector column(std::size_t c) const;
    BitVector row(std::size_t r) const;

    bool is_zero() const;
    bool is_identity() const;
    std::size_t count_ones() const;

    BitMatrix transpose() const;
    BitMatrix operator*(const BitMatrix& rhs) const;
    BitVector operator*(const BitVector& v) const;
    BitMatrix operator+(const BitMatrix& rhs) const;
    bool operator==(const BitMatrix& rhs) const;

    /// Place `block` with its top-left corner at (r, c).
    void paste(const BitMatrix& block, std::size_t r, std::size_t c);
    BitMatrix kronecker(const BitMatrix& rhs) const;

    std::size_t rank() const;
    /**
     * Reduced row echelon form. Pivots are picked left to right, so the
     * pivot columns are the lexicographically smallest independent set.
     */
    BitMatrix rref(std::vector<std::size_t>* pivot_columns = nullptr) const;
    /// Basis of the null space, one vector per free column, in column order.
    std::vector<BitVector> kernel_basis() const;
    /// Columns of `*this` at the pivot positions: a basis of the image.
    std::vector<BitVector> image_basis() const;
    /// Some x with A x = b, or nullopt when b is not in the image.
    std::optional<BitVector> solve(const BitVector& b) const;

    std::string to_string() const;
    std::vector<std::vector<int>> to_rows() const;

private:
    void xor_row_into(std::size_t src, std::size_t dst);
    void swap_rows(std::size_t a, std::size_t b);

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t words_per_row_ = 0;
    std::vector<std::uint64_t> data_;
};

std::ostream& operator<<(std::ostream& os, const BitMatrix& m);

BitVector add(const BitVector& a, const BitVector& b);
bool is_zero(const BitVector& v);
/// Unit vector e_i in GF(2)^n.
BitVector unit(std::size_t n, std::size_t i);

}  // namespace dtwist::gf2
