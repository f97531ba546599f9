#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace edgemin {

using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

constexpr std::size_t words_for(std::size_t bits) noexcept {
    return (bits + kWordBits - 1) / kWordBits;
}

/// Dense binary matrix over GF(2), stored row-major as packed 64-bit words.
///
/// Rows are contiguous so that row operations are word-wise XORs. Padding bits
/// past `cols()` in each row are kept at zero.
class Gf2Matrix {
public:
    Gf2Matrix() = default;
    Gf2Matrix(std::size_t rows, std::size_t cols);

    static Gf2Matrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    std::size_t words_per_row() const noexcept { return words_; }

    bool get(std::size_t r, std::size_t c) const noexcept {
        return (bits_[r * words_ + c / kWordBits] >> (c % kWordBits)) & 1U;
    }
    void set(std::size_t r, std::size_t c, bool value) noexcept {
        Word& w = bits_[r * words_ + c / kWordBits];
        const Word mask = Word{1} << (c % kWordBits);
        w = value ? (w | mask) : (w & ~mask);
    }
    void flip(std::size_t r, std::size_t c) noexcept {
        bits_[r * words_ + c / kWordBits] ^= Word{1} << (c % kWordBits);
    }

    std::span<Word> row(std::size_t r) noexcept { return {bits_.data() + r * words_, words_}; }
    std::span<const Word> row(std::size_t r) const noexcept {
        return {bits_.data() + r * words_, words_};
    }

    /// row(dst) ^= row(src)
    void add_row(std::size_t dst, std::size_t src) noexcept;
    void swap_rows(std::size_t a, std::size_t b) noexcept;

    bool is_zero() const noexcept;
    bool row_is_zero(std::size_t r) const noexcept;

    Gf2Matrix transpose() const;
    Gf2Matrix operator*(const Gf2Matrix& rhs) const;
    Gf2Matrix operator+(const Gf2Matrix& rhs) const;
    Gf2Matrix& operator+=(const Gf2Matrix& rhs);

    /// Vertical stack [this; below]. Column counts must agree.
    Gf2Matrix stack(const Gf2Matrix& below) const;
    /// Horizontal concatenation [this right].
    Gf2Matrix concat(const Gf2Matrix& right) const;

    /// Reduced row echelon form in place; returns pivot columns in order.
    /// Pivot choice is deterministic: the lowest-index row holding a one.
    std::vector<std::size_t> row_reduce();

    std::size_t rank() const;

    /// Basis of {x : A x = 0}, one basis vector per row of the result.
    Gf2Matrix null_space() const;

    /// Inverse of a square matrix, or nullopt if singular.
    std::optional<Gf2Matrix> inverse() const;

    /// Matrix-vector product; x is given as a packed row of length cols().
    std::vector<Word> apply(std::span<const Word> x) const;

    std::string to_string() const;

    friend bool operator==(const Gf2Matrix&, const Gf2Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t words_ = 0;
    std::vector<Word> bits_;
};

}  // namespace edgemin
