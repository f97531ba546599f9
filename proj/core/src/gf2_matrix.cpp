#include "edgemin/gf2_matrix.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace edgemin {

Gf2Matrix::Gf2Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), words_(words_for(cols)), bits_(rows * words_for(cols), 0) {}

Gf2Matrix Gf2Matrix::identity(std::size_t n) {
    Gf2Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

void Gf2Matrix::add_row(std::size_t dst, std::size_t src) noexcept {
    Word* d = bits_.data() + dst * words_;
    const Word* s = bits_.data() + src * words_;
    for (std::size_t w = 0; w < words_; ++w) d[w] ^= s[w];
}

void Gf2Matrix::swap_rows(std::size_t a, std::size_t b) noexcept {
    if (a == b) return;
    std::swap_ranges(bits_.begin() + static_cast<std::ptrdiff_t>(a * words_),
                     bits_.begin() + static_cast<std::ptrdiff_t>((a + 1) * words_),
                     bits_.begin() + static_cast<std::ptrdiff_t>(b * words_));
}

bool Gf2Matrix::is_zero() const noexcept {
    return std::all_of(bits_.begin(), bits_.end(), [](Word w) { return w == 0; });
}

bool Gf2Matrix::row_is_zero(std::size_t r) const noexcept {
    const auto rw = row(r);
    return std::all_of(rw.begin(), rw.end(), [](Word w) { return w == 0; });
}

Gf2Matrix Gf2Matrix::transpose() const {
    Gf2Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t w = 0; w < words_; ++w) {
            Word bits = bits_[r * words_ + w];
            while (bits) {
                const std::size_t c = w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits));
                t.set(c, r, true);
                bits &= bits - 1;
            }
        }
    }
    return t;
}

Gf2Matrix Gf2Matrix::operator*(const Gf2Matrix& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("Gf2Matrix: dimension mismatch in product");
    Gf2Matrix out(rows_, rhs.cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        Word* dst = out.bits_.data() + r * out.words_;
        for (std::size_t w = 0; w < words_; ++w) {
            Word bits = bits_[r * words_ + w];
            while (bits) {
                const std::size_t k = w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits));
                const Word* src = rhs.bits_.data() + k * rhs.words_;
                for (std::size_t x = 0; x < out.words_; ++x) dst[x] ^= src[x];
                bits &= bits - 1;
            }
        }
    }
    return out;
}

Gf2Matrix Gf2Matrix::operator+(const Gf2Matrix& rhs) const {
    Gf2Matrix out = *this;
    out += rhs;
    return out;
}

Gf2Matrix& Gf2Matrix::operator+=(const Gf2Matrix& rhs) {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw std::invalid_argument("Gf2Matrix: dimension mismatch in sum");
    for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] ^= rhs.bits_[i];
    return *this;
}

Gf2Matrix Gf2Matrix::stack(const Gf2Matrix& below) const {
    if (cols_ != below.cols_) throw std::invalid_argument("Gf2Matrix: column mismatch in stack");
    Gf2Matrix out(rows_ + below.rows_, cols_);
    std::copy(bits_.begin(), bits_.end(), out.bits_.begin());
    std::copy(below.bits_.begin(), below.bits_.end(),
              out.bits_.begin() + static_cast<std::ptrdiff_t>(bits_.size()));
    return out;
}

Gf2Matrix Gf2Matrix::concat(const Gf2Matrix& right) const {
    if (rows_ != right.rows_) throw std::invalid_argument("Gf2Matrix: row mismatch in concat");
    Gf2Matrix out(rows_, cols_ + right.cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c)
            if (get(r, c)) out.set(r, c, true);
        for (std::size_t c = 0; c < right.cols_; ++c)
            if (right.get(r, c)) out.set(r, cols_ + c, true);
    }
    return out;
}

std::vector<std::size_t> Gf2Matrix::row_reduce() {
    std::vector<std::size_t> pivots;
    std::size_t lead = 0;
    for (std::size_t c = 0; c < cols_ && lead < rows_; ++c) {
        std::size_t pivot = rows_;
        for (std::size_t r = lead; r < rows_; ++r) {
            if (get(r, c)) {
                pivot = r;
                break;
            }
        }
        if (pivot == rows_) continue;
        swap_rows(pivot, lead);
        for (std::size_t r = 0; r < rows_; ++r)
            if (r != lead && get(r, c)) add_row(r, lead);
        pivots.push_back(c);
        ++lead;
    }
    return pivots;
}

std::size_t Gf2Matrix::rank() const {
    Gf2Matrix copy = *this;
    return copy.row_reduce().size();
}

Gf2Matrix Gf2Matrix::null_space() const {
    Gf2Matrix reduced = *this;
    const auto pivots = reduced.row_reduce();
    std::vector<bool> is_pivot(cols_, false);
    for (std::size_t c : pivots) is_pivot[c] = true;

    Gf2Matrix basis(cols_ - pivots.size(), cols_);
    std::size_t b = 0;
    for (std::size_t free_col = 0; free_col < cols_; ++free_col) {
        if (is_pivot[free_col]) continue;
        basis.set(b, free_col, true);
        // Pivot row i reads x_{pivot_i} + sum_{free} a_{i,free} x_free = 0.
        for (std::size_t i = 0; i < pivots.size(); ++i)
            if (reduced.get(i, free_col)) basis.set(b, pivots[i], true);
        ++b;
    }
    return basis;
}

std::optional<Gf2Matrix> Gf2Matrix::inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("Gf2Matrix: inverse of non-square matrix");
    const std::size_t n = rows_;
    Gf2Matrix aug = concat(identity(n));
    const auto pivots = aug.row_reduce();
    if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
    Gf2Matrix inv(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            if (aug.get(r, n + c)) inv.set(r, c, true);
    return inv;
}

std::vector<Word> Gf2Matrix::apply(std::span<const Word> x) const {
    std::vector<Word> out(words_for(rows_), 0);
    for (std::size_t r = 0; r < rows_; ++r) {
        Word acc = 0;
        const auto rw = row(r);
        for (std::size_t w = 0; w < words_; ++w) acc ^= rw[w] & x[w];
        if (std::popcount(acc) & 1) out[r / kWordBits] |= Word{1} << (r % kWordBits);
    }
    return out;
}

std::string Gf2Matrix::to_string() const {
    std::string s;
    s.reserve(rows_ * (cols_ + 1));
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) s.push_back(get(r, c) ? '1' : '0');
        s.push_back('\n');
    }
    return s;
}

}  // namespace edgemin
