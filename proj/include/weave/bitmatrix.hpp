#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "weave/error.hpp"

namespace weave {

using Word = std::uint32_t;

inline constexpr int kMaxOrder = 32;

/// Mask with the low n bits set.
constexpr Word full_mask(int n) noexcept {
    return n >= 32 ? ~Word{0} : (Word{1} << n) - 1;
}

/// Bit of row word i that stores column j of an order-n matrix.
constexpr Word column_bit(int n, int j) noexcept { return Word{1} << (n - 1 - j); }

// n x n binary matrix packed one row per word. Column j lives in bit n-1-j,
// so a row word printed in binary reads left to right like the row itself.
// Values are immutable; every operation returns a new matrix.
class BitMatrix {
public:
    /// Throws OutOfRange if n is not in [1, 32] or a word has bits at positions >= n.
    static BitMatrix from_rows(int n, std::span<const Word> rows);
    static BitMatrix from_rows(int n, std::initializer_list<Word> rows) {
        return from_rows(n, std::span<const Word>(rows.begin(), rows.size()));
    }
    /// Order is taken from the tuple length.
    static BitMatrix from_rows(std::span<const Word> rows) {
        return from_rows(static_cast<int>(rows.size()), rows);
    }

    static BitMatrix zero(int n);
    static BitMatrix ones(int n);
    static BitMatrix identity(int n);

    int order() const noexcept { return n_; }

    Word row(int i) const;
    bool get(int i, int j) const;
    [[nodiscard]] BitMatrix set(int i, int j, bool value) const;

    std::span<const Word> rows() const noexcept {
        return std::span<const Word>(rows_.data(), static_cast<std::size_t>(n_));
    }
    std::vector<Word> to_rows() const { return {rows_.begin(), rows_.begin() + n_}; }

    // Unchecked access for hot loops that already own a valid index.
    Word row_unchecked(int i) const noexcept { return rows_[static_cast<std::size_t>(i)]; }

    friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

private:
    friend class RowBuilder;
    BitMatrix() = default;

    int n_ = 0;
    // Words at positions >= n_ stay zero so defaulted equality is exact.
    std::array<Word, kMaxOrder> rows_{};
};

// Mutable staging area used by operations to assemble a result row by row
// before sealing it into an immutable BitMatrix.
class RowBuilder {
public:
    explicit RowBuilder(int n);
    void set_row(int i, Word w) noexcept { m_.rows_[static_cast<std::size_t>(i)] = w; }
    Word& operator[](int i) noexcept { return m_.rows_[static_cast<std::size_t>(i)]; }
    int order() const noexcept { return m_.n_; }
    BitMatrix build() const noexcept { return m_; }

private:
    BitMatrix m_;
};

BitMatrix elem_and(const BitMatrix& a, const BitMatrix& b);
BitMatrix elem_or(const BitMatrix& a, const BitMatrix& b);
BitMatrix elem_not(const BitMatrix& a);
BitMatrix transpose(const BitMatrix& a);

/// Boolean matrix product: c(i,j) = OR_k a(i,k) AND b(k,j).
BitMatrix logical_product(const BitMatrix& a, const BitMatrix& b);

/// Lexicographic order on row tuples, words compared as unsigned integers.
bool lex_less(const BitMatrix& a, const BitMatrix& b);

inline BitMatrix operator&(const BitMatrix& a, const BitMatrix& b) { return elem_and(a, b); }
inline BitMatrix operator|(const BitMatrix& a, const BitMatrix& b) { return elem_or(a, b); }
inline BitMatrix operator~(const BitMatrix& a) { return elem_not(a); }
inline BitMatrix operator*(const BitMatrix& a, const BitMatrix& b) {
    return logical_product(a, b);
}

/// Comparator for ordered containers; throws DimensionMismatch like lex_less.
struct LexLess {
    bool operator()(const BitMatrix& a, const BitMatrix& b) const { return lex_less(a, b); }
};

}  // namespace weave
