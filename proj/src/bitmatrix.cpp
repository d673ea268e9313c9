#include "weave/bitmatrix.hpp"

#include <string>

namespace weave {

namespace {

void check_order(int n) {
    if (n < 1 || n > kMaxOrder) {
        throw OutOfRange("matrix order " + std::to_string(n) + " outside [1, 32]");
    }
}

void check_same_order(const BitMatrix& a, const BitMatrix& b) {
    if (a.order() != b.order()) throw DimensionMismatch(a.order(), b.order());
}

void check_index(const BitMatrix& a, int i, const char* what) {
    if (i < 0 || i >= a.order()) {
        throw OutOfRange(std::string(what) + " index " + std::to_string(i) +
                         " outside [0, " + std::to_string(a.order()) + ")");
    }
}

}  // namespace

RowBuilder::RowBuilder(int n) {
    check_order(n);
    m_.n_ = n;
}

BitMatrix BitMatrix::from_rows(int n, std::span<const Word> rows) {
    check_order(n);
    if (rows.size() != static_cast<std::size_t>(n)) {
        throw OutOfRange("expected " + std::to_string(n) + " row words, got " +
                         std::to_string(rows.size()));
    }
    const Word mask = full_mask(n);
    RowBuilder out(n);
    for (int i = 0; i < n; ++i) {
        const Word w = rows[static_cast<std::size_t>(i)];
        if ((w & ~mask) != 0) {
            throw OutOfRange("row " + std::to_string(i) + " word " + std::to_string(w) +
                             " exceeds 2^" + std::to_string(n) + " - 1");
        }
        out.set_row(i, w);
    }
    return out.build();
}

BitMatrix BitMatrix::zero(int n) { return RowBuilder(n).build(); }

BitMatrix BitMatrix::ones(int n) {
    RowBuilder out(n);
    for (int i = 0; i < n; ++i) out.set_row(i, full_mask(n));
    return out.build();
}

BitMatrix BitMatrix::identity(int n) {
    RowBuilder out(n);
    for (int i = 0; i < n; ++i) out.set_row(i, column_bit(n, i));
    return out.build();
}

Word BitMatrix::row(int i) const {
    check_index(*this, i, "row");
    return row_unchecked(i);
}

bool BitMatrix::get(int i, int j) const {
    check_index(*this, i, "row");
    check_index(*this, j, "column");
    return (row_unchecked(i) & column_bit(n_, j)) != 0;
}

BitMatrix BitMatrix::set(int i, int j, bool value) const {
    check_index(*this, i, "row");
    check_index(*this, j, "column");
    BitMatrix out = *this;
    Word& w = out.rows_[static_cast<std::size_t>(i)];
    w = value ? (w | column_bit(n_, j)) : (w & ~column_bit(n_, j));
    return out;
}

BitMatrix elem_and(const BitMatrix& a, const BitMatrix& b) {
    check_same_order(a, b);
    RowBuilder out(a.order());
    for (int i = 0; i < a.order(); ++i) out.set_row(i, a.row_unchecked(i) & b.row_unchecked(i));
    return out.build();
}

BitMatrix elem_or(const BitMatrix& a, const BitMatrix& b) {
    check_same_order(a, b);
    RowBuilder out(a.order());
    for (int i = 0; i < a.order(); ++i) out.set_row(i, a.row_unchecked(i) | b.row_unchecked(i));
    return out.build();
}

BitMatrix elem_not(const BitMatrix& a) {
    const Word mask = full_mask(a.order());
    RowBuilder out(a.order());
    for (int i = 0; i < a.order(); ++i) out.set_row(i, a.row_unchecked(i) ^ mask);
    return out.build();
}

BitMatrix transpose(const BitMatrix& a) {
    const int n = a.order();
    RowBuilder out(n);
    for (int i = 0; i < n; ++i) {
        const Word src = a.row_unchecked(i);
        const int dst_shift = n - 1 - i;
        for (int j = 0; j < n; ++j) out[j] |= ((src >> (n - 1 - j)) & 1u) << dst_shift;
    }
    return out.build();
}

BitMatrix logical_product(const BitMatrix& a, const BitMatrix& b) {
    check_same_order(a, b);
    const int n = a.order();
    // Column j of b is row j of its transpose, so each cell is one AND plus a zero test.
    const BitMatrix bt = transpose(b);
    RowBuilder out(n);
    for (int i = 0; i < n; ++i) {
        const Word ai = a.row_unchecked(i);
        Word r = 0;
        for (int j = 0; j < n; ++j) {
            r |= static_cast<Word>((ai & bt.row_unchecked(j)) != 0) << (n - 1 - j);
        }
        out.set_row(i, r);
    }
    return out.build();
}

bool lex_less(const BitMatrix& a, const BitMatrix& b) {
    check_same_order(a, b);
    for (int i = 0; i < a.order(); ++i) {
        const Word x = a.row_unchecked(i);
        const Word y = b.row_unchecked(i);
        if (x != y) return x < y;
    }
    return false;
}

}  // namespace weave
