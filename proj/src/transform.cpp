#include "weave/transform.hpp"

#include <string>

namespace weave {

namespace {

int reduce(long long e, int n) {
    if (e < 0) throw OutOfRange("shift exponent " + std::to_string(e) + " is negative");
    return static_cast<int>(e % n);
}

}  // namespace

ShiftPair ShiftPair::reduced(long long k, long long l, int n) {
    if (n < 1) throw OutOfRange("matrix order " + std::to_string(n) + " outside [1, 32]");
    return ShiftPair{reduce(k, n), reduce(l, n)};
}

BitMatrix shift_p(int n) {
    RowBuilder out(n);
    for (int i = 0; i < n; ++i) out.set_row(i, column_bit(n, (i + 1) % n));
    return out.build();
}

BitMatrix shift_s(int n) {
    RowBuilder out(n);
    for (int i = 0; i < n; ++i) out.set_row(i, column_bit(n, n - 1 - i));
    return out.build();
}

BitMatrix power(const BitMatrix& a, long long k) {
    if (k < 0) throw OutOfRange("negative matrix power");
    BitMatrix result = BitMatrix::identity(a.order());
    BitMatrix base = a;
    while (k > 0) {
        if (k & 1) result = logical_product(result, base);
        base = logical_product(base, base);
        k >>= 1;
    }
    return result;
}

BitMatrix rotate_rows_up(const BitMatrix& a, long long k) {
    const int n = a.order();
    const int s = reduce(k, n);
    RowBuilder out(n);
    for (int i = 0; i < n; ++i) out.set_row(i, a.row_unchecked((i + s) % n));
    return out.build();
}

BitMatrix rotate_cols(const BitMatrix& a, long long l) {
    const int n = a.order();
    const int s = reduce(l, n);
    RowBuilder out(n);
    for (int i = 0; i < n; ++i) out.set_row(i, rotate_word_right(a.row_unchecked(i), s, n));
    return out.build();
}

BitMatrix act(const BitMatrix& a, ShiftPair g) {
    const int n = a.order();
    if (g.k < 0 || g.k >= n || g.l < 0 || g.l >= n) {
        throw OutOfRange("shift pair (" + std::to_string(g.k) + ", " + std::to_string(g.l) +
                         ") not reduced modulo " + std::to_string(n));
    }
    RowBuilder out(n);
    for (int i = 0; i < n; ++i) {
        out.set_row(i, rotate_word_right(a.row_unchecked((i + g.k) % n), g.l, n));
    }
    return out.build();
}

Word reverse_word(Word w, int n) noexcept {
    Word r = 0;
    for (int j = 0; j < n; ++j) {
        r = (r << 1) | (w & 1);
        w >>= 1;
    }
    return r;
}

BitMatrix mirror(const BitMatrix& a) {
    const int n = a.order();
    RowBuilder out(n);
    for (int i = 0; i < n; ++i) out.set_row(i, reverse_word(a.row_unchecked(i), n));
    return out.build();
}

BitMatrix rotate90(const BitMatrix& a) {
    const int n = a.order();
    RowBuilder out(n);
    // Row i of the result is column n-1-i of a, read top to bottom.
    for (int i = 0; i < n; ++i) {
        const Word src_bit = column_bit(n, n - 1 - i);
        Word r = 0;
        for (int j = 0; j < n; ++j) {
            if (a.row_unchecked(j) & src_bit) r |= column_bit(n, j);
        }
        out.set_row(i, r);
    }
    return out.build();
}

}  // namespace weave
