#pragma once

#include "weave/bitmatrix.hpp"

namespace weave {

/// Exponents (k, l) of the shift action A -> P^k A P^l, both reduced modulo n.
struct ShiftPair {
    int k = 0;
    int l = 0;

    /// Reduces arbitrary non-negative exponents modulo n.
    static ShiftPair reduced(long long k, long long l, int n);

    friend bool operator==(const ShiftPair&, const ShiftPair&) = default;
};

/// Full-cycle permutation matrix: P(i, i+1 mod n) = 1.
BitMatrix shift_p(int n);

/// Anti-diagonal permutation matrix: S(i, n-1-i) = 1.
BitMatrix shift_s(int n);

/// a^k under logical_product; a^0 is the identity.
BitMatrix power(const BitMatrix& a, long long k);

/// P^k * A: row i of the result is row i+k (mod n) of A.
BitMatrix rotate_rows_up(const BitMatrix& a, long long k);

/// A * P^l: each application moves the last column to the front.
BitMatrix rotate_cols(const BitMatrix& a, long long l);

/// P^k * A * P^l. Throws OutOfRange if g is not reduced for a.order().
BitMatrix act(const BitMatrix& a, ShiftPair g);

/// A * S: column order reversed.
BitMatrix mirror(const BitMatrix& a);

/// S * transpose(A): A turned a quarter counterclockwise, result(i,j) = A(j, n-1-i).
BitMatrix rotate90(const BitMatrix& a);

/// Rotates the low n bits of w right by s (bit 0 wraps to bit n-1).
constexpr Word rotate_word_right(Word w, int s, int n) noexcept {
    if (s == 0) return w;
    return ((w >> s) | (w << (n - s))) & full_mask(n);
}

/// Reverses the low n bits of w.
Word reverse_word(Word w, int n) noexcept;

}  // namespace weave
