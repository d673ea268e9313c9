#include "weave/classify.hpp"

#include <algorithm>
#include <array>
#include <string>

namespace weave {

namespace {

using Rows = std::array<Word, kMaxOrder>;

// Writes act(a, (k, l)) into out without building a BitMatrix.
inline void image_rows(const BitMatrix& a, int k, int l, Rows& out) noexcept {
    const int n = a.order();
    for (int i = 0; i < n; ++i) out[i] = rotate_word_right(a.row_unchecked((i + k) % n), l, n);
}

// -1, 0, +1 comparing the image (k, l) of a against reference rows.
inline int compare_image(const BitMatrix& a, int k, int l, const Rows& ref) noexcept {
    const int n = a.order();
    for (int i = 0; i < n; ++i) {
        const Word w = rotate_word_right(a.row_unchecked((i + k) % n), l, n);
        if (w != ref[i]) return w < ref[i] ? -1 : 1;
    }
    return 0;
}

void require_interweaving(const BitMatrix& a, const char* predicate) {
    if (!in_q(a)) {
        throw NotAnInterweaving(std::string(predicate) +
                                " is defined only for matrices with a 0 and a 1 in every row "
                                "and column");
    }
}

}  // namespace

std::vector<BitMatrix> orbit(const BitMatrix& a) {
    const int n = a.order();
    std::vector<BitMatrix> images;
    images.reserve(static_cast<std::size_t>(n) * n);
    for (int k = 0; k < n; ++k) {
        for (int l = 0; l < n; ++l) images.push_back(act(a, ShiftPair{k, l}));
    }
    std::sort(images.begin(), images.end(), LexLess{});
    images.erase(std::unique(images.begin(), images.end()), images.end());
    return images;
}

int orbit_size(const BitMatrix& a) {
    const int n = a.order();
    Rows self{};
    std::copy(a.rows().begin(), a.rows().end(), self.begin());
    int fixed = 0;
    for (int k = 0; k < n; ++k) {
        for (int l = 0; l < n; ++l) fixed += compare_image(a, k, l, self) == 0;
    }
    return n * n / fixed;
}

BitMatrix canonical(const BitMatrix& a) {
    const int n = a.order();
    Rows best{};
    std::copy(a.rows().begin(), a.rows().end(), best.begin());
    for (int k = 0; k < n; ++k) {
        for (int l = 0; l < n; ++l) {
            if (compare_image(a, k, l, best) < 0) image_rows(a, k, l, best);
        }
    }
    return BitMatrix::from_rows(n, std::span<const Word>(best.data(), static_cast<std::size_t>(n)));
}

bool is_canonical(const BitMatrix& a) {
    const int n = a.order();
    const Word first = a.row_unchecked(0);
    Rows self{};
    std::copy(a.rows().begin(), a.rows().end(), self.begin());
    for (int k = 0; k < n; ++k) {
        const Word lead = a.row_unchecked(k);
        for (int l = 0; l < n; ++l) {
            // The image's first row alone often decides the comparison.
            const Word w = rotate_word_right(lead, l, n);
            if (w > first) continue;
            if (w < first) return false;
            if (compare_image(a, k, l, self) < 0) return false;
        }
    }
    return true;
}

bool in_q(const BitMatrix& a) {
    const int n = a.order();
    const Word mask = full_mask(n);
    Word any = 0;
    Word all = mask;
    for (int i = 0; i < n; ++i) {
        const Word w = a.row_unchecked(i);
        if (w == 0 || w == mask) return false;
        any |= w;
        all &= w;
    }
    return any == mask && all == 0;
}

bool is_self_mirror(const BitMatrix& a) {
    require_interweaving(a, "self-mirror");
    return canonical(a) == canonical(mirror(a));
}

bool is_rotation_stable(const BitMatrix& a) {
    require_interweaving(a, "rotation-stable");
    return canonical(a) == canonical(rotate90(a));
}

ClassRecord classify_canonical(const BitMatrix& canonical_form) {
    ClassRecord rec{canonical_form, orbit_size(canonical_form), in_q(canonical_form), false,
                    false};
    if (rec.is_interweaving) {
        rec.self_mirror = canonical(mirror(canonical_form)) == canonical_form;
        rec.rotation_stable = canonical(rotate90(canonical_form)) == canonical_form;
    }
    return rec;
}

ClassRecord classify(const BitMatrix& a) { return classify_canonical(canonical(a)); }

}  // namespace weave
