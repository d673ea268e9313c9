#pragma once

#include <vector>

#include "weave/bitmatrix.hpp"
#include "weave/transform.hpp"

namespace weave {

/// One equivalence class under cyclic row and column shifts.
struct ClassRecord {
    BitMatrix canonical;
    int orbit_size = 0;
    bool is_interweaving = false;
    bool self_mirror = false;      // only ever true for interweavings
    bool rotation_stable = false;  // only ever true for interweavings

    friend bool operator==(const ClassRecord&, const ClassRecord&) = default;
};

/// All distinct shift images of a, sorted lexicographically.
std::vector<BitMatrix> orbit(const BitMatrix& a);

/// Number of distinct shift images, computed as n^2 / |stabilizer|.
int orbit_size(const BitMatrix& a);

/// Lexicographically least element of the orbit of a.
BitMatrix canonical(const BitMatrix& a);

/// True iff no shift image of a is lexicographically smaller. Stops at the first smaller image.
bool is_canonical(const BitMatrix& a);

/// Membership in Q_n: every row and every column holds at least one 0 and one 1.
/// Q_1 is empty.
bool in_q(const BitMatrix& a);

/// A ~ mirror(A). Throws NotAnInterweaving unless in_q(a).
bool is_self_mirror(const BitMatrix& a);

/// A ~ rotate90(A). Throws NotAnInterweaving unless in_q(a).
bool is_rotation_stable(const BitMatrix& a);

/// Canonical form, orbit size and flags of the class of a. Flags are false outside Q_n.
ClassRecord classify(const BitMatrix& a);

/// classify() for a matrix already known to be canonical; skips the canonicalization pass.
ClassRecord classify_canonical(const BitMatrix& canonical_form);

}  // namespace weave
