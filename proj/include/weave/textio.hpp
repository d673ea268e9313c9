#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "weave/bitmatrix.hpp"

namespace weave {

/// n lines of '0'/'1', all of length n. A trailing newline is allowed.
BitMatrix parse_grid(std::string_view text);

/// One line of n decimal row words separated by single spaces.
BitMatrix parse_tuple(std::string_view text);

/// Tuple form if the first non-empty line contains a space, grid form otherwise.
/// A single token such as "1" means the same 1x1 matrix in both forms.
BitMatrix parse_matrix(std::string_view text);

/// "k_1 k_2 ... k_n" without a newline.
std::string format_tuple(const BitMatrix& a);

/// n lines of '0'/'1', each terminated by '\n'.
std::string format_grid(const BitMatrix& a);

/// n lines using '#' for 1 (warp over weft) and '.' for 0.
std::string render_grid(const BitMatrix& a);

/// Plain PBM: "P1\n<n> <n>\n" followed by one line of 0/1 digits per row.
std::string render_pbm(const BitMatrix& a);

}  // namespace weave
