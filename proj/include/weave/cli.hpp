#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "weave/enumerate.hpp"

namespace weave::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command. args excludes the program name. Everything the command prints
/// goes to out, diagnostics and usage text to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// The key:value block printed by `count`.
std::string format_report(const CountReport& report);

/// Reads a block produced by format_report. b_bar present means all-classes mode.
/// Throws ParseError on malformed or incomplete input.
CountReport parse_report(std::istream& in);

}  // namespace weave::cli
