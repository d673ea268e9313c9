#include "weave/error.hpp"

namespace weave {

DimensionMismatch::DimensionMismatch(int lhs, int rhs)
    : std::invalid_argument("matrix order mismatch: " + std::to_string(lhs) + " vs " +
                            std::to_string(rhs)),
      lhs_(lhs),
      rhs_(rhs) {}

ParseError::ParseError(int line, int column, const std::string& what)
    : std::runtime_error(column > 0 ? "line " + std::to_string(line) + ", column " +
                                          std::to_string(column) + ": " + what
                                    : "line " + std::to_string(line) + ": " + what),
      line_(line),
      column_(column) {}

}  // namespace weave
