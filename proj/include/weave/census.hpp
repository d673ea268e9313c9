#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace weave {

// Published class counts keyed by (n, key). Keys: q_count, b_bar, q_bar, m_bar, r_bar.
class ExpectedTable {
public:
    /// The reference census for n = 2..6 (n = 6 lacks q_count, which exceeds 2^32 - 1).
    static ExpectedTable reference();

    /// Reads "n key value" lines; '#' starts a comment, blank lines are skipped.
    /// Throws ParseError naming the offending line.
    static ExpectedTable parse(std::istream& in);

    void set(int n, const std::string& key, std::uint64_t value);
    std::optional<std::uint64_t> get(int n, const std::string& key) const;
    const std::map<std::pair<int, std::string>, std::uint64_t>& entries() const noexcept {
        return values_;
    }

    void write(std::ostream& out) const;

private:
    std::map<std::pair<int, std::string>, std::uint64_t> values_;
};

struct CellVerdict {
    int n = 0;
    std::string key;       // e.g. "q_bar", or "b_bar_burnside" for the counting oracle
    std::string method;    // "enumeration" or "burnside"
    std::uint64_t expected = 0;
    std::uint64_t computed = 0;
    bool pass = false;
};

/// Enumerates every n in [2, n_max] in all-classes mode and compares each count with
/// `expected`; Burnside cells cover every n in [2, 6] the table lists b_bar for.
/// Mismatches are reported in the verdicts, never thrown. Throws ConfigError if n_max
/// is outside [2, 5].
std::vector<CellVerdict> verify_table(int n_max, const ExpectedTable& expected,
                                      int workers = 1);

inline bool all_pass(const std::vector<CellVerdict>& cells) {
    for (const auto& c : cells) {
        if (!c.pass) return false;
    }
    return !cells.empty();
}

}  // namespace weave
