#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "weave/classify.hpp"

namespace weave {

using BigInt = boost::multiprecision::cpp_int;

enum class EnumMode {
    all_classes,    // row words range over [0, 2^n - 1]
    interweavings,  // row words range over [1, 2^n - 2]
};

const char* to_string(EnumMode mode) noexcept;

/// Shard `index` of `total` processes first-row values k_1 with k_1 % total == index.
struct Shard {
    int index = 0;
    int total = 1;

    friend bool operator==(const Shard&, const Shard&) = default;
};

/// Parses "i/t".
Shard parse_shard(const std::string& text);

inline constexpr int kMinEnumOrder = 2;
inline constexpr int kMaxEnumOrder = 8;
/// Orders at or above this need limit_override; they run for hours or longer.
inline constexpr int kGuardedEnumOrder = 6;

struct EnumConfig {
    int n = 2;
    EnumMode mode = EnumMode::interweavings;
    Shard shard{};
    bool limit_override = false;

    /// Throws ConfigError describing the first violated constraint.
    void validate() const;
};

struct CountReport {
    int n = 0;
    EnumMode mode = EnumMode::interweavings;
    std::uint64_t q_count = 0;              // |Q_n|, summed orbit sizes of interweaving classes
    std::optional<std::uint64_t> b_bar;     // |B̄_n|, all_classes mode only
    std::uint64_t q_bar = 0;
    std::uint64_t m_bar = 0;
    std::uint64_t r_bar = 0;
    std::uint64_t candidates_examined = 0;
    std::chrono::duration<double> elapsed{0};

    /// Zero report for merging.
    static CountReport empty(int n, EnumMode mode);

    /// Equality of every count; elapsed is ignored.
    bool same_counts(const CountReport& other) const;
};

using RecordSink = std::function<void(const ClassRecord&)>;
/// Receives (shard index, candidates examined so far). enumerate_parallel calls it from
/// worker threads concurrently.
using ProgressFn = std::function<void(int, std::uint64_t)>;

/// Streams one canonical ClassRecord per class of the configured shard, in ascending
/// lexicographic order of canonical tuples, and returns the counts. The sink may be empty.
CountReport enumerate_classes(const EnumConfig& cfg, const RecordSink& sink = {},
                              const ProgressFn& progress = {},
                              std::uint64_t progress_every = std::uint64_t{1} << 24);

/// Runs shards 0..workers-1 of `base` on worker threads and merges their reports.
/// Records reach the sink on the calling thread in global lexicographic order.
/// base.shard is ignored.
CountReport enumerate_parallel(const EnumConfig& base, int workers, const RecordSink& sink = {},
                               const ProgressFn& progress = {});

/// Field-wise sum of counts; elapsed is the maximum. Throws ConfigError on n or mode mismatch.
CountReport merge_reports(const CountReport& a, const CountReport& b);

/// Number of orbits of the shift group on all 2^(n^2) matrices, by Burnside's lemma.
/// Valid for 2 <= n <= 16.
BigInt burnside_b_bar(int n);

}  // namespace weave
