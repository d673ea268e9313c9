#include "weave/enumerate.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <queue>
#include <thread>
#include <vector>

namespace weave {

const char* to_string(EnumMode mode) noexcept {
    return mode == EnumMode::all_classes ? "all" : "interweavings";
}

Shard parse_shard(const std::string& text) {
    const auto slash = text.find('/');
    Shard s{};
    auto parse_int = [&](std::string_view part, int& out) {
        const auto* end = part.data() + part.size();
        auto [ptr, ec] = std::from_chars(part.data(), end, out);
        return ec == std::errc{} && ptr == end && !part.empty();
    };
    const std::string_view view(text);
    if (slash == std::string::npos || !parse_int(view.substr(0, slash), s.index) ||
        !parse_int(view.substr(slash + 1), s.total)) {
        throw ConfigError("shard must look like INDEX/TOTAL, got '" + text + "'");
    }
    if (s.total < 1 || s.index < 0 || s.index >= s.total) {
        throw ConfigError("shard index must satisfy 0 <= index < total, got '" + text + "'");
    }
    return s;
}

void EnumConfig::validate() const {
    if (n < kMinEnumOrder || n > kMaxEnumOrder) {
        throw ConfigError("enumeration order " + std::to_string(n) + " outside [" +
                          std::to_string(kMinEnumOrder) + ", " + std::to_string(kMaxEnumOrder) +
                          "]");
    }
    if (n >= kGuardedEnumOrder && !limit_override) {
        throw ConfigError("enumeration of order " + std::to_string(n) +
                          " runs for hours or longer; pass the limit override to proceed");
    }
    if (shard.total < 1 || shard.index < 0 || shard.index >= shard.total) {
        throw ConfigError("shard index must satisfy 0 <= index < total");
    }
}

CountReport CountReport::empty(int n, EnumMode mode) {
    CountReport r;
    r.n = n;
    r.mode = mode;
    if (mode == EnumMode::all_classes) r.b_bar = 0;
    return r;
}

bool CountReport::same_counts(const CountReport& o) const {
    return n == o.n && mode == o.mode && q_count == o.q_count && b_bar == o.b_bar &&
           q_bar == o.q_bar && m_bar == o.m_bar && r_bar == o.r_bar &&
           candidates_examined == o.candidates_examined;
}

CountReport enumerate_classes(const EnumConfig& cfg, const RecordSink& sink,
                              const ProgressFn& progress, std::uint64_t progress_every) {
    cfg.validate();
    const auto start = std::chrono::steady_clock::now();
    const int n = cfg.n;
    const Word mask = full_mask(n);
    const bool all = cfg.mode == EnumMode::all_classes;
    const Word lo = all ? 0 : 1;
    const Word hi = all ? mask : mask - 1;

    CountReport report = CountReport::empty(n, cfg.mode);
    if (progress_every == 0) progress_every = 1;

    // first row value k_1 selects the shard
    for (Word first = lo + static_cast<Word>(cfg.shard.index); first <= hi;
         first += static_cast<Word>(cfg.shard.total)) {
        RowBuilder rows(n);
        // A canonical tuple never has a later row below its first row, so every
        // other row starts at `first` instead of at `lo`.
        for (int i = 0; i < n; ++i) rows.set_row(i, first);

        for (;;) {
            ++report.candidates_examined;
            if (progress && report.candidates_examined % progress_every == 0) {
                progress(cfg.shard.index, report.candidates_examined);
            }

            bool keep = true;
            if (!all) {
                // Rows already avoid 0 and 2^n-1; only the column conditions remain.
                Word any = 0;
                Word every = mask;
                for (int i = 0; i < n; ++i) {
                    any |= rows[i];
                    every &= rows[i];
                }
                keep = any == mask && every == 0;
            }
            if (keep) {
                const BitMatrix candidate = rows.build();
                if (is_canonical(candidate)) {
                    const ClassRecord rec = classify_canonical(candidate);
                    if (report.b_bar) ++*report.b_bar;
                    if (rec.is_interweaving) {
                        ++report.q_bar;
                        report.q_count += static_cast<std::uint64_t>(rec.orbit_size);
                        report.m_bar += rec.self_mirror;
                        report.r_bar += rec.rotation_stable;
                    }
                    if (sink) sink(rec);
                }
            }

            int i = n - 1;
            while (i >= 1 && rows[i] == hi) {
                rows[i] = first;
                --i;
            }
            if (i == 0) break;
            ++rows[i];
        }
    }

    report.elapsed = std::chrono::steady_clock::now() - start;
    return report;
}

CountReport enumerate_parallel(const EnumConfig& base, int workers, const RecordSink& sink,
                               const ProgressFn& progress) {
    if (workers < 1) throw ConfigError("worker count must be at least 1");
    if (workers == 1) {
        EnumConfig cfg = base;
        cfg.shard = Shard{0, 1};
        return enumerate_classes(cfg, sink, progress);
    }

    std::vector<EnumConfig> configs(static_cast<std::size_t>(workers), base);
    for (int s = 0; s < workers; ++s) {
        configs[static_cast<std::size_t>(s)].shard = Shard{s, workers};
        configs[static_cast<std::size_t>(s)].validate();
    }

    std::vector<CountReport> reports(configs.size());
    std::vector<std::vector<ClassRecord>> buffers(configs.size());
    std::vector<std::exception_ptr> errors(configs.size());
    {
        std::vector<std::jthread> threads;
        threads.reserve(configs.size());
        for (std::size_t s = 0; s < configs.size(); ++s) {
            threads.emplace_back([&, s] {
                try {
                    RecordSink local;
                    if (sink) local = [&buf = buffers[s]](const ClassRecord& r) { buf.push_back(r); };
                    reports[s] = enumerate_classes(configs[s], local, progress);
                } catch (...) {
                    errors[s] = std::current_exception();
                }
            });
        }
    }
    for (const auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }

    CountReport merged = CountReport::empty(base.n, base.mode);
    for (const auto& r : reports) merged = merge_reports(merged, r);

    if (sink) {
        // k-way merge: each shard buffer is already sorted.
        using Cursor = std::pair<std::size_t, std::size_t>;  // (shard, position)
        auto greater = [&](const Cursor& a, const Cursor& b) {
            return lex_less(buffers[b.first][b.second].canonical,
                            buffers[a.first][a.second].canonical);
        };
        std::priority_queue<Cursor, std::vector<Cursor>, decltype(greater)> heap(greater);
        for (std::size_t s = 0; s < buffers.size(); ++s) {
            if (!buffers[s].empty()) heap.emplace(s, 0);
        }
        while (!heap.empty()) {
            auto [s, pos] = heap.top();
            heap.pop();
            sink(buffers[s][pos]);
            if (pos + 1 < buffers[s].size()) heap.emplace(s, pos + 1);
        }
    }
    return merged;
}

CountReport merge_reports(const CountReport& a, const CountReport& b) {
    if (a.n != b.n) {
        throw ConfigError("cannot merge reports of orders " + std::to_string(a.n) + " and " +
                          std::to_string(b.n));
    }
    if (a.mode != b.mode) throw ConfigError("cannot merge reports of different modes");
    CountReport out = a;
    out.q_count += b.q_count;
    if (out.b_bar && b.b_bar) *out.b_bar += *b.b_bar;
    out.q_bar += b.q_bar;
    out.m_bar += b.m_bar;
    out.r_bar += b.r_bar;
    out.candidates_examined += b.candidates_examined;
    out.elapsed = std::max(a.elapsed, b.elapsed);
    return out;
}

BigInt burnside_b_bar(int n) {
    if (n < 2 || n > 16) {
        throw OutOfRange("Burnside count supports orders 2..16, got " + std::to_string(n));
    }
    // The translation (k, l) of the n x n torus has order lcm(n/gcd(k,n), n/gcd(l,n)),
    // so it splits the n^2 cells into n^2/order cycles and fixes 2^cycles matrices.
    BigInt total = 0;
    for (int k = 0; k < n; ++k) {
        const int row_order = n / std::gcd(k, n);
        for (int l = 0; l < n; ++l) {
            const int order = std::lcm(row_order, n / std::gcd(l, n));
            total += BigInt(1) << (n * n / order);
        }
    }
    return total / (n * n);
}

}  // namespace weave
