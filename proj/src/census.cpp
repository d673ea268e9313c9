#include "weave/census.hpp"

#include <istream>
#include <ostream>
#include <sstream>

#include "weave/enumerate.hpp"

namespace weave {

namespace {

constexpr const char* kKeys[] = {"q_count", "b_bar", "q_bar", "m_bar", "r_bar"};

bool known_key(const std::string& key) {
    for (const char* k : kKeys) {
        if (key == k) return true;
    }
    return false;
}

}  // namespace

ExpectedTable ExpectedTable::reference() {
    ExpectedTable t;
    struct Column {
        int n;
        std::optional<std::uint64_t> q_count;
        std::uint64_t b_bar, q_bar, m_bar, r_bar;
    };
    const Column columns[] = {
        {2, 2, 7, 1, 1, 1},
        {3, 102, 64, 14, 2, 2},
        {4, 22874, 4156, 1446, 142, 18},
        {5, 17633670, 1342208, 705366, 1302, 74},
        {6, std::nullopt, 1908897152, 1304451482, 586060, 902},
    };
    for (const auto& c : columns) {
        if (c.q_count) t.set(c.n, "q_count", *c.q_count);
        t.set(c.n, "b_bar", c.b_bar);
        t.set(c.n, "q_bar", c.q_bar);
        t.set(c.n, "m_bar", c.m_bar);
        t.set(c.n, "r_bar", c.r_bar);
    }
    return t;
}

ExpectedTable ExpectedTable::parse(std::istream& in) {
    ExpectedTable t;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        std::string n_text;
        if (!(fields >> n_text)) continue;
        std::string key;
        std::string value_text;
        std::string extra;
        if (!(fields >> key >> value_text) || (fields >> extra)) {
            throw ParseError(line_no, 0, "expected exactly three fields: n key value");
        }
        int n = 0;
        std::uint64_t value = 0;
        try {
            std::size_t used = 0;
            n = std::stoi(n_text, &used);
            if (used != n_text.size()) throw std::invalid_argument(n_text);
            value = std::stoull(value_text, &used);
            if (used != value_text.size() || value_text.front() == '-') {
                throw std::invalid_argument(value_text);
            }
        } catch (const std::logic_error&) {
            throw ParseError(line_no, 0, "n and value must be non-negative decimal integers");
        }
        if (!known_key(key)) throw ParseError(line_no, 0, "unknown key '" + key + "'");
        t.set(n, key, value);
    }
    return t;
}

void ExpectedTable::set(int n, const std::string& key, std::uint64_t value) {
    values_[{n, key}] = value;
}

std::optional<std::uint64_t> ExpectedTable::get(int n, const std::string& key) const {
    const auto it = values_.find({n, key});
    if (it == values_.end()) return std::nullopt;
    return it->second;
}

void ExpectedTable::write(std::ostream& out) const {
    for (const auto& [cell, value] : values_) {
        out << cell.first << ' ' << cell.second << ' ' << value << '\n';
    }
}

std::vector<CellVerdict> verify_table(int n_max, const ExpectedTable& expected, int workers) {
    if (n_max < 2 || n_max > 5) {
        throw ConfigError("verification supports n_max in [2, 5], got " + std::to_string(n_max));
    }
    std::vector<CellVerdict> cells;
    for (int n = 2; n <= n_max; ++n) {
        EnumConfig cfg;
        cfg.n = n;
        cfg.mode = EnumMode::all_classes;
        const CountReport report = enumerate_parallel(cfg, workers);
        const std::pair<const char*, std::uint64_t> computed[] = {
            {"q_count", report.q_count}, {"b_bar", report.b_bar.value_or(0)},
            {"q_bar", report.q_bar},     {"m_bar", report.m_bar},
            {"r_bar", report.r_bar},
        };
        for (const auto& [key, value] : computed) {
            if (const auto want = expected.get(n, key)) {
                cells.push_back({n, key, "enumeration", *want, value, *want == value});
            }
        }
    }
    for (int n = 2; n <= 6; ++n) {
        if (const auto want = expected.get(n, "b_bar")) {
            const BigInt value = burnside_b_bar(n);
            const auto narrowed = value.convert_to<std::uint64_t>();
            cells.push_back({n, "b_bar_burnside", "burnside", *want, narrowed,
                             BigInt(*want) == value});
        }
    }
    return cells;
}

}  // namespace weave
