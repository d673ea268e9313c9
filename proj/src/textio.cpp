#include "weave/textio.hpp"

#include <charconv>
#include <vector>

namespace weave {

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start < text.size()) {
        const auto nl = text.find('\n', start);
        const auto end = nl == std::string_view::npos ? text.size() : nl;
        auto line = text.substr(start, end - start);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        lines.push_back(line);
        start = end + 1;
    }
    // Trailing blank lines carry no rows.
    while (!lines.empty() && lines.back().empty()) lines.pop_back();
    return lines;
}

}  // namespace

BitMatrix parse_grid(std::string_view text) {
    const auto lines = split_lines(text);
    if (lines.empty()) throw ParseError(1, 0, "empty matrix");
    const int n = static_cast<int>(lines.size());
    if (n > kMaxOrder) throw ParseError(kMaxOrder + 1, 0, "matrix order exceeds 32");
    RowBuilder out(n);
    for (int i = 0; i < n; ++i) {
        const auto line = lines[static_cast<std::size_t>(i)];
        if (static_cast<int>(line.size()) != n) {
            throw ParseError(i + 1, 0,
                             "expected " + std::to_string(n) + " cells for a square matrix, got " +
                                 std::to_string(line.size()));
        }
        Word w = 0;
        for (int j = 0; j < n; ++j) {
            const char c = line[static_cast<std::size_t>(j)];
            if (c != '0' && c != '1') {
                throw ParseError(i + 1, j + 1, std::string("expected '0' or '1', got '") + c + "'");
            }
            w = (w << 1) | static_cast<Word>(c == '1');
        }
        out.set_row(i, w);
    }
    return out.build();
}

BitMatrix parse_tuple(std::string_view text) {
    auto lines = split_lines(text);
    if (lines.empty()) throw ParseError(1, 0, "empty tuple");
    if (lines.size() > 1) throw ParseError(2, 0, "tuple form must be a single line");
    const auto line = lines.front();

    std::vector<std::uint64_t> words;
    std::size_t pos = 0;
    while (true) {
        const auto space = line.find(' ', pos);
        const auto end = space == std::string_view::npos ? line.size() : space;
        const auto token = line.substr(pos, end - pos);
        const int column = static_cast<int>(pos) + 1;
        if (token.empty()) throw ParseError(1, column, "expected a decimal row word");
        std::uint64_t value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc{} || ptr != token.data() + token.size()) {
            throw ParseError(1, column, "invalid row word '" + std::string(token) + "'");
        }
        words.push_back(value);
        if (space == std::string_view::npos) break;
        pos = space + 1;
    }

    const int n = static_cast<int>(words.size());
    if (n > kMaxOrder) throw ParseError(1, 0, "matrix order exceeds 32");
    std::vector<Word> rows;
    rows.reserve(words.size());
    for (std::size_t i = 0; i < words.size(); ++i) {
        if (words[i] > full_mask(n)) {
            throw ParseError(1, 0,
                             "row word " + std::to_string(words[i]) + " at position " +
                                 std::to_string(i + 1) + " exceeds 2^" + std::to_string(n) +
                                 " - 1");
        }
        rows.push_back(static_cast<Word>(words[i]));
    }
    return BitMatrix::from_rows(n, rows);
}

BitMatrix parse_matrix(std::string_view text) {
    for (const auto line : split_lines(text)) {
        if (line.empty()) continue;
        return line.find(' ') != std::string_view::npos ? parse_tuple(text) : parse_grid(text);
    }
    throw ParseError(1, 0, "empty matrix");
}

std::string format_tuple(const BitMatrix& a) {
    std::string out;
    for (int i = 0; i < a.order(); ++i) {
        if (i) out += ' ';
        out += std::to_string(a.row_unchecked(i));
    }
    return out;
}

namespace {

std::string cells(const BitMatrix& a, char one, char zero) {
    const int n = a.order();
    std::string out;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            out += (a.row_unchecked(i) & column_bit(n, j)) ? one : zero;
        }
        out += '\n';
    }
    return out;
}

}  // namespace

std::string format_grid(const BitMatrix& a) { return cells(a, '1', '0'); }

std::string render_grid(const BitMatrix& a) { return cells(a, '#', '.'); }

std::string render_pbm(const BitMatrix& a) {
    const auto n = std::to_string(a.order());
    return "P1\n" + n + ' ' + n + '\n' + format_grid(a);
}

}  // namespace weave
