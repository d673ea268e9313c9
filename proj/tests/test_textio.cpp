#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "weave/textio.hpp"
#include "weave/transform.hpp"

using namespace weave;

namespace {

int error_line(std::string_view text, BitMatrix (*parse)(std::string_view)) {
    try {
        (void)parse(text);
    } catch (const ParseError& e) {
        return e.line();
    }
    return -1;
}

}  // namespace

TEST_CASE("tuple form") {
    CHECK(parse_tuple("2 1 4") == shift_p(3));
    CHECK(parse_tuple("1 2\n") == BitMatrix::from_rows(2, {1, 2}));
    CHECK(format_tuple(shift_s(3)) == "1 2 4");
    CHECK_THROWS_AS(parse_tuple(""), ParseError);
    CHECK_THROWS_AS(parse_tuple("1  2"), ParseError);  // double space
    CHECK_THROWS_AS(parse_tuple(" 1 2"), ParseError);
    CHECK_THROWS_AS(parse_tuple("1 2 "), ParseError);
    CHECK_THROWS_AS(parse_tuple("1 x"), ParseError);
    CHECK_THROWS_AS(parse_tuple("1 -2"), ParseError);
    CHECK_THROWS_AS(parse_tuple("4 0"), ParseError);  // exceeds 2^2 - 1
    CHECK(error_line("1 2\n3 0", parse_tuple) == 2);
    try {
        (void)parse_tuple("1 2 x");
    } catch (const ParseError& e) {
        CHECK(e.column() == 5);
    }
}

TEST_CASE("grid form") {
    CHECK(parse_grid("010\n001\n100\n") == shift_p(3));
    CHECK(parse_grid("01\r\n10\r\n") == BitMatrix::from_rows(2, {1, 2}));
    CHECK(format_grid(shift_p(3)) == "010\n001\n100\n");
    CHECK(error_line("010\n01\n100\n", parse_grid) == 2);
    CHECK(error_line("010\n001\n1x0\n", parse_grid) == 3);
    CHECK(error_line("01\n10\n11\n", parse_grid) == 1);  // not square
    CHECK_THROWS_AS(parse_grid(""), ParseError);
    try {
        (void)parse_grid("010\n0a1\n100\n");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
        CHECK(e.column() == 2);
    }
}

TEST_CASE("parse_matrix picks the form") {
    CHECK(parse_matrix("1 2") == BitMatrix::from_rows(2, {1, 2}));
    CHECK(parse_matrix("01\n10\n") == BitMatrix::from_rows(2, {1, 2}));
    CHECK(parse_matrix("1") == BitMatrix::from_rows(1, {1}));
    CHECK_THROWS_AS(parse_matrix("\n\n"), ParseError);
}

TEST_CASE("text forms round trip") {
    std::mt19937_64 rng(73);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 32);
        const BitMatrix a = oracle::random_matrix(n, rng);
        REQUIRE(parse_tuple(format_tuple(a)) == a);
        REQUIRE(parse_grid(format_grid(a)) == a);
    }
}

TEST_CASE("rendering") {
    const BitMatrix a = BitMatrix::from_rows(2, {1, 2});
    CHECK(render_grid(a) == ".#\n#.\n");
    CHECK(render_pbm(a) == "P1\n2 2\n01\n10\n");
    CHECK(render_pbm(shift_p(3)).rfind("P1\n3 3\n", 0) == 0);

    std::mt19937_64 rng(79);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 16);
        const BitMatrix x = oracle::random_matrix(n, rng);
        std::string reflected;
        const std::string grid = render_grid(x);
        for (std::size_t start = 0; start < grid.size(); start += n + 1) {
            std::string line = grid.substr(start, n);
            reflected += std::string(line.rbegin(), line.rend()) + '\n';
        }
        REQUIRE(render_grid(mirror(x)) == reflected);
    }
}
