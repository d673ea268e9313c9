#include <doctest.h>

#include <numeric>
#include <random>

#include "oracles.hpp"
#include "weave/classify.hpp"

using namespace weave;

namespace {

BitMatrix m(std::initializer_list<Word> rows) {
    return BitMatrix::from_rows(static_cast<int>(rows.size()), rows);
}

bool divides(int d, int n) { return n % d == 0; }

bool is_divisor_product(int size, int n) {
    for (int s = 1; s <= n; ++s)
        for (int t = 1; t <= n; ++t)
            if (divides(s, n) && divides(t, n) && s * t == size) return true;
    return false;
}

}  // namespace

TEST_CASE("orbit") {
    const auto o = orbit(m({1, 2}));
    REQUIRE(o.size() == 2);
    CHECK(o[0] == m({1, 2}));
    CHECK(o[1] == m({2, 1}));
    CHECK(orbit(BitMatrix::zero(5)).size() == 1);
    CHECK(orbit_size(BitMatrix::zero(5)) == 1);
    CHECK(orbit_size(m({1, 2})) == 2);

    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 6);
        const BitMatrix a = oracle::random_matrix(n, rng);
        const int size = static_cast<int>(orbit(a).size());
        REQUIRE(size == orbit_size(a));
        REQUIRE(size == oracle::grid_orbit_size(oracle::to_grid(a)));
        REQUIRE(size <= n * n);
    }
}

TEST_CASE("orbits partition B_2 and B_3") {
    for (int n : {2, 3}) {
        const std::uint64_t total = std::uint64_t{1} << (n * n);
        std::set<BitMatrix, LexLess> reps;
        std::uint64_t size_sum = 0;
        for (std::uint64_t idx = 0; idx < total; ++idx) {
            const BitMatrix c = canonical(oracle::matrix_from_index(n, idx));
            if (reps.insert(c).second) size_sum += static_cast<std::uint64_t>(orbit_size(c));
        }
        CHECK(size_sum == total);
        CHECK(reps.size() == (n == 2 ? 7u : 64u));
    }
}

TEST_CASE("orbit sizes factor as products of divisors of n") {
    for (int n = 1; n <= 4; ++n) {
        const std::uint64_t total = std::uint64_t{1} << (n * n);
        for (std::uint64_t idx = 0; idx < total; ++idx) {
            const int size = orbit_size(oracle::matrix_from_index(n, idx));
            REQUIRE(is_divisor_product(size, n));
        }
    }
}

TEST_CASE("canonical") {
    CHECK(canonical(m({2, 1})) == m({1, 2}));
    // brute-force minimum over the 9 images of P
    CHECK(oracle::to_grid(canonical(m({2, 1, 4}))) ==
          oracle::grid_canonical(oracle::to_grid(m({2, 1, 4}))));
    CHECK(canonical(m({2, 1, 4})) == m({1, 4, 2}));  // powers of P; E, P, P^2

    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 1000; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 8);
        const BitMatrix a = oracle::random_matrix(n, rng);
        const BitMatrix c = canonical(a);
        REQUIRE(oracle::to_grid(c) == oracle::grid_canonical(oracle::to_grid(a)));
        REQUIRE(canonical(c) == c);
        const ShiftPair g{static_cast<int>(rng() % n), static_cast<int>(rng() % n)};
        REQUIRE(canonical(act(a, g)) == c);
    }
}

TEST_CASE("is_canonical") {
    CHECK_FALSE(is_canonical(m({2, 1})));
    CHECK(is_canonical(m({1, 2})));
    std::mt19937_64 rng(59);
    for (int trial = 0; trial < 2000; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 6);
        const BitMatrix a = oracle::random_matrix(n, rng);
        REQUIRE(is_canonical(canonical(a)));
        REQUIRE(is_canonical(a) == (canonical(a) == a));
    }
    // every canonical matrix has its smallest row first
    for (int n = 1; n <= 4; ++n) {
        const std::uint64_t total = std::uint64_t{1} << (n * n);
        for (std::uint64_t idx = 0; idx < total; ++idx) {
            const BitMatrix a = oracle::matrix_from_index(n, idx);
            if (!is_canonical(a)) continue;
            for (int t = 1; t < n; ++t) REQUIRE(a.row(0) <= a.row(t));
        }
    }
}

TEST_CASE("in_q") {
    CHECK(in_q(m({1, 2})));
    CHECK_FALSE(in_q(m({0, 2})));
    CHECK_FALSE(in_q(m({1, 1})));
    CHECK_FALSE(in_q(m({3, 3})));
    CHECK_FALSE(in_q(m({0})));
    CHECK_FALSE(in_q(m({1})));

    for (std::uint64_t idx = 0; idx < 512; ++idx) {
        const BitMatrix a = oracle::matrix_from_index(3, idx);
        REQUIRE(in_q(a) == oracle::grid_in_q(oracle::to_grid(a)));
    }
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 100000; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 8);
        BitMatrix a = oracle::random_matrix(n, rng);
        // Uniform matrices of larger order are almost always in Q; punch holes to balance.
        if (trial % 2) a = elem_and(a, oracle::random_matrix(n, rng));
        REQUIRE(in_q(a) == oracle::grid_in_q(oracle::to_grid(a)));
    }
}

TEST_CASE("Q_n is closed under the shift action") {
    for (int n = 2; n <= 3; ++n) {
        const std::uint64_t total = std::uint64_t{1} << (n * n);
        for (std::uint64_t idx = 0; idx < total; ++idx) {
            const BitMatrix a = oracle::matrix_from_index(n, idx);
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) REQUIRE(in_q(act(a, {k, l})) == in_q(a));
        }
    }
    std::mt19937_64 rng(67);
    for (int trial = 0; trial < 5000; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 5);
        const BitMatrix a = oracle::random_matrix(n, rng);
        const ShiftPair g{static_cast<int>(rng() % n), static_cast<int>(rng() % n)};
        REQUIRE(in_q(act(a, g)) == in_q(a));
    }
}

TEST_CASE("mirror and rotation predicates") {
    CHECK(is_self_mirror(m({1, 2})));
    CHECK(is_rotation_stable(m({1, 2})));
    CHECK_THROWS_AS(is_self_mirror(m({0, 2})), NotAnInterweaving);
    CHECK_THROWS_AS(is_rotation_stable(m({3, 3})), NotAnInterweaving);

    int mirror_classes = 0;
    int rotation_classes = 0;
    int q_classes = 0;
    for (std::uint64_t idx = 0; idx < 512; ++idx) {
        const BitMatrix a = oracle::matrix_from_index(3, idx);
        if (!in_q(a) || !is_canonical(a)) continue;
        ++q_classes;
        mirror_classes += is_self_mirror(a);
        rotation_classes += is_rotation_stable(a);
    }
    CHECK(q_classes == 14);
    CHECK(mirror_classes == 2);
    CHECK(rotation_classes == 2);
}

TEST_CASE("mirror and rotation flags are class functions") {
    for (int n = 2; n <= 4; ++n) {
        const std::uint64_t total = std::uint64_t{1} << (n * n);
        for (std::uint64_t idx = 0; idx < total; ++idx) {
            const BitMatrix a = oracle::matrix_from_index(n, idx);
            if (!in_q(a)) continue;
            const bool mir = is_self_mirror(a);
            const bool rot = is_rotation_stable(a);
            // independent check via the grid oracle
            const auto g = oracle::to_grid(a);
            const auto cg = oracle::grid_canonical(g);
            REQUIRE(mir == (oracle::grid_canonical(oracle::grid_mirror(g)) == cg));
            REQUIRE(rot == (oracle::grid_canonical(oracle::grid_rotate90(g)) == cg));
            const ShiftPair h{static_cast<int>(idx % n), static_cast<int>((idx / n) % n)};
            REQUIRE(is_self_mirror(act(a, h)) == mir);
            REQUIRE(is_rotation_stable(act(a, h)) == rot);
        }
    }
}

TEST_CASE("classify") {
    const ClassRecord r = classify(m({1, 2}));
    CHECK(r.canonical == m({1, 2}));
    CHECK(r.orbit_size == 2);
    CHECK(r.is_interweaving);
    CHECK(r.self_mirror);
    CHECK(r.rotation_stable);

    const ClassRecord z = classify(m({0, 0}));
    CHECK(z.orbit_size == 1);
    CHECK_FALSE(z.is_interweaving);
    CHECK_FALSE(z.self_mirror);
    CHECK_FALSE(z.rotation_stable);

    const BitMatrix s = m({1, 2, 4});
    const ClassRecord rs = classify(s);
    const auto gs = oracle::to_grid(s);
    const auto cs = oracle::grid_canonical(gs);
    CHECK(rs.is_interweaving);
    CHECK(oracle::to_grid(rs.canonical) == cs);
    CHECK(rs.orbit_size == oracle::grid_orbit_size(gs));
    CHECK(rs.self_mirror == (oracle::grid_canonical(oracle::grid_mirror(gs)) == cs));
    CHECK(rs.rotation_stable == (oracle::grid_canonical(oracle::grid_rotate90(gs)) == cs));

    std::mt19937_64 rng(71);
    for (int trial = 0; trial < 2000; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 6);
        const BitMatrix a = oracle::random_matrix(n, rng);
        const ClassRecord rec = classify(a);
        REQUIRE(rec.canonical == canonical(a));
        REQUIRE(rec.orbit_size == orbit_size(a));
        REQUIRE(rec.is_interweaving == in_q(a));
        if (rec.is_interweaving) {
            REQUIRE(rec.self_mirror == is_self_mirror(a));
            REQUIRE(rec.rotation_stable == is_rotation_stable(a));
        } else {
            REQUIRE_FALSE(rec.self_mirror);
            REQUIRE_FALSE(rec.rotation_stable);
        }
        REQUIRE(is_divisor_product(rec.orbit_size, n));
    }
}
