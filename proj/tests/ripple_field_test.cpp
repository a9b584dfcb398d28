#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>

#include "ripple/ripple_field.hpp"
#include "test_util.hpp"

using namespace ripple;

namespace {
constexpr std::int32_t U = DistanceField::kUnreached;

std::vector<std::int32_t> vals(const DistanceField& f) { return f.values; }
}  // namespace

TEST_CASE("bfs_oracle on hand-traced corridors") {
    const GridMap corridor = test::map_from_rows({"ss."});
    const DistanceField f = bfs_oracle(corridor);
    CHECK(vals(f) == std::vector<std::int32_t>{2, 1, 0});
    CHECK(!f.complete);

    const GridMap all_seen = test::map_from_rows({"sss"});
    const DistanceField g = bfs_oracle(all_seen);
    CHECK(vals(g) == std::vector<std::int32_t>{U, U, U});
    CHECK(g.complete);

    const GridMap severed = test::map_from_rows({"ss#s."});
    CHECK(vals(bfs_oracle(severed)) == std::vector<std::int32_t>{U, U, U, 1, 0});
}

TEST_CASE("unseen cells always read zero") {
    Splitmix64 rng{11};
    for (int iter = 0; iter < 30; ++iter) {
        const GridMap map = test::random_map(rng, 10, 10, 30, true);
        DistanceField f = bfs_oracle(map);
        const auto check_sources = [&] {
            for (int y = 0; y < 10; ++y)
                for (int x = 0; x < 10; ++x)
                    if (map.at({x, y}) == CellState::Unseen)
                        CHECK(f.at({x, y}) == 0);
        };
        check_sources();
        relax_sweep(map, f);
        check_sources();
        propagate(map, f, FieldMode::sweeps(3));
        check_sources();
    }
}

TEST_CASE("relax_sweep leaves a fixpoint unchanged") {
    const GridMap map = test::map_from_rows({"ss.", "sss", ".ss"});
    DistanceField f = bfs_oracle(map);
    const DistanceField before = f;
    CHECK(!relax_sweep(map, f));
    CHECK(vals(f) == vals(before));
}

TEST_CASE("relax_sweep hand trace on the 1x3 corridor") {
    // In-place row-major scan: the right-end source reaches cell 1 in the
    // first sweep but cell 0 only in the second, because cell 0 is visited
    // before cell 1 refreshes.
    const GridMap corridor = test::map_from_rows({"ss."});
    DistanceField f(3, 1);
    reset_field(corridor, f);
    CHECK(vals(f) == std::vector<std::int32_t>{U, U, 0});

    CHECK(relax_sweep(corridor, f));
    CHECK(vals(f) == std::vector<std::int32_t>{U, 1, 0});

    CHECK(relax_sweep(corridor, f));
    CHECK(vals(f) == std::vector<std::int32_t>{2, 1, 0});

    CHECK(!relax_sweep(corridor, f));
    CHECK(vals(f) == vals(bfs_oracle(corridor)));
}

TEST_CASE("relax_sweep with no sources") {
    const GridMap all_seen = test::map_from_rows({"ss", "ss"});
    DistanceField f(2, 2);
    reset_field(all_seen, f);
    CHECK(!relax_sweep(all_seen, f));  // already all unreached

    f.values = {3, 7, 0, 2};  // junk entries keep churning until invalidated
    CHECK(relax_sweep(all_seen, f));
}

TEST_CASE("propagate in fixpoint mode equals the oracle") {
    Splitmix64 rng{0xfeed};
    for (int iter = 0; iter < 50; ++iter) {
        const GridMap map = test::random_map(rng, 12, 9, 35, true);
        DistanceField f(12, 9);
        propagate(map, f, FieldMode::fixpoint());
        CHECK(f == bfs_oracle(map));
    }
}

TEST_CASE("propagate with enough sweeps equals the oracle") {
    Splitmix64 rng{0xbeef};
    for (int iter = 0; iter < 30; ++iter) {
        const GridMap map = test::random_map(rng, 8, 8, 30, true);
        DistanceField f(8, 8);
        // junk start: propagate must invalidate before sweeping
        for (auto& v : f.values)
            v = static_cast<std::int32_t>(rng.next() % 5);
        propagate(map, f, FieldMode::sweeps(64));
        CHECK(vals(f) == vals(bfs_oracle(map)));
        CHECK(f.complete == (map.unseen_count() == 0));
    }
}

TEST_CASE("sweeps converge within width*height passes to the oracle") {
    Splitmix64 rng{0x5eed};
    for (int iter = 0; iter < 50; ++iter) {
        const GridMap map = test::random_map(rng, 9, 7, 30, true);
        DistanceField f(9, 7);
        reset_field(map, f);
        int sweeps = 0;
        while (relax_sweep(map, f)) {
            ++sweeps;
            REQUIRE(sweeps <= 9 * 7);
        }
        CHECK(vals(f) == vals(bfs_oracle(map)));
    }
}

TEST_CASE("single sweep re-orients after the source moves") {
    GridMap corridor = test::map_from_rows({"ss."});
    DistanceField f(3, 1);
    propagate(corridor, f, FieldMode::sweeps(1));
    CHECK(vals(f) == std::vector<std::int32_t>{U, 1, 0});

    corridor.set({2, 0}, CellState::Seen);
    corridor.set({0, 0}, CellState::Unseen);
    propagate(corridor, f, FieldMode::sweeps(1));
    // left-to-right in-place scan carries the new left source all the way
    CHECK(vals(f) == std::vector<std::int32_t>{0, 1, 2});
}

TEST_CASE("descent structure at fixpoint") {
    Splitmix64 rng{0xdecaf};
    for (int iter = 0; iter < 60; ++iter) {
        const GridMap map = test::random_map(rng, 10, 10, 30, true);
        const DistanceField f = bfs_oracle(map);
        for (int y = 0; y < 10; ++y) {
            for (int x = 0; x < 10; ++x) {
                const std::int32_t v = f.at({x, y});
                if (map.at({x, y}) != CellState::Seen || v == U || v < 1)
                    continue;
                bool has_descent = false;
                for (const Coord& n : neighbors(map, {x, y}))
                    if (map.traversable(n) && f.at(n) == v - 1)
                        has_descent = true;
                CHECK(has_descent);
            }
        }
    }
}

TEST_CASE("open rectangle with one source gives plain Manhattan distance") {
    Splitmix64 rng{31337};
    for (int iter = 0; iter < 20; ++iter) {
        const int w = 3 + static_cast<int>(rng.next() % 10);
        const int h = 3 + static_cast<int>(rng.next() % 10);
        GridMap map(w, h, CellState::Seen);
        const Coord src{static_cast<int>(rng.next() % w),
                        static_cast<int>(rng.next() % h)};
        map.set(src, CellState::Unseen);
        const DistanceField f = bfs_oracle(map);
        for (int y = 0; y < h; ++y)
            for (int x = 0; x < w; ++x)
                CHECK(f.at({x, y}) == std::abs(x - src.x) + std::abs(y - src.y));
    }
}

TEST_CASE("dimension mismatch is rejected") {
    const GridMap map(3, 3);
    DistanceField f(2, 3);
    CHECK_THROWS_AS(relax_sweep(map, f), std::invalid_argument);
    CHECK_THROWS_AS(propagate(map, f, FieldMode::fixpoint()), std::invalid_argument);
    CHECK_THROWS_AS(reset_field(map, f), std::invalid_argument);
}

TEST_CASE("field_to_text uses dots for unreached") {
    const GridMap severed = test::map_from_rows({"ss#s."});
    CHECK(field_to_text(bfs_oracle(severed)) == ". . . 1 0\n");
}

TEST_CASE("FieldMode::sweeps validates the count") {
    CHECK_THROWS_AS(FieldMode::sweeps(0), std::invalid_argument);
}
