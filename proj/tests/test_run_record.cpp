#include <doctest.h>

#include <random>
#include <sstream>

#include "rsylv/run_record.hpp"

using namespace rsylv;

TEST_CASE("csv rows reparse bitwise") {
    std::mt19937_64 rng(83);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<RunRecord> rows;
    for (int i = 0; i < 40; ++i) {
        RunRecord r;
        r.solver = (i % 3 == 0) ? "robust-tiled" : (i % 3 == 1) ? "robust-scalar" : "nonrobust";
        r.m = rng() % 5000;
        r.n = rng() % 5000;
        r.tile_size = 32 + rng() % 512;
        r.workers = rng() % 16;
        r.mu = std::ldexp(u(rng), static_cast<int>(rng() % 600) - 300);
        r.nu = u(rng);
        r.omega = 1e4;
        r.alpha = 0.5 + 0.5 * u(rng) * u(rng);
        r.wall_time_seconds = std::abs(u(rng)) + 1e-9;
        r.residual = std::abs(u(rng)) * 1e-13;
        r.min_local_alpha = std::abs(u(rng));
        r.scaling_events = rng();
        r.median = (i % 3) == 1;
        rows.push_back(r);
    }

    std::stringstream ss;
    write_csv(ss, rows);
    const std::vector<RunRecord> back = read_csv(ss);
    REQUIRE(back.size() == rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(back[i].solver == rows[i].solver);
        CHECK(back[i].m == rows[i].m);
        CHECK(back[i].n == rows[i].n);
        CHECK(back[i].tile_size == rows[i].tile_size);
        CHECK(back[i].workers == rows[i].workers);
        CHECK(back[i].mu == rows[i].mu);
        CHECK(back[i].nu == rows[i].nu);
        CHECK(back[i].omega == rows[i].omega);
        CHECK(back[i].alpha == rows[i].alpha);
        CHECK(back[i].wall_time_seconds == rows[i].wall_time_seconds);
        CHECK(back[i].residual == rows[i].residual);
        CHECK(back[i].min_local_alpha == rows[i].min_local_alpha);
        CHECK(back[i].scaling_events == rows[i].scaling_events);
        CHECK(back[i].median == rows[i].median);
    }
}

TEST_CASE("header and field count are stable") {
    RunRecord r;
    r.solver = "nonrobust";
    const std::string row = to_csv_row(r);
    std::size_t commas = 0;
    for (char c : row) commas += (c == ',');
    CHECK(commas == 13);
    std::size_t header_commas = 0;
    for (char c : csv_header()) header_commas += (c == ',');
    CHECK(header_commas == 13);
    CHECK_THROWS_AS(parse_csv_row("a,b,c"), std::invalid_argument);
}
