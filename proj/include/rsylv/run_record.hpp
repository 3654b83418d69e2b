#pragma once

// Benchmark run records and their CSV form. Floats are written as shortest
// round-trip decimals so a reparse reproduces every value bitwise.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace rsylv {

struct RunRecord {
    std::string solver;
    std::size_t m = 0;
    std::size_t n = 0;
    std::size_t tile_size = 0;
    std::size_t workers = 0;
    double mu = 0.0;
    double nu = 0.0;
    double omega = 0.0;
    double alpha = 1.0;
    double wall_time_seconds = 0.0;
    double residual = 0.0;
    double min_local_alpha = 1.0;
    std::uint64_t scaling_events = 0;
    bool median = false; // marks the median-runtime row of its repetition group
};

std::string csv_header();
std::string to_csv_row(const RunRecord& r);
RunRecord parse_csv_row(const std::string& line);

void write_csv(std::ostream& os, const std::vector<RunRecord>& rows);
std::vector<RunRecord> read_csv(std::istream& is);

} // namespace rsylv
