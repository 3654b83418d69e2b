#include "rsylv/run_record.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "rsylv/matrix_io.hpp"

namespace rsylv {

namespace {

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : line) {
        if (ch == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    out.push_back(cur);
    return out;
}

std::size_t parse_count(const std::string& s) {
    return static_cast<std::size_t>(std::stoull(s));
}

} // namespace

std::string csv_header() {
    return "solver,m,n,tile_size,workers,mu,nu,omega,alpha,"
           "wall_time_seconds,residual,min_local_alpha,scaling_events,median";
}

std::string to_csv_row(const RunRecord& r) {
    std::ostringstream os;
    os << r.solver << ',' << r.m << ',' << r.n << ',' << r.tile_size << ',' << r.workers << ','
       << format_double(r.mu) << ',' << format_double(r.nu) << ',' << format_double(r.omega)
       << ',' << format_double(r.alpha) << ',' << format_double(r.wall_time_seconds) << ','
       << format_double(r.residual) << ',' << format_double(r.min_local_alpha) << ','
       << r.scaling_events << ',' << (r.median ? 1 : 0);
    return os.str();
}

RunRecord parse_csv_row(const std::string& line) {
    const std::vector<std::string> f = split_fields(line);
    if (f.size() != 14) throw std::invalid_argument("parse_csv_row: expected 14 fields");
    RunRecord r;
    r.solver = f[0];
    r.m = parse_count(f[1]);
    r.n = parse_count(f[2]);
    r.tile_size = parse_count(f[3]);
    r.workers = parse_count(f[4]);
    r.mu = parse_double(f[5]);
    r.nu = parse_double(f[6]);
    r.omega = parse_double(f[7]);
    r.alpha = parse_double(f[8]);
    r.wall_time_seconds = parse_double(f[9]);
    r.residual = parse_double(f[10]);
    r.min_local_alpha = parse_double(f[11]);
    r.scaling_events = std::stoull(f[12]);
    r.median = f[13] == "1";
    return r;
}

void write_csv(std::ostream& os, const std::vector<RunRecord>& rows) {
    os << csv_header() << '\n';
    for (const RunRecord& r : rows) os << to_csv_row(r) << '\n';
}

std::vector<RunRecord> read_csv(std::istream& is) {
    std::vector<RunRecord> rows;
    std::string line;
    if (!std::getline(is, line)) return rows;
    if (line != csv_header()) throw std::invalid_argument("read_csv: unexpected header");
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        rows.push_back(parse_csv_row(line));
    }
    return rows;
}

} // namespace rsylv
