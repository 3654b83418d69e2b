#include "rsylv/matrix_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace rsylv {

std::string format_double(double v) {
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

double parse_double(const std::string& s) {
    double v = 0.0;
    const char* first = s.data();
    const char* last = s.data() + s.size();
    const auto res = std::from_chars(first, last, v);
    if (res.ec != std::errc{} || res.ptr != last)
        throw std::invalid_argument("parse_double: malformed value '" + s + "'");
    return v;
}

void write_matrix(std::ostream& os, ConstMatrixView m) {
    os << m.rows << ' ' << m.cols << '\n';
    for (std::size_t i = 0; i < m.rows; ++i) {
        for (std::size_t j = 0; j < m.cols; ++j) {
            if (j) os << ' ';
            os << format_double(m(i, j));
        }
        os << '\n';
    }
}

DenseMatrix read_matrix(std::istream& is) {
    std::size_t rows = 0, cols = 0;
    if (!(is >> rows >> cols))
        throw std::invalid_argument("read_matrix: missing 'rows cols' header");
    DenseMatrix m(rows, cols);
    std::string tok;
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
            if (!(is >> tok)) throw std::invalid_argument("read_matrix: truncated matrix body");
            m(i, j) = parse_double(tok);
        }
    return m;
}

void write_matrix_file(const std::string& path, ConstMatrixView m) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("write_matrix_file: cannot open " + path);
    write_matrix(os, m);
}

DenseMatrix read_matrix_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("read_matrix_file: cannot open " + path);
    return read_matrix(is);
}

} // namespace rsylv
