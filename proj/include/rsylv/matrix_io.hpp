#pragma once

// Plain-text matrix files: a "rows cols" header line, then one row per line
// with entries as shortest round-trip decimals.

#include <iosfwd>
#include <string>

#include "rsylv/dense_matrix.hpp"

namespace rsylv {

/// Shortest decimal string that parses back to exactly v.
std::string format_double(double v);

/// Inverse of format_double; throws invalid_argument on malformed input.
double parse_double(const std::string& s);

void write_matrix(std::ostream& os, ConstMatrixView m);
DenseMatrix read_matrix(std::istream& is);

void write_matrix_file(const std::string& path, ConstMatrixView m);
DenseMatrix read_matrix_file(const std::string& path);

} // namespace rsylv
