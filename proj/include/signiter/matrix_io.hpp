#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "signiter/sign_engine.hpp"

namespace signiter {

// Text matrix format: first line "rows cols", then rows*cols whitespace
// separated entries in row-major order. Entries are plain decimals for real
// values and "a+bi" / "a-bi" for complex ones.

/// Parses "1.5", "-2e-3", "0+2i", "3-4.5i", "2i". Throws ParseError.
Complex parse_complex(std::string_view text);
/// Shortest round-trip form; the imaginary part is omitted when zero.
std::string format_complex(Complex z);

DenseMatrix read_matrix(std::istream& in);
DenseMatrix read_matrix_file(const std::filesystem::path& path);

void write_matrix(std::ostream& out, const DenseMatrix& m);
void write_matrix_file(const std::filesystem::path& path, const DenseMatrix& m);

}  // namespace signiter
