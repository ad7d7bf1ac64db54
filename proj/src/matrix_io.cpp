#include "signiter/matrix_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include "signiter/errors.hpp"

namespace signiter {

namespace {

// Reads an optionally signed decimal from the front of `text`; returns the
// number of characters consumed, 0 on failure.
std::size_t read_number(std::string_view text, double& value) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    negative = text[pos] == '-';
    ++pos;
  }
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) return 0;
  const char* first = text.data() + pos;
  const char* last = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{}) return 0;
  if (negative) value = -value;
  return static_cast<std::size_t>(ptr - text.data());
}

std::string shortest(double x) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, ptr);
}

}  // namespace

Complex parse_complex(std::string_view text) {
  const auto fail = [&] { return ParseError("malformed matrix entry '" + std::string(text) + "'"); };
  if (text.empty()) throw fail();

  double first = 0.0;
  const std::size_t used = read_number(text, first);
  if (used == 0 || !std::isfinite(first)) throw fail();
  auto rest = text.substr(used);
  if (rest.empty()) return {first, 0.0};
  if (rest == "i") return {0.0, first};

  if (rest.back() != 'i' || (rest.front() != '+' && rest.front() != '-')) throw fail();
  rest.remove_suffix(1);
  double second = 0.0;
  if (read_number(rest, second) != rest.size() || !std::isfinite(second)) throw fail();
  return {first, second};
}

std::string format_complex(Complex z) {
  if (z.imag() == 0.0) return shortest(z.real() == 0.0 ? 0.0 : z.real());
  const std::string sign = std::signbit(z.imag()) ? "-" : "+";
  return shortest(z.real() == 0.0 ? 0.0 : z.real()) + sign + shortest(std::abs(z.imag())) + "i";
}

DenseMatrix read_matrix(std::istream& in) {
  std::string header;
  if (!std::getline(in, header)) throw ParseError("empty matrix file");
  std::istringstream hs(header);
  long rows = -1;
  long cols = -1;
  std::string extra;
  if (!(hs >> rows >> cols) || (hs >> extra) || rows <= 0 || cols <= 0) {
    throw ParseError("matrix header must be two positive integers 'rows cols'");
  }

  std::vector<Complex> entries;
  std::string token;
  while (in >> token) entries.push_back(parse_complex(token));
  if (entries.size() != static_cast<std::size_t>(rows * cols)) {
    throw ParseError("matrix has " + std::to_string(entries.size()) + " entries, header declares " +
                     std::to_string(rows * cols));
  }
  DenseMatrix m(rows, cols);
  for (long r = 0; r < rows; ++r) {
    for (long c = 0; c < cols; ++c) m(r, c) = entries[static_cast<std::size_t>(r * cols + c)];
  }
  return m;
}

DenseMatrix read_matrix_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open matrix file '" + path.string() + "'");
  return read_matrix(in);
}

void write_matrix(std::ostream& out, const DenseMatrix& m) {
  out << m.rows() << ' ' << m.cols() << '\n';
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      if (c > 0) out << ' ';
      out << format_complex(m(r, c));
    }
    out << '\n';
  }
}

void write_matrix_file(const std::filesystem::path& path, const DenseMatrix& m) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write matrix file '" + path.string() + "'");
  write_matrix(out, m);
}

}  // namespace signiter
