#include "orthokit/matrix_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <vector>

#include "orthokit/error.hpp"

namespace orthokit {

namespace {

bool is_space(char c) { return c == ' ' || c == '\r' || c == '\t' || c == '\v' || c == '\f'; }

// Parses an unsigned decimal at the front of `s`, advancing past it.
bool take_decimal(std::string_view& s, double& value) {
  if (s.empty() || !(std::isdigit(static_cast<unsigned char>(s.front())) || s.front() == '.')) {
    return false;
  }
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || !std::isfinite(value)) return false;
  s.remove_prefix(static_cast<std::size_t>(ptr - s.data()));
  return true;
}

bool take_sign(std::string_view& s, double& sign) {
  sign = 1.0;
  if (s.empty()) return false;
  if (s.front() == '+' || s.front() == '-') {
    sign = s.front() == '-' ? -1.0 : 1.0;
    s.remove_prefix(1);
    return true;
  }
  return false;
}

void append_double(std::string& out, double x, int precision) {
  if (x == 0.0) x = 0.0;  // drop the sign of negative zero
  char buf[64];
  std::to_chars_result res = precision >= 17
                                 ? std::to_chars(buf, buf + sizeof buf, x)
                                 : std::to_chars(buf, buf + sizeof buf, x,
                                                 std::chars_format::general, precision);
  out.append(buf, res.ptr);
}

}  // namespace

char delimiter(MatrixFormat format) noexcept { return format == MatrixFormat::Tsv ? '\t' : ','; }

std::string_view file_extension(MatrixFormat format) noexcept {
  return format == MatrixFormat::Tsv ? ".tsv" : ".csv";
}

bool parse_scalar(std::string_view token, Scalar& out) {
  std::string_view s = token;
  double sign = 1.0;
  double re = 0.0;
  take_sign(s, sign);
  if (!take_decimal(s, re)) return false;
  re *= sign;
  if (s.empty()) {
    out = Scalar(re, 0.0);
    return true;
  }
  double im_sign = 1.0;
  double im = 0.0;
  if (!take_sign(s, im_sign)) return false;
  if (!take_decimal(s, im)) return false;
  if (s != "i") return false;
  out = Scalar(re, im_sign * im);
  return true;
}

DenseMatrix parse_matrix(std::string_view text, MatrixFormat format) {
  const char delim = delimiter(format);
  std::vector<Scalar> entries;
  std::size_t cols = 0;
  std::size_t rows = 0;
  std::size_t first_row_line = 0;
  std::size_t line_no = 0;

  while (!text.empty()) {
    ++line_no;
    const std::size_t eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text.remove_prefix(eol == std::string_view::npos ? text.size() : eol + 1);

    std::size_t lead = 0;
    while (lead < line.size() && is_space(line[lead]) && line[lead] != delim) ++lead;
    if (lead == line.size() || line[lead] == '#') continue;

    std::size_t count = 0;
    std::size_t pos = 0;
    while (true) {
      const std::size_t end = std::min(line.find(delim, pos), line.size());
      std::string_view raw = line.substr(pos, end - pos);
      std::size_t col = pos + 1;
      while (!raw.empty() && is_space(raw.front())) {
        raw.remove_prefix(1);
        ++col;
      }
      while (!raw.empty() && is_space(raw.back())) raw.remove_suffix(1);
      Scalar z;
      if (!parse_scalar(raw, z)) {
        throw ParseError(line_no, col, std::string(raw),
                         raw.empty() ? "empty field" : "not a real or complex literal");
      }
      entries.push_back(z);
      ++count;
      if (end == line.size()) break;
      pos = end + 1;
    }

    if (rows == 0) {
      cols = count;
      first_row_line = line_no;
    } else if (count != cols) {
      throw Error(ErrorKind::RaggedRows,
                  "line " + std::to_string(line_no) + " has " + std::to_string(count) +
                      " entries but line " + std::to_string(first_row_line) + " has " +
                      std::to_string(cols));
    }
    ++rows;
  }

  if (rows == 0) throw Error(ErrorKind::EmptyMatrix, "no matrix rows found");
  return DenseMatrix(rows, cols, std::move(entries));
}

DenseMatrix parse_matrix_file(const std::filesystem::path& path, MatrixFormat format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Io, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_matrix(buf.str(), format);
}

std::string format_scalar(Scalar z, int precision) {
  std::string out;
  append_double(out, z.real(), precision);
  if (z.imag() != 0.0) {
    if (z.imag() > 0.0) out.push_back('+');
    append_double(out, z.imag(), precision);
    out.push_back('i');
  }
  return out;
}

std::string format_matrix(const DenseMatrix& m, MatrixFormat format, int precision) {
  if (precision < 1 || precision > 17) {
    throw Error(ErrorKind::InvalidArgument, "precision must be in [1, 17]");
  }
  const char delim = delimiter(format);
  std::string out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j > 0) out.push_back(delim);
      out += format_scalar(m(i, j), precision);
    }
    out.push_back('\n');
  }
  return out;
}

void write_matrix_file(const std::filesystem::path& path, const DenseMatrix& m,
                       MatrixFormat format, int precision) {
  const std::string text = format_matrix(m, format, precision);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::Io, "cannot write " + path.string());
  out << text;
  if (!out) throw Error(ErrorKind::Io, "write failed for " + path.string());
}

}  // namespace orthokit
