#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "orthokit/matrix.hpp"

namespace orthokit {

enum class MatrixFormat { Csv, Tsv };

char delimiter(MatrixFormat format) noexcept;
std::string_view file_extension(MatrixFormat format) noexcept;

/// Reads one token of the matrix grammar: `[+-]?<dec>([+-]<dec>i)?`, where
/// <dec> is a finite decimal with optional exponent. Returns false on
/// anything else.
bool parse_scalar(std::string_view token, Scalar& out);

/// One matrix row per line; blank lines and lines starting with '#' are
/// skipped. Throws ParseError (with 1-based line and column), RaggedRows or
/// EmptyMatrix.
DenseMatrix parse_matrix(std::string_view text, MatrixFormat format);
DenseMatrix parse_matrix_file(const std::filesystem::path& path, MatrixFormat format);

/// Decimal text for one entry, written back in the input grammar. Precision
/// 17 prints the shortest string that round-trips exactly; smaller values
/// print that many significant digits.
std::string format_scalar(Scalar z, int precision = 17);

std::string format_matrix(const DenseMatrix& m, MatrixFormat format, int precision = 17);
void write_matrix_file(const std::filesystem::path& path, const DenseMatrix& m,
                       MatrixFormat format, int precision = 17);

}  // namespace orthokit
