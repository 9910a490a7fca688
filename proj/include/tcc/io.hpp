#pragma once

// Plain-text matrix format:
//   p rows cols
//   <rows lines of cols integers in [0, p)>

#include <iosfwd>
#include <string>

#include "tcc/matrix.hpp"

namespace tcc {

/// Parse failures carry the 1-based line and column of the offending token.
class ParseError : public Error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& what);

    [[nodiscard]] std::size_t line() const noexcept { return line_; }
    [[nodiscard]] std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

[[nodiscard]] Matrix read_matrix(std::istream& in);
[[nodiscard]] Matrix read_matrix_file(const std::string& path);
void write_matrix(std::ostream& out, const Matrix& m);

}  // namespace tcc
