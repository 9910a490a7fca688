#include "tcc/io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <vector>

namespace tcc {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& what)
    : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
      line_(line),
      column_(column) {}

namespace {

struct Token {
    std::string text;
    std::size_t column;
};

std::vector<Token> split(const std::string& line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i == line.size()) break;
        const auto start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        out.push_back({line.substr(start, i - start), start + 1});
    }
    return out;
}

std::uint64_t parse_uint(const Token& tok, std::size_t line) {
    std::uint64_t v = 0;
    const auto* first = tok.text.data();
    const auto* last = first + tok.text.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last)
        throw ParseError(line, tok.column, "expected a non-negative integer, found '" + tok.text + "'");
    return v;
}

}  // namespace

Matrix read_matrix(std::istream& in) {
    std::string text;
    std::size_t lineno = 0;

    if (!std::getline(in, text)) throw ParseError(1, 1, "missing header 'p rows cols'");
    ++lineno;
    const auto header = split(text);
    if (header.size() != 3)
        throw ParseError(lineno, header.empty() ? 1 : header.front().column,
                         "header must contain exactly three integers 'p rows cols'");
    const auto pv = parse_uint(header[0], lineno);
    const auto rows = parse_uint(header[1], lineno);
    const auto cols = parse_uint(header[2], lineno);
    if (!is_prime(pv) || pv > Prime::max_value)
        throw ParseError(lineno, header[0].column, "field characteristic " + header[0].text + " is not a supported prime");
    if (rows == 0) throw ParseError(lineno, header[1].column, "row count must be positive");
    if (cols == 0) throw ParseError(lineno, header[2].column, "column count must be positive");
    if (rows * cols > (std::uint64_t{1} << 24)) throw ParseError(lineno, header[1].column, "matrix too large");

    const Prime p(pv);
    std::vector<std::uint32_t> entries;
    entries.reserve(rows * cols);
    for (std::uint64_t r = 0; r < rows; ++r) {
        if (!std::getline(in, text))
            throw ParseError(lineno + 1, 1, "expected " + std::to_string(rows) + " rows, found " + std::to_string(r));
        ++lineno;
        const auto toks = split(text);
        if (toks.size() != cols)
            throw ParseError(lineno, toks.size() > cols ? toks[cols].column : text.size() + 1,
                             "expected " + std::to_string(cols) + " entries, found " + std::to_string(toks.size()));
        for (const auto& tok : toks) {
            const auto v = parse_uint(tok, lineno);
            if (v >= pv) throw ParseError(lineno, tok.column, "entry " + tok.text + " is not in [0, " + header[0].text + ")");
            entries.push_back(static_cast<std::uint32_t>(v));
        }
    }
    while (std::getline(in, text)) {
        ++lineno;
        const auto toks = split(text);
        if (!toks.empty()) throw ParseError(lineno, toks.front().column, "unexpected trailing data");
    }
    return Matrix(p, rows, cols, std::move(entries));
}

Matrix read_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open matrix file '" + path + "'");
    try {
        return read_matrix(in);
    } catch (const ParseError& e) {
        throw ParseError(e.line(), e.column(), path + ": " + std::string(e.what()).substr(std::string(e.what()).find(": ") + 2));
    }
}

void write_matrix(std::ostream& out, const Matrix& m) {
    out << m.prime().value() << ' ' << m.rows() << ' ' << m.cols() << '\n';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) out << (j ? " " : "") << m.at(i, j);
        out << '\n';
    }
}

}  // namespace tcc
