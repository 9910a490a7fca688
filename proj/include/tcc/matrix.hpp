#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "tcc/field.hpp"

namespace tcc {

/// Vector over GF(p). Entries are stored as reduced residues.
class Vector {
public:
    Vector(Prime p, std::size_t length);
    Vector(Prime p, std::vector<std::uint32_t> entries);

    [[nodiscard]] Prime prime() const noexcept { return p_; }
    [[nodiscard]] std::size_t size() const noexcept { return data_.size(); }
    [[nodiscard]] Felt operator[](std::size_t i) const { return Felt(data_[i], p_); }
    void set(std::size_t i, Felt value);

    [[nodiscard]] std::span<const std::uint32_t> raw() const noexcept { return data_; }
    [[nodiscard]] std::span<std::uint32_t> raw() noexcept { return data_; }

    bool operator==(const Vector&) const = default;

private:
    Prime p_;
    std::vector<std::uint32_t> data_;
};

/// Number of positions where two equal-length words differ.
[[nodiscard]] std::size_t hamming_distance(const Vector& a, const Vector& b);
[[nodiscard]] std::size_t hamming_weight(const Vector& v);

/// Dense row-major matrix over GF(p) with at least one row and one column.
class Matrix {
public:
    Matrix(Prime p, std::size_t rows, std::size_t cols);
    Matrix(Prime p, std::size_t rows, std::size_t cols, std::vector<std::uint32_t> entries);
    /// Convenience for tests and literals; values are reduced mod p.
    Matrix(Prime p, std::initializer_list<std::initializer_list<std::int64_t>> rows);

    static Matrix identity(Prime p, std::size_t n);
    static Matrix zero(Prime p, std::size_t rows, std::size_t cols) { return Matrix(p, rows, cols); }
    static Matrix diagonal(std::span<const Felt> diag);
    /// Stacks vectors of equal length as rows.
    static Matrix from_rows(std::span<const Vector> rows);

    [[nodiscard]] Prime prime() const noexcept { return p_; }
    [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
    [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
    [[nodiscard]] bool is_square() const noexcept { return rows_ == cols_; }

    [[nodiscard]] Felt operator()(std::size_t i, std::size_t j) const { return Felt(at(i, j), p_); }
    void set(std::size_t i, std::size_t j, Felt value);

    [[nodiscard]] std::uint32_t at(std::size_t i, std::size_t j) const noexcept { return data_[i * cols_ + j]; }
    [[nodiscard]] std::uint32_t& at(std::size_t i, std::size_t j) noexcept { return data_[i * cols_ + j]; }
    [[nodiscard]] std::span<const std::uint32_t> raw() const noexcept { return data_; }

    [[nodiscard]] Vector row(std::size_t i) const;
    [[nodiscard]] Vector col(std::size_t j) const;
    [[nodiscard]] Matrix transpose() const;
    [[nodiscard]] bool is_zero() const noexcept;
    [[nodiscard]] bool is_diagonal() const noexcept;
    [[nodiscard]] bool is_upper_triangular() const noexcept;

    bool operator==(const Matrix&) const = default;

private:
    Prime p_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<std::uint32_t> data_;
};

[[nodiscard]] Matrix mat_mul(const Matrix& a, const Matrix& b);
[[nodiscard]] Matrix mat_add(const Matrix& a, const Matrix& b);
[[nodiscard]] Matrix mat_sub(const Matrix& a, const Matrix& b);
[[nodiscard]] Matrix mat_scale(Felt s, const Matrix& a);
[[nodiscard]] Vector mat_vec(const Matrix& a, const Vector& v);
/// Row vector times matrix.
[[nodiscard]] Vector vec_mat(const Vector& v, const Matrix& a);
[[nodiscard]] Vector vec_add(const Vector& a, const Vector& b);
[[nodiscard]] Vector vec_scale(Felt s, const Vector& v);

inline Matrix operator*(const Matrix& a, const Matrix& b) { return mat_mul(a, b); }
inline Matrix operator+(const Matrix& a, const Matrix& b) { return mat_add(a, b); }
inline Matrix operator-(const Matrix& a, const Matrix& b) { return mat_sub(a, b); }
inline Matrix operator*(Felt s, const Matrix& a) { return mat_scale(s, a); }

struct RrefResult {
    Matrix reduced;
    std::size_t rank;
    std::vector<std::size_t> pivots;
};

/// Gauss-Jordan elimination to the unique reduced row-echelon form.
[[nodiscard]] RrefResult rref(const Matrix& m);
[[nodiscard]] std::size_t rank(const Matrix& m);

/// Null-space basis, one vector per free column of rref(m) in increasing column order.
[[nodiscard]] std::vector<Vector> kernel_basis(const Matrix& m);

/// Throws Error("matrix not invertible") for singular input.
[[nodiscard]] Matrix inverse(const Matrix& m);

[[nodiscard]] Matrix kronecker(const Matrix& a, const Matrix& b);

/// Column-stacking vectorization: column 0 first, then column 1, ...
[[nodiscard]] Vector vec(const Matrix& m);
[[nodiscard]] Matrix unvec(const Vector& v, std::size_t rows, std::size_t cols);

/// Canonical row space: the nonzero rows of rref of the stacked vectors.
/// Returns an empty list for the zero space.
[[nodiscard]] std::vector<Vector> canonical_row_basis(std::span<const Vector> vectors);

/// True iff v lies in the row space of the canonical (RREF) basis.
[[nodiscard]] bool in_row_space(std::span<const Vector> canonical_basis, const Vector& v);

}  // namespace tcc
