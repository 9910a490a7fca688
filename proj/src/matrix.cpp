#include "tcc/matrix.hpp"

#include <algorithm>
#include <string>

namespace tcc {

namespace {

void require_field(Prime a, Prime b, const char* op) {
    if (a != b)
        throw Error(std::string(op) + ": field mismatch GF(" + std::to_string(a.value()) + ") vs GF(" +
                    std::to_string(b.value()) + ")");
}

std::string shape(const Matrix& m) { return std::to_string(m.rows()) + "x" + std::to_string(m.cols()); }

}  // namespace

// ---------------------------------------------------------------- Vector

Vector::Vector(Prime p, std::size_t length) : p_(p), data_(length, 0) {}

Vector::Vector(Prime p, std::vector<std::uint32_t> entries) : p_(p), data_(std::move(entries)) {
    for (auto& e : data_) e %= p_.value();
}

void Vector::set(std::size_t i, Felt value) {
    require_field(p_, value.prime(), "Vector::set");
    data_.at(i) = value.value();
}

std::size_t hamming_distance(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) throw Error("hamming_distance: length mismatch");
    std::size_t d = 0;
    for (std::size_t i = 0; i < a.size(); ++i) d += a.raw()[i] != b.raw()[i];
    return d;
}

std::size_t hamming_weight(const Vector& v) {
    return static_cast<std::size_t>(std::count_if(v.raw().begin(), v.raw().end(), [](auto e) { return e != 0; }));
}

Vector vec_add(const Vector& a, const Vector& b) {
    require_field(a.prime(), b.prime(), "vec_add");
    if (a.size() != b.size()) throw Error("vec_add: length mismatch");
    Vector r(a.prime(), a.size());
    const auto p = a.prime().value();
    for (std::size_t i = 0; i < a.size(); ++i) r.raw()[i] = mod::add(a.raw()[i], b.raw()[i], p);
    return r;
}

Vector vec_scale(Felt s, const Vector& v) {
    require_field(s.prime(), v.prime(), "vec_scale");
    Vector r(v.prime(), v.size());
    const auto p = v.prime().value();
    for (std::size_t i = 0; i < v.size(); ++i) r.raw()[i] = mod::mul(s.value(), v.raw()[i], p);
    return r;
}

// ---------------------------------------------------------------- Matrix

Matrix::Matrix(Prime p, std::size_t rows, std::size_t cols) : p_(p), rows_(rows), cols_(cols), data_(rows * cols, 0) {
    if (rows == 0 || cols == 0) throw Error("matrix must have at least one row and one column");
}

Matrix::Matrix(Prime p, std::size_t rows, std::size_t cols, std::vector<std::uint32_t> entries)
    : p_(p), rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (rows == 0 || cols == 0) throw Error("matrix must have at least one row and one column");
    if (data_.size() != rows * cols)
        throw Error("matrix entry count " + std::to_string(data_.size()) + " does not match shape " +
                    std::to_string(rows) + "x" + std::to_string(cols));
    for (auto& e : data_) e %= p_.value();
}

Matrix::Matrix(Prime p, std::initializer_list<std::initializer_list<std::int64_t>> rows)
    : p_(p), rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
    if (rows_ == 0 || cols_ == 0) throw Error("matrix must have at least one row and one column");
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw Error("ragged matrix literal");
        for (auto e : r) data_.push_back(Felt::from_signed(e, p).value());
    }
}

Matrix Matrix::identity(Prime p, std::size_t n) {
    Matrix m(p, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1 % p.value();
    return m;
}

Matrix Matrix::diagonal(std::span<const Felt> diag) {
    if (diag.empty()) throw Error("diagonal: empty diagonal");
    Matrix m(diag.front().prime(), diag.size(), diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) m.set(i, i, diag[i]);
    return m;
}

Matrix Matrix::from_rows(std::span<const Vector> rows) {
    if (rows.empty()) throw Error("from_rows: no rows");
    const auto cols = rows.front().size();
    Matrix m(rows.front().prime(), rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        require_field(m.prime(), rows[i].prime(), "from_rows");
        if (rows[i].size() != cols) throw Error("from_rows: ragged rows");
        std::copy(rows[i].raw().begin(), rows[i].raw().end(), m.data_.begin() + static_cast<std::ptrdiff_t>(i * cols));
    }
    return m;
}

void Matrix::set(std::size_t i, std::size_t j, Felt value) {
    require_field(p_, value.prime(), "Matrix::set");
    if (i >= rows_ || j >= cols_) throw Error("Matrix::set: index out of range");
    at(i, j) = value.value();
}

Vector Matrix::row(std::size_t i) const {
    return Vector(p_, std::vector<std::uint32_t>(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                                                 data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)));
}

Vector Matrix::col(std::size_t j) const {
    Vector v(p_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) v.raw()[i] = at(i, j);
    return v;
}

Matrix Matrix::transpose() const {
    Matrix t(p_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

bool Matrix::is_zero() const noexcept {
    return std::all_of(data_.begin(), data_.end(), [](auto e) { return e == 0; });
}

bool Matrix::is_diagonal() const noexcept {
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (i != j && at(i, j) != 0) return false;
    return true;
}

bool Matrix::is_upper_triangular() const noexcept {
    for (std::size_t i = 1; i < rows_; ++i)
        for (std::size_t j = 0; j < std::min(i, cols_); ++j)
            if (at(i, j) != 0) return false;
    return true;
}

// ---------------------------------------------------------------- arithmetic

Matrix mat_mul(const Matrix& a, const Matrix& b) {
    require_field(a.prime(), b.prime(), "mat_mul");
    if (a.cols() != b.rows()) throw Error("mat_mul: shape mismatch " + shape(a) + " * " + shape(b));
    const std::uint64_t p = a.prime().value();
    Matrix c(a.prime(), a.rows(), b.cols());
    std::vector<std::uint64_t> acc(b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        std::fill(acc.begin(), acc.end(), 0);
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const std::uint64_t aik = a.at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) acc[j] = (acc[j] + aik * b.at(k, j)) % p;
        }
        for (std::size_t j = 0; j < b.cols(); ++j) c.at(i, j) = static_cast<std::uint32_t>(acc[j]);
    }
    return c;
}

Matrix mat_add(const Matrix& a, const Matrix& b) {
    require_field(a.prime(), b.prime(), "mat_add");
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error("mat_add: shape mismatch");
    Matrix c(a.prime(), a.rows(), a.cols());
    const auto p = a.prime().value();
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c.at(i, j) = mod::add(a.at(i, j), b.at(i, j), p);
    return c;
}

Matrix mat_sub(const Matrix& a, const Matrix& b) {
    require_field(a.prime(), b.prime(), "mat_sub");
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error("mat_sub: shape mismatch");
    Matrix c(a.prime(), a.rows(), a.cols());
    const auto p = a.prime().value();
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c.at(i, j) = mod::sub(a.at(i, j), b.at(i, j), p);
    return c;
}

Matrix mat_scale(Felt s, const Matrix& a) {
    require_field(s.prime(), a.prime(), "mat_scale");
    Matrix c(a.prime(), a.rows(), a.cols());
    const auto p = a.prime().value();
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c.at(i, j) = mod::mul(s.value(), a.at(i, j), p);
    return c;
}

Vector mat_vec(const Matrix& a, const Vector& v) {
    require_field(a.prime(), v.prime(), "mat_vec");
    if (a.cols() != v.size()) throw Error("mat_vec: shape mismatch");
    const std::uint64_t p = a.prime().value();
    Vector r(a.prime(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        std::uint64_t acc = 0;
        for (std::size_t j = 0; j < a.cols(); ++j) acc = (acc + std::uint64_t{a.at(i, j)} * v.raw()[j]) % p;
        r.raw()[i] = static_cast<std::uint32_t>(acc);
    }
    return r;
}

Vector vec_mat(const Vector& v, const Matrix& a) {
    require_field(a.prime(), v.prime(), "vec_mat");
    if (a.rows() != v.size()) throw Error("vec_mat: shape mismatch");
    const std::uint64_t p = a.prime().value();
    std::vector<std::uint64_t> acc(a.cols(), 0);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        const std::uint64_t vi = v.raw()[i];
        if (vi == 0) continue;
        for (std::size_t j = 0; j < a.cols(); ++j) acc[j] = (acc[j] + vi * a.at(i, j)) % p;
    }
    Vector r(a.prime(), a.cols());
    for (std::size_t j = 0; j < a.cols(); ++j) r.raw()[j] = static_cast<std::uint32_t>(acc[j]);
    return r;
}

// ---------------------------------------------------------------- elimination

RrefResult rref(const Matrix& m) {
    Matrix r = m;
    const auto p = m.prime().value();
    std::vector<std::size_t> pivots;
    std::size_t lead = 0;
    for (std::size_t col = 0; col < r.cols() && lead < r.rows(); ++col) {
        std::size_t sel = lead;
        while (sel < r.rows() && r.at(sel, col) == 0) ++sel;
        if (sel == r.rows()) continue;
        if (sel != lead)
            for (std::size_t j = 0; j < r.cols(); ++j) std::swap(r.at(sel, j), r.at(lead, j));

        const auto scale = mod::inv(r.at(lead, col), p);
        for (std::size_t j = col; j < r.cols(); ++j) r.at(lead, j) = mod::mul(r.at(lead, j), scale, p);

        for (std::size_t i = 0; i < r.rows(); ++i) {
            if (i == lead) continue;
            const auto f = r.at(i, col);
            if (f == 0) continue;
            for (std::size_t j = col; j < r.cols(); ++j)
                r.at(i, j) = mod::sub(r.at(i, j), mod::mul(f, r.at(lead, j), p), p);
        }
        pivots.push_back(col);
        ++lead;
    }
    return {std::move(r), pivots.size(), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

std::vector<Vector> kernel_basis(const Matrix& m) {
    const auto [r, rk, pivots] = rref(m);
    const auto p = m.prime().value();
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;

    std::vector<Vector> basis;
    basis.reserve(m.cols() - rk);
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        Vector v(m.prime(), m.cols());
        v.raw()[free] = 1;
        for (std::size_t i = 0; i < rk; ++i) v.raw()[pivots[i]] = mod::neg(r.at(i, free), p);
        basis.push_back(std::move(v));
    }
    return basis;
}

Matrix inverse(const Matrix& m) {
    if (!m.is_square()) throw Error("inverse: matrix is not square (" + shape(m) + ")");
    const auto n = m.rows();
    Matrix aug(m.prime(), n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = 1;
    }
    const auto red = rref(aug);
    if (red.rank < n || red.pivots[n - 1] != n - 1) throw Error("matrix not invertible");
    Matrix inv(m.prime(), n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = red.reduced.at(i, n + j);
    return inv;
}

Matrix kronecker(const Matrix& a, const Matrix& b) {
    require_field(a.prime(), b.prime(), "kronecker");
    const auto p = a.prime().value();
    Matrix k(a.prime(), a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const auto aij = a.at(i, j);
            if (aij == 0) continue;
            for (std::size_t r = 0; r < b.rows(); ++r)
                for (std::size_t c = 0; c < b.cols(); ++c)
                    k.at(i * b.rows() + r, j * b.cols() + c) = mod::mul(aij, b.at(r, c), p);
        }
    return k;
}

Vector vec(const Matrix& m) {
    Vector v(m.prime(), m.rows() * m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j)
        for (std::size_t i = 0; i < m.rows(); ++i) v.raw()[j * m.rows() + i] = m.at(i, j);
    return v;
}

Matrix unvec(const Vector& v, std::size_t rows, std::size_t cols) {
    if (v.size() != rows * cols)
        throw Error("unvec: vector length " + std::to_string(v.size()) + " does not match " + std::to_string(rows) +
                    "x" + std::to_string(cols));
    Matrix m(v.prime(), rows, cols);
    for (std::size_t j = 0; j < cols; ++j)
        for (std::size_t i = 0; i < rows; ++i) m.at(i, j) = v.raw()[j * rows + i];
    return m;
}

std::vector<Vector> canonical_row_basis(std::span<const Vector> vectors) {
    if (vectors.empty()) return {};
    const auto red = rref(Matrix::from_rows(vectors));
    std::vector<Vector> out;
    out.reserve(red.rank);
    for (std::size_t i = 0; i < red.rank; ++i) out.push_back(red.reduced.row(i));
    return out;
}

bool in_row_space(std::span<const Vector> canonical_basis, const Vector& v) {
    Vector residual = v;
    const auto p = v.prime().value();
    for (const auto& row : canonical_basis) {
        require_field(row.prime(), v.prime(), "in_row_space");
        if (row.size() != v.size()) throw Error("in_row_space: length mismatch");
        const auto lead = static_cast<std::size_t>(
            std::find_if(row.raw().begin(), row.raw().end(), [](auto e) { return e != 0; }) - row.raw().begin());
        if (lead == row.size()) continue;
        const auto coeff = residual.raw()[lead];
        if (coeff == 0) continue;
        for (std::size_t j = 0; j < v.size(); ++j)
            residual.raw()[j] = mod::sub(residual.raw()[j], mod::mul(coeff, row.raw()[j], p), p);
    }
    return hamming_weight(residual) == 0;
}

}  // namespace tcc
