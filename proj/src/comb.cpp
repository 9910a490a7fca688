#include "tcc/comb.hpp"

#include <algorithm>
#include <string>

namespace tcc {

CombParams::CombParams(std::size_t n_, Felt x_, Felt y_) : n(n_), x(x_), y(y_) {
    if (n < 2) throw Error("order n must be at least 2 (got " + std::to_string(n) + ")");
    if (n > max_order) throw Error("order n must be at most " + std::to_string(max_order));
    if (x.prime() != y.prime()) throw Error("x and y must lie in the same field");
}

Felt CombParams::row_sum() const {
    return x * Felt(n, prime()) + y;
}

std::size_t Spectrum::total_multiplicity() const noexcept {
    std::size_t s = 0;
    for (const auto& [_, m] : entries) s += m;
    return s;
}

Matrix comb_matrix(const CombParams& params) {
    const auto p = params.prime();
    Matrix a(p, params.n, params.n);
    const auto diag = (params.x + params.y).value();
    for (std::size_t i = 0; i < params.n; ++i)
        for (std::size_t j = 0; j < params.n; ++j) a.at(i, j) = i == j ? diag : params.x.value();
    return a;
}

Matrix special_matrix(SpecialKind kind, std::size_t n, Prime p) {
    if (n < 1) throw Error("special_matrix: n must be at least 1");
    switch (kind) {
    case SpecialKind::I:
        return Matrix::identity(p, n);
    case SpecialKind::J:
        return Matrix(p, n, n, std::vector<std::uint32_t>(n * n, 1));
    case SpecialKind::E11: {
        Matrix e(p, n, n);
        e.at(0, 0) = 1;
        return e;
    }
    }
    throw Error("special_matrix: unknown kind");
}

Spectrum eigen_scan(const Matrix& m) {
    if (!m.is_square()) throw Error("eigen_scan: matrix is not square");
    const auto p = m.prime().value();
    if (p > eigen_scan_max_prime)
        throw Error("eigen_scan: p = " + std::to_string(p) + " exceeds " + std::to_string(eigen_scan_max_prime) +
                    "; use comb_spectrum for combinatorial matrices");
    Spectrum s;
    Matrix shifted = m;
    for (std::uint32_t lambda = 0; lambda < p; ++lambda) {
        for (std::size_t i = 0; i < m.rows(); ++i) shifted.at(i, i) = mod::sub(m.at(i, i), lambda, p);
        const auto nullity = m.cols() - rank(shifted);
        if (nullity > 0) s.entries.emplace_back(Felt(lambda, m.prime()), nullity);
    }
    return s;
}

Spectrum comb_spectrum(const CombParams& params) {
    Spectrum s;
    const auto top = params.row_sum();
    if (params.x.is_zero()) {
        s.entries.emplace_back(params.y, params.n);
    } else if (top != params.y) {
        s.entries.emplace_back(top, 1);
        s.entries.emplace_back(params.y, params.n - 1);
    } else {
        // p | xn: u is in the null space of xJ, which already has dimension n - 1.
        s.entries.emplace_back(params.y, params.n - 1);
    }
    std::sort(s.entries.begin(), s.entries.end(),
              [](const auto& l, const auto& r) { return l.first.value() < r.first.value(); });
    return s;
}

bool all_ones_eigencheck(const CombParams& params) {
    const auto p = params.prime();
    const Vector u(p, std::vector<std::uint32_t>(params.n, 1));
    return mat_vec(comb_matrix(params), u) == vec_scale(params.row_sum(), u);
}

DiagPair diagonalize(const CombParams& params) {
    const auto p = params.prime();
    const auto n = params.n;
    if (params.x.is_zero()) return {Matrix::identity(p, n), mat_scale(params.y, Matrix::identity(p, n))};

    const auto top = params.row_sum();
    if (top == params.y)
        throw Error("defective over GF(" + std::to_string(p.value()) + "): eigenvalue " +
                    std::to_string(top.value()) + " has geometric multiplicity " + std::to_string(n - 1) +
                    " < " + std::to_string(n));

    // A is symmetric, so right eigenvectors double as rows of P (left eigenvectors).
    std::vector<Vector> rows;
    rows.emplace_back(p, std::vector<std::uint32_t>(n, 1));
    for (auto& v : kernel_basis(special_matrix(SpecialKind::J, n, p))) rows.push_back(std::move(v));

    std::vector<Felt> diag(n, params.y);
    diag[0] = top;
    return {Matrix::from_rows(rows), Matrix::diagonal(diag)};
}

DiagPair elementary_reduction(const CombParams& params) {
    const auto p = params.prime();
    const auto n = params.n;
    Matrix P = Matrix::identity(p, n);
    for (std::size_t i = 1; i < n; ++i) {
        Matrix r = Matrix::identity(p, n);
        r.at(i, 0) = p.value() - 1;
        P = r * P;
    }
    return {P, P * comb_matrix(params) * inverse(P)};
}

}  // namespace tcc
