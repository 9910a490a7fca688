#include "tcc/centralizer.hpp"

#include <algorithm>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace tcc {

TwistSpec::TwistSpec(Matrix A_, Felt a_) : A(std::move(A_)), a(a_) {
    if (!A.is_square()) throw Error("twist matrix must be square");
    if (A.rows() > 64) throw Error("twist matrix order exceeds 64");
    if (A.prime() != a.prime()) throw Error("twist constant and matrix lie in different fields");
}

std::vector<Vector> CentralizerBasis::vec_rows() const {
    std::vector<Vector> rows;
    rows.reserve(basis.size());
    for (const auto& b : basis) rows.push_back(vec(b));
    return rows;
}

Matrix twisted_operator(const TwistSpec& spec) {
    const auto I = Matrix::identity(spec.prime(), spec.n());
    return kronecker(I, spec.A) - spec.a * kronecker(spec.A.transpose(), I);
}

namespace {

CentralizerBasis normalized(TwistSpec spec, std::span<const Vector> vecs) {
    const auto n = spec.n();
    CentralizerBasis out{std::move(spec), {}};
    for (const auto& row : canonical_row_basis(vecs)) out.basis.push_back(unvec(row, n, n));
    return out;
}

std::uint64_t enumeration_size(const TwistSpec& spec) {
    const std::uint64_t p = spec.prime().value();
    const std::size_t cells = spec.n() * spec.n();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < cells; ++i) {
        total *= p;
        if (total > brute_force_limit)
            throw GuardExceeded("brute_force_centralizer: p^(n^2) = " + std::to_string(p) + "^" +
                                std::to_string(cells) + " exceeds 2^20");
    }
    return total;
}

/// Writes the index-th matrix (row-major entries, entry 0 most significant) into `entries`.
void decode_index(std::uint64_t index, std::uint32_t p, std::vector<std::uint32_t>& entries) {
    for (std::size_t k = entries.size(); k-- > 0;) {
        entries[k] = static_cast<std::uint32_t>(index % p);
        index /= p;
    }
}

/// AB == a BA on raw row-major residues.
bool satisfies(const Matrix& A, std::uint32_t a, std::span<const std::uint32_t> B, std::size_t n, std::uint32_t p) {
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::uint64_t ab = 0, ba = 0;
            for (std::size_t k = 0; k < n; ++k) {
                ab += std::uint64_t{A.at(i, k)} * B[k * n + j];
                ba += std::uint64_t{B[i * n + k]} * A.at(k, j);
            }
            if (ab % p != (ba % p) * a % p) return false;
        }
    return true;
}

}  // namespace

CentralizerBasis centralizer_code(const TwistSpec& spec) {
    const auto kernel = kernel_basis(twisted_operator(spec));
    return normalized(spec, kernel);
}

bool is_member(const Matrix& B, const TwistSpec& spec) {
    if (B.prime() != spec.prime()) throw Error("is_member: field mismatch");
    if (B.rows() != spec.n() || B.cols() != spec.n()) throw Error("is_member: shape mismatch");
    return spec.A * B == spec.a * (B * spec.A);
}

std::vector<Matrix> brute_force_centralizer(const TwistSpec& spec) {
    const auto total = static_cast<std::int64_t>(enumeration_size(spec));
    const auto n = spec.n();
    const auto p = spec.prime().value();
    const auto a = spec.a.value();

    std::vector<std::vector<std::uint32_t>> found;
#pragma omp parallel
    {
        std::vector<std::vector<std::uint32_t>> local;
        std::vector<std::uint32_t> entries(n * n);
#pragma omp for schedule(static) nowait
        for (std::int64_t idx = 0; idx < total; ++idx) {
            decode_index(static_cast<std::uint64_t>(idx), p, entries);
            if (satisfies(spec.A, a, entries, n, p)) local.push_back(entries);
        }
#pragma omp critical
        found.insert(found.end(), std::make_move_iterator(local.begin()), std::make_move_iterator(local.end()));
    }
    std::sort(found.begin(), found.end());

    std::vector<Matrix> out;
    out.reserve(found.size());
    for (auto& e : found) out.emplace_back(spec.prime(), n, n, std::move(e));
    return out;
}

namespace serial {

std::vector<Matrix> brute_force_centralizer(const TwistSpec& spec) {
    const auto total = enumeration_size(spec);
    const auto n = spec.n();
    const auto p = spec.prime().value();
    std::vector<Matrix> out;
    std::vector<std::uint32_t> entries(n * n);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        decode_index(idx, p, entries);
        Matrix B(spec.prime(), n, n, entries);
        if (is_member(B, spec)) out.push_back(std::move(B));
    }
    return out;
}

}  // namespace serial

CentralizerBasis conjugation_transfer(const CentralizerBasis& basisD, const Matrix& P, const Matrix& A) {
    const auto Pinv = inverse(P);
    TwistSpec target(A, basisD.spec.a);
    std::vector<Vector> images;
    images.reserve(basisD.dim());
    for (const auto& B : basisD.basis) {
        auto image = Pinv * B * P;
        if (!is_member(image, target)) throw Error("conjugation transfer broke membership");
        images.push_back(vec(image));
    }
    return normalized(std::move(target), images);
}

CentralizerBasis conjugation_transfer(const CentralizerBasis& basisD, const Matrix& P) {
    return conjugation_transfer(basisD, P, inverse(P) * basisD.spec.A * P);
}

}  // namespace tcc
