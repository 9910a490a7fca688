#pragma once

// Twisted centralizers C(A, a) = { B : A B = a B A } over GF(p).

#include <cstdint>
#include <vector>

#include "tcc/matrix.hpp"

namespace tcc {

struct TwistSpec {
    Matrix A;
    Felt a;

    /// Requires A square, n <= 64, and a in the same field as A.
    TwistSpec(Matrix A, Felt a);

    [[nodiscard]] std::size_t n() const noexcept { return A.rows(); }
    [[nodiscard]] Prime prime() const noexcept { return A.prime(); }
};

/// Basis of C(A, a). The vec images of `basis` are the rows of an RREF matrix,
/// so two centralizers are equal iff their bases compare equal.
struct CentralizerBasis {
    TwistSpec spec;
    std::vector<Matrix> basis;

    [[nodiscard]] std::size_t dim() const noexcept { return basis.size(); }
    /// vec images of the basis, i.e. the generator rows.
    [[nodiscard]] std::vector<Vector> vec_rows() const;
};

/// T = (I (x) A) - a (A^T (x) I), so that T vec(B) = vec(AB - aBA).
[[nodiscard]] Matrix twisted_operator(const TwistSpec& spec);

[[nodiscard]] CentralizerBasis centralizer_code(const TwistSpec& spec);

[[nodiscard]] bool is_member(const Matrix& B, const TwistSpec& spec);

inline constexpr std::uint64_t brute_force_limit = std::uint64_t{1} << 20;

/// Every n x n matrix B over GF(p) with AB = aBA, sorted lexicographically by
/// row-major entries. OpenMP-parallel over the enumeration range; guarded by
/// p^(n^2) <= 2^20.
[[nodiscard]] std::vector<Matrix> brute_force_centralizer(const TwistSpec& spec);

/// Maps a basis of C(D, a) to C(A, a) through B -> P^-1 B P, where
/// D = P A P^-1. Each image is checked against (A, a).
[[nodiscard]] CentralizerBasis conjugation_transfer(const CentralizerBasis& basisD, const Matrix& P, const Matrix& A);
/// Same, with A recovered as P^-1 D P.
[[nodiscard]] CentralizerBasis conjugation_transfer(const CentralizerBasis& basisD, const Matrix& P);

namespace serial {

/// Single-threaded reference for brute_force_centralizer.
[[nodiscard]] std::vector<Matrix> brute_force_centralizer(const TwistSpec& spec);

}  // namespace serial

}  // namespace tcc
