#pragma once

// Combinatorial matrices A = x*J_n + y*I_n over GF(p) and their spectra.

#include <cstddef>
#include <utility>
#include <vector>

#include "tcc/matrix.hpp"

namespace tcc {

inline constexpr std::size_t max_order = 64;

struct CombParams {
    std::size_t n;
    Felt x;
    Felt y;

    /// Validates 2 <= n <= 64 and that x, y live in GF(p).
    CombParams(std::size_t n, Felt x, Felt y);
    CombParams(std::size_t n, std::int64_t x, std::int64_t y, Prime p)
        : CombParams(n, Felt::from_signed(x, p), Felt::from_signed(y, p)) {}

    [[nodiscard]] Prime prime() const noexcept { return x.prime(); }
    /// (x*n + y) mod p, the eigenvalue carried by the all-ones vector.
    [[nodiscard]] Felt row_sum() const;
};

/// Eigenvalue and geometric multiplicity pairs, sorted by eigenvalue.
struct Spectrum {
    std::vector<std::pair<Felt, std::size_t>> entries;

    [[nodiscard]] std::size_t total_multiplicity() const noexcept;
    bool operator==(const Spectrum&) const = default;
};

/// P * A * P^-1 = D with D diagonal.
struct DiagPair {
    Matrix P;
    Matrix D;
};

enum class SpecialKind { J, I, E11 };

[[nodiscard]] Matrix comb_matrix(const CombParams& params);
[[nodiscard]] Matrix special_matrix(SpecialKind kind, std::size_t n, Prime p);

inline constexpr std::uint32_t eigen_scan_max_prime = 997;

/// Geometric multiplicity of every lambda in GF(p) with nontrivial eigenspace.
/// Cost is O(p n^3); rejects p > 997.
[[nodiscard]] Spectrum eigen_scan(const Matrix& m);

/// Closed-form spectrum of a combinatorial matrix. When x*n == 0 mod p with
/// x != 0 the two eigenvalues coincide and the geometric multiplicity is n - 1
/// (rank(xJ) = 1), so the matrix is defective.
[[nodiscard]] Spectrum comb_spectrum(const CombParams& params);

/// Checks A * u == (xn + y) * u for the all-ones vector u.
[[nodiscard]] bool all_ones_eigencheck(const CombParams& params);

/// Diagonalizes A through an explicit eigenbasis: row 0 of P is the all-ones
/// vector, the remaining rows span the null space of J_n. D = diag(xn+y, y, ..., y).
/// Throws Error("defective over GF(p)") when the eigenvalues merge and x != 0.
[[nodiscard]] DiagPair diagonalize(const CombParams& params);

/// Row/column reduction by elementary matrices: P = R_{n-1} ... R_1 where R_i
/// subtracts row 0 from row i. Returns (P, P A P^-1). The result is upper
/// triangular with diagonal (xn+y, y, ..., y) and x in the rest of row 0, so it
/// is diagonal only when x == 0. Kept to document that reduction; use
/// diagonalize() for an actual diagonal form.
[[nodiscard]] DiagPair elementary_reduction(const CombParams& params);

}  // namespace tcc
