#pragma once

// Exhaustive parameter sweep checking that every combinatorial matrix with
// p | xn + y, x != 0, y != 0 and a not in {0, 1} yields an [n^2, 1, n^2] code
// spanned by vec(J_n).

#include <vector>

#include "tcc/report.hpp"

namespace tcc {

inline constexpr std::uint32_t verify_max_prime = 13;
inline constexpr std::size_t verify_max_order = 6;

[[nodiscard]] bool theorem_hypotheses(const CombParams& params, Felt a);

/// Builds C(A, a) for A = xJ_n + yI_n and records what was observed.
/// Minimum distance is computed for hypothesis rows and for any other row
/// whose code has at most 4096 codewords.
[[nodiscard]] VerifyRow verify_tuple(const CombParams& params, Felt a);

/// All primes p <= p_max, 2 <= n <= n_max, and x, y, a in GF(p); rows sorted by
/// (p, n, x, y, a). Throws Error if the limits exceed 13 and 6.
[[nodiscard]] std::vector<VerifyRow> verify_sweep(std::uint32_t p_max, std::size_t n_max);

namespace serial {

[[nodiscard]] std::vector<VerifyRow> verify_sweep(std::uint32_t p_max, std::size_t n_max);

}  // namespace serial

}  // namespace tcc
