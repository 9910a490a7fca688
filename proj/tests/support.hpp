#pragma once

// Random generators and brute-force oracles shared by the test suites. The
// oracles only use enumeration plus mat_mul/equality, never rref or kernels.

#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "tcc/matrix.hpp"

namespace tcc::testing {

inline std::uint32_t random_residue(std::mt19937_64& rng, Prime p) {
    return std::uniform_int_distribution<std::uint32_t>(0, p.value() - 1)(rng);
}

inline Felt random_felt(std::mt19937_64& rng, Prime p) { return Felt(random_residue(rng, p), p); }

inline Matrix random_matrix(std::mt19937_64& rng, Prime p, std::size_t rows, std::size_t cols) {
    std::vector<std::uint32_t> e(rows * cols);
    for (auto& v : e) v = random_residue(rng, p);
    return Matrix(p, rows, cols, std::move(e));
}

inline Vector random_vector(std::mt19937_64& rng, Prime p, std::size_t n) {
    std::vector<std::uint32_t> e(n);
    for (auto& v : e) v = random_residue(rng, p);
    return Vector(p, std::move(e));
}

/// Calls fn(v) for every vector of GF(p)^n in lexicographic order.
template <class Fn>
void for_each_vector(Prime p, std::size_t n, Fn&& fn) {
    Vector v(p, n);
    while (true) {
        fn(v);
        std::size_t i = n;
        while (i > 0) {
            --i;
            if (++v.raw()[i] < p.value()) break;
            v.raw()[i] = 0;
            if (i == 0) return;
        }
        if (n == 0) return;
    }
}

/// |{ v : M v = 0 }| by enumeration.
inline std::uint64_t kernel_size(const Matrix& m) {
    std::uint64_t count = 0;
    for_each_vector(m.prime(), m.cols(), [&](const Vector& v) { count += hamming_weight(mat_vec(m, v)) == 0; });
    return count;
}

/// |row space of M| by enumerating all row combinations.
inline std::uint64_t row_space_size(const Matrix& m) {
    std::set<std::vector<std::uint32_t>> seen;
    for_each_vector(m.prime(), m.rows(), [&](const Vector& c) {
        const auto r = vec_mat(c, m);
        seen.emplace(r.raw().begin(), r.raw().end());
    });
    return seen.size();
}

inline std::size_t log_p(std::uint64_t count, Prime p) {
    std::size_t e = 0;
    while (count > 1) {
        count /= p.value();
        ++e;
    }
    return e;
}

/// Every n x n B with AB == aBA, by direct matrix products.
inline std::vector<Matrix> enumerate_centralizer(const Matrix& A, Felt a) {
    std::vector<Matrix> out;
    const auto n = A.rows();
    for_each_vector(A.prime(), n * n, [&](const Vector& v) {
        Matrix B(A.prime(), n, n, std::vector<std::uint32_t>(v.raw().begin(), v.raw().end()));
        if (A * B == a * (B * A)) out.push_back(B);
    });
    return out;
}

}  // namespace tcc::testing
