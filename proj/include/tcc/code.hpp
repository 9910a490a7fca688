#pragma once

// Linear codes of length n^2 obtained from centralizer bases.

#include <cstdint>
#include <optional>
#include <string>

#include "tcc/centralizer.hpp"
#include "tcc/matrix.hpp"

namespace tcc {

inline constexpr std::uint64_t enumeration_limit = std::uint64_t{1} << 20;

/// Length-N code over GF(p) held by an RREF, full-rank generator. A zero code
/// (k = 0) has no generator.
class LinearCode {
public:
    /// Builds the code spanned by `rows`; the rows are row-reduced and
    /// dependent rows dropped.
    LinearCode(Prime p, std::size_t length, std::span<const Vector> rows);

    [[nodiscard]] Prime prime() const noexcept { return p_; }
    [[nodiscard]] std::size_t length() const noexcept { return length_; }
    [[nodiscard]] std::size_t dimension() const noexcept { return generator_ ? generator_->rows() : 0; }
    [[nodiscard]] const std::optional<Matrix>& generator() const noexcept { return generator_; }

    /// p^k; throws GuardExceeded when it exceeds `limit`.
    [[nodiscard]] std::uint64_t codeword_count(std::uint64_t limit = enumeration_limit) const;
    /// Message for an index in [0, p^k), first coordinate most significant.
    [[nodiscard]] Vector message_at(std::uint64_t index) const;
    /// True iff `word` is a codeword (RREF residual test).
    [[nodiscard]] bool contains(const Vector& word) const;

private:
    Prime p_;
    std::size_t length_;
    std::optional<Matrix> generator_;
};

struct Rate {
    std::size_t k;
    std::size_t n;

    [[nodiscard]] std::string str() const { return std::to_string(k) + "/" + std::to_string(n); }
    bool operator==(const Rate&) const = default;
};

struct CodeReport {
    std::size_t length;
    std::size_t dimension;
    std::size_t min_distance;
    bool mds;
    std::size_t detect;
    std::size_t correct;
    Rate rate;

    bool operator==(const CodeReport&) const = default;
};

enum class DecodeStatus { unique, ambiguous };

struct DecodeResult {
    DecodeStatus status;
    Vector codeword;
    Vector message;
    std::size_t distance;
};

[[nodiscard]] LinearCode code_from_basis(const CentralizerBasis& basis);

/// Minimum nonzero Hamming weight by exhaustive enumeration of all p^k - 1
/// nonzero messages (OpenMP min-reduction).
[[nodiscard]] std::size_t min_distance(const LinearCode& code);

/// [N, k, d] with Singleton analysis. d - 1 errors are detectable and
/// floor((d - 1) / 2) correctable.
[[nodiscard]] CodeReport analyze(const LinearCode& code);
/// Report for known parameters; analyze() delegates here after computing d.
[[nodiscard]] CodeReport report_from_parameters(std::size_t length, std::size_t dimension, std::size_t distance);

[[nodiscard]] Vector encode(const LinearCode& code, const Vector& msg);

/// Nearest codeword by exhaustive scoring. Ties are reported as ambiguous and
/// carry the minimizer with the smallest message index.
[[nodiscard]] DecodeResult decode_nearest(const LinearCode& code, const Vector& word);

namespace serial {

[[nodiscard]] std::size_t min_distance(const LinearCode& code);
[[nodiscard]] DecodeResult decode_nearest(const LinearCode& code, const Vector& word);

}  // namespace serial

}  // namespace tcc
