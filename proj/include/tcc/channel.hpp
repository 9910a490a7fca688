#pragma once

// q-ary symbol-error channel with exactly t corrupted positions per word.

#include <cstdint>
#include <random>

#include "tcc/code.hpp"

namespace tcc {

using Rng = std::mt19937_64;

struct ErrorSpec {
    std::size_t t = 0;
    std::uint64_t seed = 0;
};

struct ChannelStats {
    std::uint64_t trials = 0;
    std::uint64_t successes = 0;
    std::uint64_t ambiguous = 0;
    std::uint64_t miscorrected = 0;

    ChannelStats& operator+=(const ChannelStats& o) noexcept {
        trials += o.trials;
        successes += o.successes;
        ambiguous += o.ambiguous;
        miscorrected += o.miscorrected;
        return *this;
    }
    bool operator==(const ChannelStats&) const = default;
};

/// Corrupts exactly t distinct positions, chosen uniformly, each replaced by a
/// uniformly chosen different symbol.
[[nodiscard]] Vector inject_errors(const Vector& word, std::size_t t, Rng& rng);

inline constexpr std::uint64_t sweep_limit = std::uint64_t{1} << 24;

/// Work product C(N, t) (p-1)^t p^k of an exhaustive weight-t sweep, saturated
/// just above `sweep_limit`.
[[nodiscard]] std::uint64_t correction_sweep_size(const LinearCode& code, std::size_t t);
/// Sum over w = 1..t of C(N, w) (p-1)^w p^k, saturated the same way.
[[nodiscard]] std::uint64_t detection_sweep_size(const LinearCode& code, std::size_t t);

/// True iff every message under every weight-t error pattern decodes uniquely
/// back to that message.
[[nodiscard]] bool exhaustive_correction_check(const LinearCode& code, std::size_t t);

/// True iff no error pattern of weight 1..t turns a codeword into another codeword.
[[nodiscard]] bool exhaustive_detection_check(const LinearCode& code, std::size_t t);

/// `trials` independent (message, weight-t error) draws. Trial i uses its own
/// generator derived from (seed, i), so results do not depend on thread count.
[[nodiscard]] ChannelStats monte_carlo(const LinearCode& code, std::size_t t, std::uint64_t trials, std::uint64_t seed);

/// Generator used for trial `index` of a Monte Carlo run.
[[nodiscard]] Rng trial_rng(std::uint64_t seed, std::uint64_t index);

namespace serial {

[[nodiscard]] bool exhaustive_correction_check(const LinearCode& code, std::size_t t);
[[nodiscard]] bool exhaustive_detection_check(const LinearCode& code, std::size_t t);
[[nodiscard]] ChannelStats monte_carlo(const LinearCode& code, std::size_t t, std::uint64_t trials, std::uint64_t seed);

}  // namespace serial

}  // namespace tcc
