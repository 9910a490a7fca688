#pragma once

// Flattened list of every codeword, shared by the enumeration kernels.

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "tcc/code.hpp"

namespace tcc::detail {

struct Nearest {
    std::size_t distance = std::numeric_limits<std::size_t>::max();
    std::uint64_t index = 0;  // smallest message index attaining `distance`
    std::uint64_t ties = 0;   // number of codewords attaining `distance`

    /// Associative, order-independent merge of two partial scans.
    void merge(const Nearest& other) noexcept {
        if (other.distance < distance) {
            *this = other;
        } else if (other.distance == distance) {
            ties += other.ties;
            if (other.index < index) index = other.index;
        }
    }

    void offer(std::size_t d, std::uint64_t i) noexcept { merge(Nearest{d, i, 1}); }
};

class Codebook {
public:
    explicit Codebook(const LinearCode& code) : length_(code.length()), count_(code.codeword_count()) {
        words_.assign(count_ * length_, 0);
        const auto p = code.prime().value();
        if (!code.generator()) return;
        const auto& g = *code.generator();
        for (std::uint64_t m = 0; m < count_; ++m) {
            const auto msg = code.message_at(m);
            auto* out = words_.data() + m * length_;
            for (std::size_t r = 0; r < g.rows(); ++r) {
                const auto c = msg.raw()[r];
                if (c == 0) continue;
                for (std::size_t j = 0; j < length_; ++j) out[j] = mod::add(out[j], mod::mul(c, g.at(r, j), p), p);
            }
        }
    }

    [[nodiscard]] std::uint64_t size() const noexcept { return count_; }
    [[nodiscard]] std::size_t length() const noexcept { return length_; }
    [[nodiscard]] std::span<const std::uint32_t> word(std::uint64_t i) const noexcept {
        return {words_.data() + i * length_, length_};
    }

    [[nodiscard]] std::size_t distance(std::uint64_t i, std::span<const std::uint32_t> w) const noexcept {
        const auto c = word(i);
        std::size_t d = 0;
        for (std::size_t j = 0; j < length_; ++j) d += c[j] != w[j];
        return d;
    }

    /// Scans codewords [begin, end).
    [[nodiscard]] Nearest scan(std::span<const std::uint32_t> w, std::uint64_t begin, std::uint64_t end) const noexcept {
        Nearest best;
        for (std::uint64_t i = begin; i < end; ++i) best.offer(distance(i, w), i);
        return best;
    }

    [[nodiscard]] Nearest nearest(std::span<const std::uint32_t> w) const noexcept { return scan(w, 0, count_); }

private:
    std::size_t length_;
    std::uint64_t count_;
    std::vector<std::uint32_t> words_;
};

}  // namespace tcc::detail
