#include "tcc/channel.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "codebook.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace tcc {

namespace {

constexpr std::uint64_t saturated = sweep_limit + 1;

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) noexcept {
    if (a == 0 || b == 0) return 0;
    if (a > saturated / b) return saturated;
    return std::min(a * b, saturated);
}

std::uint64_t sat_pow(std::uint64_t base, std::size_t exp) noexcept {
    std::uint64_t r = 1;
    for (std::size_t i = 0; i < exp; ++i) r = sat_mul(r, base);
    return r;
}

std::uint64_t sat_binomial(std::size_t n, std::size_t k) noexcept {
    if (k > n) return 0;
    k = std::min(k, n - k);
    // C(n, i) = C(n, i-1) * (n-i+1) / i stays exact; saturate once it exceeds the limit.
    std::uint64_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) {
        if (r >= saturated) return saturated;
        r = r * (n - i + 1) / i;
    }
    return std::min(r, saturated);
}

std::uint64_t binomial(std::size_t n, std::size_t k) noexcept {
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) r = r * (n - i + 1) / i;
    return r;
}

void require_weight(const LinearCode& code, std::size_t t) {
    if (t > code.length())
        throw Error("error weight " + std::to_string(t) + " exceeds code length " + std::to_string(code.length()));
}

void require_within(std::uint64_t work, const char* what) {
    if (work > sweep_limit)
        throw GuardExceeded(std::string(what) + ": exhaustive sweep exceeds 2^24 decodes; use Monte Carlo instead");
}

/// Lexicographic unranking of a t-subset of {0, ..., n-1}.
std::vector<std::size_t> unrank_combination(std::uint64_t rank, std::size_t n, std::size_t t) {
    std::vector<std::size_t> out;
    out.reserve(t);
    std::size_t c = 0;
    for (std::size_t i = 0; i < t; ++i) {
        for (;; ++c) {
            const auto count = binomial(n - 1 - c, t - 1 - i);
            if (rank < count) break;
            rank -= count;
        }
        out.push_back(c++);
    }
    return out;
}

bool next_combination(std::vector<std::size_t>& comb, std::size_t n) {
    const auto t = comb.size();
    for (std::size_t i = t; i-- > 0;) {
        if (comb[i] < n - t + i) {
            ++comb[i];
            for (std::size_t j = i + 1; j < t; ++j) comb[j] = comb[j - 1] + 1;
            return true;
        }
    }
    return false;
}

/// Applies error offsets (each in 1..p-1) encoded by `pattern` to `positions`.
void apply_pattern(std::span<std::uint32_t> word, std::span<const std::size_t> positions, std::uint64_t pattern,
                   std::uint32_t p) {
    for (auto pos : positions) {
        const auto offset = static_cast<std::uint32_t>(pattern % (p - 1)) + 1;
        pattern /= p - 1;
        word[pos] = mod::add(word[pos], offset, p);
    }
}

/// Calls fn(positions, pattern) for all weight-t patterns whose position set has
/// lexicographic rank in [begin, end).
template <class Fn>
bool for_each_pattern(std::size_t n, std::size_t t, std::uint64_t patterns, std::uint64_t begin, std::uint64_t end,
                      Fn&& fn) {
    if (begin >= end) return true;
    auto comb = unrank_combination(begin, n, t);
    for (std::uint64_t r = begin; r < end; ++r) {
        for (std::uint64_t pat = 0; pat < patterns; ++pat)
            if (!fn(std::span<const std::size_t>(comb), pat)) return false;
        if (r + 1 < end) next_combination(comb, n);
    }
    return true;
}

/// Raw RREF residual membership test.
class Membership {
public:
    explicit Membership(const LinearCode& code) : p_(code.prime().value()) {
        if (!code.generator()) return;
        const auto& g = *code.generator();
        for (std::size_t i = 0; i < g.rows(); ++i) {
            std::size_t lead = 0;
            while (g.at(i, lead) == 0) ++lead;
            leads_.push_back(lead);
            rows_.push_back(g.row(i));
        }
    }

    [[nodiscard]] bool contains(std::span<const std::uint32_t> w) const {
        std::vector<std::uint32_t> r(w.begin(), w.end());
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            const auto c = r[leads_[i]];
            if (c == 0) continue;
            for (std::size_t j = 0; j < r.size(); ++j) r[j] = mod::sub(r[j], mod::mul(c, rows_[i].raw()[j], p_), p_);
        }
        return std::all_of(r.begin(), r.end(), [](auto e) { return e == 0; });
    }

private:
    std::uint32_t p_;
    std::vector<std::size_t> leads_;
    std::vector<Vector> rows_;
};

/// Splits [0, total) into contiguous chunks for dynamic scheduling.
constexpr std::int64_t chunk_count = 256;

template <class Fn>
bool parallel_all_ranks(std::uint64_t total, Fn&& chunk_fn) {
    bool ok = true;
#pragma omp parallel for schedule(dynamic) reduction(&& : ok)
    for (std::int64_t c = 0; c < chunk_count; ++c) {
        const auto begin = total * static_cast<std::uint64_t>(c) / chunk_count;
        const auto end = total * static_cast<std::uint64_t>(c + 1) / chunk_count;
        ok = ok && chunk_fn(begin, end);
    }
    return ok;
}

enum class Outcome { success, ambiguous, miscorrected };

ChannelStats tally(Outcome o) {
    ChannelStats s{1, 0, 0, 0};
    switch (o) {
    case Outcome::success: s.successes = 1; break;
    case Outcome::ambiguous: s.ambiguous = 1; break;
    case Outcome::miscorrected: s.miscorrected = 1; break;
    }
    return s;
}

}  // namespace

Vector inject_errors(const Vector& word, std::size_t t, Rng& rng) {
    if (t > word.size())
        throw Error("cannot corrupt " + std::to_string(t) + " positions of a length-" + std::to_string(word.size()) +
                    " word");
    const auto p = word.prime().value();
    std::vector<std::size_t> idx(word.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    Vector out = word;
    for (std::size_t i = 0; i < t; ++i) {
        std::uniform_int_distribution<std::size_t> pick(i, idx.size() - 1);
        std::swap(idx[i], idx[pick(rng)]);
        std::uniform_int_distribution<std::uint32_t> offset(1, p - 1);
        out.raw()[idx[i]] = mod::add(out.raw()[idx[i]], offset(rng), p);
    }
    return out;
}

std::uint64_t correction_sweep_size(const LinearCode& code, std::size_t t) {
    const auto messages = sat_pow(code.prime().value(), code.dimension());
    return sat_mul(sat_mul(sat_binomial(code.length(), t), sat_pow(code.prime().value() - 1, t)), messages);
}

std::uint64_t detection_sweep_size(const LinearCode& code, std::size_t t) {
    std::uint64_t total = 0;
    for (std::size_t w = 1; w <= t; ++w) total = std::min(total + correction_sweep_size(code, w), saturated);
    return total;
}

Rng trial_rng(std::uint64_t seed, std::uint64_t index) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
    return Rng(seq);
}

bool exhaustive_correction_check(const LinearCode& code, std::size_t t) {
    require_weight(code, t);
    require_within(correction_sweep_size(code, t), "exhaustive_correction_check");
    const detail::Codebook book(code);
    const auto n = code.length();
    const auto p = code.prime().value();
    const auto patterns = sat_pow(p - 1, t);
    return parallel_all_ranks(binomial(n, t), [&](std::uint64_t begin, std::uint64_t end) {
        std::vector<std::uint32_t> received(n);
        return for_each_pattern(n, t, patterns, begin, end, [&](auto positions, std::uint64_t pattern) {
            for (std::uint64_t m = 0; m < book.size(); ++m) {
                const auto c = book.word(m);
                std::copy(c.begin(), c.end(), received.begin());
                apply_pattern(received, positions, pattern, p);
                const auto best = book.nearest(received);
                if (best.ties != 1 || best.index != m) return false;
            }
            return true;
        });
    });
}

bool exhaustive_detection_check(const LinearCode& code, std::size_t t) {
    require_weight(code, t);
    require_within(detection_sweep_size(code, t), "exhaustive_detection_check");
    const detail::Codebook book(code);
    const Membership member(code);
    const auto n = code.length();
    const auto p = code.prime().value();
    for (std::size_t w = 1; w <= t; ++w) {
        const auto patterns = sat_pow(p - 1, w);
        const bool ok = parallel_all_ranks(binomial(n, w), [&](std::uint64_t begin, std::uint64_t end) {
            std::vector<std::uint32_t> received(n);
            return for_each_pattern(n, w, patterns, begin, end, [&](auto positions, std::uint64_t pattern) {
                for (std::uint64_t m = 0; m < book.size(); ++m) {
                    const auto c = book.word(m);
                    std::copy(c.begin(), c.end(), received.begin());
                    apply_pattern(received, positions, pattern, p);
                    if (member.contains(received)) return false;
                }
                return true;
            });
        });
        if (!ok) return false;
    }
    return true;
}

ChannelStats monte_carlo(const LinearCode& code, std::size_t t, std::uint64_t trials, std::uint64_t seed) {
    require_weight(code, t);
    if (trials == 0) throw Error("monte_carlo: trials must be at least 1");
    const detail::Codebook book(code);
    std::uint64_t successes = 0, ambiguous = 0, miscorrected = 0;
#pragma omp parallel for schedule(static) reduction(+ : successes, ambiguous, miscorrected)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(trials); ++i) {
        auto rng = trial_rng(seed, static_cast<std::uint64_t>(i));
        std::uniform_int_distribution<std::uint64_t> pick(0, book.size() - 1);
        const auto m = pick(rng);
        const auto c = book.word(m);
        const auto received = inject_errors(Vector(code.prime(), {c.begin(), c.end()}), t, rng);
        const auto best = book.nearest(received.raw());
        if (best.ties != 1)
            ++ambiguous;
        else if (best.index == m)
            ++successes;
        else
            ++miscorrected;
    }
    return {trials, successes, ambiguous, miscorrected};
}

namespace serial {

namespace {

/// Recursively enumerates all error vectors of weight exactly t.
template <class Fn>
bool each_error(std::size_t n, std::size_t t, std::uint32_t p, std::size_t from, Vector& e, Fn& fn) {
    if (t == 0) return fn(e);
    for (std::size_t pos = from; pos + t <= n; ++pos) {
        for (std::uint32_t v = 1; v < p; ++v) {
            e.raw()[pos] = v;
            if (!each_error(n, t - 1, p, pos + 1, e, fn)) return false;
        }
        e.raw()[pos] = 0;
    }
    return true;
}

Outcome classify(const LinearCode& code, const Vector& received, std::uint64_t m) {
    const auto r = tcc::serial::decode_nearest(code, received);
    if (r.status == DecodeStatus::ambiguous) return Outcome::ambiguous;
    return r.message == code.message_at(m) ? Outcome::success : Outcome::miscorrected;
}

}  // namespace

bool exhaustive_correction_check(const LinearCode& code, std::size_t t) {
    require_weight(code, t);
    require_within(correction_sweep_size(code, t), "exhaustive_correction_check");
    const auto total = code.codeword_count();
    Vector e(code.prime(), code.length());
    auto fn = [&](const Vector& err) {
        for (std::uint64_t m = 0; m < total; ++m) {
            const auto received = vec_add(encode(code, code.message_at(m)), err);
            if (classify(code, received, m) != Outcome::success) return false;
        }
        return true;
    };
    return each_error(code.length(), t, code.prime().value(), 0, e, fn);
}

bool exhaustive_detection_check(const LinearCode& code, std::size_t t) {
    require_weight(code, t);
    require_within(detection_sweep_size(code, t), "exhaustive_detection_check");
    const auto total = code.codeword_count();
    for (std::size_t w = 1; w <= t; ++w) {
        Vector e(code.prime(), code.length());
        auto fn = [&](const Vector& err) {
            for (std::uint64_t m = 0; m < total; ++m)
                if (code.contains(vec_add(encode(code, code.message_at(m)), err))) return false;
            return true;
        };
        if (!each_error(code.length(), w, code.prime().value(), 0, e, fn)) return false;
    }
    return true;
}

ChannelStats monte_carlo(const LinearCode& code, std::size_t t, std::uint64_t trials, std::uint64_t seed) {
    require_weight(code, t);
    if (trials == 0) throw Error("monte_carlo: trials must be at least 1");
    const auto total = code.codeword_count();
    ChannelStats stats;
    for (std::uint64_t i = 0; i < trials; ++i) {
        auto rng = trial_rng(seed, i);
        std::uniform_int_distribution<std::uint64_t> pick(0, total - 1);
        const auto m = pick(rng);
        const auto received = inject_errors(encode(code, code.message_at(m)), t, rng);
        stats += tally(classify(code, received, m));
    }
    return stats;
}

}  // namespace serial

}  // namespace tcc
