#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace tcc {

/// Base error for every recoverable failure in the toolkit.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when an exhaustive enumeration would exceed its work guard.
class GuardExceeded : public Error {
public:
    using Error::Error;
};

/// Characteristic of a prime field. Primality is checked by trial division.
class Prime {
public:
    static constexpr std::uint64_t max_value = (std::uint64_t{1} << 31) - 1;

    explicit Prime(std::uint64_t p);

    [[nodiscard]] constexpr std::uint32_t value() const noexcept { return p_; }
    constexpr auto operator<=>(const Prime&) const = default;

private:
    std::uint32_t p_;
};

[[nodiscard]] bool is_prime(std::uint64_t n) noexcept;

/// Element of GF(p), always fully reduced.
class Felt {
public:
    Felt(std::uint64_t value, Prime p) : v_(static_cast<std::uint32_t>(value % p.value())), p_(p) {}

    /// Reduces a signed integer into [0, p).
    static Felt from_signed(std::int64_t value, Prime p);

    [[nodiscard]] std::uint32_t value() const noexcept { return v_; }
    [[nodiscard]] Prime prime() const noexcept { return p_; }
    [[nodiscard]] bool is_zero() const noexcept { return v_ == 0; }

    bool operator==(const Felt&) const = default;

private:
    std::uint32_t v_;
    Prime p_;
};

[[nodiscard]] Felt felt_add(Felt a, Felt b);
[[nodiscard]] Felt felt_sub(Felt a, Felt b);
[[nodiscard]] Felt felt_mul(Felt a, Felt b);
[[nodiscard]] Felt felt_neg(Felt a);
[[nodiscard]] Felt felt_inv(Felt a);

inline Felt operator+(Felt a, Felt b) { return felt_add(a, b); }
inline Felt operator-(Felt a, Felt b) { return felt_sub(a, b); }
inline Felt operator*(Felt a, Felt b) { return felt_mul(a, b); }
inline Felt operator-(Felt a) { return felt_neg(a); }

// Raw residue kernels shared by the matrix code. Inputs must already be in [0, p).
namespace mod {

inline std::uint32_t add(std::uint32_t a, std::uint32_t b, std::uint32_t p) noexcept {
    std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<std::uint32_t>(s >= p ? s - p : s);
}

inline std::uint32_t sub(std::uint32_t a, std::uint32_t b, std::uint32_t p) noexcept {
    return a >= b ? a - b : static_cast<std::uint32_t>(std::uint64_t{a} + p - b);
}

inline std::uint32_t mul(std::uint32_t a, std::uint32_t b, std::uint32_t p) noexcept {
    return static_cast<std::uint32_t>(std::uint64_t{a} * b % p);
}

inline std::uint32_t neg(std::uint32_t a, std::uint32_t p) noexcept { return a == 0 ? 0 : p - a; }

/// Inverse by the extended Euclidean algorithm; a must be nonzero.
std::uint32_t inv(std::uint32_t a, std::uint32_t p);

}  // namespace mod

}  // namespace tcc
