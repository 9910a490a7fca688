#include "tcc/field.hpp"

namespace tcc {

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

Prime::Prime(std::uint64_t p) : p_(0) {
    if (p > max_value) throw Error("field characteristic " + std::to_string(p) + " exceeds 2^31 - 1");
    if (!is_prime(p)) throw Error(std::to_string(p) + " is not prime (only prime fields are supported)");
    p_ = static_cast<std::uint32_t>(p);
}

Felt Felt::from_signed(std::int64_t value, Prime p) {
    std::int64_t r = value % static_cast<std::int64_t>(p.value());
    if (r < 0) r += p.value();
    return Felt(static_cast<std::uint64_t>(r), p);
}

namespace {

void require_same_field(const Felt& a, const Felt& b) {
    if (a.prime() != b.prime())
        throw Error("field mismatch: GF(" + std::to_string(a.prime().value()) + ") vs GF(" +
                    std::to_string(b.prime().value()) + ")");
}

}  // namespace

Felt felt_add(Felt a, Felt b) {
    require_same_field(a, b);
    return Felt(mod::add(a.value(), b.value(), a.prime().value()), a.prime());
}

Felt felt_sub(Felt a, Felt b) {
    require_same_field(a, b);
    return Felt(mod::sub(a.value(), b.value(), a.prime().value()), a.prime());
}

Felt felt_mul(Felt a, Felt b) {
    require_same_field(a, b);
    return Felt(mod::mul(a.value(), b.value(), a.prime().value()), a.prime());
}

Felt felt_neg(Felt a) { return Felt(mod::neg(a.value(), a.prime().value()), a.prime()); }

Felt felt_inv(Felt a) {
    if (a.is_zero()) throw Error("zero has no inverse");
    return Felt(mod::inv(a.value(), a.prime().value()), a.prime());
}

namespace mod {

std::uint32_t inv(std::uint32_t a, std::uint32_t p) {
    if (a == 0) throw Error("zero has no inverse");
    std::int64_t r0 = p, r1 = a, s0 = 0, s1 = 1;
    while (r1 != 0) {
        std::int64_t q = r0 / r1;
        std::int64_t r2 = r0 - q * r1;
        r0 = r1;
        r1 = r2;
        std::int64_t s2 = s0 - q * s1;
        s0 = s1;
        s1 = s2;
    }
    if (s0 < 0) s0 += p;
    return static_cast<std::uint32_t>(s0);
}

}  // namespace mod

}  // namespace tcc
