#include "ndisc/number_theory.hpp"

#include <limits>
#include <stdexcept>

namespace ndisc {

u128 gcd(u128 a, u128 b) {
    if (a == 0 && b == 0) throw std::invalid_argument("gcd(0, 0) is undefined");
    while (b != 0) {
        const u128 r = a % b;
        a = b;
        b = r;
    }
    return a;
}

u128 lcm(u128 a, u128 b) {
    if (a == 0 || b == 0) throw std::invalid_argument("lcm arguments must be positive");
    const u128 q = a / gcd(a, b);
    if (q > std::numeric_limits<u128>::max() / b)
        throw std::overflow_error("lcm(" + to_string(a) + ", " + to_string(b) +
                                  ") exceeds 128 bits");
    return q * b;
}

u128 lcm_of(std::span<const std::uint64_t> values) {
    if (values.empty()) throw std::invalid_argument("lcm of an empty set");
    u128 acc = 1;
    for (auto v : values) acc = lcm(acc, v);
    return acc;
}

namespace {

/// Inverse of a modulo m for co-prime a, m (m >= 1).
u128 mod_inverse(u128 a, u128 m) {
    if (m == 1) return 0;
    i128 old_r = static_cast<i128>(a % m), r = static_cast<i128>(m);
    i128 old_s = 1, s = 0;
    while (r != 0) {
        const i128 q = old_r / r;
        const i128 tmp_r = old_r - q * r;
        old_r = r;
        r = tmp_r;
        const i128 tmp_s = old_s - q * s;
        old_s = s;
        s = tmp_s;
    }
    const auto mm = static_cast<i128>(m);
    return static_cast<u128>(((old_s % mm) + mm) % mm);
}

u128 normalize(std::int64_t a, std::uint64_t m) {
    const auto mm = static_cast<i128>(m);
    return static_cast<u128>(((static_cast<i128>(a) % mm) + mm) % mm);
}

}  // namespace

std::optional<CongruenceSolution> solve_congruence_pair(std::int64_t a, std::uint64_t m,
                                                        std::int64_t b, std::uint64_t n) {
    if (m == 0 || n == 0) throw std::invalid_argument("congruence moduli must be positive");
    const u128 ra = normalize(a, m);
    const u128 rb = normalize(b, n);
    const u128 g = gcd(m, n);
    const i128 diff = static_cast<i128>(rb) - static_cast<i128>(ra);
    if (diff % static_cast<i128>(g) != 0) return std::nullopt;

    const u128 m_red = m / g;
    const u128 n_red = n / g;
    const auto nr = static_cast<i128>(n_red);
    const auto rhs = static_cast<u128>(((diff / static_cast<i128>(g)) % nr + nr) % nr);
    // m_red * k ≡ rhs (mod n_red); both factors < 2^64 so the product fits.
    const u128 k = (rhs * mod_inverse(m_red, n_red)) % n_red;
    return CongruenceSolution{ra + static_cast<u128>(m) * k, static_cast<u128>(m) * n_red};
}

bool coprime_pair_property(std::span<const std::uint64_t> na, std::span<const std::uint64_t> nb) {
    if (na.empty() || nb.empty()) throw std::invalid_argument("integer sets must be non-empty");
    for (auto x : na)
        for (auto y : nb)
            if (gcd(x, y) == 1) return true;
    return false;
}

std::optional<u128> worst_case_bound(std::span<const std::uint64_t> na,
                                     std::span<const std::uint64_t> nb) {
    if (na.empty() || nb.empty()) throw std::invalid_argument("integer sets must be non-empty");
    std::optional<u128> best;
    for (auto x : na)
        for (auto y : nb)
            if (gcd(x, y) == 1) {
                const u128 product = static_cast<u128>(x) * y;
                if (!best || product < *best) best = product;
            }
    return best;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit) {
    if (limit < 2) throw std::invalid_argument("prime limit must be at least 2");
    std::vector<bool> composite(limit + 1, false);
    std::vector<std::uint64_t> primes;
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (composite[i]) continue;
        primes.push_back(i);
        for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
    }
    return primes;
}

bool is_prime(std::uint64_t value) {
    if (value < 2) return false;
    if (value % 2 == 0) return value == 2;
    for (std::uint64_t d = 3; d <= value / d; d += 2)
        if (value % d == 0) return false;
    return true;
}

}  // namespace ndisc
