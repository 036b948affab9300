#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ndisc/rational.hpp"

namespace ndisc {

/// Solution class x ≡ base (mod modulus) of a pair of congruences.
struct CongruenceSolution {
    u128 base;     // in [0, modulus)
    u128 modulus;  // lcm of the two input moduli

    bool operator==(const CongruenceSolution&) const = default;
};

/// Throws std::invalid_argument on gcd(0, 0).
u128 gcd(u128 a, u128 b);

/// (a / gcd) * b. Throws std::invalid_argument on a zero argument and
/// std::overflow_error if the result does not fit in 128 bits.
u128 lcm(u128 a, u128 b);

/// lcm of every element. Throws like lcm() and on an empty list.
u128 lcm_of(std::span<const std::uint64_t> values);

/// x ≡ a (mod m), x ≡ b (mod n), solved by extended Euclid. Residues may be
/// any integers and are normalized first. Returns nullopt when
/// gcd(m, n) does not divide a − b. Throws std::invalid_argument when m or n is 0.
std::optional<CongruenceSolution> solve_congruence_pair(std::int64_t a, std::uint64_t m,
                                                        std::int64_t b, std::uint64_t n);

/// True iff some x in `na` and y in `nb` are co-prime. Both sets must be non-empty.
bool coprime_pair_property(std::span<const std::uint64_t> na, std::span<const std::uint64_t> nb);

/// Minimum product x*y over co-prime cross-pairs; nullopt ("unbounded") when
/// the co-prime pair property fails.
std::optional<u128> worst_case_bound(std::span<const std::uint64_t> na,
                                     std::span<const std::uint64_t> nb);

/// Sieve of Eratosthenes. Throws std::invalid_argument when limit < 2.
std::vector<std::uint64_t> primes_up_to(std::uint64_t limit);

bool is_prime(std::uint64_t value);

}  // namespace ndisc
