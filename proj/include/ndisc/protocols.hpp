#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ndisc/rational.hpp"
#include "ndisc/schedule.hpp"

namespace ndisc {

enum class Protocol { Disco, UConnect, Searchlight, Hedis, Todis };

/// Table order used by `--protocols all`.
inline constexpr Protocol kAllProtocols[] = {Protocol::Disco, Protocol::UConnect,
                                             Protocol::Searchlight, Protocol::Hedis,
                                             Protocol::Todis};

std::string_view protocol_name(Protocol p);
/// Accepts the lowercase names used by protocol_name(). Throws std::invalid_argument.
Protocol parse_protocol(std::string_view name);

struct HedisParams {
    std::uint64_t n;
    bool operator==(const HedisParams&) const = default;
};
struct TodisParams {
    std::uint64_t n;
    bool operator==(const TodisParams&) const = default;
};
struct DiscoParams {
    std::uint64_t p1;
    std::uint64_t p2;
    bool operator==(const DiscoParams&) const = default;
};
struct UConnectParams {
    std::uint64_t p;
    bool operator==(const UConnectParams&) const = default;
};
struct SearchlightParams {
    std::uint64_t t;
    std::uint64_t i;
    bool operator==(const SearchlightParams&) const = default;
};

using ProtocolParams =
    std::variant<HedisParams, TodisParams, DiscoParams, UConnectParams, SearchlightParams>;

Protocol protocol_of(const ProtocolParams& params);

/// Textual notation: `hedis:n=40`, `todis:n=59`, `disco:p1=37,p2=43`,
/// `uconnect:p=31`, `searchlight:t=2,i=5`.
std::string to_string(const ProtocolParams& params);
/// Throws std::invalid_argument naming the offending token.
ProtocolParams parse_params(std::string_view text);

/// Throws std::invalid_argument if the parameters violate the protocol's restriction.
void validate(const ProtocolParams& params);

// Schedule generators -------------------------------------------------------

/// Wakes at every multiple of any element; period lcm(N).
Schedule coprimality_schedule(std::span<const std::uint64_t> divisors);
/// Anchors n*i and probes (n+1)*i+1 for i in [0, n-2]; period n(n-1).
Schedule hedis_schedule(std::uint64_t n);
/// Divisibility schedule over {n-2, n, n+2}; n odd, n >= 5.
Schedule todis_schedule(std::uint64_t n);
Schedule disco_schedule(std::uint64_t p1, std::uint64_t p2);
/// Multiples of p plus the first (p+1)/2 slots of every p^2 hyperperiod.
Schedule uconnect_schedule(std::uint64_t p);
/// Period T = t^i; anchors at j*T and a striped probe at j*T + 1 + j over
/// ceil(T/2) sub-periods.
Schedule searchlight_schedule(std::uint64_t t, std::uint64_t i);

Schedule build_schedule(const ProtocolParams& params);

/// Integer set whose multiples make up the co-primality part of the schedule
/// (Todis, Disco, U-Connect); nullopt for the quorum protocols.
std::optional<std::vector<std::uint64_t>> coprimality_set(const ProtocolParams& params);

/// Exact duty cycle from the closed forms, without materializing a schedule.
Rational nominal_duty_cycle(const ProtocolParams& params);

/// Exact Todis duty cycle 3(n²−n−1) / (n(n²−4)).
Rational todis_duty_cycle(std::uint64_t n);

/// Period of the schedule the parameters generate, without building it.
u128 schedule_period(const ProtocolParams& params);

// Parameter selection -------------------------------------------------------

enum class Parity { Even, Odd };
enum class DiscoPairing {
    Balanced,  // consecutive primes from the pool
    Any,       // every pair of distinct primes from the pool
};

struct SelectionOptions {
    Parity hedis_parity = Parity::Even;
    std::uint64_t searchlight_t = 2;
    DiscoPairing disco_pairing = DiscoPairing::Balanced;
    /// Disco and U-Connect primes are drawn from primes <= this.
    std::uint64_t prime_pool_limit = 10'000;
    /// Largest odd Todis n such that (n-2)n(n+2) fits in 64 bits.
    std::uint64_t max_todis_n = 2'642'245;
    std::uint64_t max_hedis_n = std::uint64_t{1} << 32;
};

struct Selection {
    ProtocolParams params;
    Rational achieved_delta;
};

struct NodeConfig {
    Rational desired_delta;
    ProtocolParams params;
    Rational achieved_delta;  // == duty_cycle(schedule)
    Schedule schedule;
};

/// Parameters minimizing |achieved − delta| within the protocol's restriction,
/// ties toward the smaller period. Does not build the schedule.
/// Throws std::domain_error for delta outside (0, 1] or when the best
/// relative error is 100% or more.
Selection choose_params(Protocol protocol, const Rational& delta,
                        const SelectionOptions& options = {});

/// choose_params() plus the materialized schedule.
NodeConfig select_params(Protocol protocol, const Rational& delta,
                         const SelectionOptions& options = {});

}  // namespace ndisc
