#include "ndisc/protocols.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <map>
#include <stdexcept>

#include "ndisc/number_theory.hpp"

namespace ndisc {

std::string_view protocol_name(Protocol p) {
    switch (p) {
        case Protocol::Disco: return "disco";
        case Protocol::UConnect: return "uconnect";
        case Protocol::Searchlight: return "searchlight";
        case Protocol::Hedis: return "hedis";
        case Protocol::Todis: return "todis";
    }
    return "unknown";
}

Protocol parse_protocol(std::string_view name) {
    for (Protocol p : kAllProtocols)
        if (protocol_name(p) == name) return p;
    throw std::invalid_argument("unknown protocol '" + std::string(name) + "'");
}

Protocol protocol_of(const ProtocolParams& params) {
    struct Visitor {
        Protocol operator()(const HedisParams&) const { return Protocol::Hedis; }
        Protocol operator()(const TodisParams&) const { return Protocol::Todis; }
        Protocol operator()(const DiscoParams&) const { return Protocol::Disco; }
        Protocol operator()(const UConnectParams&) const { return Protocol::UConnect; }
        Protocol operator()(const SearchlightParams&) const { return Protocol::Searchlight; }
    };
    return std::visit(Visitor{}, params);
}

std::string to_string(const ProtocolParams& params) {
    struct Visitor {
        std::string operator()(const HedisParams& p) const {
            return "hedis:n=" + std::to_string(p.n);
        }
        std::string operator()(const TodisParams& p) const {
            return "todis:n=" + std::to_string(p.n);
        }
        std::string operator()(const DiscoParams& p) const {
            return "disco:p1=" + std::to_string(p.p1) + ",p2=" + std::to_string(p.p2);
        }
        std::string operator()(const UConnectParams& p) const {
            return "uconnect:p=" + std::to_string(p.p);
        }
        std::string operator()(const SearchlightParams& p) const {
            return "searchlight:t=" + std::to_string(p.t) + ",i=" + std::to_string(p.i);
        }
    };
    return std::visit(Visitor{}, params);
}

namespace {

std::uint64_t parse_uint(std::string_view token, std::string_view context) {
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size())
        throw std::invalid_argument("invalid integer '" + std::string(token) + "' in '" +
                                    std::string(context) + "'");
    return value;
}

std::uint64_t take(std::map<std::string, std::uint64_t>& fields, const std::string& key,
                   std::string_view context) {
    const auto it = fields.find(key);
    if (it == fields.end())
        throw std::invalid_argument("missing '" + key + "' in '" + std::string(context) + "'");
    const auto value = it->second;
    fields.erase(it);
    return value;
}

}  // namespace

ProtocolParams parse_params(std::string_view text) {
    const auto colon = text.find(':');
    if (colon == std::string_view::npos)
        throw std::invalid_argument("expected '<protocol>:<key>=<value>,...' but got '" +
                                    std::string(text) + "'");
    const Protocol protocol = parse_protocol(text.substr(0, colon));

    std::map<std::string, std::uint64_t> fields;
    auto rest = text.substr(colon + 1);
    while (!rest.empty()) {
        const auto comma = rest.find(',');
        const auto token = rest.substr(0, comma);
        const auto eq = token.find('=');
        if (eq == std::string_view::npos || eq == 0)
            throw std::invalid_argument("malformed field '" + std::string(token) + "'");
        const std::string key(token.substr(0, eq));
        if (fields.contains(key)) throw std::invalid_argument("duplicate field '" + key + "'");
        fields[key] = parse_uint(token.substr(eq + 1), token);
        if (comma == std::string_view::npos) break;
        rest.remove_prefix(comma + 1);
    }

    ProtocolParams params;
    switch (protocol) {
        case Protocol::Hedis: params = HedisParams{take(fields, "n", text)}; break;
        case Protocol::Todis: params = TodisParams{take(fields, "n", text)}; break;
        case Protocol::Disco: {
            const auto p1 = take(fields, "p1", text);
            params = DiscoParams{p1, take(fields, "p2", text)};
            break;
        }
        case Protocol::UConnect: params = UConnectParams{take(fields, "p", text)}; break;
        case Protocol::Searchlight: {
            const auto t = take(fields, "t", text);
            params = SearchlightParams{t, take(fields, "i", text)};
            break;
        }
    }
    if (!fields.empty())
        throw std::invalid_argument("unexpected field '" + fields.begin()->first + "' in '" +
                                    std::string(text) + "'");
    validate(params);
    return params;
}

namespace {

constexpr std::uint64_t kU64Max = std::numeric_limits<std::uint64_t>::max();

void check_hedis(std::uint64_t n) {
    if (n < 3) throw std::invalid_argument("hedis parameter n must be at least 3");
    if (n > (std::uint64_t{1} << 32)) throw std::overflow_error("hedis period overflows");
}

void check_todis(std::uint64_t n) {
    if (n < 5 || n % 2 == 0)
        throw std::invalid_argument("todis parameter n must be odd and at least 5");
    if (n > 2'642'245) throw std::overflow_error("todis period overflows");
}

void check_disco(std::uint64_t p1, std::uint64_t p2) {
    if (p1 == p2) throw std::invalid_argument("disco primes must be distinct");
    if (!is_prime(p1) || !is_prime(p2)) throw std::invalid_argument("disco parameters must be prime");
    if (p1 > kU64Max / p2) throw std::overflow_error("disco period overflows");
}

void check_uconnect(std::uint64_t p) {
    if (p == 2 || !is_prime(p))
        throw std::invalid_argument("uconnect parameter p must be an odd prime");
    if (p > (std::uint64_t{1} << 32) - 1) throw std::overflow_error("uconnect period overflows");
}

/// t^i, or 0 when it exceeds 2^32 (so that T * ceil(T/2) fits in 64 bits).
std::uint64_t searchlight_length(std::uint64_t t, std::uint64_t i) {
    std::uint64_t length = 1;
    for (std::uint64_t k = 0; k < i; ++k) {
        if (length > (std::uint64_t{1} << 32) / t) return 0;
        length *= t;
    }
    return length;
}

void check_searchlight(std::uint64_t t, std::uint64_t i) {
    if (t < 2) throw std::invalid_argument("searchlight parameter t must be at least 2");
    if (i < 1) throw std::invalid_argument("searchlight exponent i must be at least 1");
    if (searchlight_length(t, i) == 0) throw std::overflow_error("searchlight period overflows");
}

}  // namespace

void validate(const ProtocolParams& params) {
    struct Visitor {
        void operator()(const HedisParams& p) const { check_hedis(p.n); }
        void operator()(const TodisParams& p) const { check_todis(p.n); }
        void operator()(const DiscoParams& p) const { check_disco(p.p1, p.p2); }
        void operator()(const UConnectParams& p) const { check_uconnect(p.p); }
        void operator()(const SearchlightParams& p) const { check_searchlight(p.t, p.i); }
    };
    std::visit(Visitor{}, params);
}

Schedule coprimality_schedule(std::span<const std::uint64_t> divisors) {
    if (divisors.empty()) throw std::invalid_argument("divisor set must be non-empty");
    for (auto x : divisors)
        if (x == 0) throw std::invalid_argument("divisors must be positive");
    const u128 period = lcm_of(divisors);
    if (period > Schedule::kMaxPeriod)
        throw std::length_error("divisibility schedule period " + to_string(period) +
                                " exceeds the materialization limit");
    const auto length = static_cast<Slot>(period);
    std::vector<bool> marked(length, false);
    std::vector<Slot> active;
    for (auto x : divisors)
        for (Slot t = 0; t < length; t += x)
            if (!marked[t]) {
                marked[t] = true;
                active.push_back(t);
            }
    return Schedule(length, active);
}

Schedule hedis_schedule(std::uint64_t n) {
    check_hedis(n);
    std::vector<Slot> active;
    active.reserve(2 * (n - 1));
    for (std::uint64_t i = 0; i + 2 <= n; ++i) {
        active.push_back(n * i);              // anchor
        active.push_back((n + 1) * i + 1);    // probe
    }
    return Schedule(n * (n - 1), active);
}

Schedule todis_schedule(std::uint64_t n) {
    check_todis(n);
    const std::uint64_t set[] = {n - 2, n, n + 2};
    return coprimality_schedule(set);
}

Schedule disco_schedule(std::uint64_t p1, std::uint64_t p2) {
    check_disco(p1, p2);
    const std::uint64_t set[] = {p1, p2};
    return coprimality_schedule(set);
}

Schedule uconnect_schedule(std::uint64_t p) {
    check_uconnect(p);
    std::vector<Slot> active;
    for (std::uint64_t i = 0; i < p; ++i) active.push_back(p * i);
    for (std::uint64_t s = 1; s < (p + 1) / 2; ++s) active.push_back(s);
    return Schedule(p * p, active);
}

Schedule searchlight_schedule(std::uint64_t t, std::uint64_t i) {
    check_searchlight(t, i);
    const std::uint64_t length = searchlight_length(t, i);
    const std::uint64_t rounds = (length + 1) / 2;
    std::vector<Slot> active;
    active.reserve(2 * rounds);
    for (std::uint64_t j = 0; j < rounds; ++j) {
        active.push_back(j * length);
        const std::uint64_t offset = 1 + j % rounds;
        if (offset < length) active.push_back(j * length + offset);
    }
    return Schedule(length * rounds, active);
}

Schedule build_schedule(const ProtocolParams& params) {
    struct Visitor {
        Schedule operator()(const HedisParams& p) const { return hedis_schedule(p.n); }
        Schedule operator()(const TodisParams& p) const { return todis_schedule(p.n); }
        Schedule operator()(const DiscoParams& p) const { return disco_schedule(p.p1, p.p2); }
        Schedule operator()(const UConnectParams& p) const { return uconnect_schedule(p.p); }
        Schedule operator()(const SearchlightParams& p) const {
            return searchlight_schedule(p.t, p.i);
        }
    };
    return std::visit(Visitor{}, params);
}

std::optional<std::vector<std::uint64_t>> coprimality_set(const ProtocolParams& params) {
    if (const auto* p = std::get_if<TodisParams>(&params))
        return std::vector<std::uint64_t>{p->n - 2, p->n, p->n + 2};
    if (const auto* p = std::get_if<DiscoParams>(&params))
        return std::vector<std::uint64_t>{p->p1, p->p2};
    if (const auto* p = std::get_if<UConnectParams>(&params))
        return std::vector<std::uint64_t>{p->p};
    return std::nullopt;
}

Rational todis_duty_cycle(std::uint64_t n) {
    using boost::multiprecision::cpp_int;
    const cpp_int big = n;
    return Rational(3 * (big * big - big - 1), big * (big * big - 4));
}

Rational nominal_duty_cycle(const ProtocolParams& params) {
    using boost::multiprecision::cpp_int;
    struct Visitor {
        Rational operator()(const HedisParams& p) const { return Rational(2, p.n); }
        Rational operator()(const TodisParams& p) const { return todis_duty_cycle(p.n); }
        Rational operator()(const DiscoParams& p) const {
            return Rational(cpp_int(p.p1) + p.p2 - 1, cpp_int(p.p1) * p.p2);
        }
        Rational operator()(const UConnectParams& p) const {
            // Slot 0 is both a multiple of p and the head of the contiguous run.
            return Rational(3 * cpp_int(p.p) - 1, 2 * cpp_int(p.p) * p.p);
        }
        Rational operator()(const SearchlightParams& p) const {
            return Rational(2, searchlight_length(p.t, p.i));
        }
    };
    validate(params);
    return std::visit(Visitor{}, params);
}

u128 schedule_period(const ProtocolParams& params) {
    struct Visitor {
        u128 operator()(const HedisParams& p) const { return u128{p.n} * (p.n - 1); }
        u128 operator()(const TodisParams& p) const {
            return u128{p.n - 2} * p.n * (p.n + 2);
        }
        u128 operator()(const DiscoParams& p) const { return u128{p.p1} * p.p2; }
        u128 operator()(const UConnectParams& p) const { return u128{p.p} * p.p; }
        u128 operator()(const SearchlightParams& p) const {
            const u128 length = searchlight_length(p.t, p.i);
            return length * ((length + 1) / 2);
        }
    };
    validate(params);
    return std::visit(Visitor{}, params);
}

// Parameter selection -------------------------------------------------------

namespace {

const std::vector<std::uint64_t>& prime_pool(std::uint64_t limit) {
    static const std::vector<std::uint64_t> default_pool = primes_up_to(10'000);
    if (limit == 10'000) return default_pool;
    thread_local std::uint64_t cached_limit = 0;
    thread_local std::vector<std::uint64_t> cached;
    if (cached_limit != limit) {
        cached = primes_up_to(limit);
        cached_limit = limit;
    }
    return cached;
}

/// Running argmin over candidates by (error, tie key).
struct Best {
    const Rational& delta;
    std::optional<Selection> selection;
    Rational error;
    std::vector<u128> tie;

    void offer(ProtocolParams params, std::vector<u128> tie_key) {
        Rational achieved = nominal_duty_cycle(params);
        Rational err = abs(Rational(achieved - delta));
        if (!selection || err < error || (err == error && tie_key < tie)) {
            selection = Selection{std::move(params), std::move(achieved)};
            error = std::move(err);
            tie = std::move(tie_key);
        }
    }
};

/// Largest index in [lo, hi] whose value is >= delta for a non-increasing
/// sequence, or nullopt if value(lo) < delta.
template <typename Value>
std::optional<std::uint64_t> last_at_least(std::uint64_t lo, std::uint64_t hi,
                                           const Rational& delta, Value value) {
    if (value(lo) < delta) return std::nullopt;
    while (lo < hi) {
        const std::uint64_t mid = lo + (hi - lo + 1) / 2;
        if (value(mid) >= delta)
            lo = mid;
        else
            hi = mid - 1;
    }
    return lo;
}

void select_hedis(Best& best, const SelectionOptions& options) {
    const std::uint64_t first = options.hedis_parity == Parity::Even ? 4 : 3;
    std::uint64_t hi = options.max_hedis_n;
    if (hi % 2 != first % 2) --hi;
    if (hi < first) throw std::domain_error("hedis parameter range is empty");
    // n = first + 2k; 2/n is decreasing in k.
    const auto n_at = [&](std::uint64_t k) { return first + 2 * k; };
    const auto value = [&](std::uint64_t k) { return Rational(2, n_at(k)); };
    const std::uint64_t k_max = (hi - first) / 2;
    const auto k = last_at_least(0, k_max, best.delta, value);
    for (std::uint64_t c : {k.value_or(0), k ? *k + 1 : 0})
        if (c <= k_max) {
            const std::uint64_t n = n_at(c);
            best.offer(HedisParams{n}, {u128{n} * (n - 1)});
        }
}

void select_todis(Best& best, const SelectionOptions& options) {
    std::uint64_t hi = std::min<std::uint64_t>(options.max_todis_n, 2'642'245);
    if (hi % 2 == 0) --hi;
    if (hi < 5) throw std::domain_error("todis parameter range is empty");
    const auto n_at = [](std::uint64_t k) { return 5 + 2 * k; };
    const auto value = [&](std::uint64_t k) { return todis_duty_cycle(n_at(k)); };
    const std::uint64_t k_max = (hi - 5) / 2;
    const auto k = last_at_least(0, k_max, best.delta, value);
    for (std::uint64_t c : {k.value_or(0), k ? *k + 1 : 0})
        if (c <= k_max) {
            const std::uint64_t n = n_at(c);
            best.offer(TodisParams{n}, {u128{n - 2} * n * (n + 2)});
        }
}

Rational disco_duty(std::uint64_t p1, std::uint64_t p2) {
    using boost::multiprecision::cpp_int;
    return Rational(cpp_int(p1) + p2 - 1, cpp_int(p1) * p2);
}

void select_disco(Best& best, const SelectionOptions& options) {
    const auto& pool = prime_pool(options.prime_pool_limit);
    if (pool.size() < 2) throw std::domain_error("disco prime pool needs two primes");
    const auto offer = [&](std::uint64_t p1, std::uint64_t p2) {
        // Equal error: prefer the larger smaller prime, then the smaller period.
        best.offer(DiscoParams{p1, p2}, {~u128{0} - std::min(p1, p2), u128{p1} * p2});
    };
    if (options.disco_pairing == DiscoPairing::Balanced) {
        const auto value = [&](std::uint64_t k) { return disco_duty(pool[k], pool[k + 1]); };
        const std::uint64_t k_max = pool.size() - 2;
        const auto k = last_at_least(0, k_max, best.delta, value);
        for (std::uint64_t c : {k.value_or(0), k ? *k + 1 : 0})
            if (c <= k_max) offer(pool[c], pool[c + 1]);
        return;
    }
    for (std::uint64_t i = 0; i + 1 < pool.size(); ++i) {
        const auto value = [&](std::uint64_t j) { return disco_duty(pool[i], pool[j]); };
        const std::uint64_t j_max = pool.size() - 1;
        const auto j = last_at_least(i + 1, j_max, best.delta, value);
        for (std::uint64_t c : {j.value_or(i + 1), j ? *j + 1 : i + 1})
            if (c <= j_max) offer(pool[i], pool[c]);
    }
}

void select_uconnect(Best& best, const SelectionOptions& options) {
    const auto& pool = prime_pool(options.prime_pool_limit);
    if (pool.size() < 2) throw std::domain_error("uconnect prime pool has no odd prime");
    for (std::size_t k = 1; k < pool.size(); ++k) {
        const std::uint64_t p = pool[k];
        best.offer(UConnectParams{p}, {u128{p} * p});
    }
}

void select_searchlight(Best& best, const SelectionOptions& options) {
    const std::uint64_t t = options.searchlight_t;
    check_searchlight(t, 1);
    for (std::uint64_t i = 1; searchlight_length(t, i) != 0; ++i) {
        const u128 length = searchlight_length(t, i);
        best.offer(SearchlightParams{t, i}, {length * ((length + 1) / 2)});
    }
}

}  // namespace

Selection choose_params(Protocol protocol, const Rational& delta,
                        const SelectionOptions& options) {
    if (delta <= 0 || delta > 1)
        throw std::domain_error("duty cycle " + to_fraction_string(delta) + " is outside (0, 1]");
    Best best{delta, std::nullopt, Rational(0), {}};
    switch (protocol) {
        case Protocol::Hedis: select_hedis(best, options); break;
        case Protocol::Todis: select_todis(best, options); break;
        case Protocol::Disco: select_disco(best, options); break;
        case Protocol::UConnect: select_uconnect(best, options); break;
        case Protocol::Searchlight: select_searchlight(best, options); break;
    }
    if (!best.selection || best.error / delta >= 1)
        throw std::domain_error(std::string(protocol_name(protocol)) +
                                " cannot approximate duty cycle " + to_fraction_string(delta) +
                                " within 100% relative error");
    return std::move(*best.selection);
}

NodeConfig select_params(Protocol protocol, const Rational& delta,
                         const SelectionOptions& options) {
    Selection chosen = choose_params(protocol, delta, options);
    Schedule schedule = build_schedule(chosen.params);
    return NodeConfig{delta, std::move(chosen.params), std::move(chosen.achieved_delta),
                      std::move(schedule)};
}

}  // namespace ndisc
