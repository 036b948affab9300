#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ndisc/rational.hpp"

namespace ndisc {

using Slot = std::uint64_t;

/// Periodic binary wake/sleep sequence. Only one period is stored; slot t of
/// the infinite sequence is slot t mod period.
class Schedule {
public:
    /// Largest period a schedule may materialize (bitmap of this many bits).
    static constexpr Slot kMaxPeriod = Slot{1} << 32;

    Schedule(Slot period, std::span<const Slot> active_slots);

    Slot period() const noexcept { return period_; }
    /// Sorted, deduplicated active slot indices in [0, period).
    const std::vector<Slot>& active() const noexcept { return active_; }
    std::size_t active_count() const noexcept { return active_.size(); }

    bool is_active(Slot t) const noexcept { return bitmap_[t % period_]; }
    bool is_active_wide(u128 t) const noexcept {
        return bitmap_[static_cast<std::size_t>(t % period_)];
    }

    /// Exact |active| / period.
    Rational duty_cycle() const;

    /// Slot t of the result is active iff slot (t + k) mod period is active here.
    Schedule rotate(std::int64_t k) const;

    bool operator==(const Schedule& other) const noexcept {
        return period_ == other.period_ && active_ == other.active_;
    }

private:
    Slot period_;
    std::vector<Slot> active_;
    std::vector<bool> bitmap_;
};

Schedule make_schedule(Slot period, std::span<const Slot> active_slots);
Schedule make_schedule(Slot period, std::initializer_list<Slot> active_slots);

inline bool is_active(const Schedule& s, Slot t) { return s.is_active(t); }
inline Schedule rotate(const Schedule& s, std::int64_t k) { return s.rotate(k); }
inline Rational duty_cycle(const Schedule& s) { return s.duty_cycle(); }

/// `period=<T> active=<i,j,...>`
std::string to_string(const Schedule& s);
Schedule parse_schedule(std::string_view text);

}  // namespace ndisc
