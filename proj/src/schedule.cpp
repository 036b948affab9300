#include "ndisc/schedule.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace ndisc {

double to_double(const Rational& r) {
    return static_cast<double>(r);
}

std::string to_fraction_string(const Rational& r) {
    const auto num = boost::multiprecision::numerator(r);
    const auto den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

std::string to_decimal_string(const Rational& r) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", to_double(r));
    return buf;
}

std::string to_string(u128 value) {
    if (value == 0) return "0";
    std::string digits;
    while (value != 0) {
        digits.push_back(static_cast<char>('0' + static_cast<int>(value % 10)));
        value /= 10;
    }
    std::reverse(digits.begin(), digits.end());
    return digits;
}

namespace {

using boost::multiprecision::cpp_int;

cpp_int parse_digits(std::string_view digits, std::string_view whole) {
    if (digits.empty()) throw std::invalid_argument("malformed number '" + std::string(whole) + "'");
    cpp_int value = 0;
    for (char c : digits) {
        if (c < '0' || c > '9')
            throw std::invalid_argument("malformed number '" + std::string(whole) + "'");
        value = value * 10 + (c - '0');
    }
    return value;
}

Rational parse_decimal(std::string_view text, std::string_view whole) {
    const auto dot = text.find('.');
    if (dot == std::string_view::npos) return Rational(parse_digits(text, whole));
    auto int_part = text.substr(0, dot);
    auto frac_part = text.substr(dot + 1);
    if (int_part.empty() && frac_part.empty())
        throw std::invalid_argument("malformed number '" + std::string(whole) + "'");
    cpp_int scale = 1;
    for (std::size_t i = 0; i < frac_part.size(); ++i) scale *= 10;
    cpp_int ip = int_part.empty() ? cpp_int(0) : parse_digits(int_part, whole);
    cpp_int fp = frac_part.empty() ? cpp_int(0) : parse_digits(frac_part, whole);
    return Rational(ip * scale + fp, scale);
}

}  // namespace

Rational parse_rational(std::string_view text) {
    const std::string_view whole = text;
    while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
    while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
    bool negative = false;
    if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }
    Rational value;
    if (!text.empty() && text.back() == '%') {
        value = parse_decimal(text.substr(0, text.size() - 1), whole) / 100;
    } else if (const auto slash = text.find('/'); slash != std::string_view::npos) {
        const Rational num = parse_decimal(text.substr(0, slash), whole);
        const Rational den = parse_decimal(text.substr(slash + 1), whole);
        if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(whole) + "'");
        value = num / den;
    } else {
        value = parse_decimal(text, whole);
    }
    return negative ? Rational(-value) : value;
}

Schedule::Schedule(Slot period, std::span<const Slot> active_slots) : period_(period) {
    if (period == 0) throw std::invalid_argument("schedule period must be at least 1");
    if (period > kMaxPeriod)
        throw std::length_error("schedule period " + std::to_string(period) +
                                " exceeds the materialization limit");
    bitmap_.assign(period, false);
    for (Slot s : active_slots) {
        if (s >= period)
            throw std::invalid_argument("active slot " + std::to_string(s) +
                                        " is outside [0, " + std::to_string(period) + ")");
        bitmap_[s] = true;
    }
    active_.assign(active_slots.begin(), active_slots.end());
    std::sort(active_.begin(), active_.end());
    active_.erase(std::unique(active_.begin(), active_.end()), active_.end());
}

Rational Schedule::duty_cycle() const {
    return Rational(static_cast<std::uint64_t>(active_.size()), period_);
}

Schedule Schedule::rotate(std::int64_t k) const {
    const auto p = static_cast<i128>(period_);
    const auto shift = static_cast<Slot>(((static_cast<i128>(k) % p) + p) % p);
    // r[t] = s[(t + shift) mod T], so active s maps to t = s - shift.
    std::vector<Slot> moved;
    moved.reserve(active_.size());
    for (Slot s : active_) moved.push_back((s + period_ - shift) % period_);
    return Schedule(period_, moved);
}

Schedule make_schedule(Slot period, std::span<const Slot> active_slots) {
    return Schedule(period, active_slots);
}

Schedule make_schedule(Slot period, std::initializer_list<Slot> active_slots) {
    return Schedule(period, std::span<const Slot>(active_slots.begin(), active_slots.size()));
}

std::string to_string(const Schedule& s) {
    std::string out = "period=" + std::to_string(s.period()) + " active=";
    bool first = true;
    for (Slot t : s.active()) {
        if (!first) out += ',';
        out += std::to_string(t);
        first = false;
    }
    return out;
}

namespace {

Slot parse_slot(std::string_view token) {
    Slot value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size() || token.empty())
        throw std::invalid_argument("malformed slot index '" + std::string(token) + "'");
    return value;
}

}  // namespace

Schedule parse_schedule(std::string_view text) {
    constexpr std::string_view kPeriod = "period=";
    constexpr std::string_view kActive = " active=";
    if (!text.starts_with(kPeriod)) throw std::invalid_argument("schedule must start with 'period='");
    const auto sep = text.find(kActive);
    if (sep == std::string_view::npos) throw std::invalid_argument("schedule is missing ' active='");
    const Slot period = parse_slot(text.substr(kPeriod.size(), sep - kPeriod.size()));
    std::vector<Slot> active;
    auto rest = text.substr(sep + kActive.size());
    while (!rest.empty()) {
        const auto comma = rest.find(',');
        active.push_back(parse_slot(rest.substr(0, comma)));
        if (comma == std::string_view::npos) break;
        rest.remove_prefix(comma + 1);
    }
    return Schedule(period, active);
}

}  // namespace ndisc
