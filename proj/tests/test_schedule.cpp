#include <doctest.h>

#include <random>

#include "ndisc/schedule.hpp"

using namespace ndisc;

TEST_CASE("make_schedule reproduces the two-node example schedules") {
    const Schedule a = make_schedule(6, {5});
    CHECK(a.period() == 6);
    CHECK(a.active() == std::vector<Slot>{5});

    const Schedule b = make_schedule(9, {8, 1, 8});
    CHECK(b.active() == std::vector<Slot>{1, 8});

    const Schedule awake = make_schedule(1, {0});
    CHECK(awake.duty_cycle() == 1);
}

TEST_CASE("make_schedule rejects bad input") {
    CHECK_THROWS_AS(make_schedule(0, {}), std::invalid_argument);
    CHECK_THROWS_AS(make_schedule(6, {6}), std::invalid_argument);
    CHECK_THROWS_AS(make_schedule(Schedule::kMaxPeriod + 1, {0}), std::length_error);
}

TEST_CASE("is_active extends periodically") {
    const Schedule a = make_schedule(6, {5});
    CHECK(is_active(a, 5));
    CHECK(is_active(a, 11));
    CHECK_FALSE(is_active(a, 0));
}

TEST_CASE("rotate") {
    const Schedule b = make_schedule(9, {1, 8});
    CHECK(rotate(b, 1) == make_schedule(9, {0, 7}));
    CHECK(rotate(b, 0) == b);
    CHECK(rotate(b, 9) == b);
    CHECK(rotate(b, -1) == make_schedule(9, {2, 0}));
}

TEST_CASE("duty_cycle is exact") {
    CHECK(duty_cycle(make_schedule(6, {5})) == Rational(1, 6));
    CHECK(duty_cycle(make_schedule(9, {1, 8})) == Rational(2, 9));
}

TEST_CASE("schedule properties over random schedules") {
    std::mt19937_64 rng(7);
    for (int iter = 0; iter < 300; ++iter) {
        const Slot period = 1 + rng() % 97;
        std::vector<Slot> active;
        const auto n = 1 + rng() % period;
        for (Slot j = 0; j < n; ++j) active.push_back(rng() % period);
        const Schedule s(period, active);
        const auto k = static_cast<std::int64_t>(rng() % 1000) - 500;

        CHECK(rotate(rotate(s, k), -k) == s);
        CHECK(duty_cycle(rotate(s, k)) == duty_cycle(s));
        const Schedule r = rotate(s, k);
        for (Slot t = 0; t < period; ++t) {
            const auto src = static_cast<Slot>(((static_cast<std::int64_t>(t) + k) %
                                                static_cast<std::int64_t>(period) +
                                                static_cast<std::int64_t>(period)) %
                                               static_cast<std::int64_t>(period));
            CHECK(r.is_active(t) == s.is_active(src));
            CHECK(s.is_active(t) == s.is_active(t + 3 * period));
        }
        CHECK(make_schedule(s.period(), s.active()) == s);
        CHECK(parse_schedule(to_string(s)) == s);
    }
}

TEST_CASE("schedule text form") {
    CHECK(to_string(make_schedule(9, {8, 1})) == "period=9 active=1,8");
    CHECK(parse_schedule("period=6 active=5") == make_schedule(6, {5}));
    CHECK_THROWS_AS(parse_schedule("period=6 active=x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_schedule("active=1"), std::invalid_argument);
}

TEST_CASE("parse_rational is exact") {
    CHECK(parse_rational("0.05") == Rational(1, 20));
    CHECK(parse_rational("5%") == Rational(1, 20));
    CHECK(parse_rational("1/20") == Rational(1, 20));
    CHECK(parse_rational("37.5%") == Rational(3, 8));
    CHECK(parse_rational("1") == 1);
    CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK(to_fraction_string(Rational(6, 9)) == "2/3");
    CHECK(to_decimal_string(Rational(1, 3)) == "0.333333333333");
}
