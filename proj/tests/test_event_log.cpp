#include <doctest.h>

#include "mvp/event_log.hpp"
#include "test_support.hpp"

using namespace mvp;

TEST_CASE("timestamp parsing hits known anchors") {
    CHECK(parse_timestamp("1970-01-01 00:00:00") == 0);
    CHECK(parse_timestamp("1970-01-02 00:00:00") == 86400000);
    CHECK(parse_timestamp("2001-09-09 01:46:40") == 1'000'000'000'000);
    CHECK(parse_timestamp("2016-02-29 12:00:00") ==
          parse_timestamp("2016-02-28 12:00:00") + 86400000);
}

TEST_CASE("timestamp formatting inverts parsing") {
    for (const char* text : {"1970-01-01 00:00:00", "2016-10-21 11:38:26",
                             "2000-02-29 23:59:59", "1999-12-31 00:00:01"})
        CHECK(format_timestamp(parse_timestamp(text)) == text);
}

TEST_CASE("malformed timestamps are rejected") {
    for (const char* text :
         {"", "2016-10-21", "2016-10-21T11:38:26", "2016-13-01 00:00:00",
          "2015-02-29 00:00:00", "2016-10-21 24:00:00", "2016-10-21 11:60:00",
          "2016-10-21 11:00:61", "not a time at all!", "2016-10-2 11:38:26"})
        CHECK_THROWS_AS(parse_timestamp(text), ParseError);
}

TEST_CASE("sub-second timestamps cannot be formatted") {
    CHECK_THROWS_AS(format_timestamp(1500), IoError);
}

TEST_CASE("events sort by time with lexicographic id tie-break") {
    LogBuilder b;
    b.add_event("b", "act", 2000).add_event("a10", "act", 1000).add_event("a2", "act", 1000);
    const auto log = b.build();
    REQUIRE(log.num_events() == 3);
    CHECK(log.event(0).id == "a10"); // "a10" < "a2" lexicographically
    CHECK(log.event(1).id == "a2");
    CHECK(log.event(2).id == "b");
    for (std::size_t i = 1; i < log.num_events(); ++i)
        CHECK(log.event(i - 1).time_ms <= log.event(i).time_ms);
}

TEST_CASE("eo pairs deduplicate and object sequences come out ordered") {
    LogBuilder b;
    b.add_object("obj", "cls");
    b.add_event("late", "act", 5000).add_event("early", "act", 1000);
    b.link("late", "obj").link("early", "obj").link("late", "obj");
    const auto log = b.build();
    CHECK(log.eo().size() == 2);
    const auto seq = log.events_of_object(*log.find_object("obj"));
    REQUIRE(seq.size() == 2);
    CHECK(log.event(seq[0]).id == "early");
    CHECK(log.event(seq[1]).id == "late");
}

TEST_CASE("builder rejects inconsistent input") {
    CHECK_THROWS_AS(LogBuilder().add_event("e", "a", 0).add_event("e", "b", 1).build(),
                    ConsistencyError);
    CHECK_THROWS_AS(LogBuilder().add_object("o", "c1").add_object("o", "c2").build(),
                    ConsistencyError);
    CHECK_THROWS_AS(LogBuilder().add_object("o", "c").link("ghost", "o").build(),
                    LookupError);
    CHECK_THROWS_AS(LogBuilder().add_event("e", "a", 0).link("e", "ghost").build(),
                    LookupError);
}

TEST_CASE("structural equality is field-wise") {
    auto make = [] {
        LogBuilder b;
        b.add_object("o1", "c1").add_event("e1", "a1", 1000).link("e1", "o1");
        return b.build();
    };
    CHECK(make() == make());

    LogBuilder other;
    other.add_object("o1", "c1").add_event("e1", "a2", 1000).link("e1", "o1");
    CHECK_FALSE(make() == other.build());
}

TEST_CASE("random logs always satisfy the log invariants") {
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
        const auto log = testing::random_log(seed);
        for (std::size_t i = 1; i < log.num_events(); ++i) {
            const Event& a = log.event(i - 1);
            const Event& b = log.event(i);
            CHECK(a.time_ms <= b.time_ms);
            if (a.time_ms == b.time_ms) CHECK(a.id < b.id);
        }
        for (const auto& [ev, obj] : log.eo()) {
            CHECK(ev < log.num_events());
            CHECK(obj < log.num_objects());
        }
        for (std::size_t obj = 0; obj < log.num_objects(); ++obj) {
            CHECK(log.object_class(obj) < log.num_classes());
            const auto seq = log.events_of_object(obj);
            for (std::size_t i = 1; i < seq.size(); ++i) CHECK(seq[i - 1] < seq[i]);
        }
    }
}
