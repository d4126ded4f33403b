#include <doctest.h>

#include "fixtures.hpp"
#include "lcabs/error.hpp"
#include "lcabs/io.hpp"
#include "lcabs/machine.hpp"

using namespace lcabs;

TEST_CASE("fig2 is accepted") {
    auto v = validate(fig2());
    CHECK(v.output_deterministic);
    CHECK(v.separable);
    CHECK(v.reachable);
    CHECK(v.live);
    CHECK(v.accepted);
}

TEST_CASE("dead end and unreachable states are reported") {
    auto dead = StateMachine::from_names({"a", "b"}, {"u"}, {"y"}, {"a"}, {{"a", "u", "y", "b"}});
    CHECK_FALSE(validate(dead).live);
    CHECK_THROWS_AS(require_accepted(dead), Error);

    auto orphan = StateMachine::from_names({"a", "b"}, {"u"}, {"y"}, {"a"},
                                           {{"a", "u", "y", "a"}, {"b", "u", "y", "b"}});
    CHECK_FALSE(validate(orphan).reachable);
}

TEST_CASE("non-separable machines are rejected") {
    // H(a) x U(a) contains (v, z), which has no transition.
    auto q = StateMachine::from_names({"a"}, {"u", "v"}, {"y", "z"}, {"a"},
                                      {{"a", "u", "y", "a"}, {"a", "v", "z", "a"}});
    CHECK_FALSE(validate(q).separable);
    try {
        require_accepted(q);
        FAIL("expected NotAccepted");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotAccepted);
    }
}

TEST_CASE("undeclared names raise the matching error kind") {
    try {
        StateMachine::from_names({"a"}, {"u"}, {"y"}, {"a"}, {{"a", "u", "y", "b"}});
        FAIL("expected UnknownState");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::UnknownState);
    }
}

TEST_CASE("JSON round trip keeps the digest") {
    auto q = fig2();
    auto again = parse_machine_json(machine_to_json(q, ExternalMode::OutputsOnly));
    CHECK(again.machine.digest() == q.digest());
    CHECK(again.mode == ExternalMode::OutputsOnly);
    CHECK_THROWS_AS(parse_machine_json("{not json"), Error);
}

TEST_CASE("external alphabet tokens") {
    auto q = fig2();
    ExternalAlphabet y(q, ExternalMode::OutputsOnly);
    ExternalAlphabet uy(q, ExternalMode::InputOutputPairs);
    CHECK(y.size() == 4);
    CHECK(uy.token(project_external(q, 0, 0, ExternalMode::InputOutputPairs)) == "(u1,y1)");
    CHECK(parse_external_mode("uy") == ExternalMode::InputOutputPairs);
    CHECK_THROWS_AS(parse_external_mode("xy"), Error);
}
