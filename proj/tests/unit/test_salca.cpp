#include <doctest.h>

#include "fixtures.hpp"
#include "lcabs/error.hpp"
#include "lcabs/relations.hpp"
#include "lcabs/salca.hpp"

using namespace lcabs;

namespace {

std::set<std::string> names(const StateMachine& q) { return {q.states().begin(), q.states().end()}; }

}  // namespace

TEST_CASE("fig2 predicate table") {
    auto q = fig2();
    ExternalAlphabet w(q, ExternalMode::OutputsOnly);
    auto s = [](std::size_t l, std::size_t m) { return IntervalSpec::make(l, m); };
    CHECK(is_future_unique(q, w, s(1, 0)).holds);
    CHECK_FALSE(is_sbalc(q, w, s(1, 0)).holds);
    CHECK(is_future_unique(q, w, s(1, 1)).holds);
    CHECK_FALSE(is_sbalc(q, w, s(1, 1)).holds);
    CHECK(is_future_unique(q, w, s(2, 0)).holds);
    CHECK_FALSE(is_sbalc(q, w, s(2, 0)).holds);
    CHECK(is_sbalc(q, w, s(2, 2)).holds);
    auto fu = is_future_unique(q, w, s(2, 2));
    CHECK_FALSE(fu.holds);
    CHECK(q.state_name(fu.state) == "x3");
    CHECK(is_async_l_complete(q, w, 1));
}

TEST_CASE("fig2 window machines") {
    auto q = fig2();
    ExternalAlphabet w(q, ExternalMode::OutputsOnly);
    auto a10 = build_abstract_machine(q, w, IntervalSpec::make(1, 0)).machine;
    CHECK(names(a10) == std::set<std::string>{"<>", "y1", "y2", "y3", "y4"});
    CHECK(a10.transitions().size() == 7);
    auto a20 = build_abstract_machine(q, w, IntervalSpec::make(2, 0)).machine;
    CHECK(a20.num_states() == 8);
    CHECK(a20.transitions().size() == 11);
    auto a22 = build_abstract_machine(q, w, IntervalSpec::make(2, 2)).machine;
    CHECK(a22.num_states() == 6);
    CHECK(a22.transitions().size() == 8);
}

TEST_CASE("initial windows are read at time zero") {
    // The initial state is revisited, so its windows from later times must
    // not become initial abstract states.
    auto q = StateMachine::from_names({"a", "b"}, {"u"}, {"p", "r"}, {"a"},
                                      {{"a", "u", "p", "b"}, {"b", "u", "r", "a"}});
    ExternalAlphabet w(q, ExternalMode::OutputsOnly);
    auto a = build_abstract_machine(q, w, IntervalSpec::make(1, 0)).machine;
    REQUIRE(a.initial().size() == 1);
    CHECK(a.state_name(a.initial().front()) == "<>");
    CHECK(simulated_by(q, a, ExternalMode::OutputsOnly));
}

TEST_CASE("interval specs are validated") {
    CHECK_THROWS_AS(IntervalSpec::make(0, 0), Error);
    CHECK_THROWS_AS(IntervalSpec::make(1, 2), Error);
}

TEST_CASE("joint property can fail while both single properties hold") {
    // Two initial states feed one absorbing state; the 2-windows around r
    // pair with different futures depending on the branch.
    auto q = StateMachine::from_names({"p", "q", "r"}, {"u"}, {"a", "b", "c"}, {"p", "q"},
                                      {{"p", "u", "a", "r"}, {"q", "u", "b", "r"}, {"r", "u", "c", "r"}});
    ExternalAlphabet w(q, ExternalMode::OutputsOnly);
    CHECK(is_future_unique(q, w, IntervalSpec::make(2, 2)).holds);
    CHECK(is_sbalc(q, w, IntervalSpec::make(2, 1)).holds);
    CHECK_FALSE(joint_fu_sbalc(q, w, IntervalSpec::make(2, 1)));
}

TEST_CASE("inverse m-step simulation without future uniqueness") {
    auto q = StateMachine::from_names({"p", "r"}, {"u"}, {"a", "b", "c"}, {"p"},
                                      {{"p", "u", "a", "r"}, {"p", "u", "b", "r"}, {"r", "u", "c", "r"}});
    ExternalAlphabet w(q, ExternalMode::OutputsOnly);
    auto c = canonical_relation(RelationKind::MStep, q, ExternalMode::OutputsOnly, 2, 1);
    CHECK(verify_simulation(c.right.machine, c.left.machine, ExternalMode::OutputsOnly,
                            inverse(c.relation))
              .holds);
    CHECK_FALSE(is_future_unique(q, w, IntervalSpec::make(2, 2)).holds);
}
