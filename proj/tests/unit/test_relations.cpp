#include <doctest.h>

#include "fixtures.hpp"
#include "lcabs/relations.hpp"
#include "lcabs/report.hpp"

using namespace lcabs;

TEST_CASE("state to window relations on fig2") {
    auto q = fig2();
    auto y = ExternalMode::OutputsOnly;
    for (std::size_t m : {0U, 1U}) {
        auto c = canonical_relation(RelationKind::StateToAbstract, q, y, 1, m);
        CHECK(verify_simulation(q, c.right.machine, y, c.relation).holds);
    }
    auto c22 = canonical_relation(RelationKind::StateToAbstract, q, y, 2, 2);
    CHECK_FALSE(verify_simulation(q, c22.right.machine, y, c22.relation).holds);
    CHECK(simulation_failures(q, c22.right.machine, y, c22.relation).size() == 2);
}

TEST_CASE("relation algebra") {
    auto q = fig2();
    auto id = identity_relation(q);
    CHECK(id.pairs.size() == q.num_states());
    CHECK(compose(id, id) == id);
    CHECK(inverse(inverse(id)) == id);
    CHECK(verify_simulation(q, q, ExternalMode::InputOutputPairs, id).holds);
}

TEST_CASE("control compatibility witness") {
    auto q = fig2();
    auto c = canonical_relation(RelationKind::StateToAbstract, q, ExternalMode::OutputsOnly, 1, 0);
    auto report = control_compatibility(q, c.right.machine, c.relation, ExternalMode::OutputsOnly);
    CHECK_FALSE(report.input_inclusion);
    REQUIRE(report.inclusion_witness);
    CHECK(q.state_name(report.inclusion_witness->first) == "x2");
}

TEST_CASE("ordering chains") {
    auto q = fig2();
    CHECK(compare_abstractions(q, 2).chain == "Q^{I²_2} ⪯_Y Q^{2∇} ⪯_Y Q^{I²_0}, Q^{2∇} ≅_Y Q");
    CHECK(compare_abstractions(q, 1).chain == "Q^{1∇} ≅_Y Q^{I¹_1} ⪯_Y Q^{I¹_0}");
    CHECK(compare_abstractions(self_loop(), 1).chain ==
          "Q^{1∇} ≅_Y Q^{I¹_1} ≅_Y Q^{I¹_0}, Q^{1∇} ≅_Y Q");
}

TEST_CASE("report on fig2") {
    auto r = make_report(fig2(), ExternalMode::OutputsOnly, 2);
    REQUIRE(r.properties.size() == 4);
    CHECK_FALSE(r.properties[3].future_unique);
    CHECK(r.properties[3].sbalc);
    REQUIRE(r.levels.size() == 2);
    CHECK_FALSE(r.levels[0].fixed_point);
    CHECK(r.levels[1].fixed_point);
    CHECK_FALSE(r.all_hold());
    CHECK(to_json(r).find("\"orderings\"") != std::string::npos);
}
