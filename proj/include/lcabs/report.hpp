#pragma once

#include <array>
#include <string>
#include <vector>

#include "lcabs/machine.hpp"

namespace lcabs {

struct PropertyRow {
    std::size_t l = 0;
    std::size_t m = 0;
    bool future_unique = true;
    bool sbalc = true;
};

/// Properties that depend on l alone. Domino consistency and the fixed-point
/// test are defined for W = Y and are evaluated on that alphabet.
struct LevelRow {
    std::size_t l = 0;
    bool async_complete = true;
    bool domino_consistent = true;
    bool fixed_point = true;
};

struct AbstractionSummary {
    std::string name;
    std::size_t states = 0;
    std::size_t transitions = 0;
};

/// Pairwise comparison of the future window machine, the quotient machine and
/// the past window machine at one l, all over W = Y.
struct Ordering {
    static constexpr std::size_t kFuture = 0;    // Q^{I^l_l}
    static constexpr std::size_t kQuotient = 1;  // Q^{l∇}
    static constexpr std::size_t kPast = 2;      // Q^{I^l_0}

    std::size_t l = 0;
    std::array<std::string, 3> names;
    /// simulated[a][b]: machine a is simulated by machine b.
    std::array<std::array<bool, 3>, 3> simulated{};
    std::array<std::array<bool, 3>, 3> bisimilar{};
    /// included[a][b]: the behavior of a is contained in that of b.
    std::array<std::array<bool, 3>, 3> included{};
    std::array<bool, 3> bisimilar_to_source{};
    std::string chain;
};

/// Builds the three machines and renders the ordering chain, e.g.
/// "Q^{I²_2} ⪯_Y Q^{2∇} ⪯_Y Q^{I²_0}, Q^{2∇} ≅_Y Q".
Ordering compare_abstractions(const StateMachine& q, std::size_t l);

struct Report {
    std::string digest;
    ExternalMode mode = ExternalMode::OutputsOnly;
    std::size_t l_max = 0;
    std::vector<PropertyRow> properties;  // m in {0, l} for each l
    std::vector<LevelRow> levels;
    std::vector<AbstractionSummary> abstractions;
    std::vector<Ordering> orderings;

    /// True when every evaluated property holds.
    bool all_hold() const;
};

Report make_report(const StateMachine& q, ExternalMode mode, std::size_t l_max);

std::string to_text(const Report& report);
std::string to_json(const Report& report);
std::string to_text(const Ordering& ordering);
std::string to_json(const Ordering& ordering);

/// "Q^{I²_2}", "Q^{2∇}" and friends.
std::string window_machine_name(std::size_t l, std::size_t m);
std::string quotient_machine_name(std::size_t l);

}  // namespace lcabs
