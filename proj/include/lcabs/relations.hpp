#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "lcabs/machine.hpp"
#include "lcabs/salca.hpp"

namespace lcabs {

/// A set of state pairs between two specific machines, bound by digest.
struct Relation {
    std::string left_digest;
    std::string right_digest;
    std::set<std::pair<StateId, StateId>> pairs;

    bool contains(StateId a, StateId b) const { return pairs.count({a, b}) != 0; }
    bool operator==(const Relation&) const = default;
};

/// Throws MalformedRelation if the digests or state indices do not fit.
void check_relation(const Relation& r, const StateMachine& left, const StateMachine& right);

Relation identity_relation(const StateMachine& q);
Relation inverse(const Relation& r);
/// {(a,c) | (a,b) in r1, (b,c) in r2}; throws DigestMismatch unless r1 ends
/// where r2 starts.
Relation compose(const Relation& r1, const Relation& r2);

/// "left -> right" per pair in canonical order.
std::string serialize(const Relation& r, const StateMachine& left, const StateMachine& right);

struct SimulationVerdict {
    bool holds = true;
    /// Set when the failure was found while checking the inverse relation.
    bool inverse_direction = false;
    /// Set when some initial state has no related initial partner.
    bool initial_failure = false;
    /// The failing pair, oriented in the direction being checked.
    StateId from_state = 0;
    StateId to_state = 0;
    /// The unmatched transition of the simulated side (step failures only).
    std::optional<Transition> unmatched;
};

/// Checks that `r` is a simulation from q1 to q2 for the projection onto
/// `mode`; with `bisim` also checks the inverse from q2 to q1.
SimulationVerdict verify_simulation(const StateMachine& q1, const StateMachine& q2,
                                    ExternalMode mode, const Relation& r, bool bisim = false);

/// Every failing (pair, transition) combination, in canonical order. The
/// initial condition is reported once per unmatched initial state.
std::vector<SimulationVerdict> simulation_failures(const StateMachine& q1, const StateMachine& q2,
                                                   ExternalMode mode, const Relation& r,
                                                   bool bisim = false);

/// Largest relation closed under the step condition.
Relation greatest_simulation(const StateMachine& q1, const StateMachine& q2, ExternalMode mode);
/// Largest relation closed under the step condition in both directions.
Relation greatest_bisimulation(const StateMachine& q1, const StateMachine& q2, ExternalMode mode);

/// q1 is simulated by q2 (some simulation relation exists).
bool simulated_by(const StateMachine& q1, const StateMachine& q2, ExternalMode mode);
bool bisimilar(const StateMachine& q1, const StateMachine& q2, ExternalMode mode);

enum class RelationKind {
    StateToAbstract,  // x ~ window realized around x
    LStep,            // (l+1)-window ~ its last l symbols
    MStep,            // shifted windows realized around a common state
    StateToQuotient,  // x ~ its cell of l-step futures
    SalcaToQuotient,  // window ~ every cell containing it
    Renaming,         // window ~ the singleton cell holding it
};

const char* to_string(RelationKind kind);

struct CanonicalRelation {
    AbstractMachine left;
    AbstractMachine right;
    Relation relation;
};

/// Builds the endpoint machines and the standard relation between them.
/// `mode` is ignored by the quotient-based kinds, which always use W = Y.
CanonicalRelation canonical_relation(RelationKind kind, const StateMachine& q, ExternalMode mode,
                                     std::size_t l, std::size_t m = 0);

struct ControlReport {
    bool input_inclusion = true;
    /// First pair where the abstract state enables an input the concrete one lacks.
    std::optional<std::pair<StateId, StateId>> inclusion_witness;
    std::vector<InputId> concrete_inputs;
    std::vector<InputId> abstract_inputs;
    bool free_input = true;
    bool simulation_ok = true;
    /// Simulation plus input inclusion, the characterization used here for
    /// alternating simulation.
    bool alternating_ok = true;
};

ControlReport control_compatibility(const StateMachine& q, const StateMachine& abstract,
                                    const Relation& r, ExternalMode mode);

}  // namespace lcabs
