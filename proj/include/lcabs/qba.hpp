#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lcabs/machine.hpp"
#include "lcabs/salca.hpp"
#include "lcabs/window.hpp"

namespace lcabs {

/// A partition of the state set. Cells are sorted internally and ordered by
/// their least member.
struct Partition {
    std::vector<std::vector<StateId>> cells;
    std::size_t level = 1;

    /// Cells only; the level is bookkeeping.
    bool same_cells(const Partition& other) const { return cells == other.cells; }
    bool operator==(const Partition&) const = default;
};

/// Sorts cells and checks that they form a disjoint cover of `num_states`
/// states. Throws InvalidPartition otherwise.
Partition canonical_partition(std::vector<std::vector<StateId>> cells, std::size_t num_states,
                              std::size_t level = 1);

/// One cell per line, e.g. "{x1,x5}".
std::string serialize(const Partition& p, const StateMachine& q);

/// States grouped by their set of admissible outputs.
Partition initial_partition(const StateMachine& q);

/// Splits every cell by the predecessor set of every cell of `p`.
Partition refine(const StateMachine& q, const Partition& p);

struct FixedPointVerdict {
    bool holds = true;
    std::size_t cell = 0;        // index of the cell that is not uniform
    std::size_t target = 0;      // index of the cell whose predecessor set splits it
    StateId state = 0;           // member of `cell` without a successor in `target`
};

FixedPointVerdict is_fixed_point(const StateMachine& q, const Partition& p);

struct RefinementResult {
    Partition partition;
    std::size_t steps = 0;  // index of the last partition produced (1 = initial)
    bool reached = false;
};

/// Refines from the initial partition until a fixed point or until
/// `max_steps` partitions have been produced (default: number of states).
RefinementResult refinement_fixpoint(const StateMachine& q,
                                     std::optional<std::size_t> max_steps = std::nullopt);

/// The partition obtained after l-1 refinements of the initial partition.
Partition partition_at_level(const StateMachine& q, std::size_t l);

/// Cells of states sharing the same l-step output futures.
Partition future_fiber_partition(const StateMachine& q, std::size_t l);

/// Quotient machine over W = Y whose states are the distinct l-step output
/// futures of concrete states.
AbstractMachine build_quotient_machine(const StateMachine& q, std::size_t l);

struct DominoConsistencyVerdict {
    bool holds = true;
    Window domino;
    std::vector<Window> cell;
};

DominoConsistencyVerdict is_domino_consistent(const StateMachine& q, std::size_t l);

}  // namespace lcabs
