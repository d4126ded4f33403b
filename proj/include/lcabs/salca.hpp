#pragma once

#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "lcabs/behavior.hpp"
#include "lcabs/machine.hpp"
#include "lcabs/window.hpp"

namespace lcabs {

enum class AbstractionKind { Concrete, Salca, Standard, Quotient };

const char* to_string(AbstractionKind kind);

struct Provenance {
    std::string source_digest;
    ExternalMode mode = ExternalMode::OutputsOnly;
    std::size_t l = 0;
    std::size_t m = 0;
};

/// A state machine whose states stand for window sets of a source machine.
/// Window abstractions carry one window per state; quotient machines carry
/// the whole cell. A wrapped concrete machine has empty labels. Labels are
/// kept in sorted order, so state ids follow the label order.
struct AbstractMachine {
    StateMachine machine;
    std::vector<std::vector<Window>> labels;
    AbstractionKind kind = AbstractionKind::Concrete;
    Provenance provenance;

    ExternalAlphabet alphabet() const { return ExternalAlphabet(machine, provenance.mode); }
    std::optional<StateId> find(const std::vector<Window>& label) const;
    std::optional<StateId> find_window(const Window& window) const {
        return find(std::vector<Window>{window});
    }
};

AbstractMachine wrap_concrete(const StateMachine& q, ExternalMode mode);

/// The window-state machine over the interval [m-l, m-1]: states are the
/// windows realized around some state, initial states the windows seen at
/// time zero from an initial state, and a transition exists whenever the two windows overlap
/// consistently and some concrete transition with the same label connects
/// states compatible with them. Unreachable states are pruned.
AbstractMachine build_abstract_machine(const StateMachine& q, const ExternalAlphabet& w,
                                       IntervalSpec spec);

/// The overlap conditions a window transition must satisfy for label `sym`.
bool windows_overlap(const Window& from, Symbol sym, const Window& to, IntervalSpec spec);

/// The classic domino realization over W = U x Y: states are ⋄^l and the
/// l-dominoes, and a transition appends any symbol that completes an
/// (l+1)-domino. Restricted to states reachable from ⋄^l.
AbstractMachine build_standard_realization(const StateMachine& q, std::size_t l);

struct FutureUniqueVerdict {
    bool holds = true;
    StateId state = 0;
    Window first;
    Window second;
};

struct SbalcVerdict {
    bool holds = true;
    StateId state = 0;
    Window domino;
};

/// Every state determines the next m external symbols.
FutureUniqueVerdict is_future_unique(const StateMachine& q, const ExternalAlphabet& w,
                                     IntervalSpec spec);

/// Every (l+1)-domino extending a window seen at x is realizable through x.
SbalcVerdict is_sbalc(const StateMachine& q, const ExternalAlphabet& w, IntervalSpec spec);

/// B(q) equals its strongest asynchronous l-complete approximation.
bool is_async_l_complete(const StateMachine& q, const ExternalAlphabet& w, std::size_t l);

/// No two (l+1)-dominoes share their first l symbols. Requires m < l.
bool joint_fu_sbalc(const StateMachine& q, const ExternalAlphabet& w, IntervalSpec spec);

/// (from window, label, to window), the transition structure seen through W.
using ProjectedTriple = std::tuple<Window, Symbol, Window>;

std::set<ProjectedTriple> projected_transitions(const AbstractMachine& a);

/// Triples generated by (l+1)-dominoes whose two l-restrictions lie in
/// `states`, labelled with the symbol at position l-m.
std::set<ProjectedTriple> domino_transitions(const StateMachine& q, const ExternalAlphabet& w,
                                             IntervalSpec spec, const WindowSet& states);

}  // namespace lcabs
