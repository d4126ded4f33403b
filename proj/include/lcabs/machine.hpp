#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lcabs/error.hpp"

namespace lcabs {

using StateId = std::uint32_t;
using InputId = std::uint32_t;
using OutputId = std::uint32_t;

/// External symbol index. Non-negative values index the external alphabet of
/// a machine; kDiamond marks "before time zero" inside windows.
using Symbol = std::int32_t;
inline constexpr Symbol kDiamond = -1;
inline constexpr std::string_view kDiamondToken = "<>";

struct Transition {
    StateId from = 0;
    InputId input = 0;
    OutputId output = 0;
    StateId to = 0;

    auto operator<=>(const Transition&) const = default;
};

/// Finite input/output state machine (X, U, Y, delta, X0).
///
/// Immutable after construction. Transitions are stored sorted by
/// (from, input, output, to) with duplicates collapsed, so `outgoing(x)` is a
/// contiguous span. The declaration order of every alphabet is the canonical
/// order used by all derived sets.
class StateMachine {
  public:
    StateMachine() = default;
    StateMachine(std::vector<std::string> states, std::vector<std::string> inputs,
                 std::vector<std::string> outputs, std::vector<StateId> initial,
                 std::vector<Transition> transitions);

    /// Name-based construction; every component must be declared.
    static StateMachine from_names(
        std::vector<std::string> states, std::vector<std::string> inputs,
        std::vector<std::string> outputs, const std::vector<std::string>& initial,
        const std::vector<std::vector<std::string>>& transitions);

    std::size_t num_states() const { return states_.size(); }
    std::size_t num_inputs() const { return inputs_.size(); }
    std::size_t num_outputs() const { return outputs_.size(); }

    const std::vector<std::string>& states() const { return states_; }
    const std::vector<std::string>& inputs() const { return inputs_; }
    const std::vector<std::string>& outputs() const { return outputs_; }
    const std::vector<StateId>& initial() const { return initial_; }
    const std::vector<Transition>& transitions() const { return transitions_; }

    std::span<const Transition> outgoing(StateId x) const;
    bool is_initial(StateId x) const;

    const std::string& state_name(StateId x) const;
    const std::string& input_name(InputId u) const;
    const std::string& output_name(OutputId y) const;

    std::optional<StateId> find_state(std::string_view name) const;
    std::optional<InputId> find_input(std::string_view name) const;
    std::optional<OutputId> find_output(std::string_view name) const;

    /// Lookups that throw UnknownState / UnknownInput / UnknownOutput.
    StateId state_id(std::string_view name) const;
    InputId input_id(std::string_view name) const;
    OutputId output_id(std::string_view name) const;

    void check_state(StateId x) const;
    void check_input(InputId u) const;
    void check_output(OutputId y) const;

    /// Stable content hash (hex) over the canonical serialization.
    const std::string& digest() const { return digest_; }

    bool operator==(const StateMachine& other) const;

  private:
    std::vector<std::string> states_;
    std::vector<std::string> inputs_;
    std::vector<std::string> outputs_;
    std::vector<StateId> initial_;
    std::vector<Transition> transitions_;
    std::vector<std::size_t> offsets_;  // outgoing(x) = [offsets_[x], offsets_[x+1])
    std::vector<bool> initial_mask_;
    std::string digest_;
};

enum class ExternalMode { OutputsOnly, InputOutputPairs };

const char* to_string(ExternalMode mode);
/// "y" or "uy", as used by the file format and CLI.
const char* flag_token(ExternalMode mode);
ExternalMode parse_external_mode(std::string_view token);

/// The external alphabet W of a machine: either Y or U x Y. Symbols are
/// numbered y (OutputsOnly) or u * |Y| + y (InputOutputPairs), which is the
/// lexicographic order of the declaration orders.
class ExternalAlphabet {
  public:
    ExternalAlphabet(const StateMachine& machine, ExternalMode mode);

    ExternalMode mode() const { return mode_; }
    std::size_t size() const;

    Symbol project(InputId u, OutputId y) const;
    Symbol project(const Transition& t) const { return project(t.input, t.output); }

    /// Text token of a symbol: the output name, or "(u,y)" for pairs; "<>"
    /// for the diamond.
    std::string token(Symbol s) const;
    std::optional<Symbol> find_token(std::string_view token) const;

    const StateMachine& machine() const { return *machine_; }

  private:
    const StateMachine* machine_;
    ExternalMode mode_;
};

/// Maps the external symbols of one machine onto those of another by name.
/// Throws IncompatibleAlphabets unless both projected alphabets coincide and
/// are non-empty.
class SymbolBridge {
  public:
    SymbolBridge(const StateMachine& left, const StateMachine& right, ExternalMode mode);

    /// Left symbol for the given right symbol.
    Symbol to_left(Symbol right) const { return right_to_left_[static_cast<std::size_t>(right)]; }

  private:
    std::vector<Symbol> right_to_left_;
};

// -- enabled-set operators --------------------------------------------------

/// H(x): outputs of transitions leaving x, in canonical order.
std::vector<OutputId> admissible_outputs(const StateMachine& q, StateId x);

/// F(x,u) when `u` is given, T(x) otherwise.
std::vector<StateId> post_states(const StateMachine& q, StateId x,
                                 std::optional<InputId> u = std::nullopt);

std::vector<InputId> enabled_inputs(const StateMachine& q, StateId x);

/// Projection of (u,y) onto W, checked against the machine's alphabets.
Symbol project_external(const StateMachine& q, InputId u, OutputId y, ExternalMode mode);

struct ValidationReport {
    bool output_deterministic = false;
    bool separable = false;
    bool reachable = false;
    bool live = false;
    bool accepted = false;
    std::vector<std::string> findings;

    bool operator==(const ValidationReport&) const = default;
};

ValidationReport validate(const StateMachine& q);

/// Throws NotAccepted unless validate(q).accepted.
void require_accepted(const StateMachine& q);

/// Weaker gate for machines that are only compared, never abstracted:
/// abstractions are live and reachable but need not be separable.
void require_live_reachable(const StateMachine& q);

}  // namespace lcabs
