#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lcabs/machine.hpp"
#include "lcabs/window.hpp"

namespace lcabs {

/// Length-k histories that can immediately precede a visit to each state,
/// padded with diamonds before time zero. Indexed by state.
std::vector<WindowSet> past_windows(const StateMachine& q, const ExternalAlphabet& w,
                                    std::size_t k);

/// Label strings of all length-k paths leaving each state. Indexed by state.
std::vector<WindowSet> future_windows(const StateMachine& q, const ExternalAlphabet& w,
                                      std::size_t k);

/// All length-n windows of the behavior, including diamond-padded ones.
DominoSet dominoes(const StateMachine& q, const ExternalAlphabet& w, std::size_t n);

/// External strings seen around a visit to `x` over [m-l, m-1], or over
/// [m-l, m] when `extended` is set.
WindowSet external_strings(const StateMachine& q, const ExternalAlphabet& w, StateId x,
                           IntervalSpec spec, bool extended = false);

/// The same for every state at once.
std::vector<WindowSet> external_strings_all(const StateMachine& q, const ExternalAlphabet& w,
                                            IntervalSpec spec, bool extended = false);

/// Deterministic acceptor of the finite prefixes of a machine's behavior,
/// obtained by subset construction. State 0 is initial; the empty subset is
/// the explicit reject sink.
class PrefixAutomaton {
  public:
    static PrefixAutomaton build(const StateMachine& q, ExternalMode mode);

    std::size_t alphabet_size() const { return alphabet_size_; }
    std::size_t num_states() const { return subsets_.size(); }
    std::uint32_t initial() const { return 0; }
    std::uint32_t sink() const { return sink_; }
    bool is_accepting(std::uint32_t s) const { return s != sink_; }
    std::uint32_t step(std::uint32_t s, Symbol w) const;
    const std::vector<StateId>& subset(std::uint32_t s) const { return subsets_.at(s); }

    bool accepts(const std::vector<Symbol>& word) const;
    std::string to_dot(const ExternalAlphabet& alphabet, const StateMachine& q) const;

  private:
    std::size_t alphabet_size_ = 0;
    std::uint32_t sink_ = 0;
    std::vector<std::vector<StateId>> subsets_;
    std::vector<std::uint32_t> delta_;  // row-major [state][symbol]
};

struct InclusionVerdict {
    bool included = true;
    /// Shortest prefix of the left behavior rejected by the right machine,
    /// in left-machine symbols. Empty when included.
    std::vector<Symbol> counterexample;
};

/// Decides B(q1) ⊆ B(q2) for the projection onto `mode`. Both machines are
/// live and finitely branching, so comparing prefix languages is exact.
InclusionVerdict behavior_included(const StateMachine& q1, const StateMachine& q2,
                                   ExternalMode mode);
bool behavior_equal(const StateMachine& q1, const StateMachine& q2, ExternalMode mode);

/// True iff every (l+2)-string whose two (l+1)-restrictions are dominoes
/// (the left one possibly all diamonds) is itself a domino.
bool saturation_check(const StateMachine& q, const ExternalAlphabet& w, std::size_t l);

}  // namespace lcabs
