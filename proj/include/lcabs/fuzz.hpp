#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "lcabs/machine.hpp"

namespace lcabs {

struct FuzzConfig {
    std::uint64_t seed = 42;
    std::size_t max_states = 6;   // at most 8
    std::size_t max_inputs = 3;   // at most 4
    std::size_t max_outputs = 3;  // at most 4
    std::size_t count = 100;
    std::size_t max_l = 3;

    /// Throws InvalidSpec when a bound is out of range.
    void check() const;
};

/// Draws one accepted machine: output sets H(x) and successor sets F(x,u) are
/// drawn first and the transition relation is their product, so every draw is
/// separable. Draws are repeated until the machine is also reachable.
StateMachine random_machine(std::mt19937_64& rng, const FuzzConfig& config);

/// The machine sequence for `config`; identical configs give identical sequences.
std::vector<StateMachine> generate_machines(const FuzzConfig& config);

/// A law returns a description of the first violation, or nothing.
struct Law {
    std::string name;
    std::function<std::optional<std::string>(const StateMachine&, std::size_t max_l)> check;
};

/// Every theorem law exercised by the fuzzer, in a fixed order.
const std::vector<Law>& theorem_laws();

/// Greedily removes states, successor targets, output choices and initial
/// states while the machine stays accepted and `law` still fails.
StateMachine shrink(const StateMachine& q, const Law& law, std::size_t max_l);

struct LawResult {
    std::string name;
    std::size_t checked = 0;
    std::size_t passed = 0;
    std::optional<StateMachine> counterexample;  // shrunk
    std::string detail;
};

struct FuzzSummary {
    std::vector<StateMachine> machines;
    std::vector<LawResult> laws;
    bool all_passed() const;
};

/// Runs `laws` (default: all theorem laws) on every generated machine.
/// Machines are evaluated concurrently; results do not depend on scheduling.
FuzzSummary run_fuzz(const FuzzConfig& config, const std::vector<Law>* laws = nullptr);

/// One line per law: "name passed/checked", plus the shrunk machine on failure.
std::string render_summary(const FuzzSummary& summary);

}  // namespace lcabs
