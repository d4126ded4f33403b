#pragma once

// Brute-force reference implementations used to cross-check the library.
// They enumerate runs and relations directly and share no code with the
// subset construction or the fixpoint algorithms under test.

#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "lcabs/machine.hpp"
#include "lcabs/window.hpp"

namespace oracle {

using lcabs::ExternalAlphabet;
using lcabs::ExternalMode;
using lcabs::StateId;
using lcabs::StateMachine;
using lcabs::Symbol;
using lcabs::Window;

/// Every external word of length exactly `depth` produced by some run from an
/// initial state, spelled with symbol tokens.
inline std::set<std::vector<std::string>> words(const StateMachine& q, ExternalMode mode,
                                                std::size_t depth) {
    ExternalAlphabet w(q, mode);
    std::set<std::pair<StateId, std::vector<std::string>>> frontier;
    for (StateId x : q.initial()) frontier.insert({x, {}});
    for (std::size_t k = 0; k < depth; ++k) {
        std::set<std::pair<StateId, std::vector<std::string>>> next;
        for (const auto& [x, word] : frontier) {
            for (const auto& t : q.outgoing(x)) {
                auto longer = word;
                longer.push_back(w.token(w.project(t)));
                next.insert({t.to, std::move(longer)});
            }
        }
        frontier = std::move(next);
    }
    std::set<std::vector<std::string>> out;
    for (const auto& entry : frontier) out.insert(entry.second);
    return out;
}

/// Prefix inclusion up to `depth`. Both machines are live, so every shorter
/// word extends to one of length `depth` and comparing that length suffices.
inline bool prefixes_included(const StateMachine& q1, const StateMachine& q2, ExternalMode mode,
                              std::size_t depth) {
    auto right = words(q2, mode, depth);
    for (const auto& word : words(q1, mode, depth)) {
        if (!right.count(word)) return false;
    }
    return true;
}

/// Windows over [m-l, m-1] seen around each state along every run of length
/// at most `depth` from an initial state; positions before time zero read as
/// the diamond.
inline std::vector<std::set<Window>> enumerated_windows(const StateMachine& q, ExternalMode mode,
                                                        std::size_t l, std::size_t m,
                                                        std::size_t depth) {
    ExternalAlphabet w(q, mode);
    std::vector<std::set<Window>> out(q.num_states());
    struct Run {
        std::vector<StateId> states;
        std::vector<Symbol> labels;
    };
    std::vector<Run> runs;
    for (StateId x : q.initial()) runs.push_back({{x}, {}});
    for (std::size_t k = 0; k <= depth; ++k) {
        std::vector<Run> next;
        for (const auto& run : runs) {
            const auto n = static_cast<long>(run.labels.size());
            for (long j = 0; j < static_cast<long>(run.states.size()); ++j) {
                long first = j + static_cast<long>(m) - static_cast<long>(l);
                long last = j + static_cast<long>(m) - 1;
                if (last >= n) continue;
                Window win;
                for (long i = first; i <= last; ++i) {
                    win.push_back(i < 0 ? lcabs::kDiamond : run.labels[static_cast<std::size_t>(i)]);
                }
                out[run.states[static_cast<std::size_t>(j)]].insert(std::move(win));
            }
            if (k == depth) continue;
            for (const auto& t : q.outgoing(run.states.back())) {
                Run longer = run;
                longer.states.push_back(t.to);
                longer.labels.push_back(w.project(t));
                next.push_back(std::move(longer));
            }
        }
        if (k < depth) runs = std::move(next);
    }
    return out;
}

/// Whether the pair set `rel` (bit i*|X2|+j means (i,j)) satisfies the step
/// condition of a simulation from q1 to q2 under `mode`.
inline bool step_closed(const StateMachine& q1, const StateMachine& q2, ExternalMode mode,
                        std::uint32_t rel) {
    ExternalAlphabet w1(q1, mode), w2(q2, mode);
    const auto n2 = q2.num_states();
    auto related = [&](StateId a, StateId b) { return (rel >> (a * n2 + b)) & 1U; };
    for (StateId a = 0; a < q1.num_states(); ++a) {
        for (StateId b = 0; b < n2; ++b) {
            if (!related(a, b)) continue;
            for (const auto& t : q1.outgoing(a)) {
                auto token = w1.token(w1.project(t));
                bool matched = false;
                for (const auto& s : q2.outgoing(b)) {
                    if (w2.token(w2.project(s)) == token && related(t.to, s.to)) matched = true;
                }
                if (!matched) return false;
            }
        }
    }
    return true;
}

/// The union of all step-closed relations, found by trying every subset of
/// X1 x X2. Only sensible for |X1| * |X2| <= 16 or so.
inline std::set<std::pair<StateId, StateId>> largest_simulation(const StateMachine& q1,
                                                                const StateMachine& q2,
                                                                ExternalMode mode) {
    const auto n1 = q1.num_states(), n2 = q2.num_states();
    const std::uint32_t total = 1U << (n1 * n2);
    std::uint32_t acc = 0;
    for (std::uint32_t rel = 0; rel < total; ++rel) {
        if (step_closed(q1, q2, mode, rel)) acc |= rel;
    }
    std::set<std::pair<StateId, StateId>> out;
    for (StateId a = 0; a < n1; ++a) {
        for (StateId b = 0; b < n2; ++b) {
            if ((acc >> (a * n2 + b)) & 1U) out.insert({a, b});
        }
    }
    return out;
}

}  // namespace oracle
