#include "lcabs/behavior.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

namespace lcabs {

namespace {

// succ[x][w] = states reached from x by a transition projecting to w.
using SuccessorTable = std::vector<std::vector<std::vector<StateId>>>;

SuccessorTable successor_table(const StateMachine& q, const ExternalAlphabet& w) {
    SuccessorTable table(q.num_states(), std::vector<std::vector<StateId>>(w.size()));
    for (const auto& t : q.transitions()) {
        auto& row = table[t.from][static_cast<std::size_t>(w.project(t))];
        if (row.empty() || row.back() != t.to) row.push_back(t.to);
    }
    for (auto& per_state : table) {
        for (auto& row : per_state) {
            std::sort(row.begin(), row.end());
            row.erase(std::unique(row.begin(), row.end()), row.end());
        }
    }
    return table;
}

std::vector<StateId> step_subset(const SuccessorTable& table, const std::vector<StateId>& from,
                                 Symbol w) {
    std::vector<StateId> out;
    for (StateId x : from) {
        const auto& row = table[x][static_cast<std::size_t>(w)];
        out.insert(out.end(), row.begin(), row.end());
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Window shift_in(const Window& history, Symbol w) {
    if (history.empty()) return history;
    Window next(history.begin() + 1, history.end());
    next.push_back(w);
    return next;
}

}  // namespace

std::vector<WindowSet> past_windows(const StateMachine& q, const ExternalAlphabet& w,
                                    std::size_t k) {
    require_accepted(q);
    std::vector<WindowSet> past(q.num_states());
    std::deque<std::pair<StateId, Window>> work;
    for (StateId x0 : q.initial()) {
        if (past[x0].insert(diamonds(k)).second) work.emplace_back(x0, diamonds(k));
    }
    while (!work.empty()) {
        auto [x, history] = std::move(work.front());
        work.pop_front();
        for (const auto& t : q.outgoing(x)) {
            Window next = shift_in(history, w.project(t));
            if (past[t.to].insert(next).second) work.emplace_back(t.to, std::move(next));
        }
    }
    return past;
}

std::vector<WindowSet> future_windows(const StateMachine& q, const ExternalAlphabet& w,
                                      std::size_t k) {
    require_accepted(q);
    std::vector<WindowSet> fut(q.num_states(), WindowSet{Window{}});
    for (std::size_t step = 0; step < k; ++step) {
        std::vector<WindowSet> next(q.num_states());
        for (StateId x = 0; x < q.num_states(); ++x) {
            for (const auto& t : q.outgoing(x)) {
                Symbol s = w.project(t);
                for (const auto& tail : fut[t.to]) {
                    Window win;
                    win.reserve(tail.size() + 1);
                    win.push_back(s);
                    win.insert(win.end(), tail.begin(), tail.end());
                    next[x].insert(std::move(win));
                }
            }
        }
        fut = std::move(next);
    }
    return fut;
}

DominoSet dominoes(const StateMachine& q, const ExternalAlphabet& w, std::size_t n) {
    if (n < 1) throw Error(ErrorKind::InvalidSpec, "domino length must be at least 1");
    auto past = past_windows(q, w, n - 1);
    DominoSet out{n, {}};
    for (StateId x = 0; x < q.num_states(); ++x) {
        for (const auto& t : q.outgoing(x)) {
            Symbol s = w.project(t);
            for (const auto& h : past[x]) {
                Window win = h;
                win.push_back(s);
                out.windows.insert(std::move(win));
            }
        }
    }
    return out;
}

std::vector<WindowSet> external_strings_all(const StateMachine& q, const ExternalAlphabet& w,
                                            IntervalSpec spec, bool extended) {
    spec = IntervalSpec::make(spec.l, spec.m);
    auto past = past_windows(q, w, spec.past());
    auto fut = future_windows(q, w, spec.m + (extended ? 1 : 0));
    std::vector<WindowSet> out(q.num_states());
    for (StateId x = 0; x < q.num_states(); ++x) {
        for (const auto& p : past[x]) {
            for (const auto& f : fut[x]) out[x].insert(concat(p, f));
        }
    }
    return out;
}

WindowSet external_strings(const StateMachine& q, const ExternalAlphabet& w, StateId x,
                           IntervalSpec spec, bool extended) {
    q.check_state(x);
    return external_strings_all(q, w, spec, extended)[x];
}

// -- prefix automaton -------------------------------------------------------

PrefixAutomaton PrefixAutomaton::build(const StateMachine& q, ExternalMode mode) {
    require_live_reachable(q);
    ExternalAlphabet w(q, mode);
    auto table = successor_table(q, w);

    PrefixAutomaton a;
    a.alphabet_size_ = w.size();
    std::map<std::vector<StateId>, std::uint32_t> index;
    auto intern = [&](std::vector<StateId> subset) {
        auto [it, fresh] = index.emplace(subset, static_cast<std::uint32_t>(a.subsets_.size()));
        if (fresh) a.subsets_.push_back(std::move(subset));
        return it->second;
    };
    intern(q.initial());
    a.sink_ = intern({});
    for (std::uint32_t s = 0; s < a.subsets_.size(); ++s) {
        for (std::size_t sym = 0; sym < a.alphabet_size_; ++sym) {
            auto next = step_subset(table, a.subsets_[s], static_cast<Symbol>(sym));
            std::uint32_t target = intern(std::move(next));
            a.delta_.push_back(target);
        }
    }
    return a;
}

std::uint32_t PrefixAutomaton::step(std::uint32_t s, Symbol w) const {
    if (w < 0 || static_cast<std::size_t>(w) >= alphabet_size_ || s >= subsets_.size()) {
        throw Error(ErrorKind::InvalidWindow, "symbol or state outside the automaton");
    }
    return delta_[s * alphabet_size_ + static_cast<std::size_t>(w)];
}

bool PrefixAutomaton::accepts(const std::vector<Symbol>& word) const {
    std::uint32_t s = initial();
    for (Symbol w : word) s = step(s, w);
    return is_accepting(s);
}

std::string PrefixAutomaton::to_dot(const ExternalAlphabet& alphabet,
                                    const StateMachine& q) const {
    std::ostringstream out;
    out << "digraph prefixes {\n  rankdir=LR;\n";
    for (std::uint32_t s = 0; s < subsets_.size(); ++s) {
        std::string label = "{";
        for (std::size_t i = 0; i < subsets_[s].size(); ++i) {
            if (i) label += ",";
            label += q.state_name(subsets_[s][i]);
        }
        label += "}";
        out << "  p" << s << " [label=\"" << label << "\""
            << (is_accepting(s) ? ", shape=doublecircle" : ", shape=circle") << "];\n";
    }
    for (std::uint32_t s = 0; s < subsets_.size(); ++s) {
        for (std::size_t sym = 0; sym < alphabet_size_; ++sym) {
            out << "  p" << s << " -> p" << delta_[s * alphabet_size_ + sym] << " [label=\""
                << alphabet.token(static_cast<Symbol>(sym)) << "\"];\n";
        }
    }
    out << "}\n";
    return out.str();
}

// -- inclusion --------------------------------------------------------------

InclusionVerdict behavior_included(const StateMachine& q1, const StateMachine& q2,
                                   ExternalMode mode) {
    require_live_reachable(q1);
    require_live_reachable(q2);
    SymbolBridge to_q2(q2, q1, mode);
    ExternalAlphabet w1(q1, mode);
    ExternalAlphabet w2(q2, mode);
    auto table = successor_table(q2, w2);

    struct Node {
        StateId left;
        std::vector<StateId> right;
        std::size_t parent;
        Symbol via;
    };
    std::vector<Node> nodes;
    std::map<std::pair<StateId, std::vector<StateId>>, std::size_t> seen;
    const auto none = static_cast<std::size_t>(-1);
    for (StateId x0 : q1.initial()) {
        if (seen.emplace(std::make_pair(x0, q2.initial()), nodes.size()).second) {
            nodes.push_back({x0, q2.initial(), none, kDiamond});
        }
    }
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        for (const auto& t : q1.outgoing(nodes[i].left)) {
            Symbol s1 = w1.project(t);
            auto next = step_subset(table, nodes[i].right, to_q2.to_left(s1));
            if (next.empty()) {
                InclusionVerdict v{false, {s1}};
                for (std::size_t j = i; nodes[j].parent != none; j = nodes[j].parent) {
                    v.counterexample.push_back(nodes[j].via);
                }
                std::reverse(v.counterexample.begin(), v.counterexample.end());
                return v;
            }
            auto key = std::make_pair(t.to, next);
            if (seen.emplace(key, nodes.size()).second) {
                nodes.push_back({t.to, std::move(next), i, s1});
            }
        }
    }
    return {};
}

bool behavior_equal(const StateMachine& q1, const StateMachine& q2, ExternalMode mode) {
    return behavior_included(q1, q2, mode).included && behavior_included(q2, q1, mode).included;
}

bool saturation_check(const StateMachine& q, const ExternalAlphabet& w, std::size_t l) {
    if (l < 1) throw Error(ErrorKind::InvalidSpec, "l must be at least 1");
    auto shorter = dominoes(q, w, l + 1);
    auto longer = dominoes(q, w, l + 2);
    auto lefts = shorter.windows;
    lefts.insert(diamonds(l + 1));
    for (const auto& a : lefts) {
        Window overlap = slice(a, 1, l);
        // Dominoes sharing the overlap form a contiguous range in lexicographic order.
        for (auto it = shorter.windows.lower_bound(overlap); it != shorter.windows.end(); ++it) {
            if (!std::equal(overlap.begin(), overlap.end(), it->begin())) break;
            Window joined = a;
            joined.push_back(it->back());
            if (!longer.contains(joined)) return false;
        }
    }
    return true;
}

}  // namespace lcabs
