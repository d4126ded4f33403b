#include "lcabs/qba.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace lcabs {

namespace {

// T^{-1}(Z) as a membership mask.
std::vector<bool> predecessors(const StateMachine& q, const std::vector<StateId>& cell) {
    std::vector<bool> in_cell(q.num_states(), false);
    for (StateId x : cell) in_cell[x] = true;
    std::vector<bool> pre(q.num_states(), false);
    for (const auto& t : q.transitions()) {
        if (in_cell[t.to]) pre[t.from] = true;
    }
    return pre;
}

void check_partition(const StateMachine& q, const Partition& p) {
    canonical_partition(p.cells, q.num_states(), p.level);
}

Partition group_by(const StateMachine& q, const auto& key_of, std::size_t level) {
    std::map<std::decay_t<decltype(key_of(StateId{}))>, std::vector<StateId>> groups;
    for (StateId x = 0; x < q.num_states(); ++x) groups[key_of(x)].push_back(x);
    std::vector<std::vector<StateId>> cells;
    for (auto& [key, cell] : groups) cells.push_back(std::move(cell));
    return canonical_partition(std::move(cells), q.num_states(), level);
}

}  // namespace

Partition canonical_partition(std::vector<std::vector<StateId>> cells, std::size_t num_states,
                              std::size_t level) {
    std::vector<bool> covered(num_states, false);
    for (auto& cell : cells) {
        if (cell.empty()) throw Error(ErrorKind::InvalidPartition, "empty cell");
        std::sort(cell.begin(), cell.end());
        for (StateId x : cell) {
            if (x >= num_states) throw Error(ErrorKind::InvalidPartition, "unknown state in cell");
            if (covered[x]) throw Error(ErrorKind::InvalidPartition, "cells overlap");
            covered[x] = true;
        }
    }
    if (std::find(covered.begin(), covered.end(), false) != covered.end()) {
        throw Error(ErrorKind::InvalidPartition, "cells do not cover the state set");
    }
    std::sort(cells.begin(), cells.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return Partition{std::move(cells), level};
}

std::string serialize(const Partition& p, const StateMachine& q) {
    std::string out;
    for (const auto& cell : p.cells) {
        out += '{';
        for (std::size_t i = 0; i < cell.size(); ++i) {
            if (i) out += ',';
            out += q.state_name(cell[i]);
        }
        out += "}\n";
    }
    return out;
}

Partition initial_partition(const StateMachine& q) {
    require_accepted(q);
    return group_by(q, [&](StateId x) { return admissible_outputs(q, x); }, 1);
}

Partition refine(const StateMachine& q, const Partition& p) {
    require_accepted(q);
    check_partition(q, p);
    std::vector<std::vector<StateId>> current = p.cells;
    // Splitters come from the old partition; the composition order does not matter.
    for (const auto& splitter : p.cells) {
        auto pre = predecessors(q, splitter);
        std::vector<std::vector<StateId>> next;
        for (const auto& cell : current) {
            std::vector<StateId> inside;
            std::vector<StateId> outside;
            for (StateId x : cell) (pre[x] ? inside : outside).push_back(x);
            if (!inside.empty()) next.push_back(std::move(inside));
            if (!outside.empty()) next.push_back(std::move(outside));
        }
        current = std::move(next);
    }
    return canonical_partition(std::move(current), q.num_states(), p.level + 1);
}

FixedPointVerdict is_fixed_point(const StateMachine& q, const Partition& p) {
    require_accepted(q);
    check_partition(q, p);
    for (std::size_t ci = 0; ci < p.cells.size(); ++ci) {
        for (std::size_t ti = 0; ti < p.cells.size(); ++ti) {
            auto pre = predecessors(q, p.cells[ti]);
            const auto& cell = p.cells[ci];
            bool any = std::any_of(cell.begin(), cell.end(), [&](StateId x) { return pre[x]; });
            if (!any) continue;
            for (StateId x : cell) {
                if (!pre[x]) return {false, ci, ti, x};
            }
        }
    }
    return {};
}

RefinementResult refinement_fixpoint(const StateMachine& q, std::optional<std::size_t> max_steps) {
    std::size_t budget = max_steps.value_or(std::max<std::size_t>(q.num_states(), 1));
    if (budget < 1) throw Error(ErrorKind::InvalidSpec, "max_steps must be at least 1");
    RefinementResult r{initial_partition(q), 1, false};
    while (true) {
        if (is_fixed_point(q, r.partition).holds) {
            r.reached = true;
            return r;
        }
        if (r.steps >= budget) return r;
        r.partition = refine(q, r.partition);
        ++r.steps;
    }
}

Partition partition_at_level(const StateMachine& q, std::size_t l) {
    if (l < 1) throw Error(ErrorKind::InvalidSpec, "l must be at least 1");
    Partition p = initial_partition(q);
    while (p.level < l) p = refine(q, p);
    return p;
}

Partition future_fiber_partition(const StateMachine& q, std::size_t l) {
    ExternalAlphabet w(q, ExternalMode::OutputsOnly);
    auto fibers = external_strings_all(q, w, IntervalSpec::make(l, l));
    return group_by(q, [&](StateId x) { return fibers[x]; }, l);
}

AbstractMachine build_quotient_machine(const StateMachine& q, std::size_t l) {
    ExternalAlphabet w(q, ExternalMode::OutputsOnly);
    auto fibers = external_strings_all(q, w, IntervalSpec::make(l, l));

    std::map<std::vector<Window>, StateId> index;
    for (const auto& f : fibers) index.emplace(std::vector<Window>(f.begin(), f.end()), 0);
    std::vector<std::vector<Window>> labels;
    for (auto& [label, id] : index) {
        id = static_cast<StateId>(labels.size());
        labels.push_back(label);
    }
    auto id_of = [&](StateId x) {
        return index.at(std::vector<Window>(fibers[x].begin(), fibers[x].end()));
    };

    std::vector<StateId> initial;
    for (StateId x0 : q.initial()) initial.push_back(id_of(x0));
    std::sort(initial.begin(), initial.end());
    initial.erase(std::unique(initial.begin(), initial.end()), initial.end());

    std::set<Transition> delta;
    for (const auto& t : q.transitions()) {
        delta.insert({id_of(t.from), t.input, t.output, id_of(t.to)});
    }

    std::vector<std::string> names;
    for (const auto& label : labels) names.push_back(render_cell(label, w));
    AbstractMachine a;
    a.machine = StateMachine(std::move(names), q.inputs(), q.outputs(), std::move(initial),
                             {delta.begin(), delta.end()});
    a.labels = std::move(labels);
    a.kind = AbstractionKind::Quotient;
    a.provenance = {q.digest(), ExternalMode::OutputsOnly, l, l};
    return a;
}

DominoConsistencyVerdict is_domino_consistent(const StateMachine& q, std::size_t l) {
    ExternalAlphabet w(q, ExternalMode::OutputsOnly);
    auto spec = IntervalSpec::make(l, l);
    auto fibers = external_strings_all(q, w, spec);
    auto extended = external_strings_all(q, w, spec, true);
    std::set<WindowSet> cells(fibers.begin(), fibers.end());
    for (const auto& z : dominoes(q, w, l + 1).windows) {
        Window head = slice(z, 0, l);
        for (const auto& cell : cells) {
            if (!cell.count(head)) continue;
            bool realized = false;
            for (StateId x = 0; x < q.num_states() && !realized; ++x) {
                realized = fibers[x] == cell && extended[x].count(z) != 0;
            }
            if (!realized) return {false, z, std::vector<Window>(cell.begin(), cell.end())};
        }
    }
    return {};
}

}  // namespace lcabs
