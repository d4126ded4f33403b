#include "lcabs/salca.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace lcabs {

const char* to_string(AbstractionKind kind) {
    switch (kind) {
        case AbstractionKind::Concrete: return "concrete";
        case AbstractionKind::Salca: return "salca";
        case AbstractionKind::Standard: return "standard";
        case AbstractionKind::Quotient: return "qba";
    }
    return "unknown";
}

std::optional<StateId> AbstractMachine::find(const std::vector<Window>& label) const {
    // Every builder emits labels in sorted order.
    auto it = std::lower_bound(labels.begin(), labels.end(), label);
    if (it == labels.end() || *it != label) return std::nullopt;
    return static_cast<StateId>(it - labels.begin());
}

AbstractMachine wrap_concrete(const StateMachine& q, ExternalMode mode) {
    AbstractMachine a;
    a.machine = q;
    a.kind = AbstractionKind::Concrete;
    a.provenance = {q.digest(), mode, 0, 0};
    return a;
}

namespace {

// Assembles an abstract machine from labelled states and transitions over
// label indices, keeping only the part reachable from the initial labels.
AbstractMachine assemble(const StateMachine& source, std::vector<std::vector<Window>> labels,
                         const std::vector<StateId>& initial,
                         const std::vector<Transition>& transitions, AbstractionKind kind,
                         Provenance provenance) {
    const std::size_t n = labels.size();
    std::vector<std::vector<StateId>> succ(n);
    for (const auto& t : transitions) succ[t.from].push_back(t.to);
    std::vector<bool> reached(n, false);
    std::deque<StateId> work;
    for (StateId x : initial) {
        if (!reached[x]) {
            reached[x] = true;
            work.push_back(x);
        }
    }
    while (!work.empty()) {
        StateId x = work.front();
        work.pop_front();
        for (StateId y : succ[x]) {
            if (!reached[y]) {
                reached[y] = true;
                work.push_back(y);
            }
        }
    }

    std::vector<StateId> remap(n, 0);
    std::vector<std::vector<Window>> kept;
    std::vector<std::string> names;
    ExternalAlphabet alphabet(source, provenance.mode);
    for (StateId x = 0; x < n; ++x) {
        if (!reached[x]) continue;
        remap[x] = static_cast<StateId>(kept.size());
        names.push_back(render_cell(labels[x], alphabet));
        kept.push_back(std::move(labels[x]));
    }
    std::vector<StateId> init;
    for (StateId x : initial) init.push_back(remap[x]);
    std::vector<Transition> delta;
    for (const auto& t : transitions) {
        if (reached[t.from] && reached[t.to]) {
            delta.push_back({remap[t.from], t.input, t.output, remap[t.to]});
        }
    }

    AbstractMachine a;
    a.machine = StateMachine(std::move(names), source.inputs(), source.outputs(), std::move(init),
                             std::move(delta));
    a.labels = std::move(kept);
    a.kind = kind;
    a.provenance = std::move(provenance);
    return a;
}

bool has_prefix(const Window& w, const Window& prefix) {
    return w.size() >= prefix.size() && std::equal(prefix.begin(), prefix.end(), w.begin());
}

}  // namespace

bool windows_overlap(const Window& from, Symbol sym, const Window& to, IntervalSpec spec) {
    const std::size_t l = spec.l;
    const std::size_t a = spec.past();
    if (from.size() != l || to.size() != l) return false;
    // to[0..a-1] = (from[0..a-1] . sym)[1..a]
    for (std::size_t i = 0; i < a; ++i) {
        Symbol expect = i + 1 < a ? from[i + 1] : sym;
        if (to[i] != expect) return false;
    }
    // from[a..l-1] = (sym . to[a..l-2])[0..m-1]
    for (std::size_t j = 0; j < spec.m; ++j) {
        Symbol expect = j == 0 ? sym : to[a + j - 1];
        if (from[a + j] != expect) return false;
    }
    return true;
}

AbstractMachine build_abstract_machine(const StateMachine& q, const ExternalAlphabet& w,
                                       IntervalSpec spec) {
    spec = IntervalSpec::make(spec.l, spec.m);
    auto strings = external_strings_all(q, w, spec);

    WindowSet all;
    for (const auto& s : strings) all.insert(s.begin(), s.end());
    std::map<Window, StateId> index;
    std::vector<std::vector<Window>> labels;
    for (const auto& win : all) {
        index.emplace(win, static_cast<StateId>(labels.size()));
        labels.push_back({win});
    }

    // Initial windows are those seen at time zero: diamond padding followed
    // by an m-step future of an initial state.
    auto futures = future_windows(q, w, spec.m);
    std::set<StateId> initial;
    for (StateId x0 : q.initial()) {
        for (const auto& f : futures[x0]) initial.insert(index.at(concat(diamonds(spec.past()), f)));
    }

    std::set<Transition> delta;
    for (const auto& t : q.transitions()) {
        Symbol sym = w.project(t);
        for (const auto& from : strings[t.from]) {
            // Any successor window must start with from[1..l-1]; scan only those.
            Window shifted = slice(from, 1, spec.l - 1);
            const auto& targets = strings[t.to];
            for (auto it = targets.lower_bound(shifted);
                 it != targets.end() && has_prefix(*it, shifted); ++it) {
                if (windows_overlap(from, sym, *it, spec)) {
                    delta.insert({index.at(from), t.input, t.output, index.at(*it)});
                }
            }
        }
    }

    return assemble(q, std::move(labels), {initial.begin(), initial.end()},
                    {delta.begin(), delta.end()}, AbstractionKind::Salca,
                    {q.digest(), w.mode(), spec.l, spec.m});
}

AbstractMachine build_standard_realization(const StateMachine& q, std::size_t l) {
    if (l < 1) throw Error(ErrorKind::InvalidSpec, "l must be at least 1");
    ExternalAlphabet w(q, ExternalMode::InputOutputPairs);
    auto states = dominoes(q, w, l).windows;
    states.insert(diamonds(l));
    auto extensions = dominoes(q, w, l + 1);

    std::map<Window, StateId> index;
    std::vector<std::vector<Window>> labels;
    for (const auto& win : states) {
        index.emplace(win, static_cast<StateId>(labels.size()));
        labels.push_back({win});
    }
    const auto ny = static_cast<Symbol>(q.num_outputs());
    std::vector<Transition> delta;
    for (const auto& z : extensions.windows) {
        Window from = slice(z, 0, l);
        Window to = slice(z, 1, l);
        auto fi = index.find(from);
        auto ti = index.find(to);
        if (fi == index.end() || ti == index.end()) continue;
        Symbol sym = z.back();
        delta.push_back({fi->second, static_cast<InputId>(sym / ny),
                         static_cast<OutputId>(sym % ny), ti->second});
    }
    return assemble(q, std::move(labels), {index.at(diamonds(l))}, delta,
                    AbstractionKind::Standard,
                    {q.digest(), ExternalMode::InputOutputPairs, l, 0});
}

FutureUniqueVerdict is_future_unique(const StateMachine& q, const ExternalAlphabet& w,
                                     IntervalSpec spec) {
    spec = IntervalSpec::make(spec.l, spec.m);
    auto past = past_windows(q, w, spec.past());
    auto fut = future_windows(q, w, spec.m);
    for (StateId x = 0; x < q.num_states(); ++x) {
        if (fut[x].size() > 1 && !past[x].empty()) {
            const auto& p = *past[x].begin();
            auto it = fut[x].begin();
            Window first = concat(p, *it);
            Window second = concat(p, *std::next(it));
            return {false, x, std::move(first), std::move(second)};
        }
    }
    return {};
}

SbalcVerdict is_sbalc(const StateMachine& q, const ExternalAlphabet& w, IntervalSpec spec) {
    spec = IntervalSpec::make(spec.l, spec.m);
    auto plain = external_strings_all(q, w, spec, false);
    auto extended = external_strings_all(q, w, spec, true);
    auto doms = dominoes(q, w, spec.l + 1);
    for (StateId x = 0; x < q.num_states(); ++x) {
        for (const auto& z : doms.windows) {
            if (plain[x].count(slice(z, 0, spec.l)) && !extended[x].count(z)) {
                return {false, x, z};
            }
        }
    }
    return {};
}

bool is_async_l_complete(const StateMachine& q, const ExternalAlphabet& w, std::size_t l) {
    auto approx = build_abstract_machine(q, w, IntervalSpec::make(l, 0));
    return behavior_equal(q, approx.machine, w.mode());
}

bool joint_fu_sbalc(const StateMachine& q, const ExternalAlphabet& w, IntervalSpec spec) {
    spec = IntervalSpec::make(spec.l, spec.m);
    if (spec.m >= spec.l) throw Error(ErrorKind::InvalidSpec, "the joint predicate needs m < l");
    require_accepted(q);
    auto doms = dominoes(q, w, spec.l + 1);
    // Sorted order puts dominoes with equal l-prefixes next to each other.
    const Window* prev = nullptr;
    for (const auto& z : doms.windows) {
        if (prev && std::equal(z.begin(), z.end() - 1, prev->begin())) return false;
        prev = &z;
    }
    return true;
}

std::set<ProjectedTriple> projected_transitions(const AbstractMachine& a) {
    auto alphabet = a.alphabet();
    std::set<ProjectedTriple> out;
    for (const auto& t : a.machine.transitions()) {
        out.emplace(a.labels.at(t.from).front(), alphabet.project(t), a.labels.at(t.to).front());
    }
    return out;
}

std::set<ProjectedTriple> domino_transitions(const StateMachine& q, const ExternalAlphabet& w,
                                             IntervalSpec spec, const WindowSet& states) {
    spec = IntervalSpec::make(spec.l, spec.m);
    std::set<ProjectedTriple> out;
    for (const auto& z : dominoes(q, w, spec.l + 1).windows) {
        Window from = slice(z, 0, spec.l);
        Window to = slice(z, 1, spec.l);
        if (states.count(from) && states.count(to)) {
            out.emplace(std::move(from), z[spec.past()], std::move(to));
        }
    }
    return out;
}

}  // namespace lcabs
