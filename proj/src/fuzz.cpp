#include "lcabs/fuzz.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

#include "lcabs/behavior.hpp"
#include "lcabs/io.hpp"
#include "lcabs/qba.hpp"
#include "lcabs/relations.hpp"
#include "lcabs/salca.hpp"

namespace lcabs {

void FuzzConfig::check() const {
    if (max_states < 1 || max_states > 8) {
        throw Error(ErrorKind::InvalidSpec, "max_states must lie in [1, 8]");
    }
    if (max_inputs < 1 || max_inputs > 4 || max_outputs < 1 || max_outputs > 4) {
        throw Error(ErrorKind::InvalidSpec, "max_inputs and max_outputs must lie in [1, 4]");
    }
    if (max_l < 1) throw Error(ErrorKind::InvalidSpec, "max_l must be at least 1");
}

namespace {

std::vector<std::string> numbered(const char* prefix, std::size_t n) {
    std::vector<std::string> out;
    for (std::size_t i = 1; i <= n; ++i) out.push_back(prefix + std::to_string(i));
    return out;
}

std::size_t uniform(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

// Non-empty random subset of {0..n-1}, each element kept with probability p.
std::vector<std::uint32_t> random_subset(std::mt19937_64& rng, std::size_t n, double p) {
    std::bernoulli_distribution keep(p);
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = 0; i < n; ++i) {
        if (keep(rng)) out.push_back(i);
    }
    if (out.empty()) out.push_back(static_cast<std::uint32_t>(uniform(rng, 0, n - 1)));
    return out;
}

bool reachable(const StateMachine& q) {
    auto report = validate(q);
    return report.reachable && report.live;
}

}  // namespace

StateMachine random_machine(std::mt19937_64& rng, const FuzzConfig& config) {
    config.check();
    for (;;) {
        std::size_t n = uniform(rng, 1, config.max_states);
        std::size_t nu = uniform(rng, 1, config.max_inputs);
        std::size_t ny = uniform(rng, 1, config.max_outputs);
        std::vector<Transition> delta;
        for (StateId x = 0; x < n; ++x) {
            auto outputs = random_subset(rng, ny, 0.4);
            auto enabled = random_subset(rng, nu, 0.6);
            for (InputId u : enabled) {
                for (StateId to : random_subset(rng, n, 1.5 / static_cast<double>(n))) {
                    for (OutputId y : outputs) delta.push_back({x, u, y, to});
                }
            }
        }
        std::vector<StateId> initial;
        for (StateId x : random_subset(rng, n, 0.25)) initial.push_back(x);
        StateMachine q(numbered("x", n), numbered("u", nu), numbered("y", ny), std::move(initial),
                       std::move(delta));
        if (reachable(q)) return q;
    }
}

std::vector<StateMachine> generate_machines(const FuzzConfig& config) {
    config.check();
    std::mt19937_64 rng(config.seed);
    std::vector<StateMachine> out;
    out.reserve(config.count);
    for (std::size_t i = 0; i < config.count; ++i) out.push_back(random_machine(rng, config));
    return out;
}

// -- laws -------------------------------------------------------------------

namespace {

using Finding = std::optional<std::string>;

constexpr ExternalMode kModes[] = {ExternalMode::OutputsOnly, ExternalMode::InputOutputPairs};

std::string where(ExternalMode mode, std::size_t l, std::size_t m) {
    std::ostringstream s;
    s << "W=" << to_string(mode) << " l=" << l << " m=" << m;
    return s.str();
}

std::string verdict(bool b) { return b ? "true" : "false"; }

// "side a is <a> but side b is <b>" when an equivalence breaks.
Finding iff(bool lhs, bool rhs, const std::string& context, const char* lhs_name,
            const char* rhs_name) {
    if (lhs == rhs) return std::nullopt;
    return context + ": " + lhs_name + "=" + verdict(lhs) + " but " + rhs_name + "=" +
           verdict(rhs);
}

bool simulates(const CanonicalRelation& c, ExternalMode mode) {
    return verify_simulation(c.left.machine, c.right.machine, mode, c.relation).holds;
}

bool inverse_simulates(const CanonicalRelation& c, ExternalMode mode) {
    return verify_simulation(c.right.machine, c.left.machine, mode, inverse(c.relation)).holds;
}

Finding realization(const StateMachine& q, std::size_t max_l) {
    for (auto mode : kModes) {
        ExternalAlphabet w(q, mode);
        for (std::size_t l = 1; l <= max_l; ++l) {
            auto base = build_abstract_machine(q, w, IntervalSpec::make(l, 0));
            for (std::size_t m = 1; m <= l; ++m) {
                auto a = build_abstract_machine(q, w, IntervalSpec::make(l, m));
                if (!behavior_equal(a.machine, base.machine, mode)) {
                    return where(mode, l, m) + ": behavior differs from the m=0 machine";
                }
            }
        }
    }
    return std::nullopt;
}

Finding standard_realization(const StateMachine& q, std::size_t max_l) {
    ExternalAlphabet w(q, ExternalMode::InputOutputPairs);
    for (std::size_t l = 1; l <= max_l; ++l) {
        auto standard = build_standard_realization(q, l);
        auto built = build_abstract_machine(q, w, IntervalSpec::make(l, 0));
        if (standard.labels != built.labels) return "l=" + std::to_string(l) + ": state sets differ";
        if (!(standard.machine == built.machine)) {
            return "l=" + std::to_string(l) + ": transitions or initial states differ";
        }
    }
    return std::nullopt;
}

Finding state_to_abstract_forward(const StateMachine& q, std::size_t max_l) {
    for (auto mode : kModes) {
        ExternalAlphabet w(q, mode);
        for (std::size_t l = 1; l <= max_l; ++l) {
            for (std::size_t m = 0; m <= l; ++m) {
                auto c = canonical_relation(RelationKind::StateToAbstract, q, mode, l, m);
                bool sim = simulates(c, ExternalMode::InputOutputPairs);
                bool fu = is_future_unique(q, w, IntervalSpec::make(l, m)).holds;
                if (auto f = iff(sim, fu, where(mode, l, m), "simulation", "future_unique")) return f;
            }
        }
    }
    return std::nullopt;
}

Finding state_to_abstract_inverse(const StateMachine& q, std::size_t max_l) {
    for (auto mode : kModes) {
        ExternalAlphabet w(q, mode);
        for (std::size_t l = 1; l <= max_l; ++l) {
            for (std::size_t m = 0; m <= l; ++m) {
                auto c = canonical_relation(RelationKind::StateToAbstract, q, mode, l, m);
                bool sim = inverse_simulates(c, mode);
                bool sb = is_sbalc(q, w, IntervalSpec::make(l, m)).holds;
                if (auto f = iff(sim, sb, where(mode, l, m), "inverse simulation", "sbalc")) return f;
            }
        }
    }
    return std::nullopt;
}

// The l-step laws look one level beyond l, so they stop one short of max_l.
Finding lstep_forward(const StateMachine& q, std::size_t max_l) {
    for (auto mode : kModes) {
        for (std::size_t l = 1; l < max_l; ++l) {
            for (std::size_t m = 0; m <= l; ++m) {
                auto c = canonical_relation(RelationKind::LStep, q, mode, l, m);
                if (!simulates(c, mode)) return where(mode, l, m) + ": relation is not a simulation";
            }
        }
    }
    return std::nullopt;
}

Finding lstep_inverse(const StateMachine& q, std::size_t max_l) {
    for (auto mode : kModes) {
        ExternalAlphabet w(q, mode);
        for (std::size_t l = 1; l < max_l; ++l) {
            bool saturated = saturation_check(q, w, l);
            for (std::size_t m = 0; m <= l; ++m) {
                auto c = canonical_relation(RelationKind::LStep, q, mode, l, m);
                bool sim = inverse_simulates(c, mode);
                if (auto f = iff(sim, saturated, where(mode, l, m), "inverse simulation",
                                 "saturation")) {
                    return f;
                }
            }
        }
    }
    return std::nullopt;
}

Finding mstep_forward(const StateMachine& q, std::size_t max_l) {
    for (auto mode : kModes) {
        for (std::size_t l = 1; l <= max_l; ++l) {
            for (std::size_t m = 0; m < l; ++m) {
                auto c = canonical_relation(RelationKind::MStep, q, mode, l, m);
                if (!simulates(c, mode)) return where(mode, l, m) + ": relation is not a simulation";
            }
        }
    }
    return std::nullopt;
}

Finding mstep_inverse(const StateMachine& q, std::size_t max_l) {
    for (auto mode : kModes) {
        ExternalAlphabet w(q, mode);
        for (std::size_t l = 1; l <= max_l; ++l) {
            for (std::size_t m = 0; m < l; ++m) {
                auto c = canonical_relation(RelationKind::MStep, q, mode, l, m);
                bool sim = inverse_simulates(c, mode);
                bool cond = is_future_unique(q, w, IntervalSpec::make(l, m + 1)).holds &&
                            is_sbalc(q, w, IntervalSpec::make(l, m)).holds;
                if (auto f = iff(sim, cond, where(mode, l, m), "inverse simulation",
                                 "future_unique(m+1) and sbalc(m)")) {
                    return f;
                }
            }
        }
    }
    return std::nullopt;
}

Finding quotient_forward(const StateMachine& q, std::size_t max_l) {
    for (std::size_t l = 1; l <= max_l; ++l) {
        auto c = canonical_relation(RelationKind::StateToQuotient, q, ExternalMode::OutputsOnly, l);
        if (!simulates(c, ExternalMode::InputOutputPairs)) {
            return "l=" + std::to_string(l) + ": relation is not a simulation";
        }
    }
    return std::nullopt;
}

Finding quotient_inverse(const StateMachine& q, std::size_t max_l) {
    for (std::size_t l = 1; l <= max_l; ++l) {
        auto c = canonical_relation(RelationKind::StateToQuotient, q, ExternalMode::OutputsOnly, l);
        bool sim = inverse_simulates(c, ExternalMode::OutputsOnly);
        bool fixed = is_fixed_point(q, partition_at_level(q, l)).holds;
        if (auto f = iff(sim, fixed, "l=" + std::to_string(l), "inverse simulation", "fixed_point")) {
            return f;
        }
    }
    return std::nullopt;
}

Finding quotient_inclusion(const StateMachine& q, std::size_t max_l) {
    ExternalAlphabet w(q, ExternalMode::OutputsOnly);
    for (std::size_t l = 1; l <= max_l; ++l) {
        auto quotient = build_quotient_machine(q, l);
        auto salca = build_abstract_machine(q, w, IntervalSpec::make(l, 0));
        if (!behavior_included(quotient.machine, salca.machine, ExternalMode::OutputsOnly).included) {
            return "l=" + std::to_string(l) + ": quotient behavior not included";
        }
    }
    return std::nullopt;
}

Finding salca_quotient_forward(const StateMachine& q, std::size_t max_l) {
    for (std::size_t l = 1; l <= max_l; ++l) {
        auto c = canonical_relation(RelationKind::SalcaToQuotient, q, ExternalMode::OutputsOnly, l, l);
        bool sim = simulates(c, ExternalMode::OutputsOnly);
        bool dc = is_domino_consistent(q, l).holds;
        if (auto f = iff(sim, dc, "l=" + std::to_string(l), "simulation", "domino_consistent")) {
            return f;
        }
    }
    return std::nullopt;
}

Finding salca_quotient_inverse(const StateMachine& q, std::size_t max_l) {
    ExternalAlphabet w(q, ExternalMode::OutputsOnly);
    for (std::size_t l = 1; l <= max_l; ++l) {
        auto c = canonical_relation(RelationKind::SalcaToQuotient, q, ExternalMode::OutputsOnly, l, l);
        bool sim = inverse_simulates(c, ExternalMode::OutputsOnly);
        bool fu = is_future_unique(q, w, IntervalSpec::make(l, l)).holds;
        if (auto f = iff(sim, fu, "l=" + std::to_string(l), "inverse simulation", "future_unique")) {
            return f;
        }
    }
    return std::nullopt;
}

Finding unique_future_is_consistent(const StateMachine& q, std::size_t max_l) {
    ExternalAlphabet w(q, ExternalMode::OutputsOnly);
    for (std::size_t l = 1; l <= max_l; ++l) {
        if (is_future_unique(q, w, IntervalSpec::make(l, l)).holds &&
            !is_domino_consistent(q, l).holds) {
            return "l=" + std::to_string(l) + ": future unique but not domino consistent";
        }
    }
    return std::nullopt;
}

Finding domino_triples(const StateMachine& q, std::size_t max_l) {
    for (auto mode : kModes) {
        ExternalAlphabet w(q, mode);
        for (std::size_t l = 1; l <= max_l; ++l) {
            for (std::size_t m = 0; m <= l; ++m) {
                auto spec = IntervalSpec::make(l, m);
                auto a = build_abstract_machine(q, w, spec);
                WindowSet states;
                for (const auto& label : a.labels) states.insert(label.front());
                if (projected_transitions(a) != domino_transitions(q, w, spec, states)) {
                    return where(mode, l, m) + ": projected triples differ from domino triples";
                }
            }
        }
    }
    return std::nullopt;
}

Finding saturation_equivalence(const StateMachine& q, std::size_t max_l) {
    for (auto mode : kModes) {
        ExternalAlphabet w(q, mode);
        for (std::size_t l = 1; l < max_l; ++l) {
            auto shorter = build_abstract_machine(q, w, IntervalSpec::make(l, 0));
            auto longer = build_abstract_machine(q, w, IntervalSpec::make(l + 1, 0));
            bool equal = behavior_equal(shorter.machine, longer.machine, mode);
            if (auto f = iff(saturation_check(q, w, l), equal, where(mode, l, 0), "saturation",
                             "behavior_equal(l, l+1)")) {
                return f;
            }
        }
    }
    return std::nullopt;
}

Finding joint_predicate(const StateMachine& q, std::size_t max_l) {
    for (auto mode : kModes) {
        ExternalAlphabet w(q, mode);
        for (std::size_t l = 1; l <= max_l; ++l) {
            for (std::size_t m = 0; m < l; ++m) {
                bool joint = joint_fu_sbalc(q, w, IntervalSpec::make(l, m));
                bool cond = is_future_unique(q, w, IntervalSpec::make(l, m + 1)).holds &&
                            is_sbalc(q, w, IntervalSpec::make(l, m)).holds;
                if (auto f = iff(joint, cond, where(mode, l, m), "joint",
                                 "future_unique(m+1) and sbalc(m)")) {
                    return f;
                }
            }
        }
    }
    return std::nullopt;
}

Finding cells_are_fibers(const StateMachine& q, std::size_t max_l) {
    for (std::size_t l = 1; l <= max_l; ++l) {
        if (!partition_at_level(q, l).same_cells(future_fiber_partition(q, l))) {
            return "l=" + std::to_string(l) + ": refinement cells differ from future fibers";
        }
    }
    return std::nullopt;
}

Finding renaming_identities(const StateMachine& q, std::size_t max_l) {
    ExternalAlphabet w(q, ExternalMode::OutputsOnly);
    for (std::size_t l = 1; l <= max_l; ++l) {
        if (!is_future_unique(q, w, IntervalSpec::make(l, l)).holds) continue;
        auto renaming = canonical_relation(RelationKind::Renaming, q, ExternalMode::OutputsOnly, l, l);
        if (!verify_simulation(renaming.left.machine, renaming.right.machine,
                               ExternalMode::OutputsOnly, renaming.relation, true)
                 .holds) {
            return "l=" + std::to_string(l) + ": renaming is not a bisimulation";
        }
        auto to_abstract =
            canonical_relation(RelationKind::StateToAbstract, q, ExternalMode::OutputsOnly, l, l);
        auto to_quotient =
            canonical_relation(RelationKind::StateToQuotient, q, ExternalMode::OutputsOnly, l);
        if (!(compose(to_abstract.relation, renaming.relation) == to_quotient.relation)) {
            return "l=" + std::to_string(l) + ": composed relation differs from the quotient map";
        }
    }
    return std::nullopt;
}

Finding past_window_determinism(const StateMachine& q, std::size_t max_l) {
    for (auto mode : kModes) {
        ExternalAlphabet w(q, mode);
        for (std::size_t l = 1; l <= max_l; ++l) {
            auto a = build_abstract_machine(q, w, IntervalSpec::make(l, 0));
            auto wa = a.alphabet();
            std::set<std::pair<StateId, Symbol>> seen;
            std::set<std::tuple<StateId, Symbol, StateId>> moves;
            for (const auto& t : a.machine.transitions()) {
                moves.emplace(t.from, wa.project(t), t.to);
            }
            for (const auto& [from, sym, to] : moves) {
                if (!seen.emplace(from, sym).second) {
                    return where(mode, l, 0) + ": two successors for one external symbol";
                }
            }
        }
    }
    return std::nullopt;
}

Finding domino_monotone(const StateMachine& q, std::size_t max_l) {
    for (auto mode : kModes) {
        ExternalAlphabet w(q, mode);
        for (std::size_t n = 1; n <= max_l; ++n) {
            auto shorter = dominoes(q, w, n);
            auto longer = dominoes(q, w, n + 1);
            for (const auto& z : longer.windows) {
                // The all-diamond prefix of an initial domino is padding, not a domino.
                Window head = slice(z, 0, n);
                bool head_ok = shorter.contains(head) || head == diamonds(n);
                if (!head_ok || !shorter.contains(slice(z, 1, n))) {
                    return "W=" + std::string(to_string(mode)) + " n=" + std::to_string(n) +
                           ": restriction of " + render_window(z, w) + " missing";
                }
            }
        }
    }
    return std::nullopt;
}

}  // namespace

const std::vector<Law>& theorem_laws() {
    static const std::vector<Law> laws = {
        {"realization", realization},
        {"standard_realization", standard_realization},
        {"state_to_abstract_forward", state_to_abstract_forward},
        {"state_to_abstract_inverse", state_to_abstract_inverse},
        {"lstep_forward", lstep_forward},
        {"lstep_inverse", lstep_inverse},
        {"mstep_forward", mstep_forward},
        {"mstep_inverse", mstep_inverse},
        {"quotient_forward", quotient_forward},
        {"quotient_inverse", quotient_inverse},
        {"quotient_inclusion", quotient_inclusion},
        {"salca_quotient_forward", salca_quotient_forward},
        {"salca_quotient_inverse", salca_quotient_inverse},
        {"unique_future_is_consistent", unique_future_is_consistent},
        {"domino_triples", domino_triples},
        {"saturation_equivalence", saturation_equivalence},
        {"joint_predicate", joint_predicate},
        {"cells_are_fibers", cells_are_fibers},
        {"renaming_identities", renaming_identities},
        {"m0_determinism", past_window_determinism},
        {"domino_monotone", domino_monotone},
    };
    return laws;
}

// -- shrinking --------------------------------------------------------------

namespace {

Finding run_law(const Law& law, const StateMachine& q, std::size_t max_l) {
    try {
        return law.check(q, max_l);
    } catch (const std::exception& e) {
        return std::string("exception: ") + e.what();
    }
}

// Keeps the transitions accepted by `keep` and the listed initial states,
// then drops unreachable states and unused symbols. Returns nothing when the
// result is empty or no longer accepted.
template <typename Keep>
std::optional<StateMachine> restrict_machine(const StateMachine& q,
                                             const std::vector<StateId>& initial, Keep keep) {
    if (initial.empty()) return std::nullopt;
    std::vector<Transition> kept;
    for (const auto& t : q.transitions()) {
        if (keep(t)) kept.push_back(t);
    }
    std::vector<bool> reached(q.num_states(), false);
    std::vector<StateId> work(initial);
    for (StateId x : initial) reached[x] = true;
    while (!work.empty()) {
        StateId x = work.back();
        work.pop_back();
        for (const auto& t : kept) {
            if (t.from == x && !reached[t.to]) {
                reached[t.to] = true;
                work.push_back(t.to);
            }
        }
    }
    std::vector<bool> used_u(q.num_inputs(), false), used_y(q.num_outputs(), false);
    for (const auto& t : kept) {
        if (reached[t.from]) used_u[t.input] = used_y[t.output] = true;
    }
    auto remap = [](const std::vector<bool>& mask) {
        std::vector<std::uint32_t> id(mask.size(), 0);
        std::uint32_t next = 0;
        for (std::size_t i = 0; i < mask.size(); ++i) {
            if (mask[i]) id[i] = next++;
        }
        return id;
    };
    auto xs = remap(reached), us = remap(used_u), ys = remap(used_y);
    auto names = [](const std::vector<std::string>& all, const std::vector<bool>& mask) {
        std::vector<std::string> out;
        for (std::size_t i = 0; i < all.size(); ++i) {
            if (mask[i]) out.push_back(all[i]);
        }
        return out;
    };
    std::vector<Transition> delta;
    for (const auto& t : kept) {
        if (reached[t.from]) delta.push_back({xs[t.from], us[t.input], ys[t.output], xs[t.to]});
    }
    std::vector<StateId> init;
    for (StateId x : initial) init.push_back(xs[x]);
    StateMachine out(names(q.states(), reached), names(q.inputs(), used_u),
                     names(q.outputs(), used_y), std::move(init), std::move(delta));
    if (out.num_inputs() == 0 || !validate(out).accepted) return std::nullopt;
    return out;
}

std::vector<StateMachine> shrink_candidates(const StateMachine& q) {
    std::vector<StateMachine> out;
    auto push = [&](std::optional<StateMachine> c) {
        if (c) out.push_back(std::move(*c));
    };
    const auto& init = q.initial();
    for (StateId x = 0; x < q.num_states(); ++x) {
        std::vector<StateId> rest;
        for (StateId x0 : init) {
            if (x0 != x) rest.push_back(x0);
        }
        push(restrict_machine(q, rest,
                              [x](const Transition& t) { return t.from != x && t.to != x; }));
    }
    // Dropping one successor of F(x,u) or one output of H(x) keeps the
    // transition relation a product.
    std::set<std::tuple<StateId, InputId, StateId>> targets;
    std::set<std::pair<StateId, OutputId>> outputs;
    for (const auto& t : q.transitions()) {
        targets.emplace(t.from, t.input, t.to);
        outputs.emplace(t.from, t.output);
    }
    for (const auto& [x, u, to] : targets) {
        push(restrict_machine(q, init, [&](const Transition& t) {
            return !(t.from == x && t.input == u && t.to == to);
        }));
    }
    for (const auto& [x, y] : outputs) {
        push(restrict_machine(q, init,
                              [&](const Transition& t) { return !(t.from == x && t.output == y); }));
    }
    for (StateId x0 : init) {
        std::vector<StateId> rest;
        for (StateId other : init) {
            if (other != x0) rest.push_back(other);
        }
        push(restrict_machine(q, rest, [](const Transition&) { return true; }));
    }
    return out;
}

}  // namespace

StateMachine shrink(const StateMachine& q, const Law& law, std::size_t max_l) {
    StateMachine current = q;
    bool progress = true;
    while (progress) {
        progress = false;
        for (auto& candidate : shrink_candidates(current)) {
            if (run_law(law, candidate, max_l)) {
                current = std::move(candidate);
                progress = true;
                break;
            }
        }
    }
    return current;
}

// -- driver -----------------------------------------------------------------

bool FuzzSummary::all_passed() const {
    return std::all_of(laws.begin(), laws.end(),
                       [](const LawResult& r) { return r.passed == r.checked; });
}

FuzzSummary run_fuzz(const FuzzConfig& config, const std::vector<Law>* laws) {
    const auto& selected = laws ? *laws : theorem_laws();
    FuzzSummary summary;
    summary.machines = generate_machines(config);
    const std::size_t n = summary.machines.size();

    std::vector<std::vector<Finding>> findings(n);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < n; i = next++) {
            for (const auto& law : selected) {
                findings[i].push_back(run_law(law, summary.machines[i], config.max_l));
            }
        }
    };
    std::size_t threads = std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, 8);
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < std::min(threads, n); ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();

    for (std::size_t k = 0; k < selected.size(); ++k) {
        LawResult result{selected[k].name, n, 0, std::nullopt, {}};
        for (std::size_t i = 0; i < n; ++i) {
            if (!findings[i][k]) {
                ++result.passed;
            } else if (!result.counterexample) {
                auto small = shrink(summary.machines[i], selected[k], config.max_l);
                result.detail = run_law(selected[k], small, config.max_l).value_or(*findings[i][k]);
                result.counterexample = std::move(small);
            }
        }
        summary.laws.push_back(std::move(result));
    }
    return summary;
}

std::string render_summary(const FuzzSummary& summary) {
    std::ostringstream out;
    for (const auto& r : summary.laws) {
        out << r.name << ' ' << r.passed << '/' << r.checked << '\n';
        if (r.counterexample) {
            out << "  counterexample: " << r.detail << '\n';
            std::istringstream json(machine_to_json(*r.counterexample, ExternalMode::OutputsOnly));
            for (std::string line; std::getline(json, line);) out << "    " << line << '\n';
        }
    }
    return out.str();
}

}  // namespace lcabs
