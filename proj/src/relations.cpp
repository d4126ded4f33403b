#include "lcabs/relations.hpp"

#include <algorithm>
#include <map>

#include "lcabs/qba.hpp"

namespace lcabs {

namespace {

// succ[x][w]: successors of x in `q` under external symbol w of `q`.
std::vector<std::vector<std::vector<StateId>>> symbol_successors(const StateMachine& q,
                                                                 ExternalMode mode) {
    ExternalAlphabet w(q, mode);
    std::vector<std::vector<std::vector<StateId>>> succ(
        q.num_states(), std::vector<std::vector<StateId>>(w.size()));
    for (const auto& t : q.transitions()) {
        succ[t.from][static_cast<std::size_t>(w.project(t))].push_back(t.to);
    }
    return succ;
}

// Dense view of a relation for fast membership tests.
class PairMatrix {
  public:
    PairMatrix(std::size_t rows, std::size_t cols, bool value = false)
        : cols_(cols), bits_(rows * cols, value) {}
    bool get(StateId a, StateId b) const { return bits_[a * cols_ + b]; }
    void set(StateId a, StateId b, bool v) { bits_[a * cols_ + b] = v; }

  private:
    std::size_t cols_;
    std::vector<bool> bits_;
};

// One-directional step checker from `from` to `to`.
class StepChecker {
  public:
    StepChecker(const StateMachine& from, const StateMachine& to, ExternalMode mode)
        : from_(from),
          from_w_(from, mode),
          bridge_(to, from, mode),
          to_succ_(symbol_successors(to, mode)) {}

    // First transition of `a` that `b` cannot match inside `rel`, if any.
    std::optional<Transition> unmatched(StateId a, StateId b, const PairMatrix& rel) const {
        for (const auto& t : from_.outgoing(a)) {
            if (!matched(t, b, rel)) return t;
        }
        return std::nullopt;
    }

    bool matched(const Transition& t, StateId b, const PairMatrix& rel) const {
        Symbol sym = bridge_.to_left(from_w_.project(t));
        const auto& options = to_succ_[b][static_cast<std::size_t>(sym)];
        return std::any_of(options.begin(), options.end(),
                           [&](StateId b2) { return rel.get(t.to, b2); });
    }

  private:
    const StateMachine& from_;
    ExternalAlphabet from_w_;
    SymbolBridge bridge_;
    std::vector<std::vector<std::vector<StateId>>> to_succ_;
};

PairMatrix to_matrix(const std::set<std::pair<StateId, StateId>>& pairs, std::size_t rows,
                     std::size_t cols, bool swap) {
    PairMatrix m(rows, cols);
    for (auto [a, b] : pairs) {
        if (swap) std::swap(a, b);
        m.set(a, b, true);
    }
    return m;
}

void collect_direction(const StateMachine& from, const StateMachine& to, ExternalMode mode,
                       const Relation& r, bool inverse_direction, bool stop_at_first,
                       std::vector<SimulationVerdict>& out) {
    auto rel = to_matrix(r.pairs, from.num_states(), to.num_states(), inverse_direction);
    for (StateId x0 : from.initial()) {
        bool ok = std::any_of(to.initial().begin(), to.initial().end(),
                              [&](StateId y0) { return rel.get(x0, y0); });
        if (!ok) {
            out.push_back({false, inverse_direction, true, x0, 0, std::nullopt});
            if (stop_at_first) return;
        }
    }
    StepChecker checker(from, to, mode);
    std::vector<std::pair<StateId, StateId>> oriented(r.pairs.begin(), r.pairs.end());
    if (inverse_direction) {
        for (auto& p : oriented) std::swap(p.first, p.second);
        std::sort(oriented.begin(), oriented.end());
    }
    for (auto [a, b] : oriented) {
        for (const auto& t : from.outgoing(a)) {
            if (!checker.matched(t, b, rel)) {
                out.push_back({false, inverse_direction, false, a, b, t});
                if (stop_at_first) return;
            }
        }
    }
}

std::vector<SimulationVerdict> run_checks(const StateMachine& q1, const StateMachine& q2,
                                          ExternalMode mode, const Relation& r, bool bisim,
                                          bool stop_at_first) {
    require_live_reachable(q1);
    require_live_reachable(q2);
    check_relation(r, q1, q2);
    std::vector<SimulationVerdict> out;
    collect_direction(q1, q2, mode, r, false, stop_at_first, out);
    if (bisim && !(stop_at_first && !out.empty())) {
        collect_direction(q2, q1, mode, r, true, stop_at_first, out);
    }
    return out;
}

// Removes pairs violating the step condition until nothing changes.
PairMatrix greatest_fixpoint(const StateMachine& q1, const StateMachine& q2, ExternalMode mode,
                             bool both_directions) {
    require_live_reachable(q1);
    require_live_reachable(q2);
    StepChecker forward(q1, q2, mode);
    std::optional<StepChecker> backward;
    if (both_directions) backward.emplace(q2, q1, mode);

    const auto n1 = q1.num_states();
    const auto n2 = q2.num_states();
    PairMatrix rel(n1, n2, true);
    PairMatrix rev(n2, n1, true);
    bool changed = true;
    while (changed) {
        changed = false;
        for (StateId a = 0; a < n1; ++a) {
            for (StateId b = 0; b < n2; ++b) {
                if (!rel.get(a, b)) continue;
                bool bad = forward.unmatched(a, b, rel).has_value() ||
                           (backward && backward->unmatched(b, a, rev).has_value());
                if (bad) {
                    rel.set(a, b, false);
                    rev.set(b, a, false);
                    changed = true;
                }
            }
        }
    }
    return rel;
}

Relation matrix_to_relation(const PairMatrix& m, const StateMachine& q1, const StateMachine& q2) {
    Relation r{q1.digest(), q2.digest(), {}};
    for (StateId a = 0; a < q1.num_states(); ++a) {
        for (StateId b = 0; b < q2.num_states(); ++b) {
            if (m.get(a, b)) r.pairs.emplace(a, b);
        }
    }
    return r;
}

bool initials_covered(const StateMachine& from, const StateMachine& to, const Relation& r,
                      bool flipped) {
    for (StateId x0 : from.initial()) {
        bool ok = std::any_of(to.initial().begin(), to.initial().end(), [&](StateId y0) {
            return flipped ? r.contains(y0, x0) : r.contains(x0, y0);
        });
        if (!ok) return false;
    }
    return true;
}

}  // namespace

void check_relation(const Relation& r, const StateMachine& left, const StateMachine& right) {
    if (r.left_digest != left.digest() || r.right_digest != right.digest()) {
        throw Error(ErrorKind::MalformedRelation, "relation is bound to different machines");
    }
    for (auto [a, b] : r.pairs) {
        if (a >= left.num_states() || b >= right.num_states()) {
            throw Error(ErrorKind::MalformedRelation, "relation names an undeclared state");
        }
    }
}

Relation identity_relation(const StateMachine& q) {
    Relation r{q.digest(), q.digest(), {}};
    for (StateId x = 0; x < q.num_states(); ++x) r.pairs.emplace(x, x);
    return r;
}

Relation inverse(const Relation& r) {
    Relation out{r.right_digest, r.left_digest, {}};
    for (auto [a, b] : r.pairs) out.pairs.emplace(b, a);
    return out;
}

Relation compose(const Relation& r1, const Relation& r2) {
    if (r1.right_digest != r2.left_digest) {
        throw Error(ErrorKind::DigestMismatch,
                    "cannot compose: middle machines differ (" + r1.right_digest + " vs " +
                        r2.left_digest + ")");
    }
    std::multimap<StateId, StateId> by_left;
    for (auto [b, c] : r2.pairs) by_left.emplace(b, c);
    Relation out{r1.left_digest, r2.right_digest, {}};
    for (auto [a, b] : r1.pairs) {
        auto [lo, hi] = by_left.equal_range(b);
        for (auto it = lo; it != hi; ++it) out.pairs.emplace(a, it->second);
    }
    return out;
}

std::string serialize(const Relation& r, const StateMachine& left, const StateMachine& right) {
    check_relation(r, left, right);
    std::string out;
    for (auto [a, b] : r.pairs) out += left.state_name(a) + " -> " + right.state_name(b) + "\n";
    return out;
}

SimulationVerdict verify_simulation(const StateMachine& q1, const StateMachine& q2,
                                    ExternalMode mode, const Relation& r, bool bisim) {
    auto failures = run_checks(q1, q2, mode, r, bisim, true);
    return failures.empty() ? SimulationVerdict{} : failures.front();
}

std::vector<SimulationVerdict> simulation_failures(const StateMachine& q1, const StateMachine& q2,
                                                   ExternalMode mode, const Relation& r,
                                                   bool bisim) {
    return run_checks(q1, q2, mode, r, bisim, false);
}

Relation greatest_simulation(const StateMachine& q1, const StateMachine& q2, ExternalMode mode) {
    return matrix_to_relation(greatest_fixpoint(q1, q2, mode, false), q1, q2);
}

Relation greatest_bisimulation(const StateMachine& q1, const StateMachine& q2,
                               ExternalMode mode) {
    return matrix_to_relation(greatest_fixpoint(q1, q2, mode, true), q1, q2);
}

bool simulated_by(const StateMachine& q1, const StateMachine& q2, ExternalMode mode) {
    return initials_covered(q1, q2, greatest_simulation(q1, q2, mode), false);
}

bool bisimilar(const StateMachine& q1, const StateMachine& q2, ExternalMode mode) {
    auto r = greatest_bisimulation(q1, q2, mode);
    return initials_covered(q1, q2, r, false) && initials_covered(q2, q1, r, true);
}

const char* to_string(RelationKind kind) {
    switch (kind) {
        case RelationKind::StateToAbstract: return "state-to-abstract";
        case RelationKind::LStep: return "l-step";
        case RelationKind::MStep: return "m-step";
        case RelationKind::StateToQuotient: return "state-to-quotient";
        case RelationKind::SalcaToQuotient: return "salca-to-quotient";
        case RelationKind::Renaming: return "renaming";
    }
    return "unknown";
}

CanonicalRelation canonical_relation(RelationKind kind, const StateMachine& q, ExternalMode mode,
                                     std::size_t l, std::size_t m) {
    require_accepted(q);
    ExternalAlphabet w(q, mode);
    ExternalAlphabet wy(q, ExternalMode::OutputsOnly);
    CanonicalRelation out;
    auto bind = [&out] {
        out.relation.left_digest = out.left.machine.digest();
        out.relation.right_digest = out.right.machine.digest();
    };

    switch (kind) {
        case RelationKind::StateToAbstract: {
            auto spec = IntervalSpec::make(l, m);
            out.left = wrap_concrete(q, mode);
            out.right = build_abstract_machine(q, w, spec);
            auto strings = external_strings_all(q, w, spec);
            for (StateId x = 0; x < q.num_states(); ++x) {
                for (const auto& z : strings[x]) {
                    if (auto id = out.right.find_window(z)) out.relation.pairs.emplace(x, *id);
                }
            }
            break;
        }
        case RelationKind::LStep: {
            auto spec = IntervalSpec::make(l, m);
            out.left = build_abstract_machine(q, w, IntervalSpec::make(l + 1, m));
            out.right = build_abstract_machine(q, w, spec);
            for (StateId a = 0; a < out.left.labels.size(); ++a) {
                const auto& z = out.left.labels[a].front();
                if (auto id = out.right.find_window(slice(z, 1, l))) out.relation.pairs.emplace(a, *id);
            }
            break;
        }
        case RelationKind::MStep: {
            auto spec = IntervalSpec::make(l, m);
            if (m >= l) throw Error(ErrorKind::InvalidSpec, "the m-step relation needs m < l");
            auto spec_next = IntervalSpec::make(l, m + 1);
            out.left = build_abstract_machine(q, w, spec_next);
            out.right = build_abstract_machine(q, w, spec);
            auto upper = external_strings_all(q, w, spec_next);
            auto lower = external_strings_all(q, w, spec);
            for (StateId x = 0; x < q.num_states(); ++x) {
                for (const auto& a : upper[x]) {
                    for (const auto& b : lower[x]) {
                        if (slice(a, 0, l - 1) != slice(b, 1, l - 1)) continue;
                        auto ia = out.left.find_window(a);
                        auto ib = out.right.find_window(b);
                        if (ia && ib) out.relation.pairs.emplace(*ia, *ib);
                    }
                }
            }
            break;
        }
        case RelationKind::StateToQuotient: {
            out.left = wrap_concrete(q, ExternalMode::OutputsOnly);
            out.right = build_quotient_machine(q, l);
            auto fibers = external_strings_all(q, wy, IntervalSpec::make(l, l));
            for (StateId x = 0; x < q.num_states(); ++x) {
                std::vector<Window> cell(fibers[x].begin(), fibers[x].end());
                if (auto id = out.right.find(cell)) out.relation.pairs.emplace(x, *id);
            }
            break;
        }
        case RelationKind::SalcaToQuotient:
        case RelationKind::Renaming: {
            out.left = build_abstract_machine(q, wy, IntervalSpec::make(l, l));
            out.right = build_quotient_machine(q, l);
            for (StateId a = 0; a < out.left.labels.size(); ++a) {
                const auto& z = out.left.labels[a].front();
                for (StateId c = 0; c < out.right.labels.size(); ++c) {
                    const auto& cell = out.right.labels[c];
                    bool related = kind == RelationKind::Renaming
                                       ? cell == std::vector<Window>{z}
                                       : std::binary_search(cell.begin(), cell.end(), z);
                    if (related) out.relation.pairs.emplace(a, c);
                }
            }
            break;
        }
    }
    bind();
    return out;
}

ControlReport control_compatibility(const StateMachine& q, const StateMachine& abstract,
                                    const Relation& r, ExternalMode mode) {
    require_live_reachable(q);
    require_live_reachable(abstract);
    check_relation(r, q, abstract);
    ControlReport report;
    for (auto [x, xa] : r.pairs) {
        auto concrete = enabled_inputs(q, x);
        auto abstract_in = enabled_inputs(abstract, xa);
        // Inputs are compared by name since the alphabets may be declared differently.
        for (InputId u : abstract_in) {
            auto mine = q.find_input(abstract.input_name(u));
            if (!mine || !std::binary_search(concrete.begin(), concrete.end(), *mine)) {
                report.input_inclusion = false;
                break;
            }
        }
        if (!report.input_inclusion) {
            report.inclusion_witness = std::make_pair(x, xa);
            report.concrete_inputs = concrete;
            report.abstract_inputs = abstract_in;
            break;
        }
    }
    for (StateId x = 0; x < q.num_states(); ++x) {
        if (enabled_inputs(q, x).size() != q.num_inputs()) {
            report.free_input = false;
            break;
        }
    }
    report.simulation_ok = verify_simulation(q, abstract, mode, r).holds;
    report.alternating_ok = report.simulation_ok && report.input_inclusion;
    return report;
}

}  // namespace lcabs
