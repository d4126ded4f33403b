// Acceptance run: one PASS/FAIL line per criterion, non-zero exit on any FAIL.

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "lcabs/behavior.hpp"
#include "lcabs/fuzz.hpp"
#include "lcabs/io.hpp"
#include "lcabs/qba.hpp"
#include "lcabs/relations.hpp"
#include "lcabs/report.hpp"
#include "lcabs/salca.hpp"
#include "oracles.hpp"

using namespace lcabs;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

// Collects failed expectations for one criterion.
struct Checklist {
    std::vector<std::string> failures;
    std::size_t total = 0;

    void expect(bool ok, const std::string& what) {
        ++total;
        if (!ok) failures.push_back(what);
    }
};

StateMachine fig2() { return load_machine_file(LCABS_TEST_DATA "/fig2.json").machine; }

std::set<std::string> rendered(const WindowSet& set, const ExternalAlphabet& w) {
    std::set<std::string> out;
    for (const auto& z : set) out.insert(render_window(z, w));
    return out;
}

std::set<std::string> names(const StateMachine& q) { return {q.states().begin(), q.states().end()}; }

std::set<std::string> initial_names(const StateMachine& q) {
    std::set<std::string> out;
    for (StateId x : q.initial()) out.insert(q.state_name(x));
    return out;
}

std::set<std::pair<std::string, std::string>> named_pairs(const Relation& r, const StateMachine& a,
                                                          const StateMachine& b) {
    std::set<std::pair<std::string, std::string>> out;
    for (auto [x, y] : r.pairs) out.insert({a.state_name(x), b.state_name(y)});
    return out;
}

// -- criterion 1 ------------------------------------------------------------

Checklist golden_examples() {
    Checklist c;
    auto q = fig2();
    ExternalAlphabet w(q, ExternalMode::OutputsOnly);
    auto spec = [](std::size_t l, std::size_t m) { return IntervalSpec::make(l, m); };

    c.expect(rendered(dominoes(q, w, 1).windows, w) == std::set<std::string>{"y1", "y2", "y3", "y4"},
             "D1 = Y");
    c.expect(rendered(dominoes(q, w, 2).windows, w) ==
                 std::set<std::string>{"<>.y1", "y1.y2", "y1.y4", "y2.y3", "y3.y2", "y3.y4", "y4.y3"},
             "D2");

    auto sb10 = is_sbalc(q, w, spec(1, 0));
    c.expect(!sb10.holds, "sbalc(1,0) = false");
    c.expect(is_future_unique(q, w, spec(1, 0)).holds, "fu(1,0) = true");
    c.expect(is_future_unique(q, w, spec(2, 0)).holds, "fu(2,0) = true");
    c.expect(!is_sbalc(q, w, spec(1, 1)).holds, "sbalc(1,1) = false");
    c.expect(is_future_unique(q, w, spec(1, 1)).holds, "fu(1,1) = true");
    c.expect(!is_sbalc(q, w, spec(2, 0)).holds, "sbalc(2,0) = false");
    c.expect(is_sbalc(q, w, spec(2, 2)).holds, "sbalc(2,2) = true");
    auto fu22 = is_future_unique(q, w, spec(2, 2));
    c.expect(!fu22.holds && q.state_name(fu22.state) == "x3" &&
                 std::set<std::string>{render_window(fu22.first, w), render_window(fu22.second, w)} ==
                     std::set<std::string>{"y3.y2", "y3.y4"},
             "fu(2,2) = false with cell {y3y2, y3y4}");
    c.expect(!is_fixed_point(q, partition_at_level(q, 1)).holds, "Phi1 not a fixed point");
    c.expect(is_fixed_point(q, partition_at_level(q, 2)).holds, "Phi2 is a fixed point");
    c.expect(is_domino_consistent(q, 1).holds, "domino consistent at l=1");
    c.expect(is_domino_consistent(q, 2).holds, "domino consistent at l=2");

    c.expect(serialize(partition_at_level(q, 1), q) == "{x1,x5}\n{x2}\n{x3}\n{x4}\n", "Phi1");
    c.expect(serialize(partition_at_level(q, 2), q) == "{x1}\n{x2}\n{x3}\n{x4}\n{x5}\n", "Phi2");

    auto a10 = build_abstract_machine(q, w, spec(1, 0)).machine;
    auto a11 = build_abstract_machine(q, w, spec(1, 1)).machine;
    auto a22 = build_abstract_machine(q, w, spec(2, 2)).machine;
    auto n1 = build_quotient_machine(q, 1).machine;
    auto n2 = build_quotient_machine(q, 2).machine;
    c.expect(names(a10) == std::set<std::string>{"<>", "y1", "y2", "y3", "y4"} &&
                 a10.transitions().size() == 7,
             "Q^{I1_0} states and 7 transitions");
    c.expect(names(a11) == std::set<std::string>{"y1", "y2", "y3", "y4"} &&
                 a11.transitions().size() == 6 && initial_names(a11) == std::set<std::string>{"y1"},
             "Q^{I1_1} states, 6 transitions, initial {y1}");
    c.expect(names(a22) ==
                 std::set<std::string>{"y1.y2", "y2.y3", "y3.y2", "y3.y4", "y4.y3", "y1.y4"} &&
                 initial_names(a22) == std::set<std::string>{"y1.y2", "y1.y4"},
             "Q^{I2_2} states and initial states");
    c.expect(names(n1) == std::set<std::string>{"y1", "y2", "y3", "y4"}, "Q^{1v} states");
    c.expect(names(n2) ==
                 std::set<std::string>{"y1.y2", "y1.y4", "y2.y3", "y3.y2|y3.y4", "y4.y3"},
             "Q^{2v} states with one 2-window cell");
    return c;
}

// -- criterion 2 ------------------------------------------------------------

Checklist relation_suite() {
    Checklist c;
    auto q = fig2();
    const auto y = ExternalMode::OutputsOnly;

    auto past_relation = canonical_relation(RelationKind::StateToAbstract, q, y, 1, 0);
    auto future_relation = canonical_relation(RelationKind::StateToAbstract, q, y, 1, 1);
    c.expect(verify_simulation(q, past_relation.right.machine, y, past_relation.relation).holds,
             "state to I1_0 relation is a simulation");
    c.expect(verify_simulation(q, future_relation.right.machine, y, future_relation.relation).holds,
             "state to I1_1 relation is a simulation");
    c.expect(named_pairs(future_relation.relation, q, future_relation.right.machine) ==
                 std::set<std::pair<std::string, std::string>>{
                     {"x1", "y1"}, {"x2", "y2"}, {"x3", "y3"}, {"x4", "y4"}, {"x5", "y1"}},
             "state to I1_1 pairs");

    auto window_relation = canonical_relation(RelationKind::StateToAbstract, q, y, 2, 2);
    auto verdict = verify_simulation(q, window_relation.right.machine, y, window_relation.relation);
    bool witness = false;
    for (const auto& f : simulation_failures(q, window_relation.right.machine, y, window_relation.relation)) {
        if (q.state_name(f.from_state) == "x3" && window_relation.right.machine.state_name(f.to_state) == "y3.y4" &&
            f.unmatched && q.state_name(f.unmatched->to) == "x2" &&
            q.input_name(f.unmatched->input) == "u3" && q.output_name(f.unmatched->output) == "y3") {
            witness = true;
        }
    }
    c.expect(!verdict.holds, "R^{I2_2} is not a simulation");
    c.expect(witness, "R^{I2_2} failure includes (x3, y3y4) with (x3,u3,y3,x2) unmatched");

    auto quotient_relation = canonical_relation(RelationKind::StateToQuotient, q, y, 1);
    c.expect(verify_simulation(q, quotient_relation.right.machine, ExternalMode::InputOutputPairs, quotient_relation.relation)
                 .holds,
             "state to quotient relation is a simulation");
    c.expect(named_pairs(quotient_relation.relation, q, quotient_relation.right.machine) ==
                 std::set<std::pair<std::string, std::string>>{
                     {"x1", "y1"}, {"x2", "y2"}, {"x3", "y3"}, {"x4", "y4"}, {"x5", "y1"}},
             "state to quotient pairs");

    auto control = control_compatibility(q, past_relation.right.machine, past_relation.relation, y);
    bool located = control.inclusion_witness &&
                   q.state_name(control.inclusion_witness->first) == "x2" &&
                   past_relation.right.machine.state_name(control.inclusion_witness->second) == "y1";
    std::set<std::string> concrete, abstract;
    for (InputId u : control.concrete_inputs) concrete.insert(q.input_name(u));
    for (InputId u : control.abstract_inputs) abstract.insert(past_relation.right.machine.input_name(u));
    c.expect(!control.input_inclusion && located &&
                 concrete == std::set<std::string>{"u2"} &&
                 abstract == std::set<std::string>{"u2", "u4"},
             "input inclusion violation at (x2, y1): {u2} vs {u2,u4}");
    return c;
}

// -- criterion 3 ------------------------------------------------------------

Checklist ordering() {
    Checklist c;
    auto q = fig2();
    auto o2 = compare_abstractions(q, 2);
    c.expect(o2.chain == "Q^{I²_2} ⪯_Y Q^{2∇} ⪯_Y Q^{I²_0}, Q^{2∇} ≅_Y Q", "l=2 chain: " + o2.chain);
    c.expect(!o2.simulated[Ordering::kQuotient][Ordering::kFuture], "l=2 first step strict");
    c.expect(!o2.simulated[Ordering::kPast][Ordering::kQuotient], "l=2 second step strict");
    auto o1 = compare_abstractions(q, 1);
    c.expect(o1.chain == "Q^{1∇} ≅_Y Q^{I¹_1} ⪯_Y Q^{I¹_0}", "l=1 chain: " + o1.chain);
    return c;
}

// -- criterion 4 ------------------------------------------------------------

Checklist theorem_laws_check(double& elapsed) {
    Checklist c;
    FuzzConfig config;
    config.seed = 20240611;
    config.count = 300;
    config.max_states = 6;
    config.max_inputs = 3;
    config.max_outputs = 3;
    config.max_l = 3;
    auto start = Clock::now();
    auto summary = run_fuzz(config);
    elapsed = seconds_since(start);
    for (const auto& r : summary.laws) {
        c.expect(r.passed == r.checked, r.name + " " + std::to_string(r.passed) + "/" +
                                            std::to_string(r.checked) +
                                            (r.counterexample ? " (" + r.detail + ")" : ""));
    }
    c.expect(summary.machines.size() >= 300, "at least 300 machines");
    c.expect(elapsed < 60.0, "runtime under 60 s");
    return c;
}

// -- criterion 5 ------------------------------------------------------------

Checklist oracle_checks() {
    Checklist c;
    FuzzConfig config;
    config.seed = 7;
    config.count = 60;
    config.max_states = 5;
    config.max_inputs = 2;
    config.max_outputs = 2;
    auto machines = generate_machines(config);
    constexpr ExternalMode modes[] = {ExternalMode::OutputsOnly, ExternalMode::InputOutputPairs};

    // Prefix inclusion to depth 8, on each machine paired with its own
    // abstractions and with other machines over the same alphabet.
    std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>> by_alphabet;
    for (std::size_t i = 0; i < machines.size(); ++i) {
        by_alphabet[{machines[i].num_inputs(), machines[i].num_outputs()}].push_back(i);
    }
    std::size_t inclusion_checks = 0;
    auto compare_inclusion = [&](const StateMachine& a, const StateMachine& b, ExternalMode mode,
                                 const std::string& what) {
        ++inclusion_checks;
        auto verdict = behavior_included(a, b, mode);
        bool brute = oracle::prefixes_included(a, b, mode, 8);
        c.expect(verdict.included == brute, what + ": inclusion disagrees with enumeration");
        if (!verdict.included) {
            const auto d = verdict.counterexample.size();
            ExternalAlphabet wa(a, mode);
            std::vector<std::string> word;
            for (Symbol s : verdict.counterexample) word.push_back(wa.token(s));
            bool genuine = d <= 8 && oracle::words(a, mode, d).count(word) &&
                           !oracle::words(b, mode, d).count(word);
            c.expect(genuine, what + ": counterexample is not a distinguishing prefix");
        }
    };
    for (std::size_t i = 0; i < machines.size(); ++i) {
        const auto& q = machines[i];
        for (auto mode : modes) {
            ExternalAlphabet w(q, mode);
            auto past = build_abstract_machine(q, w, IntervalSpec::make(1, 0)).machine;
            compare_inclusion(q, past, mode, "machine " + std::to_string(i) + " vs its I1_0");
            compare_inclusion(past, q, mode, "I1_0 vs machine " + std::to_string(i));
        }
        auto quotient = build_quotient_machine(q, 1).machine;
        compare_inclusion(quotient, q, ExternalMode::OutputsOnly,
                          "quotient vs machine " + std::to_string(i));
    }
    for (const auto& [key, group] : by_alphabet) {
        for (std::size_t a = 0; a + 1 < group.size() && a < 6; ++a) {
            for (auto mode : modes) {
                compare_inclusion(machines[group[a]], machines[group[a + 1]], mode,
                                  "machines " + std::to_string(group[a]) + "," +
                                      std::to_string(group[a + 1]));
            }
        }
    }

    // Window sets against run enumeration to depth 6. A window needs at most
    // |X|-1 steps to reach its first state plus l more, so depth 6 covers
    // l <= 2 for machines with at most 5 states.
    for (std::size_t i = 0; i < machines.size(); ++i) {
        const auto& q = machines[i];
        for (auto mode : modes) {
            ExternalAlphabet w(q, mode);
            for (std::size_t l = 1; l <= 2; ++l) {
                for (std::size_t m = 0; m <= l; ++m) {
                    auto product = external_strings_all(q, w, IntervalSpec::make(l, m));
                    auto runs = oracle::enumerated_windows(q, mode, l, m, 6);
                    bool same = true;
                    for (StateId x = 0; x < q.num_states(); ++x) {
                        same = same && WindowSet(runs[x].begin(), runs[x].end()) == product[x];
                    }
                    c.expect(same, "window sets of machine " + std::to_string(i) + " l=" +
                                       std::to_string(l) + " m=" + std::to_string(m));
                }
            }
        }
    }

    // Greatest simulation against exhaustive search on tiny machines.
    FuzzConfig tiny;
    tiny.seed = 11;
    tiny.count = 80;
    tiny.max_states = 3;
    tiny.max_inputs = 2;
    tiny.max_outputs = 2;
    auto small = generate_machines(tiny);
    std::size_t relation_checks = 0;
    for (std::size_t i = 0; i < small.size(); ++i) {
        for (std::size_t j = 0; j < small.size() && relation_checks < 400; ++j) {
            const auto& a = small[i];
            const auto& b = small[j];
            if (a.num_inputs() != b.num_inputs() || a.num_outputs() != b.num_outputs()) continue;
            if (a.num_states() * b.num_states() > 9) continue;
            for (auto mode : modes) {
                ++relation_checks;
                auto expected = oracle::largest_simulation(a, b, mode);
                auto got = greatest_simulation(a, b, mode);
                c.expect(got.pairs == expected, "greatest simulation of machines " +
                                                    std::to_string(i) + "," + std::to_string(j));
                bool initial_ok = true;
                for (StateId x0 : a.initial()) {
                    bool found = false;
                    for (StateId y0 : b.initial()) found = found || expected.count({x0, y0});
                    initial_ok = initial_ok && found;
                }
                c.expect(simulated_by(a, b, mode) == initial_ok,
                         "simulated_by of machines " + std::to_string(i) + "," + std::to_string(j));
            }
        }
    }
    c.expect(inclusion_checks >= 100 && relation_checks >= 100, "enough oracle comparisons");
    return c;
}

std::string describe(const Checklist& c) {
    std::ostringstream out;
    out << (c.total - c.failures.size()) << "/" << c.total << " checks";
    if (!c.failures.empty()) {
        out << "; failed:";
        for (const auto& f : c.failures) out << "\n    - " << f;
    }
    return out.str();
}

}  // namespace

int main() {
    struct Criterion {
        const char* title;
        std::function<Checklist(double&)> run;
        double budget;  // seconds, 0 for none
    };
    const std::vector<Criterion> criteria = {
        {"golden example suite", [](double&) { return golden_examples(); }, 1.0},
        {"relation suite", [](double&) { return relation_suite(); }, 0.0},
        {"ordering reproduction", [](double&) { return ordering(); }, 0.0},
        {"randomized theorem laws", theorem_laws_check, 0.0},
        {"oracle cross-checks", [](double&) { return oracle_checks(); }, 0.0},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        auto start = Clock::now();
        double inner = 0.0;
        Checklist c;
        try {
            c = criteria[i].run(inner);
        } catch (const std::exception& e) {
            c.expect(false, std::string("exception: ") + e.what());
        }
        double elapsed = seconds_since(start);
        if (criteria[i].budget > 0) {
            c.expect(elapsed < criteria[i].budget, "runtime under budget");
        }
        bool ok = c.failures.empty();
        failed += ok ? 0 : 1;
        std::ostringstream time;
        time.precision(2);
        time << std::fixed << elapsed;
        std::cout << "criterion " << (i + 1) << " [" << criteria[i].title << "]: "
                  << (ok ? "PASS" : "FAIL") << " (" << describe(c) << ", " << time.str() << " s)\n";
    }
    return failed == 0 ? 0 : 1;
}
