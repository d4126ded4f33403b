#include "lcabs/report.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "lcabs/behavior.hpp"
#include "lcabs/qba.hpp"
#include "lcabs/relations.hpp"
#include "lcabs/salca.hpp"

namespace lcabs {

namespace {

std::string superscript(std::size_t n) {
    static const char* digits[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
    std::string out;
    for (char c : std::to_string(n)) out += digits[c - '0'];
    return out;
}

const char* yes_no(bool b) { return b ? "true" : "false"; }

}  // namespace

std::string window_machine_name(std::size_t l, std::size_t m) {
    return "Q^{I" + superscript(l) + "_" + std::to_string(m) + "}";
}

std::string quotient_machine_name(std::size_t l) { return "Q^{" + std::to_string(l) + "∇}"; }

Ordering compare_abstractions(const StateMachine& q, std::size_t l) {
    require_accepted(q);
    if (l < 1) throw Error(ErrorKind::InvalidSpec, "l must be at least 1");
    const auto y = ExternalMode::OutputsOnly;
    ExternalAlphabet w(q, y);

    Ordering o;
    o.l = l;
    std::array<StateMachine, 3> machines = {
        build_abstract_machine(q, w, IntervalSpec::make(l, l)).machine,
        build_quotient_machine(q, l).machine,
        build_abstract_machine(q, w, IntervalSpec::make(l, 0)).machine,
    };
    o.names = {window_machine_name(l, l), quotient_machine_name(l), window_machine_name(l, 0)};
    for (std::size_t a = 0; a < 3; ++a) {
        for (std::size_t b = 0; b < 3; ++b) {
            o.simulated[a][b] = a == b || simulated_by(machines[a], machines[b], y);
            o.bisimilar[a][b] = a == b || bisimilar(machines[a], machines[b], y);
            o.included[a][b] = a == b || behavior_included(machines[a], machines[b], y).included;
        }
        o.bisimilar_to_source[a] = bisimilar(machines[a], q, y);
    }

    // Group mutually bisimilar machines; inside a group the quotient is named
    // first, then the future and past window machines.
    const std::array<std::size_t, 3> naming = {Ordering::kQuotient, Ordering::kFuture,
                                               Ordering::kPast};
    std::vector<std::vector<std::size_t>> groups;
    for (std::size_t a : naming) {
        auto it = std::find_if(groups.begin(), groups.end(),
                               [&](const auto& g) { return o.bisimilar[g.front()][a]; });
        if (it == groups.end()) {
            groups.push_back({a});
        } else {
            it->push_back(a);
        }
    }
    // Order groups from the tightest to the loosest abstraction. Among
    // candidates nothing strictly precedes, the canonical order future,
    // quotient, past decides.
    auto rank = [](const std::vector<std::size_t>& g) {
        return *std::min_element(g.begin(), g.end());
    };
    std::sort(groups.begin(), groups.end(),
              [&](const auto& a, const auto& b) { return rank(a) < rank(b); });
    auto below = [&](const auto& a, const auto& b) {
        return o.simulated[a.front()][b.front()] && !o.simulated[b.front()][a.front()];
    };
    std::vector<std::vector<std::size_t>> ordered;
    while (!groups.empty()) {
        auto next = std::find_if(groups.begin(), groups.end(), [&](const auto& g) {
            return std::none_of(groups.begin(), groups.end(),
                                [&](const auto& h) { return below(h, g); });
        });
        ordered.push_back(std::move(*next));
        groups.erase(next);
    }
    groups = std::move(ordered);

    std::string chain;
    for (std::size_t g = 0; g < groups.size(); ++g) {
        if (g > 0) {
            std::size_t prev = groups[g - 1].front();
            chain += o.simulated[prev][groups[g].front()] ? " ⪯_Y " : "; ";
        }
        for (std::size_t i = 0; i < groups[g].size(); ++i) {
            if (i > 0) chain += " ≅_Y ";
            chain += o.names[groups[g][i]];
        }
    }
    for (const auto& g : groups) {
        if (o.bisimilar_to_source[g.front()]) chain += ", " + o.names[g.front()] + " ≅_Y Q";
    }
    o.chain = std::move(chain);
    return o;
}

bool Report::all_hold() const {
    bool ok = std::all_of(properties.begin(), properties.end(),
                          [](const PropertyRow& r) { return r.future_unique && r.sbalc; });
    return ok && std::all_of(levels.begin(), levels.end(), [](const LevelRow& r) {
               return r.async_complete && r.domino_consistent && r.fixed_point;
           });
}

Report make_report(const StateMachine& q, ExternalMode mode, std::size_t l_max) {
    require_accepted(q);
    if (l_max < 1) throw Error(ErrorKind::InvalidSpec, "l must be at least 1");
    ExternalAlphabet w(q, mode);
    Report r;
    r.digest = q.digest();
    r.mode = mode;
    r.l_max = l_max;
    for (std::size_t l = 1; l <= l_max; ++l) {
        for (std::size_t m : {std::size_t{0}, l}) {
            auto spec = IntervalSpec::make(l, m);
            r.properties.push_back(
                {l, m, is_future_unique(q, w, spec).holds, is_sbalc(q, w, spec).holds});
            auto a = build_abstract_machine(q, w, spec);
            r.abstractions.push_back(
                {window_machine_name(l, m), a.machine.num_states(), a.machine.transitions().size()});
        }
        auto quotient = build_quotient_machine(q, l);
        r.abstractions.push_back({quotient_machine_name(l), quotient.machine.num_states(),
                                  quotient.machine.transitions().size()});
        r.levels.push_back({l, is_async_l_complete(q, w, l), is_domino_consistent(q, l).holds,
                            is_fixed_point(q, partition_at_level(q, l)).holds});
        r.orderings.push_back(compare_abstractions(q, l));
    }
    return r;
}

std::string to_text(const Ordering& o) {
    std::ostringstream out;
    out << "l=" << o.l << ": " << o.chain << '\n';
    for (std::size_t a = 0; a < 3; ++a) {
        for (std::size_t b = 0; b < 3; ++b) {
            if (a == b) continue;
            out << "  " << o.names[a] << " ⪯_Y " << o.names[b] << ": " << yes_no(o.simulated[a][b])
                << ", B ⊆: " << yes_no(o.included[a][b]) << '\n';
        }
    }
    for (std::size_t a = 0; a < 3; ++a) {
        out << "  " << o.names[a] << " ≅_Y Q: " << yes_no(o.bisimilar_to_source[a]) << '\n';
    }
    return out.str();
}

std::string to_text(const Report& r) {
    std::ostringstream out;
    out << "machine " << r.digest << "  W=" << to_string(r.mode) << '\n';
    out << "\nl  m  future_unique  sbalc\n";
    for (const auto& p : r.properties) {
        out << p.l << "  " << p.m << "  " << yes_no(p.future_unique) << "  " << yes_no(p.sbalc)
            << '\n';
    }
    out << "\nl  async_complete  domino_consistent  fixed_point\n";
    for (const auto& v : r.levels) {
        out << v.l << "  " << yes_no(v.async_complete) << "  " << yes_no(v.domino_consistent)
            << "  " << yes_no(v.fixed_point) << '\n';
    }
    out << "\nabstraction  states  transitions\n";
    for (const auto& a : r.abstractions) {
        out << a.name << "  " << a.states << "  " << a.transitions << '\n';
    }
    out << "\nordering (W=Y)\n";
    for (const auto& o : r.orderings) out << to_text(o);
    return out.str();
}

namespace {

nlohmann::ordered_json ordering_json(const Ordering& o) {
    nlohmann::ordered_json j;
    j["l"] = o.l;
    j["chain"] = o.chain;
    j["machines"] = o.names;
    auto pairs = nlohmann::ordered_json::array();
    for (std::size_t a = 0; a < 3; ++a) {
        for (std::size_t b = 0; b < 3; ++b) {
            if (a == b) continue;
            pairs.push_back({{"left", o.names[a]},
                             {"right", o.names[b]},
                             {"simulated", o.simulated[a][b]},
                             {"bisimilar", o.bisimilar[a][b]},
                             {"behavior_included", o.included[a][b]}});
        }
    }
    j["pairs"] = pairs;
    j["bisimilar_to_source"] = o.bisimilar_to_source;
    return j;
}

}  // namespace

std::string to_json(const Ordering& o) { return ordering_json(o).dump(2) + "\n"; }

std::string to_json(const Report& r) {
    nlohmann::ordered_json j;
    j["digest"] = r.digest;
    j["external"] = flag_token(r.mode);
    j["l_max"] = r.l_max;
    auto props = nlohmann::ordered_json::array();
    for (const auto& p : r.properties) {
        props.push_back(
            {{"l", p.l}, {"m", p.m}, {"future_unique", p.future_unique}, {"sbalc", p.sbalc}});
    }
    j["properties"] = props;
    auto levels = nlohmann::ordered_json::array();
    for (const auto& v : r.levels) {
        levels.push_back({{"l", v.l},
                          {"async_complete", v.async_complete},
                          {"domino_consistent", v.domino_consistent},
                          {"fixed_point", v.fixed_point}});
    }
    j["levels"] = levels;
    auto abs = nlohmann::ordered_json::array();
    for (const auto& a : r.abstractions) {
        abs.push_back({{"name", a.name}, {"states", a.states}, {"transitions", a.transitions}});
    }
    j["abstractions"] = abs;
    auto ords = nlohmann::ordered_json::array();
    for (const auto& o : r.orderings) ords.push_back(ordering_json(o));
    j["orderings"] = ords;
    return j.dump(2) + "\n";
}

}  // namespace lcabs
