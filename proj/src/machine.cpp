#include "lcabs/machine.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <deque>
#include <set>
#include <sstream>
#include <unordered_set>

namespace lcabs {

namespace {

bool has_whitespace(std::string_view s) {
    return std::any_of(s.begin(), s.end(),
                       [](unsigned char c) { return std::isspace(c) != 0; });
}

void check_names(const std::vector<std::string>& names, const char* what, bool symbol) {
    std::unordered_set<std::string_view> seen;
    for (const auto& name : names) {
        if (name.empty() || has_whitespace(name)) {
            throw Error(ErrorKind::ParseError,
                        std::string("invalid ") + what + " token '" + name + "'");
        }
        if (symbol) {
            if (name == kDiamondToken) {
                throw Error(ErrorKind::ParseError,
                            std::string(what) + " token '<>' is reserved for the diamond");
            }
            if (name.find_first_of(".|") != std::string::npos) {
                throw Error(ErrorKind::ParseError, std::string(what) + " token '" + name +
                                                       "' contains a reserved character");
            }
        }
        if (!seen.insert(name).second) {
            throw Error(ErrorKind::ParseError,
                        std::string("duplicate ") + what + " declaration '" + name + "'");
        }
    }
}

template <typename Id>
std::optional<Id> find_in(const std::vector<std::string>& names, std::string_view name) {
    auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) return std::nullopt;
    return static_cast<Id>(it - names.begin());
}

std::string fnv1a_hex(const std::string& text) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace

StateMachine::StateMachine(std::vector<std::string> states, std::vector<std::string> inputs,
                           std::vector<std::string> outputs, std::vector<StateId> initial,
                           std::vector<Transition> transitions)
    : states_(std::move(states)),
      inputs_(std::move(inputs)),
      outputs_(std::move(outputs)),
      initial_(std::move(initial)),
      transitions_(std::move(transitions)) {
    check_names(states_, "state", false);
    check_names(inputs_, "input", true);
    check_names(outputs_, "output", true);

    for (StateId x : initial_) check_state(x);
    std::sort(initial_.begin(), initial_.end());
    initial_.erase(std::unique(initial_.begin(), initial_.end()), initial_.end());
    if (initial_.empty() && !states_.empty()) {
        throw Error(ErrorKind::ParseError, "initial state set must be non-empty");
    }

    for (const auto& t : transitions_) {
        check_state(t.from);
        check_input(t.input);
        check_output(t.output);
        check_state(t.to);
    }
    std::sort(transitions_.begin(), transitions_.end());
    transitions_.erase(std::unique(transitions_.begin(), transitions_.end()), transitions_.end());

    offsets_.assign(states_.size() + 1, 0);
    for (const auto& t : transitions_) ++offsets_[t.from + 1];
    for (std::size_t i = 1; i < offsets_.size(); ++i) offsets_[i] += offsets_[i - 1];

    initial_mask_.assign(states_.size(), false);
    for (StateId x : initial_) initial_mask_[x] = true;

    std::ostringstream canon;
    canon << "X";
    for (const auto& s : states_) canon << ' ' << s;
    canon << "\nU";
    for (const auto& s : inputs_) canon << ' ' << s;
    canon << "\nY";
    for (const auto& s : outputs_) canon << ' ' << s;
    canon << "\nX0";
    for (StateId x : initial_) canon << ' ' << x;
    canon << "\nD";
    for (const auto& t : transitions_) {
        canon << ' ' << t.from << ',' << t.input << ',' << t.output << ',' << t.to;
    }
    digest_ = fnv1a_hex(canon.str());
}

StateMachine StateMachine::from_names(std::vector<std::string> states,
                                      std::vector<std::string> inputs,
                                      std::vector<std::string> outputs,
                                      const std::vector<std::string>& initial,
                                      const std::vector<std::vector<std::string>>& transitions) {
    auto lookup = [](const std::vector<std::string>& names, const std::string& name,
                     ErrorKind kind) -> std::uint32_t {
        auto id = find_in<std::uint32_t>(names, name);
        if (!id) throw Error(kind, "'" + name + "' is not declared");
        return *id;
    };
    std::vector<StateId> init;
    for (const auto& name : initial) init.push_back(lookup(states, name, ErrorKind::UnknownState));
    std::vector<Transition> delta;
    for (const auto& row : transitions) {
        if (row.size() != 4) {
            throw Error(ErrorKind::ParseError, "transition must have exactly 4 components");
        }
        delta.push_back({lookup(states, row[0], ErrorKind::UnknownState),
                         lookup(inputs, row[1], ErrorKind::UnknownInput),
                         lookup(outputs, row[2], ErrorKind::UnknownOutput),
                         lookup(states, row[3], ErrorKind::UnknownState)});
    }
    return StateMachine(std::move(states), std::move(inputs), std::move(outputs), std::move(init),
                        std::move(delta));
}

std::span<const Transition> StateMachine::outgoing(StateId x) const {
    check_state(x);
    return std::span<const Transition>(transitions_).subspan(offsets_[x],
                                                             offsets_[x + 1] - offsets_[x]);
}

bool StateMachine::is_initial(StateId x) const {
    check_state(x);
    return initial_mask_[x];
}

const std::string& StateMachine::state_name(StateId x) const {
    check_state(x);
    return states_[x];
}
const std::string& StateMachine::input_name(InputId u) const {
    check_input(u);
    return inputs_[u];
}
const std::string& StateMachine::output_name(OutputId y) const {
    check_output(y);
    return outputs_[y];
}

std::optional<StateId> StateMachine::find_state(std::string_view name) const {
    return find_in<StateId>(states_, name);
}
std::optional<InputId> StateMachine::find_input(std::string_view name) const {
    return find_in<InputId>(inputs_, name);
}
std::optional<OutputId> StateMachine::find_output(std::string_view name) const {
    return find_in<OutputId>(outputs_, name);
}

StateId StateMachine::state_id(std::string_view name) const {
    if (auto id = find_state(name)) return *id;
    throw Error(ErrorKind::UnknownState, "state '" + std::string(name) + "' is not declared");
}
InputId StateMachine::input_id(std::string_view name) const {
    if (auto id = find_input(name)) return *id;
    throw Error(ErrorKind::UnknownInput, "input '" + std::string(name) + "' is not declared");
}
OutputId StateMachine::output_id(std::string_view name) const {
    if (auto id = find_output(name)) return *id;
    throw Error(ErrorKind::UnknownOutput, "output '" + std::string(name) + "' is not declared");
}

void StateMachine::check_state(StateId x) const {
    if (x >= states_.size()) {
        throw Error(ErrorKind::UnknownState, "state index " + std::to_string(x) + " out of range");
    }
}
void StateMachine::check_input(InputId u) const {
    if (u >= inputs_.size()) {
        throw Error(ErrorKind::UnknownInput, "input index " + std::to_string(u) + " out of range");
    }
}
void StateMachine::check_output(OutputId y) const {
    if (y >= outputs_.size()) {
        throw Error(ErrorKind::UnknownOutput,
                    "output index " + std::to_string(y) + " out of range");
    }
}

bool StateMachine::operator==(const StateMachine& other) const {
    return states_ == other.states_ && inputs_ == other.inputs_ && outputs_ == other.outputs_ &&
           initial_ == other.initial_ && transitions_ == other.transitions_;
}

// -- external alphabet ------------------------------------------------------

const char* to_string(ExternalMode mode) {
    return mode == ExternalMode::OutputsOnly ? "Y" : "UxY";
}

const char* flag_token(ExternalMode mode) {
    return mode == ExternalMode::OutputsOnly ? "y" : "uy";
}

ExternalMode parse_external_mode(std::string_view token) {
    if (token == "y") return ExternalMode::OutputsOnly;
    if (token == "uy") return ExternalMode::InputOutputPairs;
    throw Error(ErrorKind::ParseError,
                "external mode must be 'y' or 'uy', got '" + std::string(token) + "'");
}

ExternalAlphabet::ExternalAlphabet(const StateMachine& machine, ExternalMode mode)
    : machine_(&machine), mode_(mode) {}

std::size_t ExternalAlphabet::size() const {
    return mode_ == ExternalMode::OutputsOnly
               ? machine_->num_outputs()
               : machine_->num_inputs() * machine_->num_outputs();
}

Symbol ExternalAlphabet::project(InputId u, OutputId y) const {
    if (mode_ == ExternalMode::OutputsOnly) return static_cast<Symbol>(y);
    return static_cast<Symbol>(u * machine_->num_outputs() + y);
}

std::string ExternalAlphabet::token(Symbol s) const {
    if (s == kDiamond) return std::string(kDiamondToken);
    auto idx = static_cast<std::size_t>(s);
    if (mode_ == ExternalMode::OutputsOnly) return machine_->output_name(static_cast<OutputId>(idx));
    auto ny = machine_->num_outputs();
    return "(" + machine_->input_name(static_cast<InputId>(idx / ny)) + "," +
           machine_->output_name(static_cast<OutputId>(idx % ny)) + ")";
}

std::optional<Symbol> ExternalAlphabet::find_token(std::string_view token) const {
    if (token == kDiamondToken) return kDiamond;
    for (std::size_t s = 0; s < size(); ++s) {
        if (this->token(static_cast<Symbol>(s)) == token) return static_cast<Symbol>(s);
    }
    return std::nullopt;
}

SymbolBridge::SymbolBridge(const StateMachine& left, const StateMachine& right,
                           ExternalMode mode) {
    ExternalAlphabet wl(left, mode);
    ExternalAlphabet wr(right, mode);
    std::set<std::string> lt;
    std::set<std::string> rt;
    for (std::size_t s = 0; s < wl.size(); ++s) lt.insert(wl.token(static_cast<Symbol>(s)));
    for (std::size_t s = 0; s < wr.size(); ++s) rt.insert(wr.token(static_cast<Symbol>(s)));
    if (lt != rt || lt.empty()) {
        throw Error(ErrorKind::IncompatibleAlphabets,
                    std::string("projections onto ") + to_string(mode) + " differ or are empty");
    }
    right_to_left_.resize(wr.size());
    for (std::size_t s = 0; s < wr.size(); ++s) {
        right_to_left_[s] = *wl.find_token(wr.token(static_cast<Symbol>(s)));
    }
}

// -- enabled sets -----------------------------------------------------------

std::vector<OutputId> admissible_outputs(const StateMachine& q, StateId x) {
    std::vector<bool> seen(q.num_outputs(), false);
    for (const auto& t : q.outgoing(x)) seen[t.output] = true;
    std::vector<OutputId> out;
    for (OutputId y = 0; y < seen.size(); ++y) {
        if (seen[y]) out.push_back(y);
    }
    return out;
}

std::vector<StateId> post_states(const StateMachine& q, StateId x, std::optional<InputId> u) {
    if (u) q.check_input(*u);
    std::vector<bool> seen(q.num_states(), false);
    for (const auto& t : q.outgoing(x)) {
        if (!u || t.input == *u) seen[t.to] = true;
    }
    std::vector<StateId> out;
    for (StateId s = 0; s < seen.size(); ++s) {
        if (seen[s]) out.push_back(s);
    }
    return out;
}

std::vector<InputId> enabled_inputs(const StateMachine& q, StateId x) {
    std::vector<bool> seen(q.num_inputs(), false);
    for (const auto& t : q.outgoing(x)) seen[t.input] = true;
    std::vector<InputId> out;
    for (InputId u = 0; u < seen.size(); ++u) {
        if (seen[u]) out.push_back(u);
    }
    return out;
}

Symbol project_external(const StateMachine& q, InputId u, OutputId y, ExternalMode mode) {
    q.check_input(u);
    q.check_output(y);
    return ExternalAlphabet(q, mode).project(u, y);
}

ValidationReport validate(const StateMachine& q) {
    ValidationReport r;
    const auto n = q.num_states();

    r.output_deterministic = true;
    for (StateId x = 0; x < n; ++x) {
        if (admissible_outputs(q, x).size() > 1) {
            r.output_deterministic = false;
            break;
        }
    }

    // delta must equal the product { (x,u,y,x') | x' in F(x,u), y in H(x) }.
    r.separable = true;
    for (StateId x = 0; x < n && r.separable; ++x) {
        auto outs = admissible_outputs(q, x);
        for (InputId u : enabled_inputs(q, x)) {
            for (StateId to : post_states(q, x, u)) {
                for (OutputId y : outs) {
                    Transition t{x, u, y, to};
                    auto span = q.outgoing(x);
                    if (!std::binary_search(span.begin(), span.end(), t)) {
                        r.separable = false;
                        r.findings.push_back("not separable: missing (" + q.state_name(x) + "," +
                                             q.input_name(u) + "," + q.output_name(y) + "," +
                                             q.state_name(to) + ")");
                        break;
                    }
                }
                if (!r.separable) break;
            }
            if (!r.separable) break;
        }
    }

    std::vector<bool> seen(n, false);
    std::deque<StateId> work;
    for (StateId x : q.initial()) {
        seen[x] = true;
        work.push_back(x);
    }
    while (!work.empty()) {
        StateId x = work.front();
        work.pop_front();
        for (const auto& t : q.outgoing(x)) {
            if (!seen[t.to]) {
                seen[t.to] = true;
                work.push_back(t.to);
            }
        }
    }
    r.reachable = true;
    r.live = true;
    for (StateId x = 0; x < n; ++x) {
        if (!seen[x]) {
            r.reachable = false;
            r.findings.push_back("unreachable state " + q.state_name(x));
        }
        if (q.outgoing(x).empty()) {
            r.live = false;
            r.findings.push_back("no outgoing transition at " + q.state_name(x));
        }
    }
    if (n == 0) {
        r.reachable = false;
        r.live = false;
        r.findings.push_back("empty state set");
    }
    r.accepted = r.separable && r.reachable && r.live;
    return r;
}

void require_accepted(const StateMachine& q) {
    auto report = validate(q);
    if (!report.accepted) {
        std::string msg = "machine violates the standing assumptions";
        for (const auto& f : report.findings) msg += "; " + f;
        throw Error(ErrorKind::NotAccepted, msg);
    }
}

void require_live_reachable(const StateMachine& q) {
    auto report = validate(q);
    if (!report.live || !report.reachable) {
        std::string msg = "machine is not live and reachable";
        for (const auto& f : report.findings) msg += "; " + f;
        throw Error(ErrorKind::NotAccepted, msg);
    }
}

}  // namespace lcabs
