#pragma once

#include <string>

#include "lcabs/machine.hpp"
#include "lcabs/salca.hpp"

namespace lcabs {

struct MachineFile {
    StateMachine machine;
    ExternalMode mode = ExternalMode::OutputsOnly;
};

/// Parses the JSON machine format. Throws ParseError (or the more specific
/// Unknown* kinds for undeclared references).
MachineFile parse_machine_json(const std::string& text);
MachineFile load_machine_file(const std::string& path);

/// Serializes with two-space indentation; transitions in canonical order.
std::string machine_to_json(const StateMachine& q, ExternalMode mode);

/// Graphviz rendering: initial states double-circled, edges labelled "u/y".
std::string machine_to_dot(const StateMachine& q, const std::string& graph_name = "machine");

void write_text_file(const std::string& path, const std::string& content);

}  // namespace lcabs
