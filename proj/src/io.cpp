#include "lcabs/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace lcabs {

namespace {

using nlohmann::ordered_json;

std::vector<std::string> string_array(const ordered_json& doc, const char* key) {
    if (!doc.contains(key)) throw Error(ErrorKind::ParseError, std::string("missing key '") + key + "'");
    const auto& arr = doc.at(key);
    if (!arr.is_array()) throw Error(ErrorKind::ParseError, std::string("'") + key + "' must be an array");
    std::vector<std::string> out;
    for (const auto& item : arr) {
        if (!item.is_string()) {
            throw Error(ErrorKind::ParseError, std::string("'") + key + "' must contain strings");
        }
        out.push_back(item.get<std::string>());
    }
    return out;
}

std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

}  // namespace

MachineFile parse_machine_json(const std::string& text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::ParseError, e.what());
    }
    if (!doc.is_object()) throw Error(ErrorKind::ParseError, "machine file must be a JSON object");

    auto states = string_array(doc, "states");
    auto inputs = string_array(doc, "inputs");
    auto outputs = string_array(doc, "outputs");
    auto initial = string_array(doc, "initial");

    if (!doc.contains("transitions") || !doc.at("transitions").is_array()) {
        throw Error(ErrorKind::ParseError, "'transitions' must be an array");
    }
    std::vector<std::vector<std::string>> rows;
    for (const auto& row : doc.at("transitions")) {
        if (!row.is_array() || row.size() != 4) {
            throw Error(ErrorKind::ParseError, "each transition must be a 4-element array");
        }
        std::vector<std::string> parts;
        for (const auto& item : row) {
            if (!item.is_string()) throw Error(ErrorKind::ParseError, "transition entries must be strings");
            parts.push_back(item.get<std::string>());
        }
        rows.push_back(std::move(parts));
    }

    MachineFile file;
    if (doc.contains("external")) {
        if (!doc.at("external").is_string()) throw Error(ErrorKind::ParseError, "'external' must be a string");
        file.mode = parse_external_mode(doc.at("external").get<std::string>());
    }
    file.machine = StateMachine::from_names(std::move(states), std::move(inputs), std::move(outputs),
                                            initial, rows);
    return file;
}

MachineFile load_machine_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::ParseError, "cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_machine_json(buf.str());
}

std::string machine_to_json(const StateMachine& q, ExternalMode mode) {
    ordered_json doc;
    doc["states"] = q.states();
    doc["inputs"] = q.inputs();
    doc["outputs"] = q.outputs();
    std::vector<std::string> init;
    for (StateId x : q.initial()) init.push_back(q.state_name(x));
    doc["initial"] = init;
    auto rows = ordered_json::array();
    for (const auto& t : q.transitions()) {
        rows.push_back({q.state_name(t.from), q.input_name(t.input), q.output_name(t.output),
                        q.state_name(t.to)});
    }
    doc["transitions"] = rows;
    doc["external"] = flag_token(mode);
    return doc.dump(2) + "\n";
}

std::string machine_to_dot(const StateMachine& q, const std::string& graph_name) {
    std::ostringstream out;
    out << "digraph \"" << dot_escape(graph_name) << "\" {\n  rankdir=LR;\n";
    for (StateId x = 0; x < q.num_states(); ++x) {
        out << "  \"" << dot_escape(q.state_name(x)) << "\" [shape="
            << (q.is_initial(x) ? "doublecircle" : "circle") << "];\n";
    }
    for (const auto& t : q.transitions()) {
        out << "  \"" << dot_escape(q.state_name(t.from)) << "\" -> \""
            << dot_escape(q.state_name(t.to)) << "\" [label=\"" << dot_escape(q.input_name(t.input))
            << "/" << dot_escape(q.output_name(t.output)) << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorKind::ParseError, "cannot write '" + path + "'");
    out << content;
}

}  // namespace lcabs
