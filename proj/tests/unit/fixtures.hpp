#pragma once

#include <set>
#include <string>

#include "lcabs/io.hpp"
#include "lcabs/window.hpp"

inline lcabs::StateMachine fig2() {
    return lcabs::load_machine_file(LCABS_TEST_DATA "/fig2.json").machine;
}

inline lcabs::StateMachine self_loop() {
    return lcabs::load_machine_file(LCABS_TEST_DATA "/self_loop.json").machine;
}

inline std::set<std::string> rendered(const lcabs::WindowSet& set, const lcabs::ExternalAlphabet& w) {
    std::set<std::string> out;
    for (const auto& z : set) out.insert(lcabs::render_window(z, w));
    return out;
}
