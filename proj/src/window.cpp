#include "lcabs/window.hpp"

#include <sstream>

namespace lcabs {

bool is_valid_window(const Window& w) {
    bool seen_symbol = false;
    for (Symbol s : w) {
        if (s == kDiamond) {
            if (seen_symbol) return false;
        } else if (s < 0) {
            return false;
        } else {
            seen_symbol = true;
        }
    }
    return true;
}

void check_window(const Window& w, const ExternalAlphabet& alphabet) {
    if (!is_valid_window(w)) {
        throw Error(ErrorKind::InvalidWindow, "diamonds must form a prefix of the window");
    }
    for (Symbol s : w) {
        if (s != kDiamond && static_cast<std::size_t>(s) >= alphabet.size()) {
            throw Error(ErrorKind::InvalidWindow,
                        "symbol index " + std::to_string(s) + " outside the external alphabet");
        }
    }
}

Window diamonds(std::size_t n) { return Window(n, kDiamond); }

Window slice(const Window& w, std::size_t first, std::size_t count) {
    if (first + count > w.size()) {
        throw Error(ErrorKind::InvalidWindow, "restriction outside the window");
    }
    return Window(w.begin() + static_cast<std::ptrdiff_t>(first),
                  w.begin() + static_cast<std::ptrdiff_t>(first + count));
}

Window concat(const Window& a, const Window& b) {
    Window out;
    out.reserve(a.size() + b.size());
    out.insert(out.end(), a.begin(), a.end());
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

std::string render_window(const Window& w, const ExternalAlphabet& alphabet,
                          const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += sep;
        out += alphabet.token(w[i]);
    }
    return out;
}

std::string render_cell(const std::vector<Window>& cell, const ExternalAlphabet& alphabet) {
    std::string out;
    for (std::size_t i = 0; i < cell.size(); ++i) {
        if (i) out += '|';
        out += render_window(cell[i], alphabet);
    }
    return out;
}

Window parse_window(const std::string& text, const ExternalAlphabet& alphabet, char sep) {
    Window w;
    if (text.empty()) return w;
    std::size_t start = 0;
    while (true) {
        auto end = text.find(sep, start);
        auto token = text.substr(start, end == std::string::npos ? std::string::npos : end - start);
        auto sym = alphabet.find_token(token);
        if (!sym) throw Error(ErrorKind::InvalidWindow, "unknown symbol '" + token + "'");
        w.push_back(*sym);
        if (end == std::string::npos) break;
        start = end + 1;
    }
    check_window(w, alphabet);
    return w;
}

std::string serialize(const DominoSet& set, const ExternalAlphabet& alphabet) {
    std::string out;
    for (const auto& w : set.windows) {
        out += render_window(w, alphabet, " ");
        out += '\n';
    }
    return out;
}

IntervalSpec IntervalSpec::make(std::size_t l, std::size_t m) {
    if (l < 1) throw Error(ErrorKind::InvalidSpec, "l must be at least 1");
    if (m > l) {
        throw Error(ErrorKind::InvalidSpec,
                    "m=" + std::to_string(m) + " exceeds l=" + std::to_string(l));
    }
    return IntervalSpec{l, m};
}

}  // namespace lcabs
