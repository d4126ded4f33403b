#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "lcabs/machine.hpp"

namespace lcabs {

/// A finite string over W extended by the diamond. Diamonds may only appear
/// as a contiguous prefix. Plain vectors compare lexicographically, and since
/// kDiamond is negative it sorts before every real symbol.
using Window = std::vector<Symbol>;
using WindowSet = std::set<Window>;

bool is_valid_window(const Window& w);
/// Throws InvalidWindow for interior diamonds or unknown symbols.
void check_window(const Window& w, const ExternalAlphabet& alphabet);

Window diamonds(std::size_t n);
Window slice(const Window& w, std::size_t first, std::size_t count);
Window concat(const Window& a, const Window& b);

/// Tokens joined by `sep`; the empty window renders as "".
std::string render_window(const Window& w, const ExternalAlphabet& alphabet,
                          const std::string& sep = ".");
/// Windows joined by "|", each rendered with ".".
std::string render_cell(const std::vector<Window>& cell, const ExternalAlphabet& alphabet);

/// Inverse of render_window for a given separator.
Window parse_window(const std::string& text, const ExternalAlphabet& alphabet,
                    char sep = '.');

/// Windows of one length with deterministic (lexicographic) iteration.
struct DominoSet {
    std::size_t length = 0;
    WindowSet windows;

    bool contains(const Window& w) const { return windows.count(w) != 0; }
    std::size_t size() const { return windows.size(); }
    bool operator==(const DominoSet&) const = default;
};

/// One line per window, symbols separated by single spaces.
std::string serialize(const DominoSet& set, const ExternalAlphabet& alphabet);

/// The interval [m-l, m-1] relative to the current time.
struct IntervalSpec {
    std::size_t l = 1;
    std::size_t m = 0;

    /// Throws InvalidSpec unless l >= 1 and m <= l.
    static IntervalSpec make(std::size_t l, std::size_t m);
    std::size_t past() const { return l - m; }
    bool operator==(const IntervalSpec&) const = default;
};

}  // namespace lcabs
