#pragma once

// Deterministic finite automata used as regular constraints on variables.

#include <map>
#include <tuple>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wordeq/terms.hpp"

namespace wordeq {

/// States are numbered 0..size()-1. Missing transitions lead to an implicit
/// rejecting sink.
class Dfa {
public:
    static constexpr int dead = -1;

    Dfa() = default;

    /// Text format, one item per line ('//' comments allowed):
    ///   states: q0 q1 ...
    ///   initial: q0
    ///   accepting: q1 ...        (may be empty)
    ///   q0,a->q1
    static Dfa parse(std::string_view text);

    /// Builds a DFA from explicit tables; states are named q0, q1, ...
    static Dfa from_table(std::size_t states, std::size_t initial, std::vector<std::size_t> accepting,
                          const std::vector<std::tuple<std::size_t, char, std::size_t>>& transitions);

    std::size_t size() const noexcept { return names_.size(); }
    int initial() const noexcept { return initial_; }
    bool accepting(int q) const { return q != dead && accepting_[static_cast<std::size_t>(q)]; }
    int step(int q, char c) const;
    bool accepts(std::string_view w) const;

    /// Letters used on at least one transition.
    const std::string& letters() const noexcept { return letters_; }

    /// False when no accepting state is reachable from q.
    bool live(int q) const { return q != dead && live_[static_cast<std::size_t>(q)]; }

    const std::vector<std::string>& state_names() const noexcept { return names_; }

    /// Regular expression for the accepted language in SMT-LIB re syntax.
    std::string to_smtlib_regex() const;

private:
    void finish();

    std::vector<std::string> names_;
    int initial_ = 0;
    std::vector<bool> accepting_;
    std::vector<std::map<char, int>> delta_;
    std::vector<bool> live_;
    std::string letters_;
};

using Constraints = std::map<VarId, Dfa>;

/// Constraint file: lines "X<n>: <path>"; relative paths are resolved
/// against the constraint file's directory.
Constraints load_constraints(const std::string& path);

}  // namespace wordeq
