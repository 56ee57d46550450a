#pragma once

// Length-vector enumeration solver. Complete for regular-ordered equations.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "wordeq/automaton.hpp"
#include "wordeq/fillpos.hpp"
#include "wordeq/terms.hpp"

namespace wordeq {

enum class Status { Sat, Unsat, Unknown };

const char* to_string(Status s);

struct SolveOptions {
    /// Per-variable image length bound. Defaults to |lhs·rhs|-1 for
    /// regular-ordered equations and is mandatory otherwise.
    std::optional<std::size_t> per_var_bound;
    std::optional<char> default_letter;
    bool emit_stats = true;
    unsigned jobs = 1;
    /// Give up (Unknown) after this many balanced vectors.
    std::optional<std::uint64_t> max_vectors;
    /// Letter completions tried per vector under constraints.
    std::size_t completion_cap = 1u << 12;
    /// Per-variable bound under constraints when the same-variables bound
    /// does not apply and per_var_bound is not set.
    std::size_t constraint_cap = 12;
};

struct SolveStats {
    std::uint64_t vectors_tried = 0;
    double total_time = 0.0;  // seconds
    std::optional<std::size_t> first_sat_total_length;
    std::uint64_t completions_tried = 0;
    bool cap_hit = false;
};

struct SolveResult {
    Status status = Status::Unknown;
    std::optional<Substitution> h;
    std::size_t total_length = 0;  // |h(lhs)| when Sat
    std::size_t free_classes = 0;
    std::size_t bound_used = 0;    // per-variable bound actually enumerated
    std::string engine = "generic";
    std::string note;
    SolveStats stats;
};

/// |lhs·rhs|
std::size_t equation_size(const Equation& eq);

/// Calls `visit` on every length vector (variables in ascending id order)
/// with entries in [0, bound] and equal side lengths, in ascending total
/// length then lexicographic order. `visit` returns false to stop.
/// Returns false if stopped early.
bool enumerate_length_vectors(const Equation& eq, std::size_t bound,
                              const std::function<bool(const LengthAssignment&, std::size_t total)>& visit,
                              std::optional<std::size_t> max_total = std::nullopt);

SolveResult solve(const Equation& eq, const SolveOptions& opts = {});

/// As solve, with each constrained variable's image required to be accepted
/// by its DFA. Throws InvalidArgument if a DFA misses a letter of the
/// equation alphabet.
SolveResult solve_with_constraints(const Equation& eq, const Constraints& constraints, const SolveOptions& opts = {});

}  // namespace wordeq
