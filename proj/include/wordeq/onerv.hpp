#pragma once

// Satisfiability for non-cross equations with one repeated variable.

#include <optional>
#include <string>
#include <vector>

#include "wordeq/solver.hpp"
#include "wordeq/terms.hpp"

namespace wordeq {

/// One side as prefix · x b_1 x ... b_{c-1} x · suffix. With c = 0 the
/// whole side is in `prefix`. prefix and suffix do not contain x.
struct ClassDSide {
    Pattern prefix;
    std::vector<std::string> blocks;
    std::size_t copies = 0;
    Pattern suffix;

    bool has_wildcards() const;
};

struct ClassDForm {
    std::optional<VarId> x;
    ClassDSide lhs;
    ClassDSide rhs;
};

/// Decomposition of a class-D equation in which at least one side holds no
/// single-occurring variable. Absent when the equation is not class D or
/// both sides contain single-occurring variables.
std::optional<ClassDForm> to_class_d_form(const Equation& eq);

/// Inverse of the decomposition.
Pattern render_side(const ClassDSide& side, std::optional<VarId> x);

/// Matches a regular pattern against a word. Leftmost greedy placement of
/// the constant blocks; complete for regular patterns. Throws
/// InvalidArgument if p repeats a variable.
std::optional<Substitution> match_regular_pattern(const Pattern& p, std::string_view w);

struct OneRvOptions {
    /// Largest |h(x)| tried; defaults to 8n^2 with n = |lhs·rhs|.
    std::optional<std::size_t> bound;
    std::optional<char> default_letter;
    /// Try every offset at every |h(x)|, disabling the offset window.
    bool exhaustive_offsets = false;
};

std::size_t default_onerv_bound(const Equation& eq);

/// Throws InvalidArgument if eq is not in class D.
SolveResult solve_one_rv(const Equation& eq, const OneRvOptions& opts = {});

/// Class D with single-occurring variables on both sides.
SolveResult delegate_mixed(const Equation& eq, const OneRvOptions& opts = {});

/// Self-check of the offset window used for long images of x. For every
/// |h(x)| in [ell_from, ell_to] and every offset the engine skips, asserts
/// that the configuration is contradictory or shortens: h(x) has a forced
/// period p and deleting one block of p letters from every copy of h(x)
/// yields a configuration with |h(x)| - p. Returns a description of the
/// first violation, or nothing. Equations without a window pass trivially.
std::optional<std::string> check_offset_window(const Equation& eq, std::size_t ell_from, std::size_t ell_to);

/// |h(x)| from which the offset window applies.
std::size_t offset_window_start(const Equation& eq);

}  // namespace wordeq
