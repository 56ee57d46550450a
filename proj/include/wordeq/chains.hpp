#pragma once

// Position sequences of quadratic equations and square-based shortening.

#include <optional>
#include <string>
#include <vector>

#include "wordeq/terms.hpp"

namespace wordeq {

/// (symbol, z, d): z is the 1-based occurrence index of `symbol` in lhs·rhs,
/// d the 1-based offset into its image (always 1 for constants).
struct Position {
    Symbol symbol = Symbol::constant('a');
    std::size_t z = 1;
    std::size_t d = 1;

    bool similar(const Position& o) const { return symbol == o.symbol && z == o.z; }
    friend bool operator==(const Position&, const Position&) = default;
};

std::string render_position(const Position& p);

struct Sequence {
    Position anchor;
    std::vector<Position> entries;  // entries.front() == anchor
};

std::string render_sequence(const Sequence& s);

/// One sequence per anchor (terminal or single-occurring variable position);
/// of the two sequences joining the same pair of anchors only the one whose
/// anchor comes first in lhs·rhs is kept. Sequences are ordered by anchor.
/// Throws InvalidArgument if eq is not quadratic or h is not a solution.
std::vector<Sequence> build_sequences(const Equation& eq, const Substitution& h);

/// Entries [start, start+half) and [start+half, start+2*half) are similar and
/// d advances by `shift` across every pair. `start` is 1-based.
struct Square {
    std::size_t start = 1;
    std::size_t half = 1;
    long shift = 0;
    std::vector<Position> window;  // the 2*half entries
};

/// Minimal half-length first, then smallest start.
std::optional<Square> find_square(const Sequence& seq);

/// The removed factor: h(x_1)[d_1 .. d_1+|C|) for C > 0, mirrored for C < 0.
std::string square_factor(const Square& sq, const Substitution& h);

/// Removes the square's blocks from the images. Throws InvalidArgument for a
/// degenerate square and InternalError if the result is not a strictly
/// shorter solution.
Substitution shorten(const Equation& eq, const Substitution& h, const Square& sq);

struct ReductionStep {
    Square square;
    std::size_t sequence_index = 0;
    Substitution before;
    Substitution after;
};

struct Reduction {
    Substitution result;
    std::vector<ReductionStep> trace;
};

/// Applies find_square + shorten until every sequence is square-free.
Reduction reduce_via_squares(const Equation& eq, const Substitution& h);

}  // namespace wordeq
