#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "wordeq/terms.hpp"

namespace wordeq {

/// Pair of symbol indices into lhs·rhs (0-based) that violates a property.
using OccurrencePair = std::pair<std::size_t, std::size_t>;

struct PatternReport {
    bool regular = true;
    bool non_cross = true;
    std::optional<OccurrencePair> regular_witness;
    /// (first occurrence of x, occurrence of y strictly between two x's).
    std::optional<OccurrencePair> non_cross_witness;
};

PatternReport classify_pattern(const Pattern& p);

struct ClassReport {
    bool regular = false;
    bool non_cross = false;
    /// Only defined when the equation is regular or non-cross.
    std::optional<bool> ordered;
    bool quadratic = false;
    /// The unique variable with more than one occurrence in lhs·rhs, if the
    /// equation is non-cross and exactly one such variable exists.
    std::optional<VarId> one_repeated_var;

    std::optional<OccurrencePair> regular_witness;
    std::optional<OccurrencePair> non_cross_witness;
    /// Occurrences of x in lhs and of y in lhs such that the order of the
    /// shared variables x, y flips between the sides.
    std::optional<OccurrencePair> ordered_witness;
    /// Three occurrence indices would be needed; the first two suffice to
    /// locate the offender, the third is in `quadratic_third`.
    std::optional<OccurrencePair> quadratic_witness;
    std::optional<std::size_t> quadratic_third;

    bool regular_ordered() const { return regular && ordered.value_or(false); }
};

ClassReport classify(const Equation& eq);

/// Class D: non-cross sides, at most one variable repeated in lhs·rhs.
struct ClassDMembership {
    bool member = false;
    std::optional<VarId> repeated;  // empty when no variable repeats
};

ClassDMembership class_d_membership(const Equation& eq);

/// The repeated variable when the equation is in class D with exactly one
/// repeated variable; absent otherwise.
std::optional<VarId> is_class_d(const Equation& eq);

}  // namespace wordeq
