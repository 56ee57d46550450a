#pragma once

// Fixed-length satisfiability by filling the positions.

#include <map>
#include <optional>
#include <variant>
#include <vector>

#include "wordeq/terms.hpp"
#include "wordeq/union_find.hpp"

namespace wordeq {

using LengthAssignment = std::map<VarId, std::size_t>;

/// Cells are (variable, offset) pairs followed by one anchor per letter
/// present in the equation. Offsets here are 0-based.
class PositionGraph {
public:
    PositionGraph(const Equation& eq, const LengthAssignment& la);

    std::size_t cell_count() const noexcept { return cell_count_; }
    std::size_t image_length() const noexcept { return image_length_; }
    std::size_t unions() const noexcept { return unions_; }

    std::size_t var_cell(VarId x, std::size_t offset) const;
    std::size_t anchor_cell(char c) const;

    /// Letter forced on the class of `cell`, or '\0'.
    char forced_letter(std::size_t cell);
    std::size_t class_of(std::size_t cell) { return uf_.find(cell); }

    bool contradictory() const noexcept { return conflict_.has_value(); }
    /// The first pair of cells whose classes carried distinct letters when united.
    std::optional<std::pair<std::size_t, std::size_t>> conflict() const { return conflict_; }
    std::pair<char, char> conflict_letters() const { return conflict_letters_; }

    /// Distinct root ids of classes that contain a variable cell and no
    /// letter, in order of their first variable cell.
    std::vector<std::size_t> free_classes();

    /// Builds h from per-class letters; `free_letter(root)` picks the letter
    /// for unforced classes. Throws InvalidArgument when contradictory.
    template <class Pick>
    Substitution build(Pick free_letter);

    const LengthAssignment& lengths() const noexcept { return lengths_; }
    const std::string& anchors() const noexcept { return anchors_; }

    /// Human-readable cell description, e.g. "X1[2]" (1-based) or "'a'".
    std::string describe(std::size_t cell) const;

private:
    void unite(std::size_t a, std::size_t b);

    LengthAssignment lengths_;
    std::map<VarId, std::size_t> base_;
    std::string anchors_;
    std::size_t var_cells_ = 0;
    std::size_t cell_count_ = 0;
    std::size_t image_length_ = 0;
    std::size_t unions_ = 0;
    UnionFind uf_;
    std::vector<std::size_t> lettered_;  // per root: a lettered cell or npos
    std::optional<std::pair<std::size_t, std::size_t>> conflict_;
    std::pair<char, char> conflict_letters_{'\0', '\0'};
};

struct LengthSolution {
    Substitution h;
    std::size_t free_classes = 0;
};

struct LengthMismatch {
    std::size_t lhs_length = 0;
    std::size_t rhs_length = 0;
};

struct Contradiction {
    std::pair<std::size_t, std::size_t> cells;
    std::pair<char, char> letters;
    std::string description;
};

using LengthCheck = std::variant<LengthSolution, LengthMismatch, Contradiction>;

/// Side lengths under la. Throws UnboundVariableError for missing variables.
std::pair<std::size_t, std::size_t> side_lengths(const Equation& eq, const LengthAssignment& la);

/// `default_letter` must be in the equation alphabet; defaults to its first letter.
LengthCheck check_lengths(const Equation& eq, const LengthAssignment& la,
                          std::optional<char> default_letter = std::nullopt);

/// Forced classes get their letter, free classes get `default_letter`.
Substitution derive_min_letter_solution(PositionGraph& graph, char default_letter);

template <class Pick>
Substitution PositionGraph::build(Pick free_letter) {
    if (contradictory()) throw InvalidArgument("position graph is contradictory");
    Substitution h;
    for (const auto& [x, len] : lengths_) {
        std::string w(len, '\0');
        for (std::size_t d = 0; d < len; ++d) {
            std::size_t cell = var_cell(x, d);
            char c = forced_letter(cell);
            w[d] = c ? c : free_letter(uf_.find(cell));
        }
        h[x] = std::move(w);
    }
    return h;
}

}  // namespace wordeq
