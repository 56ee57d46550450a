#pragma once

// Core data model: constants, variables, patterns, equations, substitutions.

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "wordeq/error.hpp"

namespace wordeq {

using VarId = unsigned;

/// One letter of a pattern: either a constant or a variable X<id>.
class Symbol {
public:
    static Symbol constant(char letter) { return Symbol(letter, 0); }
    static Symbol variable(VarId id) { return Symbol('\0', id); }

    bool is_variable() const noexcept { return var_ != 0; }
    bool is_constant() const noexcept { return var_ == 0; }
    char letter() const noexcept { return letter_; }
    VarId var() const noexcept { return var_; }

    friend bool operator==(const Symbol&, const Symbol&) = default;
    friend auto operator<=>(const Symbol&, const Symbol&) = default;

private:
    Symbol(char letter, VarId var) : letter_(letter), var_(var) {}

    char letter_;
    VarId var_;  // 0 for constants; variable ids are positive
};

using Pattern = std::vector<Symbol>;

/// Ordered, duplicate-free set of constant letters ([a-z] and '#').
class Alphabet {
public:
    /// Throws InvalidArgument when empty or when a letter is outside [a-z#].
    explicit Alphabet(std::string_view letters);

    const std::string& letters() const noexcept { return letters_; }
    char first() const noexcept { return letters_.front(); }
    std::size_t size() const noexcept { return letters_.size(); }
    bool contains(char c) const noexcept;

    Alphabet merged(const Alphabet& other) const;

    friend bool operator==(const Alphabet&, const Alphabet&) = default;

private:
    std::string letters_;
};

bool is_constant_letter(char c) noexcept;

struct Equation {
    Pattern lhs;
    Pattern rhs;
    Alphabet alphabet;

    /// Validates non-empty sides and that every constant is in `alphabet`.
    Equation(Pattern lhs, Pattern rhs, Alphabet alphabet);

    /// Alphabet defaults to the constants present (or {a} if none).
    Equation(Pattern lhs, Pattern rhs);

    friend bool operator==(const Equation&, const Equation&) = default;
};

/// Variable -> constant word. Empty images are allowed.
using Substitution = std::map<VarId, std::string>;

Equation parse_equation(std::string_view text);

/// Parses an equation file: one equation per line, blank and comment-only
/// lines skipped. Errors carry the 1-based line number.
std::vector<Equation> parse_equations(std::string_view text);

std::string render_pattern(const Pattern& p);
std::string render_equation(const Equation& eq);

/// "X1=ab,X2=" (empty image allowed). Whitespace around tokens ignored.
Substitution parse_substitution(std::string_view text);
std::string render_substitution(const Substitution& h);

std::set<VarId> variables(const Pattern& p);
std::set<VarId> variables(const Equation& eq);

/// Occurrence counts per variable.
std::map<VarId, std::size_t> occurrences(const Pattern& p);

std::size_t constant_count(const Pattern& p);

/// Constants present in the pattern, in alphabet order.
std::string constants_of(const Pattern& p);

/// Homomorphic image of `p`. Throws UnboundVariableError listing every
/// variable of `p` missing from `h`.
std::string apply_substitution(const Pattern& p, const Substitution& h);

bool is_solution(const Equation& eq, const Substitution& h);

/// |h(lhs)|, i.e. the length of the solution word.
std::size_t solution_length(const Equation& eq, const Substitution& h);

std::ostream& operator<<(std::ostream& os, const Equation& eq);

}  // namespace wordeq
