#pragma once

// 3-Partition -> programmed rewriting (REP) -> regular-ordered equations,
// plus overlapping-solution checks and witness conversions.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wordeq/terms.hpp"

namespace wordeq {

struct ThreePartitionInstance {
    std::vector<unsigned> k;

    std::size_t m() const { return k.size() / 3; }
    /// Target group sum. Throws InvalidArgument when the instance is malformed.
    unsigned s() const;
    /// Throws InvalidArgument unless |k| = 3m with m >= 1 and m divides the sum.
    void validate() const;
};

/// Whitespace-separated integers. Each value must not exceed the input
/// length in bytes, so the unary encoding stays polynomial.
ThreePartitionInstance parse_three_partition(std::string_view text);

/// Direct search for a partition into triples of equal sum. Returns the
/// group index (0-based) of each element, or nothing.
std::optional<std::vector<unsigned>> solve_three_partition(const ThreePartitionInstance& inst);

struct RepRule {
    std::string lhs;
    std::string rhs;
    friend bool operator==(const RepRule&, const RepRule&) = default;
};

struct RepInstance {
    std::string u_start;
    std::string u_end;
    std::vector<RepRule> rules;

    /// Throws InvalidArgument on letters outside [a-z] or an empty rule lhs.
    void validate() const;
    friend bool operator==(const RepInstance&, const RepInstance&) = default;
};

/// Lines "start: <word>", "end: <word>", "rule: <lhs> -> <rhs>". Blank
/// lines and lines starting with "//" are skipped.
RepInstance parse_rep(std::string_view text);
std::string render_rep(const RepInstance& inst);

struct RepWitness {
    std::vector<std::size_t> positions;  // 1-based occurrence index per step
    std::vector<std::string> intermediate;  // u_start, then the word after each step
};

RepInstance threepar_to_rep(const ThreePartitionInstance& inst);

/// Start offsets of every (possibly overlapping) occurrence of `pattern`.
std::vector<std::size_t> occurrence_offsets(std::string_view word, std::string_view pattern);

/// Replaces the `occurrence`-th (1-based) occurrence of rule.lhs.
/// Throws InvalidArgument if there are fewer occurrences.
std::string rep_apply(std::string_view word, const RepRule& rule, std::size_t occurrence);

/// Folds rep_apply over the rules. Errors name the failing step (1-based).
RepWitness rep_run(const RepInstance& inst, const std::vector<std::size_t>& positions);

enum class RepSearchStatus { Found, NoWitness, BudgetExhausted };

struct RepSearchResult {
    RepSearchStatus status = RepSearchStatus::NoWitness;
    std::optional<RepWitness> witness;
    std::size_t nodes = 0;
};

std::string to_string(RepSearchStatus s);

/// Breadth-first over occurrence choices with duplicate words merged per
/// depth. The witness returned is the lexicographically least one.
RepSearchResult rep_solve(const RepInstance& inst, std::size_t node_budget = 1'000'000);

/// x1 w1 ... xn wn x(n+1) # u_end = # u_start x1 w'1 ... xn w'n x(n+1).
Equation rep_to_equation_mu(const RepInstance& inst);

/// Every x_i of the equation above becomes x(3i-2) # x(3i-1) # x(3i).
Equation rep_to_equation(const RepInstance& inst);

struct OverlapReport {
    std::vector<std::string> v;  // v_1..v_(n+1); v_(n+1) = y_n w'_n
    std::vector<std::string> y;  // y_1..y_n
    std::vector<bool> period_ok;  // per i <= n: v_i prefix of h(x_i), h(x_i) w_i prefix of v_i^omega
    bool cond1 = false;
    bool cond2 = false;  // v_i well defined (|v_i| >= |w_i|) and a prefix of h(x_i)
    bool cond3 = false;  // y_n w'_n h(x(n+1)) = h(x(n+1)) # u_end
    bool is_solution = false;
    std::string detail;  // first failure, empty on success

    bool overlapping() const { return cond1 && cond2 && cond3; }
};

/// Throws UnboundVariableError when h misses one of x1..x(n+1).
OverlapReport check_overlapping(const RepInstance& inst, const Substitution& h);

/// Throws InvalidArgument when the positions do not reach u_end.
Substitution witness_to_overlapping(const RepInstance& inst, const RepWitness& wit);
Substitution witness_to_overlapping(const RepInstance& inst, const std::vector<std::size_t>& positions);

/// Throws InvalidArgument when h is not an overlapping solution.
RepWitness overlapping_to_witness(const RepInstance& inst, const Substitution& h);

/// Overlapping solution of the plain equation -> solution of the tripled one.
Substitution overlapping_to_tripled(const RepInstance& inst, const Substitution& h);

/// Solution of the tripled equation -> overlapping solution of the plain one.
Substitution tripled_to_overlapping(const RepInstance& inst, const Substitution& g);

}  // namespace wordeq
