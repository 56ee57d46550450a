#pragma once

// Brute-force ground truth for small instances.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wordeq/terms.hpp"

namespace wordeq {

struct OracleOptions {
    /// Largest image length tried per variable. Above 8 requires `force`.
    std::size_t per_var_cap = 4;
    /// Letters for variable images; defaults to the equation alphabet.
    std::optional<std::string> alphabet;
    bool find_all = false;
    /// Stop collecting after this many solutions when find_all is set.
    std::size_t max_solutions = 100000;
    /// Largest number of candidate assignments accepted without `force`.
    std::uint64_t max_space = 200'000'000;
    bool force = false;
};

struct OracleResult {
    bool sat = false;
    /// Canonical order: |h(lhs)|, then image lengths by variable id, then
    /// images lexicographically by variable id.
    std::vector<Substitution> solutions;
    std::uint64_t assignments_checked = 0;
    std::size_t cap = 0;
};

/// Throws InvalidArgument when the guards are exceeded without `force`.
OracleResult brute_solve(const Equation& eq, const OracleOptions& opts = {});

struct MinimalSolution {
    Substitution h;
    std::size_t length = 0;
};

std::optional<MinimalSolution> minimal_solution(const Equation& eq, const OracleOptions& opts = {});

}  // namespace wordeq
