#pragma once

// SMT-LIB 2.6 (QF_S) export for differential runs against string solvers.

#include <string>

#include "wordeq/automaton.hpp"
#include "wordeq/terms.hpp"

namespace wordeq {

/// String literal with '#' written as the code-point escape \u{23}.
std::string smtlib_literal(const std::string& word);

/// One declaration per variable, one equality assertion, one membership
/// assertion per constraint, then (check-sat).
std::string export_smtlib(const Equation& eq, const Constraints& constraints = {});

}  // namespace wordeq
