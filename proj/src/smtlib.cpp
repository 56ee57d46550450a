#include "wordeq/smtlib.hpp"

#include <vector>

namespace wordeq {

std::string smtlib_literal(const std::string& word) {
    std::string out = "\"";
    for (char c : word) {
        if (c == '#')
            out += "\\u{23}";
        else
            out += c;
    }
    return out + "\"";
}

namespace {

std::string side_term(const Pattern& p) {
    std::vector<std::string> items;
    std::string run;
    for (const Symbol& s : p) {
        if (s.is_constant()) {
            run += s.letter();
            continue;
        }
        if (!run.empty()) items.push_back(smtlib_literal(run));
        run.clear();
        items.push_back("X" + std::to_string(s.var()));
    }
    if (!run.empty()) items.push_back(smtlib_literal(run));
    if (items.empty()) return "\"\"";
    if (items.size() == 1) return items.front();
    std::string out = "(str.++";
    for (const auto& it : items) out += " " + it;
    return out + ")";
}

}  // namespace

std::string export_smtlib(const Equation& eq, const Constraints& constraints) {
    std::string out = "(set-logic QF_S)\n";
    for (VarId v : variables(eq)) out += "(declare-fun X" + std::to_string(v) + " () String)\n";
    out += "(assert (= " + side_term(eq.lhs) + " " + side_term(eq.rhs) + "))\n";
    std::string letters = "(re.union";
    for (char c : eq.alphabet.letters()) letters += " (str.to_re " + smtlib_literal(std::string(1, c)) + ")";
    letters += ")";
    if (eq.alphabet.size() == 1) letters = "(str.to_re " + smtlib_literal(eq.alphabet.letters()) + ")";
    // Solvers range over all strings; restrict variables to the equation alphabet.
    for (VarId v : variables(eq))
        out += "(assert (str.in_re X" + std::to_string(v) + " (re.* " + letters + ")))\n";
    for (const auto& [v, dfa] : constraints)
        out += "(assert (str.in_re X" + std::to_string(v) + " " + dfa.to_smtlib_regex() + "))\n";
    out += "(check-sat)\n";
    return out;
}

}  // namespace wordeq
