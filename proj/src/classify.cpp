#include "wordeq/classify.hpp"

#include <map>

namespace wordeq {

namespace {

PatternReport scan(const Pattern& p, std::size_t base) {
    PatternReport r;
    std::map<VarId, std::size_t> first;
    std::map<VarId, std::size_t> last;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (!p[i].is_variable()) continue;
        VarId x = p[i].var();
        auto it = last.find(x);
        if (it == last.end()) {
            first[x] = i;
        } else {
            if (r.regular) {
                r.regular = false;
                r.regular_witness = OccurrencePair{base + it->second, base + i};
            }
            // Any other variable strictly between the previous occurrence
            // of x and this one breaks the non-cross property.
            if (r.non_cross) {
                for (std::size_t j = it->second + 1; j < i; ++j) {
                    if (p[j].is_variable() && p[j].var() != x) {
                        r.non_cross = false;
                        r.non_cross_witness = OccurrencePair{base + it->second, base + j};
                        break;
                    }
                }
            }
        }
        last[x] = i;
    }
    return r;
}

// Block order of variables (first occurrence order). Meaningful for
// non-cross patterns, where every variable forms one contiguous block.
std::vector<std::pair<VarId, std::size_t>> block_order(const Pattern& p) {
    std::vector<std::pair<VarId, std::size_t>> out;
    std::map<VarId, bool> seen;
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i].is_variable() && !seen[p[i].var()]) {
            seen[p[i].var()] = true;
            out.emplace_back(p[i].var(), i);
        }
    return out;
}

}  // namespace

PatternReport classify_pattern(const Pattern& p) { return scan(p, 0); }

ClassReport classify(const Equation& eq) {
    ClassReport r;
    PatternReport l = scan(eq.lhs, 0);
    PatternReport rr = scan(eq.rhs, eq.lhs.size());
    r.regular = l.regular && rr.regular;
    r.non_cross = l.non_cross && rr.non_cross;
    r.regular_witness = l.regular_witness ? l.regular_witness : rr.regular_witness;
    r.non_cross_witness = l.non_cross_witness ? l.non_cross_witness : rr.non_cross_witness;

    // Quadratic: at most two occurrences in lhs·rhs.
    r.quadratic = true;
    std::map<VarId, std::vector<std::size_t>> where;
    for (std::size_t i = 0; i < eq.lhs.size() + eq.rhs.size(); ++i) {
        const Symbol& s = i < eq.lhs.size() ? eq.lhs[i] : eq.rhs[i - eq.lhs.size()];
        if (s.is_variable()) where[s.var()].push_back(i);
    }
    std::vector<VarId> repeated;
    for (const auto& [x, idx] : where) {
        if (idx.size() > 1) repeated.push_back(x);
        if (idx.size() > 2 && r.quadratic) {
            r.quadratic = false;
            r.quadratic_witness = OccurrencePair{idx[0], idx[1]};
            r.quadratic_third = idx[2];
        }
    }

    if (r.regular || r.non_cross) {
        auto lo = block_order(eq.lhs);
        auto ro = block_order(eq.rhs);
        std::map<VarId, std::size_t> rpos;
        for (std::size_t i = 0; i < ro.size(); ++i) rpos[ro[i].first] = i;
        std::vector<std::pair<VarId, std::size_t>> shared;
        for (const auto& e : lo)
            if (rpos.count(e.first)) shared.push_back(e);
        bool ordered = true;
        for (std::size_t i = 0; i + 1 < shared.size() && ordered; ++i) {
            // Shared variables in lhs order must have increasing rhs order;
            // checking adjacent pairs suffices for a total order.
            if (rpos[shared[i].first] > rpos[shared[i + 1].first]) {
                ordered = false;
                r.ordered_witness = OccurrencePair{shared[i].second, shared[i + 1].second};
            }
        }
        r.ordered = ordered;
    }

    if (r.non_cross && repeated.size() == 1) r.one_repeated_var = repeated.front();
    return r;
}

ClassDMembership class_d_membership(const Equation& eq) {
    ClassReport r = classify(eq);
    ClassDMembership m;
    if (!r.non_cross) return m;
    std::size_t repeated = 0;
    std::optional<VarId> which;
    std::map<VarId, std::size_t> total = occurrences(eq.lhs);
    for (const auto& [x, n] : occurrences(eq.rhs)) total[x] += n;
    for (const auto& [x, n] : total)
        if (n > 1) {
            ++repeated;
            which = x;
        }
    if (repeated > 1) return m;
    m.member = true;
    m.repeated = which;
    return m;
}

std::optional<VarId> is_class_d(const Equation& eq) { return class_d_membership(eq).repeated; }

}  // namespace wordeq
