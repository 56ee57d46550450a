#include "wordeq/reductions.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include "wordeq/words.hpp"

namespace wordeq {

namespace {

std::string trim(std::string_view s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

void check_word(const std::string& w, const char* what) {
    for (char c : w)
        if (c < 'a' || c > 'z')
            throw InvalidArgument(std::string(what) + " contains illegal letter '" + c + "'");
}

std::string var_image(const Substitution& h, VarId v) {
    auto it = h.find(v);
    return it == h.end() ? std::string() : it->second;
}

void require_vars(const Substitution& h, VarId count) {
    std::vector<unsigned> missing;
    for (VarId v = 1; v <= count; ++v)
        if (!h.count(v)) missing.push_back(v);
    if (!missing.empty()) throw UnboundVariableError(std::move(missing));
}

void push_word(Pattern& p, std::string_view w) {
    for (char c : w) p.push_back(Symbol::constant(c));
}

Alphabet rep_alphabet(const RepInstance& inst) {
    std::string letters = "#" + inst.u_start + inst.u_end;
    for (const auto& r : inst.rules) letters += r.lhs + r.rhs;
    return Alphabet(letters);
}

}  // namespace

// ---- 3-Partition ----------------------------------------------------------

void ThreePartitionInstance::validate() const {
    if (k.empty() || k.size() % 3 != 0)
        throw InvalidArgument("3-Partition instance needs 3m numbers with m >= 1, got " +
                              std::to_string(k.size()));
    unsigned long long sum = std::accumulate(k.begin(), k.end(), 0ULL);
    if (sum % m() != 0)
        throw InvalidArgument("3-Partition sum " + std::to_string(sum) + " is not divisible by m = " +
                              std::to_string(m()));
}

unsigned ThreePartitionInstance::s() const {
    validate();
    return static_cast<unsigned>(std::accumulate(k.begin(), k.end(), 0ULL) / m());
}

ThreePartitionInstance parse_three_partition(std::string_view text) {
    ThreePartitionInstance inst;
    std::size_t i = 0;
    while (i < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[i]))) {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
        std::string_view tok = text.substr(i, j - i);
        unsigned value = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc() || ptr != tok.data() + tok.size())
            throw ParseError("not a nonnegative integer: '" + std::string(tok) + "'", 1, i + 1);
        if (value > text.size())
            throw ParseError("value " + std::to_string(value) + " exceeds the input length " +
                                 std::to_string(text.size()) + " (numbers are taken in unary)",
                             1, i + 1);
        inst.k.push_back(value);
        i = j;
    }
    inst.validate();
    return inst;
}

std::optional<std::vector<unsigned>> solve_three_partition(const ThreePartitionInstance& inst) {
    const unsigned s = inst.s();
    const std::size_t m = inst.m();
    std::vector<unsigned> order(inst.k.size());
    std::iota(order.begin(), order.end(), 0u);
    std::sort(order.begin(), order.end(), [&](unsigned a, unsigned b) { return inst.k[a] > inst.k[b]; });

    std::vector<unsigned> group(inst.k.size());
    std::vector<unsigned> sum(m, 0), size(m, 0);
    auto rec = [&](auto&& self, std::size_t idx) -> bool {
        if (idx == order.size()) return true;
        unsigned e = order[idx];
        for (std::size_t g = 0; g < m; ++g) {
            if (size[g] == 3 || sum[g] + inst.k[e] > s) continue;
            bool empty = size[g] == 0;
            group[e] = static_cast<unsigned>(g);
            sum[g] += inst.k[e];
            ++size[g];
            if (self(self, idx + 1)) return true;
            sum[g] -= inst.k[e];
            --size[g];
            if (empty) break;  // empty groups are interchangeable
        }
        return false;
    };
    if (!rec(rec, 0)) return std::nullopt;
    return group;
}

// ---- REP instances --------------------------------------------------------

void RepInstance::validate() const {
    check_word(u_start, "start word");
    check_word(u_end, "end word");
    for (std::size_t i = 0; i < rules.size(); ++i) {
        if (rules[i].lhs.empty())
            throw InvalidArgument("rule " + std::to_string(i + 1) + " has an empty left side");
        check_word(rules[i].lhs, "rule left side");
        check_word(rules[i].rhs, "rule right side");
    }
}

RepInstance parse_rep(std::string_view text) {
    RepInstance inst;
    bool have_start = false, have_end = false;
    std::istringstream in{std::string(text)};
    std::string raw;
    std::size_t line = 0;
    while (std::getline(in, raw)) {
        ++line;
        std::string l = trim(raw);
        if (l.empty() || l.rfind("//", 0) == 0) continue;
        auto colon = l.find(':');
        if (colon == std::string::npos) throw ParseError("expected 'start:', 'end:' or 'rule:'", line, 1);
        std::string key = trim(std::string_view(l).substr(0, colon));
        std::string value = trim(std::string_view(l).substr(colon + 1));
        auto word = [&](const std::string& w) {
            for (std::size_t i = 0; i < w.size(); ++i)
                if (w[i] < 'a' || w[i] > 'z')
                    throw ParseError(std::string("illegal letter '") + w[i] + "'", line, 0);
            return w;
        };
        if (key == "start") {
            if (have_start) throw ParseError("duplicate start line", line, 1);
            inst.u_start = word(value);
            have_start = true;
        } else if (key == "end") {
            if (have_end) throw ParseError("duplicate end line", line, 1);
            inst.u_end = word(value);
            have_end = true;
        } else if (key == "rule") {
            auto arrow = value.find("->");
            if (arrow == std::string::npos) throw ParseError("rule needs '->'", line, 0);
            RepRule r{word(trim(std::string_view(value).substr(0, arrow))),
                      word(trim(std::string_view(value).substr(arrow + 2)))};
            if (r.lhs.empty()) throw ParseError("rule left side must be non-empty", line, 0);
            inst.rules.push_back(std::move(r));
        } else {
            throw ParseError("unknown key '" + key + "'", line, 1);
        }
    }
    if (!have_start || !have_end) throw ParseError("missing start or end line", line, 0);
    return inst;
}

std::string render_rep(const RepInstance& inst) {
    std::string out = "start: " + inst.u_start + "\nend: " + inst.u_end + "\n";
    for (const auto& r : inst.rules) out += "rule: " + r.lhs + " -> " + r.rhs + "\n";
    return out;
}

RepInstance threepar_to_rep(const ThreePartitionInstance& inst) {
    const unsigned s = inst.s();
    RepInstance rep;
    rep.u_start.assign(inst.m(), 'b');
    std::string block = std::string(s, 'a') + "bccc";
    for (std::size_t i = 0; i < inst.m(); ++i) rep.u_end += block;
    for (unsigned k : inst.k) rep.rules.push_back({"b", std::string(k, 'a') + "bc"});
    return rep;
}

// ---- simulation and search ------------------------------------------------

std::vector<std::size_t> occurrence_offsets(std::string_view word, std::string_view pattern) {
    std::vector<std::size_t> out;
    if (pattern.empty() || pattern.size() > word.size()) return out;
    for (auto pos = word.find(pattern); pos != std::string_view::npos; pos = word.find(pattern, pos + 1))
        out.push_back(pos);
    return out;
}

std::string rep_apply(std::string_view word, const RepRule& rule, std::size_t occurrence) {
    if (rule.lhs.empty()) throw InvalidArgument("rule left side must be non-empty");
    auto offs = occurrence_offsets(word, rule.lhs);
    if (occurrence == 0 || occurrence > offs.size())
        throw InvalidArgument("occurrence " + std::to_string(occurrence) + " of '" + rule.lhs + "' requested, '" +
                              std::string(word) + "' has " + std::to_string(offs.size()));
    std::size_t at = offs[occurrence - 1];
    std::string out(word.substr(0, at));
    out += rule.rhs;
    out += word.substr(at + rule.lhs.size());
    return out;
}

RepWitness rep_run(const RepInstance& inst, const std::vector<std::size_t>& positions) {
    if (positions.size() != inst.rules.size())
        throw InvalidArgument("witness has " + std::to_string(positions.size()) + " positions for " +
                              std::to_string(inst.rules.size()) + " rules");
    RepWitness wit{positions, {inst.u_start}};
    for (std::size_t i = 0; i < positions.size(); ++i) {
        try {
            wit.intermediate.push_back(rep_apply(wit.intermediate.back(), inst.rules[i], positions[i]));
        } catch (const InvalidArgument& e) {
            throw InvalidArgument("step " + std::to_string(i + 1) + ": " + e.what());
        }
    }
    return wit;
}

std::string to_string(RepSearchStatus s) {
    switch (s) {
        case RepSearchStatus::Found: return "found";
        case RepSearchStatus::NoWitness: return "no-witness";
        case RepSearchStatus::BudgetExhausted: return "budget-exhausted";
    }
    return "?";
}

RepSearchResult rep_solve(const RepInstance& inst, std::size_t node_budget) {
    inst.validate();
    RepSearchResult res;
    // Frontier entries stay sorted by their path, so the first path to reach
    // a word at a given depth is the lexicographically least one.
    struct Node {
        std::string word;
        std::vector<std::size_t> path;
    };
    std::vector<Node> frontier{{inst.u_start, {}}};
    for (const auto& rule : inst.rules) {
        std::vector<Node> next;
        std::unordered_set<std::string> seen;
        for (const auto& node : frontier) {
            auto offs = occurrence_offsets(node.word, rule.lhs);
            for (std::size_t j = 0; j < offs.size(); ++j) {
                if (++res.nodes > node_budget) {
                    res.status = RepSearchStatus::BudgetExhausted;
                    return res;
                }
                std::string w = node.word.substr(0, offs[j]) + rule.rhs + node.word.substr(offs[j] + rule.lhs.size());
                if (!seen.insert(w).second) continue;
                auto path = node.path;
                path.push_back(j + 1);
                next.push_back({std::move(w), std::move(path)});
            }
        }
        frontier = std::move(next);
        if (frontier.empty()) break;
    }
    for (const auto& node : frontier) {
        if (node.path.size() == inst.rules.size() && node.word == inst.u_end) {
            res.status = RepSearchStatus::Found;
            res.witness = rep_run(inst, node.path);
            return res;
        }
    }
    res.status = RepSearchStatus::NoWitness;
    return res;
}

// ---- equations ------------------------------------------------------------

Equation rep_to_equation_mu(const RepInstance& inst) {
    inst.validate();
    const VarId n = static_cast<VarId>(inst.rules.size());
    Pattern lhs, rhs;
    rhs.push_back(Symbol::constant('#'));
    push_word(rhs, inst.u_start);
    for (VarId i = 1; i <= n; ++i) {
        lhs.push_back(Symbol::variable(i));
        push_word(lhs, inst.rules[i - 1].lhs);
        rhs.push_back(Symbol::variable(i));
        push_word(rhs, inst.rules[i - 1].rhs);
    }
    lhs.push_back(Symbol::variable(n + 1));
    lhs.push_back(Symbol::constant('#'));
    push_word(lhs, inst.u_end);
    rhs.push_back(Symbol::variable(n + 1));
    return Equation(std::move(lhs), std::move(rhs), rep_alphabet(inst));
}

Equation rep_to_equation(const RepInstance& inst) {
    inst.validate();
    const VarId n = static_cast<VarId>(inst.rules.size());
    auto triple = [](Pattern& p, VarId i) {
        p.push_back(Symbol::variable(3 * i - 2));
        p.push_back(Symbol::constant('#'));
        p.push_back(Symbol::variable(3 * i - 1));
        p.push_back(Symbol::constant('#'));
        p.push_back(Symbol::variable(3 * i));
    };
    Pattern lhs, rhs;
    rhs.push_back(Symbol::constant('#'));
    push_word(rhs, inst.u_start);
    for (VarId i = 1; i <= n; ++i) {
        triple(lhs, i);
        push_word(lhs, inst.rules[i - 1].lhs);
        triple(rhs, i);
        push_word(rhs, inst.rules[i - 1].rhs);
    }
    triple(lhs, n + 1);
    lhs.push_back(Symbol::constant('#'));
    push_word(lhs, inst.u_end);
    triple(rhs, n + 1);
    return Equation(std::move(lhs), std::move(rhs), rep_alphabet(inst));
}

// ---- overlapping solutions ------------------------------------------------

OverlapReport check_overlapping(const RepInstance& inst, const Substitution& h) {
    const std::size_t n = inst.rules.size();
    require_vars(h, static_cast<VarId>(n + 1));
    OverlapReport rep;
    rep.is_solution = is_solution(rep_to_equation_mu(inst), h);
    rep.cond1 = rep.cond2 = true;
    auto fail = [&](bool& cond, const std::string& why) {
        cond = false;
        if (rep.detail.empty()) rep.detail = why;
    };

    rep.v.push_back("#" + inst.u_start);
    bool defined = true;
    for (std::size_t i = 1; i <= n && defined; ++i) {
        const std::string& hi = h.at(static_cast<VarId>(i));
        const std::string& vi = rep.v.back();
        const RepRule& rule = inst.rules[i - 1];
        const std::string tag = "x" + std::to_string(i);

        bool ok = true;
        if (hi.compare(0, vi.size(), vi) != 0 || hi.size() < vi.size()) {
            fail(rep.cond2, "v_" + std::to_string(i) + " is not a prefix of h(" + tag + ")");
            ok = false;
        }
        if (!is_prefix_of_power(hi + rule.lhs, vi)) {
            fail(rep.cond1, "h(" + tag + ") w_" + std::to_string(i) + " is not a prefix of v_" +
                                std::to_string(i) + "^omega");
            ok = false;
        }
        rep.period_ok.push_back(ok);
        if (vi.size() < rule.lhs.size() || vi.size() - rule.lhs.size() > hi.size()) {
            fail(rep.cond2, "y_" + std::to_string(i) + " is undefined");
            defined = false;
            break;
        }
        rep.y.push_back(hi.substr(hi.size() - (vi.size() - rule.lhs.size())));
        rep.v.push_back(rep.y.back() + rule.rhs);
    }
    if (!defined) {
        rep.cond1 = false;
        rep.cond3 = false;
        return rep;
    }
    const std::string& last = h.at(static_cast<VarId>(n + 1));
    rep.cond3 = rep.v.back() + last == last + "#" + inst.u_end;
    if (!rep.cond3 && rep.detail.empty()) rep.detail = "final condition fails for h(x" + std::to_string(n + 1) + ")";
    return rep;
}

Substitution witness_to_overlapping(const RepInstance& inst, const RepWitness& wit) {
    return witness_to_overlapping(inst, wit.positions);
}

Substitution witness_to_overlapping(const RepInstance& inst, const std::vector<std::size_t>& positions) {
    RepWitness run = rep_run(inst, positions);
    if (run.intermediate.back() != inst.u_end)
        throw InvalidArgument("witness yields '" + run.intermediate.back() + "', not the end word");
    const std::size_t n = inst.rules.size();
    Substitution h;
    if (n == 0) {
        h[1] = "";
    } else {
        std::vector<std::string> s(n + 1), t(n + 1);  // 1-based
        for (std::size_t i = 1; i <= n; ++i) {
            const std::string& before = run.intermediate[i - 1];
            std::size_t at = occurrence_offsets(before, inst.rules[i - 1].lhs)[positions[i - 1] - 1];
            s[i] = before.substr(0, at);
            t[i] = before.substr(at + inst.rules[i - 1].lhs.size());
        }
        h[1] = "#" + s[1] + inst.rules[0].lhs + t[1] + "#" + s[1];
        for (std::size_t i = 2; i <= n; ++i)
            h[static_cast<VarId>(i)] =
                t[i - 1] + "#" + s[i - 1] + inst.rules[i - 2].rhs + t[i - 1] + "#" + s[i];
        const std::string cur = s[n] + inst.rules[n - 1].rhs + t[n];
        h[static_cast<VarId>(n + 1)] = t[n] + "#" + cur + "#" + cur;
    }
    auto rep = check_overlapping(inst, h);
    if (!rep.overlapping() || !rep.is_solution)
        throw InternalError("constructed substitution is not overlapping: " + rep.detail);
    return h;
}

RepWitness overlapping_to_witness(const RepInstance& inst, const Substitution& h) {
    auto rep = check_overlapping(inst, h);
    if (!rep.overlapping()) throw InvalidArgument("not an overlapping solution: " + rep.detail);
    for (std::size_t i = 0; i < rep.v.size(); ++i)
        if (std::count(rep.v[i].begin(), rep.v[i].end(), '#') != 1)
            throw InvalidArgument("not an overlapping solution: v_" + std::to_string(i + 1) +
                                  " does not contain exactly one '#'");
    const std::size_t n = inst.rules.size();
    std::vector<std::size_t> positions;
    for (std::size_t i = 1; i <= n; ++i) {
        const std::string& y = rep.y[i - 1];
        auto hash = y.find('#');
        if (hash == std::string::npos)
            throw InvalidArgument("not an overlapping solution: y_" + std::to_string(i) + " has no '#'");
        std::string t = y.substr(0, hash), s = y.substr(hash + 1);
        std::string word = s + inst.rules[i - 1].lhs + t;
        auto offs = occurrence_offsets(word, inst.rules[i - 1].lhs);
        auto it = std::find(offs.begin(), offs.end(), s.size());
        positions.push_back(static_cast<std::size_t>(it - offs.begin()) + 1);
    }
    RepWitness wit = rep_run(inst, positions);
    if (wit.intermediate.back() != inst.u_end)
        throw InternalError("recovered witness does not reach the end word");
    return wit;
}

Substitution overlapping_to_tripled(const RepInstance& inst, const Substitution& h) {
    auto rep = check_overlapping(inst, h);
    if (!rep.overlapping()) throw InvalidArgument("not an overlapping solution: " + rep.detail);
    const std::size_t n = inst.rules.size();
    Substitution g;
    for (std::size_t i = 1; i <= n + 1; ++i) {
        // v_i h(x_i) is again overlapping; the last image may be shorter than
        // its period, so repeat the period until two '#' are present.
        std::string img = rep.v[i - 1] + h.at(static_cast<VarId>(i));
        while (std::count(img.begin(), img.end(), '#') < 2) img = rep.v[i - 1] + img;
        auto a = img.find('#');
        auto b = img.find('#', a + 1);
        const VarId base = static_cast<VarId>(3 * i);
        g[base - 2] = img.substr(0, a);
        g[base - 1] = img.substr(a + 1, b - a - 1);
        g[base] = img.substr(b + 1);
    }
    if (!is_solution(rep_to_equation(inst), g))
        throw InternalError("tripled substitution is not a solution");
    return g;
}

Substitution tripled_to_overlapping(const RepInstance& inst, const Substitution& g) {
    const std::size_t n = inst.rules.size();
    require_vars(g, static_cast<VarId>(3 * n + 3));
    if (!is_solution(rep_to_equation(inst), g)) throw InvalidArgument("not a solution of the tripled equation");
    Substitution h;
    for (std::size_t i = 1; i <= n + 1; ++i) {
        const VarId base = static_cast<VarId>(3 * i);
        h[static_cast<VarId>(i)] = var_image(g, base - 2) + "#" + var_image(g, base - 1) + "#" + var_image(g, base);
    }
    auto rep = check_overlapping(inst, h);
    if (!rep.overlapping() || !rep.is_solution)
        throw InternalError("substitution from the tripled equation is not overlapping: " + rep.detail);
    return h;
}

}  // namespace wordeq
