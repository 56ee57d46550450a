#include "wordeq/solver.hpp"

#include <algorithm>
#include <chrono>
#include <future>
#include <mutex>
#include <vector>

#include "wordeq/classify.hpp"

namespace wordeq {

const char* to_string(Status s) {
    switch (s) {
        case Status::Sat: return "sat";
        case Status::Unsat: return "unsat";
        case Status::Unknown: return "unknown";
    }
    return "unknown";
}

std::size_t equation_size(const Equation& eq) { return eq.lhs.size() + eq.rhs.size(); }

namespace {

struct Linear {
    std::vector<VarId> vars;
    std::vector<std::size_t> a, b;          // lhs / rhs occurrence counts
    std::vector<std::size_t> suff_a, suff_b;  // suffix sums
    std::size_t cl = 0, cr = 0;             // constant counts

    explicit Linear(const Equation& eq) {
        auto la = occurrences(eq.lhs);
        auto lb = occurrences(eq.rhs);
        for (VarId x : variables(eq)) {
            vars.push_back(x);
            a.push_back(la.count(x) ? la[x] : 0);
            b.push_back(lb.count(x) ? lb[x] : 0);
        }
        suff_a.assign(vars.size() + 1, 0);
        suff_b.assign(vars.size() + 1, 0);
        for (std::size_t i = vars.size(); i-- > 0;) {
            suff_a[i] = suff_a[i + 1] + a[i];
            suff_b[i] = suff_b[i + 1] + b[i];
        }
        cl = constant_count(eq.lhs);
        cr = constant_count(eq.rhs);
    }
};

}  // namespace

bool enumerate_length_vectors(const Equation& eq, std::size_t bound,
                              const std::function<bool(const LengthAssignment&, std::size_t)>& visit,
                              std::optional<std::size_t> max_total) {
    Linear lin(eq);
    std::size_t lo = std::max(lin.cl, lin.cr);
    std::size_t hi = std::min(lin.cl + bound * lin.suff_a[0], lin.cr + bound * lin.suff_b[0]);
    if (max_total) hi = std::min(hi, *max_total);
    std::vector<std::size_t> len(lin.vars.size(), 0);
    LengthAssignment la;
    for (VarId x : lin.vars) la[x] = 0;

    for (std::size_t total = lo; total <= hi; ++total) {
        // Depth-first, values ascending: lexicographic order within a band.
        bool stopped = false;
        std::function<void(std::size_t, std::size_t, std::size_t)> dfs = [&](std::size_t i, std::size_t need_l,
                                                                            std::size_t need_r) {
            if (stopped) return;
            if (i == lin.vars.size()) {
                if (need_l == 0 && need_r == 0) {
                    for (std::size_t k = 0; k < len.size(); ++k) la[lin.vars[k]] = len[k];
                    if (!visit(la, total)) stopped = true;
                }
                return;
            }
            for (std::size_t v = 0; v <= bound; ++v) {
                std::size_t dl = lin.a[i] * v, dr = lin.b[i] * v;
                if (dl > need_l || dr > need_r) break;
                std::size_t rl = need_l - dl, rr = need_r - dr;
                if (rl > bound * lin.suff_a[i + 1] || rr > bound * lin.suff_b[i + 1]) continue;
                len[i] = v;
                dfs(i + 1, rl, rr);
                if (stopped) return;
            }
        };
        dfs(0, total - lin.cl, total - lin.cr);
        if (stopped) return false;
    }
    return true;
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Evaluates a batch of vectors, returning the index of the first one that
// yields a solution (in batch order) together with the solution.
template <class Eval>
std::optional<std::pair<std::size_t, typename std::invoke_result_t<Eval, const LengthAssignment&>::value_type>>
first_hit(const std::vector<LengthAssignment>& batch, unsigned jobs, Eval eval) {
    using R = typename std::invoke_result_t<Eval, const LengthAssignment&>::value_type;
    if (jobs <= 1 || batch.size() < 2) {
        for (std::size_t i = 0; i < batch.size(); ++i)
            if (auto r = eval(batch[i])) return std::pair{i, std::move(*r)};
        return std::nullopt;
    }
    std::vector<std::optional<R>> out(batch.size());
    std::vector<std::future<void>> workers;
    std::size_t chunk = (batch.size() + jobs - 1) / jobs;
    for (std::size_t start = 0; start < batch.size(); start += chunk) {
        workers.push_back(std::async(std::launch::async, [&, start] {
            for (std::size_t i = start; i < std::min(batch.size(), start + chunk); ++i) out[i] = eval(batch[i]);
        }));
    }
    for (auto& w : workers) w.get();
    for (std::size_t i = 0; i < out.size(); ++i)
        if (out[i]) return std::pair{i, std::move(*out[i])};
    return std::nullopt;
}

constexpr std::size_t batch_size = 512;

// Shared driver: enumerates vectors in canonical order and reports the first
// one accepted by `eval`.
template <class Eval>
SolveResult drive(const Equation& eq, std::size_t bound, std::optional<std::size_t> max_total, const SolveOptions& opts,
                  Eval eval, std::uint64_t& tried, bool& budget_hit) {
    SolveResult res;
    res.bound_used = bound;
    std::vector<LengthAssignment> batch;
    std::size_t band = 0;
    bool found = false;
    auto flush = [&] {
        if (batch.empty()) return;
        auto hit = first_hit(batch, opts.jobs, eval);
        if (hit) {
            tried += hit->first + 1;
            res.status = Status::Sat;
            res.h = std::move(hit->second.first);
            res.free_classes = hit->second.second;
            res.total_length = band;
            found = true;
        } else {
            tried += batch.size();
        }
        batch.clear();
    };
    enumerate_length_vectors(
        eq, bound,
        [&](const LengthAssignment& la, std::size_t total) {
            if (total != band) {
                flush();
                if (found) return false;
                band = total;
            }
            if (opts.max_vectors && tried + batch.size() >= *opts.max_vectors) {
                flush();
                if (!found) budget_hit = true;
                return false;
            }
            batch.push_back(la);
            if (batch.size() >= batch_size) {
                flush();
                if (found) return false;
            }
            return true;
        },
        max_total);
    if (!found && !budget_hit) flush();
    return res;
}

}  // namespace

SolveResult solve(const Equation& eq, const SolveOptions& opts) {
    auto t0 = Clock::now();
    ClassReport rep = classify(eq);
    std::size_t n = equation_size(eq);
    bool ro = rep.regular_ordered();
    if (!opts.per_var_bound && !ro)
        throw InvalidArgument("a per-variable bound is required for equations that are not regular-ordered");
    std::size_t bound = opts.per_var_bound.value_or(n - 1);
    char fill = opts.default_letter.value_or(eq.alphabet.first());
    if (!eq.alphabet.contains(fill)) throw InvalidArgument(std::string("default letter '") + fill + "' not in alphabet");

    std::uint64_t tried = 0;
    bool budget_hit = false;
    auto eval = [&](const LengthAssignment& la) -> std::optional<std::pair<Substitution, std::size_t>> {
        auto r = check_lengths(eq, la, fill);
        if (auto* s = std::get_if<LengthSolution>(&r)) return std::pair{std::move(s->h), s->free_classes};
        return std::nullopt;
    };
    SolveResult res = drive(eq, bound, std::nullopt, opts, eval, tried, budget_hit);
    res.stats.vectors_tried = tried;
    if (res.status == Status::Sat) {
        res.stats.first_sat_total_length = res.total_length;
    } else if (budget_hit) {
        res.status = Status::Unknown;
        res.note = "vector budget exhausted";
    } else if (ro && bound + 1 >= n) {
        res.status = Status::Unsat;
    } else {
        res.status = Status::Unknown;
        res.note = ro ? "bound below the complete bound" : "search space exhausted; equation is not regular-ordered";
    }
    res.stats.total_time = seconds_since(t0);
    return res;
}

namespace {

// Letter completion of free classes under DFA constraints.
class Completer {
public:
    Completer(PositionGraph& g, const Constraints& cs, const std::string& letters, std::size_t cap)
        : g_(g), letters_(letters), cap_(cap) {
        for (const auto& [x, dfa] : cs) {
            auto it = g.lengths().find(x);
            if (it == g.lengths().end()) continue;
            Var v{x, &dfa, {}};
            for (std::size_t d = 0; d < it->second; ++d) v.roots.push_back(g.class_of(g.var_cell(x, d)));
            vars_.push_back(std::move(v));
        }
        assigned_.assign(g.cell_count(), '\0');
    }

    std::optional<Substitution> run() {
        if (dfs(0, 0, vars_.empty() ? Dfa::dead : vars_[0].dfa->initial())) {
            return g_.build([this](std::size_t root) { return assigned_[root] ? assigned_[root] : letters_.front(); });
        }
        return std::nullopt;
    }

    std::uint64_t completions() const { return completions_; }
    bool capped() const { return capped_; }

private:
    struct Var {
        VarId x;
        const Dfa* dfa;
        std::vector<std::size_t> roots;
    };

    bool dfs(std::size_t vi, std::size_t d, int q) {
        if (vi == vars_.size()) {
            ++completions_;
            return true;
        }
        const Var& v = vars_[vi];
        if (d == v.roots.size()) {
            if (!v.dfa->accepting(q)) {
                ++completions_;
                return false;
            }
            return dfs(vi + 1, 0, vi + 1 < vars_.size() ? vars_[vi + 1].dfa->initial() : Dfa::dead);
        }
        if (capped_) return false;
        std::size_t root = v.roots[d];
        char forced = g_.forced_letter(root);
        if (!forced) forced = assigned_[root];
        if (forced) {
            int next = v.dfa->step(q, forced);
            if (!v.dfa->live(next)) return false;
            return dfs(vi, d + 1, next);
        }
        for (char c : letters_) {
            if (completions_ >= cap_) {
                capped_ = true;
                return false;
            }
            int next = v.dfa->step(q, c);
            if (!v.dfa->live(next)) continue;
            assigned_[root] = c;
            if (dfs(vi, d + 1, next)) return true;
            assigned_[root] = '\0';
        }
        return false;
    }

    PositionGraph& g_;
    std::string letters_;
    std::size_t cap_;
    std::vector<Var> vars_;
    std::vector<char> assigned_;
    std::uint64_t completions_ = 0;
    bool capped_ = false;
};

}  // namespace

SolveResult solve_with_constraints(const Equation& eq, const Constraints& constraints, const SolveOptions& opts) {
    auto t0 = Clock::now();
    auto vars = variables(eq);
    std::string extra;
    std::size_t m = 0;
    for (const auto& [x, dfa] : constraints) {
        if (!vars.count(x)) throw InvalidArgument("constraint on X" + std::to_string(x) + ", which is not in the equation");
        extra += dfa.letters();
        m = std::max(m, dfa.size());
    }
    // Partial DFAs are completed with a rejecting sink; the working alphabet
    // is the equation alphabet extended by every letter the DFAs mention.
    Alphabet sigma = extra.empty() ? eq.alphabet : eq.alphabet.merged(Alphabet(extra));
    Equation work(eq.lhs, eq.rhs, sigma);
    char fill = opts.default_letter.value_or(eq.alphabet.first());

    ClassReport rep = classify(eq);
    std::size_t n = equation_size(eq);
    bool same_vars = variables(eq.lhs) == variables(eq.rhs);
    bool complete_bound = rep.regular_ordered() && same_vars && !opts.per_var_bound;
    std::size_t bound = complete_bound ? (m + 2) * n * n : opts.per_var_bound.value_or(opts.constraint_cap);
    std::optional<std::size_t> max_total;
    if (complete_bound) max_total = bound;

    std::uint64_t tried = 0, completions = 0;
    bool budget_hit = false, cap_hit = false;
    std::string letters = sigma.letters();
    // Try the default letter first so unconstrained completions match solve().
    letters.erase(std::remove(letters.begin(), letters.end(), fill), letters.end());
    letters.insert(letters.begin(), fill);
    std::mutex mu;
    auto eval = [&](const LengthAssignment& la) -> std::optional<std::pair<Substitution, std::size_t>> {
        auto [l, r] = side_lengths(work, la);
        if (l != r) return std::nullopt;
        PositionGraph g(work, la);
        if (g.contradictory()) return std::nullopt;
        Completer c(g, constraints, letters, opts.completion_cap);
        auto h = c.run();
        {
            std::lock_guard lock(mu);
            completions += c.completions();
            cap_hit = cap_hit || c.capped();
        }
        if (!h) return std::nullopt;
        if (!is_solution(work, *h)) throw InternalError("constrained completion is not a solution");
        for (const auto& [x, dfa] : constraints)
            if (!dfa.accepts(h->at(x))) throw InternalError("constrained completion violates a constraint");
        return std::pair{std::move(*h), g.free_classes().size()};
    };
    SolveResult res = drive(work, bound, max_total, opts, eval, tried, budget_hit);
    res.stats.vectors_tried = tried;
    res.stats.completions_tried = completions;
    res.stats.cap_hit = cap_hit;
    if (res.status == Status::Sat) {
        res.stats.first_sat_total_length = res.total_length;
    } else if (budget_hit || cap_hit) {
        res.status = Status::Unknown;
        res.note = budget_hit ? "vector budget exhausted" : "completion cap reached";
    } else if (complete_bound) {
        res.status = Status::Unsat;
    } else {
        res.status = Status::Unknown;
        res.note = "configured cap exhausted";
    }
    res.stats.total_time = seconds_since(t0);
    return res;
}

}  // namespace wordeq
