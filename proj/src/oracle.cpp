#include "wordeq/oracle.hpp"

#include <algorithm>
#include <limits>

namespace wordeq {

namespace {

constexpr std::size_t kCapGuard = 8;

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) return std::numeric_limits<std::uint64_t>::max();
    return a * b;
}

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
    return a > std::numeric_limits<std::uint64_t>::max() - b ? std::numeric_limits<std::uint64_t>::max() : a + b;
}

struct Vector {
    std::size_t solution_length;
    std::vector<std::size_t> lengths;
};

}  // namespace

OracleResult brute_solve(const Equation& eq, const OracleOptions& opts) {
    if (opts.per_var_cap > kCapGuard && !opts.force)
        throw InvalidArgument("per-variable cap " + std::to_string(opts.per_var_cap) + " exceeds guard " +
                              std::to_string(kCapGuard) + " (use force)");
    std::string letters = opts.alphabet ? Alphabet(*opts.alphabet).letters() : eq.alphabet.letters();

    std::vector<VarId> vars;
    for (VarId v : variables(eq)) vars.push_back(v);
    auto occ_l = occurrences(eq.lhs), occ_r = occurrences(eq.rhs);
    std::size_t const_l = constant_count(eq.lhs), const_r = constant_count(eq.rhs);
    const std::size_t cap = opts.per_var_cap;

    // Every length vector in [0, cap]^k with balanced sides.
    std::uint64_t vector_count = 1;
    for (std::size_t i = 0; i < vars.size(); ++i) vector_count = sat_mul(vector_count, cap + 1);
    if (vector_count > 50'000'000 && !opts.force) throw InvalidArgument("too many length vectors (use force)");

    std::vector<Vector> balanced;
    std::vector<std::size_t> len(vars.size(), 0);
    std::uint64_t space = 0;
    while (true) {
        std::size_t l = const_l, r = const_r;
        std::uint64_t words = 1;
        for (std::size_t i = 0; i < vars.size(); ++i) {
            auto il = occ_l.find(vars[i]);
            auto ir = occ_r.find(vars[i]);
            if (il != occ_l.end()) l += il->second * len[i];
            if (ir != occ_r.end()) r += ir->second * len[i];
            for (std::size_t t = 0; t < len[i]; ++t) words = sat_mul(words, letters.size());
        }
        if (l == r) {
            balanced.push_back({l, len});
            space = sat_add(space, words);
        }
        std::size_t i = 0;
        while (i < vars.size() && len[i] == cap) len[i++] = 0;
        if (i == vars.size()) break;
        ++len[i];
    }
    if (space > opts.max_space && !opts.force)
        throw InvalidArgument("search space of " + std::to_string(space) + " assignments exceeds guard (use force)");
    std::sort(balanced.begin(), balanced.end(), [](const Vector& a, const Vector& b) {
        return std::tie(a.solution_length, a.lengths) < std::tie(b.solution_length, b.lengths);
    });

    OracleResult res;
    res.cap = cap;
    for (const Vector& vec : balanced) {
        // Odometer over the images, last variable fastest.
        std::vector<std::vector<std::size_t>> digits(vars.size());
        for (std::size_t i = 0; i < vars.size(); ++i) digits[i].assign(vec.lengths[i], 0);
        while (true) {
            Substitution h;
            for (std::size_t i = 0; i < vars.size(); ++i) {
                std::string w;
                for (std::size_t d : digits[i]) w += letters[d];
                h[vars[i]] = std::move(w);
            }
            ++res.assignments_checked;
            if (is_solution(eq, h)) {
                res.sat = true;
                res.solutions.push_back(std::move(h));
                if (!opts.find_all || res.solutions.size() >= opts.max_solutions) return res;
            }
            bool advanced = false;
            for (std::size_t i = vars.size(); i-- > 0 && !advanced;) {
                for (std::size_t t = digits[i].size(); t-- > 0;) {
                    if (++digits[i][t] < letters.size()) {
                        advanced = true;
                        break;
                    }
                    digits[i][t] = 0;
                }
            }
            if (!advanced) break;
        }
    }
    return res;
}

std::optional<MinimalSolution> minimal_solution(const Equation& eq, const OracleOptions& opts) {
    OracleOptions first = opts;
    first.find_all = false;
    OracleResult res = brute_solve(eq, first);
    if (!res.sat) return std::nullopt;
    MinimalSolution out{res.solutions.front(), solution_length(eq, res.solutions.front())};
    return out;
}

}  // namespace wordeq
