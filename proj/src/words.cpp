#include "wordeq/words.hpp"

#include <functional>
#include <numeric>

#include "wordeq/error.hpp"
#include "wordeq/union_find.hpp"

namespace wordeq {

std::size_t smallest_period(std::string_view w) {
    if (w.empty()) throw InvalidArgument("period of the empty word");
    // Prefix function: the longest proper border gives the period.
    std::vector<std::size_t> pi(w.size(), 0);
    for (std::size_t i = 1; i < w.size(); ++i) {
        std::size_t k = pi[i - 1];
        while (k > 0 && w[i] != w[k]) k = pi[k - 1];
        if (w[i] == w[k]) ++k;
        pi[i] = k;
    }
    return w.size() - pi.back();
}

PrimitiveRoot primitive_root(std::string_view w) {
    std::size_t p = smallest_period(w);
    if (w.size() % p == 0) return {std::string(w.substr(0, p)), w.size() / p};
    return {std::string(w), 1};
}

bool is_primitive(std::string_view w) { return !w.empty() && primitive_root(w).exponent == 1; }

bool is_prefix_of_power(std::string_view w, std::string_view v) {
    if (v.empty()) throw InvalidArgument("empty period word");
    for (std::size_t i = 0; i < w.size(); ++i)
        if (w[i] != v[i % v.size()]) return false;
    return true;
}

FineWilf fine_wilf_agree(std::string_view u, std::string_view v) {
    if (u.empty() || v.empty()) throw InvalidArgument("Fine-Wilf needs non-empty words");
    FineWilf out;
    out.threshold = u.size() + v.size() - std::gcd(u.size(), v.size());
    std::size_t limit = u.size() + v.size();
    while (out.common_prefix < limit && u[out.common_prefix % u.size()] == v[out.common_prefix % v.size()])
        ++out.common_prefix;
    return out;
}

bool ConjugacySolution::contains(std::string_view y) const {
    if (any_y) return true;
    std::size_t period = u.size() + v.size();
    if (y.size() < u.size() || (y.size() - u.size()) % period != 0) return false;
    return is_prefix_of_power(y, u + v);
}

std::vector<std::string> ConjugacySolution::family(std::size_t max_len, std::string_view alphabet) const {
    std::vector<std::string> out;
    if (!any_y) {
        std::string uv = u + v;
        for (std::string y = u; y.size() <= max_len; y = uv + y) out.push_back(y);
        return out;
    }
    std::vector<std::string> level{""};
    for (std::size_t len = 0; len <= max_len; ++len) {
        out.insert(out.end(), level.begin(), level.end());
        std::vector<std::string> next;
        for (auto& w : level)
            for (char c : alphabet) next.push_back(w + c);
        level.swap(next);
    }
    return out;
}

std::optional<ConjugacySolution> solve_conjugacy(std::string_view x, std::string_view z) {
    if (x.size() != z.size()) return std::nullopt;
    ConjugacySolution s;
    if (x.empty()) {
        s.any_y = true;
        return s;
    }
    auto [r, p] = primitive_root(x);
    for (std::size_t k = 0; k < r.size(); ++k) {
        std::string u = r.substr(0, k), v = r.substr(k);
        std::string vu = v + u, zz;
        for (std::size_t i = 0; i < p; ++i) zz += vu;
        if (zz == z) {
            s.u = u;
            s.v = v;
            s.p = p;
            return s;
        }
    }
    return std::nullopt;
}

bool phi_satisfied(const PhiSystem& sys, std::string_view x, std::string_view y) {
    std::string left(x), right(y);
    for (std::size_t i = 0; i < sys.A.size(); ++i) {
        left = sys.A[i] + left;
        right += sys.B[i];
        if (left != right) return false;
    }
    return true;
}

std::pair<std::string, std::string> PhiSolution::representative(char fill) const {
    auto render = [fill](const std::vector<int>& t) {
        std::string out;
        for (int c : t) out += c >= 0 ? static_cast<char>(c) : fill;
        return out;
    };
    return {render(x_template), render(y_template)};
}

std::vector<std::pair<std::string, std::string>> PhiSolution::enumerate(std::string_view alphabet) const {
    std::vector<std::pair<std::string, std::string>> out;
    std::vector<char> pick(free_classes, alphabet.empty() ? 'a' : alphabet.front());
    auto render = [&](const std::vector<int>& t) {
        std::string s;
        for (int c : t) s += c >= 0 ? static_cast<char>(c) : pick[static_cast<std::size_t>(-c - 1)];
        return s;
    };
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == free_classes) {
            out.emplace_back(render(x_template), render(y_template));
            return;
        }
        for (char c : alphabet) {
            pick[i] = c;
            rec(i + 1);
        }
    };
    rec(0);
    return out;
}

namespace {

std::size_t total(const std::vector<std::string>& ws, std::size_t from, std::size_t to) {
    std::size_t n = 0;
    for (std::size_t i = from; i < to; ++i) n += ws[i].size();
    return n;
}

// Direct propagation: cells are x[0..), y[0..), one anchor per letter.
std::optional<PhiSolution> propagate(const PhiSystem& sys, std::size_t x_len, std::size_t y_len) {
    std::size_t k = sys.A.size();
    const std::size_t letters = 256;
    std::size_t xs = 0, ys = x_len, anchors = x_len + y_len;
    UnionFind uf(anchors + letters);
    for (std::size_t i = 1; i <= k; ++i) {
        // left: A_i ... A_1 x, right: y B_1 ... B_i
        std::vector<std::size_t> l, r;
        for (std::size_t j = i; j-- > 0;)
            for (char c : sys.A[j]) l.push_back(anchors + static_cast<unsigned char>(c));
        for (std::size_t d = 0; d < x_len; ++d) l.push_back(xs + d);
        for (std::size_t d = 0; d < y_len; ++d) r.push_back(ys + d);
        for (std::size_t j = 0; j < i; ++j)
            for (char c : sys.B[j]) r.push_back(anchors + static_cast<unsigned char>(c));
        if (l.size() != r.size()) return std::nullopt;
        for (std::size_t g = 0; g < l.size(); ++g) uf.unite(l[g], r[g]);
    }
    std::vector<int> letter_of(anchors + letters, -1);
    for (std::size_t c = 0; c < letters; ++c) {
        std::size_t root = uf.find(anchors + c);
        if (letter_of[root] >= 0 && letter_of[root] != static_cast<int>(c)) return std::nullopt;
        letter_of[root] = static_cast<int>(c);
    }
    // Anchors of letters that never occur sit alone, so no false conflicts.
    PhiSolution sol;
    std::vector<int> cls(anchors + letters, 0);
    auto code = [&](std::size_t cell) {
        std::size_t root = uf.find(cell);
        if (letter_of[root] >= 0) return letter_of[root];
        if (cls[root] == 0) cls[root] = -static_cast<int>(++sol.free_classes);
        return cls[root];
    };
    for (std::size_t d = 0; d < x_len; ++d) sol.x_template.push_back(code(xs + d));
    for (std::size_t d = 0; d < y_len; ++d) sol.y_template.push_back(code(ys + d));
    return sol;
}

}  // namespace

std::optional<PhiSolution> solve_phi_system(const PhiSystem& sys, std::size_t x_len, std::size_t y_len) {
    std::size_t k = sys.A.size();
    if (k == 0 || sys.B.size() != k) throw InvalidArgument("Phi-system needs k >= 1 equal-length word lists");
    for (std::size_t i = 1; i <= k; ++i)
        if (total(sys.A, 0, i) + x_len != y_len + total(sys.B, 0, i)) return std::nullopt;

    if (y_len <= 2 * total(sys.A, 0, k)) return propagate(sys, x_len, y_len);

    // Long y: y = A_1 w, x = w B_1. Equation i then reads
    // A_i...A_2 t = t B_2...B_i with t = A_1 w B_1 = y B_1 = A_1 x.
    std::size_t w_len = y_len - sys.A[0].size();
    std::size_t t_len = y_len + sys.B[0].size();
    PhiSolution sol;
    sol.long_case = true;
    std::optional<std::string> t;
    for (std::size_t i = 2; i <= k && !t; ++i) {
        std::string X, Z;
        for (std::size_t j = i; j-- > 1;) X += sys.A[j];
        for (std::size_t j = 1; j < i; ++j) Z += sys.B[j];
        if (X.empty()) continue;
        auto c = solve_conjugacy(X, Z);
        if (!c) return std::nullopt;
        std::size_t period = c->u.size() + c->v.size();
        if (t_len < c->u.size() || (t_len - c->u.size()) % period != 0) return std::nullopt;
        sol.p = (t_len - c->u.size()) / period;
        std::string cand;
        for (std::size_t q = 0; q < sol.p; ++q) cand += c->u + c->v;
        cand += c->u;
        sol.period = *c;
        t = cand;
    }
    if (!t) {
        // Every A_i...A_2 is empty: w is unconstrained iff every B_2...B_i is.
        if (total(sys.B, 1, k) != 0) return std::nullopt;
        for (std::size_t d = 0; d < w_len; ++d) {
            sol.y_template.push_back(-static_cast<int>(d + 1));
            sol.x_template.push_back(-static_cast<int>(d + 1));
        }
        sol.free_classes = w_len;
        std::vector<int> a1(sys.A[0].begin(), sys.A[0].end()), b1(sys.B[0].begin(), sys.B[0].end());
        sol.y_template.insert(sol.y_template.begin(), a1.begin(), a1.end());
        sol.x_template.insert(sol.x_template.end(), b1.begin(), b1.end());
        return sol;
    }
    if (t->compare(0, sys.A[0].size(), sys.A[0]) != 0) return std::nullopt;
    if (t->compare(t_len - sys.B[0].size(), sys.B[0].size(), sys.B[0]) != 0) return std::nullopt;
    std::string x = t->substr(sys.A[0].size()), y = t->substr(0, y_len);
    if (!phi_satisfied(sys, x, y)) return std::nullopt;
    sol.x_template.assign(x.begin(), x.end());
    sol.y_template.assign(y.begin(), y.end());
    return sol;
}

}  // namespace wordeq
