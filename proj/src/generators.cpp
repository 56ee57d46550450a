#include "wordeq/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

namespace wordeq {

Equation gen_exp_family(unsigned n) {
    if (n < 2) throw InvalidArgument("exp family needs n >= 2, got " + std::to_string(n));
    auto x = [](unsigned i) { return Symbol::variable(i); };
    auto c = [](char l) { return Symbol::constant(l); };
    Pattern lhs{x(n), c('a'), x(n)}, rhs{c('a'), x(n)};
    for (unsigned i = n - 1; i >= 1; --i) {
        lhs.push_back(c('b'));
        lhs.push_back(x(i));
        if (i != n - 1) rhs.push_back(c('b'));
        rhs.push_back(x(i));
        rhs.push_back(x(i));
    }
    for (char l : std::string("baa")) rhs.push_back(c(l));
    return Equation(std::move(lhs), std::move(rhs), Alphabet("ab"));
}

Equation gen_conjugate_family(const std::string& w) {
    Pattern lhs, rhs;
    for (char l : w) lhs.push_back(Symbol::constant(l));
    lhs.push_back(Symbol::constant('c'));
    lhs.push_back(Symbol::variable(1));
    rhs.push_back(Symbol::variable(1));
    rhs.push_back(Symbol::constant('c'));
    for (char l : w) rhs.push_back(Symbol::constant(l));
    return Equation(std::move(lhs), std::move(rhs));
}

RandomClass parse_random_class(const std::string& name) {
    if (name == "regular-ordered") return RandomClass::RegularOrdered;
    if (name == "quadratic") return RandomClass::Quadratic;
    if (name == "class-d") return RandomClass::ClassD;
    throw InvalidArgument("unknown equation class '" + name + "'");
}

std::string to_string(RandomClass c) {
    switch (c) {
        case RandomClass::RegularOrdered: return "regular-ordered";
        case RandomClass::Quadratic: return "quadratic";
        case RandomClass::ClassD: return "class-d";
    }
    return "?";
}

namespace {

using Rng = std::mt19937_64;

std::size_t pick(Rng& rng, std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); }

Symbol random_letter(Rng& rng, const std::string& alphabet) {
    return Symbol::constant(alphabet[pick(rng, alphabet.size())]);
}

/// `slots` sorted distinct positions out of [0, len).
std::vector<std::size_t> sorted_sample(Rng& rng, std::size_t len, std::size_t slots) {
    std::vector<std::size_t> all(len);
    std::iota(all.begin(), all.end(), 0);
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(slots);
    std::sort(all.begin(), all.end());
    return all;
}

Pattern side_with(Rng& rng, const std::string& alphabet, std::size_t len, const std::vector<VarId>& vars) {
    Pattern p;
    auto slots = sorted_sample(rng, len, vars.size());
    std::size_t next = 0;
    for (std::size_t i = 0; i < len; ++i) {
        if (next < slots.size() && slots[next] == i)
            p.push_back(Symbol::variable(vars[next++]));
        else
            p.push_back(random_letter(rng, alphabet));
    }
    return p;
}

Equation regular_ordered(const RandomParams& prm, Rng& rng) {
    std::vector<VarId> left, right;
    for (VarId v = 1; v <= prm.vars; ++v) {
        switch (pick(rng, 4)) {
            case 0: left.push_back(v); break;
            case 1: right.push_back(v); break;
            default:
                left.push_back(v);
                right.push_back(v);
        }
    }
    if (left.size() > prm.side_length || right.size() > prm.side_length)
        throw InvalidArgument("side length " + std::to_string(prm.side_length) + " is too short for " +
                              std::to_string(prm.vars) + " variables");
    Pattern lhs = side_with(rng, prm.alphabet, prm.side_length, left);
    Pattern rhs = side_with(rng, prm.alphabet, prm.side_length, right);
    return Equation(std::move(lhs), std::move(rhs), Alphabet(prm.alphabet));
}

Equation quadratic(const RandomParams& prm, Rng& rng) {
    std::vector<VarId> occ;
    for (VarId v = 1; v <= prm.vars; ++v) {
        occ.push_back(v);
        if (pick(rng, 2) == 1) occ.push_back(v);
    }
    const std::size_t total = 2 * static_cast<std::size_t>(prm.side_length);
    if (occ.size() > total)
        throw InvalidArgument("side length " + std::to_string(prm.side_length) + " is too short for " +
                              std::to_string(prm.vars) + " variables");
    std::vector<Symbol> slots;
    for (VarId v : occ) slots.push_back(Symbol::variable(v));
    while (slots.size() < total) slots.push_back(random_letter(rng, prm.alphabet));
    std::shuffle(slots.begin(), slots.end(), rng);
    Pattern lhs(slots.begin(), slots.begin() + prm.side_length);
    Pattern rhs(slots.begin() + prm.side_length, slots.end());
    return Equation(std::move(lhs), std::move(rhs), Alphabet(prm.alphabet));
}

// Pure side X1 B X1 ... X1 against W1 B X1 B ... X1 B W2, with W1, W2
// single-occurring wildcards (fewer when vars < 3). Hits `size` exactly.
Equation class_d(const RandomParams& prm, Rng& rng) {
    if (prm.vars == 0) throw InvalidArgument("class D needs at least one variable");
    const std::size_t wild = std::min<unsigned>(prm.vars, 3) - 1;
    const std::size_t n = prm.size;
    // k copies per side: 2k + wild variables, k - 1 mandatory letters on the pure side.
    if (n < 3 + wild) throw InvalidArgument("size " + std::to_string(n) + " is too small for class D");
    std::size_t k = std::max<std::size_t>(1, (n + 3) / 6);
    while (k > 1 && 2 * k + wild + (k - 1) > n) --k;
    std::size_t letters = n - 2 * k - wild;
    std::vector<std::size_t> pure_blocks(k - 1, 1), other_blocks(k + 1, 0);
    letters -= k - 1;
    const std::size_t nblocks = pure_blocks.size() + other_blocks.size();
    for (; letters > 0; --letters) {
        std::size_t b = pick(rng, nblocks);
        if (b < pure_blocks.size())
            ++pure_blocks[b];
        else
            ++other_blocks[b - pure_blocks.size()];
    }
    auto block = [&](Pattern& p, std::size_t len) {
        for (std::size_t i = 0; i < len; ++i) p.push_back(random_letter(rng, prm.alphabet));
    };
    const Symbol x = Symbol::variable(1);
    Pattern lhs{x};
    for (std::size_t i = 0; i + 1 < k; ++i) {
        block(lhs, pure_blocks[i]);
        lhs.push_back(x);
    }
    Pattern rhs;
    if (wild >= 1) rhs.push_back(Symbol::variable(2));
    block(rhs, other_blocks[0]);
    for (std::size_t i = 0; i < k; ++i) {
        rhs.push_back(x);
        block(rhs, other_blocks[i + 1]);
    }
    if (wild >= 2) rhs.push_back(Symbol::variable(3));
    if (pick(rng, 2) == 1) std::swap(lhs, rhs);
    return Equation(std::move(lhs), std::move(rhs), Alphabet(prm.alphabet));
}

}  // namespace

Equation gen_random(const RandomParams& prm) {
    if (prm.alphabet.empty()) throw InvalidArgument("alphabet must be non-empty");
    Alphabet check(prm.alphabet);
    Rng rng(prm.seed);
    switch (prm.cls) {
        case RandomClass::RegularOrdered: return regular_ordered(prm, rng);
        case RandomClass::Quadratic: return quadratic(prm, rng);
        case RandomClass::ClassD: return class_d(prm, rng);
    }
    throw InvalidArgument("unknown class");
}

}  // namespace wordeq
