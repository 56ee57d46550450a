#include "wordeq/periods.hpp"

#include <algorithm>
#include <numeric>

namespace wordeq {

namespace {

std::uint64_t encode(std::size_t level, std::size_t pos) {
    return (static_cast<std::uint64_t>(level) << 32) | static_cast<std::uint64_t>(pos);
}

}  // namespace

bool PeriodClasses::reset(std::size_t length, const std::vector<std::size_t>& periods,
                          const std::vector<std::pair<std::size_t, char>>& letters) {
    length_ = length;
    g_ = 0;
    q_ = 0;
    parent_.clear();
    letter_.clear();

    std::vector<std::size_t> ps;
    for (std::size_t p : periods)
        if (p > 0 && p < length) ps.push_back(p);
    if (!ps.empty()) {
        std::sort(ps.begin(), ps.end());
        ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
        g_ = ps.front();
        for (bool changed = true; changed;) {
            changed = false;
            for (std::size_t p : ps) {
                if (p % g_ == 0 || length - p < g_) continue;
                g_ = std::gcd(g_, p);
                changed = true;
            }
        }
    }
    std::vector<std::size_t> partial;
    for (std::size_t p : ps)
        if (p % g_ != 0) partial.push_back(p);
    if (!partial.empty()) q_ = partial.front();
    if (partial.size() < 2) {
        std::unordered_map<std::uint64_t, char> seen;
        for (const auto& [d, c] : letters) {
            auto [it, fresh] = seen.emplace(key(d), c);
            if (!fresh && it->second != c) return false;
        }
        return true;
    }

    // Letters ride on the roots so that a clash stops the unions early.
    for (const auto& [d, c] : letters) {
        auto [it, fresh] = letter_.emplace(raw_key(d), c);
        if (!fresh && it->second != c) return false;
    }
    std::size_t gg = std::gcd(g_, q_);
    std::size_t classes = g_ + q_ - gg <= length ? gg : g_ + q_ - length;
    for (std::size_t i = 1; i < partial.size() && classes > 1; ++i) {
        std::size_t p = partial[i];
        for (std::size_t d = 0; d + p < length && classes > 1; ++d) {
            std::uint64_t a = find(raw_key(d));
            std::uint64_t b = find(raw_key(d + p));
            if (a == b) continue;
            if (a > b) std::swap(a, b);
            parent_[b] = a;
            --classes;
            auto lb = letter_.find(b);
            if (lb != letter_.end()) {
                auto [la, fresh] = letter_.emplace(a, lb->second);
                if (!fresh && la->second != lb->second) return false;
            }
        }
    }
    if (classes == 1) {
        // Everything is one class; fold all keys onto a single root.
        parent_.clear();
        q_ = 0;
        g_ = 1;
        char seen = 0;
        for (const auto& [d, c] : letters) {
            if (seen && seen != c) return false;
            seen = c;
        }
    }
    return true;
}

// Periods p < q of a word of length L with L >= q: the classes agree with
// those of the prefix of length L-p under periods p and q-p, the positions
// at or beyond L-p folding back by p or staying alone.
std::uint64_t PeriodClasses::raw_key(std::size_t d) const {
    if (g_ == 0) return encode(length_, d);
    if (q_ == 0) return encode(length_, d % g_);
    std::size_t len = length_, p = g_, q = q_;
    while (true) {
        if (p >= len) return encode(len, d);
        if (q >= len || q == p) return encode(len, d % p);
        std::size_t gg = std::gcd(p, q);
        if (p + q - gg <= len) return encode(len, d % gg);
        d %= p;
        std::size_t m = (q - 1) / p;
        std::size_t first = (len - d + p - 1) / p - 1;  // first step isolating d
        if (first < m) return encode(len - first * p, d);
        len -= m * p;
        q -= m * p;
        std::swap(p, q);
    }
}

std::uint64_t PeriodClasses::find(std::uint64_t k) const {
    auto it = parent_.find(k);
    if (it == parent_.end()) return k;
    std::uint64_t root = find(it->second);
    it->second = root;
    return root;
}

std::uint64_t PeriodClasses::key(std::size_t d) const {
    std::uint64_t k = raw_key(d);
    return parent_.empty() ? k : find(k);
}

}  // namespace wordeq
