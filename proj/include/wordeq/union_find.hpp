#pragma once

#include <cstddef>
#include <numeric>
#include <vector>

namespace wordeq {

/// Disjoint sets with path compression and union by size.
class UnionFind {
public:
    explicit UnionFind(std::size_t n = 0) { reset(n); }

    void reset(std::size_t n) {
        parent_.resize(n);
        size_.assign(n, 1);
        std::iota(parent_.begin(), parent_.end(), std::size_t{0});
    }

    std::size_t size() const noexcept { return parent_.size(); }

    std::size_t find(std::size_t a) {
        std::size_t root = a;
        while (parent_[root] != root) root = parent_[root];
        while (parent_[a] != root) {
            std::size_t next = parent_[a];
            parent_[a] = root;
            a = next;
        }
        return root;
    }

    /// Returns the surviving root.
    std::size_t unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return a;
        if (size_[a] < size_[b]) std::swap(a, b);
        parent_[b] = a;
        size_[a] += size_[b];
        return a;
    }

private:
    std::vector<std::size_t> parent_;
    std::vector<std::size_t> size_;
};

/// Union by size without path compression so that unions can be undone
/// in LIFO order. Each class carries an optional letter ('\0' = none).
class RollbackUnionFind {
public:
    explicit RollbackUnionFind(std::size_t n = 0) { reset(n); }

    void reset(std::size_t n) {
        parent_.resize(n);
        size_.assign(n, 1);
        letter_.assign(n, '\0');
        std::iota(parent_.begin(), parent_.end(), std::size_t{0});
        log_.clear();
    }

    std::size_t find(std::size_t a) const {
        while (parent_[a] != a) a = parent_[a];
        return a;
    }

    char letter(std::size_t a) const { return letter_[find(a)]; }

    std::size_t checkpoint() const noexcept { return log_.size(); }

    /// Unites the classes of a and b. Returns false (leaving state unchanged)
    /// if both classes carry distinct letters.
    bool unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return true;
        if (letter_[a] && letter_[b] && letter_[a] != letter_[b]) return false;
        if (size_[a] < size_[b]) std::swap(a, b);
        log_.push_back({b, a, letter_[a]});
        parent_[b] = a;
        size_[a] += size_[b];
        if (!letter_[a]) letter_[a] = letter_[b];
        return true;
    }

    /// Fixes the letter of a's class. False on conflict.
    bool assign(std::size_t a, char c) {
        a = find(a);
        if (letter_[a]) return letter_[a] == c;
        log_.push_back({a, a, '\0'});
        letter_[a] = c;
        return true;
    }

    void rollback(std::size_t mark) {
        while (log_.size() > mark) {
            Entry e = log_.back();
            log_.pop_back();
            if (e.child == e.root) {
                letter_[e.root] = e.old_letter;
            } else {
                parent_[e.child] = e.child;
                size_[e.root] -= size_[e.child];
                letter_[e.root] = e.old_letter;
            }
        }
    }

private:
    struct Entry {
        std::size_t child;
        std::size_t root;
        char old_letter;
    };

    std::vector<std::size_t> parent_;
    std::vector<std::size_t> size_;
    std::vector<char> letter_;
    std::vector<Entry> log_;
};

}  // namespace wordeq
