#pragma once

// Equivalence of positions of a word forced by a set of periods.

#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

namespace wordeq {

/// Positions 0..length-1 of an unknown word that has every given period.
/// key(d) == key(e) iff positions d and e carry the same letter in every
/// such word. Two periods whose sum exceeds the length are handled without
/// touching every position; further partial periods fall back to explicit
/// unions.
class PeriodClasses {
public:
    PeriodClasses() = default;
    PeriodClasses(std::size_t length, const std::vector<std::size_t>& periods) { reset(length, periods); }

    /// Periods outside (0, length) are ignored.
    void reset(std::size_t length, const std::vector<std::size_t>& periods) { reset(length, periods, {}); }

    /// As above, also checking that the letters fixed at the given positions
    /// agree on every class. Returns false (and leaves the structure
    /// partially built) on the first disagreement.
    bool reset(std::size_t length, const std::vector<std::size_t>& periods,
               const std::vector<std::pair<std::size_t, char>>& letters);

    std::uint64_t key(std::size_t d) const;

    std::size_t length() const noexcept { return length_; }
    /// Smallest period after folding with Fine and Wilf, 0 if none.
    std::size_t base_period() const noexcept { return g_; }

private:
    std::uint64_t raw_key(std::size_t d) const;
    std::uint64_t find(std::uint64_t k) const;

    std::size_t length_ = 0;
    std::size_t g_ = 0;
    std::size_t q_ = 0;  // partial period with g_ + q_ > length_
    mutable std::unordered_map<std::uint64_t, std::uint64_t> parent_;
    std::unordered_map<std::uint64_t, char> letter_;  // per root, only with partial unions
};

}  // namespace wordeq
