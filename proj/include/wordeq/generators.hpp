#pragma once

// Instance generators. Every random generator is fully determined by its seed.

#include <cstdint>
#include <string>

#include "wordeq/terms.hpp"

namespace wordeq {

/// Xn a Xn b X(n-1) b ... b X1 = a Xn X(n-1)^2 b ... b X1^2 b aa. Requires n >= 2.
Equation gen_exp_family(unsigned n);

/// The family w c X1 = X1 c w, whose minimal solution maps X1 to w.
Equation gen_conjugate_family(const std::string& w);

enum class RandomClass { RegularOrdered, Quadratic, ClassD };

RandomClass parse_random_class(const std::string& name);
std::string to_string(RandomClass c);

struct RandomParams {
    RandomClass cls = RandomClass::RegularOrdered;
    unsigned vars = 2;
    /// Symbols per side for regular-ordered and quadratic equations.
    unsigned side_length = 4;
    /// Total symbol count |lhs| + |rhs| for class D.
    unsigned size = 20;
    std::string alphabet = "ab";
    std::uint64_t seed = 0;
};

/// Throws InvalidArgument when the parameters admit no instance.
Equation gen_random(const RandomParams& params);

}  // namespace wordeq
