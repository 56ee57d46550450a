#pragma once

// Periods, primitive roots, conjugacy and systems of conjugacy equations.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace wordeq {

/// Throws InvalidArgument on the empty word.
std::size_t smallest_period(std::string_view w);

struct PrimitiveRoot {
    std::string root;
    std::size_t exponent = 1;
};

PrimitiveRoot primitive_root(std::string_view w);

bool is_primitive(std::string_view w);

/// True iff w is a prefix of v^omega. Throws InvalidArgument if v is empty.
bool is_prefix_of_power(std::string_view w, std::string_view v);

struct FineWilf {
    std::size_t common_prefix = 0;  // computed up to |u|+|v|
    std::size_t threshold = 0;      // |u|+|v|-gcd(|u|,|v|)
};

/// Throws InvalidArgument if u or v is empty.
FineWilf fine_wilf_agree(std::string_view u, std::string_view v);

/// Solutions y of x·y = y·z.
///
/// Either every y works (x = z = empty) or x = (uv)^p, z = (vu)^p with uv
/// primitive and the solutions are exactly y = (uv)^q u, q >= 0. u is the
/// shortest prefix of the primitive root of x that realises the rotation.
struct ConjugacySolution {
    bool any_y = false;
    std::string u;
    std::string v;
    std::size_t p = 0;

    bool contains(std::string_view y) const;
    /// All solutions with |y| <= max_len over the given alphabet, shortest first.
    std::vector<std::string> family(std::size_t max_len, std::string_view alphabet = "ab") const;
};

std::optional<ConjugacySolution> solve_conjugacy(std::string_view x, std::string_view z);

/// Equations A_i ... A_1 x = y B_1 ... B_i for i = 1..k.
struct PhiSystem {
    std::vector<std::string> A;
    std::vector<std::string> B;
};

bool phi_satisfied(const PhiSystem& sys, std::string_view x, std::string_view y);

/// Solution set of a Phi-system at fixed lengths. Every position of x and y
/// is either a fixed letter or belongs to a free class; distinct free classes
/// take independent letters. No free classes means a unique solution.
struct PhiSolution {
    std::vector<int> x_template;  // letter code (>= 0) or -(class+1)
    std::vector<int> y_template;
    std::size_t free_classes = 0;
    /// Set when the long-y characterisation produced the answer and
    /// some A_i...A_2 is non-empty: A_1 x = y B_1 = (uv)^p u.
    std::optional<ConjugacySolution> period;
    std::size_t p = 0;
    bool long_case = false;

    bool unique() const { return free_classes == 0; }
    std::pair<std::string, std::string> representative(char fill = 'a') const;
    std::vector<std::pair<std::string, std::string>> enumerate(std::string_view alphabet) const;
};

std::optional<PhiSolution> solve_phi_system(const PhiSystem& sys, std::size_t x_len, std::size_t y_len);

}  // namespace wordeq
