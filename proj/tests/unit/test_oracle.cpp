#include <gtest/gtest.h>

#include "reference.hpp"
#include "wordeq/generators.hpp"
#include "wordeq/oracle.hpp"

using namespace wordeq;

TEST(Oracle, IntroEquation) {
    Equation eq = parse_equation("X1abX2 = aX1X2b");
    OracleOptions o;
    o.per_var_cap = 2;
    o.find_all = true;
    auto r = brute_solve(eq, o);
    ASSERT_TRUE(r.sat);
    EXPECT_EQ(r.solutions.front(), (Substitution{{1, ""}, {2, ""}}));
    std::size_t brute = 0;
    for (auto& a : ref::words_up_to("ab", 2))
        for (auto& b : ref::words_up_to("ab", 2))
            if (ref::solves(eq, {{1, a}, {2, b}})) ++brute;
    EXPECT_EQ(r.solutions.size(), brute);
    for (auto& h : r.solutions) EXPECT_TRUE(ref::solves(eq, h));
    for (std::size_t i = 1; i < r.solutions.size(); ++i)
        EXPECT_LE(ref::apply(eq.lhs, r.solutions[i - 1]).size(), ref::apply(eq.lhs, r.solutions[i]).size());
}

TEST(Oracle, UnsatAndGuards) {
    auto r = brute_solve(parse_equation("a = b"));
    EXPECT_FALSE(r.sat);
    OracleOptions big;
    big.per_var_cap = 9;
    EXPECT_THROW(brute_solve(parse_equation("X1 = X1"), big), InvalidArgument);
    big.force = true;
    EXPECT_TRUE(brute_solve(parse_equation("X1 = X1"), big).sat);
}

TEST(Oracle, ExpFamilyMinimal) {
    OracleOptions o;
    o.per_var_cap = 3;
    EXPECT_FALSE(minimal_solution(gen_exp_family(2), o));
    o.per_var_cap = 4;
    auto m = minimal_solution(gen_exp_family(2), o);
    ASSERT_TRUE(m);
    EXPECT_EQ(m->h, (Substitution{{1, "aa"}, {2, "aaaa"}}));
}

TEST(Oracle, MinimalMatchesEnumeration) {
    for (const char* s : {"X1abX2 = aX1X2b", "aX1 = X1a", "X1X2 = X2X1b", "X1aX2 = X2aX1", "abX1 = X1ba"}) {
        Equation eq = parse_equation(s);
        OracleOptions o;
        o.per_var_cap = 3;
        auto m = minimal_solution(eq, o);
        auto e = ref::minimal_by_enumeration(eq, 3, eq.alphabet.letters());
        ASSERT_EQ(m.has_value(), e.sat) << s;
        if (m) EXPECT_EQ(m->length, e.total) << s;
    }
}
