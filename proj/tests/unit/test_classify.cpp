#include <gtest/gtest.h>

#include <random>

#include "reference.hpp"
#include "wordeq/classify.hpp"

using namespace wordeq;

namespace {

Pattern pat(const std::string& s) { return parse_equation(s + " = a").lhs; }

}  // namespace

TEST(Classify, PatternExamples) {
    EXPECT_TRUE(classify_pattern(pat("aX1aX2cX3X4b")).regular);
    auto r = classify_pattern(pat("X1bX2X2bX1"));
    EXPECT_FALSE(r.non_cross);
    EXPECT_TRUE(r.non_cross_witness.has_value());
}

TEST(Classify, OrderedExamples) {
    auto a = classify(parse_equation("X1X1aX2X3b = X1aX1X2bX3"));
    EXPECT_TRUE(a.non_cross);
    ASSERT_TRUE(a.ordered.has_value());
    EXPECT_TRUE(*a.ordered);
    auto b = classify(parse_equation("X1X1aX3X2b = X1aX1X2bX3"));
    EXPECT_TRUE(b.non_cross);
    ASSERT_TRUE(b.ordered.has_value());
    EXPECT_FALSE(*b.ordered);
    EXPECT_TRUE(b.ordered_witness.has_value());
}

TEST(Classify, OrderedNotApplicable) {
    auto r = classify(parse_equation("X1X2X1X2 = a"));
    EXPECT_FALSE(r.non_cross);
    EXPECT_FALSE(r.regular);
    EXPECT_FALSE(r.ordered.has_value());
}

TEST(Classify, Quadratic) {
    EXPECT_TRUE(classify(parse_equation("X1aX2 = X2aX1")).quadratic);
    auto r = classify(parse_equation("X1X1 = X1"));
    EXPECT_FALSE(r.quadratic);
    EXPECT_TRUE(r.quadratic_third.has_value());
}

TEST(ClassD, Membership) {
    EXPECT_EQ(is_class_d(parse_equation("X1aX1 = X2aX2X3")), std::nullopt);
    EXPECT_EQ(is_class_d(parse_equation("X1aX1 = X2X1bX1X3")), std::optional<VarId>(1));
    EXPECT_EQ(is_class_d(parse_equation("X1X2X1X2 = aab")), std::nullopt);
    EXPECT_EQ(is_class_d(parse_equation("X1aX2 = X2aX1")), std::nullopt);
    EXPECT_EQ(is_class_d(parse_equation("X1X2X1 = aa")), std::nullopt);
    auto m = class_d_membership(parse_equation("X2aX3 = X4bX5"));
    EXPECT_TRUE(m.member);
    EXPECT_FALSE(m.repeated.has_value());
}

TEST(Classify, AgreesWithDefinitions) {
    std::mt19937_64 rng(2024);
    for (int t = 0; t < 10000; ++t) {
        auto side = [&] {
            Pattern p;
            int len = 1 + static_cast<int>(rng() % 6);
            for (int i = 0; i < len; ++i)
                p.push_back(rng() % 3 ? Symbol::variable(1 + static_cast<VarId>(rng() % 3))
                                      : Symbol::constant("ab"[rng() % 2]));
            return p;
        };
        Equation eq(side(), side(), Alphabet("ab"));
        auto pl = classify_pattern(eq.lhs);
        EXPECT_EQ(pl.regular, ref::regular(eq.lhs));
        EXPECT_EQ(pl.non_cross, ref::non_cross(eq.lhs));
        if (pl.regular) EXPECT_TRUE(pl.non_cross);
        auto r = classify(eq);
        bool reg = ref::regular(eq.lhs) && ref::regular(eq.rhs);
        bool nc = ref::non_cross(eq.lhs) && ref::non_cross(eq.rhs);
        EXPECT_EQ(r.regular, reg);
        EXPECT_EQ(r.non_cross, nc);
        EXPECT_EQ(r.quadratic, ref::quadratic(eq));
        if (reg || nc) {
            ASSERT_TRUE(r.ordered.has_value());
            EXPECT_EQ(*r.ordered, ref::ordered(eq)) << render_equation(eq);
        } else {
            EXPECT_FALSE(r.ordered.has_value());
        }
        if (reg) EXPECT_TRUE(r.quadratic);
    }
}
