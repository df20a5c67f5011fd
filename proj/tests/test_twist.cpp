#include <gtest/gtest.h>

#include "qmat/suite.hpp"

using namespace qmat;

TEST(Twist, Pairs) {
    Twist tw(2);
    EXPECT_EQ(to_text(tw.psi_pair(1, 2, 2, 1)), "q*a[1,2]*a[2,1]");
    EXPECT_EQ(to_text(tw.phi_pair(2, 1, 1, 2)),
              "(1 - q^-2)*x[1,1]*x[2,2] + q^-1*x[1,2]*x[2,1] + (-1 + q^-2)*x[2,2]*x[2,2]");
    EXPECT_EQ(to_text(psi2(1, 1, 2, 2, 2)), "a[1,1]*a[2,2]");
    EXPECT_EQ(to_text(tw.phi(parse_poly("a[1,1]", Algebra::REA, 2))), "x[1,1]");
    EXPECT_THROW(tw.phi(parse_poly("a[1,1]*a[1,1]*a[1,1]", Algebra::REA, 2)), OutOfScope);
    EXPECT_THROW(tw.psi(parse_poly("a[1,1]", Algebra::REA, 2)), Error);
}

TEST(Twist, MutuallyInverse) {
    for (int N = 1; N <= 3; ++N) {
        Report r = verify_twist_inverse(N);
        EXPECT_TRUE(r.pass) << r.to_text();
    }
}

TEST(Twist, PhiRowLemma) {
    for (int N = 2; N <= 3; ++N) {
        Report r = verify_phi_row_lemma(N);
        EXPECT_TRUE(r.pass) << r.to_text();
    }
}

TEST(Twist, TwistedMinors) {
    EXPECT_EQ(to_text(tmin({1}, {2}, 3)), "q^-3*a[1,2]");
    auto fx = load_fixtures();
    for (auto& f : fx) {
        if (f.kind != "tmin") continue;
        if (f.stored) {
            EXPECT_EQ(tmin(f.I, f.J, f.N), f.expected()) << f.id;
            EXPECT_FALSE(fixture_live_value(f).has_value());
        } else {
            EXPECT_EQ(tmin(f.I, f.J, f.N), f.expected()) << f.id;
        }
    }
    EXPECT_THROW(tmin({1, 2, 3}, {1, 2, 3}, 3), OutOfScope);
}

TEST(Twist, PsiOfCoInvariants) {
    for (int N = 1; N <= 3; ++N)
        for (int k = 1; k <= std::min(N, 2); ++k) {
            Report r = verify_psi_dlinv(N, k);
            EXPECT_TRUE(r.pass) << r.to_text();
            EXPECT_EQ(r.info["scalar"], "1");
        }
    EXPECT_THROW(verify_psi_dlinv(3, 3), OutOfScope);
}

TEST(Twist, AlphaMaps) {
    for (int N = 1; N <= 3; ++N) {
        Report r = verify_alpha_twisted(N);
        EXPECT_TRUE(r.pass) << r.to_text();
    }
    Report one = alpha_calibrate(1, {2, 3});
    EXPECT_TRUE(one.pass);
    EXPECT_EQ(one.info["weights_matching_both"], nlohmann::json::parse("[[-2,0]]"));
    Report two = alpha_calibrate(2, {2}, 2);
    EXPECT_FALSE(two.pass);
    EXPECT_TRUE(two.info["weights_matching_s_k"].empty());
}
