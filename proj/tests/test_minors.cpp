#include <gtest/gtest.h>

#include "qmat/suite.hpp"

using namespace qmat;

namespace {

const Fixture& fx(const std::string& id) {
    static auto all = load_fixtures();
    for (auto& f : all)
        if (f.id == id) return f;
    throw Error("no fixture " + id);
}

}  // namespace

TEST(Minors, PrintedMinors) {
    for (auto id : {"dlmin_13_34", "dlmin_124_123"}) {
        auto& f = fx(id);
        EXPECT_EQ(dlmin(f.I, f.J, f.N), f.expected()) << id;
    }
    for (auto id : {"ptmin_13_34", "ptmin_124_123", "ptmin_24_23", "ptmin_24_13", "ptmin_24_12"}) {
        auto& f = fx(id);
        EXPECT_EQ(ptmin(f.U, f.I, f.J, f.N), f.expected()) << id;
    }
}

TEST(Minors, SmallCases) {
    EXPECT_EQ(dlmin({1}, {2}, 2), parse_poly("q^-3*x[1,2]", Algebra::FRT, 2));
    EXPECT_EQ(ptmin({}, {1}, {2}, 2), parse_poly("q^-2*a[1,2]", Algebra::REA, 2));
    EXPECT_EQ(ptmin({}, {2}, {1}, 2), parse_poly("q^-3*a[2,1]", Algebra::REA, 2));
    // with U = {2} the crossing term picks up l_U = 3 and one exceedance
    EXPECT_EQ(ptmin({2}, {1, 3}, {1, 3}, 3), parse_poly("q^-8*(a[1,1]*a[3,3] - q^4*a[1,3]*a[3,1])", Algebra::REA, 3));
    EXPECT_THROW(ptmin({3}, {1, 3}, {1, 3}, 3), Error);
    EXPECT_THROW(dlmin({1}, {1, 2}, 3), Error);
}

TEST(Minors, CoInvariants) {
    for (auto id : {"dlinv_N2_k1", "dlinv_N2_k2", "dlinv_N3_k1", "dlinv_N3_k2", "dlinv_N3_k3"}) {
        auto& f = fx(id);
        EXPECT_EQ(dl_coinv(f.k, f.N), f.expected()) << id;
    }
    EXPECT_THROW(dl_coinv(3, 2), Error);
}

TEST(Minors, RowExpansion) {
    for (int N = 1; N <= 4; ++N) {
        Report r = verify_rowexp(N);
        EXPECT_TRUE(r.pass) << r.to_text();
    }
    EXPECT_EQ(verify_rowexp(4).info["cases"], 179);
    Report r5 = verify_rowexp(5, 25);
    EXPECT_TRUE(r5.pass) << r5.to_text();
    RowExpander ex(3);
    ex.pt({}, {1, 2, 3}, {1, 2, 3});
    EXPECT_GT(ex.memo_size(), 0u);
}
