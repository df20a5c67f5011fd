#include <gtest/gtest.h>

#include "qmat/lemmas.hpp"

using namespace qmat;

TEST(Qcomb, SetHelpers) {
    EXPECT_EQ(make_set({3, 1, 2}), (IndexSet{1, 2, 3}));
    EXPECT_THROW(make_set({1, 1}), Error);
    EXPECT_EQ(complement({2, 4}, 5), (IndexSet{1, 3, 5}));
    EXPECT_EQ(wt({1, 3, 4}), 8);
    EXPECT_EQ(ind({2, 5}, 5), 2);
    EXPECT_EQ(ind({2, 5}, 3), 2);
    EXPECT_EQ(subsets(range_set(1, 4), 2).size(), 6u);
    EXPECT_EQ(all_subsets({1, 2, 3}).size(), 8u);
    EXPECT_THROW(check_set({0, 2}, 3), Error);
}

TEST(Qcomb, Statistics) {
    EXPECT_EQ(length_perm({3, 1, 2}), 2);
    EXPECT_EQ(exceedance_perm({2, 3, 1}), 2);
    Bijection a{{1, 3}, {3, 4}}, b{{1, 3}, {4, 3}};
    EXPECT_EQ(length_U(a, {2}), 1);
    EXPECT_EQ(length_U(b, {2}), 2);
    EXPECT_EQ(length_U(b, {}), 1);
    EXPECT_EQ(exceedance(a), 2);
    EXPECT_EQ(exceedance(b), 1);
    EXPECT_EQ(gamma({2}, {1, 3}, {3, 4}, 1), 1);
    EXPECT_EQ(gamma({}, {1, 3}, {3, 4}, 2), 0);
    auto [r, m] = restrict_first(b);
    EXPECT_EQ(m, 2);
    EXPECT_EQ(r.source, (IndexSet{3}));
    EXPECT_EQ(r.targets, (std::vector<int>{3}));
    EXPECT_THROW(length_U(a, {3}), Error);
    EXPECT_EQ(all_bijections({1, 2, 3}, {2, 3, 4}).size(), 6u);
}

TEST(Qcomb, Cliques) {
    auto cl = clique(2, {1}, {2}, 3);
    ASSERT_EQ(cl.size(), 1u);
    EXPECT_EQ(cl[0], (SetPair{{2}, {1}}));
    EXPECT_EQ(clique(1, {}, {}, 3).size(), 3u);
    EXPECT_TRUE(clique(2, {3}, {1}, 3).empty());
    EXPECT_THROW(clique(1, {1, 2}, {1, 2}, 3), Error);

    CliqueElt x{{2, 3}, {2, 3}, 2};
    CliqueImage y = beta(2, {}, {}, 3, x);
    EXPECT_EQ(y, (CliqueImage{2, 3, {3}, {2}}));
    EXPECT_EQ(beta_inv(2, {}, {}, 3, y), x);
    EXPECT_THROW(beta(2, {}, {}, 3, CliqueElt{{2, 3}, {2, 3}, 3}), ContractViolation);
    EXPECT_THROW(beta_inv(2, {2}, {1}, 3, CliqueImage{1, 2, {}, {}}), ContractViolation);
}

TEST(Qcomb, XAndY) {
    // s = 2, t = 3 over I = J = {}: the clique of ({2}, {3}) at k = 2 holds ({3}, {2})
    EXPECT_EQ(X_def({}, {}, {3}, {2}, 2, 3, {1}, 3), 1);
    EXPECT_EQ(X_closed({}, {}, {3}, 2, 3, {1}), 1);
    EXPECT_THROW(X_def({2}, {}, {}, {}, 1, 3, {}, 3), ContractViolation);
    EXPECT_THROW(Y({}, {}, {3}, {2}, 2, 3, 3, {1}, 3), ContractViolation);
}

TEST(Qcomb, LemmasExhaustive) {
    for (int N = 1; N <= 4; ++N)
        for (auto& r : {verify_x_closed_form(N), verify_telescoping(N), verify_min_r_form(N), verify_additivity(N),
                        verify_beta_bijection(N)})
            EXPECT_TRUE(r.pass) << r.to_text();
    EXPECT_EQ(verify_telescoping(5).info["cases"], 10);
    EXPECT_EQ(verify_min_r_form(5).info["cases"], 43);
    EXPECT_EQ(verify_beta_bijection(5).info["cases"], 630);
}
