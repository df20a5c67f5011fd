#include <gtest/gtest.h>

#include "qmat/parse.hpp"
#include "qmat/rmatrix.hpp"

using namespace qmat;

TEST(RMatrix, Entries) {
    TensorOp R1 = build_R(1);
    EXPECT_EQ(R1.dim(), 1);
    EXPECT_EQ(R1.get(0, 0), RatFunc::q(1));
    TensorOp R = build_R(2);
    EXPECT_EQ(R.nnz(), 5u);
    EXPECT_EQ(R.get(R.flat({2, 1}), R.flat({1, 2})), RatFunc(qdiff()));
    EXPECT_EQ(R.to_text(), "(1,1) (1,1): q\n(1,2) (1,2): 1\n(2,1) (1,2): q - q^-1\n(2,1) (2,1): 1\n(2,2) (2,2): q\n");
    for (int N = 1; N <= 4; ++N) {
        EXPECT_EQ(build_R(N) * build_Rinv(N), TensorOp::identity(N, 2));
        EXPECT_EQ(build_R21(N), flip(N) * build_R(N) * flip(N));
    }
    EXPECT_EQ(build_Rinv(2).get(R.flat({2, 1}), R.flat({1, 2})), -RatFunc(qdiff()));
}

TEST(RMatrix, RtildeTwoConstructions) {
    EXPECT_EQ(build_Rtilde(1).get(0, 0), RatFunc::q(-1));
    for (int N = 1; N <= 4; ++N) EXPECT_EQ(build_Rtilde(N), rtilde_closed_form(N)) << N;
    EXPECT_EQ(build_Rtilde(1), rtilde_closed_form_printed(1));
    for (int N = 2; N <= 4; ++N) EXPECT_FALSE(build_Rtilde(N) == rtilde_closed_form_printed(N)) << N;
    TensorOp Rt = build_Rtilde(2);
    EXPECT_EQ(Rt.get(Rt.flat({2, 1}), Rt.flat({1, 2})), parse_ratfunc("-q^-1 + q^-3"));
}

TEST(RMatrix, Qybe) {
    for (int N = 1; N <= 4; ++N) EXPECT_TRUE(verify_qybe(N).pass) << N;
}

TEST(RMatrix, BlocksRankInverse) {
    TensorOp a(2, 1);
    a.add(0, 0, RatFunc(1));
    a.add(0, 1, RatFunc::q(1));
    a.add(1, 0, RatFunc::q(-1));
    a.add(1, 1, RatFunc(1));
    EXPECT_EQ(rank(a), 1);
    EXPECT_THROW(inverse(a), DivisionByZero);
    a.set(1, 1, RatFunc(2));
    EXPECT_EQ(rank(a), 2);
    EXPECT_EQ(a * inverse(a), TensorOp::identity(2, 1));
    EXPECT_EQ(build_R(3).blocks().size(), 6u);
    EXPECT_EQ(rank(TensorOp(3, 2)), 0);
}

TEST(RMatrix, PartialTransposeAndEmbed) {
    TensorOp R = build_R(3);
    EXPECT_EQ(R.partial_transpose(2).partial_transpose(2), R);
    EXPECT_EQ(R.partial_transpose(1).partial_transpose(2), R.transpose());
    EXPECT_EQ(embed(R, 2, 1, 2), R);
    EXPECT_EQ(embed(R, 2, 2, 1), build_R21(3));
    EXPECT_THROW(embed(R, 3, 2, 2), Error);
}

TEST(RMatrix, SchurWeyl) {
    TensorOp t = rho_T(1, 2, 1);
    EXPECT_EQ(t.get(0, 0), RatFunc::q(1));
    for (int N = 1; N <= 4; ++N)
        for (int k = 1; k <= 4; ++k) {
            Report r = verify_schur_weyl(N, k);
            EXPECT_TRUE(r.pass) << r.to_text();
            EXPECT_EQ(r.info["rank"].get<int>(), binomial(N, k));
        }
    // representation property on products
    HeckeElt x = HeckeElt::T(1, 3) + RatFunc::q(2) * HeckeElt::T(2, 3);
    HeckeElt y = omega(2, 3) - HeckeElt::T(2, 3);
    for (int N = 1; N <= 3; ++N) EXPECT_EQ(rho(x * y, N), rho(x, N) * rho(y, N));
    EXPECT_TRUE(rho(omega(3, 3), 2).is_zero());
}

TEST(RMatrix, MatrixRelationsHoldInTheEngine) {
    for (Algebra alg : {Algebra::REA, Algebra::FRT})
        for (int N = 2; N <= 3; ++N) {
            Report r = verify_matrix_relation(alg, N);
            EXPECT_TRUE(r.pass) << r.to_text();
        }
    // negative control: the inverse R-matrix does not present the same relations
    TensorOp bad = build_Rinv(2);
    EXPECT_FALSE(verify_matrix_relation(Algebra::FRT, 2, &bad).pass);
    TensorOp bad2 = build_Rtilde(2);
    EXPECT_FALSE(verify_matrix_relation(Algebra::REA, 2, &bad2).pass);
}
