#include <gtest/gtest.h>

#include "qmat/suite.hpp"

using namespace qmat;

TEST(Central, PrintedElements) {
    for (auto& f : load_fixtures())
        if (f.kind == "ck") EXPECT_EQ(c_k(f.N, f.k), f.expected()) << f.id;
    for (int N = 1; N <= 4; ++N)
        for (int k = 1; k <= N; ++k) EXPECT_EQ(ck_direct(N, k), ck_minors(N, k));
    Report r = check_fixtures();
    EXPECT_TRUE(r.pass) << r.to_text();
    EXPECT_EQ(r.info["stored_only"], nlohmann::json::parse(R"(["tmin_124_123"])"));
}

TEST(Central, PowerTraces) {
    EXPECT_EQ(to_text(s_k(2, 1)), to_text(c_k(2, 1)));
    EXPECT_EQ(to_text(s_k(2, 2)),
              "q^-2*a[1,1]*a[1,1] + (q^-4 - q^-6)*a[1,1]*a[2,2] + (q^-2 + q^-4)*a[1,2]*a[2,1] + q^-6*a[2,2]*a[2,2]");
}

TEST(Central, Centrality) {
    for (int N = 1; N <= 3; ++N)
        for (int k = 1; k <= N; ++k) {
            Report r = verify_central(N, k, 2);
            EXPECT_TRUE(r.pass) << r.to_text();
        }
    Engine eng(Algebra::REA, 2);
    Report bad = verify_central_elements(2, {{"a11", eng.generator(1, 1)}});
    EXPECT_FALSE(bad.pass);
}

TEST(Central, CayleyHamilton) {
    for (int N = 1; N <= 3; ++N) {
        Report r = verify_qch(N);
        EXPECT_TRUE(r.pass) << r.to_text();
    }
}

TEST(Central, NewtonFit) {
    Central C(3);
    for (int k = 1; k <= 3; ++k) {
        Report r = fit_newton(C, k);
        EXPECT_TRUE(r.pass) << r.to_text();
        EXPECT_FALSE(r.info["printed_s0=1"]["consistent"].get<bool>());
        EXPECT_FALSE(r.info["printed_s0=trq(1)"]["consistent"].get<bool>());
    }
    EXPECT_EQ(fit_newton(C, 3).info["fitted"]["lambda"], nlohmann::json::parse(R"(["q^-4","-q^-2","1"])"));
    EXPECT_FALSE(fit_newton(C, 2, true).pass);
}

TEST(Central, CliqueSums) {
    Report one = verify_clique_sum(3, 2, {1}, {2});
    EXPECT_TRUE(one.pass);
    EXPECT_EQ(one.info["clique_size"], 1);
    Report all = verify_clique_sums(3);
    EXPECT_TRUE(all.pass) << all.to_text();
    EXPECT_EQ(all.info["cases"], 29);
    EXPECT_EQ(all.info["nonempty_cliques"], 13);
    EXPECT_THROW(verify_clique_sum(3, 3, {}, {}), OutOfScope);
    EXPECT_TRUE(fixture_backed_degree3_cliques(4).empty());
}

TEST(Central, Counit) {
    EXPECT_EQ(counit(c_k(2, 2)), RatFunc::q(-6));
    for (int N = 1; N <= 3; ++N) {
        Report r = verify_unipotent(N);
        EXPECT_TRUE(r.pass) << r.to_text();
        EXPECT_TRUE(counit_relation_audit(N).pass);
    }
}

TEST(Central, Subalgebra) {
    for (int k = 1; k <= 3; ++k) {
        Report r = submatrix_suite(3, k);
        EXPECT_TRUE(r.pass) << r.to_text();
    }
    EXPECT_EQ(to_text(detq_block(3, 2)), "q^-6*(a[2,2]*a[3,3] - q^2*a[2,3]*a[3,2])");
}

TEST(Central, Freeness) {
    Central C(3);
    Report r = verify_freeness(C, 2);
    EXPECT_TRUE(r.pass) << r.to_text();
    EXPECT_EQ(classical_limit(C.c(2)), principal_minor_sum(3, 2));
}
