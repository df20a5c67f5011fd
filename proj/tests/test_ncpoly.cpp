#include <gtest/gtest.h>

#include <random>

#include "qmat/parse.hpp"

using namespace qmat;

namespace {

NCPoly random_poly(std::mt19937& rng, Algebra alg, int N) {
    std::uniform_int_distribution<int> idx(1, N), deg(0, 3), nterm(1, 4), c(-3, 3), e(-4, 4);
    NCPoly p(alg, N);
    int n = nterm(rng);
    for (int t = 0; t < n; ++t) {
        Word w;
        int d = deg(rng);
        for (int i = 0; i < d; ++i) w.push_back(gen(idx(rng), idx(rng)));
        RatFunc coef = RatFunc(LaurentPoly::monomial(Rational(c(rng)), e(rng)) + LaurentPoly::q(e(rng)));
        if (t % 3 == 2) coef /= RatFunc(qint(2));
        p.add(w, coef);
    }
    return p;
}

}  // namespace

TEST(NCPoly, GeneratorOrder) {
    EXPECT_LT(gen(2, 4), gen(3, 2));
    EXPECT_LT(gen(2, 2), gen(2, 3));
    EXPECT_EQ(gen(1, 1), gen(1, 1));
    EXPECT_FALSE(gen(3, 1) < gen(2, 4));
}

TEST(NCPoly, FreeProduct) {
    NCPoly a11 = NCPoly::generator(Algebra::REA, 2, 1, 1), a12 = NCPoly::generator(Algebra::REA, 2, 1, 2),
           a21 = NCPoly::generator(Algebra::REA, 2, 2, 1);
    NCPoly p = a11 * a12;
    ASSERT_EQ(p.size(), 1u);
    EXPECT_EQ(p.coeff(Word{gen(1, 1), gen(1, 2)}), RatFunc(1));
    NCPoly one = NCPoly::one(Algebra::REA, 2);
    EXPECT_EQ(p * one, p);
    EXPECT_EQ(one * p, p);
    NCPoly r = (a12 + a21) * a11;
    EXPECT_EQ(r.size(), 2u);
    EXPECT_EQ(r.coeff(Word{gen(1, 2), gen(1, 1)}), RatFunc(1));
    EXPECT_EQ(r.coeff(Word{gen(2, 1), gen(1, 1)}), RatFunc(1));
    NCPoly x = NCPoly::generator(Algebra::FRT, 2, 1, 1);
    EXPECT_THROW(a11 * x, Error);
    EXPECT_THROW(a11 + x, Error);
}

TEST(NCPoly, ParseExamples) {
    NCPoly w = parse_poly("a[1,3]*a[3,2]*a[3,3]*a[4,1]");
    EXPECT_EQ(w.N(), 4);
    ASSERT_EQ(w.size(), 1u);
    EXPECT_EQ(w.coeff(Word{gen(1, 3), gen(3, 2), gen(3, 3), gen(4, 1)}), RatFunc(1));
    EXPECT_TRUE(is_ordered(w.terms().begin()->first));

    NCPoly c1 = parse_poly("q^-2*a[1,1] + q^-4*a[2,2]");
    EXPECT_EQ(to_text(c1), "q^-2*a[1,1] + q^-4*a[2,2]");
    EXPECT_EQ(parse_poly(to_text(c1)), c1);

    EXPECT_THROW(parse_poly(""), ParseError);
    EXPECT_THROW(parse_poly("a[1,2] +"), ParseError);
    EXPECT_THROW(parse_poly("a[1,2]*x[1,1]"), ParseError);
    EXPECT_THROW(parse_poly("a[3,1]", Algebra::REA, 2), ParseError);
    try {
        parse_poly("a[1,1] + ?");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.pos, 9u);
    }
}

TEST(NCPoly, PrintingFactorsLowestPower) {
    NCPoly c2 = parse_poly("q^-6*(a[1,1]*a[2,2] - q^2*a[1,2]*a[2,1])");
    EXPECT_EQ(to_text(c2), "q^-6*(a[1,1]*a[2,2] - q^2*a[1,2]*a[2,1])");
    NCPoly n = parse_poly("a[1,1]*a[1,2] + (1 - q^-2)*a[1,2]*a[2,2]");
    EXPECT_EQ(to_text(n), "a[1,1]*a[1,2] + (1 - q^-2)*a[1,2]*a[2,2]");
    EXPECT_EQ(to_text(NCPoly(Algebra::FRT, 2)), "0");
    EXPECT_EQ(to_text(parse_poly("-q^3*x[2,1] + 2")), "2 - q^3*x[2,1]");
}

TEST(NCPoly, RandomRoundTrips) {
    std::mt19937 rng(3);
    for (int it = 0; it < 200; ++it) {
        Algebra alg = it % 2 ? Algebra::REA : Algebra::FRT;
        NCPoly p = random_poly(rng, alg, 3);
        EXPECT_EQ(parse_poly(to_text(p), alg, 3), p) << to_text(p);
        EXPECT_EQ(ncpoly_from_json(to_json(p)), p);
    }
}

TEST(NCPoly, FreeProductAssociative) {
    std::mt19937 rng(5);
    for (int it = 0; it < 50; ++it) {
        NCPoly a = random_poly(rng, Algebra::REA, 2), b = random_poly(rng, Algebra::REA, 2),
               c = random_poly(rng, Algebra::REA, 2);
        EXPECT_EQ((a * b) * c, a * (b * c));
    }
}

TEST(NCPoly, DisplayOrderIsTotal) {
    std::mt19937 rng(9);
    NCPoly p = random_poly(rng, Algebra::REA, 3) + random_poly(rng, Algebra::REA, 3);
    const Word* prev = nullptr;
    for (auto& [w, c] : p.terms()) {
        if (prev) EXPECT_TRUE(WordLess{}(*prev, w));
        prev = &w;
    }
}

TEST(NCPoly, JsonSchema) {
    NCPoly p = parse_poly("a[1,2]*a[2,1]", Algebra::REA, 3);
    EXPECT_EQ(to_json(p).dump(),
              R"({"N":3,"algebra":"REA","terms":[{"coeff":{"den":{"0":"1"},"num":{"0":"1"}},"word":[[1,2],[2,1]]}]})");
    EXPECT_EQ(to_latex(parse_poly("q^-2*a[1,1] - (q - q^-1)*a[1,2]*a[2,1]")),
              "q^{-2}a^{1}_{1} + \\left(-q + q^{-1}\\right)a^{1}_{2}a^{2}_{1}");
}
