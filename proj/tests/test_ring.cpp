#include "test_support.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace bott;
using namespace bott::testing;

TEST(Alpha, FirstIsAlwaysZero)
{
    EXPECT_TRUE(alpha(make_bott(3, {{1, 2, 5}, {1, 3, -2}}), 1).is_zero());
    EXPECT_TRUE(alpha(make_bott(1), 1).is_zero());
}

TEST(Alpha, ReadsColumn)
{
    EXPECT_EQ(alpha(hirzebruch(), 2), x(1));
    EXPECT_EQ(alpha(make_bott(3, {{1, 3, 1}, {2, 3, 1}}), 3), x(1) + x(2));
}

TEST(Alpha, IndexOutOfRange)
{
    EXPECT_THROW(alpha(hirzebruch(), 3), std::out_of_range);
    EXPECT_THROW(alpha(hirzebruch(), 0), std::out_of_range);
}

TEST(BottMatrix, Validation)
{
    EXPECT_THROW(BottMatrix(0), std::invalid_argument);
    EXPECT_THROW(BottMatrix::from_rows({{0, 1}, {1, 0}}), std::invalid_argument);
    EXPECT_THROW(BottMatrix::from_rows({{1}}), std::invalid_argument);
    EXPECT_NO_THROW(BottMatrix::from_rows({{0}}));
}

TEST(Reduce, SingleRewrite)
{
    auto a = make_bott(2, {{1, 2, 3}});
    auto r = reduce<Integer>(a, {2, 2}, 1);
    EXPECT_EQ(r, CohomClass<Integer>::term(Monomial({1, 2}), 3));
}

TEST(Reduce, CubeVanishes)
{
    auto a = make_bott(2, {{1, 2, 3}});
    EXPECT_TRUE(reduce<Integer>(a, {2, 2, 2}, 1).is_zero());
}

TEST(Reduce, FirstGeneratorSquaresToZero)
{
    EXPECT_TRUE(reduce<Integer>(make_bott(3, {{1, 2, 4}, {2, 3, -1}}), {1, 1}, 7).is_zero());
}

TEST(Multiply, Unit)
{
    auto a = make_bott(3, {{1, 3, 1}, {2, 3, 1}});
    auto w = x(1) + Integer(3) * x(3) + CohomClass<Integer>::term(Monomial({2, 3}), -2);
    EXPECT_EQ(multiply(a, one(), w), w);
}

TEST(Multiply, HirzebruchRelation)
{
    EXPECT_TRUE(multiply(hirzebruch(), x(2), x(2) - x(1)).is_zero());
}

TEST(Multiply, SumSquared)
{
    auto a = make_bott(3, {{1, 3, 1}, {2, 3, 1}});
    EXPECT_EQ(multiply(a, x(1) + x(2), x(1) + x(2)), CohomClass<Integer>::term(Monomial({1, 2}), 2));
}

TEST(Multiply, StageMismatch)
{
    EXPECT_THROW(multiply(hirzebruch(), x(3), x(1)), std::invalid_argument);
}

TEST(Pontrjagin, Examples)
{
    EXPECT_EQ(pontrjagin(make_bott(4)), one());
    EXPECT_EQ(pontrjagin(hirzebruch()), one());
    EXPECT_EQ(pontrjagin(make_bott(3, {{1, 3, 1}, {2, 3, 1}})),
              one() + CohomClass<Integer>::term(Monomial({1, 2}), 2));
}

TEST(Pontrjagin, MixedDegree)
{
    auto p = pontrjagin(make_bott(3, {{1, 3, 1}, {2, 3, 1}}));
    EXPECT_FALSE(p.is_homogeneous());
    EXPECT_EQ(p.part(0), one());
}

TEST(GradedBasis, Sizes)
{
    EXPECT_EQ(graded_basis(4, 2).size(), 6u);
    ASSERT_EQ(graded_basis(3, 0).size(), 1u);
    EXPECT_TRUE(graded_basis(3, 0)[0].empty());
    ASSERT_EQ(graded_basis(3, 3).size(), 1u);
    EXPECT_EQ(graded_basis(3, 3)[0], Monomial({1, 2, 3}));
    EXPECT_THROW(graded_basis(3, 4), std::out_of_range);
}

TEST(GradedBasis, LexicographicAndBinomial)
{
    for (std::size_t n = 1; n <= 6; ++n) {
        std::size_t total = 0;
        for (std::size_t k = 0; k <= n; ++k) {
            auto b = graded_basis(n, k);
            EXPECT_TRUE(std::is_sorted(b.begin(), b.end()));
            std::size_t binom = 1;
            for (std::size_t t = 0; t < k; ++t)
                binom = binom * (n - t) / (t + 1);
            EXPECT_EQ(b.size(), binom);
            total += b.size();
        }
        EXPECT_EQ(total, std::size_t{1} << n);
    }
}

TEST(Monomial, LexOrder)
{
    std::vector<Monomial> v{Monomial({2}), Monomial({1, 3}), Monomial(), Monomial({1, 2, 3}), Monomial({1}),
                            Monomial({1, 2})};
    std::sort(v.begin(), v.end());
    std::vector<Monomial> want{Monomial(), Monomial({1}), Monomial({1, 2}), Monomial({1, 2, 3}), Monomial({1, 3}),
                               Monomial({2})};
    EXPECT_EQ(v, want);
    EXPECT_THROW(Monomial({2, 1}), std::invalid_argument);
}

TEST(CohomClass, Formatting)
{
    auto a = make_bott(3);
    EXPECT_EQ(to_string(CohomClass<Integer>{}), "0");
    EXPECT_EQ(to_string(one() + CohomClass<Integer>::term(Monomial({1, 2}), 2)), "1 + 2*x1*x2");
    EXPECT_EQ(to_string(x(1) - x(3)), "x1 - x3");
    EXPECT_EQ(to_string(-x(2)), "-x2");
    (void)a;
}

// Rewrites the smallest repeated index first.
struct SmallestRepeated {
    std::size_t operator()(const std::vector<unsigned>& e) const
    {
        for (std::size_t j = 1; j <= e.size(); ++j)
            if (e[j - 1] >= 2)
                return j;
        return 0;
    }
};

struct RandomRepeated {
    std::mt19937* rng;
    std::size_t operator()(const std::vector<unsigned>& e) const
    {
        std::vector<std::size_t> rep;
        for (std::size_t j = 1; j <= e.size(); ++j)
            if (e[j - 1] >= 2)
                rep.push_back(j);
        if (rep.empty())
            return 0;
        return rep[std::uniform_int_distribution<std::size_t>(0, rep.size() - 1)(*rng)];
    }
};

TEST(Reduce, ConfluentUnderAnyRewriteOrder)
{
    std::mt19937 rng(1234);
    for (int trial = 0; trial < 400; ++trial) {
        std::size_t n = 1 + rng() % 5;
        auto a = random_bott(rng, n, 3);
        std::vector<std::size_t> raw;
        for (std::size_t i = 1; i <= n; ++i)
            for (unsigned k = rng() % 4; k > 0; --k)
                raw.push_back(i);
        std::shuffle(raw.begin(), raw.end(), rng);
        auto ref = reduce<Integer>(a, raw, 1);
        EXPECT_EQ(reduce<Integer>(a, raw, 1, SmallestRepeated{}), ref);
        EXPECT_EQ(reduce<Integer>(a, raw, 1, RandomRepeated{&rng}), ref);
    }
}

TEST(Multiply, CommutativeAndAssociative)
{
    std::mt19937 rng(99);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t n = 1 + rng() % 5;
        auto a = random_bott(rng, n, 3);
        auto u = random_class(rng, n, 4, 3), v = random_class(rng, n, 4, 3), w = random_class(rng, n, 4, 3);
        EXPECT_EQ(multiply(a, u, v), multiply(a, v, u));
        EXPECT_EQ(multiply(a, multiply(a, u, v), w), multiply(a, u, multiply(a, v, w)));
        EXPECT_EQ(multiply(a, u, v + w), multiply(a, u, v) + multiply(a, u, w));
    }
}
