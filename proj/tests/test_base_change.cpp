#include "test_support.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace bott;
using namespace bott::testing;

namespace {

std::vector<BottMatrix> small_family()
{
    std::vector<BottMatrix> out;
    for (std::size_t n = 1; n <= 3; ++n)
        for (auto& a : scan::enumerate_matrices(n, 2, scan::Parity::all))
            out.push_back(a);
    return out;
}

CohomClass<Rational> y_in_x_class(const BottMatrix& a, std::size_t j)
{
    return y_basis(a).y_in_x(j).to_class();
}

} // namespace

TEST(YBasis, ZeroMatrixIsIdentity)
{
    auto d = y_basis(make_bott(3));
    EXPECT_EQ(d.inv, Matrix<Rational>::identity(3));
}

TEST(YBasis, TwoByTwo)
{
    EXPECT_EQ(y_basis(make_bott(2, {{1, 2, 2}})).inv(0, 1), Rational(1));
    EXPECT_EQ(y_basis(hirzebruch()).inv(0, 1), Rational(1, 2));
}

TEST(YBasis, ExactInverseAndUnipotent)
{
    std::mt19937 rng(5);
    for (int t = 0; t < 100; ++t) {
        auto a = random_bott(rng, 1 + rng() % 5, 4);
        auto d = y_basis(a);
        EXPECT_EQ(d.shift * d.inv, Matrix<Rational>::identity(a.n()));
        for (std::size_t i = 0; i < a.n(); ++i) {
            EXPECT_EQ(d.inv(i, i), 1);
            for (std::size_t j = 0; j < i; ++j)
                EXPECT_EQ(d.inv(i, j), 0);
        }
    }
}

TEST(Height, Definition)
{
    EXPECT_EQ(height(x_vec({1, 3})), 2u);
    EXPECT_EQ(height(x_vec({0, 0, 0})), 0u);
    std::mt19937 rng(8);
    for (int t = 0; t < 50; ++t) {
        auto a = random_bott(rng, 1 + rng() % 5, 3);
        for (std::size_t j = 1; j <= a.n(); ++j)
            EXPECT_LT(height(alpha_form(a, j)), j);
    }
}

TEST(YSquare, Examples)
{
    EXPECT_TRUE(y_square_expansion(make_bott(3, {{1, 2, 1}}), 1).is_zero());
    EXPECT_TRUE(y_square_expansion(hirzebruch(), 2).is_zero());
    EXPECT_EQ(y_square_expansion(make_bott(3, {{1, 3, 1}, {2, 3, 1}}), 3),
              CohomClass<Rational>::term(Monomial({1, 2}), Rational(1, 2)));
}

TEST(YSquare, OnlyLowerIndices)
{
    std::mt19937 rng(17);
    for (int t = 0; t < 50; ++t) {
        auto a = random_bott(rng, 2 + rng() % 4, 3);
        for (std::size_t j = 1; j <= a.n(); ++j) {
            auto sq = y_square_expansion(a, j);
            for (const auto& [m, c] : sq.terms()) {
                EXPECT_EQ(m.size(), 2u);
                EXPECT_LT(m.top(), j);
            }
        }
    }
}

TEST(Triviality, Z2)
{
    EXPECT_TRUE(is_z2_trivial(make_bott(3)));
    EXPECT_TRUE(is_z2_trivial(make_bott(2, {{1, 2, 2}})));
    EXPECT_FALSE(is_z2_trivial(hirzebruch()));
}

TEST(Triviality, Q)
{
    EXPECT_TRUE(is_q_trivial(make_bott(3)));
    EXPECT_TRUE(is_q_trivial(hirzebruch()));
    EXPECT_FALSE(is_q_trivial(make_bott(3, {{1, 3, 1}, {2, 3, 1}})));
}

// alpha_j^2 = 0 for all j exactly when the y-basis multiplies like that of (CP^1)^n.
TEST(Triviality, QMatchesYBasisSquares)
{
    for (const auto& a : small_family()) {
        bool squares_vanish = true;
        for (std::size_t j = 1; j <= a.n(); ++j)
            squares_vanish = squares_vanish && y_square_expansion(a, j).is_zero();
        EXPECT_EQ(is_q_trivial(a), squares_vanish) << to_string(a);
    }
}

TEST(Exceptional, Examples)
{
    auto e = exceptional_type(make_bott(2, {{1, 2, 2}}), 2);
    EXPECT_EQ(e.kind, ExceptionalReport::Kind::even_exceptional);
    EXPECT_EQ(e.c, 2);
    EXPECT_EQ(e.i, 1u);

    e = exceptional_type(hirzebruch(), 2);
    EXPECT_EQ(e.kind, ExceptionalReport::Kind::exceptional);
    EXPECT_EQ(e.c, 1);
    EXPECT_EQ(e.i, 1u);

    EXPECT_EQ(exceptional_type(make_bott(3, {{1, 2, 4}}), 1).kind, ExceptionalReport::Kind::none);
}

TEST(Exceptional, MatchesDefinition)
{
    for (const auto& a : small_family()) {
        const auto yb = y_basis(a);
        for (std::size_t j = 1; j <= a.n(); ++j) {
            auto r = exceptional_type(a, yb, j);
            if (!r.is_exceptional())
                continue;
            // alpha_j = c * y_i, checked in x-coordinates.
            auto rhs = Rational(r.c) * yb.y_in_x(r.i);
            EXPECT_EQ(degree_two_cast<Rational>(alpha_form(a, j)), rhs) << to_string(a);
            EXPECT_LT(r.i, j);
            EXPECT_EQ(r.is_even_exceptional(), is_even(r.c));
        }
    }
}

TEST(SquareZero, Examples)
{
    auto sorted = [](std::vector<DegreeTwo<Integer>> v) {
        std::sort(v.begin(), v.end());
        return v;
    };
    EXPECT_EQ(sorted(primitive_square_zero(make_bott(2))),
              sorted({x_vec({1, 0}), x_vec({-1, 0}), x_vec({0, 1}), x_vec({0, -1})}));
    EXPECT_EQ(sorted(primitive_square_zero(hirzebruch())),
              sorted({x_vec({1, 0}), x_vec({-1, 0}), x_vec({-1, 2}), x_vec({1, -2})}));
    EXPECT_EQ(sorted(primitive_square_zero(make_bott(2, {{1, 2, 2}}))),
              sorted({x_vec({1, 0}), x_vec({-1, 0}), x_vec({-1, 1}), x_vec({1, -1})}));
}

TEST(SquareZero, AgreesWithBruteForce)
{
    for (const auto& a : small_family()) {
        auto f = primitive_square_zero(a);
        std::sort(f.begin(), f.end());
        EXPECT_EQ(f, oracle::square_zero(a, 6)) << to_string(a);
    }
}

TEST(VanishingPair, Examples)
{
    auto a = make_bott(3, {{1, 3, 1}, {2, 3, 1}});
    for (std::size_t j = 1; j <= 3; ++j) {
        DegreeTwo<Integer> xj(3);
        xj[j] = 1;
        auto r = vanishing_pair_decompose(a, xj, xj - alpha_form(a, j));
        auto* d = std::get_if<PairDecomposition>(&r);
        ASSERT_NE(d, nullptr);
        EXPECT_EQ(d->a, 1);
        EXPECT_EQ(d->j, j);
        EXPECT_TRUE(d->w.is_zero());
        EXPECT_EQ(d->branch, PairDecomposition::Branch::same_sign);
    }

    EXPECT_TRUE(std::holds_alternative<NotAPair>(vanishing_pair_decompose(make_bott(2), x_vec({1, 0}), x_vec({0, 1}))));

    auto r = vanishing_pair_decompose(hirzebruch(), x_vec({0, 1}), x_vec({-1, 1}));
    auto* d = std::get_if<PairDecomposition>(&r);
    ASSERT_NE(d, nullptr);
    EXPECT_EQ(d->a, 1);
    EXPECT_EQ(d->j, 2u);
    EXPECT_TRUE(d->w.is_zero());
    EXPECT_EQ(d->branch, PairDecomposition::Branch::same_sign);
}

TEST(VanishingPair, RejectsNonPrimitive)
{
    EXPECT_THROW(vanishing_pair_decompose(hirzebruch(), x_vec({2, 0}), x_vec({0, 1})), std::invalid_argument);
    EXPECT_THROW(vanishing_pair_decompose(hirzebruch(), x_vec({0, 0}), x_vec({0, 1})), std::invalid_argument);
}

TEST(VanishingPair, BruteForcePairsDecompose)
{
    std::mt19937 rng(21);
    for (int t = 0; t < 8; ++t) {
        auto a = random_bott(rng, 3, 2);
        for (const auto& [u, v] : oracle::vanishing_pairs(a, 3)) {
            auto r = vanishing_pair_decompose(a, u, v);
            auto* d = std::get_if<PairDecomposition>(&r);
            ASSERT_NE(d, nullptr) << to_string(a) << " " << to_string(u) << " " << to_string(v);
            EXPECT_EQ(reconstruct(a, *d), std::make_pair(u, v));
            EXPECT_LT(height(d->w), d->j);
        }
    }
}

TEST(VanishingPair, DecompositionsReconstructGenuinePairs)
{
    std::mt19937 rng(22);
    for (int t = 0; t < 200; ++t) {
        auto a = random_bott(rng, 3, 2);
        auto u = oracle::box(3, 3)[rng() % 343];
        auto v = oracle::box(3, 3)[rng() % 343];
        if (!is_primitive(u) || !is_primitive(v))
            continue;
        auto r = vanishing_pair_decompose(a, u, v);
        if (auto* d = std::get_if<PairDecomposition>(&r)) {
            auto [ru, rv] = reconstruct(a, *d);
            EXPECT_TRUE(multiply(a, ru.to_class(), rv.to_class()).is_zero());
        } else {
            EXPECT_FALSE(multiply(a, u.to_class(), v.to_class()).is_zero());
        }
    }
}

// For i != j with alpha_i, alpha_j even, the integral classes y_i and y_j differ mod 2.
TEST(YBasis, DistinctEvenYsDifferModTwo)
{
    for (const auto& a : small_family()) {
        auto yb = y_basis(a);
        for (std::size_t i = 1; i <= a.n(); ++i)
            for (std::size_t j = i + 1; j <= a.n(); ++j) {
                if (!is_even(alpha_form(a, i)) || !is_even(alpha_form(a, j)))
                    continue;
                auto diff = degree_two_cast<Integer>(yb.y_in_x(i) - yb.y_in_x(j));
                EXPECT_FALSE(is_even(diff)) << to_string(a);
            }
    }
}

TEST(YBasis, FourYSquaredIsAlphaSquared)
{
    std::mt19937 rng(31);
    for (int t = 0; t < 100; ++t) {
        auto a = random_bott(rng, 1 + rng() % 5, 3);
        for (std::size_t j = 1; j <= a.n(); ++j) {
            auto y = y_in_x_class(a, j);
            auto al = alpha<Rational>(a, j);
            EXPECT_EQ(Rational(4) * multiply(a, y, y), multiply(a, al, al));
        }
    }
}

TEST(YBasis, PontrjaginFromY)
{
    std::mt19937 rng(32);
    for (int t = 0; t < 60; ++t) {
        auto a = random_bott(rng, 1 + rng() % 5, 3);
        auto p = CohomClass<Rational>::constant(1);
        for (std::size_t j = 1; j <= a.n(); ++j) {
            auto y = y_in_x_class(a, j);
            p = multiply(a, p, CohomClass<Rational>::constant(1) + Rational(4) * multiply(a, y, y));
        }
        EXPECT_EQ(p, class_cast<Rational>(pontrjagin(a)));
    }
}
