#include "ogmon/exactlin.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

using namespace ogmon;

namespace {

// Leibniz expansion; independent of the Bareiss elimination under test.
Integer leibniz(const IntMatrix& a)
{
    const std::size_t n = a.rows();
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    Integer total = 0;
    do {
        Integer term = 1;
        for (std::size_t i = 0; i < n; ++i)
            term *= a(i, p[i]);
        std::size_t inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                inversions += p[i] > p[j];
        total += inversions % 2 ? Integer(-term) : term;
    } while (std::next_permutation(p.begin(), p.end()));
    return total;
}

std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k)
{
    std::vector<std::vector<std::size_t>> out;
    std::vector<bool> mask(n, false);
    std::fill(mask.begin(), mask.begin() + k, true);
    do {
        std::vector<std::size_t> s;
        for (std::size_t i = 0; i < n; ++i)
            if (mask[i])
                s.push_back(i);
        out.push_back(s);
    } while (std::prev_permutation(mask.begin(), mask.end()));
    return out;
}

// k-th determinantal divisor: gcd of all k x k minors.
Integer determinantal_divisor(const IntMatrix& a, std::size_t k)
{
    Integer g = 0;
    for (const auto& rows : subsets(a.rows(), k))
        for (const auto& cols : subsets(a.cols(), k)) {
            IntMatrix m(k, k);
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j)
                    m(i, j) = a(rows[i], cols[j]);
            g = gcd(g, leibniz(m));
        }
    return g;
}

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, long h)
{
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            m(i, j) = static_cast<long>(rng() % (2 * h + 1)) - h;
    return m;
}

bool is_diagonal(const IntMatrix& d)
{
    for (std::size_t i = 0; i < d.rows(); ++i)
        for (std::size_t j = 0; j < d.cols(); ++j)
            if (i != j && d(i, j) != 0)
                return false;
    return true;
}

} // namespace

TEST(SmithNormalForm, TextbookExample)
{
    IntMatrix a{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}};
    SnfDecomposition s = smith_normal_form(a);
    EXPECT_EQ(s.diagonal(), (IntVector{2, 6, 12}));
    EXPECT_EQ(s.u * a * s.v, s.d);
}

TEST(SmithNormalForm, RectangularAndZero)
{
    IntMatrix a{{0, 0, 0}, {0, 4, 6}};
    SnfDecomposition s = smith_normal_form(a);
    EXPECT_EQ(s.rank(), 1u);
    EXPECT_EQ(s.d(0, 0), 2);
    EXPECT_EQ(s.u * a * s.v, s.d);
    EXPECT_EQ(smith_normal_form(IntMatrix(2, 3)).rank(), 0u);
}

TEST(SmithNormalForm, RandomFourByFourAgainstDeterminantalDivisors)
{
    std::mt19937_64 rng(7);
    for (int t = 0; t < 200; ++t) {
        IntMatrix a = random_matrix(rng, 4, 4, t % 2 ? 9 : 3);
        if (t % 5 == 0) // force rank deficiency now and then
            for (std::size_t j = 0; j < 4; ++j)
                a(3, j) = a(0, j) * 2 - a(1, j);
        SnfDecomposition s = smith_normal_form(a);
        ASSERT_EQ(s.u * a * s.v, s.d);
        ASSERT_TRUE(is_diagonal(s.d));
        EXPECT_EQ(abs(leibniz(s.u)), 1);
        EXPECT_EQ(abs(leibniz(s.v)), 1);
        IntVector d = s.diagonal();
        Integer prefix = 1;
        for (std::size_t k = 0; k < 4; ++k) {
            ASSERT_GE(d[k], 0);
            if (k + 1 < 4 && d[k] != 0) {
                EXPECT_TRUE(divides(d[k], d[k + 1]));
            }
            prefix *= d[k];
            EXPECT_EQ(prefix, determinantal_divisor(a, k + 1)) << "trial " << t << " k " << k;
        }
    }
}

TEST(Determinant, MatchesLeibniz)
{
    std::mt19937_64 rng(11);
    for (int t = 0; t < 100; ++t) {
        std::size_t n = 1 + t % 6;
        IntMatrix a = random_matrix(rng, n, n, 5);
        if (t % 7 == 0)
            for (std::size_t i = 0; i < n; ++i)
                a(i, 0) = 0;
        EXPECT_EQ(determinant(a), leibniz(a));
    }
    EXPECT_EQ(determinant(IntMatrix(0, 0)), 1);
}

TEST(Kernel, SaturatedAndComplete)
{
    std::mt19937_64 rng(3);
    for (int t = 0; t < 100; ++t) {
        IntMatrix a = random_matrix(rng, 2, 5, 6);
        for (std::size_t j = 0; j < 5; ++j)
            a(1, j) *= 3; // non-primitive rows must not produce a non-saturated kernel
        auto ker = kernel_basis(a);
        ASSERT_EQ(ker.size(), 5 - rank(a));
        for (const auto& k : ker)
            EXPECT_TRUE((a * k == IntVector(2, Integer(0))));
        // Saturation: the kernel basis extends to a unimodular basis, so its
        // maximal minors have gcd 1.
        IntMatrix k = IntMatrix::from_columns(ker, 5);
        EXPECT_EQ(determinantal_divisor(k, ker.size()), 1);
    }
}

TEST(Solve, IntegralAndRational)
{
    IntMatrix a{{2, 0}, {0, 3}};
    EXPECT_FALSE(solve_integral(a, {1, 3}).has_value());
    auto x = solve_integral(a, {4, 9});
    ASSERT_TRUE(x.has_value());
    EXPECT_EQ(*x, (IntVector{2, 3}));
    auto q = solve_rational(a, {1, 3});
    EXPECT_EQ(q[0], Rational(1, 2));
    EXPECT_EQ(q[1], Rational(1));
}

TEST(Inverse, RoundTripAndUnimodular)
{
    std::mt19937_64 rng(5);
    for (int t = 0; t < 50; ++t) {
        IntMatrix a = random_matrix(rng, 4, 4, 4);
        if (determinant(a) == 0)
            continue;
        RatMatrix inv = inverse(a);
        EXPECT_EQ(inv * to_rational(a), RatMatrix::identity(4));
    }
    IntMatrix u{{1, 2}, {1, 3}};
    EXPECT_EQ(unimodular_inverse(u) * u, IntMatrix::identity(2));
    EXPECT_THROW(unimodular_inverse(IntMatrix{{2, 0}, {0, 1}}), LatticeError);
    EXPECT_THROW(inverse(IntMatrix{{1, 2}, {2, 4}}), LatticeError);
}
