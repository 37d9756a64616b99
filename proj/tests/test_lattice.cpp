#include "ogmon/lattice.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace ogmon;

namespace {

IntMatrix leading_minor(const IntMatrix& g, std::size_t k)
{
    IntMatrix m(k, k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            m(i, j) = g(i, j);
    return m;
}

LatVector random_vector(const Lattice& l, std::mt19937_64& rng, long h)
{
    IntVector c(l.rank());
    for (auto& x : c)
        x = static_cast<long>(rng() % (2 * h + 1)) - h;
    return l.vector(std::move(c));
}

} // namespace

TEST(Lattice, RejectsBadGram)
{
    EXPECT_THROW(Lattice::from_gram(IntMatrix{{1, 0}, {0, 2}}), LatticeError);
    EXPECT_THROW(Lattice::from_gram(IntMatrix{{2, 1}, {0, 2}}), LatticeError);
    EXPECT_THROW(Lattice::from_gram(IntMatrix{{2, 2}, {2, 2}}), LatticeError);
    EXPECT_THROW(Lattice::from_gram(IntMatrix{{0, 1}, {1, 0}}, {"only-one"}), LatticeError);
}

TEST(Lattice, E8NegativeIsUnimodularAndDefinite)
{
    Lattice e8 = standard_lattice("E8neg");
    EXPECT_EQ(e8.det(), 1);
    EXPECT_EQ(e8.signature(), (std::pair<int, int>{0, 8}));
    // Sylvester: (-1)^k det of the k-th leading minor is positive.
    for (std::size_t k = 1; k <= 8; ++k) {
        Integer d = determinant(leading_minor(e8.gram(), k));
        EXPECT_GT(k % 2 ? Integer(-d) : d, 0) << k;
    }
    for (std::size_t i = 0; i < 8; ++i)
        EXPECT_EQ(square(e8.basis(i)), -2);
}

TEST(Lattice, StandardCatalogue)
{
    EXPECT_EQ(standard_lattice("U").signature(), (std::pair<int, int>{1, 1}));
    EXPECT_EQ(standard_lattice("U").det(), -1);
    EXPECT_EQ(standard_lattice("A2neg").det(), 3);
    EXPECT_EQ(standard_lattice("G2neg").det(), 3);
    EXPECT_EQ(standard_lattice("MukaiAlg2").signature(), (std::pair<int, int>{2, 1}));
    Lattice og = standard_lattice("OG10");
    EXPECT_EQ(og.rank(), 24u);
    EXPECT_EQ(og.signature(), (std::pair<int, int>{3, 21}));
    EXPECT_EQ(abs(og.det()), 3);
    EXPECT_EQ(og.positive_frame().cols(), 3u);
    EXPECT_THROW(standard_lattice("nope"), LatticeError);
}

TEST(Lattice, PairingIsSymmetricBilinear)
{
    Lattice l = standard_lattice("OG10");
    std::mt19937_64 rng(1);
    for (int t = 0; t < 500; ++t) {
        LatVector x = random_vector(l, rng, 4), y = random_vector(l, rng, 4), z = random_vector(l, rng, 4);
        Integer a = static_cast<long>(rng() % 11) - 5, b = static_cast<long>(rng() % 11) - 5;
        ASSERT_EQ(pair(x, y), pair(y, x));
        ASSERT_EQ(pair(a * x + b * y, z), a * pair(x, z) + b * pair(y, z));
        ASSERT_TRUE(divides(Integer(2), square(x)));
    }
}

TEST(Lattice, Divisibility)
{
    Lattice og = standard_lattice("OG10");
    EXPECT_EQ(divisibility(og.basis("Sigmatilde")), 3);
    EXPECT_EQ(divisibility(og.basis("Btilde")), 1);
    EXPECT_EQ(divisibility(3 * og.basis("e1")), 3);
    EXPECT_EQ(content(6 * og.basis("e1") + 4 * og.basis("f2")), 2);
}

TEST(Lattice, OrthogonalComplementDeterminant)
{
    Lattice og = standard_lattice("OG10");
    LatVector s = og.basis("Sigmatilde");
    Lattice m = orthogonal_complement(og, {s});
    EXPECT_EQ(m.rank(), 23u);
    EXPECT_EQ(m.signature(), (std::pair<int, int>{3, 20}));
    // |det v^perp| * |v^2| = |det L| * [L : Zv + v^perp]^2, and the index is |v^2| / div(v).
    EXPECT_EQ(abs(m.det()) * 6, 3 * 2 * 2);
    for (std::size_t j = 0; j < m.rank(); ++j)
        EXPECT_EQ(pair(embed(m.basis(j)), s), 0);
}

TEST(Lattice, RestrictAndEmbedRoundTrip)
{
    Lattice og = standard_lattice("OG10");
    Lattice m = orthogonal_complement(og, {og.basis("Sigmatilde")});
    LatVector x = 2 * og.basis("Btilde") + og.basis("Sigmatilde"); // orthogonal to Sigmatilde
    auto r = restrict_to(m, x);
    ASSERT_TRUE(r.has_value());
    EXPECT_EQ(embed(*r), x);
    EXPECT_EQ(square(*r), square(x));
    EXPECT_FALSE(restrict_to(m, og.basis("Btilde")).has_value());
}

TEST(Lattice, VectorsFromDifferentLatticesDoNotMix)
{
    Lattice a = standard_lattice("U");
    Lattice b = standard_lattice("A2neg");
    EXPECT_THROW(a.basis(0) + b.basis(0), LatticeError);
    EXPECT_THROW(a.vector({1, 2, 3}), LatticeError);
}
