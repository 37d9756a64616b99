#include "ogmon/og10.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace ogmon;

namespace {

const Lattice& og() { return og10().lattice(); }

LatVector v(const char* label) { return og().basis(label); }

LatVector random_vector(const Lattice& l, std::mt19937_64& rng, long h)
{
    IntVector c(l.rank());
    for (auto& x : c)
        x = static_cast<long>(rng() % (2 * h + 1)) - h;
    return l.vector(std::move(c));
}

LatVector primitive_part(const LatVector& x)
{
    Integer c = content(x);
    IntVector out = x.coords();
    for (auto& y : out)
        y /= c;
    return x.lattice().vector(std::move(out));
}

} // namespace

TEST(Reflection, IntegralityCriterion)
{
    EXPECT_TRUE(is_reflection_integral(v("Btilde")));
    EXPECT_TRUE(is_reflection_integral(v("Sigmatilde"))); // square -6, divisibility 3
    EXPECT_TRUE(is_reflection_integral(v("e1") + v("f1")));
    EXPECT_FALSE(is_reflection_integral(v("e1") + 3 * v("f1")));
    EXPECT_FALSE(is_reflection_integral(v("e1")));
    EXPECT_THROW(reflection(v("e1") + 3 * v("f1")), LatticeError);
}

TEST(Reflection, InvolutionsWithDeterminantMinusOne)
{
    GeneratorCatalogue cat = standard_catalogue(og());
    std::vector<LatVector> vs;
    for (const auto& r : cat.roots)
        vs.push_back(r.v);
    for (const auto& p : cat.positive)
        vs.push_back(p.v);
    vs.push_back(v("Sigmatilde"));
    for (std::uint64_t s = 0; s < 20; ++s) // translates of catalogue roots
        vs.push_back(random_isometry(og(), s, 5).first(cat.roots[s % cat.roots.size()].v));
    for (const auto& x : vs) {
        Isometry r = reflection(x);
        EXPECT_TRUE((r * r).is_identity());
        EXPECT_EQ(r.det(), -1);
        EXPECT_EQ(r(x), -x);
        EXPECT_NO_THROW(make_isometry(og(), r.matrix()));
    }
}

TEST(Transvection, CertifiedIsometryAndBasicLaws)
{
    std::mt19937_64 rng(9);
    GeneratorCatalogue cat = standard_catalogue(og());
    for (int t = 0; t < 50; ++t) {
        const HyperbolicPair& hp = cat.isotropic[rng() % cat.isotropic.size()];
        LatVector r = random_vector(og(), rng, 3);
        LatVector a = r - pair(r, hp.z) * hp.partner;
        Isometry g = transvection(hp.z, a);
        EXPECT_NO_THROW(make_isometry(og(), g.matrix()));
        EXPECT_EQ(g.det(), 1);
        EXPECT_EQ(g(hp.z), hp.z);
        EXPECT_EQ(g.inverse(), transvection(hp.z, -a));
        EXPECT_TRUE(is_orientation_preserving(g));
        EXPECT_TRUE(is_stable(og10().disc(), g));
    }
    EXPECT_TRUE(transvection(v("e1"), og().zero()).is_identity());
    EXPECT_THROW(transvection(v("e1") + v("f1"), v("e2")), LatticeError);
    EXPECT_THROW(transvection(v("e1"), v("f1")), LatticeError);
}

TEST(Transvection, InPlaceProductsMatchMatrixProducts)
{
    std::mt19937_64 rng(4);
    GeneratorCatalogue cat = standard_catalogue(og());
    for (std::uint64_t s = 0; s < 20; ++s) {
        Isometry g = random_isometry(og(), s, 6).first;
        const HyperbolicPair& hp = cat.isotropic[rng() % cat.isotropic.size()];
        LatVector r = random_vector(og(), rng, 3);
        LatVector a = r - pair(r, hp.z) * hp.partner;
        Isometry t = transvection(hp.z, a);
        IntMatrix left = g.matrix(), right = g.matrix();
        apply_transvection_left(hp.z, a, left);
        apply_transvection_right(right, hp.z, a);
        EXPECT_EQ(left, (t * g).matrix());
        EXPECT_EQ(right, (g * t).matrix());
        EXPECT_EQ(apply_to(Transvection{hp.z, a}, r), t(r));
    }
}

TEST(Isometry, CertificationAndInverse)
{
    EXPECT_THROW(make_isometry(og(), IntMatrix::identity(23)), LatticeError);
    IntMatrix bad = IntMatrix::identity(24);
    bad(0, 1) = 1;
    EXPECT_THROW(make_isometry(og(), bad), LatticeError);
    for (std::uint64_t s = 0; s < 10; ++s) {
        Isometry g = random_isometry(og(), s, 10).first;
        EXPECT_TRUE((g * g.inverse()).is_identity());
        EXPECT_TRUE((g.inverse() * g).is_identity());
    }
}

TEST(Orientation, CharacterValues)
{
    const Og10& d = og10();
    EXPECT_FALSE(is_orientation_preserving(make_isometry(og(), -IntMatrix::identity(24))));
    EXPECT_FALSE(is_orientation_preserving(reflection(v("e1") + v("f1"))));
    EXPECT_TRUE(is_orientation_preserving(reflection(v("e1") - v("f1"))));
    EXPECT_TRUE(is_orientation_preserving(d.R_A()));
    EXPECT_TRUE(is_orientation_preserving(Isometry::identity(og())));
    EXPECT_THROW(is_orientation_preserving(Isometry::identity(standard_lattice("U"))), LatticeError);
}

TEST(Orientation, Multiplicative)
{
    Isometry flip = reflection(v("e2") + v("f2"));
    for (std::uint64_t s = 0; s < 40; ++s) {
        Isometry g = random_isometry(og(), s, 8).first;
        Isometry h = random_isometry(og(), 500 + s, 8).first;
        if (s % 2)
            g = g * flip;
        if (s % 3 == 0)
            h = flip * h;
        EXPECT_EQ(is_orientation_preserving(g * h), is_orientation_preserving(g) == is_orientation_preserving(h));
    }
}

TEST(RandomIsometry, DeterministicAndInOPlus)
{
    for (std::uint64_t s = 0; s < 10; ++s) {
        auto [g, w] = random_isometry(og(), s, 12);
        auto [g2, w2] = random_isometry(og(), s, 12);
        EXPECT_EQ(g, g2);
        EXPECT_EQ(w.product(), g);
        EXPECT_EQ(w.size(), 12u);
        EXPECT_TRUE(is_orientation_preserving(g));
        RandomOptions opt;
        opt.allow_positive = true;
        EXPECT_TRUE(is_orientation_preserving(random_isometry(og(), s, 12, opt).first));
    }
    EXPECT_FALSE(random_isometry(og(), 1, 12).first == random_isometry(og(), 2, 12).first);
}

TEST(Eichler, TransportsImagesUnderRandomIsometries)
{
    const Og10& d = og10();
    std::mt19937_64 rng(21);
    for (std::uint64_t s = 0; s < 40; ++s) {
        LatVector u = random_vector(og(), rng, 4);
        if (u.is_zero())
            continue;
        u = primitive_part(u);
        LatVector w = random_isometry(og(), s, 10).first(u);
        TransvectionSequence seq = eichler_sequence(d.ubar_frame(), u, w);
        EXPECT_EQ(apply_to(seq, u), w);
        EXPECT_EQ(to_word(og(), seq).product()(u), w);
    }
}

TEST(Eichler, CanonicalFormSeparatesInvariants)
{
    const Og10& d = og10();
    LatVector a = v("e1") + v("f1"); // square 2
    LatVector b = v("e1") + v("f1") + v("e2") - v("f2") + v("E8a_1"); // square -2
    LatVector c = v("e1") - v("f1"); // square -2
    EXPECT_THROW(eichler_sequence(d.ubar_frame(), a, c), LatticeError);
    EXPECT_THROW(eichler_sequence(d.ubar_frame(), a, 2 * a), LatticeError);
    // Equal square -6, but divisibility 3 against 1.
    LatVector s = v("Sigmatilde");
    LatVector t = v("e1") - 3 * v("f1");
    ASSERT_EQ(square(s), square(t));
    EXPECT_THROW(eichler_sequence(d.ubar_frame(), s, t), LatticeError);
    EXPECT_EQ(apply_to(eichler_sequence(d.ubar_frame(), b, c), b), c);
}

TEST(Eichler, FactorOffHyperbolicReassembles)
{
    const Og10& d = og10();
    const HyperbolicFrame& fr = d.ubar_frame();
    for (std::uint64_t s = 0; s < 100; ++s) {
        RandomOptions opt;
        opt.allow_positive = s % 2;
        Isometry g = random_isometry(og(), s, 1 + s % 20, opt).first;
        HyperbolicFactorization fac = factor_off_hyperbolic(fr, g);
        ASSERT_EQ(fac.h(fr.e()), fr.e());
        ASSERT_EQ(fac.h(fr.f()), fr.f());
        Isometry back = Isometry::trusted(og(), to_matrix(og(), fac.word)) * fac.h;
        ASSERT_EQ(back, g) << "seed " << s;
        for (const auto& t : fac.word)
            EXPECT_TRUE(t.z == fr.e() || t.z == fr.f());
    }
}
