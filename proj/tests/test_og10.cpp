#include "ogmon/og10.hpp"

#include <gtest/gtest.h>

using namespace ogmon;

namespace {

const Og10& d() { return og10(); }
const NamedClasses& c() { return og10().classes(); }

bool word_ok(const GeneratorWord& w, const Isometry& g)
{
    if (!(w.product() == g))
        return false;
    for (const auto& f : w.factors())
        if (f.kind == FactorKind::Refl || f.kind == FactorKind::Transv || f.kind == FactorKind::G1 ||
            f.kind == FactorKind::G2 || !factor_valid(f))
            return false;
    return true;
}

} // namespace

TEST(Og10, NamedClassTable)
{
    EXPECT_EQ(square(c().e), 0);
    EXPECT_EQ(square(c().f), 0);
    EXPECT_EQ(pair(c().e, c().f), 1);
    EXPECT_EQ(square(c().A), -6);
    EXPECT_EQ(pair(c().A, c().e), 0);
    EXPECT_EQ(pair(c().A, c().f), 0);
    EXPECT_EQ(c().Sigmatilde, 3 * c().f - c().A);
    EXPECT_EQ(square(c().k), -2);
    EXPECT_EQ(square(c().l), -2);
    EXPECT_EQ(square(c().Ztilde), -2);
    EXPECT_EQ(square(c().H), 2);
    EXPECT_EQ(divisibility(c().Sigmatilde), 3);
    EXPECT_EQ(divisibility(c().A), 3);
}

TEST(Og10, L1IsTheComplementOfUbar)
{
    const Lattice& l1 = d().l1();
    EXPECT_EQ(l1.rank(), 22u);
    EXPECT_EQ(l1.signature(), (std::pair<int, int>{2, 20}));
    EXPECT_EQ(abs(l1.det()), 3);
    for (const auto& b : d().l1_basis()) {
        EXPECT_EQ(pair(b, c().e), 0);
        EXPECT_EQ(pair(b, c().f), 0);
    }
    EXPECT_EQ(square(d().l1_basis()[0]), -2);
    EXPECT_EQ(square(d().l1_basis()[1]), -2);
    EXPECT_TRUE(forms_isomorphic(discriminant_group(l1), discriminant_group(standard_lattice("A2neg"))));
}

TEST(Og10, NamedReflections)
{
    EXPECT_EQ(d().R_Btilde()(c().e), c().f);
    EXPECT_EQ(d().R_Btilde()(c().f), c().e);
    EXPECT_EQ(d().R_A()(c().A), -c().A);
    EXPECT_EQ(d().R_A()(c().e), c().e);
    EXPECT_EQ(d().R_A()(c().f), c().f);
    EXPECT_FALSE(is_stable(d().disc(), d().R_A()));
    EXPECT_TRUE(is_stable(d().disc(), d().R_k()));
    EXPECT_TRUE(is_stable(d().disc(), d().R_l()));
    EXPECT_EQ(d().g2_group().size(), 12u);
    EXPECT_TRUE(in_G2(d().R_Btilde()));
    EXPECT_TRUE(in_G2(d().R_Sigmatilde()));
    EXPECT_FALSE(in_G2(d().R_k()));
}

TEST(Og10, SubgroupPredicates)
{
    Isometry id = Isometry::identity(d().lattice());
    EXPECT_TRUE(in_G1(id));
    EXPECT_TRUE(in_G3(id));
    EXPECT_TRUE(in_G3(transvection(d().lattice().basis("e2"), d().lattice().basis("E8a_3"))));
    EXPECT_FALSE(in_G3(d().R_A())); // fixes e and f but is not stable
    EXPECT_FALSE(in_G3(d().R_Btilde()));
    EXPECT_TRUE(in_G1(d().R_k()));
    EXPECT_FALSE(in_G1(d().R_Btilde()));
    EXPECT_THROW(in_G3(Isometry::identity(standard_lattice("U"))), LatticeError);
}

TEST(Decomposition, TrivialCases)
{
    EXPECT_TRUE(decompose_monodromy(Isometry::identity(d().lattice())).empty());
    GeneratorWord ra = decompose_monodromy(d().R_A());
    ASSERT_EQ(ra.size(), 1u);
    EXPECT_EQ(ra.factors()[0].tag(), "RA");
    GeneratorWord rb = decompose_monodromy(d().R_Btilde() * d().R_Btilde());
    EXPECT_TRUE(rb.empty());
    for (const Isometry* g : {&d().R_k(), &d().R_l(), &d().R_Btilde()})
        EXPECT_TRUE(word_ok(decompose_monodromy(*g), *g));
}

TEST(Decomposition, RandomElementsReassemble)
{
    for (std::uint64_t s = 0; s < 30; ++s) {
        RandomOptions opt;
        opt.allow_positive = s % 3 == 0;
        Isometry g = random_isometry(d().lattice(), 7000 + s, 1 + s % 20, opt).first;
        if (s % 4 == 1)
            g = g * d().R_A();
        EXPECT_TRUE(word_ok(decompose_monodromy(g), g)) << "seed " << s;
    }
}

TEST(Decomposition, RejectsOrientationReversal)
{
    Isometry minus = make_isometry(d().lattice(), -IntMatrix::identity(24));
    EXPECT_THROW(decompose_monodromy(minus), LatticeError);
    EXPECT_THROW(decompose_monodromy(reflection(c().H)), LatticeError);
}

TEST(LocallyTrivial, RestrictionsAndExtensions)
{
    const Lattice& m = d().sigma_perp();
    EXPECT_EQ(discriminant_group(m).invariant_factors, (std::vector<Integer>{2}));
    for (std::uint64_t s = 0; s < 10; ++s) {
        Isometry h = random_isometry(m, s, 10).first;
        ASSERT_TRUE(lt_monodromy_check(h));
        Isometry g = extend_from_sigma_perp(h);
        EXPECT_EQ(g(c().Sigmatilde), c().Sigmatilde);
        EXPECT_EQ(restrict_isometry(g, m), h);
    }
    // Reflection in a vector orthogonal to Sigmatilde restricts; R_Btilde does not.
    Isometry rk = restrict_isometry(d().R_k(), m);
    EXPECT_TRUE(lt_monodromy_check(rk));
    EXPECT_THROW(restrict_isometry(d().R_Btilde(), m), LatticeError);
}

TEST(LocallyTrivial, RejectsMinusIdentityAndPositiveReflections)
{
    const Lattice& m = d().sigma_perp();
    LtReport minus = lt_monodromy_report(make_isometry(m, -IntMatrix::identity(m.rank())));
    EXPECT_FALSE(minus.orientation_preserving);
    EXPECT_TRUE(minus.stable); // A_M = Z/2
    EXPECT_EQ(minus.extends, minus.glue_trivial);
    auto h = restrict_to(m, c().H);
    ASSERT_TRUE(h.has_value());
    EXPECT_FALSE(lt_monodromy_check(reflection(*h)));
}
