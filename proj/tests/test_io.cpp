#include "ogmon/suites.hpp"

#include <gtest/gtest.h>

using namespace ogmon;

TEST(Json, IntegersAreDecimalStrings)
{
    Integer big("123456789012345678901234567890");
    IntMatrix m{{1, -2}, {0, 3}};
    m(0, 0) = big;
    json j = to_json(m);
    EXPECT_EQ(j[0][0], "123456789012345678901234567890");
    EXPECT_EQ(j[0][1], "-2");
    EXPECT_EQ(matrix_from_json(j), m);
    EXPECT_EQ(vector_from_json(json::array({"5", 7, "-11"})), (IntVector{5, 7, -11}));
}

TEST(Json, RejectsMalformedInput)
{
    EXPECT_THROW(matrix_from_json(json::array()), std::invalid_argument);
    EXPECT_THROW(matrix_from_json(json::array({json::array({"1", "2"}), json::array({"3"})})),
                 std::invalid_argument);
    EXPECT_THROW(integer_from_json(json(1.5)), std::invalid_argument);
    EXPECT_THROW(integer_from_json(json("12x")), std::exception);
}

TEST(Json, MatrixFileRoundTrip)
{
    Isometry g = random_isometry(og10().lattice(), 42, 15).first;
    json doc = json::parse(matrix_file("OG10", g.matrix()).dump());
    EXPECT_EQ(doc["lattice"], "OG10");
    EXPECT_EQ(make_isometry(og10().lattice(), matrix_from_json(doc["matrix"])), g);
}

TEST(Json, WordTagsAndProduct)
{
    const Og10& d = og10();
    Isometry g = d.R_Btilde() * d.R_A();
    GeneratorWord w = decompose_monodromy(g);
    json j = to_json(w);
    ASSERT_EQ(j["factors"].size(), w.size());
    std::vector<std::string> tags;
    for (const auto& f : j["factors"])
        tags.push_back(f["tag"]);
    for (const auto& t : tags)
        EXPECT_TRUE(t == "RK" || t == "RB" || t == "RL" || t == "RA" || t == "G3") << t;
    EXPECT_EQ(matrix_from_json(j["product"]), g.matrix());

    GeneratorWord raw(d.lattice());
    raw.push_back(reflection_factor("Btilde", d.classes().Btilde));
    raw.push_back(transvection_factor(d.lattice().basis("e2"), d.lattice().basis("E8a_1")));
    json jr = to_json(raw);
    EXPECT_EQ(jr["factors"][0]["tag"], "REFL(Btilde)");
    EXPECT_EQ(jr["factors"][1]["tag"], "TRANSV");
    EXPECT_TRUE(jr["factors"][1].contains("z"));
    EXPECT_TRUE(jr["factors"][1].contains("a"));
    EXPECT_EQ(parse_kind("G3"), FactorKind::G3);
    EXPECT_THROW(parse_kind("G4"), std::invalid_argument);
}

TEST(Suites, ManifestAndReports)
{
    std::vector<std::string> names;
    for (const auto& s : suite_manifest())
        names.push_back(s.name);
    for (const char* n : {"core-identities", "og10-classes", "gamma", "psi", "fm", "transport", "fujiki", "theta",
                          "generation", "lt-monodromy", "l1-genus"})
        EXPECT_NE(std::find(names.begin(), names.end(), n), names.end()) << n;
    for (const auto& s : suite_manifest()) {
        if (s.name != "og10-classes" && s.name != "fujiki" && s.name != "theta")
            continue;
        SuiteReport r = run_suite(s);
        EXPECT_TRUE(r.passed()) << s.name;
        json plain = to_json(r, false);
        EXPECT_FALSE(plain.contains("elapsed_ms"));
        EXPECT_TRUE(to_json(r, true).contains("elapsed_ms"));
        EXPECT_EQ(plain["suite"], s.name);
        for (const auto& c : plain["checks"])
            EXPECT_EQ(c["status"], "PASS") << c.dump();
    }
}
