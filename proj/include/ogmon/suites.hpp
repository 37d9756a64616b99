#pragma once

// Verification suites behind `ogmon verify`. Each suite is a deterministic
// list of named checks with expected and actual values.

#include "io.hpp"
#include "mukai.hpp"

#include <chrono>
#include <functional>

namespace ogmon {

struct Check {
    std::string id;
    bool pass;
    std::string expected;
    std::string actual;
};

struct SuiteReport {
    std::string suite;
    std::vector<Check> checks;
    long long elapsed_ms = 0;

    bool passed() const
    {
        return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
    }
};

inline json to_json(const SuiteReport& r, bool timing)
{
    json checks = json::array();
    for (const auto& c : r.checks)
        checks.push_back(
            {{"id", c.id}, {"status", c.pass ? "PASS" : "FAIL"}, {"expected", c.expected}, {"actual", c.actual}});
    json j{{"suite", r.suite}, {"checks", std::move(checks)}, {"passed", r.passed()}};
    if (timing)
        j["elapsed_ms"] = r.elapsed_ms;
    return j;
}

struct SuiteInfo {
    std::string name;
    std::string description;
    std::function<std::vector<Check>()> run;
};

namespace suites {

inline Check expect(std::string id, const std::string& expected, const std::string& actual)
{
    return {std::move(id), expected == actual, expected, actual};
}

inline Check expect(std::string id, const Integer& expected, const Integer& actual)
{
    return expect(std::move(id), to_string(expected), to_string(actual));
}

inline Check expect(std::string id, const Rational& expected, const Rational& actual)
{
    return expect(std::move(id), to_string(expected), to_string(actual));
}

inline Check count(std::string id, std::size_t ok, std::size_t total)
{
    std::string expected = std::to_string(total) + "/" + std::to_string(total);
    return expect(std::move(id), expected, std::to_string(ok) + "/" + std::to_string(total));
}

inline std::string coords(const LatVector& x)
{
    std::string s = "(";
    for (std::size_t i = 0; i < x.coords().size(); ++i)
        s += (i ? "," : "") + to_string(x[i]);
    return s + ")";
}

/// A random tuple (z, a, b, g, a3) for the transvection identities: z
/// isotropic, a and b orthogonal to z, a3 a (-2)-vector orthogonal to z.
struct TransvectionTuple {
    LatVector z, a, b, a3;
    Isometry g;
};

inline TransvectionTuple transvection_tuple(const Lattice& l, const GeneratorCatalogue& cat, std::uint64_t seed)
{
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    auto below = [&](std::uint64_t n) { return rng() % n; };
    const HyperbolicPair& hp = cat.isotropic[below(cat.isotropic.size())];
    auto random_perp = [&] {
        IntVector r(l.rank(), Integer(0));
        for (int s = 0; s < 4; ++s)
            r[below(l.rank())] += static_cast<long>(below(7)) - 3;
        LatVector v = l.vector(std::move(r));
        return v - pair(v, hp.z) * hp.partner;
    };
    LatVector a = random_perp();
    LatVector b = random_perp();
    std::vector<const NamedVector*> roots;
    for (const auto& nv : cat.roots)
        if (pair(nv.v, hp.z) == 0)
            roots.push_back(&nv);
    LatVector a3 = roots[below(roots.size())]->v + (static_cast<long>(below(7)) - 3) * hp.z;
    Isometry g = random_isometry(l, cat, rng(), 4).first;
    // Move the whole configuration by a random isometry.
    Isometry h = random_isometry(l, cat, rng(), 3).first;
    return {h(hp.z), h(a), h(b), h(a3), g};
}

struct TransvectionTally {
    std::size_t inverse = 0, conjugation = 0, reflections = 0, additivity = 0, det = 0, stable = 0,
                orientation = 0;
};

inline TransvectionTally transvection_identities(std::size_t samples, std::uint64_t seed0 = 0)
{
    const Og10& d = og10();
    const Lattice& l = d.lattice();
    const GeneratorCatalogue cat = standard_catalogue(l);
    TransvectionTally t;
    for (std::size_t s = 0; s < samples; ++s) {
        TransvectionTuple x = transvection_tuple(l, cat, seed0 + s);
        Isometry tza = transvection(x.z, x.a);
        if (tza.inverse() == transvection(x.z, -x.a) && transvection(x.z, -x.a) == transvection(-x.z, x.a))
            ++t.inverse;
        if (x.g * tza * x.g.inverse() == transvection(x.g(x.z), x.g(x.a)))
            ++t.conjugation;
        LatVector second = x.a3 + (square(x.a3) / 2) * x.z;
        if (is_reflection_integral(x.a3) && is_reflection_integral(second) &&
            transvection(x.z, x.a3) == reflection(x.a3) * reflection(second))
            ++t.reflections;
        if (transvection(x.z, x.a + x.b) == tza * transvection(x.z, x.b))
            ++t.additivity;
        if (tza.det() == 1)
            ++t.det;
        if (is_stable(d.disc(), tza))
            ++t.stable;
        if (is_orientation_preserving(tza))
            ++t.orientation;
    }
    return t;
}

inline std::vector<Check> core_identities()
{
    const std::size_t n = 100;
    TransvectionTally t = transvection_identities(n);
    return {count("inverse", t.inverse, n),           count("conjugation", t.conjugation, n),
            count("reflection-product", t.reflections, n), count("additivity", t.additivity, n),
            count("determinant-one", t.det, n),      count("stable", t.stable, n),
            count("orientation-preserving", t.orientation, n)};
}

inline std::vector<Check> og10_classes()
{
    const NamedClasses& c = og10().classes();
    return {expect("e^2", Integer(0), square(c.e)),
            expect("f^2", Integer(0), square(c.f)),
            expect("(e,f)", Integer(1), pair(c.e, c.f)),
            expect("A^2", Integer(-6), square(c.A)),
            expect("(A,e),(A,f)", "0,0", to_string(pair(c.A, c.e)) + "," + to_string(pair(c.A, c.f))),
            expect("l^2", Integer(-2), square(c.l)),
            expect("Ztilde^2", Integer(-2), square(c.Ztilde)),
            expect("div(Sigmatilde)", Integer(3), divisibility(c.Sigmatilde))};
}

inline std::vector<GammaElement> gamma_generators()
{
    const MukaiVector v{2, 0, -2};
    // (1,0,1), (0,H,0), sigma, and the half-integral (1/2, 0, 1/2) + sigma/2.
    return {GammaElement(v, 2, 0, 2, 0), GammaElement(v, 0, 2, 0, 0), GammaElement(v, 0, 0, 0, 2),
            GammaElement(v, 1, 0, 1, 1)};
}

inline GammaElement random_gamma(std::mt19937_64& rng)
{
    auto pick = [&](long lo, long hi) { return Integer(lo + static_cast<long>(rng() % (hi - lo + 1))); };
    Integer n = pick(-9, 9);
    Integer m = pick(-9, 9);
    Integer k = 2 * pick(-5, 5) + (divides(Integer(2), n) ? 0 : 1);
    return GammaElement(MukaiVector{2, 0, -2}, n, 2 * m, n, k);
}

inline std::vector<Check> gamma()
{
    std::vector<Check> out;
    auto gens = gamma_generators();
    std::size_t ok = 0, total = 0;
    for (const auto& x : gens)
        for (const auto& y : gens) {
            ++total;
            if (gamma_pair(x, y) == Rational(pair(gamma_to_h2(x), gamma_to_h2(y))))
                ++ok;
        }
    out.push_back(count("generator-pairs", ok, total));
    out.push_back(expect("(1,0,1) image", "2Btilde+Sigmatilde",
                        gamma_to_h2(gens[0]) == 2 * og10().classes().Btilde + og10().classes().Sigmatilde
                            ? "2Btilde+Sigmatilde"
                            : coords(gamma_to_h2(gens[0]))));
    std::mt19937_64 rng(2024);
    ok = 0;
    for (int i = 0; i < 200; ++i) {
        GammaElement x = random_gamma(rng), y = random_gamma(rng);
        if (gamma_pair(x, y) == Rational(pair(gamma_to_h2(x), gamma_to_h2(y))))
            ++ok;
    }
    out.push_back(count("random-pairs", ok, 200));
    return out;
}

inline std::vector<Check> psi()
{
    std::vector<Check> out;
    const std::vector<PsiSource> src{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    const IntMatrix gram = psi_source_gram();
    std::size_t ok = 0;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            if (gamma_pair(psi_pullback(src[i]), psi_pullback(src[j])) == Rational(gram(i, j)))
                ++ok;
    out.push_back(count("gram-preserved", ok, 9));
    GammaElement a = psi_pullback(src[0]);
    out.push_back(expect("psi(a)", "(-2,1,3;-1)",
                        "(" + to_string(a.r2()) + "," + to_string(a.m2()) + "," + to_string(a.s2()) + ";" +
                            to_string(a.k()) + ")"));
    GammaElement s = psi_pullback(src[2]);
    out.push_back(expect("psi(sigma)", "(0,0,6;-2)",
                        "(" + to_string(s.r2()) + "," + to_string(s.m2()) + "," + to_string(s.s2()) + ";" +
                            to_string(s.k()) + ")"));
    out.push_back(expect("psi(sigma)^2", Rational(-6), gamma_pair(s, s)));
    return out;
}

inline std::vector<Check> fm()
{
    const NamedClasses& c = og10().classes();
    std::vector<Check> out;
    std::vector<GammaElement> gens{psi_pullback({1, 0, 0}), psi_pullback({0, 1, 0}), psi_pullback({0, 0, 1}),
                                   GammaElement(v2(), 0, 0, 0, 2)};
    std::size_t ok = 0, total = 0;
    for (const auto& x : gens)
        for (const auto& y : gens) {
            ++total;
            if (gamma_pair(x, y) == Rational(pair(fm_pushforward(x), fm_pushforward(y))))
                ++ok;
        }
    out.push_back(count("pairing-preserved", ok, total));
    out.push_back(expect("sigma2", coords(c.Sigmatilde), coords(fm_pushforward(GammaElement(v2(), 0, 0, 0, 2)))));
    LatVector img = fm_pushforward(GammaElement(v2(), -2, 1, 3, -1));
    out.push_back(expect("(m,n,k)=(1,3,-1)", coords(2 * c.H - 3 * c.Btilde - 2 * c.Sigmatilde), coords(img)));
    return out;
}

inline std::vector<Check> transport()
{
    const NamedClasses& c = og10().classes();
    std::vector<Check> out;
    out.push_back(expect("P(Theta_V)=Btilde", coords(c.Btilde), coords(parallel_transport_P(1, 0))));
    out.push_back(expect("P(b_V)=f", coords(c.f), coords(parallel_transport_P(0, 1))));
    out.push_back(expect("P(Theta_V+b_V)=e", coords(c.e), coords(parallel_transport_P(1, 1))));
    out.push_back(expect("P2(a)", coords(2 * c.H - 3 * c.Btilde - 2 * c.Sigmatilde),
                        coords(parallel_transport_P2({1, 0, 0}))));
    out.push_back(expect("P2(sigma)", coords(3 * c.H - 6 * c.Btilde - 4 * c.Sigmatilde),
                        coords(parallel_transport_P2({0, 0, 1}))));
    const std::vector<PsiSource> src{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    const IntMatrix gram = psi_source_gram();
    std::size_t ok = 0;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            if (pair(parallel_transport_P2(src[i]), parallel_transport_P2(src[j])) == gram(i, j))
                ++ok;
    out.push_back(count("P2-gram", ok, 9));
    out.push_back(expect("(P(Theta_V),P(b_V))", Integer(1), pair(parallel_transport_P(1, 0), parallel_transport_P(0, 1))));
    return out;
}

inline std::vector<Check> fujiki()
{
    FujikiResult r = fujiki_theta_pairing(945, 120);
    return {expect("q(Theta,b_V)", "1", r.value ? to_string(*r.value) : "no rational root")};
}

inline std::vector<Check> theta()
{
    auto t = solve_theta_class(theta_table());
    IntersectionTable odd = theta_table();
    odd.T_sq = -3;
    return {expect("T_S", "a-2b", t ? (t->alpha == 1 && t->beta == -2 ? "a-2b" : to_string(t->alpha) + "a+" +
                                                                                     to_string(t->beta) + "b")
                                   : "no integral solution"),
            expect("T^2=-3", "no integral solution", solve_theta_class(odd) ? "solution" : "no integral solution")};
}

inline std::vector<Check> generation()
{
    const Og10& d = og10();
    const NamedClasses& c = d.classes();
    std::vector<Check> out;
    const std::size_t n = 20;
    std::size_t ok = 0;
    for (std::size_t s = 0; s < n; ++s) {
        Isometry g = random_isometry(d.lattice(), s, 20).first;
        GeneratorWord w = decompose_monodromy(g);
        bool good = w.product() == g;
        for (const auto& f : w.factors())
            good = good && f.kind != FactorKind::Refl && f.kind != FactorKind::Transv && factor_valid(f);
        ok += good;
    }
    out.push_back(count("decompositions", ok, n));
    out.push_back(expect("R_A word", "RA", [&] {
        GeneratorWord w = decompose_monodromy(d.R_A());
        return w.size() == 1 ? w.factors()[0].tag() : std::to_string(w.size()) + " factors";
    }()));
    out.push_back(expect("|<R_Btilde,R_Sigmatilde>|", "12", std::to_string(d.g2_group().size())));
    out.push_back(expect("R_Btilde swaps e,f", "true",
                        d.R_Btilde()(c.e) == c.f && d.R_Btilde()(c.f) == c.e ? "true" : "false"));
    return out;
}

/// Catalogue entries orthogonal to Sigmatilde; its words fix Sigmatilde.
inline GeneratorCatalogue sigma_fixing_catalogue()
{
    const Og10& d = og10();
    const LatVector& s = d.classes().Sigmatilde;
    GeneratorCatalogue amb = standard_catalogue(d.lattice());
    GeneratorCatalogue out;
    for (const auto& p : amb.isotropic)
        if (pair(p.z, s) == 0 && pair(p.partner, s) == 0)
            out.isotropic.push_back(p);
    for (const auto& r : amb.roots)
        if (pair(r.v, s) == 0)
            out.roots.push_back(r);
    for (std::size_t j = 0; j < d.sigma_perp().rank(); ++j)
        out.span.push_back(d.lattice().vector(d.sigma_perp().embedding().column(j)));
    return out;
}

inline std::vector<Check> lt_monodromy()
{
    const Og10& d = og10();
    const Lattice& m = d.sigma_perp();
    std::vector<Check> out;
    GeneratorCatalogue fixing = sigma_fixing_catalogue();
    const std::size_t n = 20;
    std::size_t restricted = 0, extended = 0;
    for (std::size_t s = 0; s < n; ++s) {
        Isometry g = random_isometry(d.lattice(), fixing, s, 12).first;
        if (lt_monodromy_check(restrict_isometry(g, m)))
            ++restricted;
        Isometry h = random_isometry(m, 1000 + s, 12).first;
        if (lt_monodromy_check(h) && extend_from_sigma_perp(h)(d.classes().Sigmatilde) == d.classes().Sigmatilde)
            ++extended;
    }
    out.push_back(count("restrictions-in-O~+", restricted, n));
    out.push_back(count("extensions-fix-Sigmatilde", extended, n));
    Isometry minus = make_isometry(m, -IntMatrix::identity(m.rank()));
    out.push_back(expect("-id", "false", lt_monodromy_check(minus) ? "true" : "false"));
    return out;
}

inline std::vector<Check> l1_genus()
{
    const Og10& d = og10();
    const Lattice& l1 = d.l1();
    auto sig = l1.signature();
    std::vector<Check> out;
    out.push_back(expect("rank", "22", std::to_string(l1.rank())));
    out.push_back(expect("signature", "(2,20)", "(" + std::to_string(sig.first) + "," + std::to_string(sig.second) + ")"));
    bool iso = forms_isomorphic(discriminant_group(l1), discriminant_group(standard_lattice("A2neg")));
    out.push_back(expect("discriminant form ~ A2(-1)", "true", iso ? "true" : "false"));
    return out;
}

} // namespace suites

inline const std::vector<SuiteInfo>& suite_manifest()
{
    static const std::vector<SuiteInfo> manifest = {
        {"core-identities", "transvection identities, determinant, stability, orientation", suites::core_identities},
        {"og10-classes", "squares and pairings of the named classes", suites::og10_classes},
        {"gamma", "Gamma_v -> OG10 isometry for v = (2,0,-2)", suites::gamma},
        {"psi", "pullback table into Gamma_v2", suites::psi},
        {"fm", "Fourier-Mukai pushforward into OG10", suites::fm},
        {"transport", "parallel transports P1, P2, P", suites::transport},
        {"fujiki", "q(Theta, b_V) from the Fujiki relation", suites::fujiki},
        {"theta", "theta class from the intersection table", suites::theta},
        {"generation", "decomposition of O^+ into RK, RB, RL, RA, G3", suites::generation},
        {"lt-monodromy", "stable orientation preserving isometries of <Sigmatilde>^perp", suites::lt_monodromy},
        {"l1-genus", "signature and discriminant form of Ubar^perp", suites::l1_genus},
    };
    return manifest;
}

inline SuiteReport run_suite(const SuiteInfo& info)
{
    auto t0 = std::chrono::steady_clock::now();
    SuiteReport r{info.name, info.run(), 0};
    r.elapsed_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

} // namespace ogmon
