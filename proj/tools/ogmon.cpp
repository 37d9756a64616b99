// ogmon: verification suites, monodromy decomposition, discriminant reports
// and seeded random isometries for the OG10 lattice.

#include "ogmon/suites.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

using namespace ogmon;

enum Exit : int { kOk = 0, kCheckFailed = 1, kUsage = 2, kNotIsometry = 3, kOrientation = 4 };

void write_json(const json& j, const std::string& path)
{
    if (path.empty()) {
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot write '" + path + "'");
    out << j.dump(2) << "\n";
}

int cmd_verify(const std::string& suite, const std::string& out, bool list, bool timing)
{
    const auto& manifest = suite_manifest();
    if (list) {
        for (const auto& s : manifest)
            std::cout << s.name << "\t" << s.description << "\n";
        return kOk;
    }
    std::vector<const SuiteInfo*> selected;
    for (const auto& s : manifest)
        if (suite == "all" || s.name == suite)
            selected.push_back(&s);
    if (selected.empty()) {
        std::cerr << "unknown suite '" << suite << "' (see verify --list)\n";
        return kUsage;
    }
    bool ok = true;
    json reports = json::array();
    for (const SuiteInfo* s : selected) {
        SuiteReport r = run_suite(*s);
        ok = ok && r.passed();
        for (const auto& c : r.checks)
            std::cerr << (c.pass ? "PASS " : "FAIL ") << r.suite << "/" << c.id << "  expected " << c.expected
                      << ", got " << c.actual << "\n";
        reports.push_back(to_json(r, timing));
    }
    write_json(selected.size() == 1 ? reports.front() : reports, out);
    return ok ? kOk : kCheckFailed;
}

int cmd_decompose(const std::string& path, const std::string& out)
{
    std::ifstream in(path);
    if (!in) {
        std::cerr << "cannot read '" << path << "'\n";
        return kUsage;
    }
    json doc;
    IntMatrix m;
    try {
        doc = json::parse(in);
        if (doc.value("lattice", std::string("OG10")) != "OG10") {
            std::cerr << "only OG10 matrices can be decomposed\n";
            return kUsage;
        }
        m = matrix_from_json(doc.at("matrix"));
    } catch (const std::exception& ex) {
        std::cerr << "malformed matrix file: " << ex.what() << "\n";
        return kUsage;
    }
    const Lattice& l = og10().lattice();
    std::optional<Isometry> g;
    try {
        g = make_isometry(l, std::move(m));
    } catch (const LatticeError& ex) {
        std::cerr << "not an isometry of OG10: " << ex.what() << "\n";
        return kNotIsometry;
    }
    if (!is_orientation_preserving(*g)) {
        std::cerr << "orientation-reversing isometry: monodromy operators lie in O^+, Mon²(X)⊂O^+(H²(X,Z))\n";
        return kOrientation;
    }
    GeneratorWord w = decompose_monodromy(*g);
    bool ok = w.product() == *g;
    for (const auto& f : w.factors())
        ok = ok && factor_valid(f);
    if (!ok) {
        std::cerr << "reassembly check failed\n";
        return kCheckFailed;
    }
    write_json(to_json(w), out);
    return kOk;
}

int cmd_random(std::uint64_t seed, std::size_t length, const std::string& out)
{
    Isometry g = random_isometry(og10().lattice(), seed, length).first;
    write_json(matrix_file("OG10", g.matrix()), out);
    return kOk;
}

// Representative of q mod 2 in (-1, 1].
std::string centered(const Rational& q)
{
    Rational r = q > 1 ? Rational(q - 2) : q;
    r.canonicalize();
    return to_string(r);
}

int cmd_disc(const std::string& name)
{
    const auto& names = standard_lattice_names();
    if (std::find(names.begin(), names.end(), name) == names.end()) {
        std::cerr << "unknown lattice '" << name << "'\n";
        return kUsage;
    }
    FiniteQuadraticForm f = discriminant_group(standard_lattice(name));
    if (f.trivial()) {
        std::cout << "trivial\n";
        return kOk;
    }
    std::string groups, qs;
    for (std::size_t i = 0; i < f.invariant_factors.size(); ++i) {
        groups += (i ? " x " : "") + std::string("Z/") + to_string(f.invariant_factors[i]);
        std::string label = f.invariant_factors.size() == 1 ? "gen" : "gen" + std::to_string(i + 1);
        qs += ", q(" + label + ") = " + centered(f.q_values[i]) + " mod 2";
    }
    std::cout << groups << qs << "\n";
    return kOk;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact lattice computations for the OG10 monodromy group"};
    app.require_subcommand(1);

    std::string suite, verify_out;
    bool list = false, timing = false;
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("suite", suite, "suite name, or 'all'");
    verify->add_option("--out", verify_out, "write the JSON report here");
    verify->add_flag("--list", list, "list the available suites");
    verify->add_flag("--timing", timing, "include elapsed_ms in the report");

    std::string matrix_path, word_out;
    auto* decompose = app.add_subcommand("decompose", "decompose an O^+ isometry of OG10");
    decompose->add_option("--matrix", matrix_path, "JSON matrix file")->required();
    decompose->add_option("--out", word_out, "write the word JSON here");

    std::uint64_t seed = 0;
    std::size_t length = 0;
    std::string random_out;
    auto* random = app.add_subcommand("random", "seeded random O^+ isometry of OG10");
    random->add_option("--seed", seed)->required();
    random->add_option("--length", length)->required();
    random->add_option("--out", random_out)->required();

    std::string lattice;
    auto* disc = app.add_subcommand("disc", "discriminant group of a catalogued lattice");
    disc->add_option("lattice", lattice)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*verify) {
            if (!list && suite.empty()) {
                std::cerr << "verify needs a suite name or --list\n";
                return kUsage;
            }
            return cmd_verify(suite, verify_out, list, timing);
        }
        if (*decompose)
            return cmd_decompose(matrix_path, word_out);
        if (*random)
            return cmd_random(seed, length, random_out);
        if (*disc)
            return cmd_disc(lattice);
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kCheckFailed;
    }
    return kUsage;
}
