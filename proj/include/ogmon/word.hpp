#pragma once

// Tagged generator words and seeded random isometries drawn from a catalogue
// of integral reflections and Eichler transvections.

#include "isometry.hpp"

#include <cstdint>
#include <random>

namespace ogmon {

enum class FactorKind { Refl, Transv, G1, G2, G3, RA, RK, RL, RB };

inline const char* kind_name(FactorKind k)
{
    switch (k) {
    case FactorKind::Refl: return "REFL";
    case FactorKind::Transv: return "TRANSV";
    case FactorKind::G1: return "G1";
    case FactorKind::G2: return "G2";
    case FactorKind::G3: return "G3";
    case FactorKind::RA: return "RA";
    case FactorKind::RK: return "RK";
    case FactorKind::RL: return "RL";
    case FactorKind::RB: return "RB";
    }
    return "?";
}

inline FactorKind parse_kind(const std::string& s)
{
    for (FactorKind k : {FactorKind::Refl, FactorKind::Transv, FactorKind::G1, FactorKind::G2, FactorKind::G3,
                         FactorKind::RA, FactorKind::RK, FactorKind::RL, FactorKind::RB})
        if (s == kind_name(k))
            return k;
    throw std::invalid_argument("unknown factor tag '" + s + "'");
}

struct Factor {
    FactorKind kind;
    Isometry g;
    // REFL: the reflected vector and its catalogue name.
    std::string name;
    std::optional<LatVector> vector;
    // TRANSV: base vector z and argument a.
    std::optional<LatVector> z;
    std::optional<LatVector> a;

    /// "REFL(name)", "TRANSV" or the bare subgroup tag.
    std::string tag() const
    {
        if (kind == FactorKind::Refl && !name.empty())
            return std::string("REFL(") + name + ")";
        return kind_name(kind);
    }
};

inline Factor reflection_factor(const std::string& name, const LatVector& v)
{
    return {FactorKind::Refl, reflection(v), name, v, std::nullopt, std::nullopt};
}

inline Factor transvection_factor(const LatVector& z, const LatVector& a)
{
    return {FactorKind::Transv, transvection(z, a), {}, std::nullopt, z, a};
}

inline Factor tagged_factor(FactorKind kind, Isometry g) { return {kind, std::move(g), {}, {}, {}, {}}; }

/// Ordered factors; the word's value is factors[0] * factors[1] * ...
class GeneratorWord {
public:
    explicit GeneratorWord(Lattice l) : lattice_(std::move(l)) {}

    const Lattice& lattice() const { return lattice_; }
    const std::vector<Factor>& factors() const { return factors_; }
    std::size_t size() const { return factors_.size(); }
    bool empty() const { return factors_.empty(); }

    void push_back(Factor f)
    {
        if (!f.g.lattice().same_as(lattice_))
            throw LatticeError("factor acts on a different lattice");
        factors_.push_back(std::move(f));
    }

    void append(const GeneratorWord& w)
    {
        for (const auto& f : w.factors_)
            push_back(f);
    }

    Isometry product() const
    {
        IntMatrix m = IntMatrix::identity(lattice_.rank());
        for (const auto& f : factors_)
            m = m * f.g.matrix();
        return Isometry::trusted(lattice_, std::move(m));
    }

private:
    Lattice lattice_;
    std::vector<Factor> factors_;
};

// ---------------------------------------------------------------------------
// Catalogue

struct HyperbolicPair {
    LatVector z;
    LatVector partner; // z^2 = partner^2 = 0, (z, partner) = 1
};

struct NamedVector {
    std::string name;
    LatVector v;
};

struct GeneratorCatalogue {
    std::vector<HyperbolicPair> isotropic;
    std::vector<NamedVector> roots;    // square -2
    std::vector<NamedVector> positive; // square 2, orientation reversing reflections
    // Random transvection arguments are combinations of these; empty means the lattice basis.
    std::vector<LatVector> span;
};

namespace detail {

inline std::string basis_name(const Lattice& l, std::size_t i)
{
    return l.labels().empty() ? "b" + std::to_string(i) : l.labels()[i];
}

// Basis pairs spanning an orthogonal copy of U, roots among basis vectors,
// and the k-type and positive classes of each copy of U.
inline GeneratorCatalogue scan_catalogue(const Lattice& l)
{
    GeneratorCatalogue cat;
    const IntMatrix& g = l.gram();
    const std::size_t n = l.rank();
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            if (g(i, i) != 0 || g(j, j) != 0 || g(i, j) != 1)
                continue;
            bool split = true;
            for (std::size_t k = 0; k < n && split; ++k)
                if (k != i && k != j && (g(i, k) != 0 || g(j, k) != 0))
                    split = false;
            if (split)
                pairs.emplace_back(i, j);
        }
    for (auto [i, j] : pairs) {
        cat.isotropic.push_back({l.basis(i), l.basis(j)});
        cat.isotropic.push_back({l.basis(j), l.basis(i)});
    }
    for (auto [i, j] : pairs)
        cat.roots.push_back({basis_name(l, i) + "-" + basis_name(l, j), l.basis(i) - l.basis(j)});
    for (std::size_t i = 0; i < n; ++i)
        if (g(i, i) == -2)
            cat.roots.push_back({basis_name(l, i), l.basis(i)});
    if (auto b = l.index_of("Btilde"), s = l.index_of("Sigmatilde"); b && s)
        cat.roots.push_back({"2Btilde+Sigmatilde", 2 * l.basis(*b) + l.basis(*s)});
    for (auto [i, j] : pairs)
        cat.positive.push_back({basis_name(l, i) + "+" + basis_name(l, j), l.basis(i) + l.basis(j)});
    return cat;
}

} // namespace detail

/// Catalogue of a lattice; sublattices inherit the ambient entries they contain.
inline GeneratorCatalogue standard_catalogue(const Lattice& l)
{
    if (!l.has_ambient())
        return detail::scan_catalogue(l);
    GeneratorCatalogue amb = standard_catalogue(l.ambient());
    GeneratorCatalogue cat;
    for (const auto& p : amb.isotropic) {
        auto z = restrict_to(l, p.z);
        auto w = restrict_to(l, p.partner);
        if (z && w)
            cat.isotropic.push_back({*z, *w});
    }
    auto keep = [&](const std::vector<NamedVector>& from, std::vector<NamedVector>& to) {
        for (const auto& nv : from)
            if (auto v = restrict_to(l, nv.v))
                to.push_back({nv.name, *v});
    };
    keep(amb.roots, cat.roots);
    keep(amb.positive, cat.positive);
    return cat;
}

struct RandomOptions {
    // Height bound and support size of the random vector behind each transvection argument.
    int height = 2;
    int support = 3;
    // Allow orientation-reversing reflections in positive vectors; the word is
    // then corrected back into O^+ by one final positive reflection.
    bool allow_positive = false;
};

namespace detail {

inline std::uint64_t below(std::mt19937_64& rng, std::uint64_t n) { return rng() % n; }

} // namespace detail

/// Deterministic in (catalogue, seed, length); the result lies in O^+ whenever
/// the lattice has signature (3, n).
inline std::pair<Isometry, GeneratorWord> random_isometry(const Lattice& l, const GeneratorCatalogue& cat,
                                                          std::uint64_t seed, std::size_t length,
                                                          const RandomOptions& opt = {})
{
    std::mt19937_64 rng(seed);
    GeneratorWord word(l);
    const bool positive = opt.allow_positive && !cat.positive.empty() && l.signature().first == 3;
    const std::size_t body = positive && length > 0 ? length - 1 : length;
    if (cat.isotropic.empty() && cat.roots.empty())
        throw LatticeError("catalogue has no generators");
    for (std::size_t step = 0; step < body; ++step) {
        std::uint64_t kind = detail::below(rng, positive ? 8 : 7);
        if (kind == 7) {
            const auto& nv = cat.positive[detail::below(rng, cat.positive.size())];
            word.push_back(reflection_factor(nv.name, nv.v));
        } else if (kind < 2 || cat.isotropic.empty()) {
            const auto& nv = cat.roots[detail::below(rng, cat.roots.size())];
            word.push_back(reflection_factor(nv.name, nv.v));
        } else {
            const auto& hp = cat.isotropic[detail::below(rng, cat.isotropic.size())];
            LatVector rv = l.zero();
            const std::size_t dim = cat.span.empty() ? l.rank() : cat.span.size();
            for (int s = 0; s < opt.support; ++s) {
                std::size_t idx = detail::below(rng, dim);
                long val = static_cast<long>(detail::below(rng, 2 * opt.height + 1)) - opt.height;
                rv = rv + val * (cat.span.empty() ? l.basis(idx) : cat.span[idx]);
            }
            LatVector a = rv - pair(rv, hp.z) * hp.partner;
            word.push_back(transvection_factor(hp.z, a));
        }
    }
    Isometry g = word.product();
    if (positive && !is_orientation_preserving(g)) {
        const auto& nv = cat.positive.front();
        word.push_back(reflection_factor(nv.name, nv.v));
        g = word.product();
    }
    return {std::move(g), std::move(word)};
}

inline std::pair<Isometry, GeneratorWord> random_isometry(const Lattice& l, std::uint64_t seed, std::size_t length,
                                                          const RandomOptions& opt = {})
{
    return random_isometry(l, standard_catalogue(l), seed, length, opt);
}

} // namespace ogmon
