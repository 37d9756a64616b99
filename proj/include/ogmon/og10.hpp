#pragma once

// The OG10 lattice U^3 (+) E8(-1)^2 (+) G2(-1) with its named classes, the
// generator subgroups G1, G2, G3, decomposition of O^+ elements into
// {R_k, R_Btilde, R_l, R_A, G3}-words, and the check on the sublattice
// <Sigmatilde>^perp.

#include "discriminant.hpp"
#include "eichler.hpp"

namespace ogmon {

struct NamedClasses {
    LatVector H, Btilde, Sigmatilde;
    LatVector e, f;   // e = H - Btilde - Sigmatilde, f = H - 2 Btilde - Sigmatilde
    LatVector k, l;   // k = e2 - f2, l = k + f
    LatVector A;      // Sigmatilde = 3f - A
    LatVector Ztilde; // H + k - 2 Btilde - Sigmatilde
    std::vector<LatVector> Ubar_basis;
};

/// Precomputed OG10 data. Immutable after construction.
class Og10 {
public:
    Og10()
        : lattice_(standard_lattice("OG10")), classes_(make_classes(lattice_)),
          l1_basis_(make_l1_basis(lattice_, classes_)),
          ubar_frame_(classes_.e, classes_.f, b("e2"), b("f2"), without(l1_basis_, {2, 3})),
          l1_frame_(b("e2"), b("f2"), b("e3"), b("f3"), without(l1_basis_, {2, 3, 4, 5})),
          disc_(discriminant_group(lattice_)), r_k_(reflection(classes_.k)), r_l_(reflection(classes_.l)),
          r_a_(reflection(classes_.A)), r_b_(reflection(classes_.Btilde)),
          r_sigma_(reflection(classes_.Sigmatilde)), l1_(Lattice::sublattice(lattice_, columns(l1_basis_), "L1")),
          sigma_perp_(orthogonal_complement(lattice_, {classes_.Sigmatilde}, "SigmaPerp")),
          sigma_line_(Lattice::sublattice(lattice_, columns({classes_.Sigmatilde}), "Sigma"))
    {
        g2_group_ = {Isometry::identity(lattice_)};
        for (std::size_t i = 0; i < g2_group_.size(); ++i)
            for (const Isometry* s : {&r_b_, &r_sigma_}) {
                Isometry x = g2_group_[i] * *s;
                if (std::find(g2_group_.begin(), g2_group_.end(), x) == g2_group_.end())
                    g2_group_.push_back(std::move(x));
            }
    }

    const Lattice& lattice() const { return lattice_; }
    const NamedClasses& classes() const { return classes_; }
    /// k1 = e1 - f1, r2 = e1 + 2f1 - 3Btilde - 2Sigmatilde, e2, f2, e3, f3, E8 basis.
    const std::vector<LatVector>& l1_basis() const { return l1_basis_; }
    const Lattice& l1() const { return l1_; }
    const HyperbolicFrame& ubar_frame() const { return ubar_frame_; }
    const HyperbolicFrame& l1_frame() const { return l1_frame_; }
    const FiniteQuadraticForm& disc() const { return disc_; }
    const Isometry& R_k() const { return r_k_; }
    const Isometry& R_l() const { return r_l_; }
    const Isometry& R_A() const { return r_a_; }
    const Isometry& R_Btilde() const { return r_b_; }
    const Isometry& R_Sigmatilde() const { return r_sigma_; }
    const std::vector<Isometry>& g2_group() const { return g2_group_; }
    const Lattice& sigma_perp() const { return sigma_perp_; }
    const Lattice& sigma_line() const { return sigma_line_; }

    /// (-2)-vectors of L1 used by the splitting step, in catalogue order.
    std::vector<LatVector> l1_roots() const { return {l1_basis_[0], l1_basis_[1]}; }

private:
    LatVector b(const char* label) const { return lattice_.basis(label); }

    static NamedClasses make_classes(const Lattice& l)
    {
        LatVector H = l.basis("e1") + l.basis("f1");
        LatVector Bt = l.basis("Btilde");
        LatVector S = l.basis("Sigmatilde");
        LatVector e = H - Bt - S;
        LatVector f = H - 2 * Bt - S;
        LatVector k = l.basis("e2") - l.basis("f2");
        LatVector A = 3 * f - S;
        return {H, Bt, S, e, f, k, k + f, A, H + k - 2 * Bt - S, {e, f}};
    }

    static std::vector<LatVector> make_l1_basis(const Lattice& l, const NamedClasses& c)
    {
        std::vector<LatVector> out{l.basis("e1") - l.basis("f1"),
                                   l.basis("e1") + 2 * l.basis("f1") - 3 * c.Btilde - 2 * c.Sigmatilde};
        for (const char* s : {"e2", "f2", "e3", "f3"})
            out.push_back(l.basis(s));
        for (const char* block : {"E8a_", "E8b_"})
            for (int i = 1; i <= 8; ++i)
                out.push_back(l.basis(block + std::to_string(i)));
        return out;
    }

    static std::vector<LatVector> without(const std::vector<LatVector>& v, std::initializer_list<std::size_t> drop)
    {
        std::vector<LatVector> out;
        for (std::size_t i = 0; i < v.size(); ++i)
            if (std::find(drop.begin(), drop.end(), i) == drop.end())
                out.push_back(v[i]);
        return out;
    }

    static IntMatrix columns(const std::vector<LatVector>& v)
    {
        std::vector<IntVector> cols;
        for (const auto& x : v)
            cols.push_back(x.coords());
        return IntMatrix::from_columns(cols, v.front().lattice().rank());
    }

    Lattice lattice_;
    NamedClasses classes_;
    std::vector<LatVector> l1_basis_;
    HyperbolicFrame ubar_frame_;
    HyperbolicFrame l1_frame_;
    FiniteQuadraticForm disc_;
    Isometry r_k_, r_l_, r_a_, r_b_, r_sigma_;
    Lattice l1_;
    Lattice sigma_perp_;
    Lattice sigma_line_;
    std::vector<Isometry> g2_group_;
};

inline const Og10& og10()
{
    static const Og10 data;
    return data;
}

inline NamedClasses named_classes() { return og10().classes(); }

namespace detail {

inline void require_og10(const Isometry& g)
{
    if (!g.lattice().same_as(og10().lattice()))
        throw LatticeError("isometry does not act on the OG10 lattice");
}

} // namespace detail

inline bool in_G1(const Isometry& g)
{
    detail::require_og10(g);
    const NamedClasses& c = og10().classes();
    return is_orientation_preserving(g) && g(c.H) == c.H && g(c.Btilde) == c.Btilde &&
           g(c.Sigmatilde) == c.Sigmatilde;
}

inline bool in_G2(const Isometry& g)
{
    detail::require_og10(g);
    const auto& grp = og10().g2_group();
    return std::find(grp.begin(), grp.end(), g) != grp.end();
}

inline bool in_G3(const Isometry& g)
{
    detail::require_og10(g);
    const Og10& d = og10();
    const NamedClasses& c = d.classes();
    return g(c.e) == c.e && g(c.f) == c.f && is_orientation_preserving(g) && is_stable(d.disc(), g);
}

/// Membership predicate attached to a factor's tag.
inline bool factor_valid(const Factor& f)
{
    const Og10& d = og10();
    switch (f.kind) {
    case FactorKind::G1: return in_G1(f.g);
    case FactorKind::G2: return in_G2(f.g);
    case FactorKind::G3: return in_G3(f.g);
    case FactorKind::RA: return f.g == d.R_A();
    case FactorKind::RK: return f.g == d.R_k();
    case FactorKind::RL: return f.g == d.R_l();
    case FactorKind::RB: return f.g == d.R_Btilde();
    case FactorKind::Refl: return f.vector && is_reflection_integral(*f.vector) && f.g == reflection(*f.vector);
    case FactorKind::Transv: return f.z && f.a && f.g == transvection(*f.z, *f.a);
    }
    return false;
}

namespace detail {

// Builds a word while merging consecutive G3 factors.
class WordBuilder {
public:
    explicit WordBuilder(const Lattice& l) : word_(l), pending_(IntMatrix::identity(l.rank())) {}

    void g3_right(const Transvection& t) { apply_transvection_right(pending_, t.z, t.a); }
    void g3_right(const TransvectionSequence& seq)
    {
        for (const auto& t : seq)
            g3_right(t);
    }
    void g3_right(const IntMatrix& m) { pending_ = pending_ * m; }

    void named(FactorKind kind, const Isometry& g)
    {
        flush();
        word_.push_back(tagged_factor(kind, g));
    }

    GeneratorWord finish()
    {
        flush();
        return std::move(word_);
    }

private:
    void flush()
    {
        if (pending_.is_identity())
            return;
        const Lattice& l = word_.lattice();
        word_.push_back(tagged_factor(FactorKind::G3, Isometry::trusted(l, pending_)));
        pending_ = IntMatrix::identity(l.rank());
    }

    GeneratorWord word_;
    IntMatrix pending_;
};

// t(f, p) = W R_l R_k W^{-1} with W in G3 mapping k to the (-2)-vector p of L1.
inline void emit_root_transvection(WordBuilder& out, const LatVector& p)
{
    const Og10& d = og10();
    TransvectionSequence w = eichler_sequence(d.l1_frame(), d.classes().k, p);
    out.g3_right(w);
    out.named(FactorKind::RL, d.R_l());
    out.named(FactorKind::RK, d.R_k());
    out.g3_right(inverse(w));
}

// t(f, b) for b in L1, split additively into (-2)-vectors of L1.
inline void emit_f_transvection(WordBuilder& out, const LatVector& b)
{
    const Og10& d = og10();
    const Lattice& l = d.lattice();
    const LatVector e3 = l.basis("e3"), f3 = l.basis("f3");
    const LatVector r = d.l1_roots().front(); // a root orthogonal to U3
    // b = b1 + c f3 with (b1, e3) = 1.
    Integer c = pair(b, e3) - 1;
    LatVector b1 = b - c * f3;
    // b1 = p + (b1 - p), both of square -2.
    Integer x = square(b1) / 2 - pair(r, b1);
    LatVector p = r + x * e3;
    std::vector<LatVector> pieces{p, b1 - p};
    if (c != 0) {
        // c f3 = a + (c f3 - a) with a the first catalogued root orthogonal to f3.
        LatVector a = r;
        for (const auto& cand : d.l1_roots())
            if (pair(cand, f3) == 0) {
                a = cand;
                break;
            }
        pieces.push_back(a);
        pieces.push_back(c * f3 - a);
    }
    for (const auto& q : pieces) {
        if (square(q) != -2)
            throw std::logic_error("splitting produced a vector of square other than -2");
        emit_root_transvection(out, q);
    }
}

} // namespace detail

/// Word in {RK, RB, RL, RA, G3} whose ordered product is g.
inline GeneratorWord decompose_monodromy(const Isometry& g)
{
    detail::require_og10(g);
    if (!is_orientation_preserving(g))
        throw LatticeError("isometry is not orientation preserving; Mon^2(X) lies in O^+");
    const Og10& d = og10();
    const NamedClasses& c = d.classes();
    HyperbolicFactorization fac = factor_off_hyperbolic(d.ubar_frame(), g);
    detail::WordBuilder out(d.lattice());
    for (const auto& t : fac.word) {
        if (t.z == c.f) {
            detail::emit_f_transvection(out, t.a);
        } else if (t.z == c.e) {
            // t(e, a) = R_Btilde t(f, a) R_Btilde
            out.named(FactorKind::RB, d.R_Btilde());
            detail::emit_f_transvection(out, t.a);
            out.named(FactorKind::RB, d.R_Btilde());
        } else {
            throw std::logic_error("hyperbolic factorization produced an unexpected base vector");
        }
    }
    if (is_stable(d.disc(), fac.h)) {
        out.g3_right(fac.h.matrix());
    } else {
        // The residual acts as -1 on Z/3; R_A flips it back.
        out.named(FactorKind::RA, d.R_A());
        out.g3_right((d.R_A() * fac.h).matrix());
    }
    return out.finish();
}

/// Restriction of an OG10 isometry preserving the sublattice `sub`.
inline Isometry restrict_isometry(const Isometry& g, const Lattice& sub)
{
    if (!sub.has_ambient() || !sub.ambient().same_as(g.lattice()))
        throw LatticeError("sublattice does not live in the isometry's lattice");
    const Lattice& l = g.lattice();
    RatMatrix proj = sub.gram_inverse() * to_rational(sub.embedding().transpose() * l.gram());
    IntMatrix image = g.matrix() * sub.embedding();
    IntMatrix out;
    if (!to_integer(proj * to_rational(image), out) || !(sub.embedding() * out == image))
        throw LatticeError("isometry does not preserve the sublattice");
    return make_isometry(sub, std::move(out));
}

struct LtReport {
    bool orientation_preserving;
    bool stable;
    bool extends;      // integrality of h (+) id across <Sigmatilde>^perp (+) <Sigmatilde>
    bool glue_trivial; // glue-group criterion for the same pair
};

inline LtReport lt_monodromy_report(const Isometry& h)
{
    const Og10& d = og10();
    if (!h.lattice().same_as(d.sigma_perp()))
        throw LatticeError("isometry does not act on <Sigmatilde>^perp");
    const Isometry id_n = Isometry::identity(d.sigma_line());
    std::vector<LatVector> m_gens, n_gens{d.classes().Sigmatilde};
    for (std::size_t j = 0; j < d.sigma_perp().rank(); ++j)
        m_gens.push_back(d.lattice().vector(d.sigma_perp().embedding().column(j)));
    return {is_orientation_preserving(h), is_stable(h),
            extends_across_gluing(d.lattice(), m_gens, n_gens, h, id_n),
            glue_preserved(d.lattice(), m_gens, n_gens, h, id_n)};
}

/// h in O~^+(<Sigmatilde>^perp); throws if the extension test disagrees with stability.
inline bool lt_monodromy_check(const Isometry& h)
{
    LtReport r = lt_monodromy_report(h);
    if (r.stable != r.extends || r.extends != r.glue_trivial)
        throw std::logic_error("extension criteria disagree");
    return r.orientation_preserving && r.stable;
}

/// Isometry of OG10 acting as h on <Sigmatilde>^perp and as the identity on Sigmatilde.
inline Isometry extend_from_sigma_perp(const Isometry& h)
{
    const Og10& d = og10();
    const IntMatrix& e = d.sigma_perp().embedding();
    const std::size_t n = d.lattice().rank();
    IntMatrix basis(n, n), block(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j + 1 < n; ++j) {
            basis(i, j) = e(i, j);
            if (i + 1 < n)
                block(i, j) = h.matrix()(i, j);
        }
        basis(i, n - 1) = d.classes().Sigmatilde[i];
    }
    block(n - 1, n - 1) = 1;
    IntMatrix out;
    if (!to_integer(to_rational(basis * block) * inverse(basis), out))
        throw LatticeError("isometry does not extend across the gluing");
    return make_isometry(d.lattice(), std::move(out));
}

} // namespace ogmon
