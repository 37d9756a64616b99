#pragma once

// Discriminant groups L*/L with their finite quadratic forms, induced actions
// of isometries, and the extension test for isometries across a gluing.

#include "isometry.hpp"

#include <set>

namespace ogmon {

/// A_L = L*/L as a product of cyclic groups Z/d_i, with q mod 2 and b mod 1.
struct FiniteQuadraticForm {
    std::vector<Integer> invariant_factors;
    // Lifts of the generators to L (x) Q, in lattice coordinates.
    std::vector<std::vector<Rational>> generators;
    std::vector<Rational> q_values;
    std::vector<std::vector<Rational>> b_values;

    // Coordinates of x in L*: (coordinate_map * G x)_i mod d_i, over the
    // rows selected by `rows`.
    IntMatrix coordinate_map;
    std::vector<std::size_t> rows;

    Integer order() const
    {
        Integer n = 1;
        for (const auto& d : invariant_factors)
            n *= d;
        return n;
    }

    bool trivial() const { return invariant_factors.empty(); }

    /// Generator coordinates of an element of L* given in lattice coordinates.
    IntVector coordinates(const Lattice& l, const std::vector<Rational>& x) const
    {
        std::vector<Rational> gx = to_rational(l.gram()) * x;
        IntVector out;
        for (std::size_t k = 0; k < rows.size(); ++k) {
            Rational c = 0;
            for (std::size_t j = 0; j < gx.size(); ++j)
                if (coordinate_map(rows[k], j) != 0)
                    c += Rational(coordinate_map(rows[k], j)) * gx[j];
            c.canonicalize();
            if (!is_integral(c))
                throw LatticeError("vector is not in the dual lattice");
            Integer r;
            mpz_fdiv_r(r.get_mpz_t(), c.get_num_mpz_t(), invariant_factors[k].get_mpz_t());
            out.push_back(r);
        }
        return out;
    }

    /// q of the element with generator coordinates c, in [0, 2).
    Rational q(const IntVector& c) const
    {
        Rational s = 0;
        for (std::size_t i = 0; i < c.size(); ++i) {
            s += Rational(c[i] * c[i]) * q_values[i];
            for (std::size_t j = i + 1; j < c.size(); ++j)
                s += 2 * Rational(c[i] * c[j]) * b_values[i][j];
        }
        return mod(s, 2);
    }

    /// b of two elements in generator coordinates, in [0, 1).
    Rational b(const IntVector& x, const IntVector& y) const
    {
        Rational s = 0;
        for (std::size_t i = 0; i < x.size(); ++i)
            for (std::size_t j = 0; j < y.size(); ++j)
                s += Rational(x[i] * y[j]) * b_values[i][j];
        return mod(s, 1);
    }
};

inline FiniteQuadraticForm discriminant_group(const Lattice& l)
{
    SnfDecomposition snf = smith_normal_form(l.gram());
    FiniteQuadraticForm f;
    f.coordinate_map = snf.u;
    const std::size_t n = l.rank();
    for (std::size_t i = 0; i < n; ++i) {
        const Integer& d = snf.d(i, i);
        if (d == 1)
            continue;
        f.invariant_factors.push_back(d);
        f.rows.push_back(i);
        std::vector<Rational> g(n);
        for (std::size_t r = 0; r < n; ++r) {
            g[r] = Rational(snf.v(r, i), d);
            g[r].canonicalize();
        }
        f.generators.push_back(std::move(g));
    }
    const RatMatrix gram = to_rational(l.gram());
    const std::size_t k = f.generators.size();
    f.b_values.assign(k, std::vector<Rational>(k));
    for (std::size_t i = 0; i < k; ++i) {
        std::vector<Rational> gi = gram * f.generators[i];
        for (std::size_t j = 0; j < k; ++j) {
            Rational b = dot(gi, f.generators[j]);
            f.b_values[i][j] = mod(b, 1);
            if (i == j)
                f.q_values.push_back(mod(b, 2));
        }
    }
    return f;
}

/// Images of the generators of A_L under g, in generator coordinates.
struct DiscriminantAction {
    std::vector<IntVector> images;

    bool is_identity() const
    {
        for (std::size_t i = 0; i < images.size(); ++i)
            for (std::size_t j = 0; j < images[i].size(); ++j)
                if (images[i][j] != (i == j ? 1 : 0))
                    return false;
        return true;
    }

    friend bool operator==(const DiscriminantAction&, const DiscriminantAction&) = default;
};

inline DiscriminantAction induced_action(const FiniteQuadraticForm& form, const Isometry& g)
{
    const Lattice& l = g.lattice();
    const RatMatrix m = to_rational(g.matrix());
    DiscriminantAction act;
    for (const auto& gen : form.generators)
        act.images.push_back(form.coordinates(l, m * gen));
    return act;
}

inline DiscriminantAction induced_action(const Isometry& g)
{
    return induced_action(discriminant_group(g.lattice()), g);
}

/// Composition of actions: (a after b) in generator coordinates.
inline DiscriminantAction compose(const FiniteQuadraticForm& form, const DiscriminantAction& a,
                                  const DiscriminantAction& b)
{
    DiscriminantAction out;
    const std::size_t k = form.invariant_factors.size();
    for (const auto& col : b.images) {
        IntVector img(k, Integer(0));
        for (std::size_t j = 0; j < k; ++j)
            for (std::size_t i = 0; i < k; ++i)
                img[i] += col[j] * a.images[j][i];
        for (std::size_t i = 0; i < k; ++i)
            mpz_fdiv_r(img[i].get_mpz_t(), img[i].get_mpz_t(), form.invariant_factors[i].get_mpz_t());
        out.images.push_back(std::move(img));
    }
    return out;
}

inline bool is_stable(const FiniteQuadraticForm& form, const Isometry& g)
{
    return induced_action(form, g).is_identity();
}

inline bool is_stable(const Isometry& g) { return induced_action(g).is_identity(); }

namespace detail {

inline std::vector<IntVector> all_elements(const std::vector<Integer>& orders)
{
    std::vector<IntVector> out{IntVector{}};
    for (const auto& d : orders) {
        std::vector<IntVector> next;
        for (const auto& prefix : out)
            for (Integer c = 0; c < d; ++c) {
                IntVector x = prefix;
                x.push_back(c);
                next.push_back(std::move(x));
            }
        out = std::move(next);
    }
    return out;
}

inline bool killed_by(const IntVector& x, const Integer& n, const std::vector<Integer>& orders)
{
    for (std::size_t i = 0; i < x.size(); ++i)
        if (!divides(orders[i], n * x[i]))
            return false;
    return true;
}

} // namespace detail

/// Exhaustive search for a generator assignment preserving q and b.
inline bool forms_isomorphic(const FiniteQuadraticForm& a, const FiniteQuadraticForm& b,
                             const Integer& search_bound = 10000)
{
    if (a.order() != b.order())
        return false;
    if (b.order() > search_bound)
        throw LatticeError("discriminant group exceeds the exhaustive search bound");
    std::vector<Integer> fa = a.invariant_factors, fb = b.invariant_factors;
    // The invariant factor lists of isomorphic groups agree once units are dropped.
    if (fa != fb)
        return false;
    const std::size_t k = fa.size();
    const std::vector<IntVector> elems = detail::all_elements(fb);
    std::vector<std::vector<const IntVector*>> candidates(k);
    for (std::size_t i = 0; i < k; ++i)
        for (const auto& x : elems)
            if (detail::killed_by(x, fa[i], fb) && b.q(x) == a.q_values[i])
                candidates[i].push_back(&x);

    std::vector<const IntVector*> chosen(k, nullptr);
    auto search = [&](auto&& self, std::size_t i) -> bool {
        if (i == k)
            return true;
        for (const IntVector* x : candidates[i]) {
            bool ok = true;
            for (std::size_t j = 0; j < i && ok; ++j)
                ok = b.b(*chosen[j], *x) == a.b_values[j][i];
            if (!ok)
                continue;
            chosen[i] = x;
            if (self(self, i + 1))
                return true;
        }
        return false;
    };
    // b is non-degenerate on A_L, so a b-preserving homomorphism is injective
    // and hence bijective between groups of equal order.
    return search(search, 0);
}

// ---------------------------------------------------------------------------
// Gluing

namespace detail {

inline IntMatrix columns_of(const Lattice& l, const std::vector<LatVector>& gens)
{
    std::vector<IntVector> cols;
    for (const auto& g : gens) {
        if (!g.lattice().same_as(l))
            throw LatticeError("generator belongs to a different lattice");
        cols.push_back(g.coords());
    }
    return IntMatrix::from_columns(cols, l.rank());
}

inline bool is_saturated(const IntMatrix& cols)
{
    SnfDecomposition snf = smith_normal_form(cols);
    if (snf.rank() != cols.cols())
        return false;
    for (std::size_t i = 0; i < cols.cols(); ++i)
        if (snf.d(i, i) != 1)
            return false;
    return true;
}

struct GluingData {
    IntMatrix bm, bn, basis;
};

inline GluingData check_gluing(const Lattice& l, const std::vector<LatVector>& m_gens,
                               const std::vector<LatVector>& n_gens, const Isometry& g_m, const Isometry& g_n)
{
    GluingData d{columns_of(l, m_gens), columns_of(l, n_gens), {}};
    if (d.bm.cols() + d.bn.cols() != l.rank())
        throw LatticeError("gluing ranks do not add up to the lattice rank");
    if (!(d.bm.transpose() * l.gram() * d.bn).is_zero())
        throw LatticeError("gluing sublattices are not orthogonal");
    if (!is_saturated(d.bm) || !is_saturated(d.bn))
        throw LatticeError("gluing sublattices must be primitive");
    if (!(g_m.lattice().gram() == d.bm.transpose() * l.gram() * d.bm) ||
        !(g_n.lattice().gram() == d.bn.transpose() * l.gram() * d.bn))
        throw LatticeError("isometry Gram matrices do not match the given sublattices");
    std::vector<IntVector> cols;
    for (std::size_t j = 0; j < d.bm.cols(); ++j)
        cols.push_back(d.bm.column(j));
    for (std::size_t j = 0; j < d.bn.cols(); ++j)
        cols.push_back(d.bn.column(j));
    d.basis = IntMatrix::from_columns(cols, l.rank());
    return d;
}

} // namespace detail

/// Whether g_m (+) g_n, extended to L (x) Q, maps L into L.
inline bool extends_across_gluing(const Lattice& l, const std::vector<LatVector>& m_gens,
                                  const std::vector<LatVector>& n_gens, const Isometry& g_m, const Isometry& g_n)
{
    detail::GluingData d = detail::check_gluing(l, m_gens, n_gens, g_m, g_n);
    IntMatrix block = block_diagonal(g_m.matrix(), g_n.matrix());
    RatMatrix x = to_rational(d.basis * block) * inverse(d.basis);
    IntMatrix out;
    return to_integer(x, out);
}

namespace detail {

inline std::vector<LatVector> embedded_basis(const Lattice& l, const Lattice& sub)
{
    if (!sub.has_ambient() || !sub.ambient().same_as(l))
        throw LatticeError("sublattice does not live in the given lattice");
    std::vector<LatVector> out;
    for (std::size_t j = 0; j < sub.rank(); ++j)
        out.push_back(l.vector(sub.embedding().column(j)));
    return out;
}

} // namespace detail

inline bool extends_across_gluing(const Lattice& l, const Lattice& m, const Lattice& n, const Isometry& g_m,
                                  const Isometry& g_n)
{
    return extends_across_gluing(l, detail::embedded_basis(l, m), detail::embedded_basis(l, n), g_m, g_n);
}

/// Glue-group criterion: (g_m, g_n) extends iff the induced action on
/// A_M (+) A_N preserves the glue subgroup L / (M (+) N).
inline bool glue_preserved(const Lattice& l, const std::vector<LatVector>& m_gens, const std::vector<LatVector>& n_gens,
                           const Isometry& g_m, const Isometry& g_n)
{
    detail::GluingData d = detail::check_gluing(l, m_gens, n_gens, g_m, g_n);
    const Lattice& lm = g_m.lattice();
    const Lattice& ln = g_n.lattice();
    FiniteQuadraticForm am = discriminant_group(lm);
    FiniteQuadraticForm an = discriminant_group(ln);
    std::vector<Integer> orders = am.invariant_factors;
    orders.insert(orders.end(), an.invariant_factors.begin(), an.invariant_factors.end());

    // Orthogonal projection of L onto M (x) Q, in M coordinates: G_M^{-1} B_M^T G.
    auto projector = [&](const Lattice& sub, const IntMatrix& b) {
        return sub.gram_inverse() * to_rational(b.transpose() * l.gram());
    };
    const RatMatrix pm = projector(lm, d.bm);
    const RatMatrix pn = projector(ln, d.bn);
    auto glue_coords = [&](const std::vector<Rational>& xm, const std::vector<Rational>& xn) {
        IntVector c = am.coordinates(lm, xm);
        IntVector cn = an.coordinates(ln, xn);
        c.insert(c.end(), cn.begin(), cn.end());
        return c;
    };

    std::vector<IntVector> gens;
    for (std::size_t j = 0; j < l.rank(); ++j) {
        std::vector<Rational> x(l.rank(), Rational(0));
        x[j] = 1;
        gens.push_back(glue_coords(pm * x, pn * x));
    }

    auto reduce = [&](IntVector v) {
        for (std::size_t i = 0; i < v.size(); ++i)
            mpz_fdiv_r(v[i].get_mpz_t(), v[i].get_mpz_t(), orders[i].get_mpz_t());
        return v;
    };
    std::set<IntVector> glue{IntVector(orders.size(), Integer(0))};
    std::vector<IntVector> frontier(glue.begin(), glue.end());
    while (!frontier.empty()) {
        std::vector<IntVector> next;
        for (const auto& h : frontier)
            for (const auto& g : gens) {
                IntVector s = h;
                for (std::size_t i = 0; i < s.size(); ++i)
                    s[i] += g[i];
                s = reduce(std::move(s));
                if (glue.insert(s).second)
                    next.push_back(std::move(s));
            }
        frontier = std::move(next);
    }

    DiscriminantAction act_m = induced_action(am, g_m);
    DiscriminantAction act_n = induced_action(an, g_n);
    const std::size_t km = am.invariant_factors.size();
    for (const auto& h : glue) {
        IntVector img(orders.size(), Integer(0));
        for (std::size_t j = 0; j < km; ++j)
            for (std::size_t i = 0; i < km; ++i)
                img[i] += h[j] * act_m.images[j][i];
        for (std::size_t j = km; j < orders.size(); ++j)
            for (std::size_t i = km; i < orders.size(); ++i)
                img[i] += h[j] * act_n.images[j - km][i - km];
        if (!glue.count(reduce(std::move(img))))
            return false;
    }
    return true;
}

} // namespace ogmon
