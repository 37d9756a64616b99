#pragma once

// Certified isometries, integral reflections, Eichler transvections and the
// orientation character on lattices of signature (3, n).

#include "lattice.hpp"

namespace ogmon {

/// Integer matrix acting on coordinate columns and preserving the Gram matrix.
class Isometry {
public:
    /// Certifies m^T G m = G; throws LatticeError otherwise.
    Isometry(Lattice l, IntMatrix m) : lattice_(std::move(l)), m_(std::move(m))
    {
        if (!m_.is_square() || m_.rows() != lattice_.rank())
            throw LatticeError("isometry matrix must be square of the lattice rank");
        if (!(m_.transpose() * lattice_.gram() * m_ == lattice_.gram()))
            throw LatticeError("matrix does not preserve the Gram matrix");
    }

    static Isometry identity(const Lattice& l) { return {l, IntMatrix::identity(l.rank()), Trusted{}}; }

    const Lattice& lattice() const { return lattice_; }
    const IntMatrix& matrix() const { return m_; }

    LatVector operator()(const LatVector& x) const
    {
        if (!x.lattice().same_as(lattice_))
            throw LatticeError("vector and isometry live on different lattices");
        return lattice_.vector(m_ * x.coords());
    }

    /// Composition: (g * h)(x) = g(h(x)).
    friend Isometry operator*(const Isometry& g, const Isometry& h)
    {
        if (!g.lattice_.same_as(h.lattice_))
            throw LatticeError("cannot compose isometries of different lattices");
        return {g.lattice_, g.m_ * h.m_, Trusted{}};
    }

    friend bool operator==(const Isometry& g, const Isometry& h) { return g.m_ == h.m_; }

    bool is_identity() const { return m_.is_identity(); }

    /// g^{-1} = G^{-1} g^T G.
    Isometry inverse() const
    {
        RatMatrix inv = lattice_.gram_inverse() * to_rational(m_.transpose() * lattice_.gram());
        IntMatrix out;
        if (!to_integer(inv, out))
            throw LatticeError("isometry inverse is not integral");
        return {lattice_, std::move(out), Trusted{}};
    }

    Integer det() const { return determinant(m_); }

    /// Skips certification. Only for matrices known to be isometries by construction.
    static Isometry trusted(const Lattice& l, IntMatrix m) { return {l, std::move(m), Trusted{}}; }

private:
    struct Trusted {};
    Isometry(Lattice l, IntMatrix m, Trusted) : lattice_(std::move(l)), m_(std::move(m)) {}

    Lattice lattice_;
    IntMatrix m_;
};

inline Isometry make_isometry(const Lattice& l, IntMatrix m) { return {l, std::move(m)}; }

inline bool is_reflection_integral(const LatVector& v)
{
    Integer v2 = square(v);
    if (v2 == 0)
        return false;
    for (const auto& p : pairing_row(v.lattice(), v.coords()))
        if (!divides(v2, 2 * p))
            return false;
    return true;
}

/// R_v(x) = x - (2 (v, x) / v^2) v.
inline Isometry reflection(const LatVector& v)
{
    const Lattice& l = v.lattice();
    Integer v2 = square(v);
    if (v2 == 0)
        throw LatticeError("reflection in an isotropic vector");
    IntVector row = pairing_row(l, v.coords());
    for (auto& p : row) {
        if (!divides(v2, 2 * p))
            throw LatticeError("reflection is not integral");
        p = 2 * p / v2;
    }
    IntMatrix m = IntMatrix::identity(l.rank());
    for (std::size_t i = 0; i < l.rank(); ++i) {
        if (v[i] == 0)
            continue;
        for (std::size_t j = 0; j < l.rank(); ++j)
            m(i, j) -= v[i] * row[j];
    }
    return Isometry::trusted(l, std::move(m));
}

namespace detail {

inline void check_transvection(const LatVector& z, const LatVector& a)
{
    z.check_same(a);
    if (square(z) != 0)
        throw LatticeError("transvection base vector is not isotropic");
    if (pair(z, a) != 0)
        throw LatticeError("transvection argument is not orthogonal to the base vector");
}

} // namespace detail

/// t(z, a)(x) = x - (a, x) z + (z, x) a - (a^2 / 2)(z, x) z.
inline Isometry transvection(const LatVector& z, const LatVector& a)
{
    detail::check_transvection(z, a);
    const Lattice& l = z.lattice();
    const std::size_t n = l.rank();
    IntVector ga = pairing_row(l, a.coords());
    IntVector gz = pairing_row(l, z.coords());
    Integer half = square(a) / 2;
    IntMatrix m = IntMatrix::identity(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Integer& zi = z[i];
        const Integer& ai = a[i];
        if (zi == 0 && ai == 0)
            continue;
        for (std::size_t j = 0; j < n; ++j)
            m(i, j) += ai * gz[j] - zi * (ga[j] + half * gz[j]);
    }
    return Isometry::trusted(l, std::move(m));
}

/// Left-multiplies m by t(z, a) in O(n^2).
inline void apply_transvection_left(const LatVector& z, const LatVector& a, IntMatrix& m)
{
    const Lattice& l = z.lattice();
    const std::size_t n = l.rank();
    IntVector ga = pairing_row(l, a.coords());
    IntVector gz = pairing_row(l, z.coords());
    Integer half = square(a) / 2;
    // rows (a, m x) and (z, m x) as functionals of x
    IntVector ra(n, Integer(0)), rz(n, Integer(0));
    for (std::size_t k = 0; k < n; ++k) {
        if (ga[k] == 0 && gz[k] == 0)
            continue;
        for (std::size_t j = 0; j < n; ++j) {
            const Integer& mk = m(k, j);
            if (mk == 0)
                continue;
            if (ga[k] != 0)
                ra[j] += ga[k] * mk;
            if (gz[k] != 0)
                rz[j] += gz[k] * mk;
        }
    }
    for (std::size_t j = 0; j < n; ++j)
        ra[j] += half * rz[j];
    for (std::size_t i = 0; i < n; ++i) {
        const Integer& zi = z[i];
        const Integer& ai = a[i];
        if (zi == 0 && ai == 0)
            continue;
        for (std::size_t j = 0; j < n; ++j)
            m(i, j) += ai * rz[j] - zi * ra[j];
    }
}

/// Right-multiplies m by t(z, a) in O(n^2).
inline void apply_transvection_right(IntMatrix& m, const LatVector& z, const LatVector& a)
{
    const Lattice& l = z.lattice();
    const std::size_t n = l.rank();
    IntVector ga = pairing_row(l, a.coords());
    IntVector gz = pairing_row(l, z.coords());
    Integer half = square(a) / 2;
    // m t = m + (m a) gz^T - (m z)(ga + half gz)^T
    IntVector ma = m * a.coords();
    IntVector mz = m * z.coords();
    for (std::size_t j = 0; j < n; ++j)
        ga[j] += half * gz[j];
    for (std::size_t i = 0; i < n; ++i) {
        if (ma[i] == 0 && mz[i] == 0)
            continue;
        for (std::size_t j = 0; j < n; ++j)
            m(i, j) += ma[i] * gz[j] - mz[i] * ga[j];
    }
}

/// Sign of det(W^T G g W) for the lattice's positive 3-frame W.
inline bool is_orientation_preserving(const Isometry& g)
{
    const Lattice& l = g.lattice();
    if (l.signature().first != 3)
        throw LatticeError("orientation character needs signature (3, n)");
    const IntMatrix& w = l.positive_frame();
    IntMatrix proj = w.transpose() * l.gram() * (g.matrix() * w);
    Integer d = determinant(proj);
    if (d == 0)
        throw LatticeError("degenerate projection onto the positive frame");
    return d > 0;
}

} // namespace ogmon
