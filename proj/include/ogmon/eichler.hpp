#pragma once

// Constructive Eichler criterion. A frame presents a working lattice as
// <e, f> (+) L1 with a second hyperbolic pair <e', f'> inside L1. Every vector
// u = alpha e + beta f + w is driven to a canonical representative that
// depends only on u^2, div(u) and the class of u / div(u) in the discriminant
// group, using transvections t(e, a), t(f, a) with a in L1.

#include "word.hpp"

namespace ogmon {

struct Transvection {
    LatVector z;
    LatVector a;

    Transvection inverse() const { return {z, -a}; }
};

/// Ordered transvections; the value is seq[0] * seq[1] * ...
using TransvectionSequence = std::vector<Transvection>;

inline LatVector apply_to(const Transvection& t, const LatVector& x)
{
    Integer ax = pair(t.a, x);
    Integer zx = pair(t.z, x);
    Integer half = square(t.a) / 2;
    return x - ax * t.z + zx * t.a - (half * zx) * t.z;
}

/// Right-to-left application of the sequence to x.
inline LatVector apply_to(const TransvectionSequence& seq, LatVector x)
{
    for (auto it = seq.rbegin(); it != seq.rend(); ++it)
        x = apply_to(*it, x);
    return x;
}

inline TransvectionSequence inverse(const TransvectionSequence& seq)
{
    TransvectionSequence out;
    for (auto it = seq.rbegin(); it != seq.rend(); ++it)
        out.push_back(it->inverse());
    return out;
}

inline IntMatrix to_matrix(const Lattice& l, const TransvectionSequence& seq)
{
    IntMatrix m = IntMatrix::identity(l.rank());
    for (const auto& t : seq)
        apply_transvection_right(m, t.z, t.a);
    return m;
}

inline GeneratorWord to_word(const Lattice& l, const TransvectionSequence& seq)
{
    GeneratorWord w(l);
    for (const auto& t : seq)
        w.push_back(transvection_factor(t.z, t.a));
    return w;
}

class HyperbolicFrame {
public:
    /// rest spans the part of L1 orthogonal to <e_in, f_in>.
    HyperbolicFrame(LatVector e, LatVector f, LatVector e_in, LatVector f_in, std::vector<LatVector> rest)
        : e_(std::move(e)), f_(std::move(f)), e_in_(std::move(e_in)), f_in_(std::move(f_in))
    {
        const Lattice& l = e_.lattice();
        auto hyperbolic = [](const LatVector& x, const LatVector& y) {
            return square(x) == 0 && square(y) == 0 && pair(x, y) == 1;
        };
        if (!hyperbolic(e_, f_) || !hyperbolic(e_in_, f_in_))
            throw LatticeError("frame pairs must be hyperbolic");
        l1_ = {e_in_, f_in_};
        l1_.insert(l1_.end(), rest.begin(), rest.end());
        for (const auto& x : l1_) {
            if (pair(x, e_) != 0 || pair(x, f_) != 0)
                throw LatticeError("frame L1 basis is not orthogonal to the outer pair");
        }
        for (const auto& x : rest)
            if (pair(x, e_in_) != 0 || pair(x, f_in_) != 0)
                throw LatticeError("frame remainder is not orthogonal to the inner pair");
        std::vector<IntVector> cols;
        for (const auto& x : l1_)
            cols.push_back(x.coords());
        basis_ = IntMatrix::from_columns(cols, l.rank());
        IntMatrix gram1 = basis_.transpose() * l.gram() * basis_;
        coord_map_ = inverse(gram1) * to_rational(basis_.transpose() * l.gram());
    }

    const Lattice& lattice() const { return e_.lattice(); }
    const LatVector& e() const { return e_; }
    const LatVector& f() const { return f_; }
    const LatVector& e_in() const { return e_in_; }
    const LatVector& f_in() const { return f_in_; }
    const std::vector<LatVector>& l1_basis() const { return l1_; }

    /// Coordinates in the L1 basis; throws when w is not in L1.
    IntVector l1_coordinates(const LatVector& w) const
    {
        std::vector<Rational> x(w.coords().begin(), w.coords().end());
        std::vector<Rational> c = coord_map_ * x;
        IntVector out;
        for (auto& q : c) {
            q.canonicalize();
            if (!is_integral(q))
                throw LatticeError("vector does not lie in the frame's working lattice");
            out.push_back(q.get_num());
        }
        if (!(basis_ * out == w.coords()))
            throw LatticeError("vector does not lie in the frame's working lattice");
        return out;
    }

    LatVector from_l1(const IntVector& c) const { return lattice().vector(basis_ * c); }

private:
    LatVector e_, f_, e_in_, f_in_;
    std::vector<LatVector> l1_;
    IntMatrix basis_;
    RatMatrix coord_map_;
};

struct CanonicalReduction {
    TransvectionSequence moves; // applied in order: moves[0] first
    LatVector canonical;
};

namespace detail {

inline std::size_t default_step_bound(const HyperbolicFrame& fr, const LatVector& u)
{
    // Euclid steps grow with the bit length of the coordinates.
    std::size_t bits = 0;
    for (const auto& x : u.coords())
        bits = std::max(bits, mpz_sizeinbase(x.get_mpz_t(), 2));
    return 10 * fr.lattice().rank() + 4 * bits;
}

} // namespace detail

inline CanonicalReduction reduce_to_canonical(const HyperbolicFrame& fr, LatVector u, std::size_t step_bound = 0)
{
    if (u.is_zero())
        throw LatticeError("cannot transport the zero vector");
    if (step_bound == 0)
        step_bound = detail::default_step_bound(fr, u);
    const LatVector &e = fr.e(), &f = fr.f(), &ei = fr.e_in(), &fi = fr.f_in();
    CanonicalReduction out{{}, u};
    auto move = [&](const LatVector& z, const LatVector& a) {
        if (a.is_zero())
            return;
        if (out.moves.size() >= step_bound)
            throw std::logic_error("Eichler reduction exceeded its step bound");
        Transvection t{z, a};
        u = apply_to(t, u);
        out.moves.push_back(std::move(t));
    };
    // X = [[alpha, -beta'], [alpha', beta]] with alpha = (u,f), beta = (u,e),
    // alpha' = (u,f'), beta' = (u,e'). Moves act on X by elementary operations:
    auto col1_add = [&](const Integer& x) { move(e, x * ei); };   // col1 += x col2
    auto row1_sub = [&](const Integer& x) { move(e, x * fi); };   // row1 -= x row2
    auto row2_add = [&](const Integer& x) { move(f, x * ei); };   // row2 += x row1
    auto col2_sub = [&](const Integer& x) { move(f, x * fi); };   // col2 -= x col1
    auto x00 = [&] { return pair(u, f); };
    auto x01 = [&] { return Integer(-pair(u, ei)); };
    auto x10 = [&] { return pair(u, fi); };
    auto x11 = [&] { return pair(u, e); };

    // Diagonalize X.
    while (x10() != 0 || x01() != 0) {
        while (x10() != 0) {
            Integer a = x00(), c = x10();
            if (a == 0)
                row1_sub(Integer(-1));
            else if (abs(a) <= abs(c))
                row2_add(Integer(-round_div(c, a)));
            else
                row1_sub(round_div(a, c));
        }
        while (x01() != 0) {
            Integer a = x00(), b = x01();
            if (a == 0)
                col1_add(Integer(1));
            else if (abs(a) <= abs(b))
                col2_sub(round_div(b, a));
            else
                col1_add(Integer(-round_div(a, b)));
        }
    }
    // diag(g, h) -> [[0, g], [-h, 0]], i.e. alpha = beta = 0.
    if (x00() != 0 || x11() != 0) {
        col2_sub(Integer(-1));
        col1_add(Integer(-1));
        col2_sub(Integer(-1));
    }
    // Now u = w lies in L1; raise beta to d = div(w) = div(u).
    {
        IntVector row;
        for (const auto& b : fr.l1_basis())
            row.push_back(pair(b, u));
        // coeff . row = d = gcd(row), preferring a single basis vector.
        Integer d = 0;
        IntVector coeff(row.size(), Integer(0));
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (row[i] == 0 || divides(d, row[i]))
                continue;
            if (d == 0) {
                d = abs(row[i]);
                coeff[i] = row[i] > 0 ? 1 : -1;
                continue;
            }
            Integer g, s, t;
            mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), d.get_mpz_t(), row[i].get_mpz_t());
            for (auto& c : coeff)
                c *= s;
            coeff[i] += t;
            d = g;
        }
        for (std::size_t i = 0; i < row.size(); ++i)
            if (abs(row[i]) == d) {
                std::fill(coeff.begin(), coeff.end(), Integer(0));
                coeff[i] = row[i] > 0 ? 1 : -1;
                break;
            }
        // (a, w) = -d
        IntVector neg(coeff.size());
        for (std::size_t i = 0; i < coeff.size(); ++i)
            neg[i] = -coeff[i];
        move(f, fr.from_l1(neg));
        Integer dd = x11();
        if (dd <= 0)
            throw std::logic_error("Eichler reduction: divisibility step failed");
        // Reduce w modulo d * L1.
        LatVector w = u - dd * f;
        IntVector c = fr.l1_coordinates(w);
        IntVector shift(c.size());
        bool any = false;
        for (std::size_t i = 0; i < c.size(); ++i) {
            shift[i] = -floor_div(c[i], dd);
            any = any || shift[i] != 0;
        }
        if (any)
            move(e, fr.from_l1(shift));
    }
    out.canonical = u;
    return out;
}

/// Transvection word mapping u to v; both must be primitive with equal
/// square, divisibility and discriminant coset.
inline TransvectionSequence eichler_sequence(const HyperbolicFrame& fr, const LatVector& u, const LatVector& v,
                                             std::size_t step_bound = 0)
{
    u.check_same(v);
    if (u == v)
        return {};
    if (content(u) != 1 || content(v) != 1)
        throw LatticeError("Eichler transport needs primitive vectors");
    if (square(u) != square(v))
        throw LatticeError("Eichler transport needs equal squares");
    CanonicalReduction ru = reduce_to_canonical(fr, u, step_bound);
    CanonicalReduction rv = reduce_to_canonical(fr, v, step_bound);
    if (!(ru.canonical == rv.canonical))
        throw LatticeError("vectors differ in divisibility or discriminant coset");
    // T u = c = S v  =>  v = S^{-1} T u
    TransvectionSequence out;
    for (const auto& t : rv.moves)
        out.push_back(t.inverse());
    for (auto it = ru.moves.rbegin(); it != ru.moves.rend(); ++it)
        out.push_back(*it);
    return out;
}

inline GeneratorWord eichler_transport(const HyperbolicFrame& fr, const LatVector& u, const LatVector& v,
                                       std::size_t step_bound = 0)
{
    return to_word(fr.lattice(), eichler_sequence(fr, u, v, step_bound));
}

struct HyperbolicFactorization {
    TransvectionSequence word; // in E_U(L1)
    Isometry h;                // fixes e and f
};

/// g = (product of word) * h with h(e) = e, h(f) = f.
inline HyperbolicFactorization factor_off_hyperbolic(const HyperbolicFrame& fr, const Isometry& g)
{
    if (!g.lattice().same_as(fr.lattice()))
        throw LatticeError("isometry and frame live on different lattices");
    if (!is_orientation_preserving(g))
        throw LatticeError("factor_off_hyperbolic needs an orientation preserving isometry");
    const LatVector &e = fr.e(), &f = fr.f();
    TransvectionSequence w1 = eichler_sequence(fr, e, g(e));
    IntMatrix m = g.matrix();
    for (const auto& t : w1) // W1^{-1} g
        apply_transvection_left(t.z, -t.a, m);
    LatVector g1f = fr.lattice().vector(m * f.coords());
    LatVector a = g1f - f - pair(g1f, f) * e;
    apply_transvection_left(e, -a, m);
    Isometry h = Isometry::trusted(fr.lattice(), std::move(m));
    if (!(h(e) == e) || !(h(f) == f))
        throw std::logic_error("factor_off_hyperbolic: residual does not fix the hyperbolic pair");
    if (!a.is_zero())
        w1.push_back({e, a});
    return {std::move(w1), std::move(h)};
}

} // namespace ogmon
