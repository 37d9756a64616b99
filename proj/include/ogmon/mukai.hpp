#pragma once

// Rank-3 algebraic Mukai lattice {(r, mH, s)} of a genus-2 K3 surface (H^2 = 2),
// the half-integral lattices Gamma_v, and the explicit maps into the OG10 lattice.

#include "og10.hpp"

namespace ogmon {

struct MukaiVector {
    Integer r, m, s;

    friend bool operator==(const MukaiVector&, const MukaiVector&) = default;
};

inline std::string to_string(const MukaiVector& x)
{
    return "(" + to_string(x.r) + "," + to_string(x.m) + "H," + to_string(x.s) + ")";
}

/// ((r,m,s),(r',m',s')) = 2mm' - rs' - r's
inline Integer mukai_pair(const MukaiVector& x, const MukaiVector& y)
{
    return 2 * x.m * y.m - x.r * y.s - y.r * x.s;
}

/// Saturated basis of v^perp in the algebraic lattice.
inline std::vector<MukaiVector> v_perp_basis(const MukaiVector& v)
{
    if (v.r == 0 && v.m == 0 && v.s == 0)
        throw LatticeError("v^perp of the zero Mukai vector");
    IntMatrix row(1, 3);
    row(0, 0) = -v.s;
    row(0, 1) = 2 * v.m;
    row(0, 2) = -v.r;
    std::vector<MukaiVector> out;
    for (const auto& k : kernel_basis(row))
        out.push_back({k[0], k[1], k[2]});
    return out;
}

/// (alpha, k sigma / 2) with alpha = (r2/2, (m2/2) H, s2/2) in v^perp (x) Q.
class GammaElement {
public:
    /// Validates alpha in (v^perp)*, and k even exactly when alpha is integral.
    GammaElement(MukaiVector v, Integer r2, Integer m2, Integer s2, Integer k)
        : v_(std::move(v)), r2_(std::move(r2)), m2_(std::move(m2)), s2_(std::move(s2)), k_(std::move(k))
    {
        if (2 * v_.m * m2_ - v_.r * s2_ - r2_ * v_.s != 0)
            throw LatticeError("Gamma element is not orthogonal to v");
        // Pair with v^perp in the dual {(r, (m'/2) H, s)} of the algebraic lattice.
        IntMatrix row(1, 3);
        row(0, 0) = -v_.s;
        row(0, 1) = v_.m;
        row(0, 2) = -v_.r;
        for (const auto& y : kernel_basis(row)) {
            Integer twice = m2_ * y[1] - r2_ * y[2] - y[0] * s2_;
            if (!divides(Integer(2), twice))
                throw LatticeError("Gamma element does not pair integrally with v^perp");
        }
        bool integral = divides(Integer(2), r2_) && divides(Integer(2), m2_) && divides(Integer(2), s2_);
        if (integral != divides(Integer(2), k_))
            throw LatticeError("Gamma parity violated: k must be even exactly when alpha is integral");
    }

    const MukaiVector& v() const { return v_; }
    const Integer& r2() const { return r2_; }
    const Integer& m2() const { return m2_; }
    const Integer& s2() const { return s2_; }
    const Integer& k() const { return k_; }

private:
    MukaiVector v_;
    Integer r2_, m2_, s2_, k_;
};

/// b((w1, m1 sigma), (w2, m2 sigma)) = (w1, w2) - 6 m1 m2 with m_i = k_i / 2.
inline Rational gamma_pair(const GammaElement& x, const GammaElement& y)
{
    if (!(x.v() == y.v()))
        throw LatticeError("Gamma elements for different Mukai vectors");
    Rational w(2 * x.m2() * y.m2() - x.r2() * y.s2() - y.r2() * x.s2(), 4);
    Rational s(3 * x.k() * y.k(), 2);
    Rational out = w - s;
    out.canonicalize();
    return out;
}

namespace detail {

inline LatVector hbs(const Integer& h, const Integer& b, const Integer& s)
{
    const NamedClasses& c = og10().classes();
    return h * c.H + b * c.Btilde + s * c.Sigmatilde;
}

} // namespace detail

/// ((n/2, xi, n/2), k sigma/2) -> xi + n Btilde + ((n + k)/2) Sigmatilde for v = (2, 0, -2).
inline LatVector gamma_to_h2(const GammaElement& x)
{
    if (!(x.v() == MukaiVector{2, 0, -2}))
        throw LatticeError("gamma_to_h2 is defined for v = (2, 0, -2)");
    if (x.r2() != x.s2())
        throw LatticeError("first component must have the shape (n/2, xi, n/2)");
    if (!divides(Integer(2), x.m2()))
        throw LatticeError("xi must be an integral class");
    const Integer& n = x.r2();
    Integer nk = n + x.k();
    if (!divides(Integer(2), nk))
        throw LatticeError("Gamma parity violated");
    return detail::hbs(x.m2() / 2, n, nk / 2);
}

/// Coefficients of a combination x_a a + x_b b + x_sigma sigma_0.
struct PsiSource {
    Integer a, b, sigma;
};

inline const MukaiVector& v2() { static const MukaiVector v{0, 2, -2}; return v; }

/// a -> a2/2 + 3 b2/2 - sigma2/2, b -> b2, sigma_0 -> 3 b2 - sigma2,
/// with a2 = (-2, H, 0), b2 = (0, 0, 1).
inline GammaElement psi_pullback(const PsiSource& x)
{
    return {v2(), -2 * x.a, x.a, 3 * x.a + 2 * x.b + 6 * x.sigma, -x.a - 2 * x.sigma};
}

/// Source Gram on (a, b, sigma_0).
inline IntMatrix psi_source_gram() { return {{2, 1, 0}, {1, 0, 0}, {0, 0, -6}}; }

/// ((-m, (m/2) H, n/2), k sigma2/2) -> ((m+n)/2) H - n Btilde + ((k-n)/2) Sigmatilde.
inline LatVector fm_pushforward(const GammaElement& x)
{
    if (!(x.v() == v2()))
        throw LatticeError("fm_pushforward is defined for v2 = (0, 2H, -2)");
    const Integer& m = x.m2();
    const Integer& n = x.s2();
    if (x.r2() != -2 * m)
        throw LatticeError("first component must have the shape (-m, (m/2) H, n/2)");
    bool even = divides(Integer(2), m) && divides(Integer(2), n);
    if (even != divides(Integer(2), x.k()))
        throw LatticeError("Gamma parity violated: k even exactly when m and n are even");
    if (!divides(Integer(2), m + n))
        throw LatticeError("m + n must be even");
    Integer kn = x.k() - n;
    if (!divides(Integer(2), kn))
        throw LatticeError("k - n must be even");
    return detail::hbs((m + n) / 2, -n, kn / 2);
}

/// P2 = fm_pushforward o psi_pullback on <a, b, sigma_0>.
inline LatVector parallel_transport_P2(const PsiSource& x) { return fm_pushforward(psi_pullback(x)); }

/// P1: Theta_V -> a - 2b, b_V -> b.
inline PsiSource parallel_transport_P1(const Integer& theta, const Integer& b_v) { return {theta, b_v - 2 * theta, 0}; }

/// P = P2 o P1 on the span of Theta_V and b_V.
inline LatVector parallel_transport_P(const Integer& theta, const Integer& b_v)
{
    return parallel_transport_P2(parallel_transport_P1(theta, b_v));
}

struct FujikiResult {
    Rational fifth_power;        // q(Theta, b)^5
    std::optional<Rational> value; // the rational fifth root, when it exists
    Integer q_b = 0;             // q(b_V) = 0 since b_V^10 = 0
};

namespace detail {

inline std::optional<Integer> exact_root(const Integer& x, unsigned long n)
{
    Integer r;
    if (x < 0 && n % 2 == 0)
        return std::nullopt;
    Integer ax = abs(x);
    if (mpz_root(r.get_mpz_t(), ax.get_mpz_t(), n) == 0)
        return std::nullopt;
    return x < 0 ? Integer(-r) : r;
}

} // namespace detail

/// From C(10,5) Theta^5 b^5 = c 2^5 q(Theta, b)^5 when q(b) = 0.
inline FujikiResult fujiki_theta_pairing(const Integer& fujiki_constant, const Integer& theta5_b5)
{
    if (fujiki_constant <= 0)
        throw LatticeError("Fujiki constant must be positive");
    Integer binom;
    mpz_bin_uiui(binom.get_mpz_t(), 10, 5);
    Rational p(binom * theta5_b5, 32 * fujiki_constant);
    p.canonicalize();
    FujikiResult out{p, std::nullopt, 0};
    auto num = detail::exact_root(p.get_num(), 5);
    auto den = detail::exact_root(p.get_den(), 5);
    if (num && den) {
        Rational q(*num, *den);
        q.canonicalize();
        out.value = q;
    }
    return out;
}

struct IntersectionTable {
    Integer a_l1, a_l2, b_l1, b_l2, T_l1, T_sq;
};

inline const IntersectionTable& theta_table()
{
    static const IntersectionTable t{5, -1, 0, 1, 5, -2};
    return t;
}

/// a = (-1, H, 0), b = (0, 0, 1) spanning v^perp for v = (0, 2H, -4).
inline const MukaiVector& mukai_a() { static const MukaiVector a{-1, 1, 0}; return a; }
inline const MukaiVector& mukai_b() { static const MukaiVector b{0, 0, 1}; return b; }

struct ThetaCoefficients {
    Integer alpha, beta; // T = alpha a + beta b
};

/// Solves T = alpha a + beta b from T.l1 (with b.l1 = 0) and T^2. Returns
/// nullopt when no integral solution exists.
inline std::optional<ThetaCoefficients> solve_theta_class(const IntersectionTable& t)
{
    if (t.b_l1 != 0)
        throw LatticeError("the l1 row must not involve b");
    if (t.a_l1 == 0)
        throw LatticeError("a.l1 = 0 leaves the coefficient of a undetermined");
    if (!divides(t.a_l1, t.T_l1))
        return std::nullopt;
    Integer alpha = t.T_l1 / t.a_l1;
    const Integer aa = mukai_pair(mukai_a(), mukai_a());
    const Integer ab = mukai_pair(mukai_a(), mukai_b());
    const Integer bb = mukai_pair(mukai_b(), mukai_b());
    if (bb != 0)
        throw std::logic_error("b is expected to be isotropic");
    if (alpha == 0) {
        // T = beta b is isotropic and the table does not determine beta.
        if (t.T_sq != 0)
            return std::nullopt;
        return ThetaCoefficients{0, 0};
    }
    // T^2 = alpha^2 a^2 + 2 alpha beta (a, b)
    Integer rhs = t.T_sq - alpha * alpha * aa;
    Integer den = 2 * alpha * ab;
    if (den == 0 || !divides(den, rhs))
        return std::nullopt;
    return ThetaCoefficients{alpha, rhs / den};
}

} // namespace ogmon
