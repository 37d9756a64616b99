#pragma once

// Exact integer and rational linear algebra: Smith normal form, integral
// solving, saturated kernels, determinants and rational inverses.

#include "matrix.hpp"

#include <optional>

namespace ogmon {

/// u * a * v = d with u, v unimodular and d in Smith normal form.
struct SnfDecomposition {
    IntMatrix u;
    IntMatrix d;
    IntMatrix v;

    /// Number of nonzero diagonal entries.
    std::size_t rank() const
    {
        std::size_t r = 0;
        while (r < d.rows() && r < d.cols() && d(r, r) != 0)
            ++r;
        return r;
    }

    IntVector diagonal() const
    {
        IntVector diag;
        for (std::size_t i = 0; i < d.rows() && i < d.cols(); ++i)
            diag.push_back(d(i, i));
        return diag;
    }
};

namespace detail {

// Smallest nonzero |entry| in the trailing block starting at (t, t).
// Ties go to the lowest row index, then the lowest column index.
inline bool find_pivot(const IntMatrix& a, std::size_t t, std::size_t& pi, std::size_t& pj)
{
    bool found = false;
    Integer best;
    for (std::size_t i = t; i < a.rows(); ++i)
        for (std::size_t j = t; j < a.cols(); ++j) {
            const Integer& x = a(i, j);
            if (x == 0)
                continue;
            if (!found || abs(x) < best) {
                best = abs(x);
                pi = i;
                pj = j;
                found = true;
            }
        }
    return found;
}

} // namespace detail

/// Smith normal form by elementary row and column operations.
inline SnfDecomposition smith_normal_form(const IntMatrix& input)
{
    IntMatrix a = input;
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    IntMatrix u = IntMatrix::identity(m);
    IntMatrix v = IntMatrix::identity(n);

    for (std::size_t t = 0; t < std::min(m, n); ++t) {
        std::size_t pi = 0, pj = 0;
        if (!detail::find_pivot(a, t, pi, pj))
            break;
        for (;;) {
            a.swap_rows(t, pi);
            u.swap_rows(t, pi);
            a.swap_cols(t, pj);
            v.swap_cols(t, pj);

            bool dirty = false;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (a(i, t) == 0)
                    continue;
                Integer q = a(i, t) / a(t, t); // truncating: remainder smaller than pivot
                a.add_row(i, t, -q);
                u.add_row(i, t, -q);
                if (a(i, t) != 0)
                    dirty = true;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (a(t, j) == 0)
                    continue;
                Integer q = a(t, j) / a(t, t);
                a.add_col(j, t, -q);
                v.add_col(j, t, -q);
                if (a(t, j) != 0)
                    dirty = true;
            }
            if (dirty) {
                // A strictly smaller remainder exists in row t or column t.
                detail::find_pivot(a, t, pi, pj);
                continue;
            }
            // Enforce divisibility of the remaining block by the pivot.
            bool fixed = true;
            for (std::size_t i = t + 1; i < m && fixed; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (!divides(a(t, t), a(i, j))) {
                        a.add_row(t, i, Integer(1));
                        u.add_row(t, i, Integer(1));
                        fixed = false;
                        break;
                    }
            if (!fixed) {
                pi = t;
                pj = t;
                continue;
            }
            break;
        }
        if (a(t, t) < 0) {
            a.negate_row(t);
            u.negate_row(t);
        }
    }
    return {std::move(u), std::move(a), std::move(v)};
}

/// Integral solution of a*x = b, or nullopt when none exists.
inline std::optional<IntVector> solve_integral(const IntMatrix& a, const IntVector& b)
{
    if (b.size() != a.rows())
        throw std::invalid_argument("solve_integral: right-hand side length mismatch");
    SnfDecomposition snf = smith_normal_form(a);
    IntVector c = snf.u * b;
    IntVector y(a.cols(), Integer(0));
    for (std::size_t i = 0; i < c.size(); ++i) {
        Integer di = (i < a.cols()) ? snf.d(i, i) : Integer(0);
        if (di == 0) {
            if (c[i] != 0)
                return std::nullopt;
            continue;
        }
        if (!divides(di, c[i]))
            return std::nullopt;
        y[i] = c[i] / di;
    }
    return snf.v * y;
}

/// Basis of the saturated integer kernel {x : a*x = 0}.
inline std::vector<IntVector> kernel_basis(const IntMatrix& a)
{
    SnfDecomposition snf = smith_normal_form(a);
    std::vector<IntVector> basis;
    for (std::size_t j = snf.rank(); j < a.cols(); ++j)
        basis.push_back(snf.v.column(j));
    return basis;
}

/// Bareiss fraction-free determinant.
inline Integer determinant(const IntMatrix& input)
{
    if (!input.is_square())
        throw std::invalid_argument("determinant of a non-square matrix");
    const std::size_t n = input.rows();
    if (n == 0)
        return 1;
    IntMatrix a = input;
    Integer sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t s = k + 1;
            while (s < n && a(s, k) == 0)
                ++s;
            if (s == n)
                return 0;
            a.swap_rows(k, s);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                a(i, j) = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                mpz_divexact(a(i, j).get_mpz_t(), a(i, j).get_mpz_t(), prev.get_mpz_t());
            }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

inline std::size_t rank(const IntMatrix& a) { return smith_normal_form(a).rank(); }

/// Inverse over Q; throws on singular input.
inline RatMatrix inverse(const RatMatrix& input)
{
    if (!input.is_square())
        throw std::invalid_argument("inverse of a non-square matrix");
    const std::size_t n = input.rows();
    RatMatrix a = input;
    RatMatrix inv = RatMatrix::identity(n);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a(p, c) == 0)
            ++p;
        if (p == n)
            throw LatticeError("singular matrix has no inverse");
        a.swap_rows(c, p);
        inv.swap_rows(c, p);
        Rational piv = a(c, c);
        for (std::size_t j = 0; j < n; ++j) {
            a(c, j) /= piv;
            inv(c, j) /= piv;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || a(r, c) == 0)
                continue;
            Rational f = -a(r, c);
            a.add_row(r, c, f);
            inv.add_row(r, c, f);
        }
    }
    return inv;
}

inline RatMatrix inverse(const IntMatrix& a) { return inverse(to_rational(a)); }

/// Inverse of a unimodular integer matrix.
inline IntMatrix unimodular_inverse(const IntMatrix& a)
{
    IntMatrix out;
    if (!to_integer(inverse(a), out))
        throw LatticeError("matrix is not unimodular");
    return out;
}

/// Rational solution of a*x = b for square invertible a.
inline std::vector<Rational> solve_rational(const IntMatrix& a, const IntVector& b)
{
    RatMatrix inv = inverse(a);
    std::vector<Rational> rb(b.begin(), b.end());
    return inv * rb;
}

} // namespace ogmon
