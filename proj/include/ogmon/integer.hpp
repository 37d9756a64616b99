#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace ogmon {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;

/// Raised when an operation's mathematical precondition fails.
class LatticeError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

inline std::string to_string(const Integer& x) { return x.get_str(); }

inline std::string to_string(const Rational& x) { return x.get_str(); }

inline Integer parse_integer(const std::string& s)
{
    Integer x;
    if (s.empty() || x.set_str(s, 10) != 0)
        throw std::invalid_argument("not a decimal integer: '" + s + "'");
    return x;
}

inline Integer abs(const Integer& x) { return x < 0 ? Integer(-x) : x; }

inline Integer gcd(const Integer& a, const Integer& b)
{
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

/// Floor division; b must be nonzero.
inline Integer floor_div(const Integer& a, const Integer& b)
{
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

/// Division rounded to the nearest integer (ties toward -infinity).
inline Integer round_div(const Integer& a, const Integer& b)
{
    Integer num = 2 * a + b;
    Integer den = 2 * b;
    return floor_div(num, den);
}

inline bool divides(const Integer& d, const Integer& x)
{
    if (d == 0)
        return x == 0;
    return mpz_divisible_p(x.get_mpz_t(), d.get_mpz_t()) != 0;
}

inline bool is_integral(const Rational& q) { return q.get_den() == 1; }

/// Fractional part in [0, 1).
inline Rational frac(const Rational& q)
{
    Integer fl = floor_div(q.get_num(), q.get_den());
    Rational r = q - Rational(fl);
    r.canonicalize();
    return r;
}

/// Representative of q modulo m in [0, m).
inline Rational mod(const Rational& q, const Integer& m)
{
    Rational t = q / Rational(m);
    t.canonicalize();
    Rational r = frac(t) * Rational(m);
    r.canonicalize();
    return r;
}

inline Integer gcd_of(const IntVector& v)
{
    Integer g = 0;
    for (const auto& x : v)
        g = gcd(g, x);
    return g;
}

} // namespace ogmon
