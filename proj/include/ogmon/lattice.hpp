#pragma once

// Lattices as Gram-matrix algebra: pairings, divisibility, the standard
// catalogue (U, E8(-1), A2(-1), G2(-1), OG10, rank-3 algebraic Mukai lattice),
// direct sums and saturated orthogonal complements.

#include "exactlin.hpp"

#include <algorithm>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ogmon {

class LatVector;

// ---------------------------------------------------------------------------
// Congruence diagonalization over Q

/// Result of congruence diagonalization over Q: columns of `basis` are
/// mutually orthogonal, with squares `diagonal`.
struct Diagonalization {
    RatMatrix basis;
    std::vector<Rational> diagonal;
};

inline Diagonalization diagonalize(const IntMatrix& gram)
{
    const std::size_t n = gram.rows();
    RatMatrix a = to_rational(gram);
    RatMatrix p = RatMatrix::identity(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (a(i, i) == 0) {
            std::size_t j = i + 1;
            while (j < n && a(j, j) == 0)
                ++j;
            if (j < n) {
                a.swap_rows(i, j);
                a.swap_cols(i, j);
                p.swap_cols(i, j);
            } else {
                j = i + 1;
                while (j < n && a(i, j) == 0)
                    ++j;
                if (j == n)
                    continue; // radical direction
                a.add_row(i, j, Rational(1));
                a.add_col(i, j, Rational(1));
                p.add_col(i, j, Rational(1));
            }
        }
        for (std::size_t j = i + 1; j < n; ++j) {
            if (a(j, i) == 0)
                continue;
            Rational f = -a(j, i) / a(i, i);
            a.add_row(j, i, f);
            a.add_col(j, i, f);
            p.add_col(j, i, f);
        }
    }
    Diagonalization out{std::move(p), {}};
    for (std::size_t i = 0; i < n; ++i)
        out.diagonal.push_back(a(i, i));
    return out;
}

inline std::pair<int, int> signature_of(const IntMatrix& gram)
{
    std::pair<int, int> sig{0, 0};
    for (const auto& x : diagonalize(gram).diagonal) {
        if (x > 0)
            ++sig.first;
        else if (x < 0)
            ++sig.second;
    }
    return sig;
}

namespace detail {

// Positive diagonal directions, cleared of denominators.
inline IntMatrix positive_columns(const Diagonalization& dz)
{
    const std::size_t n = dz.basis.rows();
    std::vector<IntVector> cols;
    for (std::size_t j = 0; j < dz.diagonal.size(); ++j) {
        if (dz.diagonal[j] <= 0)
            continue;
        Integer den = 1;
        for (std::size_t i = 0; i < n; ++i)
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), dz.basis(i, j).get_den_mpz_t());
        IntVector c(n);
        for (std::size_t i = 0; i < n; ++i) {
            Rational scaled = dz.basis(i, j) * Rational(den);
            c[i] = scaled.get_num();
        }
        cols.push_back(std::move(c));
    }
    return IntMatrix::from_columns(cols, n);
}

} // namespace detail

/// Immutable even non-degenerate lattice. Copies share the same data.
class Lattice {
    struct Data {
        IntMatrix gram;
        std::vector<std::string> labels;
        std::string name;
        // Present for sublattices: ambient lattice and basis columns in ambient coordinates.
        std::shared_ptr<const Data> ambient;
        IntMatrix embedding;
        // Basis of a maximal positive definite subspace, one vector per column.
        IntMatrix positive_frame;
        std::pair<int, int> signature;
        RatMatrix gram_inverse;
    };

    explicit Lattice(std::shared_ptr<const Data> d) : d_(std::move(d)) {}

public:
    Lattice() = delete;

    /// Validates symmetry, even diagonal and non-degeneracy.
    static Lattice from_gram(IntMatrix gram, std::vector<std::string> labels = {}, std::string name = {})
    {
        if (!gram.is_square())
            throw LatticeError("Gram matrix must be square");
        const std::size_t n = gram.rows();
        for (std::size_t i = 0; i < n; ++i) {
            if (!divides(Integer(2), gram(i, i)))
                throw LatticeError("Gram matrix has an odd diagonal entry; only even lattices are supported");
            for (std::size_t j = 0; j < i; ++j)
                if (gram(i, j) != gram(j, i))
                    throw LatticeError("Gram matrix is not symmetric");
        }
        Diagonalization dz = diagonalize(gram);
        std::pair<int, int> sig{0, 0};
        for (const auto& x : dz.diagonal) {
            if (x == 0)
                throw LatticeError("Gram matrix is degenerate");
            ++(x > 0 ? sig.first : sig.second);
        }
        if (!labels.empty() && labels.size() != n)
            throw LatticeError("label count does not match rank");
        auto d = std::make_shared<Data>();
        d->gram = std::move(gram);
        d->labels = std::move(labels);
        d->name = std::move(name);
        d->signature = sig;
        d->positive_frame = detail::positive_columns(dz);
        d->gram_inverse = inverse(d->gram);
        return Lattice(std::move(d));
    }

    /// Sublattice spanned by the columns of `embedding` (ambient coordinates).
    static Lattice sublattice(const Lattice& ambient, IntMatrix embedding, std::string name = {})
    {
        if (embedding.rows() != ambient.rank())
            throw LatticeError("embedding rows must equal ambient rank");
        IntMatrix gram = embedding.transpose() * ambient.gram() * embedding;
        Lattice base = from_gram(std::move(gram), {}, std::move(name));
        auto d = std::make_shared<Data>(*base.d_);
        d->ambient = ambient.d_;
        d->embedding = std::move(embedding);
        return Lattice(std::move(d));
    }

    Lattice with_positive_frame(IntMatrix frame) const
    {
        if (frame.rows() != rank() || frame.cols() != static_cast<std::size_t>(signature().first))
            throw LatticeError("positive frame has the wrong shape");
        if (signature_of(frame.transpose() * gram() * frame) != std::pair<int, int>{signature().first, 0})
            throw LatticeError("positive frame does not span a positive definite subspace");
        auto d = std::make_shared<Data>(*d_);
        d->positive_frame = std::move(frame);
        return Lattice(std::move(d));
    }

    std::size_t rank() const { return d_->gram.rows(); }
    const IntMatrix& gram() const { return d_->gram; }
    const std::vector<std::string>& labels() const { return d_->labels; }
    const std::string& name() const { return d_->name; }
    const IntMatrix& positive_frame() const { return d_->positive_frame; }
    std::pair<int, int> signature() const { return d_->signature; }
    const RatMatrix& gram_inverse() const { return d_->gram_inverse; }

    bool has_ambient() const { return static_cast<bool>(d_->ambient); }
    Lattice ambient() const
    {
        if (!d_->ambient)
            throw LatticeError("lattice has no ambient lattice");
        return Lattice(d_->ambient);
    }
    const IntMatrix& embedding() const { return d_->embedding; }

    Integer det() const { return determinant(d_->gram); }

    std::optional<std::size_t> index_of(const std::string& label) const
    {
        auto it = std::find(d_->labels.begin(), d_->labels.end(), label);
        if (it == d_->labels.end())
            return std::nullopt;
        return static_cast<std::size_t>(it - d_->labels.begin());
    }

    LatVector vector(IntVector coords) const;
    LatVector basis(std::size_t i) const;
    LatVector basis(const std::string& label) const;
    LatVector zero() const;

    /// Same object, or equal Gram matrices and embeddings.
    bool same_as(const Lattice& other) const
    {
        if (d_ == other.d_)
            return true;
        if (!(d_->gram == other.d_->gram))
            return false;
        if (has_ambient() != other.has_ambient())
            return false;
        if (!has_ambient())
            return true;
        return d_->embedding == other.d_->embedding && ambient().same_as(other.ambient());
    }

private:
    std::shared_ptr<const Data> d_;
};

/// Integer coordinate vector relative to a lattice basis.
class LatVector {
public:
    LatVector(Lattice lattice, IntVector coords) : lattice_(std::move(lattice)), coords_(std::move(coords))
    {
        if (coords_.size() != lattice_.rank())
            throw LatticeError("coordinate length does not match lattice rank");
    }

    const Lattice& lattice() const { return lattice_; }
    const IntVector& coords() const { return coords_; }
    const Integer& operator[](std::size_t i) const { return coords_[i]; }

    bool is_zero() const
    {
        return std::all_of(coords_.begin(), coords_.end(), [](const Integer& x) { return x == 0; });
    }

    friend bool operator==(const LatVector& a, const LatVector& b) { return a.coords_ == b.coords_; }

    friend LatVector operator+(const LatVector& a, const LatVector& b)
    {
        a.check_same(b);
        IntVector c = a.coords_;
        for (std::size_t i = 0; i < c.size(); ++i)
            c[i] += b.coords_[i];
        return {a.lattice_, std::move(c)};
    }

    friend LatVector operator-(const LatVector& a, const LatVector& b)
    {
        a.check_same(b);
        IntVector c = a.coords_;
        for (std::size_t i = 0; i < c.size(); ++i)
            c[i] -= b.coords_[i];
        return {a.lattice_, std::move(c)};
    }

    LatVector operator-() const
    {
        IntVector c = coords_;
        for (auto& x : c)
            x = -x;
        return {lattice_, std::move(c)};
    }

    friend LatVector operator*(const Integer& s, const LatVector& a)
    {
        IntVector c = a.coords_;
        for (auto& x : c)
            x *= s;
        return {a.lattice_, std::move(c)};
    }

    friend LatVector operator*(long s, const LatVector& a) { return Integer(s) * a; }

    void check_same(const LatVector& other) const
    {
        if (!lattice_.same_as(other.lattice_))
            throw LatticeError("vectors belong to different lattices");
    }

private:
    Lattice lattice_;
    IntVector coords_;
};

inline LatVector Lattice::vector(IntVector coords) const { return {*this, std::move(coords)}; }

inline LatVector Lattice::zero() const { return {*this, IntVector(rank(), Integer(0))}; }

inline LatVector Lattice::basis(std::size_t i) const
{
    if (i >= rank())
        throw LatticeError("basis index out of range");
    IntVector c(rank(), Integer(0));
    c[i] = 1;
    return {*this, std::move(c)};
}

inline LatVector Lattice::basis(const std::string& label) const
{
    auto i = index_of(label);
    if (!i)
        throw LatticeError("unknown basis label '" + label + "'");
    return basis(*i);
}

/// Gram row times coordinates: the functional y -> (x, y) in coordinates.
inline IntVector pairing_row(const Lattice& l, const IntVector& x) { return l.gram() * x; }

inline Integer pair(const LatVector& x, const LatVector& y)
{
    x.check_same(y);
    return dot(pairing_row(x.lattice(), x.coords()), y.coords());
}

inline Integer square(const LatVector& x) { return pair(x, x); }

/// gcd of (x, y) over all y in the lattice.
inline Integer divisibility(const LatVector& x)
{
    if (x.is_zero())
        throw LatticeError("divisibility of the zero vector is undefined");
    return gcd_of(pairing_row(x.lattice(), x.coords()));
}

/// gcd of the coordinates; 1 for primitive vectors.
inline Integer content(const LatVector& x) { return gcd_of(x.coords()); }

// ---------------------------------------------------------------------------
// Catalogue

inline IntMatrix block_diagonal(const IntMatrix& a, const IntMatrix& b)
{
    IntMatrix m(a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            m(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j)
            m(a.rows() + i, a.cols() + j) = b(i, j);
    return m;
}

inline Lattice direct_sum(const Lattice& a, const Lattice& b)
{
    std::vector<std::string> labels;
    if (!a.labels().empty() || !b.labels().empty()) {
        auto fill = [&](const Lattice& l, const std::string& prefix) {
            for (std::size_t i = 0; i < l.rank(); ++i)
                labels.push_back(l.labels().empty() ? prefix + std::to_string(i) : l.labels()[i]);
        };
        fill(a, "a");
        fill(b, "b");
    }
    std::string name = a.name().empty() || b.name().empty() ? std::string{} : a.name() + "+" + b.name();
    return Lattice::from_gram(block_diagonal(a.gram(), b.gram()), std::move(labels), std::move(name));
}

namespace detail {

inline IntMatrix e8_negative_gram()
{
    // Bourbaki numbering: chain 1-3-4-5-6-7-8 with node 2 attached to 4.
    IntMatrix g(8, 8);
    for (std::size_t i = 0; i < 8; ++i)
        g(i, i) = -2;
    const std::pair<int, int> edges[] = {{1, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {2, 4}};
    for (auto [a, b] : edges) {
        g(a - 1, b - 1) = 1;
        g(b - 1, a - 1) = 1;
    }
    return g;
}

inline Lattice relabel(const Lattice& l, std::vector<std::string> labels, std::string name)
{
    return Lattice::from_gram(l.gram(), std::move(labels), std::move(name));
}

} // namespace detail

inline const std::vector<std::string>& standard_lattice_names()
{
    static const std::vector<std::string> names = {"U", "E8neg", "A2neg", "G2neg", "OG10", "MukaiAlg2"};
    return names;
}

/// OG10 basis order: U1(e1,f1), U2(e2,f2), U3(e3,f3), two E8(-1), then (Btilde, Sigmatilde).
inline Lattice standard_lattice(const std::string& name)
{
    if (name == "U")
        return Lattice::from_gram(IntMatrix{{0, 1}, {1, 0}}, {"e", "f"}, "U");
    if (name == "E8neg") {
        std::vector<std::string> labels;
        for (int i = 1; i <= 8; ++i)
            labels.push_back("r" + std::to_string(i));
        return Lattice::from_gram(detail::e8_negative_gram(), std::move(labels), "E8neg");
    }
    if (name == "A2neg")
        return Lattice::from_gram(IntMatrix{{-2, 1}, {1, -2}}, {"a1", "a2"}, "A2neg");
    if (name == "G2neg")
        return Lattice::from_gram(IntMatrix{{-2, 3}, {3, -6}}, {"Btilde", "Sigmatilde"}, "G2neg");
    if (name == "MukaiAlg2")
        // (r, m, s) <-> r*(1,0,0) + m*(0,H,0) + s*(0,0,1) with H^2 = 2.
        return Lattice::from_gram(IntMatrix{{0, 0, -1}, {0, 2, 0}, {-1, 0, 0}}, {"r", "H", "s"}, "MukaiAlg2");
    if (name == "OG10") {
        Lattice u = standard_lattice("U");
        Lattice e8 = standard_lattice("E8neg");
        Lattice sum = direct_sum(direct_sum(direct_sum(u, u), u), direct_sum(e8, e8));
        sum = direct_sum(sum, standard_lattice("G2neg"));
        std::vector<std::string> labels = {"e1", "f1", "e2", "f2", "e3", "f3"};
        for (const char* block : {"E8a_", "E8b_"})
            for (int i = 1; i <= 8; ++i)
                labels.push_back(block + std::to_string(i));
        labels.push_back("Btilde");
        labels.push_back("Sigmatilde");
        IntMatrix frame(24, 3);
        for (std::size_t i = 0; i < 3; ++i) {
            frame(2 * i, i) = 1;
            frame(2 * i + 1, i) = 1;
        }
        return detail::relabel(sum, std::move(labels), "OG10").with_positive_frame(std::move(frame));
    }
    throw LatticeError("unknown standard lattice '" + name + "'");
}

/// (positive, negative) index of inertia.
inline std::pair<int, int> signature(const Lattice& l) { return l.signature(); }

// ---------------------------------------------------------------------------
// Sublattices

/// Saturated orthogonal complement of the span of `gens`, with its embedding.
inline Lattice orthogonal_complement(const Lattice& l, const std::vector<LatVector>& gens, std::string name = {})
{
    if (gens.empty())
        throw LatticeError("orthogonal_complement needs at least one generator");
    IntMatrix span = IntMatrix::from_columns([&] {
        std::vector<IntVector> cols;
        for (const auto& g : gens) {
            if (!g.lattice().same_as(l))
                throw LatticeError("generator belongs to a different lattice");
            cols.push_back(g.coords());
        }
        return cols;
    }(), l.rank());
    if (rank(span) != gens.size())
        throw LatticeError("orthogonal_complement: generators are linearly dependent");
    IntMatrix conditions = span.transpose() * l.gram();
    std::vector<IntVector> kernel = kernel_basis(conditions);
    return Lattice::sublattice(l, IntMatrix::from_columns(kernel, l.rank()), std::move(name));
}

/// Image of a sublattice vector in ambient coordinates.
inline LatVector embed(const LatVector& x)
{
    const Lattice& sub = x.lattice();
    return sub.ambient().vector(sub.embedding() * x.coords());
}

/// Coordinates of an ambient vector in the sublattice basis, when it lies there.
inline std::optional<LatVector> restrict_to(const Lattice& sub, const LatVector& x)
{
    auto c = solve_integral(sub.embedding(), x.coords());
    if (!c)
        return std::nullopt;
    return sub.vector(std::move(*c));
}

} // namespace ogmon
