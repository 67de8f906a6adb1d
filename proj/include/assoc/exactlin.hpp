#pragma once
/**
 * Exact rational linear algebra.
 *
 * Everything here is computed over the rationals with GMP-backed scalars;
 * there is no floating-point path. Subspaces and hyperplanes are kept in a
 * canonical form so that equality tests are plain structural comparisons.
 */

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace assoc {

using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);

/// Parses "p", "p/q" or "-p/q". Throws std::invalid_argument on malformed
/// input or a zero denominator.
Rational parse_rational(std::string_view text);

class RationalVector {
public:
    RationalVector() = default;
    explicit RationalVector(std::size_t dim) : entries_(dim) {}
    explicit RationalVector(std::vector<Rational> entries) : entries_(std::move(entries)) {}
    RationalVector(std::initializer_list<Rational> entries) : entries_(entries) {}

    static RationalVector from_ints(std::initializer_list<long> values);
    static RationalVector unit(std::size_t dim, std::size_t i);

    std::size_t dim() const { return entries_.size(); }
    const Rational& operator[](std::size_t i) const { return entries_[i]; }
    Rational& operator[](std::size_t i) { return entries_[i]; }
    const std::vector<Rational>& entries() const { return entries_; }

    auto begin() const { return entries_.begin(); }
    auto end() const { return entries_.end(); }

    bool is_zero() const;
    Rational sum() const;

    RationalVector& operator+=(const RationalVector& other);
    RationalVector& operator-=(const RationalVector& other);
    RationalVector& operator*=(const Rational& s);

    friend bool operator==(const RationalVector&, const RationalVector&) = default;
    friend auto operator<=>(const RationalVector& a, const RationalVector& b) {
        return a.entries_ <=> b.entries_;
    }

private:
    std::vector<Rational> entries_;
};

RationalVector operator+(RationalVector a, const RationalVector& b);
RationalVector operator-(RationalVector a, const RationalVector& b);
RationalVector operator-(RationalVector a);
RationalVector operator*(const Rational& s, RationalVector v);
Rational dot(const RationalVector& a, const RationalVector& b);

std::string to_string(const RationalVector& v);

class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols);
    /// Rows must share one dimension; throws std::invalid_argument otherwise.
    explicit RationalMatrix(std::vector<RationalVector> rows);

    static RationalMatrix identity(std::size_t dim);
    /// Matrix whose columns are the given vectors.
    static RationalMatrix from_columns(const std::vector<RationalVector>& columns);

    std::size_t rows() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_.empty() || cols_ == 0; }

    const RationalVector& row(std::size_t i) const { return rows_[i]; }
    RationalVector& row(std::size_t i) { return rows_[i]; }
    const std::vector<RationalVector>& row_vectors() const { return rows_; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return rows_[i][j]; }
    Rational& operator()(std::size_t i, std::size_t j) { return rows_[i][j]; }

    RationalVector column(std::size_t j) const;
    RationalMatrix transpose() const;

    friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

private:
    std::vector<RationalVector> rows_;
    std::size_t cols_ = 0;
};

RationalVector operator*(const RationalMatrix& m, const RationalVector& v);
RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);

/// Reduced row echelon form together with its pivot columns.
struct EchelonForm {
    RationalMatrix matrix;
    std::vector<std::size_t> pivots;
};

EchelonForm reduced_row_echelon(RationalMatrix m);

std::size_t rank(const RationalMatrix& m);

/// Basis of { x : m x = 0 }, one vector per free column, in column order.
std::vector<RationalVector> nullspace(const RationalMatrix& m);

/// Inverse of a square matrix, or nullopt when it is singular.
std::optional<RationalMatrix> inverse(const RationalMatrix& m);

enum class SolveStatus { unique, inconsistent, underdetermined };

struct LinearSolution {
    SolveStatus status = SolveStatus::inconsistent;
    /// Set only for SolveStatus::unique.
    std::optional<RationalVector> x;
};

LinearSolution solve_linear(const RationalMatrix& a, const RationalVector& b);

/**
 * A linear subspace of Q^d, stored by the nonzero rows of the reduced row
 * echelon form of any spanning set. Two subspaces are equal iff their
 * stored bases are identical.
 */
class Subspace {
public:
    explicit Subspace(std::size_t ambient_dim) : ambient_dim_(ambient_dim) {}

    static Subspace span(std::size_t ambient_dim, const std::vector<RationalVector>& vectors);
    static Subspace full(std::size_t ambient_dim);

    std::size_t ambient_dim() const { return ambient_dim_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<RationalVector>& basis() const { return basis_; }

    bool contains(const RationalVector& v) const;
    Subspace sum(const Subspace& other) const;
    /// Re-derives the canonical basis from the stored one; a no-op on valid values.
    Subspace canonical() const { return span(ambient_dim_, basis_); }

    friend bool operator==(const Subspace&, const Subspace&) = default;

private:
    std::size_t ambient_dim_;
    std::vector<RationalVector> basis_;
};

/// Span of { p_i - p_0 }. All points equal gives the zero subspace.
Subspace subspace_from_differences(const std::vector<RationalVector>& points);

/// Points x with <normal, x> = offset, scaled so the first nonzero entry of
/// the normal is +1.
struct Hyperplane {
    RationalVector normal;
    Rational offset;

    static Hyperplane make(RationalVector normal, Rational offset);
    Rational evaluate(const RationalVector& x) const { return dot(normal, x) - offset; }

    friend bool operator==(const Hyperplane&, const Hyperplane&) = default;
};

/// The hyperplane, relative to the linear space `ambient`, through the
/// given points. Returns nullopt unless the points' affine span has
/// codimension exactly one in the flat they lie in. The normal is taken
/// inside `ambient`.
std::optional<Hyperplane> hyperplane_through(const std::vector<RationalVector>& points,
                                             const Subspace& ambient);

struct AffineMap {
    RationalMatrix matrix;
    RationalVector translation;

    static AffineMap identity(std::size_t dim);
    RationalVector operator()(const RationalVector& x) const { return matrix * x + translation; }
};

}  // namespace assoc
