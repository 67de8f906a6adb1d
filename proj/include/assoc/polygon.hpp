#pragma once
/**
 * Combinatorics of the convex (n+3)-gon with vertex labels 0..n+2 in
 * counterclockwise order: diagonals, crossings, triangulations, flips and
 * the poset of subdivisions ordered by refinement.
 *
 * Every enumeration here is deterministic and lexicographic.
 */

#include <array>
#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace assoc {

/// Chord {a, b} with a < b between non-adjacent polygon vertices.
struct Diagonal {
    int a = 0;
    int b = 0;

    friend auto operator<=>(const Diagonal&, const Diagonal&) = default;
};

/// Validates and orders the endpoints; throws std::invalid_argument if
/// {x, y} is not a diagonal of the (n+3)-gon.
Diagonal make_diagonal(int n, int x, int y);
bool is_diagonal(int n, int x, int y);

std::string to_string(const Diagonal& d);

/// Endpoints strictly interleave around the cycle. Shared endpoints do not cross.
bool crossing(const Diagonal& d1, const Diagonal& d2);

/// A set of pairwise non-crossing diagonals, kept sorted.
class Subdivision {
public:
    Subdivision() = default;
    /// Throws std::invalid_argument on a crossing pair or a repeated diagonal.
    Subdivision(int n, std::vector<Diagonal> diagonals);

    int n() const { return n_; }
    const std::vector<Diagonal>& diagonals() const { return diagonals_; }
    std::size_t size() const { return diagonals_.size(); }
    bool contains(const Diagonal& d) const;
    bool is_triangulation() const { return static_cast<int>(diagonals_.size()) == n_; }

    friend auto operator<=>(const Subdivision&, const Subdivision&) = default;

protected:
    int n_ = 0;
    std::vector<Diagonal> diagonals_;
};

/// A subdivision with exactly n diagonals.
class Triangulation : public Subdivision {
public:
    Triangulation() = default;
    Triangulation(int n, std::vector<Diagonal> diagonals);

    /// Triangles as sorted label triples, derived from the diagonal set.
    std::vector<std::array<int, 3>> triangles() const;

    friend auto operator<=>(const Triangulation&, const Triangulation&) = default;
};

std::string to_string(const Subdivision& s);

std::vector<Diagonal> all_diagonals(int n);
std::vector<Triangulation> all_triangulations(int n);
std::vector<Subdivision> all_subdivisions(int n);

/// counts[k] = number of subdivisions with k diagonals, k = 0..n.
std::vector<std::size_t> subdivision_counts_by_size(int n);

/// Replaces d by the other diagonal of the quadrilateral formed by its two
/// adjacent triangles. Throws std::invalid_argument if d is not in t.
Triangulation flip(const Triangulation& t, const Diagonal& d);

/// s1 is finer than (or equal to) s2.
bool refines(const Subdivision& s1, const Subdivision& s2);

/// Triangulations differing in exactly one diagonal.
bool differ_by_flip(const Subdivision& t1, const Subdivision& t2);

/// Diagonals common to both.
Subdivision common_diagonals(const Subdivision& s1, const Subdivision& s2);

}  // namespace assoc
