#pragma once
/**
 * Cluster-fan realization of type A_n.
 *
 * Almost positive roots live in the sum-zero hyperplane of Q^(n+1). Each
 * root is identified with a diagonal of the (n+3)-gon through a fixed
 * zigzag ("snake") triangulation: -alpha_i is the i-th snake diagonal and
 * alpha_i + ... + alpha_j is the unique diagonal crossing exactly snake
 * diagonals i..j. Clusters are maximal sets of pairwise compatible roots.
 *
 * A polytope with this normal fan is produced from support values h: the
 * vertex of cluster C solves <rho, x> = h(rho) for rho in C. The choice of h
 * is certified by strict convexity across every wall of the fan.
 */

#include <compare>
#include <cstddef>
#include <map>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "assoc/exactlin.hpp"
#include "assoc/polygon.hpp"
#include "assoc/polytope.hpp"

namespace assoc {

struct AlmostPositiveRoot {
    enum class Kind { negative_simple, positive };

    Kind kind = Kind::positive;
    int i = 1;
    int j = 1;  // equals i for negative simples

    static AlmostPositiveRoot negative(int i) { return {Kind::negative_simple, i, i}; }
    static AlmostPositiveRoot positive(int i, int j) { return {Kind::positive, i, j}; }
    static AlmostPositiveRoot simple(int i) { return positive(i, i); }

    bool is_negative() const { return kind == Kind::negative_simple; }

    friend auto operator<=>(const AlmostPositiveRoot&, const AlmostPositiveRoot&) = default;
};

/// "-ai", "ai" or "ai..j".
std::string to_string(const AlmostPositiveRoot& r);
/// Inverse of to_string, validated against n. Throws std::invalid_argument.
AlmostPositiveRoot parse_root(std::string_view key, int n);

/// Negative simples -a1..-an, then positive roots (i, j) lexicographically.
std::vector<AlmostPositiveRoot> almost_positive_roots(int n);

RationalVector root_coordinates(const AlmostPositiveRoot& r, int n);

/// {ceil(i/2), n+2-floor(i/2)} for 1 <= i <= n.
Diagonal snake_diagonal(int i, int n);

/// Throws std::logic_error if the snake search is not unique.
Diagonal root_to_diagonal(const AlmostPositiveRoot& r, int n);
AlmostPositiveRoot diagonal_to_root(const Diagonal& d, int n);

bool compatible(const AlmostPositiveRoot& r1, const AlmostPositiveRoot& r2, int n);

/// n pairwise compatible roots, sorted.
struct Cluster {
    std::vector<AlmostPositiveRoot> roots;

    friend auto operator<=>(const Cluster&, const Cluster&) = default;
};

/// Maximal cliques of the compatibility graph, found by search over the roots.
std::vector<Cluster> all_clusters(int n);

Triangulation cluster_to_triangulation(const Cluster& c, int n);

struct FanReport {
    bool ok = false;
    std::size_t cones = 0;
    std::size_t walls = 0;
    std::size_t samples = 0;
    std::size_t generic_samples = 0;
    std::vector<std::string> failures;
};

/// Independence of each cluster, two cones on every wall, and coverage of
/// a fixed battery of at least 1000 rational directions.
FanReport verify_fan(int n);

/// lambda * beta + lambda' * beta' = sum_gamma c_gamma * gamma with lambda = 1.
struct WallRelation {
    AlmostPositiveRoot beta;
    AlmostPositiveRoot beta_prime;
    Rational lambda;
    Rational lambda_prime;
    std::map<AlmostPositiveRoot, Rational> coefficients;
};

/// Throws std::invalid_argument unless c1 and c2 differ in exactly one root.
WallRelation wall_relation(const Cluster& c1, const Cluster& c2, int n);

/// Adjacent cluster pairs (i < j) as indices into all_clusters(n).
std::vector<std::pair<std::size_t, std::size_t>> cluster_walls(const std::vector<Cluster>& clusters);

using SupportValues = std::map<AlmostPositiveRoot, Rational>;

struct WallViolation {
    Cluster first;
    Cluster second;
    Rational lhs;  // lambda h(beta) + lambda' h(beta')
    Rational rhs;  // sum c_gamma h(gamma)
};

struct PolytopalityResult {
    bool ok = false;
    std::vector<WallViolation> violations;

    explicit operator bool() const { return ok; }
};

/// Strict inequality lhs > rhs on every wall. h must cover every root.
PolytopalityResult polytopality_check(const SupportValues& h, int n);

/// h = 1 everywhere.
SupportValues constant_support_values(int n, const Rational& value = 1);

/// h = 1 if that is polytopal, otherwise repaired wall by wall: the most
/// violated wall's exchanged roots are raised by (violation + 1). Throws
/// std::runtime_error after 10 * walls rounds.
SupportValues default_support_values(int n);

/// A valid h near `base` with rational jitter of denominator at most 1000.
SupportValues perturbed_support_values(const SupportValues& base, int n, std::mt19937_64& rng);

/// Throws std::invalid_argument if h fails polytopality_check, and
/// std::logic_error if a vertex violates a non-tight inequality.
LabeledPolytope build_cluster_polytope(const SupportValues& h, int n);

}  // namespace assoc
