#pragma once
/**
 * Weighted Minkowski sum of the coordinate simplices Delta[i..j] in
 * Q^(n+1), 1 <= i <= j <= n+1, and the map from linear functionals to
 * polygon subdivisions that describes its face lattice.
 */

#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "assoc/analysis.hpp"
#include "assoc/exactlin.hpp"
#include "assoc/polygon.hpp"
#include "assoc/polytope.hpp"

namespace assoc {

/// Positive weights a_ij keyed by (i, j), 1 <= i <= j <= n+1.
struct SimplexWeights {
    int n = 0;
    std::map<std::pair<int, int>, Rational> a;

    /// Throws std::invalid_argument on a missing, extra or non-positive weight.
    void validate() const;
    Rational total() const;
};

/// a_ij = 1 for all i <= j.
SimplexWeights uniform_weights(int n);
/// Positive rationals in (0, 3] with denominators at most 1000.
SimplexWeights random_weights(int n, std::mt19937_64& rng);

/// Common refinement of the subdivisions cut out by the sub-polygons
/// H_k = conv{ i : w_i >= w_k }, with w_0 = w_{n+2} = +infinity.
/// `w` holds w_1..w_{n+1}.
Subdivision subdivision_from_functional(const RationalVector& w, int n);

/// Index k in [i..j] maximizing w_k (1-based). Throws std::invalid_argument on a tie.
int summand_max_vertex(const RationalVector& w, int i, int j);

LabeledPolytope build_minkowski(const SimplexWeights& a);

struct CorrespondenceReport {
    bool ok = false;
    std::size_t vertices = 0;
    std::size_t edges = 0;
    std::size_t facets = 0;
    std::vector<std::string> failures;
};

/// Checks the face correspondence: vertex labels biject with triangulations,
/// edges with flips, facets with diagonals, and every certifying functional
/// maps back to the expected subdivision.
CorrespondenceReport verify_correspondence(const LabeledPolytope& p);

/// The facet of a diagonal is parallel to the Minkowski sum of two
/// complementary coordinate simplices; this names them.
struct ParallelDirection {
    int diagonal_class = 0;  // 1: {n+2, i}; 2: {0, i+1}; 3: {i, j} with 1 <= i, j <= n+1
    int i = 0;
    int j = 0;               // class 3 only
    std::vector<int> first_block;   // coordinate indices, 1-based
    std::vector<int> second_block;
};

ParallelDirection expected_parallel_direction(const Diagonal& d, int n);

/// Span of the edge directions of the two blocks' simplices in Q^(n+1).
Subspace direction_subspace(const ParallelDirection& dir, int n);

}  // namespace assoc
