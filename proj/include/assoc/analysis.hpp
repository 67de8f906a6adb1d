#pragma once
/**
 * Construction-agnostic geometry of labeled associahedra.
 *
 * Facets are located through the diagonal labels (the facet of diagonal d
 * holds exactly the vertices whose triangulation contains d) and each one is
 * then certified geometrically: a supporting hyperplane inside the affine
 * hull, every other vertex strictly on one side, affine dimension n-1.
 * Nothing here runs a convex-hull algorithm.
 */

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "assoc/exactlin.hpp"
#include "assoc/polygon.hpp"
#include "assoc/polytope.hpp"

namespace assoc {

/// A geometric certificate failed; the construction that produced the
/// polytope is broken.
class CertificationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct FacetDescriptor {
    Diagonal diagonal;
    std::vector<std::size_t> vertex_indices;
    Hyperplane hyperplane;
    /// +/- hyperplane.normal, oriented so the polytope lies in <outward, x> <= offset'.
    RationalVector outward_normal;
    /// Span of differences of the facet's vertices.
    Subspace direction{0};
};

/// One certified descriptor per diagonal, in all_diagonals order.
/// Throws CertificationError naming the diagonal when a certificate fails.
std::vector<FacetDescriptor> extract_facets(const LabeledPolytope& p);

using DiagonalPair = std::pair<Diagonal, Diagonal>;

/// Unordered pairs of distinct facets with equal direction subspaces.
std::vector<DiagonalPair> parallel_pairs(const std::vector<FacetDescriptor>& facets);
std::vector<DiagonalPair> parallel_pairs(const LabeledPolytope& p);

/// Facets share a vertex. Cross-checked against the diagonals not crossing;
/// disagreement throws std::logic_error.
bool facets_intersect(const FacetDescriptor& f1, const FacetDescriptor& f2);

/// For every facet that belongs to a parallel pair, the number of other such
/// facets it intersects.
std::map<Diagonal, std::size_t> special_profile(const std::vector<FacetDescriptor>& facets);

/// Incidence structure derived from certified facets.
struct FaceStructure {
    std::vector<std::vector<std::size_t>> facets_at_vertex;  // indices into the facet list
    std::vector<std::pair<std::size_t, std::size_t>> edges;  // vertex index pairs, i < j
    /// Every vertex lies on exactly n facets with independent normals.
    bool simple = false;
    /// Every vertex is the unique maximizer of the sum of its facets' outward normals.
    bool vertices_certified = false;
    /// Each vertex has, for each of its facets, a neighbour sharing the other n-1.
    /// Together with simplicity this shows the facet list is the whole boundary.
    bool facets_complete = false;
    std::vector<std::string> problems;
};

FaceStructure face_structure(const LabeledPolytope& p, const std::vector<FacetDescriptor>& facets);

/// Relabeling of the polygon vertices 0..n+2 by a dihedral symmetry.
struct LabelMap {
    int n = 0;
    std::vector<int> image;
    std::string name;

    Diagonal operator()(const Diagonal& d) const;
    Triangulation operator()(const Triangulation& t) const;
    LabelMap then(const LabelMap& next) const;

    friend bool operator==(const LabelMap& a, const LabelMap& b) { return a.n == b.n && a.image == b.image; }
};

/// Rotations i -> i+k and reflections i -> k-i (mod n+3); the identity first.
std::vector<LabelMap> dihedral_relabelings(int n);

/// The affine map sending each src vertex to the dst vertex whose label is
/// the relabeled src label, if one exists. The map is fitted on n+1 affinely
/// independent src vertices and accepted only if it is exact on every
/// vertex and injective on the affine hull.
std::optional<AffineMap> fit_affine_map(const LabeledPolytope& src, const LabeledPolytope& dst,
                                        const LabelMap& relabel);

struct Obstruction {
    std::string name;
    std::string detail;
    /// The invariant differs between the two polytopes, so no affine map can
    /// carry one onto the other.
    bool fires = false;
};

enum class Verdict { non_equivalent, equivalent, inconclusive };

std::string to_string(Verdict v);

struct EquivalenceReport {
    Construction first;
    Construction second;
    int n = 0;
    std::vector<Obstruction> obstructions;
    std::size_t relabelings_tried = 0;
    std::optional<AffineMap> witness;
    std::string witness_relabeling;
    Verdict verdict = Verdict::inconclusive;
    std::vector<std::string> notes;

    bool any_obstruction() const;
};

/// Label-free obstructions first, then an exhaustive fit over the dihedral
/// relabelings. Throws std::invalid_argument when the dimensions differ.
EquivalenceReport equivalence_search(const LabeledPolytope& p, const LabeledPolytope& q);

}  // namespace assoc
