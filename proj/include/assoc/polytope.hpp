#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "assoc/exactlin.hpp"
#include "assoc/polygon.hpp"

namespace assoc {

enum class Construction { secondary, cluster, minkowski };

std::string to_string(Construction c);
/// Throws std::invalid_argument for unknown names.
Construction parse_construction(std::string_view name);

struct LabeledVertex {
    RationalVector coords;
    Triangulation label;

    friend bool operator==(const LabeledVertex&, const LabeledVertex&) = default;
};

/**
 * A realization of the n-dimensional associahedron given by its vertices,
 * each tagged with the triangulation it corresponds to. Vertices are kept
 * in the order of all_triangulations(n).
 */
class LabeledPolytope {
public:
    /// Sorts the vertices by label and checks every invariant: labels are
    /// exactly the triangulations of the (n+3)-gon, coordinates are distinct
    /// and share one dimension, and the affine hull has dimension n.
    /// Throws std::invalid_argument on violation.
    LabeledPolytope(Construction tag, int n, std::vector<LabeledVertex> vertices);

    Construction construction() const { return tag_; }
    int n() const { return n_; }
    std::size_t ambient_dim() const { return ambient_dim_; }
    std::size_t size() const { return vertices_.size(); }
    const std::vector<LabeledVertex>& vertices() const { return vertices_; }
    const LabeledVertex& vertex(std::size_t i) const { return vertices_[i]; }

    std::vector<RationalVector> coordinates() const;
    std::optional<std::size_t> index_of(const Triangulation& label) const;

    /// Direction space of the affine hull.
    const Subspace& hull_direction() const { return hull_; }

    friend bool operator==(const LabeledPolytope& a, const LabeledPolytope& b) {
        return a.tag_ == b.tag_ && a.n_ == b.n_ && a.vertices_ == b.vertices_;
    }

private:
    Construction tag_;
    int n_;
    std::size_t ambient_dim_ = 0;
    std::vector<LabeledVertex> vertices_;
    Subspace hull_{0};
};

/// Image of every vertex under `map`, labels unchanged.
LabeledPolytope transform(const LabeledPolytope& p, const AffineMap& map);

/// Catalan number C_k by the product formula.
std::size_t catalan(int k);

}  // namespace assoc
