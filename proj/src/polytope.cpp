#include "assoc/polytope.hpp"

#include <algorithm>
#include <stdexcept>

namespace assoc {

std::string to_string(Construction c) {
    switch (c) {
        case Construction::secondary: return "secondary";
        case Construction::cluster: return "cluster";
        case Construction::minkowski: return "minkowski";
    }
    return "unknown";
}

Construction parse_construction(std::string_view name) {
    if (name == "secondary") return Construction::secondary;
    if (name == "cluster") return Construction::cluster;
    if (name == "minkowski") return Construction::minkowski;
    throw std::invalid_argument("unknown construction '" + std::string(name) + "'");
}

LabeledPolytope::LabeledPolytope(Construction tag, int n, std::vector<LabeledVertex> vertices)
    : tag_(tag), n_(n), vertices_(std::move(vertices)) {
    if (n < 0) throw std::invalid_argument("polytope dimension n must be nonnegative");
    if (vertices_.empty()) throw std::invalid_argument("polytope without vertices");
    ambient_dim_ = vertices_.front().coords.dim();

    std::sort(vertices_.begin(), vertices_.end(),
              [](const LabeledVertex& x, const LabeledVertex& y) { return x.label < y.label; });

    std::vector<Triangulation> labels;
    labels.reserve(vertices_.size());
    for (const auto& v : vertices_) {
        if (v.coords.dim() != ambient_dim_) throw std::invalid_argument("vertex coordinates of mixed dimension");
        if (v.label.n() != n) throw std::invalid_argument("vertex label for a different polygon size");
        labels.push_back(v.label);
    }
    if (labels != all_triangulations(n)) {
        throw std::invalid_argument("vertex labels are not exactly the triangulations of the " +
                                    std::to_string(n + 3) + "-gon");
    }

    std::vector<RationalVector> coords = coordinates();
    std::sort(coords.begin(), coords.end());
    if (std::adjacent_find(coords.begin(), coords.end()) != coords.end()) {
        throw std::invalid_argument("two vertices share coordinates");
    }

    hull_ = subspace_from_differences(coordinates());
    if (hull_.dim() != static_cast<std::size_t>(n)) {
        throw std::invalid_argument("affine hull has dimension " + std::to_string(hull_.dim()) + ", expected " +
                                    std::to_string(n));
    }
}

std::vector<RationalVector> LabeledPolytope::coordinates() const {
    std::vector<RationalVector> out;
    out.reserve(vertices_.size());
    for (const auto& v : vertices_) out.push_back(v.coords);
    return out;
}

std::optional<std::size_t> LabeledPolytope::index_of(const Triangulation& label) const {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), label,
                               [](const LabeledVertex& v, const Triangulation& t) { return v.label < t; });
    if (it == vertices_.end() || it->label != label) return std::nullopt;
    return static_cast<std::size_t>(it - vertices_.begin());
}

LabeledPolytope transform(const LabeledPolytope& p, const AffineMap& map) {
    std::vector<LabeledVertex> out;
    out.reserve(p.size());
    for (const auto& v : p.vertices()) out.push_back({map(v.coords), v.label});
    return LabeledPolytope(p.construction(), p.n(), std::move(out));
}

std::size_t catalan(int k) {
    // C_k = prod_{i=2..k} (k+i)/i, exact at every step.
    Rational c = 1;
    for (int i = 2; i <= k; ++i) c *= Rational(k + i, i);
    return numerator(c).convert_to<std::size_t>();
}

}  // namespace assoc
