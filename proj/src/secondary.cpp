#include "assoc/secondary.hpp"

#include <algorithm>
#include <stdexcept>

namespace assoc {

Rational orientation(const Point2& p, const Point2& q, const Point2& r) {
    return (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
}

Rational triangle_area(const Point2& p, const Point2& q, const Point2& r) {
    Rational twice = orientation(p, q, r);
    if (twice < 0) twice = -twice;
    return twice / 2;
}

Rational polygon_area(const PolygonGeometry& g) {
    Rational twice = 0;
    const std::size_t m = g.coords.size();
    for (std::size_t i = 0; i < m; ++i) {
        const auto& p = g.coords[i];
        const auto& q = g.coords[(i + 1) % m];
        twice += p.x * q.y - q.x * p.y;
    }
    return twice / 2;
}

GeometryCheck validate_geometry(const PolygonGeometry& g) {
    const std::size_t m = g.coords.size();
    if (g.n < 0) return {false, "n must be nonnegative"};
    if (m != static_cast<std::size_t>(g.n) + 3) {
        return {false, "expected " + std::to_string(g.n + 3) + " points, got " + std::to_string(m)};
    }
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            if (g.coords[i] == g.coords[j]) {
                return {false, "duplicate points at labels " + std::to_string(i) + " and " + std::to_string(j)};
            }
    for (std::size_t i = 0; i < m; ++i) {
        const std::size_t next = (i + 1) % m;
        for (std::size_t k = 0; k < m; ++k) {
            if (k == i || k == next) continue;
            if (orientation(g.coords[i], g.coords[next], g.coords[k]) <= 0) {
                return {false, "label " + std::to_string(k) + " is not strictly left of edge " + std::to_string(i) +
                                   "->" + std::to_string(next) + " (not strictly convex counterclockwise)"};
            }
        }
    }
    return {true, {}};
}

PolygonGeometry parabola_geometry(int n) {
    PolygonGeometry g{n, {}};
    for (int k = 1; k <= n + 3; ++k) g.coords.push_back({Rational(k), Rational(k * k)});
    return g;
}

namespace {

Rational round_to_denominator(const Rational& v, long den) {
    const Rational scaled = v * den + Rational(1, 2);
    Integer q = numerator(scaled) / denominator(scaled);
    if (q * denominator(scaled) > numerator(scaled)) q -= 1;  // floor for negatives
    return Rational(q, den);
}

}  // namespace

PolygonGeometry random_convex_geometry(int n, std::mt19937_64& rng) {
    const int m = n + 3;
    std::uniform_int_distribution<long> den_dist(1, 1000);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        std::vector<Rational> params;
        for (int k = 0; k < m; ++k) {
            const long q = den_dist(rng);
            std::uniform_int_distribution<long> num_dist(-5 * q, 5 * q);
            params.emplace_back(num_dist(rng), q);
        }
        std::sort(params.begin(), params.end());
        if (std::adjacent_find(params.begin(), params.end()) != params.end()) continue;

        // t -> ((1-t^2)/(1+t^2), 2t/(1+t^2)) runs counterclockwise around the circle as t grows.
        PolygonGeometry g{n, {}};
        for (const auto& t : params) {
            const Rational s = 1 + t * t;
            g.coords.push_back({round_to_denominator(10 * (1 - t * t) / s, 1000),
                                round_to_denominator(20 * t / s, 1000)});
        }
        if (validate_geometry(g)) return g;
    }
    throw std::runtime_error("random_convex_geometry: no convex sample found");
}

RationalVector gkz_vector(const PolygonGeometry& g, const Triangulation& t) {
    RationalVector v(g.coords.size());
    for (const auto& tri : t.triangles()) {
        const Rational area = triangle_area(g.coords[tri[0]], g.coords[tri[1]], g.coords[tri[2]]);
        for (int corner : tri) v[corner] += area;
    }
    return v;
}

LabeledPolytope build_secondary(const PolygonGeometry& g) {
    if (auto check = validate_geometry(g); !check) {
        throw std::invalid_argument("invalid polygon geometry: " + check.reason);
    }
    std::vector<LabeledVertex> vertices;
    for (auto& t : all_triangulations(g.n)) {
        auto v = gkz_vector(g, t);
        vertices.push_back({std::move(v), std::move(t)});
    }
    return LabeledPolytope(Construction::secondary, g.n, std::move(vertices));
}

bool verify_secondary_dimension(const LabeledPolytope& p) {
    return subspace_from_differences(p.coordinates()).dim() == static_cast<std::size_t>(p.n());
}

}  // namespace assoc
