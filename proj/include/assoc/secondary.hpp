#pragma once
/**
 * Secondary polytope of a convex (n+3)-gon.
 *
 * Each triangulation t contributes its GKZ vector: coordinate i is the total
 * area of the triangles of t incident to polygon vertex i. The polytope is
 * the convex hull of these vectors in Q^(n+3); it is kept as its vertex list.
 */

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "assoc/exactlin.hpp"
#include "assoc/polygon.hpp"
#include "assoc/polytope.hpp"

namespace assoc {

struct Point2 {
    Rational x;
    Rational y;

    friend bool operator==(const Point2&, const Point2&) = default;
};

/// Vertices of the polygon, indexed by labels 0..n+2.
struct PolygonGeometry {
    int n = 0;
    std::vector<Point2> coords;

    friend bool operator==(const PolygonGeometry&, const PolygonGeometry&) = default;
};

struct GeometryCheck {
    bool ok = false;
    std::string reason;

    explicit operator bool() const { return ok; }
};

/// Twice the signed area of the triangle (p, q, r); positive for a left turn.
Rational orientation(const Point2& p, const Point2& q, const Point2& r);
Rational triangle_area(const Point2& p, const Point2& q, const Point2& r);
/// Shoelace area of the polygon, assumed counterclockwise.
Rational polygon_area(const PolygonGeometry& g);

/// Strictly convex position in counterclockwise order: every vertex lies
/// strictly to the left of every edge it is not on.
GeometryCheck validate_geometry(const PolygonGeometry& g);

/// Points (k, k^2) for k = 1..n+3.
PolygonGeometry parabola_geometry(int n);

/// Rational points on the unit circle at random parameters, jittered, then
/// checked for strict convexity. Denominators stay at most 1000.
PolygonGeometry random_convex_geometry(int n, std::mt19937_64& rng);

RationalVector gkz_vector(const PolygonGeometry& g, const Triangulation& t);

/// Throws std::invalid_argument for invalid geometry.
LabeledPolytope build_secondary(const PolygonGeometry& g);

/// Rank of the vertex difference set equals n.
bool verify_secondary_dimension(const LabeledPolytope& p);

}  // namespace assoc
