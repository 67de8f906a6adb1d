#pragma once
/**
 * JSON and text formats. Rationals are always written as "p/q" strings
 * ("p" when q = 1); diagonals as [a, b]; triangulations as sorted arrays of
 * diagonals.
 */

#include <string>

#include "json.hpp"

#include "assoc/analysis.hpp"
#include "assoc/cluster.hpp"
#include "assoc/minkowski.hpp"
#include "assoc/polytope.hpp"
#include "assoc/secondary.hpp"

namespace assoc::io {

using nlohmann::json;

json to_json(const Rational& q);
/// Accepts a "p/q" string or a JSON integer.
Rational rational_from_json(const json& j);

json to_json(const RationalVector& v);
json to_json(const Diagonal& d);
json to_json(const Subdivision& s);
Diagonal diagonal_from_json(const json& j, int n);
Triangulation triangulation_from_json(const json& j, int n);

json to_json(const PolygonGeometry& g);
PolygonGeometry geometry_from_json(const json& j);

json to_json(const SupportValues& h, int n);
SupportValues support_values_from_json(const json& j);
int support_values_n(const json& j);

json to_json(const SimplexWeights& a);
SimplexWeights weights_from_json(const json& j);

/// A built polytope together with the parameters that produced it.
struct PolytopeFile {
    LabeledPolytope polytope;
    json params;

    friend bool operator==(const PolytopeFile&, const PolytopeFile&) = default;
};

json to_json(const PolytopeFile& file);
/// Throws std::invalid_argument on any schema or invariant violation.
PolytopeFile polytope_file_from_json(const json& j);

/// Facet list, parallel pairs, special profile and incidence counts.
/// Propagates CertificationError from facet extraction.
json analysis_report(const LabeledPolytope& p);

json to_json(const EquivalenceReport& report);

std::string export_csv(const LabeledPolytope& p);
/// Geomview OFF with decimal coordinates, for viewers only. Vertices are
/// written in affine coordinates on the hull; facets as vertex lists.
std::string export_off(const LabeledPolytope& p);

/// Reads a whole file; throws std::runtime_error if it cannot be opened.
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace assoc::io
