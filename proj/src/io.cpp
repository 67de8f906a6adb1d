#include "assoc/io.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace assoc::io {

namespace {

[[noreturn]] void schema_error(const std::string& what) { throw std::invalid_argument("malformed input: " + what); }

const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) schema_error(std::string("missing field '") + key + "'");
    return j.at(key);
}

int int_field(const json& j, const char* key) {
    const json& v = field(j, key);
    if (!v.is_number_integer()) schema_error(std::string("field '") + key + "' must be an integer");
    return v.get<int>();
}

}  // namespace

json to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long long>());
    schema_error("rational must be a \"p/q\" string or an integer, got " + j.dump());
}

json to_json(const RationalVector& v) {
    json out = json::array();
    for (const auto& q : v) out.push_back(to_json(q));
    return out;
}

json to_json(const Diagonal& d) { return json::array({d.a, d.b}); }

json to_json(const Subdivision& s) {
    json out = json::array();
    for (const auto& d : s.diagonals()) out.push_back(to_json(d));
    return out;
}

Diagonal diagonal_from_json(const json& j, int n) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer()) {
        schema_error("diagonal must be [a, b], got " + j.dump());
    }
    return make_diagonal(n, j[0].get<int>(), j[1].get<int>());
}

Triangulation triangulation_from_json(const json& j, int n) {
    if (!j.is_array()) schema_error("triangulation must be an array of diagonals");
    std::vector<Diagonal> ds;
    for (const auto& d : j) ds.push_back(diagonal_from_json(d, n));
    return Triangulation(n, std::move(ds));
}

// ---------------------------------------------------------------------------

json to_json(const PolygonGeometry& g) {
    json coords = json::array();
    for (const auto& p : g.coords) coords.push_back(json::array({to_json(p.x), to_json(p.y)}));
    return {{"n", g.n}, {"coords", coords}};
}

PolygonGeometry geometry_from_json(const json& j) {
    PolygonGeometry g{int_field(j, "n"), {}};
    const json& coords = field(j, "coords");
    if (!coords.is_array()) schema_error("'coords' must be an array");
    for (const auto& p : coords) {
        if (!p.is_array() || p.size() != 2) schema_error("point must be [x, y], got " + p.dump());
        g.coords.push_back({rational_from_json(p[0]), rational_from_json(p[1])});
    }
    return g;
}

json to_json(const SupportValues& h, int n) {
    json values = json::object();
    for (const auto& [r, v] : h) values[to_string(r)] = to_json(v);
    return {{"n", n}, {"h", values}};
}

int support_values_n(const json& j) { return int_field(j, "n"); }

SupportValues support_values_from_json(const json& j) {
    const int n = int_field(j, "n");
    const json& values = field(j, "h");
    if (!values.is_object()) schema_error("'h' must be an object");
    SupportValues h;
    for (const auto& [key, value] : values.items()) h[parse_root(key, n)] = rational_from_json(value);
    return h;
}

json to_json(const SimplexWeights& a) {
    json values = json::object();
    for (const auto& [key, v] : a.a) values[std::to_string(key.first) + "," + std::to_string(key.second)] = to_json(v);
    return {{"n", a.n}, {"a", values}};
}

SimplexWeights weights_from_json(const json& j) {
    SimplexWeights a{int_field(j, "n"), {}};
    const json& values = field(j, "a");
    if (!values.is_object()) schema_error("'a' must be an object");
    for (const auto& [key, value] : values.items()) {
        const auto comma = key.find(',');
        if (comma == std::string::npos) schema_error("weight key '" + key + "' must be \"i,j\"");
        try {
            std::size_t used_i = 0, used_j = 0;
            const int i = std::stoi(key.substr(0, comma), &used_i);
            const int jj = std::stoi(key.substr(comma + 1), &used_j);
            if (used_i != comma || used_j != key.size() - comma - 1) throw std::invalid_argument(key);
            a.a[{i, jj}] = rational_from_json(value);
        } catch (const std::logic_error&) {
            schema_error("weight key '" + key + "' must be \"i,j\"");
        }
    }
    return a;
}

// ---------------------------------------------------------------------------

json to_json(const PolytopeFile& file) {
    const auto& p = file.polytope;
    json vertices = json::array();
    for (const auto& v : p.vertices()) {
        vertices.push_back({{"coords", to_json(v.coords)}, {"triangulation", to_json(v.label)}});
    }
    return {{"construction", to_string(p.construction())}, {"n", p.n()}, {"params", file.params},
            {"vertices", vertices}};
}

PolytopeFile polytope_file_from_json(const json& j) {
    const json& tag = field(j, "construction");
    if (!tag.is_string()) schema_error("'construction' must be a string");
    const Construction construction = parse_construction(tag.get<std::string>());
    const int n = int_field(j, "n");
    if (n < 0) schema_error("'n' must be nonnegative");
    const json& vertices = field(j, "vertices");
    if (!vertices.is_array()) schema_error("'vertices' must be an array");

    std::vector<LabeledVertex> out;
    for (const auto& v : vertices) {
        const json& coords = field(v, "coords");
        if (!coords.is_array()) schema_error("'coords' must be an array");
        std::vector<Rational> entries;
        for (const auto& q : coords) entries.push_back(rational_from_json(q));
        out.push_back({RationalVector(std::move(entries)), triangulation_from_json(field(v, "triangulation"), n)});
    }
    json params = j.contains("params") ? j.at("params") : json(nullptr);
    return PolytopeFile{LabeledPolytope(construction, n, std::move(out)), std::move(params)};
}

// ---------------------------------------------------------------------------

json analysis_report(const LabeledPolytope& p) {
    const auto facets = extract_facets(p);
    json facet_list = json::array();
    for (const auto& f : facets) {
        facet_list.push_back({{"diagonal", to_json(f.diagonal)},
                              {"vertices", f.vertex_indices},
                              {"normal", to_json(f.outward_normal)},
                              {"offset", to_json(dot(f.outward_normal, p.vertex(f.vertex_indices.front()).coords))},
                              {"direction_dim", f.direction.dim()}});
    }
    json pairs = json::array();
    for (const auto& [d1, d2] : parallel_pairs(facets)) pairs.push_back(json::array({to_json(d1), to_json(d2)}));
    json profile = json::array();
    for (const auto& [d, count] : special_profile(facets)) {
        profile.push_back({{"diagonal", to_json(d)}, {"count", count}});
    }
    const FaceStructure fs = face_structure(p, facets);
    return {{"construction", to_string(p.construction())},
            {"n", p.n()},
            {"ambient_dim", p.ambient_dim()},
            {"f_vector", {{"vertices", p.size()}, {"edges", fs.edges.size()}, {"facets", facets.size()}}},
            {"simple", fs.simple},
            {"facets_complete", fs.facets_complete},
            {"facets", facet_list},
            {"parallel_pairs", pairs},
            {"special_profile", profile}};
}

json to_json(const EquivalenceReport& report) {
    json obstructions = json::array();
    for (const auto& o : report.obstructions) {
        obstructions.push_back({{"name", o.name}, {"detail", o.detail}, {"fires", o.fires}});
    }
    json witness = nullptr;
    if (report.witness) {
        json rows = json::array();
        for (const auto& r : report.witness->matrix.row_vectors()) rows.push_back(to_json(r));
        witness = {{"relabeling", report.witness_relabeling},
                   {"matrix", rows},
                   {"translation", to_json(report.witness->translation)}};
    }
    return {{"pair", json::array({to_string(report.first), to_string(report.second)})},
            {"n", report.n},
            {"obstructions", obstructions},
            {"relabelings_tried", report.relabelings_tried},
            {"witness", witness},
            {"verdict", to_string(report.verdict)},
            {"notes", report.notes}};
}

// ---------------------------------------------------------------------------

std::string export_csv(const LabeledPolytope& p) {
    std::ostringstream out;
    out << "index,triangulation";
    for (std::size_t k = 1; k <= p.ambient_dim(); ++k) out << ",x" << k;
    out << "\n";
    for (std::size_t i = 0; i < p.size(); ++i) {
        const auto& v = p.vertex(i);
        out << i << ",";
        for (std::size_t k = 0; k < v.label.size(); ++k) {
            out << (k ? " " : "") << v.label.diagonals()[k].a << "-" << v.label.diagonals()[k].b;
        }
        for (const auto& q : v.coords) out << "," << to_string(q);
        out << "\n";
    }
    return out.str();
}

namespace {

// Facet vertices of a 3-polytope in cyclic order, walking flips inside the facet.
std::vector<std::size_t> cyclic_order(const LabeledPolytope& p, const std::vector<std::size_t>& members) {
    std::vector<std::size_t> order{members.front()};
    std::vector<bool> used(members.size(), false);
    used[0] = true;
    while (order.size() < members.size()) {
        bool advanced = false;
        for (std::size_t k = 0; k < members.size(); ++k) {
            if (used[k] || !differ_by_flip(p.vertex(order.back()).label, p.vertex(members[k]).label)) continue;
            order.push_back(members[k]);
            used[k] = true;
            advanced = true;
            break;
        }
        if (!advanced) return members;
    }
    return order;
}

}  // namespace

std::string export_off(const LabeledPolytope& p) {
    const auto facets = extract_facets(p);
    const std::size_t n = static_cast<std::size_t>(p.n());
    // Pivot columns of the hull's echelon basis give injective affine coordinates.
    std::vector<std::size_t> axes;
    for (const auto& b : p.hull_direction().basis()) {
        std::size_t k = 0;
        while (b[k] == 0) ++k;
        axes.push_back(k);
    }

    std::ostringstream out;
    const std::size_t shown = std::max<std::size_t>(n, 3);
    if (n <= 3) {
        out << "OFF\n";
    } else {
        out << "nOFF\n" << n << "\n";
    }
    out << p.size() << " " << facets.size() << " 0\n";
    out << std::fixed << std::setprecision(6);
    for (const auto& v : p.vertices()) {
        for (std::size_t k = 0; k < shown; ++k) {
            if (k) out << " ";
            out << (k < axes.size() ? v.coords[axes[k]].convert_to<double>() : 0.0);
        }
        out << "\n";
    }
    for (const auto& f : facets) {
        const auto members = n == 3 ? cyclic_order(p, f.vertex_indices) : f.vertex_indices;
        out << members.size();
        for (auto i : members) out << " " << i;
        out << "\n";
    }
    return out.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << contents;
}

}  // namespace assoc::io
