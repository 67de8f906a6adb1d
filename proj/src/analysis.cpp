#include "assoc/analysis.hpp"

#include <algorithm>
#include <iterator>
#include <set>

namespace assoc {

std::vector<FacetDescriptor> extract_facets(const LabeledPolytope& p) {
    std::vector<FacetDescriptor> facets;
    if (p.n() < 1) return facets;
    const auto coords = p.coordinates();

    for (const auto& d : all_diagonals(p.n())) {
        FacetDescriptor f;
        f.diagonal = d;
        std::vector<RationalVector> members;
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (p.vertex(i).label.contains(d)) {
                f.vertex_indices.push_back(i);
                members.push_back(coords[i]);
            }
        }
        if (members.empty()) throw CertificationError("facet " + to_string(d) + ": no vertices");

        auto plane = hyperplane_through(members, p.hull_direction());
        if (!plane) {
            throw CertificationError("facet " + to_string(d) + ": vertices do not span a hyperplane of the hull");
        }
        int side = 0;
        for (std::size_t i = 0; i < p.size(); ++i) {
            const int s = plane->evaluate(coords[i]).sign();
            const bool member = std::binary_search(f.vertex_indices.begin(), f.vertex_indices.end(), i);
            if (member) {
                if (s != 0) throw CertificationError("facet " + to_string(d) + ": member vertex off the hyperplane");
                continue;
            }
            if (s == 0) {
                throw CertificationError("facet " + to_string(d) + ": vertex " + to_string(p.vertex(i).label) +
                                         " lies on the hyperplane but not in the facet");
            }
            if (side != 0 && s != side) {
                throw CertificationError("facet " + to_string(d) + ": hyperplane is not supporting");
            }
            side = s;
        }
        f.direction = subspace_from_differences(members);
        if (f.direction.dim() + 1 != static_cast<std::size_t>(p.n())) {
            throw CertificationError("facet " + to_string(d) + ": affine dimension " +
                                     std::to_string(f.direction.dim()) + ", expected " + std::to_string(p.n() - 1));
        }
        // Other vertices lie on the `side` half; the outward normal points away from them.
        f.outward_normal = side > 0 ? -plane->normal : plane->normal;
        f.hyperplane = std::move(*plane);
        facets.push_back(std::move(f));
    }
    return facets;
}

std::vector<DiagonalPair> parallel_pairs(const std::vector<FacetDescriptor>& facets) {
    std::vector<DiagonalPair> out;
    for (std::size_t i = 0; i < facets.size(); ++i)
        for (std::size_t j = i + 1; j < facets.size(); ++j)
            if (facets[i].direction == facets[j].direction) out.emplace_back(facets[i].diagonal, facets[j].diagonal);
    return out;
}

std::vector<DiagonalPair> parallel_pairs(const LabeledPolytope& p) { return parallel_pairs(extract_facets(p)); }

bool facets_intersect(const FacetDescriptor& f1, const FacetDescriptor& f2) {
    std::vector<std::size_t> shared;
    std::set_intersection(f1.vertex_indices.begin(), f1.vertex_indices.end(), f2.vertex_indices.begin(),
                          f2.vertex_indices.end(), std::back_inserter(shared));
    const bool geometric = !shared.empty();
    const bool combinatorial = !crossing(f1.diagonal, f2.diagonal);
    if (geometric != combinatorial) {
        throw std::logic_error("facets " + to_string(f1.diagonal) + " and " + to_string(f2.diagonal) +
                               ": vertex-sharing disagrees with the crossing predicate");
    }
    return geometric;
}

std::map<Diagonal, std::size_t> special_profile(const std::vector<FacetDescriptor>& facets) {
    std::set<std::size_t> special;
    for (std::size_t i = 0; i < facets.size(); ++i)
        for (std::size_t j = 0; j < facets.size(); ++j)
            if (i != j && facets[i].direction == facets[j].direction) special.insert(i);

    std::map<Diagonal, std::size_t> profile;
    for (auto i : special) {
        std::size_t count = 0;
        for (auto j : special)
            if (i != j && facets_intersect(facets[i], facets[j])) ++count;
        profile[facets[i].diagonal] = count;
    }
    return profile;
}

// ---------------------------------------------------------------------------
// Face structure

FaceStructure face_structure(const LabeledPolytope& p, const std::vector<FacetDescriptor>& facets) {
    FaceStructure fs;
    const std::size_t n = static_cast<std::size_t>(p.n());
    fs.facets_at_vertex.assign(p.size(), {});
    for (std::size_t f = 0; f < facets.size(); ++f)
        for (auto v : facets[f].vertex_indices) fs.facets_at_vertex[v].push_back(f);

    fs.simple = true;
    fs.vertices_certified = true;
    for (std::size_t v = 0; v < p.size(); ++v) {
        const auto& at = fs.facets_at_vertex[v];
        std::vector<RationalVector> normals;
        RationalVector functional(p.ambient_dim());
        for (auto f : at) {
            normals.push_back(facets[f].outward_normal);
            functional += facets[f].outward_normal;
        }
        if (at.size() != n || (n > 0 && rank(RationalMatrix(normals)) != n)) {
            fs.simple = false;
            fs.problems.push_back("vertex " + to_string(p.vertex(v).label) + " is not simple");
        }
        const Rational top = dot(functional, p.vertex(v).coords);
        for (std::size_t u = 0; u < p.size(); ++u) {
            if (u != v && dot(functional, p.vertex(u).coords) >= top) {
                fs.vertices_certified = false;
                fs.problems.push_back("vertex " + to_string(p.vertex(v).label) +
                                      " is not the unique maximizer of its facet normals");
                break;
            }
        }
    }

    // Pairs sharing n-1 facets; `dropped[v]` records which facet of v each neighbour lacks.
    std::vector<std::vector<std::size_t>> dropped(p.size());
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j) {
            const auto& fi = fs.facets_at_vertex[i];
            const auto& fj = fs.facets_at_vertex[j];
            std::vector<std::size_t> shared;
            std::set_intersection(fi.begin(), fi.end(), fj.begin(), fj.end(), std::back_inserter(shared));
            if (shared.size() + 1 != n || fi.size() != n || fj.size() != n) continue;
            fs.edges.emplace_back(i, j);
            std::vector<std::size_t> only_i, only_j;
            std::set_difference(fi.begin(), fi.end(), shared.begin(), shared.end(), std::back_inserter(only_i));
            std::set_difference(fj.begin(), fj.end(), shared.begin(), shared.end(), std::back_inserter(only_j));
            dropped[i].push_back(only_i.front());
            dropped[j].push_back(only_j.front());
        }

    fs.facets_complete = fs.simple;
    if (fs.simple) {
        for (std::size_t v = 0; v < p.size(); ++v) {
            auto d = dropped[v];
            std::sort(d.begin(), d.end());
            if (d != fs.facets_at_vertex[v]) {
                fs.facets_complete = false;
                fs.problems.push_back("vertex " + to_string(p.vertex(v).label) +
                                      " does not have exactly one neighbour along each edge");
            }
        }
    }
    return fs;
}

// ---------------------------------------------------------------------------
// Relabelings

Diagonal LabelMap::operator()(const Diagonal& d) const { return make_diagonal(n, image[d.a], image[d.b]); }

Triangulation LabelMap::operator()(const Triangulation& t) const {
    std::vector<Diagonal> ds;
    ds.reserve(t.size());
    for (const auto& d : t.diagonals()) ds.push_back((*this)(d));
    return Triangulation(n, std::move(ds));
}

LabelMap LabelMap::then(const LabelMap& next) const {
    LabelMap out{n, std::vector<int>(image.size()), next.name + " o " + name};
    for (std::size_t i = 0; i < image.size(); ++i) out.image[i] = next.image[image[i]];
    return out;
}

std::vector<LabelMap> dihedral_relabelings(int n) {
    const int m = n + 3;
    std::vector<LabelMap> out;
    for (int k = 0; k < m; ++k) {
        LabelMap r{n, std::vector<int>(m), k == 0 ? "identity" : "rotate " + std::to_string(k)};
        for (int i = 0; i < m; ++i) r.image[i] = (i + k) % m;
        out.push_back(std::move(r));
    }
    for (int k = 0; k < m; ++k) {
        LabelMap s{n, std::vector<int>(m), "reflect " + std::to_string(k)};
        for (int i = 0; i < m; ++i) s.image[i] = ((k - i) % m + m) % m;
        out.push_back(std::move(s));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Affine fitting

namespace {

// Indices of n+1 affinely independent vertices, greedily in vertex order.
std::vector<std::size_t> affine_frame(const LabeledPolytope& p) {
    std::vector<std::size_t> frame{0};
    std::vector<RationalVector> diffs;
    const auto& base = p.vertex(0).coords;
    for (std::size_t i = 1; i < p.size() && frame.size() < static_cast<std::size_t>(p.n()) + 1; ++i) {
        diffs.push_back(p.vertex(i).coords - base);
        if (rank(RationalMatrix(diffs)) == diffs.size()) {
            frame.push_back(i);
        } else {
            diffs.pop_back();
        }
    }
    if (frame.size() != static_cast<std::size_t>(p.n()) + 1) {
        throw std::logic_error("affine_frame: vertices are affinely degenerate");
    }
    return frame;
}

}  // namespace

std::optional<AffineMap> fit_affine_map(const LabeledPolytope& src, const LabeledPolytope& dst,
                                        const LabelMap& relabel) {
    if (src.n() != dst.n() || src.size() != dst.size()) return std::nullopt;
    std::vector<std::size_t> image(src.size());
    for (std::size_t i = 0; i < src.size(); ++i) {
        auto j = dst.index_of(relabel(src.vertex(i).label));
        if (!j) return std::nullopt;
        image[i] = *j;
    }

    const std::size_t n = static_cast<std::size_t>(src.n());
    const std::size_t src_dim = src.ambient_dim();
    const std::size_t dst_dim = dst.ambient_dim();
    const auto frame = affine_frame(src);
    const RationalVector& s0 = src.vertex(frame[0]).coords;
    const RationalVector& d0 = dst.vertex(image[frame[0]]).coords;

    AffineMap map{RationalMatrix(dst_dim, src_dim), RationalVector(dst_dim)};
    if (n > 0) {
        std::vector<RationalVector> src_cols, dst_cols;
        for (std::size_t k = 1; k <= n; ++k) {
            src_cols.push_back(src.vertex(frame[k]).coords - s0);
            dst_cols.push_back(dst.vertex(image[frame[k]]).coords - d0);
        }
        const RationalMatrix bs = RationalMatrix::from_columns(src_cols);
        const RationalMatrix bd = RationalMatrix::from_columns(dst_cols);
        if (rank(bd) != n) return std::nullopt;

        // Coordinates in the src frame: (bs^T bs)^{-1} bs^T, exact on the hull.
        const auto gram_inv = inverse(bs.transpose() * bs);
        if (!gram_inv) throw std::logic_error("fit_affine_map: singular frame");
        const RationalMatrix coords_of = *gram_inv * bs.transpose();
        map.matrix = bd * coords_of;

        // Same ambient space and parallel hulls: act as the identity off the hull.
        if (src_dim == dst_dim && src.hull_direction() == dst.hull_direction()) {
            const RationalMatrix projector = bs * coords_of;
            for (std::size_t i = 0; i < src_dim; ++i)
                for (std::size_t j = 0; j < src_dim; ++j)
                    map.matrix(i, j) += (i == j ? Rational(1) : Rational(0)) - projector(i, j);
        }
    } else if (src_dim == dst_dim) {
        map.matrix = RationalMatrix::identity(src_dim);
    }
    map.translation = d0 - map.matrix * s0;

    for (std::size_t i = 0; i < src.size(); ++i) {
        if (map(src.vertex(i).coords) != dst.vertex(image[i]).coords) return std::nullopt;
    }
    return map;
}

// ---------------------------------------------------------------------------
// Equivalence

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::non_equivalent: return "non_equivalent";
        case Verdict::equivalent: return "equivalent";
        case Verdict::inconclusive: return "inconclusive";
    }
    return "unknown";
}

bool EquivalenceReport::any_obstruction() const {
    return std::any_of(obstructions.begin(), obstructions.end(), [](const Obstruction& o) { return o.fires; });
}

namespace {

std::vector<std::size_t> profile_multiset(const std::map<Diagonal, std::size_t>& profile) {
    std::vector<std::size_t> counts;
    for (const auto& [d, c] : profile) counts.push_back(c);
    std::sort(counts.begin(), counts.end());
    return counts;
}

std::string join_counts(const std::vector<std::size_t>& counts) {
    std::string out = "{";
    for (std::size_t i = 0; i < counts.size(); ++i) out += (i ? "," : "") + std::to_string(counts[i]);
    return out + "}";
}

}  // namespace

EquivalenceReport equivalence_search(const LabeledPolytope& p, const LabeledPolytope& q) {
    if (p.n() != q.n()) throw std::invalid_argument("equivalence_search: polytopes of different dimension");
    EquivalenceReport report{p.construction(), q.construction(), p.n(), {}, 0, std::nullopt, {},
                             Verdict::inconclusive, {}};

    const auto pf = extract_facets(p);
    const auto qf = extract_facets(q);
    const auto pp = parallel_pairs(pf);
    const auto qp = parallel_pairs(qf);
    report.obstructions.push_back({"parallel_pair_count",
                                   "parallel facet pairs " + std::to_string(pp.size()) + " vs " +
                                       std::to_string(qp.size()),
                                   pp.size() != qp.size()});

    const auto pm = profile_multiset(special_profile(pf));
    const auto qm = profile_multiset(special_profile(qf));
    report.obstructions.push_back({"special_profile_multiset",
                                   "special-facet intersection counts " + join_counts(pm) + " vs " + join_counts(qm),
                                   pm != qm});

    for (const auto& g : dihedral_relabelings(p.n())) {
        ++report.relabelings_tried;
        if (auto map = fit_affine_map(p, q, g)) {
            report.witness = std::move(map);
            report.witness_relabeling = g.name;
            break;
        }
    }

    if (report.witness) {
        if (report.any_obstruction()) {
            throw std::logic_error("equivalence_search: witness found although an affine invariant differs");
        }
        report.verdict = Verdict::equivalent;
    } else if (report.any_obstruction()) {
        report.verdict = Verdict::non_equivalent;
    } else {
        report.verdict = Verdict::inconclusive;
        report.notes.push_back(
            "invariants agree and no dihedral relabeling fits; the search assumes the dihedral maps are all "
            "combinatorial automorphisms");
    }
    return report;
}

}  // namespace assoc
