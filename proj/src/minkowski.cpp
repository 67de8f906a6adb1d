#include "assoc/minkowski.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace assoc {

void SimplexWeights::validate() const {
    if (n < 0) throw std::invalid_argument("weights: n must be nonnegative");
    const std::size_t expected = static_cast<std::size_t>(n + 1) * static_cast<std::size_t>(n + 2) / 2;
    for (const auto& [key, value] : a) {
        const auto [i, j] = key;
        if (i < 1 || i > j || j > n + 1) {
            throw std::invalid_argument("weight key " + std::to_string(i) + "," + std::to_string(j) + " out of range");
        }
        if (value <= 0) {
            throw std::invalid_argument("weight a_" + std::to_string(i) + "," + std::to_string(j) + " = " +
                                        to_string(value) + " is not positive");
        }
    }
    if (a.size() != expected) {
        throw std::invalid_argument("expected " + std::to_string(expected) + " weights, got " + std::to_string(a.size()));
    }
}

Rational SimplexWeights::total() const {
    Rational s = 0;
    for (const auto& [key, value] : a) s += value;
    return s;
}

SimplexWeights uniform_weights(int n) {
    SimplexWeights w{n, {}};
    for (int i = 1; i <= n + 1; ++i)
        for (int j = i; j <= n + 1; ++j) w.a[{i, j}] = 1;
    return w;
}

SimplexWeights random_weights(int n, std::mt19937_64& rng) {
    SimplexWeights w{n, {}};
    std::uniform_int_distribution<long> den_dist(1, 1000);
    for (int i = 1; i <= n + 1; ++i)
        for (int j = i; j <= n + 1; ++j) {
            const long q = den_dist(rng);
            std::uniform_int_distribution<long> num_dist(1, 3 * q);
            w.a[{i, j}] = Rational(num_dist(rng), q);
        }
    return w;
}

Subdivision subdivision_from_functional(const RationalVector& w, int n) {
    if (w.dim() != static_cast<std::size_t>(n) + 1) throw std::invalid_argument("functional has wrong dimension");
    const int m = n + 3;
    std::set<Diagonal> induced;
    // H_0 and H_{n+2} are the edge {0, n+2} and induce nothing.
    for (int k = 1; k <= n + 1; ++k) {
        std::vector<int> hull{0};
        for (int i = 1; i <= n + 1; ++i)
            if (w[i - 1] >= w[k - 1]) hull.push_back(i);
        hull.push_back(m - 1);
        if (hull.size() <= 2) continue;
        for (std::size_t s = 0; s < hull.size(); ++s) {
            const int x = hull[s];
            const int y = hull[(s + 1) % hull.size()];
            if (is_diagonal(n, x, y)) induced.insert(make_diagonal(n, x, y));
        }
    }
    try {
        return Subdivision(n, {induced.begin(), induced.end()});
    } catch (const std::invalid_argument& e) {
        throw std::logic_error(std::string("subdivision_from_functional: ") + e.what());
    }
}

int summand_max_vertex(const RationalVector& w, int i, int j) {
    if (i < 1 || i > j || static_cast<std::size_t>(j) > w.dim()) throw std::invalid_argument("summand out of range");
    int best = i;
    bool tie = false;
    for (int k = i + 1; k <= j; ++k) {
        if (w[k - 1] > w[best - 1]) {
            best = k;
            tie = false;
        } else if (w[k - 1] == w[best - 1]) {
            tie = true;
        }
    }
    if (tie) {
        throw std::invalid_argument("non-generic functional: tie on summand [" + std::to_string(i) + ".." +
                                    std::to_string(j) + "]");
    }
    return best;
}

LabeledPolytope build_minkowski(const SimplexWeights& a) {
    a.validate();
    const int n = a.n;
    const std::size_t dim = static_cast<std::size_t>(n) + 1;

    // Every chamber of the braid arrangement picks one vertex of each summand.
    std::vector<int> order(dim);
    std::iota(order.begin(), order.end(), 1);
    std::map<RationalVector, Triangulation> found;
    do {
        RationalVector w(dim);
        for (std::size_t k = 0; k < dim; ++k) w[k] = order[k];
        RationalVector vertex(dim);
        for (const auto& [key, weight] : a.a) vertex[summand_max_vertex(w, key.first, key.second) - 1] += weight;

        const Subdivision s = subdivision_from_functional(w, n);
        if (!s.is_triangulation()) {
            throw std::logic_error("generic functional " + to_string(w) + " maps to a non-triangulation " +
                                   to_string(s));
        }
        Triangulation t(n, s.diagonals());
        auto [it, inserted] = found.emplace(vertex, t);
        if (!inserted && it->second != t) {
            throw std::logic_error("vertex " + to_string(vertex) + " labeled both " + to_string(it->second) + " and " +
                                   to_string(t));
        }
    } while (std::next_permutation(order.begin(), order.end()));

    if (found.size() != catalan(n + 1)) {
        throw std::logic_error("Minkowski sum has " + std::to_string(found.size()) + " vertices, expected " +
                               std::to_string(catalan(n + 1)));
    }
    std::vector<LabeledVertex> vertices;
    for (auto& [coords, label] : found) vertices.push_back({coords, label});
    return LabeledPolytope(Construction::minkowski, n, std::move(vertices));
}

// ---------------------------------------------------------------------------

namespace {

// Indices of the vertices maximizing w.
std::vector<std::size_t> maximizers(const LabeledPolytope& p, const RationalVector& w) {
    std::vector<std::size_t> best;
    Rational top;
    for (std::size_t i = 0; i < p.size(); ++i) {
        const Rational value = dot(w, p.vertex(i).coords);
        if (best.empty() || value > top) {
            best = {i};
            top = value;
        } else if (value == top) {
            best.push_back(i);
        }
    }
    return best;
}

}  // namespace

CorrespondenceReport verify_correspondence(const LabeledPolytope& p) {
    CorrespondenceReport report;
    if (p.construction() != Construction::minkowski) {
        throw std::invalid_argument("verify_correspondence expects a Minkowski-sum polytope");
    }
    const int n = p.n();
    report.vertices = p.size();

    std::vector<Triangulation> labels;
    for (const auto& v : p.vertices()) labels.push_back(v.label);
    if (labels != all_triangulations(n)) report.failures.push_back("vertex labels are not the triangulations");

    std::vector<FacetDescriptor> facets;
    try {
        facets = extract_facets(p);
    } catch (const CertificationError& e) {
        report.failures.push_back(e.what());
        return report;
    }
    report.facets = facets.size();
    const FaceStructure fs = face_structure(p, facets);
    for (const auto& problem : fs.problems) report.failures.push_back(problem);

    // Vertices: the sum of the facet normals at v singles out v and maps to its triangulation.
    for (std::size_t v = 0; v < p.size(); ++v) {
        RationalVector w(p.ambient_dim());
        for (auto f : fs.facets_at_vertex[v]) w += facets[f].outward_normal;
        if (maximizers(p, w) != std::vector<std::size_t>{v}) {
            report.failures.push_back("vertex " + to_string(p.vertex(v).label) + " is not exposed by its normals");
        }
        if (Subdivision(p.vertex(v).label) != subdivision_from_functional(w, n)) {
            report.failures.push_back("functional of vertex " + to_string(p.vertex(v).label) + " maps to " +
                                      to_string(subdivision_from_functional(w, n)));
        }
    }

    // Edges: geometric adjacency versus flips, with the shared facets' functional as certificate.
    std::set<std::pair<std::size_t, std::size_t>> edges(fs.edges.begin(), fs.edges.end());
    report.edges = edges.size();
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j) {
            const bool edge = edges.count({i, j}) > 0;
            const bool flip_pair = differ_by_flip(p.vertex(i).label, p.vertex(j).label);
            if (edge != flip_pair) {
                report.failures.push_back("vertices " + to_string(p.vertex(i).label) + " and " +
                                          to_string(p.vertex(j).label) + ": edge=" + (edge ? "yes" : "no") +
                                          " flip=" + (flip_pair ? "yes" : "no"));
                continue;
            }
            if (!edge) continue;
            const Subdivision shared = common_diagonals(p.vertex(i).label, p.vertex(j).label);
            RationalVector w(p.ambient_dim());
            for (const auto& f : facets)
                if (shared.contains(f.diagonal)) w += f.outward_normal;
            if (maximizers(p, w) != std::vector<std::size_t>{i, j}) {
                report.failures.push_back("edge " + to_string(shared) + " is not exposed by its normals");
            }
            if (subdivision_from_functional(w, n) != shared) {
                report.failures.push_back("functional of edge " + to_string(shared) + " maps to " +
                                          to_string(subdivision_from_functional(w, n)));
            }
        }

    // Facets: the outward normal maps back to the single diagonal.
    for (const auto& f : facets) {
        const Subdivision expected(n, {f.diagonal});
        if (subdivision_from_functional(f.outward_normal, n) != expected) {
            report.failures.push_back("facet normal of " + to_string(f.diagonal) + " maps to " +
                                      to_string(subdivision_from_functional(f.outward_normal, n)));
        }
        if (maximizers(p, f.outward_normal) != f.vertex_indices) {
            report.failures.push_back("facet " + to_string(f.diagonal) + " is not exposed by its normal");
        }
    }

    if (n >= 1) {
        const auto counts = subdivision_counts_by_size(n);
        if (report.vertices != counts[n] || report.edges != counts[n - 1] || report.facets != counts[1]) {
            report.failures.push_back("f-vector (" + std::to_string(report.vertices) + "," +
                                      std::to_string(report.edges) + "," + std::to_string(report.facets) +
                                      ") differs from subdivision counts (" + std::to_string(counts[n]) + "," +
                                      std::to_string(counts[n - 1]) + "," + std::to_string(counts[1]) + ")");
        }
    }
    report.ok = report.failures.empty();
    return report;
}

// ---------------------------------------------------------------------------

ParallelDirection expected_parallel_direction(const Diagonal& d, int n) {
    const Diagonal diag = make_diagonal(n, d.a, d.b);
    ParallelDirection dir;
    auto range = [](int lo, int hi) {
        std::vector<int> out;
        for (int k = lo; k <= hi; ++k) out.push_back(k);
        return out;
    };
    if (diag.b == n + 2) {
        dir.diagonal_class = 1;
        dir.i = diag.a;
    } else if (diag.a == 0) {
        dir.diagonal_class = 2;
        dir.i = diag.b - 1;
    } else {
        dir.diagonal_class = 3;
        dir.i = diag.a;
        dir.j = diag.b;
        dir.first_block = range(1, dir.i);
        const auto tail = range(dir.j, n + 1);
        dir.first_block.insert(dir.first_block.end(), tail.begin(), tail.end());
        dir.second_block = range(dir.i + 1, dir.j - 1);
        return dir;
    }
    dir.first_block = range(1, dir.i);
    dir.second_block = range(dir.i + 1, n + 1);
    return dir;
}

Subspace direction_subspace(const ParallelDirection& dir, int n) {
    const std::size_t dim = static_cast<std::size_t>(n) + 1;
    std::vector<RationalVector> gens;
    for (const auto* block : {&dir.first_block, &dir.second_block})
        for (std::size_t k = 1; k < block->size(); ++k) {
            gens.push_back(RationalVector::unit(dim, (*block)[k] - 1) - RationalVector::unit(dim, (*block)[0] - 1));
        }
    return Subspace::span(dim, gens);
}

}  // namespace assoc
