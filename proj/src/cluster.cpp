#include "assoc/cluster.hpp"

#include <algorithm>
#include <charconv>
#include <iterator>
#include <map>
#include <optional>
#include <stdexcept>

namespace assoc {

std::string to_string(const AlmostPositiveRoot& r) {
    if (r.is_negative()) return "-a" + std::to_string(r.i);
    if (r.i == r.j) return "a" + std::to_string(r.i);
    return "a" + std::to_string(r.i) + ".." + std::to_string(r.j);
}

namespace {

int parse_index(std::string_view text, std::string_view key) {
    int value = 0;
    const auto* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (text.empty() || ec != std::errc() || ptr != end) {
        throw std::invalid_argument("malformed root key '" + std::string(key) + "'");
    }
    return value;
}

}  // namespace

AlmostPositiveRoot parse_root(std::string_view key, int n) {
    std::string_view rest = key;
    const bool negative = !rest.empty() && rest.front() == '-';
    if (negative) rest.remove_prefix(1);
    if (rest.empty() || rest.front() != 'a') throw std::invalid_argument("malformed root key '" + std::string(key) + "'");
    rest.remove_prefix(1);

    AlmostPositiveRoot r;
    if (negative) {
        r = AlmostPositiveRoot::negative(parse_index(rest, key));
    } else if (auto dots = rest.find(".."); dots != std::string_view::npos) {
        r = AlmostPositiveRoot::positive(parse_index(rest.substr(0, dots), key), parse_index(rest.substr(dots + 2), key));
    } else {
        r = AlmostPositiveRoot::simple(parse_index(rest, key));
    }
    if (r.i < 1 || r.j > n || r.i > r.j) {
        throw std::invalid_argument("root '" + std::string(key) + "' out of range for A" + std::to_string(n));
    }
    return r;
}

std::vector<AlmostPositiveRoot> almost_positive_roots(int n) {
    std::vector<AlmostPositiveRoot> out;
    for (int i = 1; i <= n; ++i) out.push_back(AlmostPositiveRoot::negative(i));
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j) out.push_back(AlmostPositiveRoot::positive(i, j));
    return out;
}

RationalVector root_coordinates(const AlmostPositiveRoot& r, int n) {
    RationalVector v(static_cast<std::size_t>(n) + 1);
    if (r.is_negative()) {
        v[r.i] = 1;
        v[r.i - 1] = -1;
    } else {
        v[r.i - 1] = 1;
        v[r.j] = -1;
    }
    return v;
}

Diagonal snake_diagonal(int i, int n) {
    if (i < 1 || i > n) throw std::invalid_argument("snake index out of range");
    return make_diagonal(n, (i + 1) / 2, n + 2 - i / 2);
}

Diagonal root_to_diagonal(const AlmostPositiveRoot& r, int n) {
    if (r.is_negative()) return snake_diagonal(r.i, n);
    std::vector<Diagonal> snake;
    for (int k = 1; k <= n; ++k) snake.push_back(snake_diagonal(k, n));
    std::vector<Diagonal> found;
    for (const auto& d : all_diagonals(n)) {
        bool match = true;
        for (int k = 1; k <= n && match; ++k) match = crossing(d, snake[k - 1]) == (r.i <= k && k <= r.j);
        if (match) found.push_back(d);
    }
    if (found.size() != 1) {
        throw std::logic_error("snake convention broken: " + std::to_string(found.size()) + " diagonals for root " +
                               to_string(r));
    }
    return found.front();
}

AlmostPositiveRoot diagonal_to_root(const Diagonal& d, int n) {
    for (const auto& r : almost_positive_roots(n))
        if (root_to_diagonal(r, n) == d) return r;
    throw std::logic_error("no root for diagonal " + to_string(d));
}

bool compatible(const AlmostPositiveRoot& r1, const AlmostPositiveRoot& r2, int n) {
    return !crossing(root_to_diagonal(r1, n), root_to_diagonal(r2, n));
}

// ---------------------------------------------------------------------------

namespace {

void extend_cliques(const std::vector<AlmostPositiveRoot>& roots, const std::vector<std::vector<bool>>& compat,
                    std::size_t next, std::size_t target, std::vector<std::size_t>& current,
                    std::vector<Cluster>& out) {
    if (current.size() == target) {
        Cluster c;
        for (auto k : current) c.roots.push_back(roots[k]);
        std::sort(c.roots.begin(), c.roots.end());
        out.push_back(std::move(c));
        return;
    }
    for (std::size_t k = next; k < roots.size(); ++k) {
        if (!std::all_of(current.begin(), current.end(), [&](std::size_t c) { return compat[c][k]; })) continue;
        current.push_back(k);
        extend_cliques(roots, compat, k + 1, target, current, out);
        current.pop_back();
    }
}

}  // namespace

std::vector<Cluster> all_clusters(int n) {
    if (n < 1) throw std::invalid_argument("all_clusters requires n >= 1");
    const auto roots = almost_positive_roots(n);
    std::vector<Diagonal> diag;
    for (const auto& r : roots) diag.push_back(root_to_diagonal(r, n));
    std::vector<std::vector<bool>> compat(roots.size(), std::vector<bool>(roots.size()));
    for (std::size_t a = 0; a < roots.size(); ++a)
        for (std::size_t b = 0; b < roots.size(); ++b) compat[a][b] = !crossing(diag[a], diag[b]);

    std::vector<Cluster> out;
    std::vector<std::size_t> current;
    extend_cliques(roots, compat, 0, static_cast<std::size_t>(n), current, out);
    std::sort(out.begin(), out.end());
    return out;
}

Triangulation cluster_to_triangulation(const Cluster& c, int n) {
    std::vector<Diagonal> ds;
    for (const auto& r : c.roots) ds.push_back(root_to_diagonal(r, n));
    return Triangulation(n, std::move(ds));
}

std::vector<std::pair<std::size_t, std::size_t>> cluster_walls(const std::vector<Cluster>& clusters) {
    std::map<std::vector<AlmostPositiveRoot>, std::vector<std::size_t>> by_facet;
    for (std::size_t c = 0; c < clusters.size(); ++c) {
        const auto& roots = clusters[c].roots;
        for (std::size_t drop = 0; drop < roots.size(); ++drop) {
            std::vector<AlmostPositiveRoot> rest;
            for (std::size_t k = 0; k < roots.size(); ++k)
                if (k != drop) rest.push_back(roots[k]);
            by_facet[rest].push_back(c);
        }
    }
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (const auto& [rest, owners] : by_facet)
        for (std::size_t a = 0; a < owners.size(); ++a)
            for (std::size_t b = a + 1; b < owners.size(); ++b)
                out.emplace_back(std::min(owners[a], owners[b]), std::max(owners[a], owners[b]));
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------

FanReport verify_fan(int n) {
    FanReport report;
    const auto clusters = all_clusters(n);
    report.cones = clusters.size();
    const std::size_t dim = static_cast<std::size_t>(n);

    // Sum-zero hyperplane identified with Q^n by dropping the last coordinate.
    auto project = [dim](const RationalVector& v) {
        RationalVector p(dim);
        for (std::size_t k = 0; k < dim; ++k) p[k] = v[k];
        return p;
    };

    std::vector<RationalMatrix> to_cone_coords;
    for (const auto& c : clusters) {
        std::vector<RationalVector> gens;
        for (const auto& r : c.roots) gens.push_back(project(root_coordinates(r, n)));
        auto inv = inverse(RationalMatrix::from_columns(gens));
        if (!inv) {
            report.failures.push_back("cluster with roots starting " + to_string(c.roots.front()) +
                                      " is linearly dependent");
            to_cone_coords.emplace_back(dim, dim);
            continue;
        }
        to_cone_coords.push_back(std::move(*inv));
    }

    std::map<std::vector<AlmostPositiveRoot>, std::size_t> owners;
    for (const auto& c : clusters)
        for (std::size_t drop = 0; drop < c.roots.size(); ++drop) {
            auto rest = c.roots;
            rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(drop));
            ++owners[rest];
        }
    report.walls = owners.size();
    std::vector<RationalVector> wall_normals;
    for (const auto& [rest, count] : owners) {
        if (count != 2) {
            report.failures.push_back("wall shared by " + std::to_string(count) + " cones");
        }
        if (rest.empty()) {
            wall_normals.push_back(RationalVector::unit(dim, 0));
            continue;
        }
        std::vector<RationalVector> rows;
        for (const auto& r : rest) rows.push_back(project(root_coordinates(r, n)));
        const auto normal = nullspace(RationalMatrix(rows));
        if (normal.size() != 1) {
            report.failures.push_back("wall generators are dependent");
            continue;
        }
        wall_normals.push_back(normal.front());
    }

    std::vector<RationalVector> samples;
    for (const auto& r : almost_positive_roots(n)) samples.push_back(root_coordinates(r, n));
    std::mt19937_64 rng(20110926);
    std::uniform_int_distribution<int> entry(-20, 20);
    while (samples.size() < 1000 + almost_positive_roots(n).size()) {
        RationalVector x(dim + 1);
        for (std::size_t k = 0; k <= dim; ++k) x[k] = entry(rng);
        const Rational mean = x.sum() / Rational(static_cast<long>(dim + 1));
        for (std::size_t k = 0; k <= dim; ++k) x[k] -= mean;
        if (!x.is_zero()) samples.push_back(std::move(x));
    }

    for (const auto& x : samples) {
        const RationalVector px = project(x);
        const bool generic = std::all_of(wall_normals.begin(), wall_normals.end(),
                                         [&](const RationalVector& w) { return dot(w, px) != 0; });
        std::size_t containing = 0;
        std::size_t interior = 0;
        for (const auto& m : to_cone_coords) {
            const RationalVector c = m * px;
            const bool in = std::all_of(c.begin(), c.end(), [](const Rational& q) { return q >= 0; });
            const bool strictly = std::all_of(c.begin(), c.end(), [](const Rational& q) { return q > 0; });
            containing += in;
            interior += strictly;
        }
        ++report.samples;
        if (containing == 0) {
            report.failures.push_back("direction " + to_string(x) + " lies in no cone");
        } else if (generic) {
            ++report.generic_samples;
            if (interior != 1 || containing != 1) {
                report.failures.push_back("generic direction " + to_string(x) + " lies in " +
                                          std::to_string(containing) + " cones");
            }
        }
    }
    report.ok = report.failures.empty();
    return report;
}

WallRelation wall_relation(const Cluster& c1, const Cluster& c2, int n) {
    auto r1 = c1.roots;
    auto r2 = c2.roots;
    std::sort(r1.begin(), r1.end());
    std::sort(r2.begin(), r2.end());
    std::vector<AlmostPositiveRoot> shared, only1, only2;
    std::set_intersection(r1.begin(), r1.end(), r2.begin(), r2.end(), std::back_inserter(shared));
    std::set_difference(r1.begin(), r1.end(), shared.begin(), shared.end(), std::back_inserter(only1));
    std::set_difference(r2.begin(), r2.end(), shared.begin(), shared.end(), std::back_inserter(only2));
    if (only1.size() != 1 || only2.size() != 1) throw std::invalid_argument("wall_relation: clusters are not adjacent");

    std::vector<RationalVector> cols{root_coordinates(only1[0], n), root_coordinates(only2[0], n)};
    for (const auto& g : shared) cols.push_back(root_coordinates(g, n));
    const auto kernel = nullspace(RationalMatrix::from_columns(cols));
    if (kernel.size() != 1 || kernel[0][0] == 0) throw std::logic_error("wall_relation: degenerate wall");
    const RationalVector x = Rational(1) / kernel[0][0] * kernel[0];

    WallRelation rel{only1[0], only2[0], 1, x[1], {}};
    if (rel.lambda_prime <= 0) throw std::logic_error("wall_relation: exchanged roots on the same side of the wall");
    for (std::size_t k = 0; k < shared.size(); ++k) rel.coefficients[shared[k]] = -x[2 + k];
    return rel;
}

namespace {

struct FanWalls {
    std::vector<Cluster> clusters;
    std::vector<std::pair<std::size_t, std::size_t>> walls;
    std::vector<WallRelation> relations;
};

FanWalls fan_walls(int n) {
    FanWalls fw;
    fw.clusters = all_clusters(n);
    fw.walls = cluster_walls(fw.clusters);
    for (const auto& [a, b] : fw.walls) fw.relations.push_back(wall_relation(fw.clusters[a], fw.clusters[b], n));
    return fw;
}

void require_complete(const SupportValues& h, int n) {
    for (const auto& r : almost_positive_roots(n))
        if (!h.count(r)) throw std::invalid_argument("support value missing for root " + to_string(r));
    if (h.size() != almost_positive_roots(n).size()) throw std::invalid_argument("support values for unknown roots");
}

PolytopalityResult check_walls(const FanWalls& fw, const SupportValues& h) {
    PolytopalityResult result;
    for (std::size_t w = 0; w < fw.walls.size(); ++w) {
        const auto& rel = fw.relations[w];
        Rational lhs = rel.lambda * h.at(rel.beta) + rel.lambda_prime * h.at(rel.beta_prime);
        Rational rhs = 0;
        for (const auto& [g, c] : rel.coefficients) rhs += c * h.at(g);
        if (!(lhs > rhs)) {
            result.violations.push_back({fw.clusters[fw.walls[w].first], fw.clusters[fw.walls[w].second],
                                         std::move(lhs), std::move(rhs)});
        }
    }
    result.ok = result.violations.empty();
    return result;
}

}  // namespace

PolytopalityResult polytopality_check(const SupportValues& h, int n) {
    require_complete(h, n);
    return check_walls(fan_walls(n), h);
}

SupportValues constant_support_values(int n, const Rational& value) {
    SupportValues h;
    for (const auto& r : almost_positive_roots(n)) h[r] = value;
    return h;
}

SupportValues default_support_values(int n) {
    const FanWalls fw = fan_walls(n);
    SupportValues h = constant_support_values(n);

    // deficit[w] = rhs - lhs; wall w is violated while deficit[w] >= 0.
    std::vector<Rational> deficit(fw.walls.size());
    std::map<AlmostPositiveRoot, std::vector<std::pair<std::size_t, Rational>>> incidence;
    for (std::size_t w = 0; w < fw.walls.size(); ++w) {
        const auto& rel = fw.relations[w];
        incidence[rel.beta].push_back({w, -rel.lambda});
        incidence[rel.beta_prime].push_back({w, -rel.lambda_prime});
        deficit[w] = -rel.lambda * h.at(rel.beta) - rel.lambda_prime * h.at(rel.beta_prime);
        for (const auto& [g, c] : rel.coefficients) {
            incidence[g].push_back({w, c});
            deficit[w] += c * h.at(g);
        }
    }

    const std::size_t rounds = 10 * fw.walls.size();
    for (std::size_t round = 0; round <= rounds; ++round) {
        std::optional<std::size_t> worst;
        for (std::size_t w = 0; w < deficit.size(); ++w)
            if (deficit[w] >= 0 && (!worst || deficit[w] > deficit[*worst])) worst = w;
        if (!worst) return h;
        const auto& rel = fw.relations[*worst];
        const Rational bump = deficit[*worst] + 1;
        for (const auto& root : {rel.beta, rel.beta_prime}) {
            h[root] += bump;
            for (const auto& [wall, weight] : incidence[root]) deficit[wall] += weight * bump;
        }
    }
    throw std::runtime_error("no support values found for A" + std::to_string(n));
}

SupportValues perturbed_support_values(const SupportValues& base, int n, std::mt19937_64& rng) {
    require_complete(base, n);
    const FanWalls fw = fan_walls(n);
    if (!check_walls(fw, base)) throw std::invalid_argument("perturbed_support_values: base is not polytopal");
    std::uniform_int_distribution<long> den_dist(1, 1000);
    Rational scale = 1;
    for (int attempt = 0; attempt < 64; ++attempt, scale /= 2) {
        SupportValues h = base;
        for (auto& [r, value] : h) {
            const long q = den_dist(rng);
            std::uniform_int_distribution<long> num_dist(-q / 2, q / 2);
            value += scale * Rational(num_dist(rng), q);
        }
        if (check_walls(fw, h)) return h;
    }
    throw std::runtime_error("perturbed_support_values: no valid perturbation found");
}

LabeledPolytope build_cluster_polytope(const SupportValues& h, int n) {
    if (n < 1) throw std::invalid_argument("cluster polytope requires n >= 1");
    require_complete(h, n);
    const FanWalls fw = fan_walls(n);
    if (auto check = check_walls(fw, h); !check) {
        const auto& v = check.violations.front();
        throw std::invalid_argument("support values are not polytopal: wall between clusters " +
                                    to_string(cluster_to_triangulation(v.first, n)) + " and " +
                                    to_string(cluster_to_triangulation(v.second, n)) + " has " + to_string(v.lhs) +
                                    " <= " + to_string(v.rhs));
    }

    const auto roots = almost_positive_roots(n);
    std::vector<LabeledVertex> vertices;
    for (const auto& c : fw.clusters) {
        std::vector<RationalVector> rows;
        RationalVector rhs(static_cast<std::size_t>(n) + 1);
        for (std::size_t k = 0; k < c.roots.size(); ++k) {
            rows.push_back(root_coordinates(c.roots[k], n));
            rhs[k] = h.at(c.roots[k]);
        }
        rows.emplace_back(std::vector<Rational>(static_cast<std::size_t>(n) + 1, Rational(1)));
        auto sol = solve_linear(RationalMatrix(rows), rhs);
        if (sol.status != SolveStatus::unique) throw std::logic_error("cluster vertex system is singular");

        for (const auto& r : roots) {
            if (std::binary_search(c.roots.begin(), c.roots.end(), r)) continue;
            if (!(dot(root_coordinates(r, n), *sol.x) < h.at(r))) {
                throw std::logic_error("cluster vertex " + to_string(*sol.x) + " violates inequality of root " +
                                       to_string(r));
            }
        }
        vertices.push_back({std::move(*sol.x), cluster_to_triangulation(c, n)});
    }
    return LabeledPolytope(Construction::cluster, n, std::move(vertices));
}

}  // namespace assoc
