#include "assoc/verify.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "assoc/analysis.hpp"
#include "assoc/cluster.hpp"
#include "assoc/io.hpp"
#include "assoc/minkowski.hpp"
#include "assoc/secondary.hpp"

namespace assoc {

using nlohmann::json;

std::vector<CheckSpec> default_manifest() {
    return {
        {"vertex_counts", "vertices of every construction = Catalan(n+1)", 1, 6, 0},
        {"facet_counts", "n(n+3)/2 certified facets of dimension n-1, simple, complete", 1, 6, 0},
        {"secondary_no_parallel", "secondary polytope has no parallel facets", 2, 6, 3},
        {"cluster_parallel_pairs", "cluster polytope: parallel pairs are exactly {alpha_i, -alpha_i}", 2, 6, 3},
        {"minkowski_parallel_pairs", "Minkowski sum: parallel pairs are exactly ({n+2,i},{0,i+1})", 2, 6, 3},
        {"face_correspondence", "functional-to-subdivision map is an order-preserving bijection", 1, 6, 0},
        {"cluster_fan", "clusters span a complete simplicial fan", 1, 6, 0},
        {"special_facets", "special-facet counts and intersection profiles", 2, 6, 3},
        {"affine_non_equivalence", "the three constructions are pairwise affinely non-equivalent", 2, 6, 3},
        {"loday_regression", "a = 1 reproduces Loday's vertices", 1, 2, 0},
        {"exactness_invariance", "exact coordinate sums and affine invariance of parallel pairs", 1, 6, 3},
    };
}

std::vector<CheckSpec> manifest_from_json(const json& j) {
    if (!j.is_object() || !j.contains("checks") || !j.at("checks").is_array()) {
        throw std::invalid_argument("manifest must be {\"checks\": [...]}");
    }
    const auto defaults = default_manifest();
    std::vector<CheckSpec> out;
    for (const auto& entry : j.at("checks")) {
        if (!entry.is_object() || !entry.contains("id") || !entry.at("id").is_string()) {
            throw std::invalid_argument("manifest entry needs a string 'id'");
        }
        const auto id = entry.at("id").get<std::string>();
        auto it = std::find_if(defaults.begin(), defaults.end(), [&](const CheckSpec& c) { return c.id == id; });
        if (it == defaults.end()) throw std::invalid_argument("unknown check id '" + id + "'");
        CheckSpec spec = *it;
        if (entry.contains("n_min")) spec.n_min = entry.at("n_min").get<int>();
        if (entry.contains("n_max")) spec.n_max = entry.at("n_max").get<int>();
        if (entry.contains("draws")) spec.draws = entry.at("draws").get<int>();
        if (spec.n_min < 1 || spec.draws < 0) throw std::invalid_argument("manifest entry '" + id + "' out of range");
        out.push_back(std::move(spec));
    }
    return out;
}

namespace {

struct CheckFailure {
    json counterexample;
};

[[noreturn]] void fail(json counterexample) { throw CheckFailure{std::move(counterexample)}; }

std::uint64_t fnv1a(const std::string& text) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

using PairSet = std::set<std::pair<Diagonal, Diagonal>>;

PairSet normalized(const std::vector<DiagonalPair>& pairs) {
    PairSet out;
    for (auto [a, b] : pairs) out.insert(a < b ? std::make_pair(a, b) : std::make_pair(b, a));
    return out;
}

json pairs_json(const PairSet& pairs) {
    json out = json::array();
    for (const auto& [a, b] : pairs) out.push_back(json::array({io::to_json(a), io::to_json(b)}));
    return out;
}

/// Default and seeded parameter sets for one n.
struct Draws {
    std::vector<PolygonGeometry> geometries;
    std::vector<SupportValues> support;
    std::vector<SimplexWeights> weights;
};

Draws make_draws(int n, int count, std::mt19937_64& rng) {
    Draws d;
    d.geometries.push_back(parabola_geometry(n));
    d.support.push_back(default_support_values(n));
    d.weights.push_back(uniform_weights(n));
    for (int k = 0; k < count; ++k) {
        d.geometries.push_back(random_convex_geometry(n, rng));
        d.support.push_back(perturbed_support_values(d.support.front(), n, rng));
        d.weights.push_back(random_weights(n, rng));
    }
    return d;
}

std::vector<LabeledPolytope> default_polytopes(int n) {
    return {build_secondary(parabola_geometry(n)), build_cluster_polytope(default_support_values(n), n),
            build_minkowski(uniform_weights(n))};
}

using CheckFn = std::string (*)(int n_lo, int n_hi, int draws, std::mt19937_64& rng);

std::string check_vertex_counts(int lo, int hi, int, std::mt19937_64&) {
    std::string counts;
    for (int n = lo; n <= hi; ++n) {
        for (const auto& p : default_polytopes(n)) {
            if (p.size() != catalan(n + 1)) {
                fail({{"construction", to_string(p.construction())}, {"n", n}, {"vertices", p.size()},
                      {"expected", catalan(n + 1)}});
            }
        }
        counts += (counts.empty() ? "" : ",") + std::to_string(catalan(n + 1));
    }
    return "Catalan counts " + counts;
}

std::string check_facet_counts(int lo, int hi, int, std::mt19937_64&) {
    for (int n = lo; n <= hi; ++n) {
        for (const auto& p : default_polytopes(n)) {
            std::vector<FacetDescriptor> facets;
            try {
                facets = extract_facets(p);
            } catch (const CertificationError& e) {
                fail({{"construction", to_string(p.construction())}, {"n", n}, {"error", e.what()}});
            }
            const auto fs = face_structure(p, facets);
            if (facets.size() != static_cast<std::size_t>(n * (n + 3) / 2) || !fs.simple || !fs.facets_complete ||
                !fs.vertices_certified) {
                fail({{"construction", to_string(p.construction())}, {"n", n}, {"facets", facets.size()},
                      {"problems", fs.problems}});
            }
        }
    }
    return "facets = n(n+3)/2, all certified";
}

std::string check_secondary_no_parallel(int lo, int hi, int draws, std::mt19937_64& rng) {
    std::size_t tested = 0;
    for (int n = lo; n <= hi; ++n) {
        const Draws d = make_draws(n, draws, rng);
        for (const auto& g : d.geometries) {
            const auto pairs = parallel_pairs(build_secondary(g));
            ++tested;
            if (!pairs.empty()) fail({{"n", n}, {"geometry", io::to_json(g)}, {"pairs", pairs_json(normalized(pairs))}});
        }
    }
    return std::to_string(tested) + " geometries, no parallel facets";
}

std::string check_cluster_parallel_pairs(int lo, int hi, int draws, std::mt19937_64& rng) {
    std::size_t tested = 0;
    for (int n = lo; n <= hi; ++n) {
        PairSet expected;
        for (int i = 1; i <= n; ++i) {
            auto a = root_to_diagonal(AlmostPositiveRoot::simple(i), n);
            auto b = root_to_diagonal(AlmostPositiveRoot::negative(i), n);
            if (b < a) std::swap(a, b);
            expected.insert({a, b});
        }
        const Draws d = make_draws(n, draws, rng);
        for (const auto& h : d.support) {
            const auto found = normalized(parallel_pairs(build_cluster_polytope(h, n)));
            ++tested;
            if (found != expected) {
                fail({{"n", n}, {"support_values", io::to_json(h, n)}, {"found", pairs_json(found)},
                      {"expected", pairs_json(expected)}});
            }
        }
    }
    return std::to_string(tested) + " support-value sets, n pairs each";
}

std::string check_minkowski_parallel_pairs(int lo, int hi, int draws, std::mt19937_64& rng) {
    std::size_t tested = 0;
    for (int n = lo; n <= hi; ++n) {
        PairSet expected;
        for (int i = 1; i <= n; ++i) expected.insert({make_diagonal(n, 0, i + 1), make_diagonal(n, i, n + 2)});
        const Draws d = make_draws(n, draws, rng);
        for (const auto& a : d.weights) {
            const auto p = build_minkowski(a);
            const auto facets = extract_facets(p);
            const auto found = normalized(parallel_pairs(facets));
            ++tested;
            if (found != expected) {
                fail({{"n", n}, {"weights", io::to_json(a)}, {"found", pairs_json(found)},
                      {"expected", pairs_json(expected)}});
            }
            for (const auto& f : facets) {
                const Subspace want = direction_subspace(expected_parallel_direction(f.diagonal, n), n);
                if (f.direction != want) {
                    fail({{"n", n}, {"weights", io::to_json(a)}, {"diagonal", io::to_json(f.diagonal)},
                          {"error", "facet direction differs from the two-simplex span"}});
                }
            }
        }
    }
    return std::to_string(tested) + " weight sets, n pairs each, directions match";
}

std::string check_face_correspondence(int lo, int hi, int, std::mt19937_64&) {
    std::string summary;
    for (int n = lo; n <= hi; ++n) {
        const auto report = verify_correspondence(build_minkowski(uniform_weights(n)));
        if (!report.ok) fail({{"n", n}, {"failures", report.failures}});
        const auto counts = subdivision_counts_by_size(n);
        for (const auto& p : default_polytopes(n)) {
            const auto facets = extract_facets(p);
            const auto fs = face_structure(p, facets);
            if (p.size() != counts[n] || fs.edges.size() != counts[n - 1] || facets.size() != counts[1]) {
                fail({{"n", n}, {"construction", to_string(p.construction())},
                      {"f_vector", {p.size(), fs.edges.size(), facets.size()}}});
            }
        }
        std::size_t total = 0;
        for (auto c : counts) total += c;
        summary += (summary.empty() ? "" : "; ") + std::string("n=") + std::to_string(n) + ": " +
                   std::to_string(report.vertices) + "/" + std::to_string(report.edges) + "/" +
                   std::to_string(report.facets) + ", " + std::to_string(total) + " subdivisions";
    }
    return summary;
}

std::string check_cluster_fan(int lo, int hi, int, std::mt19937_64&) {
    std::string summary;
    for (int n = lo; n <= hi; ++n) {
        const auto report = verify_fan(n);
        if (!report.ok) fail({{"n", n}, {"failures", report.failures}});
        summary += (summary.empty() ? "" : "; ") + std::string("n=") + std::to_string(n) + ": " +
                   std::to_string(report.cones) + " cones, " + std::to_string(report.walls) + " walls";
    }
    return summary;
}

std::string check_special_facets(int lo, int hi, int draws, std::mt19937_64& rng) {
    for (int n = lo; n <= hi; ++n) {
        const Draws d = make_draws(n, draws, rng);
        const std::set<Diagonal> minkowski_low{make_diagonal(n, 1, n + 2), make_diagonal(n, 0, n + 1)};
        for (const auto& a : d.weights) {
            const auto profile = special_profile(extract_facets(build_minkowski(a)));
            std::set<Diagonal> low;
            for (const auto& [diag, count] : profile)
                if (count <= static_cast<std::size_t>(n - 1)) low.insert(diag);
            bool exact = low == minkowski_low;
            for (const auto& diag : low) exact = exact && profile.at(diag) == static_cast<std::size_t>(n - 1);
            if (profile.size() != static_cast<std::size_t>(2 * n) || !exact) {
                fail({{"n", n}, {"construction", "minkowski"}, {"weights", io::to_json(a)},
                      {"special_facets", profile.size()}});
            }
        }
        const Diagonal alpha2 = n >= 2 ? root_to_diagonal(AlmostPositiveRoot::simple(2), n) : Diagonal{};
        for (const auto& h : d.support) {
            const auto profile = special_profile(extract_facets(build_cluster_polytope(h, n)));
            bool ok = profile.size() == static_cast<std::size_t>(2 * n);
            std::vector<Diagonal> at_threshold;
            for (const auto& [diag, count] : profile) {
                if (count < static_cast<std::size_t>(n - 1)) ok = false;
                if (count == static_cast<std::size_t>(n - 1)) at_threshold.push_back(diag);
            }
            if (n == 3) ok = ok && at_threshold == std::vector<Diagonal>{alpha2};
            if (n >= 4) ok = ok && at_threshold.empty();
            if (!ok) fail({{"n", n}, {"construction", "cluster"}, {"support_values", io::to_json(h, n)}});
        }
    }
    return "2n special facets; Minkowski {n+2,1},{0,n+1} at n-1; cluster profile as claimed";
}

std::string check_affine_non_equivalence(int lo, int hi, int draws, std::mt19937_64& rng) {
    std::size_t comparisons = 0;
    double slowest = 0;
    for (int n = lo; n <= hi; ++n) {
        const Draws d = make_draws(n, draws, rng);
        for (std::size_t k = 0; k < d.geometries.size(); ++k) {
            const auto sec = build_secondary(d.geometries[k]);
            const auto clu = build_cluster_polytope(d.support[k], n);
            const auto mink = build_minkowski(d.weights[k]);
            std::vector<std::pair<const LabeledPolytope*, const LabeledPolytope*>> pairs{{&sec, &clu}, {&sec, &mink}};
            if (n >= 3) pairs.emplace_back(&clu, &mink);
            for (const auto& [p, q] : pairs) {
                const auto start = std::chrono::steady_clock::now();
                const auto report = equivalence_search(*p, *q);
                const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
                slowest = std::max(slowest, secs);
                ++comparisons;
                if (report.verdict != Verdict::non_equivalent || !report.any_obstruction() || report.witness ||
                    report.relabelings_tried != static_cast<std::size_t>(2 * (n + 3)) || secs >= 30.0) {
                    fail(io::to_json(report));
                }
            }
        }
    }
    std::ostringstream out;
    out << comparisons << " comparisons non-equivalent, slowest " << std::fixed;
    out.precision(2);
    out << slowest << " s";
    return out.str();
}

std::string check_loday_regression(int lo, int hi, int, std::mt19937_64&) {
    const std::map<int, std::set<RationalVector>> expected{
        {1, {RationalVector::from_ints({2, 1}), RationalVector::from_ints({1, 2})}},
        {2,
         {RationalVector::from_ints({3, 2, 1}), RationalVector::from_ints({3, 1, 2}),
          RationalVector::from_ints({2, 1, 3}), RationalVector::from_ints({1, 2, 3}),
          RationalVector::from_ints({1, 4, 1})}}};
    for (int n = lo; n <= hi; ++n) {
        auto it = expected.find(n);
        if (it == expected.end()) continue;
        const auto coords = build_minkowski(uniform_weights(n)).coordinates();
        const std::set<RationalVector> found(coords.begin(), coords.end());
        if (found != it->second) {
            json got = json::array();
            for (const auto& v : found) got.push_back(io::to_json(v));
            fail({{"n", n}, {"vertices", got}});
        }
    }
    return "vertex sets match";
}

std::string check_exactness_invariance(int lo, int hi, int draws, std::mt19937_64& rng) {
    for (int n = lo; n <= hi; ++n) {
        const Draws d = make_draws(n, draws, rng);
        for (const auto& g : d.geometries) {
            const Rational target = 3 * polygon_area(g);
            for (const auto& t : all_triangulations(n))
                if (gkz_vector(g, t).sum() != target) fail({{"n", n}, {"geometry", io::to_json(g)}});
        }
        for (const auto& a : d.weights) {
            const auto p = build_minkowski(a);
            for (const auto& v : p.vertices())
                if (v.coords.sum() != a.total()) fail({{"n", n}, {"weights", io::to_json(a)}});
        }
        if (n < 2) continue;
        for (const auto& p : default_polytopes(n)) {
            const std::size_t dim = p.ambient_dim();
            AffineMap shear = AffineMap::identity(dim);
            for (std::size_t k = 0; k + 1 < dim; ++k) shear.matrix(k, k + 1) = Rational(1, 2);
            for (std::size_t k = 0; k < dim; ++k) shear.translation[k] = Rational(static_cast<long>(k) + 1, 3);
            if (normalized(parallel_pairs(p)) != normalized(parallel_pairs(transform(p, shear)))) {
                fail({{"n", n}, {"construction", to_string(p.construction())},
                      {"error", "parallel pairs changed under shear"}});
            }
        }
    }
    return "GKZ sums = 3 area, Minkowski sums = total weight, pairs shear-invariant";
}

const std::map<std::string, CheckFn>& registry() {
    static const std::map<std::string, CheckFn> checks{
        {"vertex_counts", check_vertex_counts},
        {"facet_counts", check_facet_counts},
        {"secondary_no_parallel", check_secondary_no_parallel},
        {"cluster_parallel_pairs", check_cluster_parallel_pairs},
        {"minkowski_parallel_pairs", check_minkowski_parallel_pairs},
        {"face_correspondence", check_face_correspondence},
        {"cluster_fan", check_cluster_fan},
        {"special_facets", check_special_facets},
        {"affine_non_equivalence", check_affine_non_equivalence},
        {"loday_regression", check_loday_regression},
        {"exactness_invariance", check_exactness_invariance},
    };
    return checks;
}

}  // namespace

std::vector<CheckOutcome> run_manifest(const std::vector<CheckSpec>& manifest, int cap, std::uint64_t seed) {
    std::vector<CheckOutcome> outcomes;
    for (const auto& spec : manifest) {
        CheckOutcome out{spec.id, spec.target, spec.n_min, std::min(spec.n_max, cap), false, false, {}, nullptr, 0};
        if (out.n_min > out.n_max) {
            out.passed = true;
            out.skipped = true;
            out.detail = "n range empty below the cap";
            outcomes.push_back(std::move(out));
            continue;
        }
        std::mt19937_64 rng(seed ^ fnv1a(spec.id));
        const auto start = std::chrono::steady_clock::now();
        try {
            out.detail = registry().at(spec.id)(out.n_min, out.n_max, spec.draws, rng);
            out.passed = true;
        } catch (const CheckFailure& f) {
            out.counterexample = f.counterexample;
            out.detail = "counterexample found";
        } catch (const std::exception& e) {
            out.counterexample = {{"error", e.what()}};
            out.detail = e.what();
        }
        out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        outcomes.push_back(std::move(out));
    }
    return outcomes;
}

std::string format_outcome(const CheckOutcome& o) {
    std::ostringstream line;
    line << (o.skipped ? "SKIP" : o.passed ? "PASS" : "FAIL") << "  " << o.id << "  n=" << o.n_min << ".."
         << o.n_max << "  [" << o.target << "]  " << o.detail;
    return line.str();
}

}  // namespace assoc
