#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>

#include "assoc/cluster.hpp"

using namespace assoc;

namespace {

using R = AlmostPositiveRoot;

RationalVector q(std::initializer_list<Rational> v) { return RationalVector(v); }

}  // namespace

TEST_CASE("root keys round-trip") {
    for (int n = 1; n <= 4; ++n)
        for (const auto& r : almost_positive_roots(n)) CHECK(parse_root(to_string(r), n) == r);
    CHECK(to_string(R::positive(1, 3)) == "a1..3");
    CHECK(to_string(R::negative(2)) == "-a2");
    CHECK_THROWS_AS(parse_root("a3", 2), std::invalid_argument);
    CHECK_THROWS_AS(parse_root("b1", 2), std::invalid_argument);
    CHECK_THROWS_AS(parse_root("a2..1", 2), std::invalid_argument);
    CHECK_THROWS_AS(parse_root("-a1..2", 2), std::invalid_argument);
}

TEST_CASE("almost positive roots count n(n+3)/2") {
    for (int n = 1; n <= 6; ++n) CHECK(almost_positive_roots(n).size() == static_cast<std::size_t>(n * (n + 3) / 2));
}

TEST_CASE("root_coordinates") {
    CHECK(root_coordinates(R::simple(1), 2) == RationalVector::from_ints({1, -1, 0}));
    CHECK(root_coordinates(R::positive(1, 2), 2) == RationalVector::from_ints({1, 0, -1}));
    CHECK(root_coordinates(R::negative(2), 2) == RationalVector::from_ints({0, -1, 1}));
}

TEST_CASE("snake diagonals") {
    CHECK(snake_diagonal(1, 2) == Diagonal{1, 4});
    CHECK(snake_diagonal(2, 2) == Diagonal{1, 3});
    CHECK(snake_diagonal(1, 3) == Diagonal{1, 5});
    CHECK(snake_diagonal(2, 3) == Diagonal{1, 4});
    CHECK(snake_diagonal(3, 3) == Diagonal{2, 4});
    for (int n = 1; n <= 7; ++n) {
        std::vector<Diagonal> snake;
        for (int i = 1; i <= n; ++i) snake.push_back(snake_diagonal(i, n));
        CHECK_NOTHROW(Triangulation(n, snake));
    }
}

TEST_CASE("root_to_diagonal") {
    CHECK(root_to_diagonal(R::simple(1), 2) == Diagonal{0, 3});
    CHECK(root_to_diagonal(R::simple(2), 2) == Diagonal{2, 4});
    CHECK(root_to_diagonal(R::positive(1, 2), 2) == Diagonal{0, 2});
    CHECK(root_to_diagonal(R::negative(1), 2) == Diagonal{1, 4});
    for (int n = 1; n <= 6; ++n) {
        std::set<Diagonal> image;
        for (const auto& r : almost_positive_roots(n)) {
            const Diagonal d = root_to_diagonal(r, n);
            image.insert(d);
            CHECK(diagonal_to_root(d, n) == r);
            if (r.is_negative()) continue;
            // a positive root alpha_i..j crosses exactly the snake diagonals i..j
            for (int k = 1; k <= n; ++k) CHECK(crossing(d, snake_diagonal(k, n)) == (r.i <= k && k <= r.j));
        }
        CHECK(image.size() == all_diagonals(n).size());
    }
}

TEST_CASE("compatible") {
    CHECK(compatible(R::negative(1), R::negative(2), 2));
    CHECK(!compatible(R::simple(1), R::simple(2), 2));
    for (int n = 1; n <= 4; ++n)
        for (const auto& r : almost_positive_roots(n)) {
            CHECK(compatible(r, r, n));
            for (const auto& s : almost_positive_roots(n))
                CHECK(compatible(r, s, n) == !crossing(root_to_diagonal(r, n), root_to_diagonal(s, n)));
        }
}

TEST_CASE("all_clusters") {
    const std::set<std::set<R>> expected{{R::simple(1), R::positive(1, 2)},
                                         {R::simple(2), R::positive(1, 2)},
                                         {R::negative(1), R::simple(2)},
                                         {R::negative(1), R::negative(2)},
                                         {R::negative(2), R::simple(1)}};
    std::set<std::set<R>> found;
    for (const auto& c : all_clusters(2)) found.insert({c.roots.begin(), c.roots.end()});
    CHECK(found == expected);

    CHECK(all_clusters(3).size() == 14);
    for (int n = 1; n <= 5; ++n) {
        const auto clusters = all_clusters(n);
        CHECK(clusters.size() == all_triangulations(n).size());
        std::set<Triangulation> images;
        for (const auto& c : clusters) {
            std::vector<RationalVector> gens;
            for (const auto& r : c.roots) gens.push_back(root_coordinates(r, n));
            CHECK(rank(RationalMatrix(gens)) == static_cast<std::size_t>(n));
            images.insert(cluster_to_triangulation(c, n));
        }
        CHECK(images.size() == clusters.size());
    }
}

TEST_CASE("verify_fan") {
    const auto f1 = verify_fan(1);
    CHECK(f1.ok);
    CHECK(f1.cones == 2);
    const auto f2 = verify_fan(2);
    CHECK(f2.ok);
    CHECK(f2.cones == 5);
    CHECK(f2.walls == 5);
    const auto f3 = verify_fan(3);
    CHECK(f3.ok);
    CHECK(f3.cones == 14);
    CHECK(f3.walls == 21);
    CHECK(f3.samples >= 1000);
}

TEST_CASE("wall relations") {
    const Cluster a{{R::negative(1), R::negative(2)}};
    const Cluster b{{R::negative(1), R::simple(2)}};
    auto rel = wall_relation(a, b, 2);
    CHECK(rel.beta == R::negative(2));
    CHECK(rel.beta_prime == R::simple(2));
    CHECK(rel.lambda == 1);
    CHECK(rel.lambda_prime == 1);
    for (const auto& [root, c] : rel.coefficients) CHECK(c == 0);

    const Cluster c{{R::simple(1), R::positive(1, 2)}};
    const Cluster d{{R::positive(1, 2), R::simple(2)}};
    rel = wall_relation(c, d, 2);
    CHECK(rel.beta == R::simple(1));
    CHECK(rel.beta_prime == R::simple(2));
    CHECK(rel.lambda == 1);
    CHECK(rel.lambda_prime == 1);
    CHECK(rel.coefficients.at(R::positive(1, 2)) == 1);

    CHECK_THROWS_AS(wall_relation(a, c, 2), std::invalid_argument);
    const Cluster unsorted{{R::simple(2), R::positive(1, 2)}};
    CHECK(wall_relation(c, unsorted, 2).beta_prime == R::simple(2));

    for (int n = 2; n <= 4; ++n) {
        const auto clusters = all_clusters(n);
        for (auto [i, j] : cluster_walls(clusters)) {
            const auto r = wall_relation(clusters[i], clusters[j], n);
            CHECK(r.lambda_prime > 0);
            RationalVector lhs = r.lambda * root_coordinates(r.beta, n) + r.lambda_prime * root_coordinates(r.beta_prime, n);
            RationalVector rhs(static_cast<std::size_t>(n) + 1);
            for (const auto& [g, coef] : r.coefficients) rhs += coef * root_coordinates(g, n);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("wall counts follow the flip graph") {
    CHECK(cluster_walls(all_clusters(2)).size() == 5);
    CHECK(cluster_walls(all_clusters(3)).size() == 21);
    CHECK(cluster_walls(all_clusters(4)).size() == 84);
}

TEST_CASE("polytopality_check") {
    CHECK(polytopality_check(constant_support_values(2), 2));
    auto h = constant_support_values(2);
    h[R::positive(1, 2)] = 3;
    const auto bad = polytopality_check(h, 2);
    CHECK(!bad);
    CHECK(!bad.violations.empty());

    auto scaled = constant_support_values(2, Rational(7, 3));
    CHECK(polytopality_check(scaled, 2));
    for (auto& [r, v] : h) v *= Rational(5, 2);
    CHECK(!polytopality_check(h, 2));

    auto missing = constant_support_values(2);
    missing.erase(R::simple(1));
    CHECK_THROWS_AS(polytopality_check(missing, 2), std::invalid_argument);
}

TEST_CASE("constant support values fail from n = 3 on") {
    // Violation counts from an independent exact computation in rational arithmetic.
    CHECK(polytopality_check(constant_support_values(1), 1));
    CHECK(polytopality_check(constant_support_values(2), 2));
    CHECK(polytopality_check(constant_support_values(3), 3).violations.size() == 2);
    CHECK(polytopality_check(constant_support_values(4), 4).violations.size() == 14);
}

TEST_CASE("default support values are polytopal") {
    CHECK(default_support_values(2) == constant_support_values(2));
    for (int n = 1; n <= 5; ++n) CHECK(polytopality_check(default_support_values(n), n));
}

TEST_CASE("perturbed support values stay polytopal") {
    std::mt19937_64 rng(3);
    for (int n = 2; n <= 4; ++n) {
        const auto base = default_support_values(n);
        const auto h = perturbed_support_values(base, n, rng);
        CHECK(polytopality_check(h, n));
        CHECK(h != base);
        for (const auto& [r, v] : h) CHECK(denominator(v) <= 1000);
    }
}

TEST_CASE("cluster polytope for n = 2") {
    const auto p = build_cluster_polytope(constant_support_values(2), 2);
    const std::set<RationalVector> expected{
        q({Rational(2, 3), Rational(-1, 3), Rational(-1, 3)}), q({Rational(1, 3), Rational(1, 3), Rational(-2, 3)}),
        q({Rational(-1, 3), Rational(2, 3), Rational(-1, 3)}), q({Rational(-1), Rational(0), Rational(1)}),
        q({Rational(1, 3), Rational(-2, 3), Rational(1, 3)})};
    const auto coords = p.coordinates();
    CHECK(std::set<RationalVector>(coords.begin(), coords.end()) == expected);
}

TEST_CASE("cluster polytope vertices satisfy every inequality") {
    for (int n = 1; n <= 4; ++n) {
        const auto h = default_support_values(n);
        const auto p = build_cluster_polytope(h, n);
        CHECK(p.size() == all_triangulations(n).size());
        for (const auto& v : p.vertices()) {
            CHECK(v.coords.sum() == 0);
            std::size_t tight = 0;
            for (const auto& r : almost_positive_roots(n)) {
                const Rational value = dot(root_coordinates(r, n), v.coords);
                CHECK(value <= h.at(r));
                if (value == h.at(r)) {
                    ++tight;
                    CHECK(v.label.contains(root_to_diagonal(r, n)));
                }
            }
            CHECK(tight == static_cast<std::size_t>(n));
        }
    }
}

TEST_CASE("non-polytopal support values are rejected") {
    auto h = constant_support_values(2);
    h[R::positive(1, 2)] = 3;
    CHECK_THROWS_AS(build_cluster_polytope(h, 2), std::invalid_argument);
    CHECK_THROWS_AS(build_cluster_polytope(constant_support_values(3), 3), std::invalid_argument);
}
