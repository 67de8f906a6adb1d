#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "assoc/minkowski.hpp"

using namespace assoc;

namespace {

// Vertex set of the sum of simplices, scanning orderings without the library.
std::set<RationalVector> scan_vertices(const SimplexWeights& a) {
    const int dim = a.n + 1;
    std::vector<int> w(dim);
    std::iota(w.begin(), w.end(), 1);
    std::set<RationalVector> out;
    do {
        RationalVector v(static_cast<std::size_t>(dim));
        for (const auto& [key, weight] : a.a) {
            int best = key.first;
            for (int k = key.first; k <= key.second; ++k)
                if (w[k - 1] > w[best - 1]) best = k;
            v[best - 1] += weight;
        }
        out.insert(v);
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

}  // namespace

TEST_CASE("weights validation") {
    auto a = uniform_weights(2);
    CHECK_NOTHROW(a.validate());
    CHECK(a.a.size() == 6);
    CHECK(a.total() == 6);
    a.a[{1, 1}] = -1;
    CHECK_THROWS_AS(a.validate(), std::invalid_argument);
    a.a[{1, 1}] = 0;
    CHECK_THROWS_AS(build_minkowski(a), std::invalid_argument);
    auto missing = uniform_weights(2);
    missing.a.erase({2, 3});
    CHECK_THROWS_AS(missing.validate(), std::invalid_argument);
}

TEST_CASE("random weights are positive with bounded denominators") {
    std::mt19937_64 rng(9);
    const auto a = random_weights(4, rng);
    CHECK_NOTHROW(a.validate());
    for (const auto& [key, v] : a.a) {
        CHECK(v > 0);
        CHECK(v <= 3);
        CHECK(denominator(v) <= 1000);
    }
}

TEST_CASE("subdivision_from_functional") {
    CHECK(subdivision_from_functional(RationalVector::from_ints({1, 1, 1}), 2).size() == 0);
    CHECK(subdivision_from_functional(RationalVector::from_ints({3, 2, 1}), 2) == Subdivision(2, {{1, 4}, {2, 4}}));
    CHECK(subdivision_from_functional(RationalVector::from_ints({1, 2, 1}), 2) == Subdivision(2, {{0, 2}, {2, 4}}));
    CHECK_THROWS_AS(subdivision_from_functional(RationalVector::from_ints({1, 2}), 2), std::invalid_argument);
}

TEST_CASE("generic functionals give triangulations") {
    for (int n = 1; n <= 5; ++n) {
        std::vector<int> w(static_cast<std::size_t>(n) + 1);
        std::iota(w.begin(), w.end(), 1);
        do {
            RationalVector f(w.size());
            for (std::size_t k = 0; k < w.size(); ++k) f[k] = w[k];
            CHECK(subdivision_from_functional(f, n).is_triangulation());
        } while (std::next_permutation(w.begin(), w.end()));
    }
}

TEST_CASE("summand_max_vertex") {
    const auto w = RationalVector::from_ints({3, 2, 1});
    CHECK(summand_max_vertex(w, 1, 3) == 1);
    CHECK(summand_max_vertex(w, 2, 3) == 2);
    const auto u = RationalVector::from_ints({1, 2, 1});
    CHECK(summand_max_vertex(u, 1, 3) == 2);
    CHECK(summand_max_vertex(u, 1, 1) == 1);
    CHECK_THROWS_AS(summand_max_vertex(RationalVector::from_ints({2, 2, 1}), 1, 2), std::invalid_argument);
}

TEST_CASE("Loday vertices") {
    const auto p1 = build_minkowski(uniform_weights(1));
    const auto c1 = p1.coordinates();
    CHECK(std::set<RationalVector>(c1.begin(), c1.end()) ==
          std::set<RationalVector>{RationalVector::from_ints({2, 1}), RationalVector::from_ints({1, 2})});

    const auto p2 = build_minkowski(uniform_weights(2));
    const auto c2 = p2.coordinates();
    const std::set<RationalVector> expected{RationalVector::from_ints({3, 2, 1}), RationalVector::from_ints({3, 1, 2}),
                                            RationalVector::from_ints({2, 1, 3}), RationalVector::from_ints({1, 2, 3}),
                                            RationalVector::from_ints({1, 4, 1})};
    CHECK(std::set<RationalVector>(c2.begin(), c2.end()) == expected);
}

TEST_CASE("vertices agree with an ordering scan") {
    std::mt19937_64 rng(21);
    for (int n = 1; n <= 5; ++n) {
        for (const auto& a : {uniform_weights(n), random_weights(n, rng)}) {
            const auto p = build_minkowski(a);
            const auto coords = p.coordinates();
            CHECK(std::set<RationalVector>(coords.begin(), coords.end()) == scan_vertices(a));
            CHECK(p.size() == all_triangulations(n).size());
            for (const auto& c : coords) CHECK(c.sum() == a.total());
        }
    }
}

TEST_CASE("doubling the weights doubles the vertices") {
    std::mt19937_64 rng(4);
    auto a = random_weights(3, rng);
    auto b = a;
    for (auto& [key, v] : b.a) v *= 2;
    const auto p = build_minkowski(a);
    const auto q = build_minkowski(b);
    for (std::size_t i = 0; i < p.size(); ++i) {
        CHECK(p.vertex(i).label == q.vertex(i).label);
        CHECK(q.vertex(i).coords == Rational(2) * p.vertex(i).coords);
    }
}

TEST_CASE("verify_correspondence") {
    const auto r1 = verify_correspondence(build_minkowski(uniform_weights(1)));
    CHECK(r1.ok);
    CHECK(r1.vertices == 2);
    CHECK(r1.edges == 1);
    const auto r2 = verify_correspondence(build_minkowski(uniform_weights(2)));
    CHECK(r2.ok);
    CHECK(r2.vertices == 5);
    CHECK(r2.edges == 5);
    const auto r3 = verify_correspondence(build_minkowski(uniform_weights(3)));
    CHECK(r3.ok);
    CHECK(r3.vertices == 14);
    CHECK(r3.edges == 21);
    CHECK(r3.facets == 9);
    std::mt19937_64 rng(8);
    const auto r4 = verify_correspondence(build_minkowski(random_weights(4, rng)));
    CHECK(r4.ok);
    for (const auto& f : r4.failures) MESSAGE(f);
}

TEST_CASE("expected_parallel_direction") {
    const auto a = expected_parallel_direction({2, 5}, 3);
    CHECK(a.diagonal_class == 1);
    CHECK(a.i == 2);
    CHECK(a.first_block == std::vector<int>{1, 2});
    CHECK(a.second_block == std::vector<int>{3, 4});

    const auto b = expected_parallel_direction({0, 3}, 3);
    CHECK(b.diagonal_class == 2);
    CHECK(b.i == 2);
    CHECK(direction_subspace(a, 3) == direction_subspace(b, 3));

    const auto c = expected_parallel_direction({1, 3}, 3);
    CHECK(c.diagonal_class == 3);
    CHECK(c.second_block == std::vector<int>{2});
    CHECK(direction_subspace(c, 3).dim() == 2);
}

TEST_CASE("facet directions are spanned by two simplices") {
    const auto d = direction_subspace(expected_parallel_direction({2, 5}, 3), 3);
    CHECK(d.dim() == 2);
    CHECK(d.contains(RationalVector::from_ints({1, -1, 0, 0})));
    CHECK(d.contains(RationalVector::from_ints({0, 0, 1, -1})));
    CHECK(!d.contains(RationalVector::from_ints({0, 1, -1, 0})));
}
