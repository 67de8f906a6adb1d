#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "assoc/polygon.hpp"

using namespace assoc;

namespace {

// Polygon vertex k drawn at (k, k^2); chords cross iff the segments meet in
// their interiors.
long long orient(int a, int b, int c) {
    const long long ax = a, ay = 1LL * a * a, bx = b, by = 1LL * b * b, cx = c, cy = 1LL * c * c;
    return (bx - ax) * (cy - ay) - (by - ay) * (cx - ax);
}

bool segments_cross(Diagonal d, Diagonal e) {
    auto sgn = [](long long v) { return (v > 0) - (v < 0); };
    return sgn(orient(d.a, d.b, e.a)) * sgn(orient(d.a, d.b, e.b)) < 0 &&
           sgn(orient(e.a, e.b, d.a)) * sgn(orient(e.a, e.b, d.b)) < 0;
}

std::vector<Diagonal> chords(int n) {
    std::vector<Diagonal> out;
    const int m = n + 3;
    for (int a = 0; a < m; ++a)
        for (int b = a + 2; b < m; ++b)
            if (!(a == 0 && b == m - 1)) out.push_back({a, b});
    return out;
}

// Non-crossing subsets of chords, grouped by size.
std::vector<std::size_t> brute_force_counts(int n) {
    const auto all = chords(n);
    std::vector<std::size_t> counts(static_cast<std::size_t>(n) + 1, 0);
    for (unsigned mask = 0; mask < (1u << all.size()); ++mask) {
        std::vector<Diagonal> chosen;
        for (std::size_t k = 0; k < all.size(); ++k)
            if (mask & (1u << k)) chosen.push_back(all[k]);
        bool ok = true;
        for (std::size_t i = 0; i < chosen.size() && ok; ++i)
            for (std::size_t j = i + 1; j < chosen.size() && ok; ++j) ok = !segments_cross(chosen[i], chosen[j]);
        if (ok) ++counts[chosen.size()];
    }
    return counts;
}

std::size_t catalan_recurrence(int k) {
    std::vector<std::size_t> c{1};
    for (int m = 1; m <= k; ++m) {
        std::size_t next = 0;
        for (int i = 0; i < m; ++i) next += c[i] * c[m - 1 - i];
        c.push_back(next);
    }
    return c[k];
}

}  // namespace

TEST_CASE("crossing") {
    CHECK(crossing(make_diagonal(2, 0, 2), make_diagonal(2, 1, 3)));
    CHECK(!crossing(make_diagonal(2, 0, 2), make_diagonal(2, 2, 4)));
    // 0 < 1 < 3 < 5: the endpoints interleave, so these two do cross
    CHECK(crossing(make_diagonal(3, 0, 3), make_diagonal(3, 1, 5)));
    CHECK(segments_cross({0, 3}, {1, 5}));
    CHECK(!crossing(make_diagonal(3, 0, 3), make_diagonal(3, 3, 5)));
    CHECK(!crossing(make_diagonal(3, 1, 4), make_diagonal(3, 1, 4)));
}

TEST_CASE("crossing agrees with segment intersection") {
    for (int n = 1; n <= 5; ++n) {
        const auto ds = all_diagonals(n);
        for (const auto& d : ds)
            for (const auto& e : ds) CHECK(crossing(d, e) == segments_cross(d, e));
    }
}

TEST_CASE("make_diagonal normalizes and rejects edges") {
    CHECK(make_diagonal(3, 5, 2) == Diagonal{2, 5});
    CHECK_THROWS_AS(make_diagonal(2, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(make_diagonal(2, 0, 4), std::invalid_argument);
    CHECK_THROWS_AS(make_diagonal(2, 1, 7), std::invalid_argument);
    CHECK(!is_diagonal(2, 3, 3));
}

TEST_CASE("all_diagonals") {
    CHECK(all_diagonals(1) == std::vector<Diagonal>{{0, 2}, {1, 3}});
    CHECK(all_diagonals(2).size() == 5);
    CHECK(all_diagonals(4).size() == 14);
    for (int n = 1; n <= 6; ++n) {
        CHECK(all_diagonals(n).size() == static_cast<std::size_t>(n * (n + 3) / 2));
        CHECK(all_diagonals(n) == chords(n));
    }
}

TEST_CASE("all_triangulations") {
    CHECK(all_triangulations(0).size() == 1);
    CHECK(all_triangulations(0)[0].size() == 0);
    CHECK(all_triangulations(1).size() == 2);
    for (int n = 2; n <= 6; ++n) {
        const auto ts = all_triangulations(n);
        CHECK(ts.size() == catalan_recurrence(n + 1));
        CHECK(std::is_sorted(ts.begin(), ts.end()));
        CHECK(std::set<Triangulation>(ts.begin(), ts.end()).size() == ts.size());
    }
    const std::vector<std::size_t> expected{5, 14, 42, 132};
    for (int n = 2; n <= 5; ++n) CHECK(all_triangulations(n).size() == expected[n - 2]);
}

TEST_CASE("triangulation triangles cover the polygon") {
    for (const auto& t : all_triangulations(4)) {
        const auto tris = t.triangles();
        CHECK(tris.size() == 5);
    }
}

TEST_CASE("subdivisions reject crossing diagonals") {
    CHECK_THROWS_AS(Subdivision(2, {{0, 2}, {1, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(Triangulation(2, {{0, 2}}), std::invalid_argument);
    const Subdivision s(3, {{2, 4}, {0, 2}});
    CHECK(s.diagonals() == std::vector<Diagonal>{{0, 2}, {2, 4}});
}

TEST_CASE("flip") {
    CHECK(flip(Triangulation(1, {{0, 2}}), {0, 2}) == Triangulation(1, {{1, 3}}));
    CHECK(flip(Triangulation(2, {{0, 2}, {0, 3}}), {0, 3}) == Triangulation(2, {{0, 2}, {2, 4}}));
    CHECK_THROWS_AS(flip(Triangulation(2, {{0, 2}, {0, 3}}), {1, 3}), std::invalid_argument);
    for (int n = 1; n <= 4; ++n)
        for (const auto& t : all_triangulations(n))
            for (const auto& d : t.diagonals()) {
                const auto u = flip(t, d);
                CHECK(u != t);
                CHECK(differ_by_flip(t, u));
                CHECK(!u.contains(d));
            }
}

TEST_CASE("flip is an involution") {
    for (int n = 1; n <= 4; ++n)
        for (const auto& t : all_triangulations(n))
            for (const auto& d : t.diagonals()) {
                const auto u = flip(t, d);
                Diagonal added{};
                for (const auto& e : u.diagonals())
                    if (!t.contains(e)) added = e;
                CHECK(flip(u, added) == t);
            }
}

TEST_CASE("subdivision counts") {
    CHECK(all_subdivisions(1).size() == 3);
    CHECK(all_subdivisions(2).size() == 11);
    CHECK(subdivision_counts_by_size(2) == std::vector<std::size_t>{1, 5, 5});
    CHECK(all_subdivisions(3).size() == 45);
    CHECK(subdivision_counts_by_size(3) == std::vector<std::size_t>{1, 9, 21, 14});
    for (int n = 1; n <= 4; ++n) CHECK(subdivision_counts_by_size(n) == brute_force_counts(n));
}

TEST_CASE("refines") {
    for (const auto& t : all_triangulations(3)) CHECK(refines(t, Subdivision(3, {})));
    const Subdivision s(3, {{0, 2}, {2, 5}});
    CHECK(refines(s, s));
    CHECK(!refines(Subdivision(2, {{0, 2}}), Subdivision(2, {{1, 3}})));
    CHECK(refines(Subdivision(3, {{0, 2}, {2, 5}}), Subdivision(3, {{2, 5}})));
    CHECK(!refines(Subdivision(3, {{2, 5}}), Subdivision(3, {{0, 2}, {2, 5}})));
}

TEST_CASE("flip graph edge count matches subdivisions with n-1 diagonals") {
    for (int n = 1; n <= 4; ++n) {
        const auto ts = all_triangulations(n);
        std::size_t edges = 0;
        for (std::size_t i = 0; i < ts.size(); ++i)
            for (std::size_t j = i + 1; j < ts.size(); ++j)
                if (differ_by_flip(ts[i], ts[j])) ++edges;
        CHECK(edges == subdivision_counts_by_size(n)[n - 1]);
    }
}
