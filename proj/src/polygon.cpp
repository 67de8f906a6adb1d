#include "assoc/polygon.hpp"

#include <algorithm>
#include <iterator>
#include <map>
#include <stdexcept>
#include <utility>

namespace assoc {

bool is_diagonal(int n, int x, int y) {
    const int m = n + 3;
    if (n < 0 || x < 0 || y < 0 || x >= m || y >= m) return false;
    if (x > y) std::swap(x, y);
    return y - x >= 2 && !(x == 0 && y == m - 1);
}

Diagonal make_diagonal(int n, int x, int y) {
    if (!is_diagonal(n, x, y)) {
        throw std::invalid_argument("{" + std::to_string(x) + "," + std::to_string(y) +
                                    "} is not a diagonal of the " + std::to_string(n + 3) + "-gon");
    }
    return x < y ? Diagonal{x, y} : Diagonal{y, x};
}

std::string to_string(const Diagonal& d) {
    return "{" + std::to_string(d.a) + "," + std::to_string(d.b) + "}";
}

bool crossing(const Diagonal& d1, const Diagonal& d2) {
    return (d1.a < d2.a && d2.a < d1.b && d1.b < d2.b) || (d2.a < d1.a && d1.a < d2.b && d2.b < d1.b);
}

// ---------------------------------------------------------------------------

Subdivision::Subdivision(int n, std::vector<Diagonal> diagonals) : n_(n), diagonals_(std::move(diagonals)) {
    if (n < 0) throw std::invalid_argument("polygon size n must be nonnegative");
    for (const auto& d : diagonals_) make_diagonal(n, d.a, d.b);
    std::sort(diagonals_.begin(), diagonals_.end());
    if (std::adjacent_find(diagonals_.begin(), diagonals_.end()) != diagonals_.end()) {
        throw std::invalid_argument("repeated diagonal in subdivision");
    }
    for (std::size_t i = 0; i < diagonals_.size(); ++i)
        for (std::size_t j = i + 1; j < diagonals_.size(); ++j)
            if (crossing(diagonals_[i], diagonals_[j])) {
                throw std::invalid_argument("diagonals " + to_string(diagonals_[i]) + " and " +
                                            to_string(diagonals_[j]) + " cross");
            }
}

bool Subdivision::contains(const Diagonal& d) const {
    return std::binary_search(diagonals_.begin(), diagonals_.end(), d);
}

Triangulation::Triangulation(int n, std::vector<Diagonal> diagonals) : Subdivision(n, std::move(diagonals)) {
    if (static_cast<int>(diagonals_.size()) != n) {
        throw std::invalid_argument("a triangulation of the " + std::to_string(n + 3) + "-gon needs " +
                                    std::to_string(n) + " diagonals");
    }
}

namespace {

// Adjacency of polygon edges plus the given diagonals.
std::vector<std::vector<bool>> edge_graph(int n, const std::vector<Diagonal>& diagonals) {
    const int m = n + 3;
    std::vector<std::vector<bool>> adj(m, std::vector<bool>(m, false));
    for (int i = 0; i < m; ++i) {
        const int j = (i + 1) % m;
        adj[i][j] = adj[j][i] = true;
    }
    for (const auto& d : diagonals) adj[d.a][d.b] = adj[d.b][d.a] = true;
    return adj;
}

}  // namespace

std::vector<std::array<int, 3>> Triangulation::triangles() const {
    // In a triangulated convex polygon every 3-cycle of the edge graph is a face.
    const int m = n_ + 3;
    const auto adj = edge_graph(n_, diagonals_);
    std::vector<std::array<int, 3>> out;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            if (!adj[i][j]) continue;
            for (int k = j + 1; k < m; ++k)
                if (adj[i][k] && adj[j][k]) out.push_back({i, j, k});
        }
    return out;
}

std::string to_string(const Subdivision& s) {
    std::string out = "[";
    for (std::size_t i = 0; i < s.diagonals().size(); ++i) {
        if (i) out += ",";
        out += to_string(s.diagonals()[i]);
    }
    return out + "]";
}

// ---------------------------------------------------------------------------

std::vector<Diagonal> all_diagonals(int n) {
    std::vector<Diagonal> out;
    const int m = n + 3;
    for (int a = 0; a < m; ++a)
        for (int b = a + 2; b < m; ++b)
            if (is_diagonal(n, a, b)) out.push_back({a, b});
    return out;
}

namespace {

using DiagonalLists = std::vector<std::vector<Diagonal>>;

// Triangulations of the sub-polygon on labels lo..hi, closed by the chord {lo, hi}.
const DiagonalLists& triangulate_range(int lo, int hi, std::map<std::pair<int, int>, DiagonalLists>& memo) {
    const auto key = std::make_pair(lo, hi);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    DiagonalLists result;
    if (hi - lo < 2) {
        result.emplace_back();
    } else {
        for (int apex = lo + 1; apex < hi; ++apex) {
            const DiagonalLists left = triangulate_range(lo, apex, memo);
            const DiagonalLists right = triangulate_range(apex, hi, memo);
            for (const auto& l : left)
                for (const auto& r : right) {
                    std::vector<Diagonal> ds = l;
                    ds.insert(ds.end(), r.begin(), r.end());
                    if (apex - lo >= 2) ds.push_back({lo, apex});
                    if (hi - apex >= 2) ds.push_back({apex, hi});
                    result.push_back(std::move(ds));
                }
        }
    }
    return memo.emplace(key, std::move(result)).first->second;
}

}  // namespace

std::vector<Triangulation> all_triangulations(int n) {
    if (n < 0) throw std::invalid_argument("polygon size n must be nonnegative");
    std::map<std::pair<int, int>, DiagonalLists> memo;
    const DiagonalLists& lists = triangulate_range(0, n + 2, memo);
    std::vector<Triangulation> out;
    out.reserve(lists.size());
    for (const auto& ds : lists) out.emplace_back(n, ds);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

void extend_subdivisions(int n, const std::vector<Diagonal>& pool, std::size_t next, std::vector<Diagonal>& current,
                         std::vector<Subdivision>& out) {
    out.emplace_back(n, current);
    for (std::size_t i = next; i < pool.size(); ++i) {
        const bool ok = std::none_of(current.begin(), current.end(),
                                     [&](const Diagonal& d) { return crossing(d, pool[i]); });
        if (!ok) continue;
        current.push_back(pool[i]);
        extend_subdivisions(n, pool, i + 1, current, out);
        current.pop_back();
    }
}

}  // namespace

std::vector<Subdivision> all_subdivisions(int n) {
    if (n < 0) throw std::invalid_argument("polygon size n must be nonnegative");
    const auto pool = all_diagonals(n);
    std::vector<Subdivision> out;
    std::vector<Diagonal> current;
    extend_subdivisions(n, pool, 0, current, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::size_t> subdivision_counts_by_size(int n) {
    std::vector<std::size_t> counts(static_cast<std::size_t>(n) + 1, 0);
    for (const auto& s : all_subdivisions(n)) ++counts[s.size()];
    return counts;
}

Triangulation flip(const Triangulation& t, const Diagonal& d) {
    if (!t.contains(d)) throw std::invalid_argument("diagonal " + to_string(d) + " not in triangulation");
    const int m = t.n() + 3;
    const auto adj = edge_graph(t.n(), t.diagonals());
    int inside = -1;
    int outside = -1;
    for (int c = 0; c < m; ++c) {
        if (c == d.a || c == d.b || !adj[d.a][c] || !adj[c][d.b]) continue;
        int& slot = (d.a < c && c < d.b) ? inside : outside;
        if (slot != -1) throw std::logic_error("flip: two triangles on one side of " + to_string(d));
        slot = c;
    }
    if (inside == -1 || outside == -1) throw std::logic_error("flip: missing triangle next to " + to_string(d));

    std::vector<Diagonal> ds;
    for (const auto& x : t.diagonals())
        if (x != d) ds.push_back(x);
    ds.push_back(make_diagonal(t.n(), inside, outside));
    return Triangulation(t.n(), std::move(ds));
}

bool refines(const Subdivision& s1, const Subdivision& s2) {
    return std::includes(s1.diagonals().begin(), s1.diagonals().end(), s2.diagonals().begin(),
                         s2.diagonals().end());
}

Subdivision common_diagonals(const Subdivision& s1, const Subdivision& s2) {
    std::vector<Diagonal> shared;
    std::set_intersection(s1.diagonals().begin(), s1.diagonals().end(), s2.diagonals().begin(),
                          s2.diagonals().end(), std::back_inserter(shared));
    return Subdivision(s1.n(), std::move(shared));
}

bool differ_by_flip(const Subdivision& t1, const Subdivision& t2) {
    return t1.is_triangulation() && t2.is_triangulation() && t1.size() == t2.size() &&
           common_diagonals(t1, t2).size() + 1 == t1.size();
}

}  // namespace assoc
