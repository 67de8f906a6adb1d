#include "assoc/exactlin.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <utility>

namespace assoc {

std::string to_string(const Rational& q) { return q.str(); }

namespace {

Integer parse_integer(std::string_view text, std::string_view whole) {
    std::size_t pos = 0;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    if (pos == text.size()) {
        throw std::invalid_argument("malformed rational '" + std::string(whole) + "'");
    }
    for (std::size_t i = pos; i < text.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
            throw std::invalid_argument("malformed rational '" + std::string(whole) + "'");
        }
    }
    if (text.front() == '+') text.remove_prefix(1);
    return Integer(std::string(text));
}

}  // namespace

Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
    const Integer num = parse_integer(text.substr(0, slash), text);
    const auto den_text = text.substr(slash + 1);
    if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+')) {
        throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    }
    const Integer den = parse_integer(den_text, text);
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
}

// ---------------------------------------------------------------------------
// RationalVector

RationalVector RationalVector::from_ints(std::initializer_list<long> values) {
    RationalVector v;
    v.entries_.reserve(values.size());
    for (long x : values) v.entries_.emplace_back(x);
    return v;
}

RationalVector RationalVector::unit(std::size_t dim, std::size_t i) {
    RationalVector v(dim);
    v[i] = 1;
    return v;
}

bool RationalVector::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const Rational& q) { return q == 0; });
}

Rational RationalVector::sum() const {
    Rational s = 0;
    for (const auto& q : entries_) s += q;
    return s;
}

RationalVector& RationalVector::operator+=(const RationalVector& other) {
    if (other.dim() != dim()) throw std::invalid_argument("vector dimension mismatch");
    for (std::size_t i = 0; i < dim(); ++i) entries_[i] += other.entries_[i];
    return *this;
}

RationalVector& RationalVector::operator-=(const RationalVector& other) {
    if (other.dim() != dim()) throw std::invalid_argument("vector dimension mismatch");
    for (std::size_t i = 0; i < dim(); ++i) entries_[i] -= other.entries_[i];
    return *this;
}

RationalVector& RationalVector::operator*=(const Rational& s) {
    for (auto& q : entries_) q *= s;
    return *this;
}

RationalVector operator+(RationalVector a, const RationalVector& b) { return a += b; }
RationalVector operator-(RationalVector a, const RationalVector& b) { return a -= b; }
RationalVector operator-(RationalVector a) { return a *= Rational(-1); }
RationalVector operator*(const Rational& s, RationalVector v) { return v *= s; }

Rational dot(const RationalVector& a, const RationalVector& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("vector dimension mismatch");
    Rational s = 0;
    for (std::size_t i = 0; i < a.dim(); ++i) s += a[i] * b[i];
    return s;
}

std::string to_string(const RationalVector& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.dim(); ++i) {
        if (i) out += ",";
        out += to_string(v[i]);
    }
    return out + ")";
}

// ---------------------------------------------------------------------------
// RationalMatrix

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows, RationalVector(cols)), cols_(cols) {}

RationalMatrix::RationalMatrix(std::vector<RationalVector> rows) : rows_(std::move(rows)) {
    cols_ = rows_.empty() ? 0 : rows_.front().dim();
    for (const auto& r : rows_) {
        if (r.dim() != cols_) throw std::invalid_argument("ragged matrix rows");
    }
}

RationalMatrix RationalMatrix::identity(std::size_t dim) {
    RationalMatrix m(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1;
    return m;
}

RationalMatrix RationalMatrix::from_columns(const std::vector<RationalVector>& columns) {
    return RationalMatrix(columns).transpose();
}

RationalVector RationalMatrix::column(std::size_t j) const {
    RationalVector c(rows());
    for (std::size_t i = 0; i < rows(); ++i) c[i] = rows_[i][j];
    return c;
}

RationalMatrix RationalMatrix::transpose() const {
    RationalMatrix t(cols_, rows());
    for (std::size_t i = 0; i < rows(); ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = rows_[i][j];
    return t;
}

RationalVector operator*(const RationalMatrix& m, const RationalVector& v) {
    if (m.cols() != v.dim()) throw std::invalid_argument("matrix-vector dimension mismatch");
    RationalVector out(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) out[i] = dot(m.row(i), v);
    return out;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix-matrix dimension mismatch");
    RationalMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
        }
    return out;
}

// ---------------------------------------------------------------------------
// Elimination

// Plain Gauss-Jordan over mpq; GMP keeps every entry in lowest terms.
EchelonForm reduced_row_echelon(RationalMatrix m) {
    EchelonForm out;
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m(p, c) == 0) ++p;
        if (p == rows) continue;
        std::swap(m.row(p), m.row(r));
        const Rational pivot = m(r, c);
        if (pivot != 1) m.row(r) *= Rational(1) / pivot;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m(i, c) == 0) continue;
            const Rational f = m(i, c);
            for (std::size_t j = c; j < cols; ++j) m(i, j) -= f * m(r, j);
        }
        out.pivots.push_back(c);
        ++r;
    }
    out.matrix = std::move(m);
    return out;
}

std::size_t rank(const RationalMatrix& m) {
    if (m.empty()) return 0;
    return reduced_row_echelon(m).pivots.size();
}

std::vector<RationalVector> nullspace(const RationalMatrix& m) {
    const std::size_t cols = m.cols();
    const EchelonForm e = reduced_row_echelon(m);
    std::vector<bool> is_pivot(cols, false);
    for (auto p : e.pivots) is_pivot[p] = true;

    std::vector<RationalVector> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        RationalVector v(cols);
        v[free] = 1;
        for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.matrix(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<RationalMatrix> inverse(const RationalMatrix& m) {
    const std::size_t d = m.rows();
    if (m.cols() != d) throw std::invalid_argument("inverse of a non-square matrix");
    RationalMatrix aug(d, 2 * d);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) aug(i, j) = m(i, j);
        aug(i, d + i) = 1;
    }
    const EchelonForm e = reduced_row_echelon(std::move(aug));
    if (e.pivots.size() < d || e.pivots[d - 1] != d - 1) return std::nullopt;
    RationalMatrix inv(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) inv(i, j) = e.matrix(i, d + j);
    return inv;
}

LinearSolution solve_linear(const RationalMatrix& a, const RationalVector& b) {
    if (a.rows() != b.dim()) throw std::invalid_argument("solve_linear: row count differs from rhs");
    const std::size_t cols = a.cols();
    RationalMatrix aug(a.rows(), cols + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < cols; ++j) aug(i, j) = a(i, j);
        aug(i, cols) = b[i];
    }
    const EchelonForm e = reduced_row_echelon(std::move(aug));
    LinearSolution out;
    if (!e.pivots.empty() && e.pivots.back() == cols) {
        out.status = SolveStatus::inconsistent;
        return out;
    }
    if (e.pivots.size() < cols) {
        out.status = SolveStatus::underdetermined;
        return out;
    }
    RationalVector x(cols);
    for (std::size_t r = 0; r < cols; ++r) x[r] = e.matrix(r, cols);
    out.status = SolveStatus::unique;
    out.x = std::move(x);
    return out;
}

// ---------------------------------------------------------------------------
// Subspace

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<RationalVector>& vectors) {
    Subspace s(ambient_dim);
    if (vectors.empty()) return s;
    const EchelonForm e = reduced_row_echelon(RationalMatrix(vectors));
    if (e.matrix.cols() != ambient_dim) throw std::invalid_argument("subspace: dimension mismatch");
    for (std::size_t r = 0; r < e.pivots.size(); ++r) s.basis_.push_back(e.matrix.row(r));
    return s;
}

Subspace Subspace::full(std::size_t ambient_dim) {
    Subspace s(ambient_dim);
    for (std::size_t i = 0; i < ambient_dim; ++i) s.basis_.push_back(RationalVector::unit(ambient_dim, i));
    return s;
}

bool Subspace::contains(const RationalVector& v) const {
    if (v.dim() != ambient_dim_) return false;
    // Reduce v against the echelon basis: pivot of row r is its first nonzero entry.
    RationalVector rest = v;
    for (const auto& b : basis_) {
        std::size_t p = 0;
        while (b[p] == 0) ++p;
        if (rest[p] != 0) rest -= rest[p] * b;
    }
    return rest.is_zero();
}

Subspace Subspace::sum(const Subspace& other) const {
    std::vector<RationalVector> all = basis_;
    all.insert(all.end(), other.basis_.begin(), other.basis_.end());
    return span(ambient_dim_, all);
}

Subspace subspace_from_differences(const std::vector<RationalVector>& points) {
    if (points.empty()) throw std::invalid_argument("subspace_from_differences: no points");
    std::vector<RationalVector> diffs;
    diffs.reserve(points.size() - 1);
    for (std::size_t i = 1; i < points.size(); ++i) diffs.push_back(points[i] - points[0]);
    return Subspace::span(points[0].dim(), diffs);
}

// ---------------------------------------------------------------------------
// Hyperplane / AffineMap

Hyperplane Hyperplane::make(RationalVector normal, Rational offset) {
    std::size_t p = 0;
    while (p < normal.dim() && normal[p] == 0) ++p;
    if (p == normal.dim()) throw std::invalid_argument("hyperplane normal is zero");
    const Rational scale = Rational(1) / normal[p];
    normal *= scale;
    offset *= scale;
    return Hyperplane{std::move(normal), std::move(offset)};
}

std::optional<Hyperplane> hyperplane_through(const std::vector<RationalVector>& points,
                                             const Subspace& ambient) {
    if (points.empty() || ambient.dim() == 0) return std::nullopt;
    const Subspace direction = subspace_from_differences(points);
    if (direction.dim() + 1 != ambient.dim()) return std::nullopt;
    if (!std::all_of(direction.basis().begin(), direction.basis().end(),
                     [&](const RationalVector& v) { return ambient.contains(v); })) {
        return std::nullopt;
    }

    // normal = sum_i c_i b_i with <normal, d> = 0 for every direction vector d.
    const auto& b = ambient.basis();
    RationalMatrix gram(direction.dim(), b.size());
    for (std::size_t r = 0; r < direction.dim(); ++r)
        for (std::size_t i = 0; i < b.size(); ++i) gram(r, i) = dot(direction.basis()[r], b[i]);
    std::vector<RationalVector> coeffs;
    if (direction.dim() == 0) {
        coeffs.push_back(RationalVector::from_ints({1}));
    } else {
        coeffs = nullspace(gram);
    }
    if (coeffs.size() != 1) return std::nullopt;

    RationalVector normal(ambient.ambient_dim());
    for (std::size_t i = 0; i < b.size(); ++i) normal += coeffs[0][i] * b[i];
    const Rational offset = dot(normal, points[0]);
    return Hyperplane::make(std::move(normal), offset);
}

AffineMap AffineMap::identity(std::size_t dim) {
    return AffineMap{RationalMatrix::identity(dim), RationalVector(dim)};
}

}  // namespace assoc
