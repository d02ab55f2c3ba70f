#include "operad_forge/linalg.hpp"

#include "operad_forge/error.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

namespace operad_forge {

namespace {

void check_len(std::span<const Rational> a, std::size_t n, const char* what) {
    if (a.size() != n) {
        throw DimensionMismatch(std::string(what) + ": expected length " + std::to_string(n) +
                                ", got " + std::to_string(a.size()));
    }
}

bool all_digits(const std::string& s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

} // namespace

Rational parse_rational(const std::string& text) {
    std::string body = text;
    bool negative = false;
    if (!body.empty() && (body[0] == '-' || body[0] == '+')) {
        negative = body[0] == '-';
        body.erase(0, 1);
    }
    auto slash = body.find('/');
    std::string num = body.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
        throw Error("malformed rational '" + text + "'");
    }
    mpz_class d(den);
    if (d == 0) {
        throw Error("zero denominator in '" + text + "'");
    }
    Rational r(mpz_class(num), d);
    r.canonicalize();
    return negative ? Rational(-r) : r;
}

std::string to_string(const Rational& value) {
    Rational r = value; // hand-built mpq values may not be reduced
    r.canonicalize();
    if (r.get_den() == 1) {
        return r.get_num().get_str();
    }
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Vector zero_vector(std::size_t n) { return Vector(n, Rational(0)); }

Vector unit_vector(std::size_t n, std::size_t i) {
    Vector v = zero_vector(n);
    v.at(i) = 1;
    return v;
}

bool is_zero(std::span<const Rational> v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return sgn(x) == 0; });
}

Vector add(std::span<const Rational> a, std::span<const Rational> b) {
    check_len(b, a.size(), "add");
    Vector out(a.begin(), a.end());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
    return out;
}

Vector sub(std::span<const Rational> a, std::span<const Rational> b) {
    check_len(b, a.size(), "sub");
    Vector out(a.begin(), a.end());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] -= b[i];
    return out;
}

Vector scale(const Rational& c, std::span<const Rational> a) {
    Vector out(a.begin(), a.end());
    for (auto& x : out) x *= c;
    return out;
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
    check_len(b, a.size(), "dot");
    Rational acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

// ---------------------------------------------------------------------------
// Matrix

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        check_len(rows[r], cols, "matrix row");
        std::copy(rows[r].begin(), rows[r].end(), m.data_.begin() + static_cast<std::ptrdiff_t>(r * cols));
    }
    return m;
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Vector Matrix::row(std::size_t r) const {
    auto first = data_.begin() + static_cast<std::ptrdiff_t>(r * cols_);
    return Vector(first, first + static_cast<std::ptrdiff_t>(cols_));
}

Vector Matrix::apply(std::span<const Rational> v) const {
    check_len(v, cols_, "matrix apply");
    Vector out = zero_vector(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        Rational acc = 0;
        for (std::size_t c = 0; c < cols_; ++c) {
            const Rational& a = (*this)(r, c);
            if (sgn(a) != 0 && sgn(v[c]) != 0) acc += a * v[c];
        }
        out[r] = acc;
    }
    return out;
}

Matrix Matrix::operator*(const Matrix& other) const {
    if (cols_ != other.rows_) throw DimensionMismatch("matrix product: inner dimensions differ");
    Matrix out(rows_, other.cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& a = (*this)(r, k);
            if (sgn(a) == 0) continue;
            for (std::size_t c = 0; c < other.cols_; ++c) out(r, c) += a * other(k, c);
        }
    }
    return out;
}

Matrix Matrix::operator+(const Matrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) throw DimensionMismatch("matrix sum: shapes differ");
    Matrix out = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += other.data_[i];
    return out;
}

Matrix Matrix::operator-(const Matrix& other) const { return *this + other.scaled(-1); }

Matrix Matrix::scaled(const Rational& c) const {
    Matrix out = *this;
    for (auto& x : out.data_) x *= c;
    return out;
}

// ---------------------------------------------------------------------------
// Elimination

Echelon row_reduce(std::vector<Vector> rows, std::size_t cols) {
    for (const auto& r : rows) check_len(r, cols, "row_reduce");
    Echelon out;
    std::size_t lead = 0;
    for (std::size_t col = 0; col < cols && lead < rows.size(); ++col) {
        std::size_t pivot = lead;
        while (pivot < rows.size() && sgn(rows[pivot][col]) == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[lead], rows[pivot]);
        Rational inv = 1 / rows[lead][col];
        for (auto& x : rows[lead]) x *= inv;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == lead || sgn(rows[r][col]) == 0) continue;
            Rational f = rows[r][col];
            for (std::size_t c = col; c < cols; ++c) {
                if (sgn(rows[lead][c]) != 0) rows[r][c] -= f * rows[lead][c];
            }
        }
        out.pivots.push_back(col);
        ++lead;
    }
    rows.resize(lead);
    out.rows = std::move(rows);
    return out;
}

std::vector<Vector> kernel(const Matrix& m) {
    std::vector<Vector> rows;
    rows.reserve(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
    Echelon e = row_reduce(std::move(rows), m.cols());
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : e.pivots) is_pivot[p] = true;
    std::vector<Vector> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        Vector v = unit_vector(m.cols(), f);
        for (std::size_t i = 0; i < e.rows.size(); ++i) v[e.pivots[i]] = -e.rows[i][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

// ---------------------------------------------------------------------------
// Subspace

Subspace::Subspace(std::size_t ambient_dim) : ambient_(ambient_dim) {}

Subspace::Subspace(std::size_t ambient_dim, Echelon reduced)
    : ambient_(ambient_dim), basis_(std::move(reduced.rows)), pivots_(std::move(reduced.pivots)) {}

Subspace Subspace::span(const std::vector<Vector>& vectors, std::size_t ambient_dim) {
    return Subspace(ambient_dim, row_reduce(vectors, ambient_dim));
}

Subspace Subspace::full(std::size_t ambient_dim) {
    std::vector<Vector> rows;
    for (std::size_t i = 0; i < ambient_dim; ++i) rows.push_back(unit_vector(ambient_dim, i));
    return span(rows, ambient_dim);
}

Vector Subspace::reduce(std::span<const Rational> v) const {
    check_len(v, ambient_, "subspace reduce");
    Vector out(v.begin(), v.end());
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        Rational f = out[pivots_[i]];
        if (sgn(f) == 0) continue;
        for (std::size_t c = 0; c < ambient_; ++c) {
            if (sgn(basis_[i][c]) != 0) out[c] -= f * basis_[i][c];
        }
    }
    return out;
}

bool Subspace::contains(std::span<const Rational> v) const { return operad_forge::is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
    if (other.ambient_ != ambient_) throw DimensionMismatch("subspace inclusion: ambient dimensions differ");
    return std::all_of(other.basis_.begin(), other.basis_.end(), [&](const Vector& b) { return contains(b); });
}

std::vector<std::size_t> Subspace::free_columns() const {
    std::vector<bool> is_pivot(ambient_, false);
    for (auto p : pivots_) is_pivot[p] = true;
    std::vector<std::size_t> out;
    for (std::size_t c = 0; c < ambient_; ++c) {
        if (!is_pivot[c]) out.push_back(c);
    }
    return out;
}

Subspace Subspace::sum(const Subspace& other) const {
    if (other.ambient_ != ambient_) throw DimensionMismatch("subspace sum: ambient dimensions differ");
    std::vector<Vector> rows = basis_;
    rows.insert(rows.end(), other.basis_.begin(), other.basis_.end());
    return span(rows, ambient_);
}

Subspace Subspace::intersect(const Subspace& other) const {
    if (other.ambient_ != ambient_) throw DimensionMismatch("subspace intersection: ambient dimensions differ");
    // x = sum a_i s_i = sum b_j t_j  <=>  (a, b) in ker [S^T | -T^T].
    const std::size_t ns = basis_.size();
    const std::size_t nt = other.basis_.size();
    Matrix m(ambient_, ns + nt);
    for (std::size_t i = 0; i < ns; ++i)
        for (std::size_t c = 0; c < ambient_; ++c) m(c, i) = basis_[i][c];
    for (std::size_t j = 0; j < nt; ++j)
        for (std::size_t c = 0; c < ambient_; ++c) m(c, ns + j) = -other.basis_[j][c];
    std::vector<Vector> vecs;
    for (const auto& k : kernel(m)) {
        Vector x = zero_vector(ambient_);
        for (std::size_t i = 0; i < ns; ++i) {
            if (sgn(k[i]) == 0) continue;
            for (std::size_t c = 0; c < ambient_; ++c) x[c] += k[i] * basis_[i][c];
        }
        vecs.push_back(std::move(x));
    }
    return span(vecs, ambient_);
}

Subspace Subspace::orthogonal_complement() const {
    return span(kernel(Matrix::from_rows(basis_, ambient_)), ambient_);
}

Subspace Subspace::image(const Matrix& m) const {
    if (m.rows() != ambient_ || m.cols() != ambient_) throw DimensionMismatch("subspace image: matrix shape");
    std::vector<Vector> vecs;
    vecs.reserve(basis_.size());
    for (const auto& b : basis_) vecs.push_back(m.apply(b));
    return span(vecs, ambient_);
}

Subspace combine(const Subspace& s, const Subspace& t, CombineMode mode) {
    return mode == CombineMode::Sum ? s.sum(t) : s.intersect(t);
}

} // namespace operad_forge
