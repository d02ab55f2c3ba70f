#pragma once

// Exact rational scalars and dense linear algebra over small spaces.

#include <gmpxx.h>

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace operad_forge {

// GMP rationals are kept canonical by every arithmetic operation.
using Rational = mpq_class;
using Vector = std::vector<Rational>;

/// Parses "p" or "p/q" (optional leading sign) into a canonical rational.
/// Throws Error on malformed input or a zero denominator.
Rational parse_rational(const std::string& text);

/// "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rational& r);

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);
bool is_zero(std::span<const Rational> v);

Vector add(std::span<const Rational> a, std::span<const Rational> b);
Vector sub(std::span<const Rational> a, std::span<const Rational> b);
Vector scale(const Rational& c, std::span<const Rational> a);
Rational dot(std::span<const Rational> a, std::span<const Rational> b);

// Row-major dense matrix.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);
    static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);
    static Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Vector row(std::size_t r) const;
    Vector apply(std::span<const Rational> v) const;
    Matrix operator*(const Matrix& other) const;
    Matrix operator+(const Matrix& other) const;
    Matrix operator-(const Matrix& other) const;
    Matrix scaled(const Rational& c) const;

    bool operator==(const Matrix& other) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

// Result of Gauss-Jordan elimination: nonzero rows in reduced row-echelon
// form plus the pivot column of each row.
struct Echelon {
    std::vector<Vector> rows;
    std::vector<std::size_t> pivots;
};

Echelon row_reduce(std::vector<Vector> rows, std::size_t cols);

/// Basis of {x : M x = 0}, one vector per free column.
std::vector<Vector> kernel(const Matrix& m);

/// A linear subspace of K^n stored as its canonical reduced row-echelon
/// basis, so equality of spaces is equality of values.
class Subspace {
public:
    explicit Subspace(std::size_t ambient_dim = 0);

    static Subspace span(const std::vector<Vector>& vectors, std::size_t ambient_dim);
    static Subspace full(std::size_t ambient_dim);

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<Vector>& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }
    bool is_zero() const { return basis_.empty(); }

    bool contains(std::span<const Rational> v) const;
    bool contains(const Subspace& other) const;

    /// v minus its pivot-row combination; zero iff v lies in the space.
    /// The result is supported on non-pivot columns only.
    Vector reduce(std::span<const Rational> v) const;

    /// Columns not used as pivots; coordinates of the quotient K^n / S.
    std::vector<std::size_t> free_columns() const;

    Subspace sum(const Subspace& other) const;
    Subspace intersect(const Subspace& other) const;
    /// {x : dot(x, s) = 0 for every s in S}.
    Subspace orthogonal_complement() const;

    /// Image of the space under a square matrix on the ambient space.
    Subspace image(const Matrix& m) const;

    bool operator==(const Subspace& other) const = default;

private:
    Subspace(std::size_t ambient_dim, Echelon reduced);

    std::size_t ambient_;
    std::vector<Vector> basis_;
    std::vector<std::size_t> pivots_;
};

enum class CombineMode { Sum, Intersection };

Subspace combine(const Subspace& s, const Subspace& t, CombineMode mode);

} // namespace operad_forge
