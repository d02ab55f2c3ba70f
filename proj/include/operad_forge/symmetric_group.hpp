#pragma once

// The symmetric group on three letters, its group algebra, and
// isotypic decomposition of its representations.
//
// Convention: the product g*h means "apply g, then h"; as maps on
// {1,2,3} it is the composite h o g.  With this product the relabeling
// sigma(x_i.(x_j.x_k)) = x_{sigma^-1(i)}.(x_{sigma^-1(j)}.x_{sigma^-1(k)})
// is a left action: act(g*h, X) = act(g, act(h, X)).  The natural action
// of the group on its own group algebra is left translation v -> g*v.

#include "operad_forge/linalg.hpp"

#include <array>
#include <cstddef>
#include <string>
#include <string_view>

namespace operad_forge {

class Perm3 {
public:
    // Fixed enumeration order used by every serialized format.
    enum Id : std::size_t { kId = 0, kT12 = 1, kT13 = 2, kT23 = 3, kC1 = 4, kC2 = 5 };
    static constexpr std::size_t kOrder = 6;

    constexpr Perm3() = default;
    static Perm3 from_index(std::size_t index);
    /// Images of (1,2,3), 1-based; throws if not a bijection.
    static Perm3 from_images(std::array<int, 3> images);
    static Perm3 from_name(std::string_view name);

    std::size_t index() const { return index_; }
    const std::array<int, 3>& images() const;
    int operator()(int i) const { return images()[static_cast<std::size_t>(i - 1)]; }

    Perm3 inverse() const;
    /// this * other: apply this, then other.
    Perm3 operator*(const Perm3& other) const;
    int sign() const;
    std::string_view name() const;

    bool operator==(const Perm3&) const = default;

    static const std::array<Perm3, kOrder>& all();

private:
    constexpr explicit Perm3(std::size_t index) : index_(index) {}
    std::size_t index_ = 0;
};

/// Element of K[S3]: six rational coefficients in the fixed order.
class GroupVector {
public:
    GroupVector();
    explicit GroupVector(std::array<Rational, Perm3::kOrder> coeffs);
    static GroupVector basis(const Perm3& p);
    static GroupVector from_vector(std::span<const Rational> v);

    const Rational& operator[](const Perm3& p) const { return coeffs_[p.index()]; }
    const std::array<Rational, Perm3::kOrder>& coefficients() const { return coeffs_; }
    Vector to_vector() const;
    bool is_zero() const;

    GroupVector operator+(const GroupVector& o) const;
    GroupVector operator-(const GroupVector& o) const;
    GroupVector operator-() const;
    GroupVector operator*(const Rational& c) const;
    /// Group-algebra convolution with the product of Perm3.
    GroupVector operator*(const GroupVector& o) const;

    bool operator==(const GroupVector&) const = default;

    /// Alternating sum V and full sum W over a subgroup given as a mask.
    static GroupVector signed_sum(std::array<bool, Perm3::kOrder> members);
    static GroupVector plain_sum(std::array<bool, Perm3::kOrder> members);

private:
    std::array<Rational, Perm3::kOrder> coeffs_;
};

GroupVector operator*(const Perm3& p, const GroupVector& v);

/// The six subgroups G1..G6 of S3 as membership masks (1-based index).
std::array<bool, Perm3::kOrder> subgroup(int i);

/// A representation of S3: one matrix per group element, all square of the
/// same size.  Matrices act on column vectors of coordinates.
class Representation {
public:
    explicit Representation(std::array<Matrix, Perm3::kOrder> matrices);

    std::size_t dim() const { return dim_; }
    const Matrix& operator()(const Perm3& p) const { return matrices_[p.index()]; }

    Vector act(const Perm3& p, std::span<const Rational> v) const { return (*this)(p).apply(v); }
    /// The linear map sum_g a_g rho(g).
    Matrix operator()(const GroupVector& v) const;

    /// Span of the orbits of the given vectors.
    Subspace orbit_span(const std::vector<Vector>& vectors) const;
    bool is_invariant(const Subspace& s) const;

    /// The regular representation on K[S3] by left translation.
    static const Representation& regular();

private:
    std::array<Matrix, Perm3::kOrder> matrices_;
    std::size_t dim_;
};

struct IsotypicProfile {
    std::size_t trivial = 0;
    std::size_t sign = 0;
    std::size_t standard = 0;

    std::size_t dim() const { return trivial + sign + 2 * standard; }
    /// Minimal number of generators of a module with this profile.
    std::size_t min_generators() const;
    bool operator==(const IsotypicProfile&) const = default;
};

/// Central idempotents of K[S3] for the trivial, sign and standard isotypes.
GroupVector idempotent_trivial();
GroupVector idempotent_sign();
GroupVector idempotent_standard();

/// Throws NotInvariant if some generator moves a basis vector out of s.
IsotypicProfile isotypic_multiplicities(const Representation& rep, const Subspace& s);

/// Left-translation orbit span of v inside K[S3].
Subspace group_orbit_span(const GroupVector& v);

} // namespace operad_forge
