#include "operad_forge/symmetric_group.hpp"

#include "operad_forge/error.hpp"

#include <algorithm>

namespace operad_forge {

namespace {

constexpr std::array<std::array<int, 3>, Perm3::kOrder> kImages{{
    {1, 2, 3}, // Id
    {2, 1, 3}, // t12
    {3, 2, 1}, // t13
    {1, 3, 2}, // t23
    {2, 3, 1}, // c1 = (1,2,3)
    {3, 1, 2}, // c2 = (1,3,2)
}};

constexpr std::array<std::string_view, Perm3::kOrder> kNames{"Id", "t12", "t13", "t23", "c1", "c2"};

} // namespace

Perm3 Perm3::from_index(std::size_t index) {
    if (index >= kOrder) throw Error("permutation index out of range: " + std::to_string(index));
    return Perm3(index);
}

Perm3 Perm3::from_images(std::array<int, 3> images) {
    for (std::size_t i = 0; i < kOrder; ++i) {
        if (kImages[i] == images) return Perm3(i);
    }
    throw Error("not a permutation of {1,2,3}");
}

Perm3 Perm3::from_name(std::string_view name) {
    for (std::size_t i = 0; i < kOrder; ++i) {
        if (kNames[i] == name) return Perm3(i);
    }
    throw UnknownName("unknown permutation symbol '" + std::string(name) + "'");
}

const std::array<int, 3>& Perm3::images() const { return kImages[index_]; }

Perm3 Perm3::inverse() const {
    std::array<int, 3> inv{};
    for (int i = 1; i <= 3; ++i) inv[static_cast<std::size_t>((*this)(i) - 1)] = i;
    return from_images(inv);
}

Perm3 Perm3::operator*(const Perm3& other) const {
    std::array<int, 3> img{};
    for (int i = 1; i <= 3; ++i) img[static_cast<std::size_t>(i - 1)] = other((*this)(i));
    return from_images(img);
}

int Perm3::sign() const { return (index_ >= 1 && index_ <= 3) ? -1 : 1; }

std::string_view Perm3::name() const { return kNames[index_]; }

const std::array<Perm3, Perm3::kOrder>& Perm3::all() {
    static const std::array<Perm3, kOrder> elems{Perm3(0), Perm3(1), Perm3(2), Perm3(3), Perm3(4), Perm3(5)};
    return elems;
}

// ---------------------------------------------------------------------------
// GroupVector

GroupVector::GroupVector() { coeffs_.fill(Rational(0)); }

GroupVector::GroupVector(std::array<Rational, Perm3::kOrder> coeffs) : coeffs_(std::move(coeffs)) {}

GroupVector GroupVector::basis(const Perm3& p) {
    GroupVector v;
    v.coeffs_[p.index()] = 1;
    return v;
}

GroupVector GroupVector::from_vector(std::span<const Rational> v) {
    if (v.size() != Perm3::kOrder) throw DimensionMismatch("group vector needs 6 coefficients");
    GroupVector g;
    std::copy(v.begin(), v.end(), g.coeffs_.begin());
    return g;
}

Vector GroupVector::to_vector() const { return Vector(coeffs_.begin(), coeffs_.end()); }

bool GroupVector::is_zero() const { return operad_forge::is_zero(coeffs_); }

GroupVector GroupVector::operator+(const GroupVector& o) const {
    GroupVector r = *this;
    for (std::size_t i = 0; i < Perm3::kOrder; ++i) r.coeffs_[i] += o.coeffs_[i];
    return r;
}

GroupVector GroupVector::operator-(const GroupVector& o) const { return *this + (-o); }

GroupVector GroupVector::operator-() const { return *this * Rational(-1); }

GroupVector GroupVector::operator*(const Rational& c) const {
    GroupVector r = *this;
    for (auto& x : r.coeffs_) x *= c;
    return r;
}

GroupVector GroupVector::operator*(const GroupVector& o) const {
    GroupVector r;
    for (const auto& g : Perm3::all()) {
        if (sgn(coeffs_[g.index()]) == 0) continue;
        for (const auto& h : Perm3::all()) {
            r.coeffs_[(g * h).index()] += coeffs_[g.index()] * o.coeffs_[h.index()];
        }
    }
    return r;
}

GroupVector GroupVector::signed_sum(std::array<bool, Perm3::kOrder> members) {
    GroupVector v;
    for (const auto& g : Perm3::all()) {
        if (members[g.index()]) v.coeffs_[g.index()] = g.sign();
    }
    return v;
}

GroupVector GroupVector::plain_sum(std::array<bool, Perm3::kOrder> members) {
    GroupVector v;
    for (const auto& g : Perm3::all()) {
        if (members[g.index()]) v.coeffs_[g.index()] = 1;
    }
    return v;
}

GroupVector operator*(const Perm3& p, const GroupVector& v) { return GroupVector::basis(p) * v; }

std::array<bool, Perm3::kOrder> subgroup(int i) {
    switch (i) {
    case 1: return {true, false, false, false, false, false};
    case 2: return {true, true, false, false, false, false};
    case 3: return {true, false, false, true, false, false};
    case 4: return {true, false, true, false, false, false};
    case 5: return {true, false, false, false, true, true};
    case 6: return {true, true, true, true, true, true};
    default: throw InvalidParameter("subgroup index must be in 1..6, got " + std::to_string(i));
    }
}

// ---------------------------------------------------------------------------
// Representation

Representation::Representation(std::array<Matrix, Perm3::kOrder> matrices)
    : matrices_(std::move(matrices)), dim_(matrices_[0].rows()) {
    for (const auto& m : matrices_) {
        if (m.rows() != dim_ || m.cols() != dim_) throw DimensionMismatch("representation matrices must be square and equal");
    }
}

Matrix Representation::operator()(const GroupVector& v) const {
    Matrix out(dim_, dim_);
    for (const auto& g : Perm3::all()) {
        if (sgn(v[g]) != 0) out = out + matrices_[g.index()].scaled(v[g]);
    }
    return out;
}

Subspace Representation::orbit_span(const std::vector<Vector>& vectors) const {
    std::vector<Vector> all;
    all.reserve(vectors.size() * Perm3::kOrder);
    for (const auto& v : vectors) {
        for (const auto& g : Perm3::all()) all.push_back(act(g, v));
    }
    return Subspace::span(all, dim_);
}

bool Representation::is_invariant(const Subspace& s) const {
    if (s.ambient_dim() != dim_) throw DimensionMismatch("subspace does not live in the representation space");
    // t12 and c1 generate S3.
    for (auto g : {Perm3::from_index(Perm3::kT12), Perm3::from_index(Perm3::kC1)}) {
        for (const auto& b : s.basis()) {
            if (!s.contains(act(g, b))) return false;
        }
    }
    return true;
}

const Representation& Representation::regular() {
    static const Representation rep = [] {
        std::array<Matrix, Perm3::kOrder> mats;
        for (const auto& g : Perm3::all()) {
            Matrix m(Perm3::kOrder, Perm3::kOrder);
            for (const auto& h : Perm3::all()) m((g * h).index(), h.index()) = 1;
            mats[g.index()] = std::move(m);
        }
        return Representation(std::move(mats));
    }();
    return rep;
}

// ---------------------------------------------------------------------------
// Isotypic decomposition

std::size_t IsotypicProfile::min_generators() const {
    return std::max({trivial, sign, (standard + 1) / 2});
}

GroupVector idempotent_trivial() {
    return GroupVector::plain_sum(subgroup(6)) * Rational(1, 6);
}

GroupVector idempotent_sign() {
    return GroupVector::signed_sum(subgroup(6)) * Rational(1, 6);
}

GroupVector idempotent_standard() {
    return GroupVector::basis(Perm3()) - idempotent_trivial() - idempotent_sign();
}

IsotypicProfile isotypic_multiplicities(const Representation& rep, const Subspace& s) {
    if (!rep.is_invariant(s)) throw NotInvariant("subspace is not invariant under the S3 action");
    IsotypicProfile p;
    p.trivial = s.image(rep(idempotent_trivial())).dim();
    p.sign = s.image(rep(idempotent_sign())).dim();
    std::size_t std_dim = s.image(rep(idempotent_standard())).dim();
    p.standard = std_dim / 2;
    return p;
}

Subspace group_orbit_span(const GroupVector& v) {
    return Representation::regular().orbit_span({v.to_vector()});
}

} // namespace operad_forge
