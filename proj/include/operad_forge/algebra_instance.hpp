#pragma once

// Finite-dimensional algebras given by structure constants.

#include "operad_forge/tensor_closure.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace operad_forge {

class AlgebraInstance {
public:
    /// The zero product on K^dim.
    explicit AlgebraInstance(std::size_t dim, std::string name = "");

    std::size_t dim() const { return dim_; }
    const std::string& name() const { return name_; }
    void set_name(std::string name) { name_ = std::move(name); }

    /// c[i][j][k]: e_i * e_j = sum_k c[i][j][k] e_k.  Indices are 0-based.
    const Rational& constant(std::size_t i, std::size_t j, std::size_t k) const;
    void set_constant(std::size_t i, std::size_t j, std::size_t k, const Rational& c);
    /// Sets e_i * e_j = out (0-based).
    void set_product(std::size_t i, std::size_t j, const Vector& out);

    Vector product(std::size_t i, std::size_t j) const;
    Vector multiply(const Vector& x, const Vector& y) const;

    bool operator==(const AlgebraInstance& o) const { return dim_ == o.dim_ && c_ == o.c_; }

private:
    std::size_t dim_;
    std::string name_;
    std::vector<Rational> c_;
};

/// Value of a regular relation at (x1, x2, x3) = (e_a, e_b, e_c).
Vector evaluate(const AlgebraInstance& a, const Weight3Element& relation, std::size_t i, std::size_t j, std::size_t k);

struct Violation {
    std::size_t relation = 0; // index into the relation basis (or target list)
    std::array<std::size_t, 3> triple{}; // 0-based basis indices
    Vector value;
};

/// First pair (i, j) with e_i e_j != e_j e_i (commutative) or e_i e_j != -e_j e_i
/// (anticommutative).  Always nullopt for the regular class.
std::optional<std::pair<std::size_t, std::size_t>> symmetry_violation(const AlgebraInstance& a, SymmetryClass s);

/// Every basis relation of R on every ordered basis triple.  Throws
/// InvalidParameter if R is symmetric and the product does not have that symmetry.
std::vector<Violation> check_relations(const AlgebraInstance& a, const RelationModule& r);

/// Same, for an explicit list of (regular or comb) targets.
std::vector<Violation> check_targets(const AlgebraInstance& a, const std::vector<Weight3Element>& targets);

/// Basis e_i (x) f_p has index i * dim(B) + p.
AlgebraInstance tensor_instance(const AlgebraInstance& a, const AlgebraInstance& b, const MixedProduct& product);

const std::vector<std::string>& example_names();
AlgebraInstance example(const std::string& name);

struct Counterexample {
    AlgebraInstance a;
    AlgebraInstance b;
    Violation witness; // triple is in the tensor basis
};

struct SearchResult {
    std::optional<Counterexample> found;
    std::size_t candidates_a = 0;
    std::size_t candidates_b = 0;
    std::size_t pairs_tried = 0;
    std::uint64_t seed = 0;
};

/// Seeded search over fixtures and random nilpotent instances of dimension
/// at most max_dim.  Absence of a witness proves nothing.
SearchResult search_counterexample(const RelationModule& ra, const RelationModule& rb,
                                   const std::vector<Weight3Element>& targets, std::size_t max_dim,
                                   std::uint64_t seed = 0, const MixedProduct& product = MixedProduct::identity());

} // namespace operad_forge
