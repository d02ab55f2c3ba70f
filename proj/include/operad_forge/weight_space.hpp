#pragma once

// Arity-3 components of the free operad on one binary operation.
//
// Regular class (no symmetry): 12 monomials, indexed shape-major as
//   index = 6 * shape + arrangement
// where shape 0 is (xi*xj)*xk, shape 1 is xi*(xj*xk), and the arrangement
// (i,j,k) is the permutation with those images, in Perm3 order.
//
// Commutative / anticommutative classes: the comb basis
//   m1 = (x1*x2)*x3,  m2 = (x2*x3)*x1,  m3 = (x3*x1)*x2.

#include "operad_forge/symmetric_group.hpp"

#include <string>

namespace operad_forge {

enum class SymmetryClass { Regular, Commutative, Anticommutative };

std::size_t weight3_dim(SymmetryClass s);
std::string to_string(SymmetryClass s);
SymmetryClass symmetry_from_string(const std::string& s);
bool is_symmetric(SymmetryClass s);

enum class Shape { Left = 0, Right = 1 };
enum class Side { L, R };

struct Monomial3 {
    Shape shape = Shape::Left;
    Perm3 labels; // images (i,j,k) of (1,2,3)

    std::size_t index() const { return 6 * static_cast<std::size_t>(shape) + labels.index(); }
    static Monomial3 from_index(std::size_t i);
    std::string text() const;
};

/// Canonical text of basis monomial `index` in the given class.
std::string monomial_text(SymmetryClass s, std::size_t index);

class Weight3Element {
public:
    explicit Weight3Element(SymmetryClass s = SymmetryClass::Regular);
    Weight3Element(SymmetryClass s, Vector coords);
    static Weight3Element monomial(const Monomial3& m);
    static Weight3Element comb(SymmetryClass s, std::size_t m /* 0..2 */);

    SymmetryClass symmetry() const { return sym_; }
    const Vector& coords() const { return coords_; }
    std::size_t dim() const { return coords_.size(); }
    bool is_zero() const { return operad_forge::is_zero(coords_); }

    Weight3Element operator+(const Weight3Element& o) const;
    Weight3Element operator-(const Weight3Element& o) const;
    Weight3Element operator*(const Rational& c) const;

    bool operator==(const Weight3Element&) const = default;

private:
    SymmetryClass sym_;
    Vector coords_;
};

/// The S3 action on the weight-3 space of a class.
const Representation& weight3_representation(SymmetryClass s);

Weight3Element act(const Perm3& g, const Weight3Element& x);

/// Psi^side_v applied to (x1*x2)*x3 (L) or x1*(x2*x3) (R).
Weight3Element psi(const GroupVector& v, Side side);

struct LRPair {
    GroupVector v;
    GroupVector w;
    bool operator==(const LRPair&) const = default;
};

/// The unique (v, w) with x = psi(v, L) - psi(w, R).  Regular class only.
LRPair decompose_LR(const Weight3Element& x);

/// psi(v, L) - psi(w, R).
Weight3Element relation_from_pair(const LRPair& p);

/// 3 x 12 rewriting matrix onto the comb basis of a symmetric class.
const Matrix& projection_matrix(SymmetryClass target);

Weight3Element project(const Weight3Element& x, SymmetryClass target);

/// Regular representative: each comb monomial lifts to its left-comb
/// monomial.  Identity on regular input.
Weight3Element lift(const Weight3Element& x);

/// Equivariant section of project: each comb monomial lifts to the average
/// of its signed preimages.  Identity on regular input.
Weight3Element symmetric_lift(const Weight3Element& x);

} // namespace operad_forge
