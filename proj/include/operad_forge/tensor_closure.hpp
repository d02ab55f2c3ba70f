#pragma once

// Symbolic checks that a product on A (x) B satisfies weight-3 relations,
// decided by linear algebra in Gamma(3) (x) Gamma(3).

#include "operad_forge/operad.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace operad_forge {

/// Index of the pair (s, t) in Sigma2 x Sigma2, order (e,e), (e,tau), (tau,e), (tau,tau).
enum class NodeOption : std::size_t { EE = 0, ET = 1, TE = 2, TT = 3 };

/// sum alpha_st (mu_A o s) (x) (mu_B o t).
class MixedProduct {
public:
    MixedProduct();
    explicit MixedProduct(std::array<Rational, 4> coeffs);

    static MixedProduct identity();
    /// mu_A (x) mu_B - (mu_A o tau) (x) (mu_B o tau).
    static MixedProduct bracket();
    /// 3 mu_A(x)mu_B - mu_A(x)(mu_B o tau) - (mu_A o tau)(x)mu_B + (mu_A o tau)(x)(mu_B o tau).
    static MixedProduct poisson_twist();
    /// 3 mu_A(x)mu_B + mu_A(x)(mu_B o tau) + (mu_A o tau)(x)mu_B - (mu_A o tau)(x)(mu_B o tau),
    /// four times the usual Poisson structure on A (x) B.
    static MixedProduct poisson_twist_corrected();

    const std::array<Rational, 4>& coefficients() const { return coeffs_; }
    const Rational& operator[](NodeOption o) const { return coeffs_[static_cast<std::size_t>(o)]; }

    /// The product with its two arguments exchanged.
    MixedProduct swapped() const;
    MixedProduct operator-() const;

    bool operator==(const MixedProduct&) const = default;

private:
    std::array<Rational, 4> coeffs_;
};

/// Element of W_A (x) W_B, stored as a dim_A x dim_B coefficient matrix.
class TensorElement3 {
public:
    TensorElement3(SymmetryClass a, SymmetryClass b);
    TensorElement3(SymmetryClass a, SymmetryClass b, Matrix coords);

    SymmetryClass side_a() const { return a_; }
    SymmetryClass side_b() const { return b_; }
    const Matrix& coords() const { return coords_; }
    bool is_zero() const;
    std::size_t term_count() const;

    TensorElement3 operator+(const TensorElement3& o) const;
    TensorElement3 operator*(const Rational& c) const;
    bool operator==(const TensorElement3&) const = default;

    /// Diagonal action sigma (x) sigma.
    TensorElement3 act(const Perm3& g) const;

    struct Term {
        std::size_t a;
        std::size_t b;
        Rational coef;
    };
    std::vector<Term> terms() const;

private:
    SymmetryClass a_;
    SymmetryClass b_;
    Matrix coords_;
};

/// Evaluates a regular-class relation on A (x) B with the given product at
/// both tree nodes, then reduces each side to its symmetry class.
TensorElement3 expand(const Weight3Element& relation, const MixedProduct& product, SymmetryClass side_a,
                      SymmetryClass side_b);

struct TargetCheck {
    Weight3Element target;
    TensorElement3 expansion;
    bool member = false;
    /// Quotient coordinates of W_A / R_A (monomial indices of side A).
    std::vector<std::size_t> quotient_columns;
    /// For each quotient column, the side-B component.  In R_B on success.
    std::vector<Vector> components;
    /// Nonzero components reduced modulo R_B, keyed by quotient column; empty on success.
    std::vector<std::pair<std::size_t, Vector>> residual;
};

struct ClosureCertificate {
    bool holds = true;
    std::vector<TargetCheck> checks;
    const TargetCheck* first_failure() const;
};

/// True iff every expand(target) lies in R_A (x) W_B + W_A (x) R_B.
ClosureCertificate closure_holds(const RelationModule& ra, const RelationModule& rb, const MixedProduct& product,
                                 const std::vector<Weight3Element>& targets);

/// Regular representatives of the relation basis (comb classes lifted).
std::vector<Weight3Element> relation_targets(const RelationModule& r);

/// A satisfies P, B satisfies tilde(P), natural product: does A (x) B satisfy P?
ClosureCertificate theorem1_check(const QuadraticOperad& p, std::uint64_t seed = 0);

/// Least invariant S in the companion class with
/// Delta(R_P) in R_P (x) W + W (x) S.
RelationModule minimal_companion(const QuadraticOperad& p, SymmetryClass companion = SymmetryClass::Regular);

/// (x1*x2)*x3 + (x2*x3)*x1 + (x3*x1)*x2, the cyclic sum of the left comb.
Weight3Element jacobi_template();

struct BracketCheck {
    bool antisymmetric = false;
    ClosureCertificate jacobi;
    bool holds() const { return antisymmetric && jacobi.holds; }
};

BracketCheck bracket_is_lie(const RelationModule& ra, const RelationModule& rb);

ClosureCertificate twisted_poisson_check(const MixedProduct& product = MixedProduct::poisson_twist());

} // namespace operad_forge
