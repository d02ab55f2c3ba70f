#include "operad_forge/tensor_closure.hpp"

#include "operad_forge/dsl.hpp"
#include "operad_forge/error.hpp"
#include "operad_forge/presets.hpp"

namespace operad_forge {

namespace {

Matrix transpose(const Matrix& m) {
    Matrix out(m.cols(), m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out(c, r) = m(r, c);
    return out;
}

// Renormalizes a monomial after optional swaps at its inner and outer node.
Monomial3 decorate(const Monomial3& m, bool swap_inner, bool swap_outer) {
    const auto& l = m.labels.images();
    if (m.shape == Shape::Left) {
        int p = l[0], q = l[1];
        if (swap_inner) std::swap(p, q);
        if (!swap_outer) return {Shape::Left, Perm3::from_images({p, q, l[2]})};
        return {Shape::Right, Perm3::from_images({l[2], p, q})};
    }
    int p = l[1], q = l[2];
    if (swap_inner) std::swap(p, q);
    if (!swap_outer) return {Shape::Right, Perm3::from_images({l[0], p, q})};
    return {Shape::Left, Perm3::from_images({p, q, l[0]})};
}

// Rows of the A-side quotient W_A / R_A, one B-side vector per free column.
std::vector<std::pair<std::size_t, Vector>> split(const Subspace& ra, const Matrix& t) {
    Matrix reduced(t.rows(), t.cols());
    for (std::size_t b = 0; b < t.cols(); ++b) {
        Vector col(t.rows());
        for (std::size_t a = 0; a < t.rows(); ++a) col[a] = t(a, b);
        Vector red = ra.reduce(col);
        for (std::size_t a = 0; a < t.rows(); ++a) reduced(a, b) = red[a];
    }
    std::vector<std::pair<std::size_t, Vector>> out;
    for (std::size_t a : ra.free_columns()) out.emplace_back(a, reduced.row(a));
    return out;
}

} // namespace

// ---------------------------------------------------------------------------
// MixedProduct

MixedProduct::MixedProduct() { coeffs_.fill(Rational(0)); }

MixedProduct::MixedProduct(std::array<Rational, 4> coeffs) : coeffs_(std::move(coeffs)) {}

MixedProduct MixedProduct::identity() { return MixedProduct({1, 0, 0, 0}); }

MixedProduct MixedProduct::bracket() { return MixedProduct({1, 0, 0, -1}); }

MixedProduct MixedProduct::poisson_twist() { return MixedProduct({3, -1, -1, 1}); }

MixedProduct MixedProduct::poisson_twist_corrected() { return MixedProduct({3, 1, 1, -1}); }

MixedProduct MixedProduct::swapped() const {
    // (mu o s)(y, x) = (mu o s tau)(x, y) on both sides at once.
    return MixedProduct({coeffs_[3], coeffs_[2], coeffs_[1], coeffs_[0]});
}

MixedProduct MixedProduct::operator-() const {
    return MixedProduct({-coeffs_[0], -coeffs_[1], -coeffs_[2], -coeffs_[3]});
}

// ---------------------------------------------------------------------------
// TensorElement3

TensorElement3::TensorElement3(SymmetryClass a, SymmetryClass b)
    : a_(a), b_(b), coords_(weight3_dim(a), weight3_dim(b)) {}

TensorElement3::TensorElement3(SymmetryClass a, SymmetryClass b, Matrix coords)
    : a_(a), b_(b), coords_(std::move(coords)) {
    if (coords_.rows() != weight3_dim(a) || coords_.cols() != weight3_dim(b))
        throw DimensionMismatch("tensor element: coordinate shape does not match classes");
}

bool TensorElement3::is_zero() const { return term_count() == 0; }

std::size_t TensorElement3::term_count() const { return terms().size(); }

std::vector<TensorElement3::Term> TensorElement3::terms() const {
    std::vector<Term> out;
    for (std::size_t a = 0; a < coords_.rows(); ++a)
        for (std::size_t b = 0; b < coords_.cols(); ++b)
            if (sgn(coords_(a, b)) != 0) out.push_back({a, b, coords_(a, b)});
    return out;
}

TensorElement3 TensorElement3::operator+(const TensorElement3& o) const {
    if (o.a_ != a_ || o.b_ != b_) throw DimensionMismatch("tensor element sum: classes differ");
    return TensorElement3(a_, b_, coords_ + o.coords_);
}

TensorElement3 TensorElement3::operator*(const Rational& c) const { return TensorElement3(a_, b_, coords_.scaled(c)); }

TensorElement3 TensorElement3::act(const Perm3& g) const {
    const Matrix& ma = weight3_representation(a_)(g);
    const Matrix& mb = weight3_representation(b_)(g);
    return TensorElement3(a_, b_, ma * coords_ * transpose(mb));
}

// ---------------------------------------------------------------------------

TensorElement3 expand(const Weight3Element& relation, const MixedProduct& product, SymmetryClass side_a,
                      SymmetryClass side_b) {
    if (relation.symmetry() != SymmetryClass::Regular)
        throw UnsupportedSymmetry("expand takes a regular-class template; lift comb relations first");
    Matrix t(12, 12);
    const auto& alpha = product.coefficients();
    for (std::size_t m = 0; m < 12; ++m) {
        const Rational& c = relation.coords()[m];
        if (sgn(c) == 0) continue;
        const Monomial3 mono = Monomial3::from_index(m);
        for (std::size_t inner = 0; inner < 4; ++inner) {
            if (sgn(alpha[inner]) == 0) continue;
            for (std::size_t outer = 0; outer < 4; ++outer) {
                if (sgn(alpha[outer]) == 0) continue;
                Monomial3 ma = decorate(mono, inner & 2, outer & 2);
                Monomial3 mb = decorate(mono, inner & 1, outer & 1);
                t(ma.index(), mb.index()) += c * alpha[inner] * alpha[outer];
            }
        }
    }
    if (is_symmetric(side_a)) t = projection_matrix(side_a) * t;
    if (is_symmetric(side_b)) t = t * transpose(projection_matrix(side_b));
    return TensorElement3(side_a, side_b, std::move(t));
}

const TargetCheck* ClosureCertificate::first_failure() const {
    for (const auto& c : checks)
        if (!c.member) return &c;
    return nullptr;
}

ClosureCertificate closure_holds(const RelationModule& ra, const RelationModule& rb, const MixedProduct& product,
                                 const std::vector<Weight3Element>& targets) {
    ClosureCertificate cert;
    for (const auto& target : targets) {
        TargetCheck check{lift(target), expand(lift(target), product, ra.symmetry(), rb.symmetry()), true, {}, {}, {}};
        for (auto& [a, comp] : split(ra.space(), check.expansion.coords())) {
            Vector res = rb.space().reduce(comp);
            if (!operad_forge::is_zero(res)) {
                check.member = false;
                check.residual.emplace_back(a, std::move(res));
            }
            check.quotient_columns.push_back(a);
            check.components.push_back(std::move(comp));
        }
        cert.holds = cert.holds && check.member;
        cert.checks.push_back(std::move(check));
    }
    return cert;
}

std::vector<Weight3Element> relation_targets(const RelationModule& r) {
    std::vector<Weight3Element> out;
    for (const auto& b : r.basis()) out.push_back(lift(b));
    return out;
}

ClosureCertificate theorem1_check(const QuadraticOperad& p, std::uint64_t seed) {
    QuadraticOperad t = tilde(p, seed);
    return closure_holds(p.relations(), t.relations(), MixedProduct::identity(), relation_targets(p.relations()));
}

RelationModule minimal_companion(const QuadraticOperad& p, SymmetryClass companion) {
    const RelationModule& r = p.relations();
    std::vector<Weight3Element> parts;
    for (const auto& target : relation_targets(r)) {
        TensorElement3 e = expand(target, MixedProduct::identity(), r.symmetry(), companion);
        for (auto& [a, comp] : split(r.space(), e.coords())) {
            if (!operad_forge::is_zero(comp)) parts.emplace_back(companion, std::move(comp));
        }
    }
    return orbit_span(parts, companion);
}

Weight3Element jacobi_template() { return parse_relation("(x1*x2)*x3 + (x2*x3)*x1 + (x3*x1)*x2"); }

BracketCheck bracket_is_lie(const RelationModule& ra, const RelationModule& rb) {
    const MixedProduct beta = MixedProduct::bracket();
    BracketCheck out;
    out.antisymmetric = beta.swapped() == -beta;
    out.jacobi = closure_holds(ra, rb, beta, {jacobi_template()});
    return out;
}

ClosureCertificate twisted_poisson_check(const MixedProduct& product) {
    const RelationModule r = preset("poiss").relations();
    return closure_holds(r, r, product, relation_targets(r));
}

} // namespace operad_forge
