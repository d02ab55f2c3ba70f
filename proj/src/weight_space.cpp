#include "operad_forge/weight_space.hpp"

#include "operad_forge/error.hpp"

namespace operad_forge {

namespace {

constexpr std::size_t kRegularDim = 12;

// Comb index of the unordered pair {a,b}, and whether (a,b) is the
// canonical orientation (1,2), (2,3), (3,1).
std::pair<std::size_t, bool> comb_of_pair(int a, int b) {
    if ((a == 1 && b == 2) || (a == 2 && b == 1)) return {0, a == 1};
    if ((a == 2 && b == 3) || (a == 3 && b == 2)) return {1, a == 2};
    return {2, a == 3};
}

constexpr std::array<std::array<int, 3>, 3> kCombLabels{{{1, 2, 3}, {2, 3, 1}, {3, 1, 2}}};

Matrix build_projection(SymmetryClass target) {
    Matrix p(3, kRegularDim);
    const bool anti = target == SymmetryClass::Anticommutative;
    for (std::size_t idx = 0; idx < kRegularDim; ++idx) {
        Monomial3 m = Monomial3::from_index(idx);
        const auto& l = m.labels.images();
        int sign = 1;
        std::pair<std::size_t, bool> c;
        if (m.shape == Shape::Left) {
            c = comb_of_pair(l[0], l[1]);
        } else {
            // xi*(xj*xk) = +-(xj*xk)*xi
            c = comb_of_pair(l[1], l[2]);
            if (anti) sign = -sign;
        }
        if (anti && !c.second) sign = -sign;
        p(c.first, idx) = sign;
    }
    return p;
}

Representation build_regular_rep() {
    std::array<Matrix, Perm3::kOrder> mats;
    for (const auto& g : Perm3::all()) {
        Matrix m(kRegularDim, kRegularDim);
        const Perm3 ginv = g.inverse();
        for (std::size_t idx = 0; idx < kRegularDim; ++idx) {
            Monomial3 src = Monomial3::from_index(idx);
            // labels (i,j,k) -> (g^-1(i), g^-1(j), g^-1(k))
            Monomial3 dst{src.shape, src.labels * ginv};
            m(dst.index(), idx) = 1;
        }
        mats[g.index()] = std::move(m);
    }
    return Representation(std::move(mats));
}

Matrix canonical_lift_matrix() {
    Matrix l(kRegularDim, 3);
    for (std::size_t c = 0; c < 3; ++c) {
        Monomial3 m{Shape::Left, Perm3::from_images(kCombLabels[c])};
        l(m.index(), c) = 1;
    }
    return l;
}

Representation build_comb_rep(SymmetryClass s) {
    const Representation& reg = weight3_representation(SymmetryClass::Regular);
    const Matrix& p = projection_matrix(s);
    const Matrix lift = canonical_lift_matrix();
    std::array<Matrix, Perm3::kOrder> mats;
    for (const auto& g : Perm3::all()) mats[g.index()] = p * reg(g) * lift;
    return Representation(std::move(mats));
}

void require_same(const Weight3Element& a, const Weight3Element& b) {
    if (a.symmetry() != b.symmetry()) throw DimensionMismatch("weight-3 elements of different symmetry classes");
}

} // namespace

std::size_t weight3_dim(SymmetryClass s) { return s == SymmetryClass::Regular ? kRegularDim : 3; }

std::string to_string(SymmetryClass s) {
    switch (s) {
    case SymmetryClass::Regular: return "regular";
    case SymmetryClass::Commutative: return "comm";
    case SymmetryClass::Anticommutative: return "anticomm";
    }
    return "regular";
}

SymmetryClass symmetry_from_string(const std::string& s) {
    if (s == "regular") return SymmetryClass::Regular;
    if (s == "comm" || s == "commutative") return SymmetryClass::Commutative;
    if (s == "anticomm" || s == "anticommutative") return SymmetryClass::Anticommutative;
    throw UnknownName("unknown symmetry class '" + s + "'");
}

bool is_symmetric(SymmetryClass s) { return s != SymmetryClass::Regular; }

Monomial3 Monomial3::from_index(std::size_t i) {
    if (i >= kRegularDim) throw Error("monomial index out of range");
    return Monomial3{i < 6 ? Shape::Left : Shape::Right, Perm3::from_index(i % 6)};
}

std::string Monomial3::text() const {
    const auto& l = labels.images();
    auto x = [&](std::size_t k) { return "x" + std::to_string(l[k]); };
    if (shape == Shape::Left) return "(" + x(0) + "*" + x(1) + ")*" + x(2);
    return x(0) + "*(" + x(1) + "*" + x(2) + ")";
}

std::string monomial_text(SymmetryClass s, std::size_t index) {
    if (s == SymmetryClass::Regular) return Monomial3::from_index(index).text();
    if (index >= 3) throw Error("comb index out of range");
    return "m" + std::to_string(index + 1);
}

// ---------------------------------------------------------------------------

Weight3Element::Weight3Element(SymmetryClass s) : sym_(s), coords_(zero_vector(weight3_dim(s))) {}

Weight3Element::Weight3Element(SymmetryClass s, Vector coords) : sym_(s), coords_(std::move(coords)) {
    if (coords_.size() != weight3_dim(s)) {
        throw DimensionMismatch("weight-3 element of class " + to_string(s) + " needs " +
                                std::to_string(weight3_dim(s)) + " coordinates");
    }
}

Weight3Element Weight3Element::monomial(const Monomial3& m) {
    return Weight3Element(SymmetryClass::Regular, unit_vector(kRegularDim, m.index()));
}

Weight3Element Weight3Element::comb(SymmetryClass s, std::size_t m) {
    if (!is_symmetric(s)) throw UnsupportedSymmetry("comb monomials exist only in symmetric classes");
    return Weight3Element(s, unit_vector(3, m));
}

Weight3Element Weight3Element::operator+(const Weight3Element& o) const {
    require_same(*this, o);
    return Weight3Element(sym_, add(coords_, o.coords_));
}

Weight3Element Weight3Element::operator-(const Weight3Element& o) const {
    require_same(*this, o);
    return Weight3Element(sym_, sub(coords_, o.coords_));
}

Weight3Element Weight3Element::operator*(const Rational& c) const {
    return Weight3Element(sym_, scale(c, coords_));
}

const Representation& weight3_representation(SymmetryClass s) {
    static const Representation regular = build_regular_rep();
    if (s == SymmetryClass::Regular) return regular;
    static const Representation comm = build_comb_rep(SymmetryClass::Commutative);
    static const Representation anti = build_comb_rep(SymmetryClass::Anticommutative);
    return s == SymmetryClass::Commutative ? comm : anti;
}

Weight3Element act(const Perm3& g, const Weight3Element& x) {
    return Weight3Element(x.symmetry(), weight3_representation(x.symmetry()).act(g, x.coords()));
}

Weight3Element psi(const GroupVector& v, Side side) {
    const Shape shape = side == Side::L ? Shape::Left : Shape::Right;
    Weight3Element base = Weight3Element::monomial(Monomial3{shape, Perm3()});
    Weight3Element out;
    for (const auto& g : Perm3::all()) {
        if (sgn(v[g]) != 0) out = out + act(g, base) * v[g];
    }
    return out;
}

LRPair decompose_LR(const Weight3Element& x) {
    if (x.symmetry() != SymmetryClass::Regular) {
        throw UnsupportedSymmetry("decompose_LR needs a regular-class element; symmetric classes require an explicit presentation");
    }
    // act(g, base) has labels g^-1, so the coefficient of g is read at g^-1.
    std::array<Rational, Perm3::kOrder> v, w;
    for (const auto& g : Perm3::all()) {
        const std::size_t a = g.inverse().index();
        v[g.index()] = x.coords()[a];
        w[g.index()] = -x.coords()[6 + a];
    }
    return {GroupVector(v), GroupVector(w)};
}

Weight3Element relation_from_pair(const LRPair& p) { return psi(p.v, Side::L) - psi(p.w, Side::R); }

const Matrix& projection_matrix(SymmetryClass target) {
    static const Matrix comm = build_projection(SymmetryClass::Commutative);
    static const Matrix anti = build_projection(SymmetryClass::Anticommutative);
    if (target == SymmetryClass::Regular) throw UnsupportedSymmetry("projection target must be a symmetric class");
    return target == SymmetryClass::Commutative ? comm : anti;
}

Weight3Element project(const Weight3Element& x, SymmetryClass target) {
    if (x.symmetry() != SymmetryClass::Regular) {
        if (x.symmetry() == target) return x;
        throw UnsupportedSymmetry("project expects a regular-class element");
    }
    if (target == SymmetryClass::Regular) return x;
    return Weight3Element(target, projection_matrix(target).apply(x.coords()));
}

Weight3Element lift(const Weight3Element& x) {
    if (x.symmetry() == SymmetryClass::Regular) return x;
    static const Matrix l = canonical_lift_matrix();
    return Weight3Element(SymmetryClass::Regular, l.apply(x.coords()));
}

Weight3Element symmetric_lift(const Weight3Element& x) {
    if (x.symmetry() == SymmetryClass::Regular) return x;
    const Matrix& p = projection_matrix(x.symmetry());
    Vector out = zero_vector(kRegularDim);
    for (std::size_t r = 0; r < 3; ++r) {
        for (std::size_t c = 0; c < kRegularDim; ++c) {
            if (sgn(p(r, c)) != 0) out[c] += p(r, c) * x.coords()[r] / 4;
        }
    }
    return Weight3Element(SymmetryClass::Regular, std::move(out));
}

} // namespace operad_forge
