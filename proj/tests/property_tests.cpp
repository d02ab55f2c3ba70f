#include <doctest.h>

#include "operad_forge/dsl.hpp"
#include "operad_forge/operad.hpp"
#include "operad_forge/tensor_closure.hpp"

#include <random>

using namespace operad_forge;

namespace {

constexpr int kCases = 250;

struct Gen {
    std::mt19937_64 rng;
    explicit Gen(std::uint64_t seed) : rng(seed) {}

    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

    Rational rational() {
        Rational r(uniform(-6, 6), uniform(1, 4));
        r.canonicalize();
        return r;
    }

    // sparse, so that orbit spans of different sizes come up
    Vector vector(std::size_t n, int density = 3) {
        Vector v(n);
        for (auto& x : v)
            if (uniform(0, 9) < density) x = rational();
        return v;
    }

    Perm3 perm() { return Perm3::from_index(static_cast<std::size_t>(uniform(0, 5))); }
    GroupVector group_vector() { return GroupVector::from_vector(vector(6, 5)); }

    SymmetryClass symmetry() {
        static const SymmetryClass all[] = {SymmetryClass::Regular, SymmetryClass::Commutative,
                                            SymmetryClass::Anticommutative};
        return all[uniform(0, 2)];
    }

    Weight3Element element(SymmetryClass s = SymmetryClass::Regular) {
        return Weight3Element(s, vector(weight3_dim(s), s == SymmetryClass::Regular ? 2 : 5));
    }

    RelationModule module() {
        std::vector<Weight3Element> xs;
        const int k = uniform(0, 2);
        for (int i = 0; i < k; ++i) xs.push_back(element());
        return orbit_span(xs);
    }

    MixedProduct product() { return MixedProduct({rational(), rational(), rational(), rational()}); }
};

} // namespace

TEST_CASE("group action: act(g*h, x) = act(g, act(h, x))") {
    Gen gen(101);
    for (int c = 0; c < kCases; ++c) {
        const SymmetryClass s = gen.symmetry();
        const Weight3Element x = gen.element(s);
        const Perm3 g = gen.perm(), h = gen.perm();
        CHECK(act(g * h, x) == act(g, act(h, x)));
        CHECK(act(Perm3(), x) == x);
        // also on the group algebra
        const GroupVector v = gen.group_vector();
        CHECK((g * h) * v == g * (h * v));
    }
}

TEST_CASE("psi / decompose_LR round trip") {
    Gen gen(202);
    for (int c = 0; c < kCases; ++c) {
        const LRPair p{gen.group_vector(), gen.group_vector()};
        CHECK(decompose_LR(relation_from_pair(p)) == p);
        const Weight3Element x = gen.element();
        CHECK(relation_from_pair(decompose_LR(x)) == x);
        const Perm3 g = gen.perm();
        // psi is equivariant: psi(g*v) = act(g, psi(v))
        CHECK(psi(g * p.v, Side::L) == act(g, psi(p.v, Side::L)));
        CHECK(psi(g * p.w, Side::R) == act(g, psi(p.w, Side::R)));
    }
}

TEST_CASE("dual is an involution and complements dimension") {
    Gen gen(303);
    for (int c = 0; c < kCases; ++c) {
        const QuadraticOperad p("random", gen.module());
        const QuadraticOperad d = dual(p);
        CHECK(d.relations().dim() + p.relations().dim() == 12);
        CHECK(dual(d).relations() == p.relations());
        CHECK(isotypic_multiplicities(d.relations()).dim() == d.relations().dim());
    }
}

TEST_CASE("subspace dimension formulas") {
    Gen gen(404);
    for (int c = 0; c < kCases; ++c) {
        const std::size_t n = static_cast<std::size_t>(gen.uniform(1, 8));
        std::vector<Vector> as, bs;
        for (int i = gen.uniform(0, 4); i > 0; --i) as.push_back(gen.vector(n));
        for (int i = gen.uniform(0, 4); i > 0; --i) bs.push_back(gen.vector(n));
        const Subspace a = Subspace::span(as, n), b = Subspace::span(bs, n);
        CHECK(a.sum(b).dim() + a.intersect(b).dim() == a.dim() + b.dim());
        CHECK(a.dim() + a.orthogonal_complement().dim() == n);
        CHECK(a.orthogonal_complement().orthogonal_complement() == a);
        for (const auto& x : as) CHECK(a.contains(x));
        CHECK(a.sum(b).contains(a));
        CHECK(a.contains(a.intersect(b)));
    }
}

TEST_CASE("isotypic dimension formula on random modules") {
    Gen gen(505);
    for (int c = 0; c < kCases; ++c) {
        const RelationModule r = gen.module();
        const IsotypicProfile p = isotypic_multiplicities(r);
        CHECK(p.dim() == r.dim());
        CHECK(p.trivial <= 2);
        CHECK(p.sign <= 2);
        CHECK(p.standard <= 4);
        CHECK(rank(r) <= 2);
    }
}

TEST_CASE("DSL print / parse round trips") {
    Gen gen(606);
    for (int c = 0; c < kCases; ++c) {
        const SymmetryClass s = gen.symmetry();
        const Weight3Element x = gen.element(s);
        CHECK(parse_weight3(format(x), s) == x);
        const GroupVector v = gen.group_vector();
        CHECK(parse_group_vector(format(v)) == v);
        const Rational q = gen.rational() * gen.rational() + gen.rational();
        CHECK(parse_rational(to_string(q)) == q);
    }
}

TEST_CASE("expand is linear and equivariant") {
    Gen gen(707);
    for (int c = 0; c < kCases; ++c) {
        const Weight3Element x = gen.element(), y = gen.element();
        const Rational k = gen.rational();
        const MixedProduct m = gen.product();
        const SymmetryClass sa = gen.symmetry(), sb = gen.symmetry();
        const TensorElement3 ex = expand(x, m, sa, sb), ey = expand(y, m, sa, sb);
        CHECK(expand(x + y * k, m, sa, sb) == ex + ey * k);
        const Perm3 g = gen.perm();
        CHECK(expand(act(g, x), m, sa, sb) == ex.act(g));
    }
}
