#include <doctest.h>

#include "operad_forge/algebra_instance.hpp"
#include "operad_forge/dsl.hpp"
#include "operad_forge/error.hpp"
#include "operad_forge/presets.hpp"
#include "operad_forge/serialize.hpp"

using namespace operad_forge;

TEST_CASE("structure constants") {
    AlgebraInstance a(2, "toy");
    a.set_product(0, 1, {Rational(0), Rational(3)});
    CHECK(a.constant(0, 1, 1) == 3);
    CHECK(a.product(0, 1) == Vector{Rational(0), Rational(3)});
    CHECK(a.multiply({Rational(1), Rational(0)}, {Rational(0), Rational(2)}) == Vector{Rational(0), Rational(6)});
}

TEST_CASE("evaluation of the associator") {
    const AlgebraInstance h = example("heisenberg");
    CHECK(check_relations(h, preset("lie").relations()).empty());
    const AlgebraInstance u = example("unit_1d");
    CHECK(is_zero(evaluate(u, associator(), 0, 0, 0)));
}

TEST_CASE("leib_tilde_3d") {
    const AlgebraInstance a = example("leib_tilde_3d");
    CHECK(check_relations(a, tilde(preset("leib")).relations()).empty());
    auto bad = symmetry_violation(a, SymmetryClass::Commutative);
    REQUIRE(bad);
    CHECK(*bad == std::pair<std::size_t, std::size_t>{0, 2});
}

TEST_CASE("fixtures satisfy their operads") {
    const std::vector<std::pair<std::string, std::string>> pairs = {
        {"abelian_2d", "ass"},   {"unit_1d", "ass"},        {"unit_1d", "comm3"},     {"lie_2d", "lie"},
        {"heisenberg", "lie"},   {"comm_assoc_2d", "com"},  {"comm_assoc_2d", "ass"}, {"leibniz_3d", "leib"},
        {"zinbiel_3d", "zinb"},  {"poisson_small", "poiss"}, {"poisson_aff1", "poiss"}};
    for (const auto& [inst, op] : pairs) {
        CAPTURE(inst);
        CAPTURE(op);
        CHECK(check_relations(example(inst), preset(op).relations()).empty());
    }
}

TEST_CASE("violations are found") {
    const AlgebraInstance z = example("zinbiel_3d");
    auto vs = check_relations(z, preset("leib").relations());
    CHECK_FALSE(vs.empty());
    CHECK_FALSE(is_zero(vs.front().value));
    CHECK_THROWS_AS(check_relations(example("leibniz_3d"), preset("lie").relations()), InvalidParameter);
}

TEST_CASE("tensor instances") {
    const AlgebraInstance a = example("lie_2d"), b = example("comm_assoc_2d");
    const AlgebraInstance t = tensor_instance(a, b, MixedProduct::identity());
    CHECK(t.dim() == 4);
    CHECK(check_relations(t, preset("lie").relations()).empty());
    const AlgebraInstance p = tensor_instance(example("poisson_aff1"), example("poisson_aff1"),
                                              MixedProduct::poisson_twist());
    CHECK_FALSE(check_targets(p, relation_targets(preset("poiss").relations())).empty());
    const AlgebraInstance q = tensor_instance(example("poisson_aff1"), example("poisson_aff1"),
                                              MixedProduct::poisson_twist_corrected());
    CHECK(check_targets(q, relation_targets(preset("poiss").relations())).empty());
}

TEST_CASE("instances round-trip through JSON") {
    for (const auto& n : example_names()) {
        const AlgebraInstance a = example(n);
        CHECK(instance_from_json(to_json(a)) == a);
    }
    CHECK(parse_instance(R"({"dim": 1, "structure": [[1, 1, 1, "1/2"]]})").constant(0, 0, 0) == Rational(1, 2));
    CHECK_THROWS_AS(parse_instance(R"({"dim": 1, "structure": [[1, 2, 1, 1]]})"), InvalidParameter);
    CHECK_THROWS_AS(parse_instance(R"({"dim": 0, "structure": []})"), InvalidParameter);
    CHECK_THROWS_AS(parse_instance("{"), ParseError);
    CHECK_THROWS_AS(example("nonesuch"), UnknownName);
}

TEST_CASE("counterexample search") {
    const QuadraticOperad leib = preset("leib");
    const auto targets = presentation_relations(*leib.presentation(), SymmetryClass::Regular);
    SearchResult r = search_counterexample(leib.relations(), preset("zinb").relations(), targets, 4, 0);
    REQUIRE(r.found);
    const AlgebraInstance t = tensor_instance(r.found->a, r.found->b, MixedProduct::identity());
    CHECK(check_relations(r.found->a, leib.relations()).empty());
    CHECK(check_relations(r.found->b, preset("zinb").relations()).empty());
    CHECK_FALSE(check_targets(t, targets).empty());

    SearchResult again = search_counterexample(leib.relations(), preset("zinb").relations(), targets, 4, 0);
    CHECK(again.pairs_tried == r.pairs_tried);
    CHECK(again.found->a == r.found->a);
    CHECK_THROWS_AS(search_counterexample(leib.relations(), leib.relations(), targets, 9, 0), InvalidParameter);
}

TEST_CASE("associative tensors satisfy every G_i") {
    for (int i = 1; i <= 6; ++i) {
        const QuadraticOperad p = gi_ass(i);
        const AlgebraInstance t = tensor_instance(example("comm_assoc_2d"), example("unit_1d"), MixedProduct::identity());
        CHECK(check_relations(t, p.relations()).empty());
    }
}
