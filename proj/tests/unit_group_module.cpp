#include <doctest.h>

#include "operad_forge/dsl.hpp"
#include "operad_forge/error.hpp"
#include "operad_forge/operad.hpp"
#include "operad_forge/symmetric_group.hpp"

using namespace operad_forge;

TEST_CASE("enumeration order and names") {
    const char* names[] = {"Id", "t12", "t13", "t23", "c1", "c2"};
    for (std::size_t i = 0; i < 6; ++i) {
        CHECK(Perm3::from_index(i).name() == names[i]);
        CHECK(Perm3::from_name(names[i]).index() == i);
    }
    CHECK_THROWS_AS(Perm3::from_name("t99"), UnknownName);
    CHECK_THROWS_AS(Perm3::from_images({1, 1, 2}), Error);
}

TEST_CASE("signs and inverses") {
    for (const auto& g : Perm3::all()) {
        CHECK(g * g.inverse() == Perm3());
        CHECK((g * g).sign() == 1);
    }
    CHECK(Perm3::from_name("t12").sign() == -1);
    CHECK(Perm3::from_name("c1").sign() == 1);
    CHECK(Perm3::from_name("c1").inverse() == Perm3::from_name("c2"));
}

TEST_CASE("product applies left factor first") {
    const Perm3 t12 = Perm3::from_name("t12"), t23 = Perm3::from_name("t23");
    const Perm3 p = t12 * t23;
    // 1 -> 2 -> 3
    CHECK(p(1) == t23(t12(1)));
    CHECK(p(2) == t23(t12(2)));
    CHECK_FALSE(t12 * t23 == t23 * t12);
}

TEST_CASE("subgroups") {
    int sizes[] = {1, 2, 2, 2, 3, 6};
    for (int i = 1; i <= 6; ++i) {
        int n = 0;
        for (bool b : subgroup(i)) n += b;
        CHECK(n == sizes[i - 1]);
    }
}

TEST_CASE("orbit spans in the group algebra") {
    const GroupVector V = parse_group_vector("Id - t12 - t13 - t23 + c1 + c2");
    const GroupVector W = parse_group_vector("Id + t12 + t13 + t23 + c1 + c2");
    CHECK(group_orbit_span(V).dim() == 1);
    CHECK(group_orbit_span(W).dim() == 1);
    CHECK(group_orbit_span(parse_group_vector("2*Id - t12 - t13 - t23 + c1")).dim() == 5);
    CHECK(group_orbit_span(GroupVector::basis(Perm3())).dim() == 6);
    CHECK(group_orbit_span(GroupVector()).dim() == 0);
}

TEST_CASE("central idempotents") {
    const GroupVector et = idempotent_trivial(), es = idempotent_sign(), ed = idempotent_standard();
    CHECK(et + es + ed == GroupVector::basis(Perm3()));
    CHECK(et * et == et);
    CHECK(es * es == es);
    CHECK(ed * ed == ed);
    CHECK((et * es).is_zero());
    CHECK((es * ed).is_zero());
    CHECK((ed * et).is_zero());
}

TEST_CASE("regular representation profile") {
    const auto& reg = Representation::regular();
    IsotypicProfile p = isotypic_multiplicities(reg, Subspace::full(6));
    CHECK(p == IsotypicProfile{1, 1, 2});
    CHECK(p.min_generators() == 1);
}

TEST_CASE("isotypic profile of weight-3 spaces") {
    CHECK(isotypic_multiplicities(RelationModule::full(SymmetryClass::Regular)) == IsotypicProfile{2, 2, 4});
    CHECK(isotypic_multiplicities(RelationModule(SymmetryClass::Regular)) == IsotypicProfile{0, 0, 0});
}

TEST_CASE("non-invariant subspaces are refused") {
    const auto& reg = Representation::regular();
    Subspace line = Subspace::span({GroupVector::basis(Perm3()).to_vector()}, 6);
    CHECK_FALSE(reg.is_invariant(line));
    CHECK_THROWS_AS(isotypic_multiplicities(reg, line), NotInvariant);
}
