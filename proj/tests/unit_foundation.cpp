#include <doctest.h>

#include "operad_forge/error.hpp"
#include "operad_forge/linalg.hpp"

using namespace operad_forge;

namespace {
Vector v(std::initializer_list<int> xs) {
    Vector out;
    for (int x : xs) out.emplace_back(x);
    return out;
}
} // namespace

TEST_CASE("rational parsing is canonical") {
    CHECK(parse_rational("6/4") == Rational(3, 2));
    CHECK(parse_rational("-2/4") == Rational(-1, 2));
    CHECK_THROWS_AS(parse_rational("-2/-4"), Error);
    CHECK(to_string(parse_rational("10/5")) == "2");
    CHECK(to_string(Rational(-3, 9)) == "-1/3");
    CHECK_THROWS_AS(parse_rational("1/0"), Error);
    CHECK_THROWS_AS(parse_rational("abc"), Error);
    CHECK_THROWS_AS(parse_rational(""), Error);
}

TEST_CASE("span reduces to rref") {
    Subspace s = Subspace::span({v({2, 4, 0}), v({1, 2, 0}), v({0, 0, 3})}, 3);
    CHECK(s.dim() == 2);
    CHECK(s.basis()[0] == v({1, 2, 0}));
    CHECK(s.basis()[1] == v({0, 0, 1}));
    CHECK(s.pivots() == std::vector<std::size_t>{0, 2});
    CHECK(s.free_columns() == std::vector<std::size_t>{1});
}

TEST_CASE("equal spans compare equal whatever the generators") {
    Subspace a = Subspace::span({v({1, 1, 0}), v({0, 1, 1})}, 3);
    Subspace b = Subspace::span({v({1, 0, -1}), v({1, 2, 1})}, 3);
    CHECK(a == b);
    CHECK(a.contains(v({2, 3, 1})));
    CHECK_FALSE(a.contains(v({1, 0, 0})));
}

TEST_CASE("zero and full spaces") {
    Subspace z(4);
    CHECK(z.is_zero());
    CHECK(z.orthogonal_complement() == Subspace::full(4));
    CHECK(Subspace::full(4).orthogonal_complement() == z);
    CHECK(Subspace::span({}, 4) == z);
    CHECK(Subspace::span({zero_vector(4)}, 4) == z);
}

TEST_CASE("sum, intersection, complement") {
    Subspace a = Subspace::span({v({1, 0, 0, 0}), v({0, 1, 0, 0})}, 4);
    Subspace b = Subspace::span({v({0, 1, 0, 0}), v({0, 0, 1, 0})}, 4);
    CHECK(a.sum(b).dim() == 3);
    CHECK(a.intersect(b) == Subspace::span({v({0, 1, 0, 0})}, 4));
    CHECK(combine(a, b, CombineMode::Sum) == a.sum(b));
    CHECK(combine(a, b, CombineMode::Intersection) == a.intersect(b));
    Subspace perp = a.orthogonal_complement();
    CHECK(perp == Subspace::span({v({0, 0, 1, 0}), v({0, 0, 0, 1})}, 4));
    CHECK(a.sum(b).dim() + a.intersect(b).dim() == a.dim() + b.dim());
}

TEST_CASE("reduce lands on free columns") {
    Subspace s = Subspace::span({v({1, 2, 0}), v({0, 0, 1})}, 3);
    Vector r = s.reduce(v({3, 7, 5}));
    CHECK(r == v({0, 1, 0}));
    CHECK(is_zero(s.reduce(v({2, 4, -1}))));
}

TEST_CASE("kernel and image") {
    Matrix m = Matrix::from_rows({v({1, 1, 0}), v({0, 1, 1})}, 3);
    auto k = kernel(m);
    REQUIRE(k.size() == 1);
    CHECK(is_zero(m.apply(k[0])));
    Matrix swap = Matrix::from_rows({v({0, 1, 0}), v({1, 0, 0}), v({0, 0, 1})}, 3);
    Subspace line = Subspace::span({v({1, 0, 0})}, 3);
    CHECK(line.image(swap) == Subspace::span({v({0, 1, 0})}, 3));
}

TEST_CASE("dimension mismatches are reported") {
    Subspace a = Subspace::span({v({1, 0})}, 2);
    Subspace b = Subspace::span({v({1, 0, 0})}, 3);
    CHECK_THROWS_AS(a.sum(b), DimensionMismatch);
    CHECK_THROWS_AS(Subspace::span({v({1, 0, 0})}, 2), DimensionMismatch);
}

TEST_CASE("matrix arithmetic") {
    Matrix a = Matrix::from_rows({v({1, 2}), v({3, 4})}, 2);
    CHECK(a * Matrix::identity(2) == a);
    CHECK((a - a) == Matrix(2, 2));
    CHECK(a.scaled(2) == a + a);
    CHECK((a * a)(0, 0) == 7);
}
