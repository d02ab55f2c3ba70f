#include "operad_forge/presets.hpp"

#include "operad_forge/dsl.hpp"
#include "operad_forge/error.hpp"

#include <regex>

namespace operad_forge {

namespace {

Weight3Element associator_orbit_sum(int i, bool signed_sum) {
    // X = x1*(x2*x3) - (x1*x2)*x3, summed over G_i with or without signs.
    const Weight3Element x = associator() * Rational(-1);
    const auto members = subgroup(i);
    Weight3Element out;
    for (const auto& g : Perm3::all()) {
        if (!members[g.index()]) continue;
        out = out + act(g, x) * Rational(signed_sum ? g.sign() : 1);
    }
    return out;
}

std::string param_text(const Rational& r) { return to_string(r); }

QuadraticOperad lie() {
    const SymmetryClass s = SymmetryClass::Anticommutative;
    GroupVector v = parse_group_vector("Id + c1 + c2");
    return QuadraticOperad("lie", orbit_span({parse_weight3("m1 + m2 + m3", s)}), Presentation{{v, v}});
}

QuadraticOperad com() {
    const SymmetryClass s = SymmetryClass::Commutative;
    GroupVector id = parse_group_vector("Id");
    return QuadraticOperad("com", orbit_span({project(associator(), s)}), Presentation{{id, id}});
}

// Associative with fully symmetric triple products.
QuadraticOperad comm3() {
    return QuadraticOperad("comm3", orbit_span({associator(), parse_relation("(x*y)*z - (y*x)*z"),
                                                parse_relation("(x*y)*z - (x*z)*y")}));
}

} // namespace

Weight3Element associator() { return parse_relation("(x1*x2)*x3 - x1*(x2*x3)"); }

QuadraticOperad gi_ass(int i) {
    Weight3Element xi = associator_orbit_sum(i, true);
    GroupVector vi = GroupVector::signed_sum(subgroup(i));
    return QuadraticOperad("g" + std::to_string(i) + "ass", orbit_span({xi}), Presentation{{vi, vi}});
}

QuadraticOperad gi_p3ass(int i) {
    Weight3Element yi = associator_orbit_sum(i, false);
    GroupVector wi = GroupVector::plain_sum(subgroup(i));
    return QuadraticOperad("g" + std::to_string(i) + "p3ass", orbit_span({yi}), Presentation{{wi, wi}});
}

QuadraticOperad operad_from_relations(const std::string& name, const std::vector<std::string>& relations, SymmetryClass s) {
    std::vector<Weight3Element> xs;
    for (const auto& r : relations) xs.push_back(parse_weight3(r, s));
    if (is_symmetric(s)) return QuadraticOperad(name, orbit_span(xs, s));
    Presentation pres;
    for (const auto& x : xs) pres.push_back(decompose_LR(x));
    return QuadraticOperad(name, orbit_span(xs, s), pres);
}

QuadraticOperad family_ab(const Rational& alpha, const Rational& beta) {
    if (alpha == 1 && beta == 1) {
        throw InvalidParameter("family_ab excludes (alpha, beta) = (1, 1): that relation is Lie-admissibility itself");
    }
    const Rational c = alpha + beta - 3;
    Weight3Element x = parse_relation("A(x,y,z)") * alpha - parse_relation("A(y,x,z)") * alpha +
                       parse_relation("A(z,y,x)") * c - parse_relation("A(x,z,y)") * beta +
                       parse_relation("A(y,z,x)") * beta - parse_relation("A(z,x,y)") * c;
    if (x.is_zero()) throw InvalidParameter("family_ab relation vanishes");
    std::string name = "family_ab(" + param_text(alpha) + "," + param_text(beta) + ")";
    return QuadraticOperad(name, orbit_span({x}), Presentation{decompose_LR(x)});
}

QuadraticOperad family_t(const Rational& t) {
    if (t == 1) throw InvalidParameter("family_t excludes t = 1");
    // Leading coefficient 2: with 1 the orbit is all of Ass and the dual listing fails.
    Weight3Element x = parse_relation("2*A(x,y,z) + A(z,y,x) + A(y,z,x)") + parse_relation("A(y,x,z)") * (1 + t) +
                       parse_relation("A(z,x,y)") * (1 - t);
    std::string name = "family_t(" + param_text(t) + ")";
    return QuadraticOperad(name, orbit_span({x}), Presentation{decompose_LR(x)});
}

const std::vector<std::string>& preset_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> n{"ass"};
        for (int i = 1; i <= 6; ++i) n.push_back("g" + std::to_string(i) + "ass");
        for (int i = 1; i <= 6; ++i) n.push_back("g" + std::to_string(i) + "p3ass");
        for (const char* s : {"lieadm", "p3ass", "lie", "com", "comm3", "leib", "zinb", "poiss", "table_row_5", "table_row_6"})
            n.emplace_back(s);
        return n;
    }();
    return names;
}

QuadraticOperad preset(const std::string& raw) {
    std::string name;
    for (char ch : raw) {
        if (ch != ' ') name += ch;
    }
    static const std::regex gi(R"(g([1-6])ass)");
    static const std::regex gip3(R"(g([1-6])p3ass)");
    static const std::regex ab(R"(family_ab\(([^,()]+),([^,()]+)\))");
    static const std::regex tf(R"(family_t\(([^,()]+)\))");
    std::smatch m;
    if (name == "ass") return gi_ass(1).renamed("ass");
    if (std::regex_match(name, m, gi)) return gi_ass(std::stoi(m[1]));
    if (std::regex_match(name, m, gip3)) return gi_p3ass(std::stoi(m[1]));
    if (name == "lieadm") return gi_ass(6).renamed("lieadm");
    if (name == "p3ass") return gi_p3ass(6).renamed("p3ass");
    if (name == "lie") return lie();
    if (name == "com") return com();
    if (name == "comm3") return comm3();
    if (name == "leib") return operad_from_relations("leib", {"x*(y*z) - (x*y)*z + (x*z)*y"});
    if (name == "zinb") return operad_from_relations("zinb", {"(x*y)*z - x*(y*z) - x*(z*y)"});
    if (name == "poiss") return operad_from_relations("poiss", {"3*A(x,y,z) - (x*z)*y - (y*z)*x + (y*x)*z + (z*x)*y"});
    if (name == "table_row_5")
        return operad_from_relations("table_row_5", {"2*A(x,y,z) + A(y,x,z) + A(x,z,y) + A(y,z,x) + A(z,x,y)"});
    if (name == "table_row_6")
        return operad_from_relations("table_row_6", {"2*A(x,y,z) - A(y,x,z) - A(z,y,x) - A(x,z,y) + A(y,z,x)"});
    try {
        if (std::regex_match(name, m, ab)) return family_ab(parse_rational(m[1]), parse_rational(m[2]));
        if (std::regex_match(name, m, tf)) return family_t(parse_rational(m[1]));
    } catch (const InvalidParameter&) {
        throw;
    } catch (const Error& e) {
        throw InvalidParameter("bad preset parameter in '" + raw + "': " + e.what());
    }
    throw UnknownName("unknown preset '" + raw + "'");
}

std::vector<QuadraticOperad> regular_presets() {
    std::vector<QuadraticOperad> out;
    for (const auto& n : preset_names()) {
        QuadraticOperad p = preset(n);
        if (p.symmetry() == SymmetryClass::Regular) out.push_back(std::move(p));
    }
    for (auto [a, b] : std::vector<std::pair<int, int>>{{2, 2}, {1, 0}, {5, -1}, {3, 0}, {0, 3}, {0, 0}})
        out.push_back(family_ab(a, b));
    for (int t : {0, 2, -3}) out.push_back(family_t(t));
    return out;
}

} // namespace operad_forge
