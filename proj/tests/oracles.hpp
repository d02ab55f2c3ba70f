#pragma once

// Hand-entered reference data.  Each entry is a list of generators in the
// relation syntax; the reference module is their orbit span.  Typed in by
// hand, never computed.

#include "operad_forge/dsl.hpp"
#include "operad_forge/operad.hpp"

#include <string>
#include <vector>

namespace oracle {

using Gens = std::vector<std::string>;

// R_i: associator antisymmetrized over G_i
inline const std::vector<Gens> kR = {
    {"(x1*x2)*x3 - x1*(x2*x3)"},
    {"(x1*x2)*x3 - x1*(x2*x3) - (x2*x1)*x3 + x2*(x1*x3)"},
    {"(x1*x2)*x3 - x1*(x2*x3) - (x1*x3)*x2 + x1*(x3*x2)"},
    {"(x1*x2)*x3 - x1*(x2*x3) - (x3*x2)*x1 + x3*(x2*x1)"},
    {"(x1*x2)*x3 - x1*(x2*x3) + (x2*x3)*x1 - x2*(x3*x1) + (x3*x1)*x2 - x3*(x1*x2)"},
    {"(x1*x2)*x3 - x1*(x2*x3) + (x2*x3)*x1 - x2*(x3*x1) + (x3*x1)*x2 - x3*(x1*x2)"
     " - (x2*x1)*x3 + x2*(x1*x3) - (x3*x2)*x1 + x3*(x2*x1) - (x1*x3)*x2 + x1*(x3*x2)"},
};

// (R_i)!
inline const std::vector<Gens> kRDual = {
    {"(x1*x2)*x3 - x1*(x2*x3)"},
    {"(x1*x2)*x3 - x1*(x2*x3)", "(x1*x2)*x3 - (x2*x1)*x3"},
    {"(x1*x2)*x3 - x1*(x2*x3)", "(x1*x2)*x3 - (x1*x3)*x2"},
    {"(x1*x2)*x3 - x1*(x2*x3)", "(x1*x2)*x3 - (x3*x2)*x1"},
    {"(x1*x2)*x3 - x1*(x2*x3)", "(x1*x2)*x3 - (x2*x3)*x1"},
    {"(x1*x2)*x3 - x1*(x2*x3)", "(x1*x2)*x3 - (x2*x1)*x3", "(x1*x2)*x3 - (x1*x3)*x2"},
};

// R_i^{p3}: plain sums over G_i
inline const std::vector<Gens> kRp3 = {
    {"(x1*x2)*x3 - x1*(x2*x3)"},
    {"(x1*x2)*x3 - x1*(x2*x3) + (x2*x1)*x3 - x2*(x1*x3)"},
    {"(x1*x2)*x3 - x1*(x2*x3) + (x1*x3)*x2 - x1*(x3*x2)"},
    {"(x1*x2)*x3 - x1*(x2*x3) + (x3*x2)*x1 - x3*(x2*x1)"},
    {"(x1*x2)*x3 - x1*(x2*x3) + (x2*x3)*x1 - x2*(x3*x1) + (x3*x1)*x2 - x3*(x1*x2)"},
    {"(x1*x2)*x3 - x1*(x2*x3) + (x2*x3)*x1 - x2*(x3*x1) + (x3*x1)*x2 - x3*(x1*x2)"
     " + (x2*x1)*x3 - x2*(x1*x3) + (x3*x2)*x1 - x3*(x2*x1) + (x1*x3)*x2 - x1*(x3*x2)"},
};

// (R_i^{p3})!
inline const std::vector<Gens> kRp3Dual = {
    {"(x1*x2)*x3 - x1*(x2*x3)"},
    {"(x1*x2)*x3 - x1*(x2*x3)", "(x1*x2)*x3 + (x2*x1)*x3"},
    {"(x1*x2)*x3 - x1*(x2*x3)", "(x1*x2)*x3 + (x1*x3)*x2"},
    {"(x1*x2)*x3 - x1*(x2*x3)", "(x1*x2)*x3 + (x3*x2)*x1"},
    {"(x1*x2)*x3 - x1*(x2*x3)", "(x1*x2)*x3 - (x2*x3)*x1"},
    {"(x1*x2)*x3 - x1*(x2*x3)", "(x1*x2)*x3 + (x2*x1)*x3", "(x1*x2)*x3 + (x1*x3)*x2"},
};

inline operad_forge::RelationModule module(const Gens& gens) {
    std::vector<operad_forge::Weight3Element> xs;
    for (const auto& g : gens) xs.push_back(operad_forge::parse_relation(g));
    return operad_forge::orbit_span(xs);
}

// tilde(Leib): x(yz) = (xy)z, (xy)z = (xz)y
inline const Gens kTildeLeib = {"x1*(x2*x3) - (x1*x2)*x3", "(x1*x2)*x3 - (x1*x3)*x2"};

// five generators expected inside tilde(Poiss)
inline const Gens kTildePoissGens = {
    "(x1*x2)*x3 - (x1*x3)*x2", "(x1*x2)*x3 - (x2*x3)*x1", "(x1*x2)*x3 - (x2*x1)*x3",
    "(x1*x2)*x3 - (x3*x1)*x2", "(x1*x2)*x3 - x1*(x2*x3)",
};

// Zinbiel: (xy)z = x(yz) + x(zy)
inline const char* kZinbiel = "(x1*x2)*x3 - x1*(x2*x3) - x1*(x3*x2)";

// orbit of 2Id - t12 - t13 - t23 + c1 in K[S3]
inline constexpr std::size_t kOrbitDim5 = 5;

} // namespace oracle
