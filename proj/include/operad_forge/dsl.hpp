#pragma once

// Text syntax for relations and group-algebra vectors.
//
//   relation  := term (('+'|'-') term)*          (a leading '-' negates)
//   term      := [rational '*'] monomial
//   monomial  := '(' var '*' var ')' '*' var
//              | var '*' '(' var '*' var ')'
//              | 'A(' var ',' var ',' var ')'     (associator)
//              | 'm1' | 'm2' | 'm3'               (comb basis, symmetric classes)
//   var       := x | y | z | x1 | x2 | x3
//   rational  := integer ['/' positive-integer]
//
// Group vectors use the same term structure over Id, t12, t13, t23, c1, c2.

#include "operad_forge/weight_space.hpp"

#include <string>
#include <string_view>

namespace operad_forge {

/// Parses a relation into the 12-dimensional regular space.
Weight3Element parse_relation(std::string_view text);

/// Parses into the space of the given class.  Regular monomials are
/// projected when the class is symmetric; comb monomials m1..m3 are
/// accepted only for symmetric classes.
Weight3Element parse_weight3(std::string_view text, SymmetryClass s);

GroupVector parse_group_vector(std::string_view text);

/// Canonical text: terms in basis order, "0" for the zero element.
std::string format(const Weight3Element& x);
std::string format(const GroupVector& v);

} // namespace operad_forge
