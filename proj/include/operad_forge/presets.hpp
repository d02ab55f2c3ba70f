#pragma once

#include "operad_forge/operad.hpp"

#include <string>
#include <vector>

namespace operad_forge {

/// Associator (x1*x2)*x3 - x1*(x2*x3) in the regular space.
Weight3Element associator();

/// Operad by catalog name.  Accepts parameterized spellings
/// "family_ab(a,b)" and "family_t(t)" with rational arguments.
QuadraticOperad preset(const std::string& name);

/// G_i-associative operad (i = 1..6); relations orbit the signed
/// G_i-symmetrized associator, presentation (V_i, V_i).
QuadraticOperad gi_ass(int i);
/// 3-power-associative variant: unsigned sums W_i.
QuadraticOperad gi_p3ass(int i);

/// Lie-admissible (alpha, beta) family; (1,1) is refused.
QuadraticOperad family_ab(const Rational& alpha, const Rational& beta);
/// Lie-admissible t family; t = 1 is refused.
QuadraticOperad family_t(const Rational& t);

/// Operad from one or more relation strings; presentation derived from
/// the regular relation vectors (regular class only).
QuadraticOperad operad_from_relations(const std::string& name, const std::vector<std::string>& relations,
                                      SymmetryClass s = SymmetryClass::Regular);

/// Names of the parameter-free catalog entries, in catalog order.
const std::vector<std::string>& preset_names();
/// Regular-class catalog entries, including sampled family members.
std::vector<QuadraticOperad> regular_presets();

} // namespace operad_forge
