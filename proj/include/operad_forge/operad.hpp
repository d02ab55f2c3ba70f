#pragma once

// Binary quadratic operads given by their arity-3 relation modules.

#include "operad_forge/weight_space.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace operad_forge {

/// An S3-invariant subspace of the weight-3 space of a symmetry class.
class RelationModule {
public:
    explicit RelationModule(SymmetryClass s = SymmetryClass::Regular);
    /// Throws NotInvariant if the subspace is not S3-stable.
    RelationModule(SymmetryClass s, Subspace space);

    static RelationModule full(SymmetryClass s);

    SymmetryClass symmetry() const { return sym_; }
    const Subspace& space() const { return space_; }
    std::size_t dim() const { return space_.dim(); }
    bool is_zero() const { return space_.is_zero(); }

    bool contains(const Weight3Element& x) const;
    bool contains(const RelationModule& other) const;
    std::vector<Weight3Element> basis() const;

    bool operator==(const RelationModule&) const = default;

private:
    SymmetryClass sym_;
    Subspace space_;
};

/// Smallest invariant subspace containing every input.  Throws
/// DimensionMismatch on mixed classes; `s` is the class of an empty list.
RelationModule orbit_span(const std::vector<Weight3Element>& xs, SymmetryClass s = SymmetryClass::Regular);

IsotypicProfile isotypic_multiplicities(const RelationModule& r);

/// Minimal number of orbit generators.
std::size_t rank(const RelationModule& r);

using Presentation = std::vector<LRPair>;

class QuadraticOperad {
public:
    /// Validates that an explicit presentation generates the relations.
    QuadraticOperad(std::string name, RelationModule relations, std::optional<Presentation> presentation = std::nullopt);

    const std::string& name() const { return name_; }
    SymmetryClass symmetry() const { return relations_.symmetry(); }
    const RelationModule& relations() const { return relations_; }
    const std::optional<Presentation>& presentation() const { return presentation_; }

    QuadraticOperad renamed(std::string name) const;

private:
    std::string name_;
    RelationModule relations_;
    std::optional<Presentation> presentation_;
};

/// Relation vectors psi(v,L) - psi(w,R) of a presentation, projected to `s`.
std::vector<Weight3Element> presentation_relations(const Presentation& p, SymmetryClass s);

bool operads_equal(const QuadraticOperad& p, const QuadraticOperad& q);

/// Diagonal pairing on the regular space: +sign(labels) on xi*(xj*xk),
/// -sign(labels) on (xi*xj)*xk.
const Vector& koszul_pairing();

/// Koszul dual.  Regular class: orthogonal complement under koszul_pairing.
/// Symmetric classes: only the classical pairs Lie <-> Com and
/// free anticommutative <-> nilpotent commutative; anything else throws
/// UnsupportedSymmetry.
QuadraticOperad dual(const QuadraticOperad& p);

/// Class-swapping dual of a symmetric-class operad under the comb-basis dot
/// product.  Used for enumerating symmetric-class operads.
QuadraticOperad symmetric_dual(const QuadraticOperad& p);

/// rank(relations) module generators, found by seeded random search inside
/// the relation module, each split with decompose_LR (after symmetric_lift
/// for the symmetric classes).
Presentation find_presentation(const QuadraticOperad& p, std::uint64_t seed = 0);

struct TildeResult {
    QuadraticOperad operad;
    Presentation presentation;
    bool presentation_was_explicit = false;
    std::vector<Weight3Element> generators; // before orbit closure
};

TildeResult tilde_detail(const QuadraticOperad& p, std::uint64_t seed = 0);
QuadraticOperad tilde(const QuadraticOperad& p, std::uint64_t seed = 0);
/// Tilde computed from the given presentation, ignoring any stored one.
TildeResult tilde_from_presentation(const QuadraticOperad& p, const Presentation& pres);

/// Smallest number of generators found by drawing `trials` random tuples of
/// p = 1, 2, ... elements of r and testing their orbit span.  Independent
/// of the isotypic rank formula.
std::size_t rank_by_search(const RelationModule& r, std::size_t trials, std::uint64_t seed);

/// All invariant subspaces of a weight-3 space whose isotypic
/// multiplicities are at most one (true for the symmetric classes).
std::vector<RelationModule> enumerate_submodules(SymmetryClass s);

} // namespace operad_forge
