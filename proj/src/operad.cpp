#include "operad_forge/operad.hpp"

#include "operad_forge/error.hpp"

#include <random>

namespace operad_forge {

namespace {

Vector random_element(const Subspace& s, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> coef(-3, 3);
    Vector v = zero_vector(s.ambient_dim());
    for (const auto& b : s.basis()) {
        int c = coef(rng);
        if (c == 0) continue;
        for (std::size_t i = 0; i < v.size(); ++i) v[i] += c * b[i];
    }
    return v;
}

Subspace orbit_span_vectors(SymmetryClass s, const std::vector<Vector>& vs) {
    return weight3_representation(s).orbit_span(vs);
}

} // namespace

// ---------------------------------------------------------------------------
// RelationModule

RelationModule::RelationModule(SymmetryClass s) : sym_(s), space_(weight3_dim(s)) {}

RelationModule::RelationModule(SymmetryClass s, Subspace space) : sym_(s), space_(std::move(space)) {
    if (space_.ambient_dim() != weight3_dim(s)) throw DimensionMismatch("relation subspace has the wrong ambient dimension");
    if (!weight3_representation(s).is_invariant(space_)) throw NotInvariant("relation subspace is not S3-invariant");
}

RelationModule RelationModule::full(SymmetryClass s) { return RelationModule(s, Subspace::full(weight3_dim(s))); }

bool RelationModule::contains(const Weight3Element& x) const {
    if (x.symmetry() != sym_) throw DimensionMismatch("element and relation module are in different classes");
    return space_.contains(x.coords());
}

bool RelationModule::contains(const RelationModule& other) const {
    return other.sym_ == sym_ && space_.contains(other.space_);
}

std::vector<Weight3Element> RelationModule::basis() const {
    std::vector<Weight3Element> out;
    for (const auto& b : space_.basis()) out.emplace_back(sym_, b);
    return out;
}

RelationModule orbit_span(const std::vector<Weight3Element>& xs, SymmetryClass s) {
    if (!xs.empty()) s = xs.front().symmetry();
    std::vector<Vector> vs;
    for (const auto& x : xs) {
        if (x.symmetry() != s) throw DimensionMismatch("orbit_span: inputs from mixed symmetry classes");
        vs.push_back(x.coords());
    }
    return RelationModule(s, orbit_span_vectors(s, vs));
}

IsotypicProfile isotypic_multiplicities(const RelationModule& r) {
    return isotypic_multiplicities(weight3_representation(r.symmetry()), r.space());
}

std::size_t rank(const RelationModule& r) { return isotypic_multiplicities(r).min_generators(); }

// ---------------------------------------------------------------------------
// QuadraticOperad

std::vector<Weight3Element> presentation_relations(const Presentation& p, SymmetryClass s) {
    std::vector<Weight3Element> out;
    for (const auto& pair : p) out.push_back(project(relation_from_pair(pair), s));
    return out;
}

QuadraticOperad::QuadraticOperad(std::string name, RelationModule relations, std::optional<Presentation> presentation)
    : name_(std::move(name)), relations_(std::move(relations)), presentation_(std::move(presentation)) {
    if (presentation_) {
        RelationModule generated = orbit_span(presentation_relations(*presentation_, symmetry()), symmetry());
        if (!(generated == relations_)) {
            throw InvalidParameter("presentation of '" + name_ + "' does not generate its relation module");
        }
    }
}

QuadraticOperad QuadraticOperad::renamed(std::string name) const {
    QuadraticOperad out = *this;
    out.name_ = std::move(name);
    return out;
}

bool operads_equal(const QuadraticOperad& p, const QuadraticOperad& q) {
    return p.symmetry() == q.symmetry() && p.relations() == q.relations();
}

const Vector& koszul_pairing() {
    static const Vector d = [] {
        Vector v = zero_vector(12);
        for (std::size_t i = 0; i < 12; ++i) {
            Monomial3 m = Monomial3::from_index(i);
            int e = m.labels.sign();
            v[i] = m.shape == Shape::Right ? e : -e;
        }
        return v;
    }();
    return d;
}

QuadraticOperad symmetric_dual(const QuadraticOperad& p) {
    if (!is_symmetric(p.symmetry())) throw UnsupportedSymmetry("symmetric_dual expects a commutative or anticommutative operad");
    SymmetryClass target = p.symmetry() == SymmetryClass::Commutative ? SymmetryClass::Anticommutative
                                                                       : SymmetryClass::Commutative;
    return QuadraticOperad(p.name() + "!", RelationModule(target, p.relations().space().orthogonal_complement()));
}

QuadraticOperad dual(const QuadraticOperad& p) {
    if (is_symmetric(p.symmetry())) {
        const auto& r = p.relations();
        const bool lie = p.symmetry() == SymmetryClass::Anticommutative && r.dim() == 1 &&
                         r.contains(Weight3Element(SymmetryClass::Anticommutative, {1, 1, 1}));
        const bool com = p.symmetry() == SymmetryClass::Commutative && r.dim() == 2 &&
                         r.contains(Weight3Element(SymmetryClass::Commutative, {1, -1, 0})) &&
                         r.contains(Weight3Element(SymmetryClass::Commutative, {0, 1, -1}));
        const bool free_anti = p.symmetry() == SymmetryClass::Anticommutative && r.is_zero();
        const bool nil_comm = p.symmetry() == SymmetryClass::Commutative && r.dim() == 3;
        if (!(lie || com || free_anti || nil_comm)) {
            throw UnsupportedSymmetry("no Koszul pairing for symmetric class '" + to_string(p.symmetry()) +
                                      "' beyond the classical Lie/Com pairs");
        }
        return symmetric_dual(p);
    }
    const Vector& d = koszul_pairing();
    std::vector<Vector> twisted;
    for (const auto& b : p.relations().space().basis()) {
        Vector t = b;
        for (std::size_t i = 0; i < t.size(); ++i) t[i] *= d[i];
        twisted.push_back(std::move(t));
    }
    Subspace perp = Subspace::span(twisted, 12).orthogonal_complement();
    return QuadraticOperad(p.name() + "!", RelationModule(SymmetryClass::Regular, std::move(perp)));
}

Presentation find_presentation(const QuadraticOperad& p, std::uint64_t seed) {
    // Symmetric classes: generators are lifted with the equivariant section
    // before splitting, so the pair projects back onto the generator.
    const RelationModule& r = p.relations();
    const SymmetryClass s = r.symmetry();
    const std::size_t k = rank(r);
    if (k == 0) return {};
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        std::vector<Vector> gens;
        for (std::size_t i = 0; i < k; ++i) gens.push_back(random_element(r.space(), rng));
        if (!(orbit_span_vectors(s, gens) == r.space())) continue;
        Presentation pres;
        for (const auto& g : gens) pres.push_back(decompose_LR(symmetric_lift(Weight3Element(s, g))));
        if (!(orbit_span(presentation_relations(pres, s), s) == r)) {
            throw Error("internal: presentation does not regenerate the relation module");
        }
        return pres;
    }
    throw Error("no presentation found for '" + p.name() + "' after 1000 attempts");
}

TildeResult tilde_from_presentation(const QuadraticOperad& p, const Presentation& pres) {
    const SymmetryClass out_sym = is_symmetric(p.symmetry()) ? SymmetryClass::Commutative : SymmetryClass::Regular;
    const auto& elems = Perm3::all();
    std::vector<Weight3Element> gens;
    auto basis = [](const Perm3& g) { return GroupVector::basis(g); };
    for (const auto& [v, w] : pres) {
        for (std::size_t i = 0; i < elems.size(); ++i) {
            for (std::size_t j = i + 1; j < elems.size(); ++j) {
                if (sgn(v[elems[i]]) != 0 && sgn(v[elems[j]]) != 0)
                    gens.push_back(psi(basis(elems[i]) - basis(elems[j]), Side::L));
                if (sgn(w[elems[i]]) != 0 && sgn(w[elems[j]]) != 0)
                    gens.push_back(psi(basis(elems[i]) - basis(elems[j]), Side::R));
            }
        }
        for (const auto& gi : elems) {
            for (const auto& gj : elems) {
                if (sgn(v[gi]) != 0 && sgn(w[gj]) != 0) gens.push_back(psi(basis(gi), Side::L) - psi(basis(gj), Side::R));
            }
        }
    }
    for (auto& g : gens) g = project(g, out_sym);
    RelationModule rel = orbit_span(gens, out_sym);
    return TildeResult{QuadraticOperad("tilde(" + p.name() + ")", std::move(rel)), pres, false, std::move(gens)};
}

TildeResult tilde_detail(const QuadraticOperad& p, std::uint64_t seed) {
    if (p.presentation()) {
        TildeResult r = tilde_from_presentation(p, *p.presentation());
        r.presentation_was_explicit = true;
        return r;
    }
    return tilde_from_presentation(p, find_presentation(p, seed));
}

QuadraticOperad tilde(const QuadraticOperad& p, std::uint64_t seed) { return tilde_detail(p, seed).operad; }

std::size_t rank_by_search(const RelationModule& r, std::size_t trials, std::uint64_t seed) {
    if (r.is_zero()) return 0;
    std::mt19937_64 rng(seed);
    for (std::size_t k = 1; k <= r.dim(); ++k) {
        for (std::size_t t = 0; t < trials; ++t) {
            std::vector<Vector> gens;
            for (std::size_t i = 0; i < k; ++i) gens.push_back(random_element(r.space(), rng));
            if (orbit_span_vectors(r.symmetry(), gens) == r.space()) return k;
        }
    }
    return r.dim();
}

std::vector<RelationModule> enumerate_submodules(SymmetryClass s) {
    const Representation& rep = weight3_representation(s);
    const Subspace full = Subspace::full(rep.dim());
    std::vector<Subspace> components;
    for (const auto& e : {idempotent_trivial(), idempotent_sign(), idempotent_standard()}) {
        Subspace c = full.image(rep(e));
        if (c.is_zero()) continue;
        components.push_back(std::move(c));
    }
    IsotypicProfile prof = isotypic_multiplicities(rep, full);
    if (prof.trivial > 1 || prof.sign > 1 || prof.standard > 1) {
        throw UnsupportedSymmetry("submodule enumeration needs multiplicity-free isotypic components");
    }
    std::vector<RelationModule> out;
    for (std::size_t mask = 0; mask < (std::size_t{1} << components.size()); ++mask) {
        Subspace acc(rep.dim());
        for (std::size_t i = 0; i < components.size(); ++i) {
            if (mask & (std::size_t{1} << i)) acc = acc.sum(components[i]);
        }
        out.emplace_back(s, std::move(acc));
    }
    return out;
}

} // namespace operad_forge
