#include "operad_forge/algebra_instance.hpp"

#include "operad_forge/error.hpp"
#include "operad_forge/presets.hpp"

#include <map>
#include <random>

namespace operad_forge {

AlgebraInstance::AlgebraInstance(std::size_t dim, std::string name)
    : dim_(dim), name_(std::move(name)), c_(dim * dim * dim, Rational(0)) {
    if (dim == 0) throw InvalidParameter("algebra dimension must be at least 1");
}

const Rational& AlgebraInstance::constant(std::size_t i, std::size_t j, std::size_t k) const {
    if (i >= dim_ || j >= dim_ || k >= dim_) throw DimensionMismatch("structure constant index out of range");
    return c_[(i * dim_ + j) * dim_ + k];
}

void AlgebraInstance::set_constant(std::size_t i, std::size_t j, std::size_t k, const Rational& c) {
    if (i >= dim_ || j >= dim_ || k >= dim_) throw DimensionMismatch("structure constant index out of range");
    c_[(i * dim_ + j) * dim_ + k] = c;
}

void AlgebraInstance::set_product(std::size_t i, std::size_t j, const Vector& out) {
    if (out.size() != dim_) throw DimensionMismatch("product vector has wrong length");
    for (std::size_t k = 0; k < dim_; ++k) set_constant(i, j, k, out[k]);
}

Vector AlgebraInstance::product(std::size_t i, std::size_t j) const {
    auto first = c_.begin() + static_cast<std::ptrdiff_t>((i * dim_ + j) * dim_);
    return Vector(first, first + static_cast<std::ptrdiff_t>(dim_));
}

Vector AlgebraInstance::multiply(const Vector& x, const Vector& y) const {
    if (x.size() != dim_ || y.size() != dim_) throw DimensionMismatch("multiply: wrong vector length");
    Vector out = zero_vector(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        if (sgn(x[i]) == 0) continue;
        for (std::size_t j = 0; j < dim_; ++j) {
            if (sgn(y[j]) == 0) continue;
            Rational f = x[i] * y[j];
            const Rational* row = &c_[(i * dim_ + j) * dim_];
            for (std::size_t k = 0; k < dim_; ++k)
                if (sgn(row[k]) != 0) out[k] += f * row[k];
        }
    }
    return out;
}

Vector evaluate(const AlgebraInstance& a, const Weight3Element& relation, std::size_t i, std::size_t j, std::size_t k) {
    const Weight3Element r = lift(relation);
    const std::array<std::size_t, 3> e{i, j, k};
    Vector out = zero_vector(a.dim());
    for (std::size_t m = 0; m < 12; ++m) {
        const Rational& c = r.coords()[m];
        if (sgn(c) == 0) continue;
        const Monomial3 mono = Monomial3::from_index(m);
        const auto& l = mono.labels.images();
        const std::size_t p = e[static_cast<std::size_t>(l[0] - 1)];
        const std::size_t q = e[static_cast<std::size_t>(l[1] - 1)];
        const std::size_t s = e[static_cast<std::size_t>(l[2] - 1)];
        Vector v = mono.shape == Shape::Left ? a.multiply(a.product(p, q), unit_vector(a.dim(), s))
                                             : a.multiply(unit_vector(a.dim(), p), a.product(q, s));
        for (std::size_t t = 0; t < a.dim(); ++t)
            if (sgn(v[t]) != 0) out[t] += c * v[t];
    }
    return out;
}

std::optional<std::pair<std::size_t, std::size_t>> symmetry_violation(const AlgebraInstance& a, SymmetryClass s) {
    if (!is_symmetric(s)) return std::nullopt;
    const Rational sign = s == SymmetryClass::Commutative ? 1 : -1;
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = i; j < a.dim(); ++j)
            if (a.product(i, j) != scale(sign, a.product(j, i))) return std::make_pair(i, j);
    return std::nullopt;
}

std::vector<Violation> check_targets(const AlgebraInstance& a, const std::vector<Weight3Element>& targets) {
    std::vector<Violation> out;
    for (std::size_t r = 0; r < targets.size(); ++r)
        for (std::size_t i = 0; i < a.dim(); ++i)
            for (std::size_t j = 0; j < a.dim(); ++j)
                for (std::size_t k = 0; k < a.dim(); ++k) {
                    Vector v = evaluate(a, targets[r], i, j, k);
                    if (!operad_forge::is_zero(v)) out.push_back({r, {i, j, k}, std::move(v)});
                }
    return out;
}

std::vector<Violation> check_relations(const AlgebraInstance& a, const RelationModule& r) {
    if (auto bad = symmetry_violation(a, r.symmetry())) {
        throw InvalidParameter("product is not " + to_string(r.symmetry()) + " at (e" + std::to_string(bad->first + 1) +
                               ", e" + std::to_string(bad->second + 1) + ")");
    }
    return check_targets(a, r.basis());
}

AlgebraInstance tensor_instance(const AlgebraInstance& a, const AlgebraInstance& b, const MixedProduct& product) {
    const std::size_t na = a.dim(), nb = b.dim();
    AlgebraInstance out(na * nb);
    if (!a.name().empty() && !b.name().empty()) out.set_name(a.name() + "(x)" + b.name());
    const auto& alpha = product.coefficients();
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t p = 0; p < nb; ++p)
            for (std::size_t j = 0; j < na; ++j)
                for (std::size_t q = 0; q < nb; ++q) {
                    Vector v = zero_vector(na * nb);
                    for (std::size_t o = 0; o < 4; ++o) {
                        if (sgn(alpha[o]) == 0) continue;
                        Vector x = (o & 2) ? a.product(j, i) : a.product(i, j);
                        Vector y = (o & 1) ? b.product(q, p) : b.product(p, q);
                        for (std::size_t k = 0; k < na; ++k) {
                            if (sgn(x[k]) == 0) continue;
                            for (std::size_t l = 0; l < nb; ++l)
                                if (sgn(y[l]) != 0) v[k * nb + l] += alpha[o] * x[k] * y[l];
                        }
                    }
                    out.set_product(i * nb + p, j * nb + q, v);
                }
    return out;
}

// ---------------------------------------------------------------------------
// Fixtures

namespace {

struct Entry {
    std::size_t i, j, k; // 1-based
    int c;
};

AlgebraInstance build(const std::string& name, std::size_t dim, std::initializer_list<Entry> entries) {
    AlgebraInstance a(dim, name);
    for (const auto& e : entries) a.set_constant(e.i - 1, e.j - 1, e.k - 1, e.c);
    return a;
}

void require(const AlgebraInstance& a, const std::string& operad) {
    if (!check_relations(a, preset(operad).relations()).empty())
        throw Error("fixture " + a.name() + " does not satisfy " + operad);
}

// x.y = x*y + {x,y} on e1 (unit for *) and the bracket {e2,e3} = e3.
AlgebraInstance poisson_small() {
    return build("poisson_small", 3, {{1, 1, 1, 1}, {1, 2, 2, 1}, {2, 1, 2, 1}, {1, 3, 3, 1}, {3, 1, 3, 1},
                                      {2, 3, 3, 1}, {3, 2, 3, -1}});
}

AlgebraInstance make_example(const std::string& name) {
    if (name == "leib_tilde_3d") return build(name, 3, {{1, 1, 2, 1}, {1, 3, 2, 1}, {3, 3, 2, 1}});
    if (name == "abelian_2d") return AlgebraInstance(2, name);
    if (name == "unit_1d") return build(name, 1, {{1, 1, 1, 1}});
    if (name == "lie_2d") return build(name, 2, {{1, 2, 2, 1}, {2, 1, 2, -1}});
    if (name == "heisenberg") return build(name, 3, {{1, 2, 3, 1}, {2, 1, 3, -1}});
    if (name == "comm_assoc_2d") return build(name, 2, {{1, 1, 1, 1}, {1, 2, 2, 1}, {2, 1, 2, 1}});
    if (name == "leibniz_3d") {
        AlgebraInstance a = build(name, 3, {{1, 1, 2, 1}, {2, 1, 3, 1}});
        require(a, "leib");
        return a;
    }
    if (name == "zinbiel_3d") {
        AlgebraInstance a = build(name, 3, {{1, 1, 2, 1}, {1, 2, 3, 1}, {2, 1, 3, 2}});
        require(a, "zinb");
        return a;
    }
    if (name == "poisson_small") {
        AlgebraInstance a = poisson_small();
        require(a, "poiss");
        return a;
    }
    if (name == "poisson_aff1") {
        // Zero commutative product, bracket of the affine line.
        AlgebraInstance a = build(name, 2, {{1, 2, 2, 1}, {2, 1, 2, -1}});
        require(a, "poiss");
        return a;
    }
    throw UnknownName("unknown example '" + name + "'");
}

} // namespace

const std::vector<std::string>& example_names() {
    static const std::vector<std::string> names{"leib_tilde_3d", "abelian_2d",  "unit_1d",       "lie_2d",
                                                "heisenberg",    "comm_assoc_2d", "leibniz_3d",  "zinbiel_3d",
                                                "poisson_small", "poisson_aff1"};
    return names;
}

AlgebraInstance example(const std::string& name) {
    static const std::map<std::string, AlgebraInstance> cache = [] {
        std::map<std::string, AlgebraInstance> m;
        for (const auto& n : example_names()) m.emplace(n, make_example(n));
        return m;
    }();
    auto it = cache.find(name);
    if (it == cache.end()) throw UnknownName("unknown example '" + name + "'");
    return it->second;
}

// ---------------------------------------------------------------------------
// Counterexample search

namespace {

constexpr std::size_t kDrawsPerDim = 48;
constexpr std::size_t kKeepPerDim = 6;

bool satisfies(const AlgebraInstance& a, const RelationModule& r) {
    if (symmetry_violation(a, r.symmetry())) return false;
    return check_targets(a, r.basis()).empty();
}

// Strictly upper-triangular support: e_i e_j lies in span(e_k, k > max(i, j)).
AlgebraInstance random_nilpotent(std::size_t dim, SymmetryClass s, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> coef(-2, 2);
    std::bernoulli_distribution keep(0.35);
    AlgebraInstance a(dim, "random");
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) {
            if (s == SymmetryClass::Anticommutative && i == j) continue;
            if (is_symmetric(s) && j < i) continue;
            for (std::size_t k = std::max(i, j) + 1; k < dim; ++k) {
                if (!keep(rng)) continue;
                const int c = coef(rng);
                a.set_constant(i, j, k, c);
                if (is_symmetric(s) && i != j) a.set_constant(j, i, k, s == SymmetryClass::Commutative ? c : -c);
            }
        }
    return a;
}

std::vector<AlgebraInstance> candidates(const RelationModule& r, std::size_t max_dim, std::mt19937_64& rng) {
    std::vector<AlgebraInstance> out;
    for (const auto& n : example_names()) {
        AlgebraInstance a = example(n);
        if (a.dim() <= max_dim && satisfies(a, r)) out.push_back(std::move(a));
    }
    for (std::size_t d = 2; d <= max_dim; ++d) {
        std::size_t kept = 0;
        for (std::size_t draw = 0; draw < kDrawsPerDim && kept < kKeepPerDim; ++draw) {
            AlgebraInstance a = random_nilpotent(d, r.symmetry(), rng);
            if (satisfies(a, r)) {
                a.set_name("random_" + std::to_string(d) + "d_" + std::to_string(draw));
                out.push_back(std::move(a));
                ++kept;
            }
        }
    }
    return out;
}

std::optional<Violation> first_violation(const AlgebraInstance& a, const std::vector<Weight3Element>& targets) {
    for (std::size_t r = 0; r < targets.size(); ++r)
        for (std::size_t i = 0; i < a.dim(); ++i)
            for (std::size_t j = 0; j < a.dim(); ++j)
                for (std::size_t k = 0; k < a.dim(); ++k) {
                    Vector v = evaluate(a, targets[r], i, j, k);
                    if (!operad_forge::is_zero(v)) return Violation{r, {i, j, k}, std::move(v)};
                }
    return std::nullopt;
}

} // namespace

SearchResult search_counterexample(const RelationModule& ra, const RelationModule& rb,
                                   const std::vector<Weight3Element>& targets, std::size_t max_dim,
                                   std::uint64_t seed, const MixedProduct& product) {
    if (max_dim > 4) throw InvalidParameter("search is limited to factors of dimension at most 4");
    SearchResult out;
    out.seed = seed;
    if (targets.empty()) return out;
    std::mt19937_64 rng(seed);
    std::vector<AlgebraInstance> as = candidates(ra, max_dim, rng);
    std::vector<AlgebraInstance> bs = candidates(rb, max_dim, rng);
    out.candidates_a = as.size();
    out.candidates_b = bs.size();
    for (const auto& a : as)
        for (const auto& b : bs) {
            ++out.pairs_tried;
            AlgebraInstance t = tensor_instance(a, b, product);
            if (auto v = first_violation(t, targets)) {
                out.found = Counterexample{a, b, std::move(*v)};
                return out;
            }
        }
    return out;
}

} // namespace operad_forge
