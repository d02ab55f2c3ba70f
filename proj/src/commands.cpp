#include "operad_forge/commands.hpp"

#include "operad_forge/dsl.hpp"
#include "operad_forge/error.hpp"
#include "operad_forge/presets.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <functional>
#include <ostream>

namespace operad_forge {

namespace {

constexpr const char* kVersion = "0.1.0";
constexpr std::size_t kRankTrials = 200;

std::string str(std::size_t n) { return std::to_string(n); }

std::vector<std::string> basis_lines(const RelationModule& r) {
    std::vector<std::string> out;
    for (const auto& b : r.basis()) out.push_back(format(b));
    if (out.empty()) out.push_back("0");
    return out;
}

std::string pair_text(const LRPair& p) { return "v = " + format(p.v) + " ; w = " + format(p.w); }

std::string profile_text(const IsotypicProfile& p) {
    return "triv " + str(p.trivial) + ", sgn " + str(p.sign) + ", std " + str(p.standard);
}

// The relations a user wrote down: presentation pairs if any, else the basis.
std::vector<Weight3Element> defining_relations(const QuadraticOperad& p) {
    if (p.presentation() && !p.presentation()->empty()) return presentation_relations(*p.presentation(), p.symmetry());
    return p.relations().basis();
}

void add_basis(Section& s, const std::string& label, const RelationModule& r) {
    s.notes.push_back(label + " (" + to_string(r.symmetry()) + ", dim " + str(r.dim()) + "):");
    for (const auto& line : basis_lines(r)) s.notes.push_back("  " + line);
}

QuadraticOperad listing(const std::string& name, const std::vector<std::string>& rels) {
    return QuadraticOperad(name, orbit_span([&] {
                               std::vector<Weight3Element> xs;
                               for (const auto& r : rels) xs.push_back(parse_relation(r));
                               return xs;
                           }()));
}

std::string which_gi(const QuadraticOperad& p) {
    for (int i = 1; i <= 6; ++i)
        if (operads_equal(p, gi_ass(i))) return "g" + std::to_string(i) + "ass";
    return "-";
}

// ---------------------------------------------------------------------------
// Report builders

Report show_report(const QuadraticOperad& p, bool want_dual, bool want_tilde, bool want_rank, bool want_orbits,
                   bool want_iso, std::uint64_t seed) {
    Report rep("operad " + p.name());
    rep.provenance("symmetry", to_string(p.symmetry()));
    rep.provenance("seed", std::to_string(seed));
    Section& rel = rep.add_section("relations");
    add_basis(rel, "R", p.relations());
    rel.data = to_json(p);
    if (p.presentation()) {
        for (const auto& pair : *p.presentation()) rel.notes.push_back("presentation: " + pair_text(pair));
    } else {
        rel.notes.push_back("presentation: none stored");
    }
    if (want_rank) {
        Section& s = rep.add_section("rank");
        const std::size_t r = rank(p.relations());
        const std::size_t searched = rank_by_search(p.relations(), kRankTrials, seed);
        s.notes.push_back("rank (isotypic formula): " + str(r));
        s.notes.push_back("rank (random search, " + str(kRankTrials) + " trials): " + str(searched));
        s.data = {{"rank", r}, {"rank_search", searched}};
    }
    if (want_iso) {
        Section& s = rep.add_section("isotypic");
        IsotypicProfile prof = isotypic_multiplicities(p.relations());
        s.notes.push_back(profile_text(prof));
        s.data = to_json(prof);
    }
    if (want_orbits) {
        Section& s = rep.add_section("orbits");
        Table t{{"generator", "orbit dim"}, {}};
        for (const auto& g : defining_relations(p)) t.rows.push_back({format(g), str(orbit_span({g}, p.symmetry()).dim())});
        s.table = t;
    }
    if (want_dual) {
        Section& s = rep.add_section("dual");
        QuadraticOperad d = dual(p);
        add_basis(s, "R!", d.relations());
        s.notes.push_back("R! = R: " + yes_no(operads_equal(d, p)));
        s.data = to_json(d);
    }
    if (want_tilde) {
        Section& s = rep.add_section("tilde");
        TildeResult t = tilde_detail(p, seed);
        for (const auto& pair : t.presentation)
            s.notes.push_back(std::string(t.presentation_was_explicit ? "stored" : "found") + " presentation: " + pair_text(pair));
        s.notes.push_back("generators before orbit closure: " + str(t.generators.size()));
        for (const auto& g : t.generators) s.notes.push_back("  " + format(g));
        add_basis(s, "tilde R", t.operad.relations());
        s.data = to_json(t.operad);
    }
    return rep;
}

Report theorem1_report(const std::vector<QuadraticOperad>& ops, std::uint64_t seed, bool with_certificates) {
    Report rep("A (x) B closure with B over tilde(P), natural product");
    rep.provenance("seed", std::to_string(seed));
    Section& s = rep.add_section("closure_holds(R_P, tilde(P), identity, basis of R_P)");
    Table t{{"operad", "dim R", "dim tilde R", "closure"}, {}};
    bool all = true;
    Json certs = Json::array();
    for (const auto& p : ops) {
        QuadraticOperad td = tilde(p, seed);
        ClosureCertificate c =
            closure_holds(p.relations(), td.relations(), MixedProduct::identity(), relation_targets(p.relations()));
        all = all && c.holds;
        t.rows.push_back({p.name(), str(p.relations().dim()), str(td.relations().dim()), yes_no(c.holds)});
        if (with_certificates) certs.push_back({{"operad", p.name()}, {"certificate", to_json(c)}});
    }
    s.table = t;
    if (with_certificates) s.data = certs;
    rep.set_verified(all);
    return rep;
}

Report bracket_report(const std::vector<QuadraticOperad>& ops) {
    Report rep("Lie bracket on A (x) B");
    rep.provenance("product", "mu_A (x) mu_B - (mu_A o tau) (x) (mu_B o tau)");
    Section& s = rep.add_section("bracket_is_lie(R_P, R_P!)");
    Table t{{"operad", "antisymmetric", "jacobi"}, {}};
    bool all = true;
    Json certs = Json::array();
    for (const auto& p : ops) {
        BracketCheck b = bracket_is_lie(p.relations(), dual(p).relations());
        all = all && b.holds();
        t.rows.push_back({p.name(), yes_no(b.antisymmetric), yes_no(b.jacobi.holds)});
        if (!b.jacobi.holds) certs.push_back({{"operad", p.name()}, {"certificate", to_json(b.jacobi)}});
    }
    s.table = t;
    if (!certs.empty()) s.data = certs;
    rep.set_verified(all);
    return rep;
}

std::string coeff_text(const MixedProduct& m) {
    std::string out = "(";
    for (std::size_t i = 0; i < 4; ++i) out += (i ? ", " : "") + to_string(m.coefficients()[i]);
    return out + ")";
}

Report twisted_report(bool corrected) {
    const MixedProduct product = corrected ? MixedProduct::poisson_twist_corrected() : MixedProduct::poisson_twist();
    Report rep("Twisted Poisson product on A (x) B");
    rep.provenance("coefficients (ee, et, te, tt)", coeff_text(product));
    Section& s = rep.add_section("closure_holds(R_Poiss, R_Poiss, twist, basis of R_Poiss)");
    ClosureCertificate c = twisted_poisson_check(product);
    s.notes.push_back("holds: " + yes_no(c.holds));
    if (const TargetCheck* f = c.first_failure()) {
        s.notes.push_back("first failing target: " + format(f->target));
        for (const auto& [col, vec] : f->residual)
            s.notes.push_back("  leak at " + monomial_text(f->expansion.side_a(), col) + ": " +
                              format(Weight3Element(f->expansion.side_b(), vec)));
    }
    s.data = to_json(c);
    Section& ctl = rep.add_section("controls");
    for (const auto& [label, m] : std::vector<std::pair<std::string, MixedProduct>>{
             {"identity", MixedProduct::identity()},
             {"literal twist (3,-1,-1,1)", MixedProduct::poisson_twist()},
             {"sign-corrected twist (3,1,1,-1)", MixedProduct::poisson_twist_corrected()}}) {
        ctl.notes.push_back(label + ": " + yes_no(twisted_poisson_check(m).holds));
    }
    rep.set_verified(c.holds);
    return rep;
}

Report negative_report(const QuadraticOperad& p, const QuadraticOperad& q) {
    Report rep("Negative closure: " + p.name() + " (x) " + q.name());
    rep.provenance("product", "identity");
    Section& s = rep.add_section("closure_holds(R_P, R_Q, identity, defining relations of P)");
    ClosureCertificate c = closure_holds(p.relations(), q.relations(), MixedProduct::identity(), defining_relations(p));
    s.notes.push_back("closure holds: " + yes_no(c.holds));
    if (const TargetCheck* f = c.first_failure()) {
        s.notes.push_back("failing target: " + format(f->target));
        s.notes.push_back("residual components: " + str(f->residual.size()));
        for (const auto& [col, vec] : f->residual)
            s.notes.push_back("  leak at " + monomial_text(f->expansion.side_a(), col) + ": " +
                              format(Weight3Element(f->expansion.side_b(), vec)));
    }
    s.data = to_json(c);
    rep.set_verified(!c.holds);
    return rep;
}

Report companion_report(const QuadraticOperad& p, std::optional<SymmetryClass> cls, std::uint64_t seed) {
    QuadraticOperad td = tilde(p, seed);
    const SymmetryClass c = cls.value_or(td.symmetry());
    RelationModule mc = minimal_companion(p, c);
    Report rep("Minimal companion of " + p.name());
    rep.provenance("companion class", to_string(c));
    rep.provenance("seed", std::to_string(seed));
    Section& s = rep.add_section("companion");
    add_basis(s, "S", mc);
    const bool same_class = c == td.symmetry();
    const bool inside = same_class && td.relations().contains(mc);
    const bool closes =
        closure_holds(p.relations(), mc, MixedProduct::identity(), relation_targets(p.relations())).holds;
    s.notes.push_back("dim tilde R: " + str(td.relations().dim()));
    s.notes.push_back("S inside tilde R: " + (same_class ? yes_no(inside) : std::string("n/a (class differs)")));
    s.notes.push_back("S = tilde R: " + (same_class ? yes_no(mc == td.relations()) : std::string("n/a")));
    s.notes.push_back("closure with S: " + yes_no(closes));
    s.data = to_json(mc);
    rep.set_verified(closes && (!same_class || inside));
    return rep;
}

void add_violations(Section& s, const std::vector<Violation>& vs, const std::vector<Weight3Element>& targets) {
    Json arr = Json::array();
    for (std::size_t i = 0; i < vs.size(); ++i) {
        const auto& v = vs[i];
        if (i < 20) {
            s.notes.push_back("relation " + str(v.relation) + " at (e" + str(v.triple[0] + 1) + ", e" +
                              str(v.triple[1] + 1) + ", e" + str(v.triple[2] + 1) + ")");
        }
        arr.push_back(to_json(v, targets));
    }
    if (vs.size() > 20) s.notes.push_back("... " + str(vs.size() - 20) + " more");
    s.data = arr;
}

Report instance_check_report(const AlgebraInstance& a, const QuadraticOperad& p) {
    Report rep("Instance check");
    rep.provenance("instance", a.name().empty() ? "(unnamed)" : a.name());
    rep.provenance("operad", p.name());
    Section& s = rep.add_section("violations");
    if (auto bad = symmetry_violation(a, p.symmetry())) {
        s.notes.push_back("product is not " + to_string(p.symmetry()) + " at (e" + str(bad->first + 1) + ", e" +
                          str(bad->second + 1) + ")");
        rep.set_verified(false);
        return rep;
    }
    auto targets = p.relations().basis();
    auto vs = check_relations(a, p.relations());
    s.notes.push_back("count: " + str(vs.size()));
    add_violations(s, vs, targets);
    rep.set_verified(vs.empty());
    return rep;
}

MixedProduct product_by_name(const std::string& name) {
    if (name == "identity" || name.empty()) return MixedProduct::identity();
    if (name == "poisson") return MixedProduct::poisson_twist();
    if (name == "poisson-corrected") return MixedProduct::poisson_twist_corrected();
    if (name == "bracket") return MixedProduct::bracket();
    throw InvalidParameter("unknown product '" + name + "' (identity, poisson, poisson-corrected, bracket)");
}

Report tensor_report(const AlgebraInstance& a, const AlgebraInstance& b, const std::string& twist,
                     const std::optional<QuadraticOperad>& check) {
    const MixedProduct m = product_by_name(twist);
    AlgebraInstance t = tensor_instance(a, b, m);
    Report rep("Tensor instance");
    rep.provenance("product", (twist.empty() ? std::string("identity") : twist) + " " + coeff_text(m));
    Section& s = rep.add_section("structure");
    s.notes.push_back("dim: " + str(t.dim()));
    s.notes.push_back(to_json(t).dump());
    s.data = to_json(t);
    if (check) {
        Section& c = rep.add_section("check against " + check->name());
        if (auto bad = symmetry_violation(t, check->symmetry())) {
            c.notes.push_back("product is not " + to_string(check->symmetry()) + " at (e" + str(bad->first + 1) +
                              ", e" + str(bad->second + 1) + ")");
            rep.set_verified(false);
        } else {
            auto vs = check_relations(t, check->relations());
            c.notes.push_back("violations: " + str(vs.size()));
            add_violations(c, vs, check->relations().basis());
            rep.set_verified(vs.empty());
        }
    }
    return rep;
}

Report search_report(const QuadraticOperad& p, const QuadraticOperad& q, std::size_t max_dim, std::uint64_t seed,
                     const std::string& twist) {
    const auto targets = defining_relations(p);
    SearchResult r = search_counterexample(p.relations(), q.relations(), targets, max_dim, seed, product_by_name(twist));
    Report rep("Counterexample search: " + p.name() + " (x) " + q.name());
    rep.provenance("seed", std::to_string(seed));
    rep.provenance("max dim", str(max_dim));
    Section& s = rep.add_section("search");
    s.notes.push_back("candidates: " + str(r.candidates_a) + " x " + str(r.candidates_b) + ", pairs tried " +
                      str(r.pairs_tried));
    Json data{{"found", r.found.has_value()}, {"pairs_tried", r.pairs_tried}};
    if (r.found) {
        const auto& w = r.found->witness;
        s.notes.push_back("witness: " + r.found->a.name() + " (x) " + r.found->b.name() + ", relation " +
                          format(targets[w.relation]) + " at tensor basis (" + str(w.triple[0] + 1) + ", " +
                          str(w.triple[1] + 1) + ", " + str(w.triple[2] + 1) + ")");
        data["a"] = to_json(r.found->a);
        data["b"] = to_json(r.found->b);
        data["witness"] = to_json(w, targets);
    } else {
        s.notes.push_back("none found (absence is not a proof)");
        ClosureCertificate c = closure_holds(p.relations(), q.relations(), product_by_name(twist), targets);
        s.notes.push_back("symbolic closure: " + yes_no(c.holds));
    }
    s.data = data;
    return rep;
}

} // namespace

// ---------------------------------------------------------------------------
// Reference tables

Report paper_tables_report(std::uint64_t seed) {
    Report rep("operad-forge reference tables");
    rep.provenance("version", kVersion);
    rep.provenance("seed", std::to_string(seed));

    {
        Section& s = rep.add_section("Weight-3 spaces");
        for (auto c : {SymmetryClass::Regular, SymmetryClass::Commutative, SymmetryClass::Anticommutative})
            s.notes.push_back("dim Gamma(3), " + to_string(c) + ": " + str(weight3_dim(c)));
    }

    auto dual_table = [&](const std::string& title, const std::function<QuadraticOperad(int)>& make) {
        Section& s = rep.add_section(title);
        Table t{{"operad", "dim R", "rank R", "dim R!", "rank R!", "rank R! (search)", "tilde = R!"}, {}};
        std::vector<std::string> notes;
        for (int i = 1; i <= 6; ++i) {
            QuadraticOperad p = make(i);
            QuadraticOperad d = dual(p);
            t.rows.push_back({p.name(), str(p.relations().dim()), str(rank(p.relations())), str(d.relations().dim()),
                              str(rank(d.relations())), str(rank_by_search(d.relations(), kRankTrials, seed)),
                              yes_no(operads_equal(tilde(p, seed), d))});
            notes.push_back(p.name() + "! basis:");
            for (const auto& line : basis_lines(d.relations())) notes.push_back("  " + line);
        }
        s.table = t;
        s.notes = notes;
    };
    dual_table("G_i-Ass and their duals", gi_ass);
    dual_table("G_i-p3Ass and their duals", gi_p3ass);

    {
        Section& s = rep.add_section("Orbits in K[S3]");
        for (const char* v : {"2*Id - t12 - t13 - t23 + c1", "Id - t12 - t13 - t23 + c1 + c2",
                              "Id + t12 + t13 + t23 + c1 + c2", "Id - t12", "Id - t23"}) {
            s.notes.push_back("dim K(O(" + std::string(v) + ")) = " + str(group_orbit_span(parse_group_vector(v)).dim()));
        }
    }

    {
        Section& s = rep.add_section("Tilde constructions");
        Table t{{"P", "presentation", "dim tilde R", "claim", "holds"}, {}};
        auto row = [&](const QuadraticOperad& p, const std::string& claim, bool ok) {
            TildeResult r = tilde_detail(p, seed);
            std::string pres;
            for (const auto& pair : r.presentation) pres += (pres.empty() ? "" : " | ") + pair_text(pair);
            t.rows.push_back({p.name(), pres, str(r.operad.relations().dim()), claim, yes_no(ok)});
        };
        for (int i = 1; i <= 6; ++i) {
            QuadraticOperad p = gi_ass(i);
            row(p, "tilde = P!", operads_equal(tilde(p, seed), dual(p)));
        }
        row(preset("lieadm"), "tilde = comm3", operads_equal(tilde(preset("lieadm"), seed), preset("comm3")));
        row(preset("lie"), "tilde = com", operads_equal(tilde(preset("lie"), seed), preset("com")));
        row(preset("leib"), "tilde = {x(yz)=(xy)z, (xy)z=(xz)y}",
            operads_equal(tilde(preset("leib"), seed),
                          listing("l", {"x*(y*z) - (x*y)*z", "(x*y)*z - (x*z)*y"})));
        {
            QuadraticOperad tp = tilde(preset("poiss"), seed);
            bool gens = true;
            for (const char* g : {"(x1*x2)*x3 - (x1*x3)*x2", "(x1*x2)*x3 - (x2*x3)*x1", "(x1*x2)*x3 - (x2*x1)*x3",
                                  "(x1*x2)*x3 - (x3*x1)*x2", "(x1*x2)*x3 - x1*(x2*x3)"})
                gens = gens && tp.relations().contains(parse_relation(g));
            row(preset("poiss"), "tilde = comm3, 5 listed generators inside",
                operads_equal(tp, preset("comm3")) && gens);
        }
        s.table = t;
        s.notes.push_back("poiss: v1 = " + format(preset("poiss").presentation()->at(0).v) +
                          " from decompose_LR of the associator relation, w1 = " +
                          format(preset("poiss").presentation()->at(0).w));
    }

    {
        Section& s = rep.add_section("Lie-admissible table");
        struct Entry {
            QuadraticOperad p;
            std::optional<QuadraticOperad> listed_dual;
        };
        auto ab_listing = [](int a, int b) {
            const Rational c1 = a - b, c2 = a + 2 * b - 3;
            Weight3Element e = parse_relation("(x*y)*z - (y*x)*z") * c1 + parse_relation("(z*y)*x - (z*x)*y") * c2;
            return QuadraticOperad("listing", orbit_span({associator(), e}));
        };
        auto t_listing = [](int t) {
            const Rational T = t;
            Weight3Element e = parse_relation("(x*y)*z - (y*x)*z") * (T - 1) - parse_relation("(z*y)*x") * (T + 2) +
                               parse_relation("(x*z)*y - (y*z)*x") * (1 + 2 * T) + parse_relation("(z*x)*y") * (T + 2);
            return QuadraticOperad("listing", orbit_span({associator(), e}));
        };
        std::vector<Entry> entries;
        entries.push_back({preset("lieadm"), listing("l", {"A(x,y,z)", "(x*y)*z - (y*x)*z", "(x*y)*z - (x*z)*y"})});
        entries.push_back({gi_ass(5), listing("l", {"A(x,y,z)", "(x*y)*z - (y*z)*x"})});
        for (auto [a, b] : std::vector<std::pair<int, int>>{{2, 2}, {1, 0}, {5, -1}, {3, 0}, {0, 3}, {0, 0}})
            entries.push_back({family_ab(a, b), ab_listing(a, b)});
        for (int t : {0, 2, -3}) entries.push_back({family_t(t), t_listing(t)});
        entries.push_back({preset("table_row_5"), listing("l", {"A(x,y,z)", "(x*y)*z + (y*x)*z - (z*y)*x - (z*x)*y"})});
        entries.push_back({preset("table_row_6"),
                           listing("l", {"A(x,y,z)", "(x*y)*z - (y*x)*z - (z*y)*x - (x*z)*y + (y*z)*x + (z*x)*y"})});
        entries.push_back({preset("ass"), listing("l", {"A(x,y,z)"})});

        const QuadraticOperad lieadm_dual = dual(preset("lieadm"));
        Table t{{"P", "dim R", "G_i-Ass", "listed P! matches", "tilde = P!", "tilde = LieAdm!"}, {}};
        bool iff = true, only_if = true;
        for (const auto& e : entries) {
            QuadraticOperad d = dual(e.p);
            QuadraticOperad td = tilde(e.p, seed);
            const std::string gi = which_gi(e.p);
            const bool eq = operads_equal(td, d);
            only_if = only_if && (!eq || gi != "-");
            iff = iff && (eq || gi == "-");
            t.rows.push_back({e.p.name(), str(e.p.relations().dim()), gi,
                              e.listed_dual ? yes_no(operads_equal(*e.listed_dual, d)) : "-", yes_no(eq),
                              yes_no(operads_equal(td, lieadm_dual))});
        }
        s.table = t;
        s.notes.push_back("tilde = P! only when P is some G_i-Ass: " + yes_no(only_if));
        s.notes.push_back("every G_i-Ass entry has tilde = P!: " + yes_no(iff) +
                          " (tilde uses the family presentation, not V_i)");
        s.notes.push_back("family_t uses leading coefficient 2*A(x,y,z); with 1 the relation generates all of Ass");
    }

    {
        Section& s = rep.add_section("Symmetric generating operation");
        Table t{{"class", "dim R", "isotypic", "dim tilde R", "P!", "tilde = P!"}, {}};
        for (auto c : {SymmetryClass::Commutative, SymmetryClass::Anticommutative}) {
            for (const auto& r : enumerate_submodules(c)) {
                QuadraticOperad p("sub", r);
                QuadraticOperad td = tilde(p, seed);
                QuadraticOperad d = symmetric_dual(p);
                t.rows.push_back({to_string(c), str(r.dim()), profile_text(isotypic_multiplicities(r)),
                                  str(td.relations().dim()),
                                  to_string(d.symmetry()) + " dim " + str(d.relations().dim()),
                                  yes_no(operads_equal(td, d))});
            }
        }
        s.table = t;
        s.notes.push_back("expected: tilde = P! iff P = Com or P = free anticommutative; reported, not asserted");
    }

    {
        Section& s = rep.add_section("Presentation stability");
        Table t{{"P", "stored presentation", "dim tilde R", "dims from random presentations", "all equal"}, {}};
        const std::size_t probes = 5;
        for (const char* n : {"ass", "g2ass", "g5ass", "lieadm", "leib", "zinb", "poiss", "comm3", "table_row_5"}) {
            QuadraticOperad p = preset(n);
            QuadraticOperad reference = tilde(p, seed);
            QuadraticOperad bare(p.name(), p.relations());
            std::string dims;
            bool same = true;
            for (std::size_t k = 0; k < probes; ++k) {
                QuadraticOperad other = tilde(bare, seed + 1 + k);
                dims += (k ? " " : "") + str(other.relations().dim());
                same = same && operads_equal(other, reference);
            }
            t.rows.push_back({p.name(), p.presentation() ? "yes" : "no", str(reference.relations().dim()), dims,
                              yes_no(same)});
        }
        s.notes.push_back("tilde recomputed from " + str(probes) + " random presentations of the same module");
        s.table = t;
    }

    {
        Section& s = rep.add_section("Tensor closure");
        Table t{{"check", "result"}, {}};
        bool thm = true;
        std::vector<QuadraticOperad> ops;
        for (const auto& n : preset_names()) ops.push_back(preset(n));
        for (auto& p : regular_presets())
            if (p.name().rfind("family", 0) == 0) ops.push_back(p);
        for (const auto& p : ops) thm = thm && theorem1_check(p, seed).holds;
        t.rows.push_back({"closure over tilde on " + str(ops.size()) + " presets", yes_no(thm)});
        bool comp = true;
        for (const auto& p : regular_presets())
            comp = comp && tilde(p, seed).relations().contains(minimal_companion(p));
        t.rows.push_back({"minimal companion inside tilde R (regular presets)", yes_no(comp)});
        QuadraticOperad leib = preset("leib");
        ClosureCertificate neg =
            closure_holds(leib.relations(), preset("zinb").relations(), MixedProduct::identity(), defining_relations(leib));
        t.rows.push_back({"Leib (x) Zinb closes", yes_no(neg.holds)});
        for (int i = 1; i <= 6; ++i) {
            QuadraticOperad g = gi_ass(i);
            t.rows.push_back({"bracket Lie on " + g.name() + " (x) " + g.name() + "!",
                              yes_no(bracket_is_lie(g.relations(), dual(g).relations()).holds())});
        }
        t.rows.push_back({"Lie (x) Com closes on Jacobi",
                          yes_no(closure_holds(preset("lie").relations(), preset("com").relations(),
                                               MixedProduct::identity(), {jacobi_template()})
                                     .holds)});
        t.rows.push_back({"Poiss twist (3,-1,-1,1)", yes_no(twisted_poisson_check().holds)});
        t.rows.push_back({"Poiss identity product", yes_no(twisted_poisson_check(MixedProduct::identity()).holds)});
        t.rows.push_back({"Poiss twist (3,1,1,-1)",
                          yes_no(twisted_poisson_check(MixedProduct::poisson_twist_corrected()).holds)});
        s.table = t;
    }

    {
        Section& s = rep.add_section("Counterexample search");
        for (auto [p, q, d] : std::vector<std::tuple<const char*, const char*, std::size_t>>{{"leib", "zinb", 4},
                                                                                            {"ass", "ass", 3}}) {
            QuadraticOperad pp = preset(p);
            auto targets = defining_relations(pp);
            SearchResult r = search_counterexample(pp.relations(), preset(q).relations(), targets, d, seed);
            std::string line = std::string(p) + " (x) " + q + ", max dim " + str(d) + ": ";
            if (r.found) {
                const auto& w = r.found->witness;
                line += "witness " + r.found->a.name() + " (x) " + r.found->b.name() + " at (" + str(w.triple[0] + 1) +
                        ", " + str(w.triple[1] + 1) + ", " + str(w.triple[2] + 1) + ")";
            } else {
                line += "none found in " + str(r.pairs_tried) + " pairs";
            }
            s.notes.push_back(line);
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Command line

std::uint64_t default_seed() {
    const char* env = std::getenv("OPERAD_FORGE_SEED");
    if (!env || !*env) return 0;
    try {
        std::size_t used = 0;
        const unsigned long long v = std::stoull(env, &used);
        if (used == std::string(env).size()) return v;
    } catch (const std::exception&) {
    }
    return 0;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args, out, err);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Quadratic operads: duals, tilde, tensor closure", "operad-forge"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    bool json = false;
    std::uint64_t seed = default_seed();
    auto common = [&](CLI::App* s) {
        s->add_flag("--json", json, "JSON output");
        s->add_option("--seed", seed, "random seed (default OPERAD_FORGE_SEED or 0)");
    };

    std::string target, target_b, operad_arg, p_arg, q_arg, twist, cls_arg, check_arg;
    bool f_dual = false, f_tilde = false, f_rank = false, f_orbits = false, f_iso = false;
    bool all_presets = false, corrected = false;
    std::size_t max_dim = 3;

    auto* show = app.add_subcommand("show", "relations of a preset or definition file");
    show->add_option("operad", target, "preset name or definition file")->required();
    show->add_flag("--dual", f_dual);
    show->add_flag("--tilde", f_tilde);
    show->add_flag("--rank", f_rank);
    show->add_flag("--orbits", f_orbits);
    show->add_flag("--isotypic", f_iso);
    common(show);

    auto* tilde_cmd = app.add_subcommand("tilde", "the tilde operad");
    tilde_cmd->add_option("operad", target)->required();
    common(tilde_cmd);
    auto* dual_cmd = app.add_subcommand("dual", "the Koszul dual");
    dual_cmd->add_option("operad", target)->required();
    common(dual_cmd);

    auto* verify = app.add_subcommand("verify", "symbolic tensor-closure checks");
    verify->require_subcommand(1);
    auto* v_thm = verify->add_subcommand("theorem1", "closure of A (x) B for B over tilde(P)");
    auto* v_preset = v_thm->add_option("--preset", target, "one operad");
    v_thm->add_flag("--all-presets", all_presets)->excludes(v_preset);
    common(v_thm);
    auto* v_br = verify->add_subcommand("bracket-lie", "the bracket on A (x) B is Lie");
    v_br->add_option("--preset", target);
    common(v_br);
    auto* v_tw = verify->add_subcommand("twisted-poisson", "the twisted Poisson product");
    v_tw->add_flag("--corrected", corrected, "use the sign-corrected twist (3,1,1,-1)");
    common(v_tw);
    auto* v_neg = verify->add_subcommand("negative", "closure fails for P (x) Q");
    v_neg->add_option("--p", p_arg)->required();
    v_neg->add_option("--q", q_arg)->required();
    common(v_neg);

    auto* comp = app.add_subcommand("companion", "least module closing the tensor argument");
    comp->add_option("operad", target)->required();
    comp->add_option("--class", cls_arg, "regular, comm or anticomm");
    common(comp);

    auto* inst = app.add_subcommand("instance", "concrete algebras");
    inst->require_subcommand(1);
    auto* i_check = inst->add_subcommand("check", "relations on an instance");
    i_check->add_option("instance", target, "instance file or fixture name")->required();
    i_check->add_option("--operad", operad_arg)->required();
    common(i_check);
    auto* i_tensor = inst->add_subcommand("tensor", "tensor product of two instances");
    i_tensor->add_option("a", target)->required();
    i_tensor->add_option("b", target_b)->required();
    i_tensor->add_option("--twist", twist, "identity, poisson, poisson-corrected, bracket");
    i_tensor->add_option("--check", check_arg, "operad to check the product against");
    common(i_tensor);

    auto* search = app.add_subcommand("search", "instance search");
    search->require_subcommand(1);
    auto* s_ce = search->add_subcommand("counterexample", "pairs whose tensor breaks P");
    s_ce->add_option("--p", p_arg)->required();
    s_ce->add_option("--q", q_arg)->required();
    s_ce->add_option("--max-dim", max_dim)->check(CLI::Range(1, 4));
    s_ce->add_option("--twist", twist);
    common(s_ce);

    auto* report = app.add_subcommand("report", "regenerate reports");
    report->require_subcommand(1);
    auto* r_tables = report->add_subcommand("paper-tables", "all tables");
    common(r_tables);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    auto emit = [&](const Report& r) {
        if (json) {
            out << r.json().dump(2) << "\n";
        } else {
            out << r.text();
        }
        if (r.verified()) return *r.verified() ? kExitOk : kExitFailed;
        return kExitOk;
    };

    try {
        if (*show) return emit(show_report(load_operad(target), f_dual, f_tilde, f_rank, f_orbits, f_iso, seed));
        if (*tilde_cmd) return emit(show_report(load_operad(target), false, true, false, false, false, seed));
        if (*dual_cmd) return emit(show_report(load_operad(target), true, false, false, false, false, seed));
        if (*v_thm) {
            std::vector<QuadraticOperad> ops;
            if (!target.empty()) {
                ops.push_back(load_operad(target));
            } else {
                for (const auto& n : preset_names()) ops.push_back(preset(n));
                for (auto& p : regular_presets())
                    if (p.name().rfind("family", 0) == 0) ops.push_back(p);
            }
            return emit(theorem1_report(ops, seed, !target.empty()));
        }
        if (*v_br) {
            std::vector<QuadraticOperad> ops;
            if (!target.empty()) {
                ops.push_back(load_operad(target));
            } else {
                for (int i = 1; i <= 6; ++i) ops.push_back(gi_ass(i));
            }
            return emit(bracket_report(ops));
        }
        if (*v_tw) return emit(twisted_report(corrected));
        if (*v_neg) return emit(negative_report(load_operad(p_arg), load_operad(q_arg)));
        if (*comp) {
            std::optional<SymmetryClass> c;
            if (!cls_arg.empty()) c = symmetry_from_string(cls_arg);
            return emit(companion_report(load_operad(target), c, seed));
        }
        if (*i_check) return emit(instance_check_report(load_instance(target), load_operad(operad_arg)));
        if (*i_tensor) {
            std::optional<QuadraticOperad> chk;
            if (!check_arg.empty()) chk = load_operad(check_arg);
            return emit(tensor_report(load_instance(target), load_instance(target_b), twist, chk));
        }
        if (*s_ce) return emit(search_report(load_operad(p_arg), load_operad(q_arg), max_dim, seed, twist));
        if (*r_tables) return emit(paper_tables_report(seed));
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    err << app.help();
    return kExitUsage;
}

} // namespace operad_forge
