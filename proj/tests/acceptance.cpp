// Acceptance run: one line per criterion, exit 0 when every line is PASS
// or a documented DEVIATION whose observed behaviour matches the note.

#include "oracles.hpp"

#include "operad_forge/algebra_instance.hpp"
#include "operad_forge/commands.hpp"
#include "operad_forge/error.hpp"
#include "operad_forge/presets.hpp"
#include "operad_forge/serialize.hpp"

#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>

using namespace operad_forge;

namespace {

struct Line {
    enum Kind { Pass, Fail, Deviation } kind;
    std::string detail;
};

Line pass_if(bool ok, std::string detail) { return {ok ? Line::Pass : Line::Fail, std::move(detail)}; }

std::vector<QuadraticOperad> all_presets() {
    std::vector<QuadraticOperad> out;
    for (const auto& n : preset_names()) out.push_back(preset(n));
    for (auto& p : regular_presets())
        if (p.name().rfind("family", 0) == 0) out.push_back(p);
    return out;
}

Line c1_dual_tables() {
    std::size_t ok = 0;
    for (std::size_t i = 0; i < 6; ++i) {
        const int g = static_cast<int>(i) + 1;
        ok += dual(gi_ass(g)).relations() == oracle::module(oracle::kRDual[i]);
        ok += dual(gi_p3ass(g)).relations() == oracle::module(oracle::kRp3Dual[i]);
    }
    return pass_if(ok == 12, std::to_string(ok) + "/12 dual subspaces equal the hand-entered tables");
}

Line c2_ranks() {
    bool ok = true;
    for (int i = 1; i <= 6; ++i) {
        ok = ok && rank(gi_ass(i).relations()) == 1;
        ok = ok && rank(dual(gi_ass(i)).relations()) == (i == 1 ? 1u : 2u);
    }
    std::size_t agree = 0, total = 0;
    for (const auto& p : all_presets()) {
        ++total;
        agree += rank_by_search(p.relations(), 200, 0) == rank(p.relations());
    }
    return pass_if(ok && agree == total, "rank(R_i)=1, rank(R_1!)=1, rank(R_i!)=2; search oracle agrees on " +
                                             std::to_string(agree) + "/" + std::to_string(total) + " presets");
}

Line c3_dimensions() {
    bool ok = weight3_dim(SymmetryClass::Regular) == 12 && gi_ass(6).relations().dim() == 1 &&
              group_orbit_span(parse_group_vector("2*Id - t12 - t13 - t23 + c1")).dim() == oracle::kOrbitDim5;
    for (const auto& p : regular_presets()) ok = ok && p.relations().dim() + dual(p).relations().dim() == 12;
    return pass_if(ok, "dim 12, dim R_6 = 1, orbit dim 5, dim R + dim R! = 12 on every regular preset");
}

Line c4_tilde() {
    std::vector<std::string> bad;
    auto need = [&](bool b, const std::string& what) {
        if (!b) bad.push_back(what);
    };
    for (int i = 1; i <= 6; ++i) need(operads_equal(tilde(gi_ass(i)), dual(gi_ass(i))), "G" + std::to_string(i));
    need(operads_equal(tilde(preset("lieadm")), preset("comm3")), "lieadm");
    need(operads_equal(tilde(preset("lie")), preset("com")), "lie");
    need(tilde(preset("leib")).relations() == oracle::module(oracle::kTildeLeib), "leib");
    const QuadraticOperad tp = tilde(preset("poiss"));
    bool gens = true;
    for (const auto& g : oracle::kTildePoissGens) gens = gens && tp.relations().contains(parse_relation(g));
    need(operads_equal(tp, preset("comm3")) && gens, "poiss");
    const QuadraticOperad la = dual(preset("lieadm"));
    for (auto [a, b] : std::vector<std::pair<int, int>>{{2, 2}, {1, 0}, {5, -1}})
        need(operads_equal(tilde(family_ab(a, b)), la), "family_ab generic");
    need(operads_equal(tilde(family_ab(3, 0)), dual(gi_ass(2))), "(3,0)");
    need(operads_equal(tilde(family_ab(0, 3)), dual(gi_ass(4))), "(0,3)");
    need(operads_equal(tilde(family_ab(0, 0)), dual(gi_ass(3))), "(0,0)");
    for (int t : {0, 2, -3}) need(operads_equal(tilde(family_t(t)), la), "family_t");
    need(operads_equal(tilde(preset("table_row_5")), la), "row 5");
    need(operads_equal(tilde(preset("table_row_6")), la), "row 6");
    std::string d = "G_i, LieAdm, Lie, Leib, Poiss, family sweeps";
    for (const auto& b : bad) d += "; failed " + b;
    return pass_if(bad.empty(), d);
}

Line c5_theorem1() {
    std::size_t ok = 0, total = 0;
    for (const auto& p : all_presets()) {
        ++total;
        ok += theorem1_check(p).holds;
    }
    return pass_if(ok == total, "closure holds for " + std::to_string(ok) + "/" + std::to_string(total) + " presets");
}

Line c6_negative() {
    const QuadraticOperad leib = preset("leib");
    ClosureCertificate c = closure_holds(leib.relations(), preset("zinb").relations(), MixedProduct::identity(),
                                         presentation_relations(*leib.presentation(), SymmetryClass::Regular));
    const TargetCheck* f = c.first_failure();
    const bool ok = !c.holds && f && !f->residual.empty();
    return pass_if(ok, "Leib (x) Zinb: closure fails, residual components " +
                           std::to_string(f ? f->residual.size() : 0));
}

Line c7_companion() {
    std::size_t ok = 0, total = 0;
    for (const auto& p : regular_presets()) {
        ++total;
        const RelationModule s = minimal_companion(p);
        ok += tilde(p).relations().contains(s) &&
              closure_holds(p.relations(), s, MixedProduct::identity(), relation_targets(p.relations())).holds;
    }
    return pass_if(ok == total, "companion inside tilde and closing on " + std::to_string(ok) + "/" +
                                    std::to_string(total) + " regular presets");
}

Line c8_bracket() {
    int ok = 0;
    for (int i = 1; i <= 6; ++i) ok += bracket_is_lie(gi_ass(i).relations(), dual(gi_ass(i)).relations()).holds();
    return pass_if(ok == 6, std::to_string(ok) + "/6 antisymmetric with Jacobi");
}

Line c9_twisted() {
    const bool literal = twisted_poisson_check().holds;
    const bool corrected = twisted_poisson_check(MixedProduct::poisson_twist_corrected()).holds;
    if (literal) return {Line::Pass, "twist (3,-1,-1,1) closes"};
    // the printed product does not close; with the two mixed signs flipped it does
    const AlgebraInstance t =
        tensor_instance(example("poisson_aff1"), example("poisson_aff1"), MixedProduct::poisson_twist());
    const bool witnessed = !check_targets(t, relation_targets(preset("poiss").relations())).empty();
    if (corrected && witnessed)
        return {Line::Deviation, "twist (3,-1,-1,1) fails symbolically and on poisson_aff1 (x) poisson_aff1; "
                                 "(3,1,1,-1) closes"};
    return {Line::Fail, "twist fails and the sign-corrected twist does not repair it"};
}

bool satisfies(const AlgebraInstance& a, const QuadraticOperad& p) {
    return !symmetry_violation(a, p.symmetry()) && check_relations(a, p.relations()).empty();
}

Line c10_instances() {
    const AlgebraInstance lt = example("leib_tilde_3d");
    auto asym = symmetry_violation(lt, SymmetryClass::Commutative);
    bool ok = check_relations(lt, tilde(preset("leib")).relations()).empty() && asym &&
              *asym == std::pair<std::size_t, std::size_t>{0, 2};

    const std::vector<std::pair<std::string, std::string>> matching = {
        {"abelian_2d", "ass"}, {"unit_1d", "ass"},          {"lie_2d", "lie"},       {"heisenberg", "lie"},
        {"comm_assoc_2d", "com"}, {"leibniz_3d", "leib"}, {"zinbiel_3d", "zinb"}, {"poisson_small", "poiss"},
        {"poisson_aff1", "poiss"}, {"leib_tilde_3d", "ass"}};
    for (const auto& [i, p] : matching) ok = ok && satisfies(example(i), preset(p));

    std::size_t cells = 0, closed = 0;
    for (const auto& p : all_presets()) {
        const QuadraticOperad tp = tilde(p);
        if (!theorem1_check(p).holds) continue;
        for (const auto& a : example_names()) {
            if (!satisfies(example(a), p)) continue;
            for (const auto& b : example_names()) {
                if (!satisfies(example(b), tp)) continue;
                ++cells;
                const AlgebraInstance t = tensor_instance(example(a), example(b), MixedProduct::identity());
                closed += check_targets(t, relation_targets(p.relations())).empty();
            }
        }
    }
    return pass_if(ok && closed == cells, "leib_tilde_3d ok, fixtures ok, consistency matrix " +
                                              std::to_string(closed) + "/" + std::to_string(cells));
}

Line c11_properties(const char* property_binary) {
    const int rc = std::system((std::string("\"") + property_binary + "\" > /dev/null 2>&1").c_str());
    return pass_if(rc == 0, "property_tests (7 suites, 250 seeded cases each) exit " + std::to_string(rc));
}

std::string slurp(const std::string& path) {
    try {
        return read_file(path);
    } catch (const Error&) {
        return "";
    }
}

Line c12_reports() {
    const Report r = paper_tables_report(0);
    const std::string text = r.text(), json = r.json().dump(2) + "\n";
    const bool again = paper_tables_report(0).text() == text;
    const std::string golden_dir = OF_GOLDEN_DIR;
    const bool golden = slurp(golden_dir + "/paper_tables.txt") == text && slurp(golden_dir + "/paper_tables.json") == json;

    bool only_if = false, enumerated = false;
    for (const auto& s : r.sections()) {
        if (s.title == "Lie-admissible table")
            for (const auto& n : s.notes) only_if = only_if || n == "tilde = P! only when P is some G_i-Ass: yes";
        if (s.title == "Symmetric generating operation") enumerated = s.table && s.table->rows.size() == 8;
    }
    return pass_if(again && golden && only_if && enumerated,
                   std::string("deterministic ") + (again ? "yes" : "no") + ", golden " + (golden ? "match" : "DIFF") +
                       ", tilde = P! only on G_i-Ass entries " + (only_if ? "yes" : "no") +
                       ", symmetric enumeration rows " + (enumerated ? "8" : "missing"));
}

} // namespace

int main(int argc, char** argv) {
    const char* property_binary = argc > 1 ? argv[1] : "./property_tests";
    const std::vector<std::pair<std::string, std::function<Line()>>> criteria = {
        {"dual tables", c1_dual_tables},
        {"ranks", c2_ranks},
        {"dimension facts", c3_dimensions},
        {"tilde results", c4_tilde},
        {"closure over tilde", c5_theorem1},
        {"negative result", c6_negative},
        {"minimal companion", c7_companion},
        {"Lie bracket", c8_bracket},
        {"twisted Poisson", c9_twisted},
        {"instance level", c10_instances},
        {"property suites", [&] { return c11_properties(property_binary); }},
        {"Lie-admissible and symmetric reports", c12_reports},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Line l;
        try {
            l = criteria[i].second();
        } catch (const std::exception& e) {
            l = {Line::Fail, std::string("threw: ") + e.what()};
        }
        const char* tag = l.kind == Line::Pass ? "PASS" : l.kind == Line::Fail ? "FAIL" : "DEVIATION";
        failures += l.kind == Line::Fail;
        std::cout << tag << "  " << (i + 1 < 10 ? " " : "") << i + 1 << "  " << criteria[i].first << ": " << l.detail
                  << "\n";
    }
    std::cout << (failures ? std::to_string(failures) + " criteria failed" : std::string("all criteria pass or match a documented deviation"))
              << "\n";
    return failures ? 1 : 0;
}
