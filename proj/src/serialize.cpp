#include "operad_forge/serialize.hpp"

#include "operad_forge/dsl.hpp"
#include "operad_forge/error.hpp"
#include "operad_forge/presets.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

namespace operad_forge {

namespace {

ParseError at_byte(const std::string& text, std::size_t byte, const std::string& msg) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return ParseError(msg, line, col);
}

Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw at_byte(text, e.byte, "malformed JSON");
    }
}

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

// Reparses DSL text with positions shifted to the enclosing file.
template <typename F>
auto relocated(F&& f, std::size_t line, std::size_t col_offset) {
    try {
        return f();
    } catch (const ParseError& e) {
        throw ParseError(e.bare_message(), line, e.column() + col_offset);
    }
}

QuadraticOperad build_operad(const std::string& name, SymmetryClass s, const std::vector<Weight3Element>& rels,
                             std::optional<Presentation> pres) {
    if (rels.empty() && !pres) throw InvalidParameter("operad definition '" + name + "' lists no relations");
    if (!pres && !is_symmetric(s)) {
        Presentation derived;
        for (const auto& r : rels)
            if (!r.is_zero()) derived.push_back(decompose_LR(r));
        pres = derived;
    }
    if (pres && is_symmetric(s) && rels.empty()) return QuadraticOperad(name, orbit_span(presentation_relations(*pres, s), s), pres);
    return QuadraticOperad(name, orbit_span(rels, s), pres);
}

} // namespace

Json to_json(const Rational& r) { return to_string(r); }

Json to_json(const Weight3Element& x) {
    Json coords = Json::array();
    for (const auto& c : x.coords()) coords.push_back(to_string(c));
    return {{"symmetry", to_string(x.symmetry())}, {"text", format(x)}, {"coords", coords}};
}

Json to_json(const RelationModule& r) {
    Json basis = Json::array();
    for (const auto& b : r.basis()) basis.push_back(format(b));
    return {{"symmetry", to_string(r.symmetry())}, {"dim", r.dim()}, {"basis", basis}};
}

Json to_json(const LRPair& p) { return {{"v", format(p.v)}, {"w", format(p.w)}}; }

Json to_json(const QuadraticOperad& p) {
    Json out{{"name", p.name()}, {"symmetry", to_string(p.symmetry())}, {"relations", to_json(p.relations())}};
    if (p.presentation()) {
        Json pres = Json::array();
        for (const auto& pair : *p.presentation()) pres.push_back(to_json(pair));
        out["presentation"] = pres;
    } else {
        out["presentation"] = nullptr;
    }
    return out;
}

Json to_json(const IsotypicProfile& p) {
    return {{"trivial", p.trivial}, {"sign", p.sign}, {"standard", p.standard}};
}

Json to_json(const TensorElement3& t) {
    Json terms = Json::array();
    for (const auto& term : t.terms()) {
        terms.push_back({{"a", monomial_text(t.side_a(), term.a)},
                         {"b", monomial_text(t.side_b(), term.b)},
                         {"coef", to_string(term.coef)}});
    }
    return {{"side_a", to_string(t.side_a())}, {"side_b", to_string(t.side_b())}, {"terms", terms}};
}

Json to_json(const TargetCheck& c) {
    const SymmetryClass sa = c.expansion.side_a(), sb = c.expansion.side_b();
    Json out{{"target", format(c.target)}, {"member", c.member}, {"expansion", to_json(c.expansion)}};
    if (c.member) {
        Json witness = Json::array();
        for (std::size_t i = 0; i < c.quotient_columns.size(); ++i) {
            if (operad_forge::is_zero(c.components[i])) continue;
            witness.push_back({{"quotient", monomial_text(sa, c.quotient_columns[i])},
                               {"component", format(Weight3Element(sb, c.components[i]))}});
        }
        out["witness"] = witness;
    } else {
        Json residual = Json::array();
        for (const auto& [col, vec] : c.residual) {
            residual.push_back({{"quotient", monomial_text(sa, col)}, {"residual", format(Weight3Element(sb, vec))}});
        }
        out["residual"] = residual;
    }
    return out;
}

Json to_json(const ClosureCertificate& c) {
    Json checks = Json::array();
    for (const auto& check : c.checks) checks.push_back(to_json(check));
    return {{"holds", c.holds}, {"checks", checks}};
}

Json to_json(const AlgebraInstance& a) {
    Json structure = Json::array();
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
            for (std::size_t k = 0; k < a.dim(); ++k) {
                const Rational& c = a.constant(i, j, k);
                if (sgn(c) == 0) continue;
                Json val = c.get_den() == 1 && c.get_num().fits_slong_p() ? Json(c.get_num().get_si()) : Json(to_string(c));
                structure.push_back(Json::array({i + 1, j + 1, k + 1, val}));
            }
    Json out = Json::object();
    if (!a.name().empty()) out["name"] = a.name();
    out["dim"] = a.dim();
    out["structure"] = structure;
    return out;
}

Json to_json(const Violation& v, const std::vector<Weight3Element>& targets) {
    Json value = Json::array();
    for (const auto& c : v.value) value.push_back(to_string(c));
    Json out{{"relation", v.relation},
             {"triple", Json::array({v.triple[0] + 1, v.triple[1] + 1, v.triple[2] + 1})},
             {"value", value}};
    if (v.relation < targets.size()) out["relation_text"] = format(targets[v.relation]);
    return out;
}

Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational(mpz_class(std::to_string(j.get<long long>())));
    if (j.is_string()) return parse_rational(j.get<std::string>());
    throw InvalidParameter("expected an integer or a \"p/q\" string, got " + j.dump());
}

AlgebraInstance instance_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("dim") || !j.contains("structure"))
        throw InvalidParameter("instance needs \"dim\" and \"structure\"");
    if (!j["dim"].is_number_unsigned() || j["dim"].get<std::size_t>() == 0)
        throw InvalidParameter("instance \"dim\" must be a positive integer");
    const std::size_t n = j["dim"].get<std::size_t>();
    AlgebraInstance a(n, j.value("name", std::string()));
    for (const auto& e : j["structure"]) {
        if (!e.is_array() || e.size() != 4) throw InvalidParameter("structure entry must be [i, j, k, c]: " + e.dump());
        std::size_t idx[3];
        for (int t = 0; t < 3; ++t) {
            if (!e[static_cast<std::size_t>(t)].is_number_unsigned()) throw InvalidParameter("bad index in " + e.dump());
            idx[t] = e[static_cast<std::size_t>(t)].get<std::size_t>();
            if (idx[t] < 1 || idx[t] > n) throw InvalidParameter("index out of range in " + e.dump());
        }
        a.set_constant(idx[0] - 1, idx[1] - 1, idx[2] - 1, a.constant(idx[0] - 1, idx[1] - 1, idx[2] - 1) + rational_from_json(e[3]));
    }
    return a;
}

AlgebraInstance parse_instance(const std::string& text) { return instance_from_json(parse_json(text)); }

QuadraticOperad operad_from_json(const Json& j) {
    if (!j.is_object()) throw InvalidParameter("operad definition must be a JSON object");
    const std::string name = j.value("name", std::string("unnamed"));
    const SymmetryClass s = symmetry_from_string(j.value("symmetry", std::string("regular")));
    std::vector<Weight3Element> rels;
    if (j.contains("relations")) {
        for (const auto& r : j["relations"]) rels.push_back(parse_weight3(r.get<std::string>(), s));
    }
    std::optional<Presentation> pres;
    if (j.contains("presentation") && !j["presentation"].is_null()) {
        Presentation p;
        for (const auto& e : j["presentation"])
            p.push_back({parse_group_vector(e.at("v").get<std::string>()), parse_group_vector(e.at("w").get<std::string>())});
        pres = p;
    }
    return build_operad(name, s, rels, pres);
}

QuadraticOperad parse_operad_definition(const std::string& text) {
    const std::string body = trim(text);
    if (!body.empty() && body[0] == '{') return operad_from_json(parse_json(text));

    std::string name = "unnamed";
    SymmetryClass s = SymmetryClass::Regular;
    std::vector<std::tuple<std::size_t, std::size_t, std::string>> rel_lines;
    std::vector<std::tuple<std::size_t, std::size_t, std::string>> pres_lines;
    std::istringstream in(text);
    std::string line;
    for (std::size_t no = 1; std::getline(in, line); ++no) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        if (trim(line).empty()) continue;
        const auto colon = line.find(':');
        if (colon == std::string::npos) throw ParseError("expected 'key: value'", no, 1);
        const std::string key = trim(line.substr(0, colon));
        const std::string value = line.substr(colon + 1);
        if (key == "name") {
            name = trim(value);
        } else if (key == "symmetry") {
            try {
                s = symmetry_from_string(trim(value));
            } catch (const Error& e) {
                throw ParseError(e.what(), no, colon + 2);
            }
        } else if (key == "relation") {
            rel_lines.emplace_back(no, colon + 1, value);
        } else if (key == "presentation") {
            pres_lines.emplace_back(no, colon + 1, value);
        } else {
            throw ParseError("unknown key '" + key + "'", no, 1);
        }
    }
    std::vector<Weight3Element> rels;
    for (const auto& [no, col, value] : rel_lines)
        rels.push_back(relocated([&] { return parse_weight3(value, s); }, no, col));
    std::optional<Presentation> pres;
    if (!pres_lines.empty()) {
        Presentation p;
        for (const auto& [no, col, value] : pres_lines) {
            const auto semi = value.find(';');
            if (semi == std::string::npos) throw ParseError("presentation needs 'v ; w'", no, col + 1);
            GroupVector v = relocated([&] { return parse_group_vector(value.substr(0, semi)); }, no, col);
            GroupVector w = relocated([&] { return parse_group_vector(value.substr(semi + 1)); }, no, col + semi + 1);
            p.push_back({v, w});
        }
        pres = p;
    }
    return build_operad(name, s, rels, pres);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidParameter("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

QuadraticOperad load_operad(const std::string& name_or_path) {
    if (std::filesystem::is_regular_file(name_or_path)) return parse_operad_definition(read_file(name_or_path));
    return preset(name_or_path);
}

AlgebraInstance load_instance(const std::string& name_or_path) {
    if (std::filesystem::is_regular_file(name_or_path)) return parse_instance(read_file(name_or_path));
    return example(name_or_path);
}

} // namespace operad_forge
