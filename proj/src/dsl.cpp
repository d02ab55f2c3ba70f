#include "operad_forge/dsl.hpp"

#include "operad_forge/error.hpp"

#include <cctype>
#include <optional>

namespace operad_forge {

namespace {

class Cursor {
public:
    explicit Cursor(std::string_view text) : text_(text) {}

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool at_end() {
        skip_ws();
        return pos_ >= text_.size();
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool accept(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }

    std::string identifier() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    std::string digits() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    std::size_t pos() const { return pos_; }
    void reset(std::size_t p) { pos_ = p; }

    [[noreturn]] void fail(const std::string& msg) { fail_at(msg, pos_); }

    [[noreturn]] void fail_at(const std::string& msg, std::size_t at) {
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i < at && i < text_.size(); ++i) {
            if (text_[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw ParseError(msg, line, col);
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

// Optional "rational *" prefix.  Leaves the cursor untouched if the next
// token is not a number.
std::optional<Rational> coefficient(Cursor& c) {
    if (!std::isdigit(static_cast<unsigned char>(c.peek()))) return std::nullopt;
    std::size_t at = c.pos();
    std::string num = c.digits();
    std::string den = "1";
    if (c.accept('/')) {
        den = c.digits();
        if (den.empty()) c.fail("expected denominator");
        if (mpz_class(den) == 0) c.fail_at("zero denominator", at);
    }
    c.expect('*');
    Rational r{mpz_class(num), mpz_class(den)};
    r.canonicalize();
    return r;
}

int variable(Cursor& c) {
    c.skip_ws();
    std::size_t at = c.pos();
    std::string id = c.identifier();
    if (id == "x" || id == "x1") return 1;
    if (id == "y" || id == "x2") return 2;
    if (id == "z" || id == "x3") return 3;
    if (id.empty()) c.fail_at("expected a variable", at);
    c.fail_at("unknown variable '" + id + "'", at);
}

Perm3 labels_at(Cursor& c, std::array<int, 3> l, std::size_t at) {
    if (l[0] == l[1] || l[1] == l[2] || l[0] == l[2]) c.fail_at("repeated variable in monomial", at);
    return Perm3::from_images(l);
}

// Adds coef * monomial to the accumulator.  Regular monomials go to `reg`,
// comb monomials to `comb`.
void monomial(Cursor& c, const Rational& coef, Vector& reg, Vector& comb, bool allow_comb) {
    c.skip_ws();
    const std::size_t at = c.pos();
    if (c.accept('(')) {
        std::array<int, 3> l{};
        l[0] = variable(c);
        c.expect('*');
        l[1] = variable(c);
        c.expect(')');
        c.expect('*');
        if (c.peek() == '(') c.fail("product deeper than weight 3");
        l[2] = variable(c);
        if (c.peek() == '*') c.fail("product deeper than weight 3");
        reg[Monomial3{Shape::Left, labels_at(c, l, at)}.index()] += coef;
        return;
    }
    std::string id = c.identifier();
    if (id == "A") {
        c.expect('(');
        std::array<int, 3> l{};
        l[0] = variable(c);
        c.expect(',');
        l[1] = variable(c);
        c.expect(',');
        l[2] = variable(c);
        c.expect(')');
        Perm3 p = labels_at(c, l, at);
        reg[Monomial3{Shape::Left, p}.index()] += coef;
        reg[Monomial3{Shape::Right, p}.index()] -= coef;
        return;
    }
    if (id == "m1" || id == "m2" || id == "m3") {
        if (!allow_comb) c.fail_at("comb monomial '" + id + "' needs a commutative or anticommutative class", at);
        comb[static_cast<std::size_t>(id[1] - '1')] += coef;
        return;
    }
    c.reset(at);
    std::array<int, 3> l{};
    l[0] = variable(c);
    c.expect('*');
    c.expect('(');
    l[1] = variable(c);
    c.expect('*');
    l[2] = variable(c);
    c.expect(')');
    if (c.peek() == '*') c.fail("product deeper than weight 3");
    reg[Monomial3{Shape::Right, labels_at(c, l, at)}.index()] += coef;
}

template <typename TermFn>
void signed_sum(Cursor& c, TermFn&& term) {
    if (c.at_end()) c.fail("empty expression");
    bool negate = c.accept('-');
    if (!negate) c.accept('+');
    for (;;) {
        std::optional<Rational> k = coefficient(c);
        Rational coef = k.value_or(Rational(1));
        if (negate) coef = -coef;
        term(coef);
        if (c.at_end()) break;
        if (c.accept('+')) {
            negate = false;
        } else if (c.accept('-')) {
            negate = true;
        } else {
            c.fail("expected '+' or '-'");
        }
    }
}

bool is_literal_zero(std::string_view text) {
    std::size_t a = 0, b = text.size();
    while (a < b && std::isspace(static_cast<unsigned char>(text[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(text[b - 1]))) --b;
    return text.substr(a, b - a) == "0";
}

std::string coefficient_prefix(const Rational& c, bool first) {
    std::string out;
    Rational mag = abs(c);
    if (sgn(c) < 0) {
        out = first ? "-" : " - ";
    } else if (!first) {
        out = " + ";
    }
    if (mag != 1) out += to_string(mag) + "*";
    return out;
}

} // namespace

Weight3Element parse_weight3(std::string_view text, SymmetryClass s) {
    Vector reg = zero_vector(12);
    Vector comb = zero_vector(3);
    if (!is_literal_zero(text)) {
        Cursor c(text);
        signed_sum(c, [&](const Rational& coef) { monomial(c, coef, reg, comb, is_symmetric(s)); });
    }
    Weight3Element regular(SymmetryClass::Regular, std::move(reg));
    if (!is_symmetric(s)) return regular;
    return project(regular, s) + Weight3Element(s, std::move(comb));
}

Weight3Element parse_relation(std::string_view text) { return parse_weight3(text, SymmetryClass::Regular); }

GroupVector parse_group_vector(std::string_view text) {
    std::array<Rational, Perm3::kOrder> coeffs;
    coeffs.fill(Rational(0));
    if (!is_literal_zero(text)) {
        Cursor c(text);
        signed_sum(c, [&](const Rational& coef) {
            c.skip_ws();
            std::size_t at = c.pos();
            std::string id = c.identifier();
            if (id.empty()) c.fail_at("expected a permutation symbol", at);
            try {
                coeffs[Perm3::from_name(id).index()] += coef;
            } catch (const UnknownName&) {
                c.fail_at("unknown permutation symbol '" + id + "'", at);
            }
        });
    }
    return GroupVector(coeffs);
}

std::string format(const Weight3Element& x) {
    std::string out;
    for (std::size_t i = 0; i < x.dim(); ++i) {
        const Rational& c = x.coords()[i];
        if (sgn(c) == 0) continue;
        out += coefficient_prefix(c, out.empty()) + monomial_text(x.symmetry(), i);
    }
    return out.empty() ? "0" : out;
}

std::string format(const GroupVector& v) {
    std::string out;
    for (const auto& g : Perm3::all()) {
        const Rational& c = v[g];
        if (sgn(c) == 0) continue;
        out += coefficient_prefix(c, out.empty()) + std::string(g.name());
    }
    return out.empty() ? "0" : out;
}

} // namespace operad_forge
