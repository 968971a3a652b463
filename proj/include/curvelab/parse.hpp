#pragma once

#include "curvelab/bipoly.hpp"
#include "curvelab/error.hpp"
#include "curvelab/parametric.hpp"
#include "curvelab/rational.hpp"
#include "curvelab/series.hpp"

#include <cctype>
#include <optional>
#include <set>
#include <string>
#include <string_view>

namespace curvelab {

namespace detail {

/// Recursive-descent parser for
///   expr   := ['+'|'-'] term (('+'|'-') term)*
///   term   := factor ('*'? factor)*
///   factor := base ('^' nat)?
///   base   := rational | variable | '(' expr ')'
/// Variables map to x and y of a BiPoly. In series mode the only variable
/// is t (stored as x) and a term O(t^n) marks truncation at n.
class PolyParser {
public:
    enum class Mode { Plane, Series };

    PolyParser(std::string_view text, Mode mode, std::size_t start = 0) : text_(text), mode_(mode), pos_(start) {}

    BiPoly parse_expr_to_end(std::set<char> terminators = {}) {
        BiPoly r = expr();
        skip_ws();
        if (!at_end() && !terminators.count(peek())) {
            std::set<std::string> exp{"'+'", "'-'", "'*'", "'^'", "operand"};
            for (char c : terminators) exp.insert(std::string("'") + c + "'");
            exp.insert("end of input");
            error(exp);
        }
        return r;
    }

    std::optional<unsigned> truncation() const { return trunc_; }
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }
    void advance() { ++pos_; }
    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }

    [[noreturn]] void error(const std::set<std::string>& expected) const {
        std::size_t line = 1, col = 1;
        for (std::size_t k = 0; k < pos_ && k < text_.size(); ++k) {
            if (text_[k] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        std::string found = at_end() ? "end of input" : std::string("'") + peek() + "'";
        throw ParseError(line, col, expected, found);
    }

private:
    BiPoly expr() {
        skip_ws();
        BiPoly acc;
        bool negate = false;
        if (peek() == '+' || peek() == '-') {
            negate = peek() == '-';
            advance();
        }
        add(acc, term(), negate);
        for (;;) {
            skip_ws();
            if (peek() != '+' && peek() != '-') return acc;
            negate = peek() == '-';
            advance();
            add(acc, term(), negate);
        }
    }

    void add(BiPoly& acc, std::optional<BiPoly> t, bool negate) {
        if (!t) return; // an O(t^n) marker
        acc += negate ? Rat(-1) * *t : *t;
    }

    std::optional<BiPoly> term() {
        skip_ws();
        if (mode_ == Mode::Series && peek() == 'O') return big_o();
        BiPoly acc = factor();
        for (;;) {
            skip_ws();
            if (peek() == '*') {
                advance();
                acc *= factor();
            } else if (starts_base()) {
                acc *= factor();
            } else {
                return acc;
            }
        }
    }

    std::optional<BiPoly> big_o() {
        advance();
        expect('(');
        skip_ws();
        if (peek() != 't') error({"'t'"});
        advance();
        skip_ws();
        unsigned n = 1;
        if (peek() == '^') {
            advance();
            n = nat();
        }
        expect(')');
        trunc_ = trunc_ ? std::min(*trunc_, n) : n;
        return std::nullopt;
    }

    bool starts_base() const {
        char c = peek();
        return std::isdigit(static_cast<unsigned char>(c)) || c == '(' || is_variable(c);
    }

    bool is_variable(char c) const { return mode_ == Mode::Plane ? (c == 'x' || c == 'y') : c == 't'; }

    std::set<std::string> operand_tokens() const {
        if (mode_ == Mode::Plane) return {"number", "'x'", "'y'", "'('"};
        return {"number", "'t'", "'('"};
    }

    BiPoly factor() {
        BiPoly b = base();
        skip_ws();
        if (peek() == '^') {
            advance();
            b = b.pow(nat());
        }
        return b;
    }

    BiPoly base() {
        skip_ws();
        char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) return BiPoly::constant(rational());
        if (c == '(') {
            advance();
            BiPoly e = expr();
            expect(')');
            return e;
        }
        if (is_variable(c)) {
            advance();
            return c == 'y' ? BiPoly::y() : BiPoly::x();
        }
        error(operand_tokens());
    }

    void expect(char c) {
        skip_ws();
        if (peek() != c) error({std::string("'") + c + "'"});
        advance();
    }

    BigInt digits() {
        skip_ws();
        if (!std::isdigit(static_cast<unsigned char>(peek()))) error({"natural number"});
        std::string s;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            s += peek();
            advance();
        }
        return BigInt(s);
    }

    unsigned nat() {
        BigInt v = digits();
        if (v > 1000000) error({"exponent <= 1000000"});
        return static_cast<unsigned>(v.get_ui());
    }

    Rat rational() {
        BigInt num = digits();
        skip_ws();
        if (peek() != '/') return Rat(num);
        advance();
        BigInt den = digits();
        if (den == 0) error({"positive denominator"});
        return make_rat(num, den);
    }

    std::string_view text_;
    Mode mode_;
    std::size_t pos_;
    std::optional<unsigned> trunc_;
};

inline TruncSeries to_series(const BiPoly& p, std::optional<unsigned> trunc) {
    std::map<unsigned, Rat> c;
    for (const auto& [m, a] : p.terms()) c[m.i] = a;
    if (!trunc) return TruncSeries::exact_poly(c);
    return TruncSeries::truncated(c, *trunc);
}

} // namespace detail

/// Exact polynomial in x and y, e.g. "x^2 + y^3", "2xy^3", "(x - y^2)*(x + y^2)".
inline BiPoly parse_poly(std::string_view text) {
    return detail::PolyParser(text, detail::PolyParser::Mode::Plane).parse_expr_to_end();
}

/// "x(t), y(t)": two polynomials in t, each optionally truncated by O(t^n).
inline Param parse_param(std::string_view text) {
    detail::PolyParser p(text, detail::PolyParser::Mode::Series);
    BiPoly x = p.parse_expr_to_end({','});
    if (p.peek() != ',') p.error({"','"});
    detail::PolyParser q(text, detail::PolyParser::Mode::Series, text.find(',') + 1);
    BiPoly y = q.parse_expr_to_end();
    if (x.constant_term() != 0 || y.constant_term() != 0)
        fail(Errc::ConstantComponent, "both components must vanish at t = 0");
    return Param(detail::to_series(x, p.truncation()), detail::to_series(y, q.truncation()));
}

} // namespace curvelab
