#include "eqres/parser.hpp"

#include <algorithm>
#include <cctype>
#include <string>
#include <vector>

#include "eqres/errors.hpp"

namespace eqres {

namespace {

enum class Tok { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
    Tok kind;
    std::string text;
    std::size_t pos;
};

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) { advance(); }

    const Token& peek() const { return tok_; }

    Token next() {
        Token t = tok_;
        advance();
        return t;
    }

private:
    void advance() {
        while (i_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[i_]))) ++i_;
        const std::size_t start = i_;
        if (i_ >= text_.size()) {
            tok_ = {Tok::End, "", start};
            return;
        }
        const char c = text_[i_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (i_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i_]))) ++i_;
            tok_ = {Tok::Number, std::string(text_.substr(start, i_ - start)), start};
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            ++i_;
            while (i_ < text_.size() &&
                   std::isalnum(static_cast<unsigned char>(text_[i_])))
                ++i_;
            tok_ = {Tok::Ident, std::string(text_.substr(start, i_ - start)), start};
            return;
        }
        ++i_;
        switch (c) {
            case '+': tok_ = {Tok::Plus, "+", start}; return;
            case '-': tok_ = {Tok::Minus, "-", start}; return;
            case '*': tok_ = {Tok::Star, "*", start}; return;
            case '/': tok_ = {Tok::Slash, "/", start}; return;
            case '^': tok_ = {Tok::Caret, "^", start}; return;
            case '(': tok_ = {Tok::LParen, "(", start}; return;
            case ')': tok_ = {Tok::RParen, ")", start}; return;
            default:
                throw ParseError(std::string("unexpected character '") + c + "'", start);
        }
    }

    std::string_view text_;
    std::size_t i_ = 0;
    Token tok_;
};

// Recursive-descent evaluator over FactoredRational.  In poly mode '/' is
// only accepted between two integer literals (a rational coefficient); in
// fraction mode the right operand of '/' must be a product of powers of
// linear forms and nonzero constants, parsed structurally so the factors
// are never expanded.
class Parser {
public:
    Parser(std::string_view text, std::size_t num_y, bool fraction_mode)
        : lex_(text), num_y_(num_y), fraction_(fraction_mode) {}

    FactoredRational parse() {
        FactoredRational r = expression();
        const Token& t = lex_.peek();
        if (t.kind != Tok::End) throw ParseError("unexpected trailing input", t.pos);
        return r;
    }

private:
    FactoredRational expression() {
        bool negate = false;
        if (lex_.peek().kind == Tok::Plus) {
            lex_.next();
        } else if (lex_.peek().kind == Tok::Minus) {
            lex_.next();
            negate = true;
        }
        FactoredRational acc = term();
        if (negate) acc = -acc;
        while (lex_.peek().kind == Tok::Plus || lex_.peek().kind == Tok::Minus) {
            const bool minus = lex_.next().kind == Tok::Minus;
            FactoredRational t = term();
            acc = minus ? acc - t : acc + t;
        }
        return acc;
    }

    FactoredRational term() {
        FactoredRational acc = factor();
        while (lex_.peek().kind == Tok::Star || lex_.peek().kind == Tok::Slash) {
            const Token op = lex_.next();
            if (op.kind == Tok::Star) {
                acc = acc * factor();
            } else {
                acc = divide(acc, op.pos);
            }
        }
        return acc;
    }

    FactoredRational divide(const FactoredRational& lhs, std::size_t op_pos) {
        if (!fraction_) {
            // only rational literals: integer / integer
            auto c = lhs.num().as_constant();
            if (!c || !lhs.is_polynomial())
                throw ParseError("'/' is only allowed inside rational coefficients", op_pos);
            const Token t = lex_.peek();
            if (t.kind != Tok::Number)
                throw ParseError("expected an integer after '/'", t.pos);
            lex_.next();
            Rational den(rational_from_string(t.text));
            if (den == 0) throw ParseError("division by zero", t.pos);
            return FactoredRational(Poly::constant(num_y_, *c / den));
        }
        auto [consts, factors] = denominator_factor();
        FactoredRational r = lhs.scaled(1 / consts);
        if (!factors.empty()) r = r.divided_by_factors(factors);
        return r;
    }

    // One '/'-operand.  An atom is a number, a variable or a parenthesized
    // group, each with an optional power.  A group whose first token is
    // '(' is read as a structural product of atoms (never expanded); any
    // other group is parsed as a polynomial expression and must come out
    // linear.  So "((X+Y1)*(X-Y1))^2", "X^2" and "(X+2*Y1)" all work.
    std::pair<Rational, std::vector<FactorPower>> denominator_factor() {
        std::vector<FactorPower> factors;
        Rational consts = 1;
        denominator_atom(factors, consts);
        return {consts, factors};
    }

    void denominator_atom(std::vector<FactorPower>& factors, Rational& consts) {
        const Token t = lex_.peek();
        if (t.kind == Tok::Number) {
            lex_.next();
            const unsigned e = exponent();
            Rational c = rational_from_string(t.text);
            if (c == 0) throw ParseError("division by zero", t.pos);
            consts *= rational_pow(c, e);
            return;
        }
        if (t.kind == Tok::Ident) {
            lex_.next();
            const unsigned e = exponent();
            factors.push_back(FactorPower{poly_to_linform(variable(t), t.pos), e});
            return;
        }
        if (t.kind != Tok::LParen) throw ParseError("expected a denominator factor", t.pos);
        lex_.next();
        std::vector<FactorPower> inner;
        Rational icon = 1;
        if (lex_.peek().kind == Tok::LParen) {
            denominator_atom(inner, icon);
            while (lex_.peek().kind == Tok::Star) {
                lex_.next();
                denominator_atom(inner, icon);
            }
        } else {
            const std::size_t pos = lex_.peek().pos;
            FactoredRational r = expression();
            if (!r.is_polynomial())
                throw ParseError("nested fractions are not allowed in a denominator", pos);
            inner.push_back(FactorPower{poly_to_linform(r.num(), pos), 1});
        }
        expect(Tok::RParen, "expected ')'");
        const unsigned e = exponent();
        for (auto& fp : inner) fp.mult *= e;
        factors.insert(factors.end(), inner.begin(), inner.end());
        consts *= rational_pow(icon, e);
    }

    LinForm poly_to_linform(const Poly& p, std::size_t pos) {
        if (p.is_zero()) throw ParseError("division by zero", pos);
        if (!p.is_homogeneous_of_degree_or_zero(1))
            throw ParseError("denominator factor must be a linear form in X, Y1..Ym", pos);
        Rational x = 0;
        std::vector<Rational> ys(num_y_, 0);
        for (const auto& [m, c] : p.terms()) {
            if (m[0] == 1) {
                x = c;
            } else {
                for (std::size_t i = 0; i < num_y_; ++i)
                    if (m[i + 1] == 1) ys[i] = c;
            }
        }
        return LinForm(x, std::move(ys));
    }

    FactoredRational factor() { return power(primary()); }

    FactoredRational power(FactoredRational base) {
        if (lex_.peek().kind != Tok::Caret) return base;
        lex_.next();
        const unsigned e = exponent_value();
        FactoredRational r = FactoredRational::one(num_y_);
        for (unsigned i = 0; i < e; ++i) r = r * base;
        return r;
    }

    // optional '^' k, defaulting to 1
    unsigned exponent() {
        if (lex_.peek().kind != Tok::Caret) return 1;
        lex_.next();
        return exponent_value();
    }

    unsigned exponent_value() {
        const Token t = lex_.peek();
        if (t.kind != Tok::Number)
            throw ParseError("expected a nonnegative integer exponent", t.pos);
        lex_.next();
        unsigned long e = 0;
        try {
            e = std::stoul(t.text);
        } catch (...) {
            throw ParseError("exponent out of range", t.pos);
        }
        if (e > 64) throw ParseError("exponent too large", t.pos);
        return static_cast<unsigned>(e);
    }

    FactoredRational primary() {
        const Token t = lex_.peek();
        switch (t.kind) {
            case Tok::Number: {
                lex_.next();
                return FactoredRational(Poly::constant(num_y_, rational_from_string(t.text)));
            }
            case Tok::Ident: {
                lex_.next();
                return FactoredRational(variable(t));
            }
            case Tok::LParen: {
                lex_.next();
                FactoredRational r = expression();
                expect(Tok::RParen, "expected ')'");
                return r;
            }
            case Tok::Minus: {
                lex_.next();
                return -factor();
            }
            default:
                throw ParseError("expected a number, variable or '('", t.pos);
        }
    }

    Poly variable(const Token& t) {
        if (t.text == "X") return Poly::variable_x(num_y_);
        if (t.text.size() >= 2 && t.text[0] == 'Y') {
            for (std::size_t i = 1; i < t.text.size(); ++i)
                if (!std::isdigit(static_cast<unsigned char>(t.text[i])))
                    throw ParseError("unknown variable '" + t.text + "'", t.pos);
            const unsigned long idx = std::stoul(t.text.substr(1));
            if (idx < 1 || idx > num_y_)
                throw ParseError("unknown variable '" + t.text + "' (have Y1..Y" +
                                     std::to_string(num_y_) + ")",
                                 t.pos);
            return Poly::variable_y(num_y_, idx);
        }
        throw ParseError("unknown variable '" + t.text + "'", t.pos);
    }

    void expect(Tok kind, const char* msg) {
        const Token& t = lex_.peek();
        if (t.kind != kind) throw ParseError(msg, t.pos);
        lex_.next();
    }

    Lexer lex_;
    std::size_t num_y_;
    bool fraction_;
};

std::string monomial_vars(const Monomial& m) {
    std::string s;
    auto piece = [&](const std::string& var, unsigned e) {
        if (e == 0) return;
        if (!s.empty()) s += "*";
        s += var;
        if (e > 1) s += "^" + std::to_string(e);
    };
    piece("X", m[0]);
    for (std::size_t i = 1; i < m.size(); ++i) piece("Y" + std::to_string(i), m[i]);
    return s;
}

}  // namespace

Poly parse_poly(std::string_view text, std::size_t num_y) {
    FactoredRational r = Parser(text, num_y, /*fraction_mode=*/false).parse();
    // poly mode never introduces denominators
    return r.num();
}

FactoredRational parse_fraction(std::string_view text, std::size_t num_y) {
    return Parser(text, num_y, /*fraction_mode=*/true).parse();
}

std::string print_poly(const Poly& p) {
    if (p.is_zero()) return "0";
    // graded-lex: higher total degree first, then lexicographic by
    // exponent vector, X most significant
    std::vector<std::pair<Monomial, Rational>> terms(p.terms().begin(), p.terms().end());
    auto deg = [](const Monomial& m) {
        unsigned d = 0;
        for (unsigned e : m) d += e;
        return d;
    };
    std::sort(terms.begin(), terms.end(), [&](const auto& a, const auto& b) {
        const unsigned da = deg(a.first), db = deg(b.first);
        if (da != db) return da > db;
        return a.first > b.first;
    });
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms) {
        const bool neg = c < 0;
        const Rational a = neg ? Rational(-c) : c;
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        const std::string vars = monomial_vars(m);
        if (vars.empty()) {
            out += to_string(a);
        } else if (a == 1) {
            out += vars;
        } else {
            out += to_string(a) + "*" + vars;
        }
    }
    return out;
}

std::string print_linform(const LinForm& l) { return print_poly(Poly::from_linform(l)); }

std::string print_fraction(const FactoredRational& f) {
    const std::string num = print_poly(f.num());
    if (f.is_polynomial()) return num;
    std::string den;
    for (const auto& fp : f.den()) {
        if (!den.empty()) den += "*";
        den += "(" + print_linform(fp.form) + ")";
        if (fp.mult > 1) den += "^" + std::to_string(fp.mult);
    }
    const bool wrap = f.num().terms().size() > 1;
    return (wrap ? "(" + num + ")" : num) + " / " + den;
}

}  // namespace eqres
