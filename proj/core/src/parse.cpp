#include "slicekit/parse.hpp"

#include <cctype>
#include <sstream>

namespace slicekit {

namespace {

// Exponents are capped to keep pathological inputs like "(x+y)^999999" from
// exhausting memory; real inputs sit far below this.
constexpr std::uint32_t kMaxExponent = 512;

struct Token {
    enum class Kind { Number, Ident, Plus, Minus, Star, Caret, Slash, LParen, RParen, End };
    Kind kind;
    std::string text;
    std::size_t line, column;
};

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) {}

    Token next() {
        skip_space();
        const std::size_t line = line_, col = col_;
        if (pos_ >= text_.size()) return {Token::Kind::End, "", line, col};
        const char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string digits;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                digits.push_back(take());
            return {Token::Kind::Number, digits, line, col};
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string word;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                word.push_back(take());
            return {Token::Kind::Ident, word, line, col};
        }
        take();
        switch (c) {
            case '+': return {Token::Kind::Plus, "+", line, col};
            case '-': return {Token::Kind::Minus, "-", line, col};
            case '*': return {Token::Kind::Star, "*", line, col};
            case '^': return {Token::Kind::Caret, "^", line, col};
            case '/': return {Token::Kind::Slash, "/", line, col};
            case '(': return {Token::Kind::LParen, "(", line, col};
            case ')': return {Token::Kind::RParen, ")", line, col};
            default:
                throw ParseError(ParseError::Kind::Syntax, line, col,
                                 std::string("unexpected character '") + c + "'");
        }
    }

private:
    char take() {
        const char c = text_[pos_++];
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return c;
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) take();
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1, col_ = 1;
};

class Parser {
public:
    Parser(std::string_view text, const VarContext& ctx) : lexer_(text), ctx_(ctx) {
        advance();
    }

    Polynomial parse() {
        Polynomial p = expr();
        if (tok_.kind != Token::Kind::End)
            throw ParseError(ParseError::Kind::Syntax, tok_.line, tok_.column,
                             "unexpected token '" + tok_.text + "' after expression");
        return p;
    }

private:
    void advance() { tok_ = lexer_.next(); }

    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError(ParseError::Kind::Syntax, tok_.line, tok_.column, what);
    }

    Polynomial expr() {
        Polynomial acc = term();
        while (tok_.kind == Token::Kind::Plus || tok_.kind == Token::Kind::Minus) {
            const bool minus = tok_.kind == Token::Kind::Minus;
            advance();
            const Polynomial rhs = term();
            acc = minus ? acc - rhs : acc + rhs;
        }
        return acc;
    }

    Polynomial term() {
        Polynomial acc = factor();
        while (tok_.kind == Token::Kind::Star) {
            advance();
            acc = acc * factor();
        }
        return acc;
    }

    Polynomial factor() {
        if (tok_.kind == Token::Kind::Minus) {
            advance();
            return -factor();
        }
        Polynomial base = atom();
        if (tok_.kind == Token::Kind::Caret) {
            advance();
            if (tok_.kind == Token::Kind::Minus)
                throw ParseError(ParseError::Kind::NegativeExponent, tok_.line, tok_.column,
                                 "negative exponents are not allowed in polynomials");
            if (tok_.kind != Token::Kind::Number) fail("expected an exponent after '^'");
            const Integer big(tok_.text, 10);
            if (big > kMaxExponent)
                throw ParseError(ParseError::Kind::ExponentTooLarge, tok_.line, tok_.column,
                                 "exponent exceeds the supported bound of " +
                                     std::to_string(kMaxExponent));
            const auto e = static_cast<std::uint32_t>(big.get_ui());
            advance();
            return base.powered(e);
        }
        return base;
    }

    Polynomial atom() {
        switch (tok_.kind) {
            case Token::Kind::Number: {
                Integer num(tok_.text, 10);
                advance();
                if (tok_.kind == Token::Kind::Slash) {
                    advance();
                    if (tok_.kind != Token::Kind::Number) fail("expected a denominator after '/'");
                    Integer den(tok_.text, 10);
                    if (den == 0)
                        throw ParseError(ParseError::Kind::Syntax, tok_.line, tok_.column,
                                         "zero denominator");
                    advance();
                    Rational q(num, den);
                    q.canonicalize();
                    return Polynomial::constant(ctx_, q);
                }
                return Polynomial::constant(ctx_, Rational(num));
            }
            case Token::Kind::Ident: {
                const auto idx = ctx_.index_of(tok_.text);
                if (!idx)
                    throw ParseError(ParseError::Kind::UnknownVariable, tok_.line, tok_.column,
                                     "unknown variable '" + tok_.text + "'");
                advance();
                return Polynomial::variable(ctx_, *idx);
            }
            case Token::Kind::LParen: {
                advance();
                Polynomial inner = expr();
                if (tok_.kind != Token::Kind::RParen) fail("expected ')'");
                advance();
                return inner;
            }
            default:
                fail("expected a number, variable or '('");
        }
    }

    Lexer lexer_;
    const VarContext& ctx_;
    Token tok_{Token::Kind::End, "", 0, 0};
};

std::string format_coefficient(const Rational& magnitude) { return magnitude.get_str(); }

// One term without sign, e.g. "3*x^2*y" or "x" or "5/2".
std::string format_term(const VarContext& ctx, const Monomial& m, const Rational& magnitude) {
    std::ostringstream out;
    bool printed = false;
    if (m.is_unit() || magnitude != 1) {
        out << format_coefficient(magnitude);
        printed = true;
    }
    for (std::size_t i = 0; i < m.arity(); ++i) {
        const auto e = m.exponent(i);
        if (e == 0) continue;
        if (printed) out << "*";
        out << ctx.name(i);
        if (e > 1) out << "^" << e;
        printed = true;
    }
    return out.str();
}

}  // namespace

Polynomial parse_polynomial(std::string_view text, const VarContext& ctx) {
    return Parser(text, ctx).parse();
}

std::string format_polynomial(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    // Descending graded-lex order: leading term first.
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const bool negative = it->second < 0;
        const Rational magnitude = negative ? Rational(-it->second) : it->second;
        if (first) {
            if (negative) out << "-";
            first = false;
        } else {
            out << (negative ? " - " : " + ");
        }
        out << format_term(p.context(), it->first, magnitude);
    }
    return out.str();
}

std::string format_laurent(const LaurentPoly& a, std::string_view parameter) {
    if (a.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = a.coefficients().rbegin(); it != a.coefficients().rend(); ++it) {
        if (!first) out << " + ";
        first = false;
        out << "(" << format_polynomial(it->second) << ")";
        if (it->first != 0) {
            out << "*" << parameter;
            if (it->first != 1) out << "^" << it->first;
        }
    }
    return out.str();
}

}  // namespace slicekit
