#include "vfcert/parse.hpp"

#include <algorithm>
#include <cctype>

namespace vfcert {

namespace {

struct Token {
    enum Kind { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };
    Kind kind;
    std::string text;
    std::size_t pos;
};

class Lexer {
  public:
    explicit Lexer(const std::string& s) : s_(s) {
        tok_[0] = scan();
        tok_[1] = scan();
    }

    const Token& peek(int n = 0) const { return tok_[n]; }

    Token take() {
        Token t = tok_[0];
        tok_[0] = tok_[1];
        tok_[1] = scan();
        return t;
    }

  private:
    Token scan() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
        std::size_t start = i_;
        if (i_ >= s_.size()) return {Token::End, "", start};
        char c = s_[i_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
            return {Token::Number, s_.substr(start, i_ - start), start};
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            ++i_;
            while (i_ < s_.size()) {
                char d = s_[i_];
                if (std::isalnum(static_cast<unsigned char>(d)) || d == '_' || d == '\'')
                    ++i_;
                else
                    break;
            }
            return {Token::Ident, s_.substr(start, i_ - start), start};
        }
        ++i_;
        switch (c) {
            case '+': return {Token::Plus, "+", start};
            case '-': return {Token::Minus, "-", start};
            case '*': return {Token::Star, "*", start};
            case '/': return {Token::Slash, "/", start};
            case '^': return {Token::Caret, "^", start};
            case '(': return {Token::LParen, "(", start};
            case ')': return {Token::RParen, ")", start};
            default: throw ParseError(std::string("unexpected character '") + c + "'", start);
        }
    }

    const std::string& s_;
    std::size_t i_ = 0;
    Token tok_[2]{{Token::End, "", 0}, {Token::End, "", 0}};
};

class Parser {
  public:
    Parser(const std::string& text, const std::vector<std::string>& vars, bool rational_mode)
        : lex_(text), vars_(vars), rational_mode_(rational_mode) {}

    RatFunc parse() {
        RatFunc r = expr();
        if (lex_.peek().kind != Token::End)
            throw ParseError("trailing input", lex_.peek().pos);
        return r;
    }

  private:
    RatFunc expr() {
        RatFunc r = term();
        while (lex_.peek().kind == Token::Plus || lex_.peek().kind == Token::Minus) {
            Token op = lex_.take();
            RatFunc t = term();
            r = (op.kind == Token::Plus) ? r + t : r - t;
        }
        return r;
    }

    RatFunc term() {
        RatFunc r = factor();
        for (;;) {
            Token::Kind k = lex_.peek().kind;
            if (k == Token::Star) {
                lex_.take();
                r = r * factor();
            } else if (k == Token::Slash) {
                Token op = lex_.take();
                if (!rational_mode_)
                    throw ParseError("'/' outside a rational literal is only accepted in "
                                     "rational-function mode",
                                     op.pos);
                RatFunc d = factor();
                if (d.is_zero()) throw ParseError("division by the zero polynomial", op.pos);
                r = r / d;
            } else {
                break;
            }
        }
        return r;
    }

    RatFunc factor() {
        RatFunc b = base();
        if (lex_.peek().kind == Token::Caret) {
            lex_.take();
            Token e = lex_.take();
            if (e.kind != Token::Number)
                throw ParseError("exponent must be a natural number", e.pos);
            unsigned long exp = std::stoul(e.text);
            RatFunc r = RatFunc::constant(vars_, Rational(1));
            for (unsigned long i = 0; i < exp; ++i) r = r * b;
            return r;
        }
        return b;
    }

    RatFunc base() {
        Token t = lex_.take();
        switch (t.kind) {
            case Token::Number: {
                // rational := integer ('/' positive-integer)?  -- greedy when the
                // slash is followed by a number, else left for term-level division
                if (lex_.peek().kind == Token::Slash && lex_.peek(1).kind == Token::Number) {
                    lex_.take();
                    Token d = lex_.take();
                    if (d.text.find_first_not_of('0') == std::string::npos)
                        throw ParseError("denominator must be a positive integer", d.pos);
                    Rational q = Rational::from_string(t.text + "/" + d.text);
                    return RatFunc::constant(vars_, q);
                }
                return RatFunc::constant(vars_, Rational::from_string(t.text));
            }
            case Token::Ident: {
                auto it = std::find(vars_.begin(), vars_.end(), t.text);
                if (it == vars_.end())
                    throw ParseError("unknown variable '" + t.text + "'", t.pos);
                return RatFunc(
                    Poly::variable(vars_, static_cast<std::size_t>(it - vars_.begin())));
            }
            case Token::LParen: {
                RatFunc r = expr();
                Token close = lex_.take();
                if (close.kind != Token::RParen)
                    throw ParseError("expected ')'", close.pos);
                return r;
            }
            case Token::Minus:
                return -base();
            default:
                throw ParseError("expected a rational, variable, '(' or '-'", t.pos);
        }
    }

    Lexer lex_;
    const std::vector<std::string>& vars_;
    bool rational_mode_;
};

}  // namespace

RatFunc parse_ratfunc(const std::string& text, const std::vector<std::string>& vars) {
    return Parser(text, vars, true).parse();
}

Poly parse_poly(const std::string& text, const std::vector<std::string>& vars) {
    return Parser(text, vars, false).parse().as_poly();
}

}  // namespace vfcert
