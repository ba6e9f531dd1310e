#include "apolab/parse.hpp"

#include <cctype>

namespace apolab {

namespace {

enum class TokKind { Integer, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
    TokKind kind;
    std::string text;
    std::size_t pos;
};

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) { advance(); }

    const Token& peek() const { return current_; }

    Token take() {
        Token t = current_;
        advance();
        return t;
    }

private:
    void advance() {
        while (i_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[i_]))) ++i_;
        if (i_ >= text_.size()) {
            current_ = {TokKind::End, "", text_.size()};
            return;
        }
        const std::size_t start = i_;
        const char c = text_[i_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (i_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i_]))) ++i_;
            current_ = {TokKind::Integer, std::string(text_.substr(start, i_ - start)), start};
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            while (i_ < text_.size() &&
                   std::isalnum(static_cast<unsigned char>(text_[i_])))
                ++i_;
            current_ = {TokKind::Ident, std::string(text_.substr(start, i_ - start)), start};
            return;
        }
        ++i_;
        switch (c) {
            case '+': current_ = {TokKind::Plus, "+", start}; return;
            case '-': current_ = {TokKind::Minus, "-", start}; return;
            case '*': current_ = {TokKind::Star, "*", start}; return;
            case '/': current_ = {TokKind::Slash, "/", start}; return;
            case '^': current_ = {TokKind::Caret, "^", start}; return;
            case '(': current_ = {TokKind::LParen, "(", start}; return;
            case ')': current_ = {TokKind::RParen, ")", start}; return;
            default: throw ParseError(std::string("unexpected character '") + c + "'", start);
        }
    }

    std::string_view text_;
    std::size_t i_ = 0;
    Token current_{TokKind::End, "", 0};
};

class Parser {
public:
    Parser(std::string_view text, const VariableFrame& frame) : lex_(text), frame_(frame) {}

    Poly run() {
        Poly p = expression();
        const Token& t = lex_.peek();
        if (t.kind != TokKind::End) throw ParseError("unexpected token '" + t.text + "'", t.pos);
        return p;
    }

private:
    static bool starts_atom(TokKind k) {
        return k == TokKind::Integer || k == TokKind::Ident || k == TokKind::LParen;
    }

    Poly expression() {
        bool neg = false;
        while (lex_.peek().kind == TokKind::Plus || lex_.peek().kind == TokKind::Minus)
            neg ^= (lex_.take().kind == TokKind::Minus);
        Poly acc = term();
        if (neg) acc = -acc;
        while (lex_.peek().kind == TokKind::Plus || lex_.peek().kind == TokKind::Minus) {
            const bool minus = (lex_.take().kind == TokKind::Minus);
            Poly t = term();
            if (minus)
                acc -= t;
            else
                acc += t;
        }
        return acc;
    }

    Poly term() {
        Poly acc = factor();
        for (;;) {
            const Token& t = lex_.peek();
            if (t.kind == TokKind::Star) {
                lex_.take();
                acc = acc * factor();
            } else if (t.kind == TokKind::Slash) {
                const std::size_t pos = lex_.take().pos;
                Poly d = factor();
                if (d.is_zero()) throw ParseError("division by zero", pos);
                if (d.total_degree() != 0)
                    throw ParseError("division only by nonzero constants", pos);
                acc = acc.scaled(d.coeff(MultiIndex(frame_.var_count())).inverse());
            } else if (starts_atom(t.kind)) {
                acc = acc * factor();  // juxtaposition: "2i", "3x1", "2(u+v)"
            } else {
                return acc;
            }
        }
    }

    Poly factor() {
        Poly base = atom();
        while (lex_.peek().kind == TokKind::Caret) {
            const std::size_t pos = lex_.take().pos;
            const Token& e = lex_.peek();
            if (e.kind != TokKind::Integer)
                throw ParseError("exponent must be a nonnegative integer", pos);
            unsigned long exp = 0;
            try {
                exp = std::stoul(lex_.take().text);
            } catch (const std::exception&) {
                throw ParseError("exponent out of range", pos);
            }
            base = base.pow(static_cast<unsigned>(exp));
        }
        return base;
    }

    Poly atom() {
        const Token t = lex_.take();
        switch (t.kind) {
            case TokKind::Integer:
                return Poly::constant(frame_, GaussianRational(Rational::from_string(t.text)));
            case TokKind::Ident: {
                if (t.text == "i") return Poly::constant(frame_, GaussianRational::i());
                auto var = frame_.find_var(t.text);
                if (!var)
                    throw ParseError("unknown variable '" + t.text + "' for frame " +
                                         frame_.to_string(),
                                     t.pos);
                return Poly::variable(frame_, *var);
            }
            case TokKind::LParen: {
                Poly p = expression();
                const Token& close = lex_.peek();
                if (close.kind != TokKind::RParen) throw ParseError("expected ')'", close.pos);
                lex_.take();
                return p;
            }
            default:
                throw ParseError("expected a number, variable or '('", t.pos);
        }
    }

    Lexer lex_;
    VariableFrame frame_;
};

}  // namespace

Poly parse_poly(std::string_view text, const VariableFrame& frame) {
    return Parser(text, frame).run();
}

}  // namespace apolab
