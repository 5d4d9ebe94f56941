#include "trichain/parse.hpp"

#include <cctype>

namespace trichain {

namespace {

enum class Tok { End, Plus, Minus, Star, Caret, LParen, RParen, Integer, Ident };

struct Lexer {
    const std::string& s;
    size_t i = 0;
    int line, col = 1;

    Tok tok = Tok::End;
    std::string text;
    int tline = 1, tcol = 1;

    explicit Lexer(const std::string& src, int line0) : s(src), line(line0) { advance(); }

    [[noreturn]] void fail(const std::string& msg, int l, int c) { throw ParseError(msg, l, c); }

    void advance() {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r' || s[i] == '\n')) {
            if (s[i] == '\n') { ++line; col = 1; } else { ++col; }
            ++i;
        }
        tline = line;
        tcol = col;
        if (i >= s.size()) { tok = Tok::End; return; }
        char c = s[i];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            text.clear();
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
                text += s[i++];
                ++col;
            }
            tok = Tok::Integer;
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            text.clear();
            while (i < s.size() &&
                   (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) {
                text += s[i++];
                ++col;
            }
            tok = Tok::Ident;
            return;
        }
        ++i;
        ++col;
        switch (c) {
            case '+': tok = Tok::Plus; return;
            case '-': tok = Tok::Minus; return;
            case '*': tok = Tok::Star; return;
            case '^': tok = Tok::Caret; return;
            case '(': tok = Tok::LParen; return;
            case ')': tok = Tok::RParen; return;
            default: fail(std::string("unexpected character '") + c + "'", tline, tcol);
        }
    }
};

struct Parser {
    Lexer lx;
    const VarOrder& order;

    Parser(const std::string& src, const VarOrder& ord, int line0) : lx(src, line0), order(ord) {}

    MPoly parse() {
        MPoly e = expr();
        if (lx.tok != Tok::End) lx.fail("trailing input", lx.tline, lx.tcol);
        return e;
    }

    MPoly expr() {
        bool neg = false;
        if (lx.tok == Tok::Minus) { neg = true; lx.advance(); }
        else if (lx.tok == Tok::Plus) { lx.advance(); }
        MPoly acc = term();
        if (neg) acc = -acc;
        while (lx.tok == Tok::Plus || lx.tok == Tok::Minus) {
            bool minus = lx.tok == Tok::Minus;
            lx.advance();
            MPoly t = term();
            acc = minus ? acc - t : acc + t;
        }
        return acc;
    }

    MPoly term() {
        MPoly acc = factor();
        while (lx.tok == Tok::Star) {
            lx.advance();
            acc = acc * factor();
        }
        // catch implicit multiplication like "2x" or ")("
        if (lx.tok == Tok::Integer || lx.tok == Tok::Ident || lx.tok == Tok::LParen)
            lx.fail("implicit multiplication is not allowed; use '*'", lx.tline, lx.tcol);
        return acc;
    }

    MPoly factor() {
        MPoly b = base();
        while (lx.tok == Tok::Caret) {
            lx.advance();
            if (lx.tok != Tok::Integer)
                lx.fail("exponent must be a non-negative integer literal", lx.tline, lx.tcol);
            long e = 0;
            try {
                e = std::stol(lx.text);
            } catch (...) {
                lx.fail("exponent out of range", lx.tline, lx.tcol);
            }
            lx.advance();
            b = pow(b, e);
        }
        return b;
    }

    MPoly base() {
        switch (lx.tok) {
            case Tok::Integer: {
                Rational q(lx.text);
                q.canonicalize();
                lx.advance();
                return MPoly(q);
            }
            case Tok::Ident: {
                auto idx = order.index_of(lx.text);
                if (!idx) lx.fail("unknown variable '" + lx.text + "'", lx.tline, lx.tcol);
                lx.advance();
                return MPoly::variable(*idx);
            }
            case Tok::LParen: {
                lx.advance();
                MPoly e = expr();
                if (lx.tok != Tok::RParen) lx.fail("expected ')'", lx.tline, lx.tcol);
                lx.advance();
                return e;
            }
            default:
                lx.fail("expected integer, variable or '('", lx.tline, lx.tcol);
        }
        return MPoly(0);  // unreachable
    }
};

} // namespace

MPoly parse_poly(const std::string& text, const VarOrder& order, int line0) {
    Parser p(text, order, line0);
    return p.parse();
}

} // namespace trichain
