#include "polyhull/parse.hpp"

#include <cctype>

namespace polyhull {

namespace {

struct Parser {
    const std::string& s;
    size_t pos = 0;
    char alphabet = 0;

    explicit Parser(const std::string& text) : s(text) {}

    void skip() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eof() const { return pos >= s.size(); }
    char peek() const { return s[pos]; }

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos); }

    mpz_class uint_literal(const char* what) {
        skip();
        if (eof() || !std::isdigit(static_cast<unsigned char>(peek()))) {
            fail(std::string("expected ") + what);
        }
        std::string digits;
        while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) digits += s[pos++];
        return mpz_class(digits);
    }

    bool base_starts_here() {
        skip();
        if (eof()) return false;
        char c = peek();
        return std::isdigit(static_cast<unsigned char>(c)) || c == '(' || c == 'i' ||
               c == 'z' || c == 'w';
    }

    BiPoly base() {
        skip();
        if (eof()) fail("unexpected end of input");
        char c = peek();
        if (c == '(') {
            ++pos;
            BiPoly e = expr();
            skip();
            if (eof() || peek() != ')') fail("expected ')'");
            ++pos;
            return e;
        }
        if (c == 'i') {
            ++pos;
            return BiPoly(GaussianRational::i());
        }
        if (c == 'z' || c == 'w') {
            ++pos;
            if (eof() || (peek() != '1' && peek() != '2')) fail("expected variable index 1 or 2");
            int which = peek() - '0';
            ++pos;
            if (alphabet == 0) alphabet = c;
            else if (alphabet != c) fail("mixed variable alphabets");
            return BiPoly::variable(which);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            mpz_class num = uint_literal("number");
            mpz_class den(1);
            skip();
            if (!eof() && peek() == '/') {
                ++pos;
                den = uint_literal("denominator");
                if (den == 0) fail("zero denominator");
            }
            return BiPoly(GaussianRational(mpq_class(num, den)));
        }
        fail("unexpected character");
    }

    BiPoly factor() {
        BiPoly b = base();
        skip();
        if (!eof() && peek() == '^') {
            ++pos;
            mpz_class e = uint_literal("exponent");
            if (e > 512) fail("exponent too large");
            return b.pow(static_cast<unsigned>(e.get_ui()));
        }
        return b;
    }

    BiPoly term() {
        skip();
        bool neg = false;
        if (!eof() && peek() == '-') {
            neg = true;
            ++pos;
        }
        BiPoly acc = factor();
        for (;;) {
            skip();
            if (!eof() && peek() == '*') {
                ++pos;
                acc *= factor();
                continue;
            }
            if (base_starts_here()) {
                acc *= factor();
                continue;
            }
            break;
        }
        return neg ? -acc : acc;
    }

    BiPoly expr() {
        BiPoly acc = term();
        for (;;) {
            skip();
            if (eof()) break;
            char c = peek();
            if (c == '+') {
                ++pos;
                acc += term();
            } else if (c == '-') {
                ++pos;
                acc -= term();
            } else {
                break;
            }
        }
        return acc;
    }

    BiPoly run() {
        BiPoly r = expr();
        skip();
        if (!eof()) fail("trailing input");
        return r;
    }
};

}  // namespace

BiPoly parse_polynomial(const std::string& text) { return Parser(text).run(); }

char polynomial_alphabet(const std::string& text) {
    Parser p(text);
    p.run();
    return p.alphabet;
}

}  // namespace polyhull
