#include "purepoly/parse.hpp"

#include <cctype>
#include <string>

#include "purepoly/errors.hpp"

namespace purepoly {

namespace {

constexpr std::size_t kMaxParsedDegree = std::size_t{1} << 20;

class Parser {
   public:
    explicit Parser(std::string_view text) : text_(normalize(text)) {}

    PolyQ parse() {
        skip_space();
        if (at_end()) throw ParseError("empty expression", pos_);
        PolyQ result = expr();
        skip_space();
        if (!at_end()) throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
        return result;
    }

   private:
    // U+2212 MINUS SIGN is accepted as '-'.
    static std::string normalize(std::string_view text) {
        std::string out;
        out.reserve(text.size());
        for (std::size_t i = 0; i < text.size(); ++i) {
            if (i + 2 < text.size() && static_cast<unsigned char>(text[i]) == 0xE2 &&
                static_cast<unsigned char>(text[i + 1]) == 0x88 && static_cast<unsigned char>(text[i + 2]) == 0x92) {
                out += '-';
                i += 2;
            } else {
                out += text[i];
            }
        }
        return out;
    }

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }
    void skip_space() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool starts_base() const {
        char c = peek();
        return std::isdigit(static_cast<unsigned char>(c)) || c == 'x' || c == 'X' || c == '(';
    }

    PolyQ expr() {
        PolyQ acc = term();
        for (;;) {
            skip_space();
            char c = peek();
            if (c != '+' && c != '-') return acc;
            ++pos_;
            PolyQ rhs = term();
            if (c == '+')
                acc += rhs;
            else
                acc -= rhs;
        }
    }

    PolyQ term() {
        PolyQ acc = unary();
        for (;;) {
            skip_space();
            char c = peek();
            if (c == '*') {
                ++pos_;
                acc *= unary();
            } else if (c == '/') {
                std::size_t at = pos_++;
                PolyQ divisor = unary();
                if (divisor.degree() > 0) throw ParseError("division by a non-constant expression", at);
                if (divisor.is_zero()) throw ParseError("division by zero", at);
                acc *= BigRational(1 / divisor[0]);
            } else if (starts_base()) {
                acc *= unary();  // implicit multiplication, e.g. "4x^3"
            } else {
                return acc;
            }
        }
    }

    PolyQ unary() {
        skip_space();
        if (peek() == '-') {
            ++pos_;
            return -unary();
        }
        if (peek() == '+') {
            ++pos_;
            return unary();
        }
        return factor();
    }

    PolyQ factor() {
        PolyQ b = base();
        skip_space();
        if (peek() != '^') return b;
        ++pos_;
        skip_space();
        std::size_t at = pos_;
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            throw ParseError("exponent must be a nonnegative integer", at);
        std::string digits;
        while (std::isdigit(static_cast<unsigned char>(peek()))) digits += text_[pos_++];
        if (peek() == '.') throw ParseError("exponent must be a nonnegative integer", at);
        if (digits.size() > 9) throw ParseError("exponent too large", at);
        unsigned long e = std::stoul(digits);
        if (b.degree() > 0 && e > kMaxParsedDegree / static_cast<std::size_t>(b.degree()))
            throw ParseError("exponent too large", at);
        if (b.degree() <= 0 && e > 4096 && !(b.is_zero() || b[0] == 1 || b[0] == -1))
            throw ParseError("exponent too large", at);
        return pow(b, e);
    }

    PolyQ base() {
        skip_space();
        std::size_t at = pos_;
        char c = peek();
        if (c == '(') {
            ++pos_;
            PolyQ inner = expr();
            skip_space();
            if (peek() != ')') throw ParseError("expected ')'", pos_);
            ++pos_;
            return inner;
        }
        if (c == 'x' || c == 'X') {
            ++pos_;
            return PolyQ::x();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string digits;
            while (std::isdigit(static_cast<unsigned char>(peek()))) digits += text_[pos_++];
            if (peek() == '.') throw ParseError("decimal points are not supported; write a fraction", pos_);
            return PolyQ::constant(BigRational(BigInt(digits, 10)));
        }
        if (at_end()) throw ParseError("unexpected end of expression", at);
        throw ParseError(std::string("unexpected '") + c + "'", at);
    }

    std::string text_;
    std::size_t pos_ = 0;
};

}  // namespace

PolyQ parse_poly(std::string_view text) { return Parser(text).parse(); }

}  // namespace purepoly
