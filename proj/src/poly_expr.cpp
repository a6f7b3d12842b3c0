#include <cctype>
#include <string>

#include "pdet/errors.hpp"
#include "pdet/rational_function.hpp"

namespace pdet {

namespace {

// expr   := term (('+'|'-') term)*
// term   := factor (('*'|'/') factor)*
// factor := ('+'|'-')* atom ('^' uint)?
// atom   := integer | 't' | '(' expr ')'
class ExprParser {
public:
    explicit ExprParser(const std::string& s) : s_(s) {}

    RationalFunction parse() {
        RationalFunction v = expr();
        skip_ws();
        if (pos_ != s_.size())
            throw InputError("unexpected trailing input in expression: '" +
                             s_.substr(pos_) + "'");
        return v;
    }

private:
    RationalFunction expr() {
        RationalFunction v = term();
        for (;;) {
            skip_ws();
            if (match('+')) v = v + term();
            else if (match('-')) v = v - term();
            else return v;
        }
    }

    RationalFunction term() {
        RationalFunction v = factor();
        for (;;) {
            skip_ws();
            if (match('*')) v = v * factor();
            else if (match('/')) {
                RationalFunction d = factor();
                if (d.is_zero()) throw InputError("division by zero in expression");
                v = v / d;
            } else return v;
        }
    }

    RationalFunction factor() {
        skip_ws();
        bool neg = false;
        while (peek() == '+' || peek() == '-') {
            if (s_[pos_] == '-') neg = !neg;
            ++pos_;
            skip_ws();
        }
        RationalFunction v = atom();
        skip_ws();
        if (match('^')) {
            skip_ws();
            size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_) throw InputError("expected exponent after '^'");
            v = v.pow(std::stol(s_.substr(start, pos_ - start)));
        }
        return neg ? -v : v;
    }

    RationalFunction atom() {
        skip_ws();
        if (match('(')) {
            RationalFunction v = expr();
            skip_ws();
            if (!match(')')) throw InputError("missing ')' in expression");
            return v;
        }
        if (peek() == 't') {
            ++pos_;
            return RationalFunction::t();
        }
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return RationalFunction(Rational::from_string(s_.substr(start, pos_ - start)));
        }
        throw InputError("cannot parse expression at '" + s_.substr(pos_) + "'");
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    bool match(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    const std::string& s_;
    size_t pos_ = 0;
};

} // namespace

RationalFunction parse_rational_function(const std::string& text) {
    return ExprParser(text).parse();
}

} // namespace pdet
