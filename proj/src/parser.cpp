#include "qorth/parser.hpp"

#include <cctype>
#include <optional>

namespace qorth {

namespace {

// Parser value: scalar until a generator forces promotion to a polynomial.
struct Value {
    Scalar s;
    std::optional<NcPoly> p;

    bool is_poly() const { return p.has_value(); }
};

class Parser {
public:
    Parser(const std::string& text, const Alphabet* alph) : text_(text), alph_(alph) {}

    Value parse() {
        Value v = expr();
        skip_ws();
        if (pos_ != text_.size()) throw ParseError("unexpected trailing input", pos_);
        return v;
    }

private:
    const std::string& text_;
    const Alphabet* alph_;
    size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    static bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
    static bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

    Value expr() {
        bool neg = eat('-');
        Value v = term();
        if (neg) v = negate(std::move(v));
        for (;;) {
            if (eat('+')) {
                v = add(std::move(v), term(), false);
            } else if (eat('-')) {
                v = add(std::move(v), term(), true);
            } else {
                return v;
            }
        }
    }

    Value term() {
        Value v = factor();
        for (;;) {
            if (eat('*')) {
                v = mul(std::move(v), factor());
            } else if (eat('/')) {
                size_t at = pos_;
                Value d = factor();
                if (d.is_poly()) throw ParseError("division by a non-scalar expression", at);
                if (d.s.is_zero()) throw ParseError("division by zero", at);
                v = mul(std::move(v), Value{d.s.inverse(), std::nullopt});
            } else {
                char c = peek();
                if (c == '(' || std::isdigit(static_cast<unsigned char>(c)) || ident_start(c)) {
                    v = mul(std::move(v), factor());  // juxtaposition
                } else {
                    return v;
                }
            }
        }
    }

    Value factor() {
        Value v = atom();
        if (eat('^')) {
            size_t at = pos_;
            bool neg = eat('-');
            long e = integer();
            if (neg) e = -e;
            v = power(std::move(v), e, at);
        }
        return v;
    }

    long integer() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) throw ParseError("expected an integer", start);
        if (pos_ - start > 9) throw ParseError("integer literal too large", start);
        return std::stol(text_.substr(start, pos_ - start));
    }

    Value atom() {
        skip_ws();
        if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Value v = expr();
            if (!eat(')')) throw ParseError("expected ')'", pos_);
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            long n = integer();
            return Value{Scalar(n), std::nullopt};
        }
        if (ident_start(c)) {
            size_t start = pos_;
            while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
            std::string name = text_.substr(start, pos_ - start);
            if (name == "i") return Value{Scalar::i(), std::nullopt};
            if (name == "r") return Value{Scalar::r_power(1), std::nullopt};
            if (name == "w") return Value{Scalar::w(), std::nullopt};
            if (!alph_) throw ParseError("generator '" + name + "' not allowed here", start);
            int g = alph_->id(name);
            if (g < 0) throw ParseError("unknown generator '" + name + "'", start);
            Word w;
            w.push_back(static_cast<char>(g));
            return Value{Scalar::one(), NcPoly(*alph_, w, Scalar::one())};
        }
        throw ParseError(std::string("unexpected character '") + c + "'", pos_);
    }

    Value negate(Value v) {
        if (v.is_poly()) return Value{Scalar::one(), -(*v.p)};
        return Value{-v.s, std::nullopt};
    }

    NcPoly as_poly(const Value& v) const {
        if (v.is_poly()) return *v.p;
        return NcPoly::unit(*alph_, v.s);
    }

    Value add(Value a, Value b, bool subtract) {
        if (!a.is_poly() && !b.is_poly())
            return Value{subtract ? a.s - b.s : a.s + b.s, std::nullopt};
        if (!alph_) throw ParseError("generators not allowed here", pos_);
        NcPoly pa = as_poly(a), pb = as_poly(b);
        return Value{Scalar::one(), subtract ? pa - pb : pa + pb};
    }

    Value mul(Value a, Value b) {
        if (!a.is_poly() && !b.is_poly()) return Value{a.s * b.s, std::nullopt};
        if (a.is_poly() && b.is_poly()) return Value{Scalar::one(), (*a.p) * (*b.p)};
        if (a.is_poly()) return Value{Scalar::one(), a.p->scaled(b.s)};
        return Value{Scalar::one(), b.p->scaled(a.s)};
    }

    Value power(Value v, long e, size_t at) {
        if (!v.is_poly()) {
            if (v.s.is_zero() && e <= 0) throw ParseError("zero to a non-positive power", at);
            Scalar base = e < 0 ? v.s.inverse() : v.s;
            Scalar acc = Scalar::one();
            for (long k = 0; k < (e < 0 ? -e : e); ++k) acc *= base;
            return Value{acc, std::nullopt};
        }
        if (e < 0) throw ParseError("negative power of a non-scalar expression", at);
        NcPoly acc = NcPoly::unit(v.p->alphabet());
        for (long k = 0; k < e; ++k) acc = acc * (*v.p);
        return Value{Scalar::one(), acc};
    }
};

}  // namespace

NcPoly parse_poly(const std::string& text, const Alphabet& alphabet) {
    Parser p(text, &alphabet);
    Value v = p.parse();
    if (v.is_poly()) return *v.p;
    return NcPoly::unit(alphabet, v.s);
}

Scalar parse_scalar(const std::string& text) {
    Parser p(text, nullptr);
    Value v = p.parse();
    return v.s;  // parse() would have thrown on any generator
}

}  // namespace qorth
