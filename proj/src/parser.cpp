#include "newton/parser.hpp"

#include <cctype>

#include "newton/errors.hpp"

namespace newton {

namespace {

// univariate in x with coefficients that are polynomials in the parameter
using Value = std::vector<Polynomial>;

Value constant_value(Polynomial c) { return {std::move(c)}; }

Value add(const Value& a, const Value& b) {
    Value r(std::max(a.size(), b.size()), Polynomial());
    for (size_t i = 0; i < a.size(); ++i) r[i] = r[i] + a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] = r[i] + b[i];
    return r;
}

Value negate(const Value& a) {
    Value r = a;
    for (Polynomial& p : r) p = -p;
    return r;
}

Value multiply(const Value& a, const Value& b) {
    Value r(a.size() + b.size() - 1, Polynomial());
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
    return r;
}

bool is_constant(const Value& v) {
    for (size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero() && (i > 0 || v[i].degree() > 0)) return false;
    return !v.empty();
}

class Parser {
public:
    Parser(const std::string& text, std::string param)
        : text_(text), param_(std::move(param)) {}

    Value run() {
        skip_ws();
        if (eof()) throw ParseError(0, "empty input");
        Value v = expression();
        skip_ws();
        if (!eof()) throw ParseError(pos_, "unexpected trailing input");
        return v;
    }

    const std::string& variable() const { return var_; }

private:
    const std::string& text_;
    std::string param_;
    std::string var_;
    size_t pos_ = 0;

    bool eof() const { return pos_ >= text_.size(); }
    char peek() const { return eof() ? '\0' : text_[pos_]; }
    void skip_ws() {
        while (!eof() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool accept(char c) {
        skip_ws();
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Value expression() {
        Value v = accept('-') ? negate(term()) : (accept('+'), term());
        for (;;) {
            if (accept('+'))
                v = add(v, term());
            else if (accept('-'))
                v = add(v, negate(term()));
            else
                return v;
        }
    }

    Value term() {
        Value v = factor();
        for (;;) {
            skip_ws();
            if (accept('*')) {
                v = multiply(v, factor());
            } else if (accept('/')) {
                size_t at = pos_;
                Value d = factor();
                if (!is_constant(d)) throw ParseError(at, "divisor must be a constant");
                Rat div = d[0].evaluate(Rat(0));
                if (div == 0) throw ParseError(at, "division by zero in coefficient");
                v = multiply(v, constant_value(Polynomial::constant(Rat(1) / div)));
            } else if (starts_factor()) {
                v = multiply(v, factor());  // implicit multiplication, e.g. 28x^2
            } else {
                return v;
            }
        }
    }

    bool starts_factor() {
        skip_ws();
        char c = peek();
        return std::isdigit(static_cast<unsigned char>(c)) ||
               std::isalpha(static_cast<unsigned char>(c)) || c == '(';
    }

    Value factor() {
        Value base = primary();
        skip_ws();
        if (accept('^')) {
            skip_ws();
            size_t at = pos_;
            if (!std::isdigit(static_cast<unsigned char>(peek())))
                throw ParseError(at, "power must be a nonnegative integer");
            long k = 0;
            while (std::isdigit(static_cast<unsigned char>(peek()))) {
                k = k * 10 + (text_[pos_++] - '0');
                if (k > 4096) throw ParseError(at, "power too large");
            }
            Value r = constant_value(Polynomial::constant(1));
            for (long i = 0; i < k; ++i) r = multiply(r, base);
            return r;
        }
        return base;
    }

    Value primary() {
        skip_ws();
        if (eof()) throw ParseError(pos_, "unexpected end of input");
        char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) return number();
        if (std::isalpha(static_cast<unsigned char>(c))) return identifier();
        if (accept('(')) {
            Value v = expression();
            if (!accept(')')) throw ParseError(pos_, "expected ')'");
            return v;
        }
        throw ParseError(pos_, std::string("unknown token '") + c + "'");
    }

    Value number() {
        size_t at = pos_;
        std::string digits;
        while (std::isdigit(static_cast<unsigned char>(peek()))) digits += text_[pos_++];
        std::string frac;
        if (peek() == '.') {
            ++pos_;
            while (std::isdigit(static_cast<unsigned char>(peek()))) frac += text_[pos_++];
            if (frac.empty()) throw ParseError(pos_, "expected digits after decimal point");
        }
        if ((peek() == 'e' || peek() == 'E') && pos_ + 1 < text_.size() &&
            (std::isdigit(static_cast<unsigned char>(text_[pos_ + 1])) ||
             text_[pos_ + 1] == '-' || text_[pos_ + 1] == '+'))
            throw ParseError(pos_, "scientific notation is not supported");
        Int scaled = 0;  // accumulate manually: Int("0...") would parse as octal
        for (char ch : digits + frac) scaled = scaled * 10 + (ch - '0');
        Rat v(scaled);
        v /= Rat(pow10(static_cast<unsigned>(frac.size())));
        (void)at;
        return constant_value(Polynomial::constant(v));
    }

    Value identifier() {
        size_t at = pos_;
        std::string name;
        while (std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_')
            name += text_[pos_++];
        if (!param_.empty() && name == param_)
            return constant_value(Polynomial::from_coeffs({Rat(0), Rat(1)}));
        if (var_.empty()) var_ = name;
        if (name != var_)
            throw ParseError(at, "mixed variables: '" + name + "' after '" + var_ + "'");
        Value v(2, Polynomial());
        v[1] = Polynomial::constant(1);
        return v;
    }
};

}  // namespace

Polynomial parse_polynomial(const std::string& text) {
    Parser parser(text, "");
    Value v = parser.run();
    std::vector<Rat> coeffs;
    coeffs.reserve(v.size());
    for (const Polynomial& c : v) coeffs.push_back(c.evaluate(Rat(0)));
    if (coeffs.empty()) coeffs.push_back(Rat(0));
    return Polynomial::from_coeffs(std::move(coeffs));
}

Polynomial ParametricPolynomial::instantiate(const Rat& value) const {
    std::vector<Rat> c;
    c.reserve(coeffs.size());
    for (const Polynomial& p : coeffs) c.push_back(p.evaluate(value));
    return Polynomial::from_coeffs(std::move(c));
}

ParametricPolynomial parse_parametric(const std::string& text, const std::string& param) {
    if (param.empty()) throw ParseError(0, "parameter name must not be empty");
    Parser parser(text, param);
    Value v = parser.run();
    ParametricPolynomial pp;
    pp.parameter = param;
    pp.variable = parser.variable().empty() ? "x" : parser.variable();
    for (const Polynomial& c : v) {
        if (c.degree() > 3)
            throw ParseError(0, "coefficient has degree > 3 in parameter '" + param + "'");
        pp.coeffs.push_back(c);
    }
    if (pp.coeffs.empty()) pp.coeffs.push_back(Polynomial());
    return pp;
}

std::string to_string(const Polynomial& p, const std::string& var) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int k = p.degree(); k >= 0; --k) {
        const Rat& c = p[k];
        if (c == 0) continue;
        Rat mag = rat_abs(c);
        if (out.empty())
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        bool unit = mag == 1 && k > 0;
        if (!unit) {
            if (denominator(mag) == 1)
                out += numerator(mag).str();
            else
                out += "(" + rat_string(mag) + ")";
        }
        if (k > 0) {
            out += var;
            if (k > 1) out += "^" + std::to_string(k);
        }
    }
    return out;
}

}  // namespace newton
