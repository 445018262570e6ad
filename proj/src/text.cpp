#include "motivic/text.hpp"

#include <cctype>
#include <limits>

namespace motivic {

std::string to_string(const Rational &r) { return r.get_str(); }

std::string to_string(const Monomial &m)
{
    std::string out;
    for (const auto &f : m.factors()) {
        if (!out.empty()) {
            out += " * ";
        }
        out += f.var->name();
        if (f.exp != 1) {
            out += "^" + std::to_string(f.exp);
        }
    }
    return out.empty() ? "1" : out;
}

namespace {

std::string coefficient_text(const Rational &c)
{
    std::string s = c.get_str();
    bool bare = sgn(c) > 0 && c.get_den() == 1;
    return bare ? s : "(" + s + ")";
}

} // namespace

std::string to_string(const Polynomial &p)
{
    if (p.is_zero()) {
        return "0";
    }
    std::string out;
    for (const auto &t : p.terms()) {
        if (!out.empty()) {
            out += " + ";
        }
        if (t.mono.is_one()) {
            out += coefficient_text(t.coeff);
        } else if (t.coeff == 1) {
            out += to_string(t.mono);
        } else {
            out += coefficient_text(t.coeff) + " * " + to_string(t.mono);
        }
    }
    return out;
}

std::string to_string(const MotiveScalar &s)
{
    if (s.denominator().is_constant()) {
        return to_string(s.numerator());
    }
    return "(" + to_string(s.numerator()) + ") / (" + to_string(s.denominator()) + ")";
}

ParseError::ParseError(const std::string &what, std::size_t offset)
    : std::runtime_error(what + " at offset " + std::to_string(offset)), offset_(offset)
{
}

Rational parse_rational(std::string_view text)
{
    std::string s(text);
    auto valid = [&] {
        if (s.empty()) {
            return false;
        }
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        bool seen_digit = false;
        bool seen_slash = false;
        for (; i < s.size(); ++i) {
            if (std::isdigit(static_cast<unsigned char>(s[i]))) {
                seen_digit = true;
            } else if (s[i] == '/' && seen_digit && !seen_slash) {
                seen_slash = true;
                seen_digit = false;
            } else {
                return false;
            }
        }
        return seen_digit;
    };
    if (!valid()) {
        throw ParseError("malformed rational '" + s + "'", 0);
    }
    if (s[0] == '+') {
        s.erase(0, 1);
    }
    Rational r;
    if (r.set_str(s, 10) != 0) {
        throw ParseError("malformed rational '" + s + "'", 0);
    }
    if (r.get_den() == 0) {
        throw ParseError("zero denominator in rational '" + s + "'", 0);
    }
    r.canonicalize();
    return r;
}

namespace {

// Polynomial in q with scalar coefficients, indexed by degree.
struct QPoly {
    std::vector<MotiveScalar> c;

    static QPoly scalar(MotiveScalar s) { return QPoly{{std::move(s)}}; }

    void trim()
    {
        while (c.size() > 1 && c.back().is_zero()) {
            c.pop_back();
        }
    }
    bool is_scalar() const { return c.size() <= 1; }
    MotiveScalar as_scalar() const { return c.empty() ? MotiveScalar() : c.front(); }
};

QPoly add(const QPoly &a, const QPoly &b, bool subtract)
{
    QPoly out;
    out.c.resize(std::max(a.c.size(), b.c.size()));
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        out.c[i] = a.c[i];
    }
    for (std::size_t i = 0; i < b.c.size(); ++i) {
        out.c[i] = subtract ? out.c[i] - b.c[i] : out.c[i] + b.c[i];
    }
    out.trim();
    return out;
}

QPoly mul(const QPoly &a, const QPoly &b)
{
    QPoly out;
    if (a.c.empty() || b.c.empty()) {
        return QPoly::scalar(MotiveScalar());
    }
    out.c.resize(a.c.size() + b.c.size() - 1);
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; j < b.c.size(); ++j) {
            if (!b.c[j].is_zero()) {
                out.c[i + j] += a.c[i] * b.c[j];
            }
        }
    }
    out.trim();
    return out;
}

class Parser {
public:
    Parser(std::string_view text, bool allow_q) : text_(text), allow_q_(allow_q) {}

    QPoly parse()
    {
        QPoly v = expr();
        skip_ws();
        if (pos_ != text_.size()) {
            fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        }
        return v;
    }

private:
    [[noreturn]] void fail(const std::string &what) const { throw ParseError(what, pos_); }

    void skip_ws()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    bool accept(char ch)
    {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == ch) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char ch)
    {
        if (!accept(ch)) {
            fail(std::string("expected '") + ch + "'");
        }
    }

    QPoly expr()
    {
        QPoly v = term();
        while (true) {
            if (accept('+')) {
                v = add(v, term(), false);
            } else if (accept('-')) {
                v = add(v, term(), true);
            } else {
                return v;
            }
        }
    }

    QPoly term()
    {
        QPoly v = signed_factor();
        while (true) {
            if (accept('*')) {
                v = mul(v, signed_factor());
            } else if (accept('/')) {
                std::size_t at = pos_;
                QPoly d = signed_factor();
                if (!d.is_scalar()) {
                    throw ParseError("division by an expression containing q", at);
                }
                MotiveScalar s = d.as_scalar();
                if (s.is_zero()) {
                    throw ParseError("division by zero", at);
                }
                s = s.inverse();
                for (auto &c : v.c) {
                    c *= s;
                }
            } else {
                return v;
            }
        }
    }

    QPoly signed_factor()
    {
        if (accept('-')) {
            QPoly v = signed_factor();
            for (auto &c : v.c) {
                c = -c;
            }
            return v;
        }
        if (accept('+')) {
            return signed_factor();
        }
        return power();
    }

    long integer()
    {
        skip_ws();
        bool neg = false;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
            neg = text_[pos_] == '-';
            ++pos_;
        }
        std::size_t start = pos_;
        long value = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            value = value * 10 + (text_[pos_] - '0');
            if (value > std::numeric_limits<int>::max()) {
                fail("integer too large");
            }
            ++pos_;
        }
        if (pos_ == start) {
            fail("expected integer");
        }
        return neg ? -value : value;
    }

    // Exponent in halves: `^n`, `^(n)`, `^{n}`, `^{a/2}`.
    long exponent_halves()
    {
        skip_ws();
        if (accept('{')) {
            long a = integer();
            long halves = 2 * a;
            if (accept('/')) {
                long d = integer();
                if (d != 2) {
                    fail("only /2 fractional exponents are supported");
                }
                halves = a;
            }
            expect('}');
            return halves;
        }
        if (accept('(')) {
            long a = integer();
            expect(')');
            return 2 * a;
        }
        return 2 * integer();
    }

    QPoly raise(const QPoly &base, long exp, std::size_t at)
    {
        if (!base.is_scalar()) {
            if (exp < 0) {
                throw ParseError("negative power of an expression containing q", at);
            }
            QPoly out = QPoly::scalar(MotiveScalar(1));
            for (long i = 0; i < exp; ++i) {
                out = mul(out, base);
            }
            return out;
        }
        MotiveScalar s = base.as_scalar();
        if (s.is_zero() && exp < 0) {
            throw ParseError("division by zero", at);
        }
        return QPoly::scalar(s.pow(static_cast<int>(exp)));
    }

    QPoly power()
    {
        skip_ws();
        std::size_t at = pos_;
        bool is_lefschetz = false;
        QPoly base = primary(is_lefschetz);
        if (accept('^')) {
            long halves = exponent_halves();
            if (is_lefschetz) {
                return QPoly::scalar(MotiveScalar::lefschetz_half_power(static_cast<int>(halves)));
            }
            if (halves % 2 != 0) {
                throw ParseError("half-integer exponent is only allowed on L", at);
            }
            return raise(base, halves / 2, at);
        }
        return base;
    }

    std::string identifier()
    {
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
            ++pos_;
        }
        return std::string(text_.substr(start, pos_ - start));
    }

    std::string bracket_suffix()
    {
        if (pos_ >= text_.size() || text_[pos_] != '[') {
            return {};
        }
        std::size_t start = pos_;
        while (pos_ < text_.size() && text_[pos_] != ']') {
            ++pos_;
        }
        if (pos_ == text_.size()) {
            fail("unterminated '['");
        }
        ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    QPoly primary(bool &is_lefschetz)
    {
        skip_ws();
        if (pos_ >= text_.size()) {
            fail("unexpected end of input");
        }
        char ch = text_[pos_];
        if (ch == '(') {
            ++pos_;
            QPoly v = expr();
            expect(')');
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                ++pos_;
            }
            Rational r(std::string(text_.substr(start, pos_ - start)), 10);
            return QPoly::scalar(MotiveScalar(r));
        }
        if (!(std::isalpha(static_cast<unsigned char>(ch)) || ch == '_')) {
            fail("unexpected '" + std::string(1, ch) + "'");
        }
        std::size_t start = pos_;
        std::string id = identifier();
        if (id == "u") {
            return QPoly::scalar(MotiveScalar::u());
        }
        if (id == "L") {
            is_lefschetz = true;
            return QPoly::scalar(MotiveScalar::lefschetz_half_power(2));
        }
        if (id == "q") {
            if (!allow_q_) {
                throw ParseError("series variable q is not allowed in a scalar", start);
            }
            QPoly v;
            v.c = {MotiveScalar(), MotiveScalar(1)};
            return v;
        }
        if (id == "chi") {
            expect('(');
            skip_ws();
            std::size_t bstart = pos_;
            std::string base = identifier();
            base += bracket_suffix();
            if (!is_valid_base(base)) {
                throw ParseError("invalid generator name '" + base + "'", bstart);
            }
            expect(')');
            return QPoly::scalar(MotiveScalar(Polynomial::variable(chi_var(base))));
        }
        std::string base = id + bracket_suffix();
        if (!is_valid_base(base)) {
            throw ParseError("invalid generator name '" + base + "'", start);
        }
        int weight = 1;
        if (pos_ < text_.size() && text_[pos_] == '.') {
            ++pos_;
            std::size_t wstart = pos_;
            long w = 0;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                w = w * 10 + (text_[pos_] - '0');
                if (w > std::numeric_limits<int>::max()) {
                    fail("atom weight too large");
                }
                ++pos_;
            }
            if (pos_ == wstart || w < 1) {
                throw ParseError("atom weight must be a positive integer", wstart);
            }
            weight = static_cast<int>(w);
        }
        return QPoly::scalar(MotiveScalar::atom(base, weight));
    }

    std::string_view text_;
    bool allow_q_;
    std::size_t pos_ = 0;
};

} // namespace

MotiveScalar parse_scalar(std::string_view text) { return Parser(text, false).parse().as_scalar(); }

std::vector<MotiveScalar> parse_q_polynomial(std::string_view text)
{
    QPoly v = Parser(text, true).parse();
    if (v.c.empty()) {
        v.c.emplace_back();
    }
    return v.c;
}

} // namespace motivic
