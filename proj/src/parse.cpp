#include "wildram/parse.hpp"
#include "wildram/errors.hpp"

#include <algorithm>
#include <cctype>
#include <optional>

namespace wildram {

namespace {

struct Token {
    enum Kind { Int, Ident, Op, End } kind = End;
    std::int64_t value = 0;
    std::string text;
};

class Lexer {
public:
    explicit Lexer(const std::string& s) : s_(s) { advance(); }

    const Token& peek() const { return cur_; }
    Token take() {
        Token t = cur_;
        advance();
        return t;
    }
    bool accept_op(const char* op) {
        if (cur_.kind == Token::Op && cur_.text == op) {
            advance();
            return true;
        }
        return false;
    }
    void expect_op(const char* op) {
        if (!accept_op(op)) throw input_error("expected '" + std::string(op) + "' in expression");
    }

private:
    std::string s_;
    size_t pos_ = 0;
    Token cur_;

    void advance() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ >= s_.size()) {
            cur_ = Token{};
            return;
        }
        char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::int64_t v = 0;
            size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                v = v * 10 + (s_[pos_] - '0');
                if (pos_ - start > 17) throw input_error("integer literal too large");
                ++pos_;
            }
            cur_ = Token{Token::Int, v, ""};
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string id;
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) ||
                                        s_[pos_] == '_')) {
                id += s_[pos_++];
            }
            cur_ = Token{Token::Ident, 0, std::move(id)};
            return;
        }
        static const std::string ops = "+-*/^(),[]<>=";
        if (ops.find(c) != std::string::npos) {
            cur_ = Token{Token::Op, 0, std::string(1, c)};
            ++pos_;
            return;
        }
        throw input_error(std::string("unexpected character '") + c + "' in expression");
    }
};

// Series-valued expression evaluator; "T" is the series variable when allowed.
class ExprParser {
public:
    ExprParser(RingPtr ring, bool allow_t, long prec)
        : ring_(std::move(ring)), allow_t_(allow_t), prec_(prec) {}

    Series parse(const std::string& text) {
        Lexer lex(text);
        Series r = expr(lex);
        if (lex.peek().kind != Token::End) throw input_error("trailing input in expression");
        return r;
    }

private:
    RingPtr ring_;
    bool allow_t_;
    long prec_;

    Series expr(Lexer& lex) {
        bool neg = false;
        if (lex.accept_op("-")) neg = true;
        Series acc = term(lex);
        if (neg) acc = -acc;
        while (true) {
            if (lex.accept_op("+"))
                acc = acc + term(lex);
            else if (lex.accept_op("-"))
                acc = acc - term(lex);
            else
                break;
        }
        return acc;
    }

    Series term(Lexer& lex) {
        Series acc = factor(lex);
        while (true) {
            if (lex.accept_op("*")) {
                acc = acc * factor(lex);
            } else if (lex.accept_op("/")) {
                Series d = factor(lex);
                acc = acc * d.inverse();
            } else {
                break;
            }
        }
        return acc;
    }

    Series factor(Lexer& lex) {
        Series base = atom(lex);
        if (lex.accept_op("^")) {
            bool neg = lex.accept_op("-");
            Token t = lex.take();
            if (t.kind != Token::Int) throw input_error("exponent must be an integer");
            long e = neg ? -t.value : t.value;
            base = base.pow(e);
        }
        return base;
    }

    Series atom(Lexer& lex) {
        if (lex.accept_op("(")) {
            Series r = expr(lex);
            lex.expect_op(")");
            return r;
        }
        Token t = lex.take();
        if (t.kind == Token::Int) return Series::constant(ring_->from_int(t.value), prec_);
        if (t.kind == Token::Ident) {
            if (t.text == "T") {
                if (!allow_t_) throw input_error("series variable T not allowed here");
                return Series::identity(ring_, prec_);
            }
            const auto& vars = ring_->descriptor().vars;
            auto it = std::find(vars.begin(), vars.end(), t.text);
            if (it == vars.end())
                throw input_error("unknown symbol '" + t.text + "' in ring " + ring_->name());
            // the degree-1 monomial in that variable
            const auto& basis = ring_->basis_exponents();
            for (size_t i = 0; i < basis.size(); ++i) {
                long total = 0;
                for (int x : basis[i]) total += x;
                if (total == 1 && basis[i][it - vars.begin()] == 1)
                    return Series::constant(ring_->monomial(static_cast<int>(i)), prec_);
            }
            throw input_error("variable '" + t.text + "' is trivial in " + ring_->name());
        }
        throw input_error("malformed expression");
    }
};

// integer polynomial in one named variable (for ring moduli)
std::vector<std::int64_t> parse_int_poly(const std::string& text, const std::string& var) {
    struct P {
        std::vector<std::int64_t> c; // ascending degree

        static P constant(std::int64_t v) { return P{{v}}; }
        static P variable() { return P{{0, 1}}; }
        void trim() {
            while (!c.empty() && c.back() == 0) c.pop_back();
        }
        P operator+(const P& o) const {
            P r;
            r.c.assign(std::max(c.size(), o.c.size()), 0);
            for (size_t i = 0; i < c.size(); ++i) r.c[i] += c[i];
            for (size_t i = 0; i < o.c.size(); ++i) r.c[i] += o.c[i];
            r.trim();
            return r;
        }
        P operator-() const {
            P r = *this;
            for (auto& x : r.c) x = -x;
            return r;
        }
        P operator-(const P& o) const { return *this + (-o); }
        P operator*(const P& o) const {
            if (c.empty() || o.c.empty()) return P{};
            P r;
            r.c.assign(c.size() + o.c.size() - 1, 0);
            for (size_t i = 0; i < c.size(); ++i)
                for (size_t j = 0; j < o.c.size(); ++j) r.c[i + j] += c[i] * o.c[j];
            r.trim();
            return r;
        }
        P pow(long e) const {
            P r = constant(1);
            for (long i = 0; i < e; ++i) r = r * *this;
            return r;
        }
    };

    // tiny recursive descent mirroring ExprParser
    Lexer lex(text);
    auto atom = [&](auto&& expr_fn) -> P {
        if (lex.accept_op("(")) {
            P r = expr_fn(expr_fn);
            lex.expect_op(")");
            return r;
        }
        Token t = lex.take();
        if (t.kind == Token::Int) return P::constant(t.value);
        if (t.kind == Token::Ident && t.text == var) return P::variable();
        throw input_error("modulus polynomial may only use the variable '" + var + "'");
    };
    auto factor = [&](auto&& expr_fn) -> P {
        P base = atom(expr_fn);
        if (lex.accept_op("^")) {
            Token t = lex.take();
            if (t.kind != Token::Int || t.value < 0)
                throw input_error("modulus exponents must be non-negative integers");
            base = base.pow(t.value);
        }
        return base;
    };
    auto term = [&](auto&& expr_fn) -> P {
        P acc = factor(expr_fn);
        while (lex.accept_op("*")) acc = acc * factor(expr_fn);
        return acc;
    };
    auto expr = [&](auto&& self) -> P {
        bool neg = lex.accept_op("-");
        P acc = term(self);
        if (neg) acc = -acc;
        while (true) {
            if (lex.accept_op("+"))
                acc = acc + term(self);
            else if (lex.accept_op("-"))
                acc = acc - term(self);
            else
                break;
        }
        return acc;
    };
    P r = expr(expr);
    if (lex.peek().kind != Token::End) throw input_error("trailing input in modulus");
    return r.c;
}

} // namespace

RingPtr parse_ring(const std::string& text) {
    std::string s = text;
    s.erase(std::remove_if(s.begin(), s.end(),
                           [](unsigned char c) { return std::isspace(c); }),
            s.end());
    if (s.empty()) throw input_error("empty ring descriptor");

    // split off "[vars]/(relation)"
    std::string base = s, vars_part, rel_part;
    if (auto lb = s.find('['); lb != std::string::npos) {
        auto rb = s.find(']', lb);
        if (rb == std::string::npos) throw input_error("unterminated variable list");
        base = s.substr(0, lb);
        vars_part = s.substr(lb + 1, rb - lb - 1);
        std::string rest = s.substr(rb + 1);
        if (rest.size() < 4 || rest.substr(0, 2) != "/(" || rest.back() != ')')
            throw input_error("expected /(relation) after the variable list");
        rel_part = rest.substr(2, rest.size() - 3);
    }

    std::int64_t p = 0;
    long n = 1;
    bool is_q = false;
    if (base == "Q") {
        is_q = true;
    } else if (base.size() >= 2 && base[0] == 'F' && base.substr(0, 2) != "Fp") {
        p = std::stoll(base.substr(1));
    } else if (base.rfind("Fp(", 0) == 0 && base.back() == ')') {
        p = std::stoll(base.substr(3, base.size() - 4));
    } else if (base.rfind("Z/", 0) == 0) {
        std::string mods = base.substr(2);
        if (auto caret = mods.find('^'); caret != std::string::npos) {
            p = std::stoll(mods.substr(0, caret));
            n = std::stol(mods.substr(caret + 1));
        } else {
            std::int64_t val = std::stoll(mods);
            if (val < 2) throw input_error("modulus must be >= 2");
            // factor as a prime power
            std::int64_t q = val;
            for (std::int64_t d = 2; d * d <= q; ++d)
                if (q % d == 0) {
                    p = d;
                    break;
                }
            if (p == 0) p = q;
            n = 0;
            while (q > 1) {
                if (q % p != 0) throw input_error("Z/N needs N to be a prime power");
                q /= p;
                ++n;
            }
        }
    } else {
        throw input_error("unrecognized ring base '" + base + "'");
    }

    if (vars_part.empty()) {
        if (is_q) return mk_ring(RingDescriptor::rationals());
        return mk_ring(RingDescriptor::integers_mod_pn(p, n));
    }
    if (is_q) throw input_error("Artin rings over Q are not supported");

    std::vector<std::string> vars;
    {
        size_t start = 0;
        while (start <= vars_part.size()) {
            auto comma = vars_part.find(',', start);
            std::string v = comma == std::string::npos ? vars_part.substr(start)
                                                       : vars_part.substr(start, comma - start);
            if (v.empty()) throw input_error("empty variable name");
            vars.push_back(v);
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
    }

    if (rel_part.rfind("deg>=", 0) == 0)
        return mk_ring(RingDescriptor::artin_trunc(p, n, vars, std::stol(rel_part.substr(5))));
    if (rel_part.rfind("deg", 0) == 0 && rel_part.size() > 3 &&
        std::isdigit(static_cast<unsigned char>(rel_part[3])))
        return mk_ring(RingDescriptor::artin_trunc(p, n, vars, std::stol(rel_part.substr(3))));
    if (vars.size() != 1)
        throw input_error("a polynomial relation needs exactly one variable; use deg>=d");
    return mk_ring(RingDescriptor::artin_modulus(p, n, vars[0], parse_int_poly(rel_part, vars[0])));
}

RingElement parse_element(const RingPtr& ring, const std::string& text) {
    if (ring->is_rationals()) {
        // rational literal a or a/b
        Lexer lex(text);
        bool neg = lex.accept_op("-");
        Token num = lex.take();
        if (num.kind != Token::Int) throw input_error("expected a rational literal");
        Rational q(num.value);
        if (lex.accept_op("/")) {
            Token den = lex.take();
            if (den.kind != Token::Int || den.value == 0)
                throw input_error("expected a nonzero denominator");
            q /= den.value;
        }
        if (lex.peek().kind != Token::End) throw input_error("trailing input in rational literal");
        return ring->from_rational(neg ? -q : q);
    }
    ExprParser parser(ring, false, kPrecExact);
    Series s = parser.parse(text);
    auto v = s.valuation();
    if (v.has_value() && *v != 0) throw internal_error("element literal produced a series");
    return s.len() == 0 ? ring->zero() : s.coeff(0);
}

Series parse_series(const RingPtr& ring, const std::string& text, long prec) {
    ExprParser parser(ring, true, prec);
    return parser.parse(text);
}

} // namespace wildram
