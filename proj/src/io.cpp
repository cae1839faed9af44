#include "lbr/io.hpp"

#include <cctype>
#include <functional>
#include <map>
#include <memory>
#include <sstream>

namespace lbr {

namespace {

enum class Tok { Number, Name, Plus, Minus, Star, Slash, Caret, LParen, RParen, Comma, End };

struct Token {
    Tok kind;
    std::string text;
    std::size_t pos;  // 1-based
};

std::vector<Token> tokenize(const std::string& s) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        std::size_t start = i;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
            out.push_back({Tok::Number, s.substr(start, i - start), start + 1});
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
            out.push_back({Tok::Name, s.substr(start, i - start), start + 1});
            continue;
        }
        Tok k;
        switch (c) {
            case '+': k = Tok::Plus; break;
            case '-': k = Tok::Minus; break;
            case '*': k = Tok::Star; break;
            case '/': k = Tok::Slash; break;
            case '^': k = Tok::Caret; break;
            case '(': k = Tok::LParen; break;
            case ')': k = Tok::RParen; break;
            case ',': k = Tok::Comma; break;
            default: throw SyntaxError(start + 1, std::string("unexpected character '") + c + "'");
        }
        out.push_back({k, std::string(1, c), start + 1});
        ++i;
    }
    out.push_back({Tok::End, "", s.size() + 1});
    return out;
}

struct Node {
    enum Kind { Num, Var, Add, Sub, Mul, Div, Neg, Pow, Root } kind;
    std::size_t pos = 0;
    Rational value;
    std::string name;
    std::vector<std::unique_ptr<Node>> kids;
};

using NodePtr = std::unique_ptr<Node>;

NodePtr make_node(Node::Kind k, std::size_t pos) {
    auto n = std::make_unique<Node>();
    n->kind = k;
    n->pos = pos;
    return n;
}

class Parser {
public:
    explicit Parser(const std::string& text) : toks_(tokenize(text)) {}

    NodePtr expression() {
        NodePtr lhs = term();
        while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
            Token op = next();
            NodePtr n = make_node(op.kind == Tok::Plus ? Node::Add : Node::Sub, op.pos);
            n->kids.push_back(std::move(lhs));
            n->kids.push_back(term());
            lhs = std::move(n);
        }
        return lhs;
    }

    std::vector<NodePtr> tuple() {
        expect(Tok::LParen, "expected '('");
        std::vector<NodePtr> items;
        items.push_back(expression());
        while (peek().kind == Tok::Comma) {
            next();
            items.push_back(expression());
        }
        expect(Tok::RParen, "expected ')' or ','");
        return items;
    }

    void finish() {
        if (peek().kind != Tok::End) throw SyntaxError(peek().pos, "unexpected trailing input");
    }

private:
    const Token& peek() const { return toks_[i_]; }
    Token next() { return toks_[i_++]; }
    void expect(Tok k, const char* what) {
        if (peek().kind != k) throw SyntaxError(peek().pos, what);
        ++i_;
    }

    NodePtr term() {
        NodePtr lhs = unary();
        while (peek().kind == Tok::Star || peek().kind == Tok::Slash) {
            Token op = next();
            NodePtr n = make_node(op.kind == Tok::Star ? Node::Mul : Node::Div, op.pos);
            n->kids.push_back(std::move(lhs));
            n->kids.push_back(unary());
            lhs = std::move(n);
        }
        return lhs;
    }

    NodePtr unary() {
        if (peek().kind == Tok::Minus) {
            Token op = next();
            NodePtr n = make_node(Node::Neg, op.pos);
            n->kids.push_back(unary());
            return n;
        }
        if (peek().kind == Tok::Plus) {
            next();
            return unary();
        }
        return power();
    }

    NodePtr power() {
        NodePtr base = primary();
        if (peek().kind == Tok::Caret) {
            Token op = next();
            NodePtr n = make_node(Node::Pow, op.pos);
            n->kids.push_back(std::move(base));
            n->kids.push_back(unary());
            return n;
        }
        return base;
    }

    NodePtr primary() {
        const Token& t = peek();
        if (t.kind == Tok::Number) {
            Token tok = next();
            NodePtr n = make_node(Node::Num, tok.pos);
            n->value = Rational(Integer(tok.text));
            return n;
        }
        if (t.kind == Tok::Name) {
            Token tok = next();
            if (tok.text == "root") {
                NodePtr n = make_node(Node::Root, tok.pos);
                auto items = tuple_after_name();
                if (items.size() != 3) throw SyntaxError(tok.pos, "root expects (poly, lo, hi)");
                n->kids = std::move(items);
                return n;
            }
            NodePtr n = make_node(Node::Var, tok.pos);
            n->name = tok.text;
            return n;
        }
        if (t.kind == Tok::LParen) {
            next();
            NodePtr e = expression();
            expect(Tok::RParen, "expected ')'");
            return e;
        }
        if (t.kind == Tok::End) throw SyntaxError(t.pos, "unexpected end of input");
        throw SyntaxError(t.pos, "unexpected '" + t.text + "'");
    }

    std::vector<NodePtr> tuple_after_name() { return tuple(); }

    std::vector<Token> toks_;
    std::size_t i_ = 0;
};

// Variable naming: x, y, z -> 0, 1, 2 or xN -> N - 1.
struct VarStyle {
    bool letters = false;
    bool indexed = false;
    std::size_t needed = 0;
};

std::optional<std::size_t> variable_index(const std::string& name, VarStyle& style, std::size_t pos) {
    std::size_t idx;
    if (name == "x" || name == "y" || name == "z") {
        idx = name == "x" ? 0 : name == "y" ? 1 : 2;
        style.letters = true;
    } else if (name.size() > 1 && name[0] == 'x' &&
               name.find_first_not_of("0123456789", 1) == std::string::npos) {
        unsigned long k = std::stoul(name.substr(1));
        if (k == 0) throw SyntaxError(pos, "variables are numbered from x1");
        idx = k - 1;
        style.indexed = true;
    } else {
        return std::nullopt;
    }
    if (style.letters && style.indexed) throw SyntaxError(pos, "cannot mix x, y, z with x1..xn");
    style.needed = std::max(style.needed, idx + 1);
    return idx;
}

void collect_variables(const Node& n, VarStyle& style) {
    if (n.kind == Node::Var) {
        if (!variable_index(n.name, style, n.pos)) throw SyntaxError(n.pos, "unknown variable '" + n.name + "'");
    }
    if (n.kind == Node::Root) return;
    for (const auto& k : n.kids) collect_variables(*k, style);
}

Rational eval_constant(const Node& n);

long integer_exponent(const Node& n) {
    Rational e = eval_constant(n);
    if (e.get_den() != 1 || !e.get_num().fits_slong_p()) throw SyntaxError(n.pos, "exponent must be an integer");
    return e.get_num().get_si();
}

Rational eval_constant(const Node& n) {
    switch (n.kind) {
        case Node::Num: return n.value;
        case Node::Var: throw SyntaxError(n.pos, "expected a constant, found '" + n.name + "'");
        case Node::Root: throw SyntaxError(n.pos, "root(...) is not allowed here");
        case Node::Add: return eval_constant(*n.kids[0]) + eval_constant(*n.kids[1]);
        case Node::Sub: return eval_constant(*n.kids[0]) - eval_constant(*n.kids[1]);
        case Node::Mul: return eval_constant(*n.kids[0]) * eval_constant(*n.kids[1]);
        case Node::Neg: return -eval_constant(*n.kids[0]);
        case Node::Div: {
            Rational d = eval_constant(*n.kids[1]);
            if (sgn(d) == 0) throw SyntaxError(n.pos, "division by zero");
            return eval_constant(*n.kids[0]) / d;
        }
        case Node::Pow: {
            Rational b = eval_constant(*n.kids[0]);
            long e = integer_exponent(*n.kids[1]);
            if (e < 0 && sgn(b) == 0) throw SyntaxError(n.pos, "division by zero");
            Rational r(1);
            for (long i = 0; i < std::abs(e); ++i) r *= b;
            return e < 0 ? Rational(1 / r) : r;
        }
    }
    return Rational(0);
}

RationalFunction eval_function(const Node& n, std::size_t arity, VarStyle& style) {
    switch (n.kind) {
        case Node::Num: return RationalFunction::constant(arity, n.value);
        case Node::Var: return RationalFunction::variable(arity, *variable_index(n.name, style, n.pos));
        case Node::Root: throw SyntaxError(n.pos, "root(...) is not allowed in a function");
        case Node::Add: return eval_function(*n.kids[0], arity, style) + eval_function(*n.kids[1], arity, style);
        case Node::Sub: return eval_function(*n.kids[0], arity, style) - eval_function(*n.kids[1], arity, style);
        case Node::Mul: return eval_function(*n.kids[0], arity, style) * eval_function(*n.kids[1], arity, style);
        case Node::Neg: return -eval_function(*n.kids[0], arity, style);
        case Node::Div: {
            RationalFunction d = eval_function(*n.kids[1], arity, style);
            if (d.is_zero()) throw SyntaxError(n.pos, "division by zero");
            return eval_function(*n.kids[0], arity, style) / d;
        }
        case Node::Pow: {
            RationalFunction b = eval_function(*n.kids[0], arity, style);
            long e = integer_exponent(*n.kids[1]);
            if (e < 0 && b.is_zero()) throw SyntaxError(n.pos, "division by zero");
            return pow(b, static_cast<int>(e));
        }
    }
    return RationalFunction::constant(arity, Rational(0));
}

AlgNum eval_root(const Node& n, TowerPtr& context) {
    const Node& pn = *n.kids[0];
    VarStyle dummy;
    std::string var;
    // The polynomial may use any single variable name.
    std::vector<const Node*> stack{&pn};
    while (!stack.empty()) {
        const Node* cur = stack.back();
        stack.pop_back();
        if (cur->kind == Node::Var) {
            if (!var.empty() && var != cur->name) throw SyntaxError(cur->pos, "root() needs a univariate polynomial");
            var = cur->name;
        }
        if (cur->kind == Node::Root) throw SyntaxError(cur->pos, "nested root() is not supported");
        for (const auto& k : cur->kids) stack.push_back(k.get());
    }
    // Evaluate as a univariate polynomial by renaming the variable to x.
    std::function<RationalFunction(const Node&)> ev = [&](const Node& m) -> RationalFunction {
        switch (m.kind) {
            case Node::Num: return RationalFunction::constant(1, m.value);
            case Node::Var: return RationalFunction::variable(1, 0);
            case Node::Add: return ev(*m.kids[0]) + ev(*m.kids[1]);
            case Node::Sub: return ev(*m.kids[0]) - ev(*m.kids[1]);
            case Node::Mul: return ev(*m.kids[0]) * ev(*m.kids[1]);
            case Node::Neg: return -ev(*m.kids[0]);
            case Node::Div: {
                RationalFunction d = ev(*m.kids[1]);
                if (!d.is_polynomial() || d.is_zero()) throw SyntaxError(m.pos, "root() needs a polynomial");
                return ev(*m.kids[0]) / d;
            }
            case Node::Pow: {
                long e = integer_exponent(*m.kids[1]);
                if (e < 0) throw SyntaxError(m.pos, "root() needs a polynomial");
                return pow(ev(*m.kids[0]), static_cast<int>(e));
            }
            default: throw SyntaxError(m.pos, "unsupported expression in root()");
        }
    };
    RationalFunction pf = ev(pn);
    if (!pf.is_polynomial()) throw SyntaxError(pn.pos, "root() needs a polynomial");
    Poly pp = pf.num() * Poly::constant(1, Rational(1 / pf.den().constant_term()));
    if (pp.is_zero() || pp.is_constant()) throw SyntaxError(pn.pos, "root() needs a nonconstant polynomial");
    UPoly<Rational> p = squarefree_part(to_upoly(pp, 0));
    Rational lo = eval_constant(*n.kids[1]), hi = eval_constant(*n.kids[2]);
    if (!(lo < hi)) throw SyntaxError(n.kids[1]->pos, "root() interval must satisfy lo < hi");
    if (sign_at(p, lo) == 0 || sign_at(p, hi) == 0) throw SyntaxError(n.pos, "root() interval endpoint is a root");
    auto seq = sturm_sequence(p);
    int count = sturm_variations(seq, lo) - sturm_variations(seq, hi);
    if (count != 1) throw SyntaxError(n.pos, "root() interval must contain exactly one root");
    for (const auto& r : isolate_real_roots(p)) {
        if (r.exact && lo < *r.exact && *r.exact < hi) return AlgNum(*r.exact);
    }
    std::vector<AlgNum> c;
    for (const auto& k : p.coeffs()) c.emplace_back(k);
    context = extend_tower(context, UPoly<AlgNum>(std::move(c)), lo, hi);
    return AlgNum::generator(context);
}

AlgNum eval_alg_constant(const Node& n, TowerPtr& context) {
    switch (n.kind) {
        case Node::Num: return AlgNum(n.value);
        case Node::Root: return eval_root(n, context);
        case Node::Var: throw SyntaxError(n.pos, "expected a constant, found '" + n.name + "'");
        case Node::Add: return eval_alg_constant(*n.kids[0], context) + eval_alg_constant(*n.kids[1], context);
        case Node::Sub: return eval_alg_constant(*n.kids[0], context) - eval_alg_constant(*n.kids[1], context);
        case Node::Mul: return eval_alg_constant(*n.kids[0], context) * eval_alg_constant(*n.kids[1], context);
        case Node::Neg: return -eval_alg_constant(*n.kids[0], context);
        case Node::Div: {
            AlgNum a = eval_alg_constant(*n.kids[0], context);
            AlgNum d = eval_alg_constant(*n.kids[1], context);
            if (d.is_zero()) throw SyntaxError(n.pos, "division by zero");
            return a / d;
        }
        case Node::Pow: {
            AlgNum b = eval_alg_constant(*n.kids[0], context);
            long e = integer_exponent(*n.kids[1]);
            if (e < 0 && b.is_zero()) throw SyntaxError(n.pos, "division by zero");
            AlgNum r(1L);
            for (long i = 0; i < std::abs(e); ++i) r = r * b;
            return e < 0 ? r.inverse() : r;
        }
    }
    return AlgNum(0L);
}

bool mentions_t(const Node& n) {
    if (n.kind == Node::Var) return true;
    if (n.kind == Node::Root) return false;
    for (const auto& k : n.kids)
        if (mentions_t(*k)) return true;
    return false;
}

PuiseuxPoly eval_puiseux(const Node& n, TowerPtr& context) {
    if (!mentions_t(n)) return PuiseuxPoly::constant(eval_alg_constant(n, context));
    switch (n.kind) {
        case Node::Var:
            if (n.name != "t") throw SyntaxError(n.pos, "arcs are written in the parameter t");
            return PuiseuxPoly::monomial(AlgNum(1L), Rational(1));
        case Node::Add: return eval_puiseux(*n.kids[0], context) + eval_puiseux(*n.kids[1], context);
        case Node::Sub:
            return eval_puiseux(*n.kids[0], context) +
                   PuiseuxPoly::constant(AlgNum(-1L)) * eval_puiseux(*n.kids[1], context);
        case Node::Mul: return eval_puiseux(*n.kids[0], context) * eval_puiseux(*n.kids[1], context);
        case Node::Neg: return PuiseuxPoly::constant(AlgNum(-1L)) * eval_puiseux(*n.kids[0], context);
        case Node::Div: {
            PuiseuxPoly d = eval_puiseux(*n.kids[1], context);
            if (d.terms().size() != 1) throw SyntaxError(n.kids[1]->pos, "arcs may only be divided by monomials");
            const auto& m = d.terms().front();
            PuiseuxPoly inv(d.ramification(), {{-m.numerator, m.coefficient.inverse()}});
            return eval_puiseux(*n.kids[0], context) * inv;
        }
        case Node::Pow: {
            PuiseuxPoly b = eval_puiseux(*n.kids[0], context);
            Rational e = eval_constant(*n.kids[1]);
            if (e.get_den() == 1 && sgn(e) >= 0) {
                PuiseuxPoly r = PuiseuxPoly::constant(AlgNum(1L));
                for (long i = 0; i < e.get_num().get_si(); ++i) r = r * b;
                return r;
            }
            if (b.terms().size() != 1 || !b.terms().front().coefficient.is_rational() ||
                b.terms().front().coefficient.rational() != 1)
                throw SyntaxError(n.pos, "rational exponents apply only to t");
            Rational exp = b.exponent(b.terms().front()) * e;
            return PuiseuxPoly::monomial(AlgNum(1L), exp);
        }
        default: break;
    }
    throw SyntaxError(n.pos, "unsupported arc expression");
}

}  // namespace

std::vector<std::string> default_variable_names(std::size_t arity) {
    if (arity <= 3) return std::vector<std::string>{"x", "y", "z"};
    std::vector<std::string> out;
    for (std::size_t i = 0; i < arity; ++i) out.push_back("x" + std::to_string(i + 1));
    return out;
}

RationalFunction parse_function(const std::string& text, std::size_t arity) {
    Parser p(text);
    NodePtr root = p.expression();
    p.finish();
    VarStyle style;
    collect_variables(*root, style);
    std::size_t n = style.needed;
    if (!style.indexed) n = std::max<std::size_t>(n, 2);
    if (arity != 0) {
        if (arity < style.needed) throw SyntaxError(1, "expression uses more variables than its arity");
        n = arity;
    }
    VarStyle again;
    return eval_function(*root, n, again);
}

Poly parse_polynomial(const std::string& text, std::size_t arity) {
    RationalFunction f = parse_function(text, arity);
    if (!f.is_polynomial()) throw SyntaxError(1, "expected a polynomial");
    return f.num() * Poly::constant(f.arity(), Rational(1 / f.den().constant_term()));
}

Point parse_point(const std::string& text, TowerPtr& context) {
    Parser p(text);
    auto items = p.tuple();
    p.finish();
    Point out;
    for (const auto& item : items) out.push_back(eval_alg_constant(*item, context));
    return out;
}

Point parse_point(const std::string& text) {
    TowerPtr context;
    return parse_point(text, context);
}

Arc parse_arc(const std::string& text, TowerPtr& context) {
    Parser p(text);
    auto items = p.tuple();
    p.finish();
    std::vector<PuiseuxPoly> entries;
    for (const auto& item : items) entries.push_back(eval_puiseux(*item, context));
    return make_arc(std::move(entries));
}

Arc parse_arc(const std::string& text) {
    TowerPtr context;
    return parse_arc(text, context);
}

std::string format_rational(const Rational& r) { return r.get_str(10); }

namespace {

std::string monomial_text(const Exponents& e, const std::vector<std::string>& names) {
    std::string out;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += names.at(i);
        if (e[i] > 1) out += "^" + std::to_string(e[i]);
    }
    return out;
}

template <class K, class CoeffText>
std::string format_terms(const MPoly<K>& p, const std::vector<std::string>& names, CoeffText coeff_text) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [e, c] = *it;
        auto [negative, magnitude] = coeff_text(c);
        std::string mono = monomial_text(e, names);
        std::string term;
        if (mono.empty())
            term = magnitude;
        else if (magnitude == "1")
            term = mono;
        else
            term = magnitude + "*" + mono;
        if (first)
            out = negative ? "-" + term : term;
        else
            out += negative ? " - " + term : " + " + term;
        first = false;
    }
    return out;
}

bool is_simple_power(const Poly& p) {
    if (p.size() != 1) return false;
    const auto& [e, c] = *p.terms().begin();
    if (c != 1) return false;
    int vars = 0;
    for (unsigned k : e) vars += k > 0;
    return vars <= 1;
}

}  // namespace

std::string format_poly(const Poly& p, const std::vector<std::string>& names) {
    return format_terms(p, names, [](const Rational& c) {
        return std::pair<bool, std::string>{sgn(c) < 0, format_rational(abs(c))};
    });
}

std::string format_poly(const Poly& p) { return format_poly(p, default_variable_names(p.arity())); }

std::string format_function(const RationalFunction& f, const std::vector<std::string>& names) {
    if (f.is_polynomial()) {
        Poly n = f.num() * Poly::constant(f.arity(), Rational(1 / f.den().constant_term()));
        return format_poly(n, names);
    }
    std::string num = format_poly(f.num(), names);
    std::string den = format_poly(f.den(), names);
    if (f.num().size() > 1) num = "(" + num + ")";
    if (!is_simple_power(f.den())) den = "(" + den + ")";
    return num + "/" + den;
}

std::string format_function(const RationalFunction& f) {
    return format_function(f, default_variable_names(f.arity()));
}

std::string format_upoly(const UPoly<Rational>& p, const std::string& var) {
    return format_poly(to_mpoly(p, 1, 0), {var});
}

std::string format_real_algebraic(const RealAlgebraic& r) {
    if (r.exact) return format_rational(*r.exact);
    return "root(" + format_upoly(r.poly, "x") + ", " + format_rational(r.lo) + ", " + format_rational(r.hi) + ")";
}

std::string format_alg(const AlgNum& a) {
    if (a.is_rational()) return format_rational(a.rational());
    return format_real_algebraic(to_real_algebraic(a));
}

std::string format_alg_poly(const AlgPoly& p, const std::vector<std::string>& names) {
    return format_terms(p, names, [](const AlgNum& c) {
        if (c.is_rational()) return std::pair<bool, std::string>{sgn(c.rational()) < 0, format_rational(abs(c.rational()))};
        return std::pair<bool, std::string>{false, format_alg(c)};
    });
}

std::string format_point(const Point& p) {
    std::string out = "(";
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) out += ", ";
        out += format_alg(p[i]);
    }
    return out + ")";
}

std::string format_arc(const Arc& a) {
    std::string out = "(";
    for (std::size_t i = 0; i < a.dimension(); ++i) {
        if (i) out += ", ";
        const PuiseuxPoly& e = a.entries()[i];
        if (e.is_zero()) {
            out += "0";
            continue;
        }
        bool first = true;
        for (const auto& t : e.terms()) {
            Rational ex = e.exponent(t);
            std::string mono;
            if (sgn(ex) != 0) {
                mono = "t";
                if (ex != 1) mono += ex.get_den() == 1 ? "^" + format_rational(ex) : "^(" + format_rational(ex) + ")";
            }
            bool negative = false;
            std::string mag;
            if (t.coefficient.is_rational()) {
                negative = sgn(t.coefficient.rational()) < 0;
                mag = format_rational(abs(t.coefficient.rational()));
            } else {
                mag = format_alg(t.coefficient);
            }
            std::string term = mono.empty() ? mag : (mag == "1" ? mono : mag + "*" + mono);
            if (first)
                out += negative ? "-" + term : term;
            else
                out += negative ? " - " + term : " + " + term;
            first = false;
        }
    }
    return out + ")";
}

}  // namespace lbr
