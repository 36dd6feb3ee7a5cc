#include "lwz/expr.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>
#include <vector>

namespace lwz::expr {

// ===========================================================================
// Construction with literal folding
// ===========================================================================

namespace {

bool is_literal(const NodePtr& n) { return n->kind == NodeKind::Literal; }

NodePtr make(Node n) { return std::make_shared<const Node>(std::move(n)); }

} // namespace

NodePtr literal(SplitComplex v) {
    return make({.kind = NodeKind::Literal, .value = v});
}

NodePtr variable() { return make({.kind = NodeKind::Variable}); }

NodePtr add(NodePtr a, NodePtr b) {
    if (is_literal(a) && is_literal(b)) return literal(a->value + b->value);
    return make({.kind = NodeKind::Add, .lhs = std::move(a), .rhs = std::move(b)});
}

NodePtr sub(NodePtr a, NodePtr b) {
    if (is_literal(a) && is_literal(b)) return literal(a->value - b->value);
    return make({.kind = NodeKind::Sub, .lhs = std::move(a), .rhs = std::move(b)});
}

NodePtr mul(NodePtr a, NodePtr b) {
    if (is_literal(a) && is_literal(b)) return literal(a->value * b->value);
    return make({.kind = NodeKind::Mul, .lhs = std::move(a), .rhs = std::move(b)});
}

NodePtr div(NodePtr a, NodePtr b) {
    return make({.kind = NodeKind::Div, .lhs = std::move(a), .rhs = std::move(b)});
}

NodePtr neg(NodePtr a) {
    if (is_literal(a)) return literal(-a->value);
    return make({.kind = NodeKind::Neg, .lhs = std::move(a)});
}

NodePtr pow(NodePtr base, int exponent) {
    return make({.kind = NodeKind::Pow, .lhs = std::move(base),
                 .exponent = exponent});
}

NodePtr call(Func f, NodePtr arg) {
    return make({.kind = NodeKind::Call, .lhs = std::move(arg), .func = f});
}

// ===========================================================================
// Lexer
// ===========================================================================

namespace {

enum class Tok { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen,
                 RParen, End };

struct Token {
    Tok kind;
    std::size_t offset;
    double number = 0.0;    // Number
    bool imaginary = false; // Number had a trailing 'j'
    std::string text;       // Ident
};

std::vector<Token> lex(const std::string& src) {
    std::vector<Token> out;
    std::size_t i = 0;
    const std::size_t n = src.size();
    while (i < n) {
        const char c = src[i];
        if (std::isspace(static_cast<unsigned char>(c))) { ++i; continue; }
        const std::size_t at = i;
        switch (c) {
        case '+': out.push_back({Tok::Plus, at}); ++i; continue;
        case '-': out.push_back({Tok::Minus, at}); ++i; continue;
        case '*': out.push_back({Tok::Star, at}); ++i; continue;
        case '/': out.push_back({Tok::Slash, at}); ++i; continue;
        case '^': out.push_back({Tok::Caret, at}); ++i; continue;
        case '(': out.push_back({Tok::LParen, at}); ++i; continue;
        case ')': out.push_back({Tok::RParen, at}); ++i; continue;
        default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            double v = 0.0;
            const char* first = src.data() + i;
            const char* last = src.data() + n;
            auto [ptr, ec] = std::from_chars(first, last, v);
            if (ec != std::errc{})
                throw SyntaxError(at, "a number");
            i = static_cast<std::size_t>(ptr - src.data());
            Token t{Tok::Number, at, v};
            if (i < n && src[i] == 'j') { t.imaginary = true; ++i; }
            out.push_back(std::move(t));
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t k = i;
            while (k < n && (std::isalnum(static_cast<unsigned char>(src[k])) ||
                             src[k] == '_'))
                ++k;
            Token t{Tok::Ident, at};
            t.text = src.substr(i, k - i);
            i = k;
            out.push_back(std::move(t));
            continue;
        }
        throw SyntaxError(at, "an operator, operand, or parenthesis");
    }
    out.push_back({Tok::End, n});
    return out;
}

// ===========================================================================
// Parser
// ===========================================================================

class Parser {
public:
    explicit Parser(const std::string& src) : toks_(lex(src)) {}

    NodePtr run() {
        NodePtr e = parse_expr();
        if (peek().kind != Tok::End)
            throw SyntaxError(peek().offset, "an operator or end of input");
        return e;
    }

private:
    const Token& peek() const { return toks_[pos_]; }
    const Token& advance() { return toks_[pos_++]; }
    bool accept(Tok k) {
        if (peek().kind == k) { ++pos_; return true; }
        return false;
    }

    NodePtr parse_expr() {
        NodePtr e = parse_term();
        for (;;) {
            if (accept(Tok::Plus)) e = add(e, parse_term());
            else if (accept(Tok::Minus)) e = sub(e, parse_term());
            else return e;
        }
    }

    NodePtr parse_term() {
        NodePtr e = parse_factor();
        for (;;) {
            if (accept(Tok::Star)) e = mul(e, parse_factor());
            else if (accept(Tok::Slash)) e = div(e, parse_factor());
            else return e;
        }
    }

    NodePtr parse_factor() {
        if (accept(Tok::Minus)) return neg(parse_factor());
        return parse_power();
    }

    NodePtr parse_power() {
        NodePtr base = parse_atom();
        if (!accept(Tok::Caret)) return base;
        bool negative = accept(Tok::Minus);
        const Token& t = peek();
        if (t.kind != Tok::Number || t.imaginary ||
            t.number != static_cast<double>(static_cast<long long>(t.number)))
            throw SyntaxError(t.offset, "an integer exponent");
        advance();
        const int e = static_cast<int>(t.number);
        return pow(base, negative ? -e : e);
    }

    NodePtr parse_atom() {
        const Token& t = peek();
        switch (t.kind) {
        case Tok::Number:
            advance();
            return literal(t.imaginary ? SplitComplex{0.0, t.number}
                                       : SplitComplex{t.number});
        case Tok::Ident: {
            advance();
            if (t.text == "z") return variable();
            if (t.text == "j") return literal(kJ);
            Func f;
            if (t.text == "pexp") f = Func::Pexp;
            else if (t.text == "pcos") f = Func::Pcos;
            else if (t.text == "psin") f = Func::Psin;
            else if (t.text == "ptan") f = Func::Ptan;
            else throw SyntaxError(t.offset, "'z', 'j', or a known function");
            if (!accept(Tok::LParen))
                throw SyntaxError(peek().offset, "'(' after function name");
            NodePtr arg = parse_expr();
            if (!accept(Tok::RParen))
                throw SyntaxError(peek().offset, "')'");
            return call(f, arg);
        }
        case Tok::LParen: {
            advance();
            NodePtr e = parse_expr();
            if (!accept(Tok::RParen))
                throw SyntaxError(peek().offset, "')'");
            return e;
        }
        default:
            throw SyntaxError(t.offset, "an operand");
        }
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

} // namespace

NodePtr parse(const std::string& src) { return Parser(src).run(); }

// ===========================================================================
// Canonical printer
// ===========================================================================

namespace {

// Binding strength used for parenthesization.  Mixed literals print as a
// sum, negative pure literals as a negation, so their levels match.
int precedence(const Node& n) {
    switch (n.kind) {
    case NodeKind::Add:
    case NodeKind::Sub: return 1;
    case NodeKind::Mul:
    case NodeKind::Div: return 2;
    case NodeKind::Neg: return 3;
    case NodeKind::Pow: return 4;
    case NodeKind::Literal: {
        if (n.value.re != 0.0 && n.value.im != 0.0) return 1; // prints as a sum
        const double coeff = n.value.im != 0.0 ? n.value.im : n.value.re;
        return coeff < 0.0 ? 3 : 5;
    }
    default: return 5;
    }
}

std::string format_double(double v) {
    if (v == 0.0) return "0";
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    (void)ec;
    return std::string(buf, ptr);
}

std::string format_literal(SplitComplex v) {
    if (v.im == 0.0) return format_double(v.re);
    std::string jpart =
        std::abs(v.im) == 1.0 ? "j" : format_double(std::abs(v.im)) + "j";
    if (v.re == 0.0) return (v.im < 0.0 ? "-" : "") + jpart;
    return format_double(v.re) + (v.im < 0.0 ? " - " : " + ") + jpart;
}

void print_node(const Node& n, std::string& out);

void print_child(const Node& child, int min_prec, std::string& out) {
    if (precedence(child) < min_prec) {
        out += '(';
        print_node(child, out);
        out += ')';
    } else {
        print_node(child, out);
    }
}

void print_node(const Node& n, std::string& out) {
    switch (n.kind) {
    case NodeKind::Literal: out += format_literal(n.value); return;
    case NodeKind::Variable: out += 'z'; return;
    // Right operands of equal precedence keep their parentheses so that
    // reparsing the left-associative grammar restores the same tree.
    case NodeKind::Add:
        print_child(*n.lhs, 1, out);
        out += " + ";
        print_child(*n.rhs, 2, out);
        return;
    case NodeKind::Sub:
        print_child(*n.lhs, 1, out);
        out += " - ";
        print_child(*n.rhs, 2, out);
        return;
    case NodeKind::Mul:
        print_child(*n.lhs, 2, out);
        out += '*';
        print_child(*n.rhs, 3, out);
        return;
    case NodeKind::Div:
        print_child(*n.lhs, 2, out);
        out += '/';
        print_child(*n.rhs, 3, out); // a/(b*c) needs the parens
        return;
    case NodeKind::Neg:
        out += '-';
        print_child(*n.lhs, 3, out);
        return;
    case NodeKind::Pow:
        print_child(*n.lhs, 5, out);
        out += '^';
        out += std::to_string(n.exponent);
        return;
    case NodeKind::Call:
        switch (n.func) {
        case Func::Pexp: out += "pexp"; break;
        case Func::Pcos: out += "pcos"; break;
        case Func::Psin: out += "psin"; break;
        case Func::Ptan: out += "ptan"; break;
        }
        out += '(';
        print_node(*n.lhs, out);
        out += ')';
        return;
    }
}

} // namespace

std::string print(const NodePtr& e) {
    std::string out;
    print_node(*e, out);
    return out;
}

bool structurally_equal(const NodePtr& a, const NodePtr& b) {
    if (a->kind != b->kind) return false;
    switch (a->kind) {
    case NodeKind::Literal: return a->value == b->value;
    case NodeKind::Variable: return true;
    case NodeKind::Neg: return structurally_equal(a->lhs, b->lhs);
    case NodeKind::Pow:
        return a->exponent == b->exponent &&
               structurally_equal(a->lhs, b->lhs);
    case NodeKind::Call:
        return a->func == b->func && structurally_equal(a->lhs, b->lhs);
    default:
        return structurally_equal(a->lhs, b->lhs) &&
               structurally_equal(a->rhs, b->rhs);
    }
}

// ===========================================================================
// Evaluation
// ===========================================================================

namespace {

Jet2 pow_jet(const Jet2& base, int e) {
    if (e < 0) return Jet2::constant(SplitComplex{1.0}) / pow_jet(base, -e);
    Jet2 acc = Jet2::constant(SplitComplex{1.0});
    for (int k = 0; k < e; ++k) acc = acc * base;
    return acc;
}

} // namespace

Jet2 eval_jet(const NodePtr& e, const Jet2& zjet) {
    switch (e->kind) {
    case NodeKind::Literal: return Jet2::constant(e->value);
    case NodeKind::Variable: return zjet;
    case NodeKind::Add: return eval_jet(e->lhs, zjet) + eval_jet(e->rhs, zjet);
    case NodeKind::Sub: return eval_jet(e->lhs, zjet) - eval_jet(e->rhs, zjet);
    case NodeKind::Mul: return eval_jet(e->lhs, zjet) * eval_jet(e->rhs, zjet);
    case NodeKind::Div: return eval_jet(e->lhs, zjet) / eval_jet(e->rhs, zjet);
    case NodeKind::Neg: return -eval_jet(e->lhs, zjet);
    case NodeKind::Pow: return pow_jet(eval_jet(e->lhs, zjet), e->exponent);
    case NodeKind::Call: {
        const Jet2 g = eval_jet(e->lhs, zjet);
        Jet2 outer;
        switch (e->func) {
        case Func::Pexp: outer = pexp(g.f); break;
        case Func::Pcos: outer = pcos(g.f); break;
        case Func::Psin: outer = psin(g.f); break;
        case Func::Ptan: outer = ptan(g.f); break;
        }
        return jet_compose(outer.f, outer.df, outer.d2f, g);
    }
    }
    fail(ErrorCode::Validation, "corrupt expression node");
}

} // namespace lwz::expr
