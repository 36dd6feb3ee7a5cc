#pragma once

// Expression trees over the split-complex numbers in one variable z.
//
// Grammar (precedence low to high: +- < */ < unary- < ^):
//
//   expr   := term (('+' | '-') term)*
//   term   := factor (('*' | '/') factor)*
//   factor := '-' factor | power
//   power  := atom ('^' ['-'] digits)?
//   atom   := number ['j'] | 'j' | 'z' | func '(' expr ')' | '(' expr ')'
//   func   := 'pexp' | 'pcos' | 'psin' | 'ptan'
//
// Sums, differences, products and negations of literals fold at parse time,
// so "1 - 0.5j" is a single literal node.  print() emits a canonical form
// with minimal parentheses; parse(print(e)) reproduces e node for node.

#include <memory>
#include <string>

#include "lwz/paracomplex.hpp"

namespace lwz::expr {

enum class NodeKind { Literal, Variable, Add, Sub, Mul, Div, Neg, Pow, Call };

enum class Func { Pexp, Pcos, Psin, Ptan };

struct Node;
using NodePtr = std::shared_ptr<const Node>;

struct Node {
    NodeKind kind{};
    SplitComplex value{};   // Literal
    NodePtr lhs, rhs;       // binaries; lhs doubles as the Neg/Call child
    int exponent = 0;       // Pow
    Func func{};            // Call
};

NodePtr literal(SplitComplex v);
NodePtr variable();
NodePtr add(NodePtr a, NodePtr b);
NodePtr sub(NodePtr a, NodePtr b);
NodePtr mul(NodePtr a, NodePtr b);
NodePtr div(NodePtr a, NodePtr b);
NodePtr neg(NodePtr a);
NodePtr pow(NodePtr base, int exponent);
NodePtr call(Func f, NodePtr arg);

/// Parses source text. Throws SyntaxError carrying the byte offset of the
/// first token that cannot continue a valid expression.
NodePtr parse(const std::string& src);

/// Canonical text form with minimal parentheses.
std::string print(const NodePtr& e);

bool structurally_equal(const NodePtr& a, const NodePtr& b);

/// Evaluates e and its first two z-derivatives at the point carried by zjet.
Jet2 eval_jet(const NodePtr& e, const Jet2& zjet);

inline Jet2 eval_jet(const NodePtr& e, SplitComplex z) {
    return eval_jet(e, Jet2::variable(z));
}

} // namespace lwz::expr
