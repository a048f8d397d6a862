#pragma once

// Expression parser for the CLI:
//   expr   := term (('+'|'-') term)*
//   term   := factor+                      (juxtaposition is the product)
//   factor := scalar | gen | '(' expr ')' | factor '*' | factor '^' int
//            | factor '/' factor           (divisor must be scalar)
//   gen    := 'a' | 'a*' | 'g' | 'g*'      (alpha/gamma aliases accepted)
//   scalar := integer | 'mu' | 'i'
// and '|' separates tensor slots at top level.

#include "qsu2/tensor.hpp"

#include <memory>

namespace qsu2 {

struct ParseError : Error {
    size_t position;
    ParseError(const std::string& what, size_t pos)
        : Error(what + " at position " + std::to_string(pos)), position(pos) {}
};

struct AstNode {
    enum class Kind { Num, Mu, ImagUnit, Gen, Neg, Star, Pow, Mul, Add, Div, Tensor };
    Kind kind;
    Rat num;                 // Num
    Gen gen = Gen::A;        // Gen
    long expo = 1;           // Pow
    std::vector<std::unique_ptr<AstNode>> kids;
};

using AstPtr = std::unique_ptr<AstNode>;

AstPtr parse(const std::string& input);
std::string print_ast(const AstNode& node);

// evaluation: scalars embed via the unit; a Div by a non-scalar is an error
Tensor eval_ast(const AstNode& node);
AlgebraElement eval_ast_element(const AstNode& node);  // requires one tensor slot

}  // namespace qsu2
