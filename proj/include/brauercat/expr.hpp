#pragma once

#include <memory>
#include <string>

#include "brauercat/enhanced.hpp"

namespace brauercat {

// A composition/tensor expression over the generators. "a . b" (or the
// composition circle) applies b first; tensor binds tighter; "^{k}" is a
// tensor power and a trailing apostrophe takes the dual.
struct Expr {
    enum class Kind { Generator, Vertex, Sigma, Perm, Compose, Tensor, Dual, Power };
    Kind kind = Kind::Generator;
    Gen gen = Gen::I;
    int number = 0;            // Sigma rank or tensor power
    std::vector<int> perm;
    std::unique_ptr<Expr> a, b;

    // arities, filled by arity_check
    int source = 0;
    int target = 0;
};

using ExprPtr = std::unique_ptr<Expr>;

// Computes arities bottom-up; throws ArityError naming the two offending
// sub-expressions on a mismatch.
void arity_check(Expr& e, int m);

std::string expr_to_string(const Expr& e);

// Parses the expression grammar; arity-checks against the given m.
ExprPtr parse_expression(const std::string& text, int m);

enum class EvalStrategy {
    LeftInnermost,    // evaluate left subtrees first, fold chains from the left
    RightOutermost,   // evaluate right subtrees first, fold chains from the right
};

// Evaluates an expression to a canonical morphism; the two strategies must
// agree (rewrite confluence).
EnhancedMorphism evaluate(const Expr& e, int m,
                          EvalStrategy strategy = EvalStrategy::LeftInnermost);

}  // namespace brauercat
