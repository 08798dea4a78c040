#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace bracekit {

/// Node of a parsed closed-form law: constants, the variables a1..an / b1..bn,
/// negation, sums, differences, products and exp application.
class Expression {
public:
    enum class Kind { constant, variable, negate, add, subtract, multiply, exponential };

    using Ptr = std::shared_ptr<const Expression>;

    static Ptr constant(double v);
    static Ptr variable(int side, std::size_t index);  // side 0 = a, 1 = b
    static Ptr unary(Kind k, Ptr operand);
    static Ptr binary(Kind k, Ptr lhs, Ptr rhs);

    Kind kind() const { return kind_; }

    double eval(const std::vector<double>& a, const std::vector<double>& b) const;

private:
    Expression() = default;
    Kind kind_ = Kind::constant;
    double value_ = 0.0;
    int side_ = 0;
    std::size_t index_ = 0;
    Ptr lhs_, rhs_;
};

using ExprPtr = Expression::Ptr;

/// Recursive-descent parser for
///   expr   := term (("+" | "-") term)*
///   term   := factor ("*" factor)*
///   factor := number | ident | "(" expr ")" | "exp" "(" expr ")" | "-" factor
///   ident  := ("a"|"b") digits | let-bound name
/// Variable indices are 1-based in the text and must not exceed dim. Errors:
/// Error("SyntaxError", "line L, col C: expected ...") and
/// Error("UnknownVariable", ...).
ExprPtr parse_expression(const std::string& text, std::size_t dim,
                         const std::map<std::string, ExprPtr>& lets, std::size_t line_no = 1);

}  // namespace bracekit
