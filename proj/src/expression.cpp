#include "bracekit/expression.hpp"

#include "bracekit/error.hpp"

#include <cctype>
#include <cmath>
#include <sstream>

namespace bracekit {

Expression::Ptr Expression::constant(double v) {
    auto e = std::shared_ptr<Expression>(new Expression());
    e->kind_ = Kind::constant;
    e->value_ = v;
    return e;
}

Expression::Ptr Expression::variable(int side, std::size_t index) {
    auto e = std::shared_ptr<Expression>(new Expression());
    e->kind_ = Kind::variable;
    e->side_ = side;
    e->index_ = index;
    return e;
}

Expression::Ptr Expression::unary(Kind k, Ptr operand) {
    auto e = std::shared_ptr<Expression>(new Expression());
    e->kind_ = k;
    e->lhs_ = std::move(operand);
    return e;
}

Expression::Ptr Expression::binary(Kind k, Ptr lhs, Ptr rhs) {
    auto e = std::shared_ptr<Expression>(new Expression());
    e->kind_ = k;
    e->lhs_ = std::move(lhs);
    e->rhs_ = std::move(rhs);
    return e;
}

double Expression::eval(const std::vector<double>& a, const std::vector<double>& b) const {
    switch (kind_) {
        case Kind::constant: return value_;
        case Kind::variable: return side_ == 0 ? a[index_] : b[index_];
        case Kind::negate: return -lhs_->eval(a, b);
        case Kind::add: return lhs_->eval(a, b) + rhs_->eval(a, b);
        case Kind::subtract: return lhs_->eval(a, b) - rhs_->eval(a, b);
        case Kind::multiply: return lhs_->eval(a, b) * rhs_->eval(a, b);
        case Kind::exponential: return std::exp(lhs_->eval(a, b));
    }
    return 0.0;
}

namespace {

struct Parser {
    const std::string& text;
    std::size_t pos = 0;
    std::size_t dim;
    const std::map<std::string, ExprPtr>& lets;
    std::size_t line_no;

    [[noreturn]] void fail(const std::string& expected, std::size_t at) const {
        std::ostringstream os;
        os << "line " << line_no << ", col " << at + 1 << ": expected " << expected;
        throw Error("SyntaxError", os.str());
    }

    void skip_space() {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    }

    bool eat(char c) {
        skip_space();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    ExprPtr parse() {
        ExprPtr e = expr();
        skip_space();
        if (pos != text.size()) fail("end of expression", pos);
        return e;
    }

    ExprPtr expr() {
        ExprPtr e = term();
        while (true) {
            if (eat('+')) {
                e = Expression::binary(Expression::Kind::add, e, term());
            } else if (eat('-')) {
                e = Expression::binary(Expression::Kind::subtract, e, term());
            } else {
                return e;
            }
        }
    }

    ExprPtr term() {
        ExprPtr e = factor();
        while (eat('*')) e = Expression::binary(Expression::Kind::multiply, e, factor());
        return e;
    }

    ExprPtr factor() {
        skip_space();
        if (pos == text.size()) fail("a factor", pos);
        const char c = text[pos];
        if (c == '-') {
            ++pos;
            return Expression::unary(Expression::Kind::negate, factor());
        }
        if (c == '(') {
            ++pos;
            ExprPtr e = expr();
            if (!eat(')')) fail("')'", pos);
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return ident();
        fail("a factor", pos);
    }

    ExprPtr number() {
        const std::size_t start = pos;
        while (pos < text.size() &&
               (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '.'))
            ++pos;
        try {
            std::size_t used = 0;
            const std::string tok = text.substr(start, pos - start);
            const double v = std::stod(tok, &used);
            if (used != tok.size()) fail("a decimal literal", start);
            return Expression::constant(v);
        } catch (const Error&) {
            throw;
        } catch (const std::exception&) {
            fail("a decimal literal", start);
        }
    }

    ExprPtr ident() {
        const std::size_t start = pos;
        while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) ||
                                     text[pos] == '_'))
            ++pos;
        const std::string name = text.substr(start, pos - start);
        if (name == "exp") {
            if (!eat('(')) fail("'(' after exp", pos);
            ExprPtr arg = expr();
            if (!eat(')')) fail("')'", pos);
            return Expression::unary(Expression::Kind::exponential, arg);
        }
        if ((name[0] == 'a' || name[0] == 'b') && name.size() > 1 &&
            std::all_of(name.begin() + 1, name.end(),
                        [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); })) {
            const std::size_t index = std::stoul(name.substr(1));
            if (index < 1 || index > dim)
                throw Error("UnknownVariable", "line " + std::to_string(line_no) + ": '" + name +
                                                   "' exceeds dimension " + std::to_string(dim));
            return Expression::variable(name[0] == 'a' ? 0 : 1, index - 1);
        }
        auto it = lets.find(name);
        if (it == lets.end())
            throw Error("UnknownVariable",
                        "line " + std::to_string(line_no) + ": '" + name + "' is not defined");
        return it->second;
    }
};

}  // namespace

ExprPtr parse_expression(const std::string& text, std::size_t dim,
                         const std::map<std::string, ExprPtr>& lets, std::size_t line_no) {
    Parser p{text, 0, dim, lets, line_no};
    return p.parse();
}

}  // namespace bracekit
