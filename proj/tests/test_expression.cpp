#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bracekit/error.hpp"
#include "bracekit/expression.hpp"

#include <cmath>

using namespace bracekit;

namespace {

double ev(const std::string& text, std::size_t dim, std::vector<double> a, std::vector<double> b,
          const std::map<std::string, ExprPtr>& lets = {}) {
    return parse_expression(text, dim, lets)->eval(a, b);
}

}  // namespace

TEST_CASE("basic expressions") {
    CHECK(ev("a1 + b1", 1, {2}, {3}) == 5);
    CHECK(ev("a1 - b1 - b1", 1, {10}, {3}) == 4);  // left associative
    CHECK(ev("a1 + a2*b1", 2, {1, 2}, {10, 0}) == 21);
    CHECK(ev("-a1*b1", 1, {3}, {4}) == -12);
    CHECK(ev("(a1 + b1)*(a1 - b1)", 1, {5}, {2}) == 21);
    CHECK(ev("2", 1, {0}, {0}) == 2);
    CHECK(ev("1.5*a1", 1, {4}, {0}) == 6);
    CHECK(ev("exp(a1)", 1, {1}, {0}) == doctest::Approx(std::exp(1.0)).epsilon(1e-15));
    CHECK(ev("exp(-a1)*exp(a1)", 1, {0.7}, {0}) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("the worked 3d circ law parses and evaluates") {
    std::map<std::string, ExprPtr> lets;
    lets["s"] = parse_expression("a1 - a2*a3", 3, {});
    ExprPtr first =
        parse_expression("a1 + b1 + a3*exp(s)*b2 + a2*exp(-s)*b3", 3, lets);
    std::vector<double> a{0.3, -0.5, 0.9}, b{0.1, 0.7, -0.2};
    const double s = a[0] - a[1] * a[2];
    const double expected = a[0] + b[0] + a[2] * std::exp(s) * b[1] + a[1] * std::exp(-s) * b[2];
    CHECK(first->eval(a, b) == doctest::Approx(expected).epsilon(1e-15));
}

TEST_CASE("syntax errors") {
    CHECK_THROWS_WITH_AS(parse_expression("exp(", 1, {}), doctest::Contains("SyntaxError"), Error);
    CHECK_THROWS_WITH_AS(parse_expression("a1 +", 1, {}), doctest::Contains("SyntaxError"), Error);
    CHECK_THROWS_WITH_AS(parse_expression("(a1", 1, {}), doctest::Contains("SyntaxError"), Error);
    CHECK_THROWS_WITH_AS(parse_expression("a1 b1", 1, {}), doctest::Contains("SyntaxError"), Error);
    CHECK_THROWS_WITH_AS(parse_expression("exp a1", 1, {}), doctest::Contains("SyntaxError"),
                         Error);
    CHECK_THROWS_WITH_AS(parse_expression("", 1, {}), doctest::Contains("SyntaxError"), Error);
}

TEST_CASE("unknown variables") {
    CHECK_THROWS_WITH_AS(parse_expression("a4", 3, {}), doctest::Contains("UnknownVariable"),
                         Error);
    CHECK_THROWS_WITH_AS(parse_expression("b0", 3, {}), doctest::Contains("UnknownVariable"),
                         Error);
    CHECK_THROWS_WITH_AS(parse_expression("spam", 3, {}), doctest::Contains("UnknownVariable"),
                         Error);
    CHECK_NOTHROW(parse_expression("a3", 3, {}));
}
