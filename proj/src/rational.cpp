#include "bracekit/rational.hpp"

#include "bracekit/error.hpp"

namespace bracekit {

Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            return Rational(Integer(text));
        }
        Integer num(text.substr(0, slash));
        Integer den(text.substr(slash + 1));
        if (den == 0) throw Error("BadRational", "zero denominator in '" + text + "'");
        return Rational(num, den);
    } catch (const Error&) {
        throw;
    } catch (const std::exception&) {
        throw Error("BadRational", "cannot parse '" + text + "'");
    }
}

std::string to_string(const Rational& value) {
    std::string s = numerator(value).str();
    if (denominator(value) != 1) {
        s += "/" + denominator(value).str();
    }
    return s;
}

}  // namespace bracekit
