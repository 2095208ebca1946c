#include "qmf/rational.hpp"

#include <cctype>

namespace qmf {

std::string to_string(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) {
        s += "/";
        s += denominator(r).str();
    }
    return s;
}

namespace {

bool valid_integer_token(std::string_view s) {
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Rational rational_from_string(std::string_view s) {
    const auto slash = s.find('/');
    std::string_view num = s.substr(0, slash);
    if (!valid_integer_token(num))
        throw std::invalid_argument("rational_from_string: bad numerator in '" + std::string(s) + "'");
    if (slash == std::string_view::npos) return Rational(Int(std::string(num)));
    std::string_view den = s.substr(slash + 1);
    if (!valid_integer_token(den))
        throw std::invalid_argument("rational_from_string: bad denominator in '" + std::string(s) + "'");
    return make_rational(Int(std::string(num)), Int(std::string(den)));
}

}  // namespace qmf
