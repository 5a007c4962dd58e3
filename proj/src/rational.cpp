#include "chromascope/rational.hpp"

#include <algorithm>
#include <stdexcept>

namespace chromascope {

namespace {

BigInt parse_integer(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("empty integer");
    std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
    if (start == text.size()) throw std::invalid_argument("malformed integer");
    for (std::size_t i = start; i < text.size(); ++i)
        if (text[i] < '0' || text[i] > '9') throw std::invalid_argument("malformed integer \"" + std::string(text) + "\"");
    // cpp_int reads a leading 0 as an octal prefix
    const auto first = std::min(text.find_first_not_of('0', start), text.size() - 1);
    const BigInt magnitude(std::string(text.substr(std::max(first, start))));
    return text[0] == '-' ? BigInt(-magnitude) : magnitude;
}

}  // namespace

Rational parse_fraction(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text));
    BigInt num = parse_integer(text.substr(0, slash));
    BigInt den = parse_integer(text.substr(slash + 1));
    if (den <= 0) throw std::invalid_argument("fraction denominator must be positive");
    return Rational(num, den);
}

Rational parse_decimal(std::string_view text) {
    const auto dot = text.find('.');
    if (dot == std::string_view::npos) return Rational(parse_integer(text));
    std::string digits(text.substr(0, dot));
    const std::string_view frac = text.substr(dot + 1);
    if (frac.empty() || frac[0] == '+' || frac[0] == '-') throw std::invalid_argument("malformed decimal");
    digits += frac;
    if (digits.empty() || digits == "-" || digits == "+") throw std::invalid_argument("malformed decimal");
    BigInt scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    return Rational(parse_integer(digits), scale);
}

std::string to_string(const Rational& r) {
    const BigInt num = boost::multiprecision::numerator(r);
    const BigInt den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

std::string to_decimal(const Rational& r, int digits) {
    const BigInt num = boost::multiprecision::numerator(r);
    const BigInt den = boost::multiprecision::denominator(r);
    BigInt scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    const bool negative = num < 0;
    BigInt mag = negative ? BigInt(-num) : num;
    BigInt scaled = (mag * scale * 2 + den) / (den * 2);
    std::string text = scaled.str();
    if (digits > 0) {
        if (text.size() <= static_cast<std::size_t>(digits))
            text.insert(0, static_cast<std::size_t>(digits) + 1 - text.size(), '0');
        text.insert(text.size() - static_cast<std::size_t>(digits), ".");
    }
    return (negative && scaled != 0 ? "-" : "") + text;
}

}  // namespace chromascope
