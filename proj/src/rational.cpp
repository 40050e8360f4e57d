#include <polyext/rational.hpp>

#include <polyext/errors.hpp>

#include <cctype>

namespace polyext {

Rational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) {
        throw ValidationError("rational with zero denominator");
    }
    // The two-argument mpq constructor canonicalizes (reduces and moves the
    // sign to the numerator); string assignment would not.
    return Rational(num, den);
}

namespace {

bool is_integer_token(const std::string& s) {
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

} // namespace

Rational parse_rational(const std::string& text) {
    const std::size_t slash = text.find('/');
    if (slash == std::string::npos) {
        if (!is_integer_token(text)) {
            throw ValidationError("malformed rational '" + text + "'");
        }
        return Rational(BigInt(text));
    }
    const std::string num = text.substr(0, slash);
    const std::string den = text.substr(slash + 1);
    if (!is_integer_token(num) || !is_integer_token(den)) {
        throw ValidationError("malformed rational '" + text + "'");
    }
    return make_rational(BigInt(num), BigInt(den));
}

std::string to_string(const Rational& value) {
    return value.str();
}

} // namespace polyext
