#pragma once

#include <gmpxx.h>

#include <cctype>
#include <string>
#include <string_view>

#include "acv/error.hpp"

namespace acv {

// mpq_class keeps values canonical (reduced, positive denominator) after every
// arithmetic operation; construction from raw parts needs an explicit canonicalize().
using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const Integer& num, const Integer& den)
{
    if (den == 0) {
        throw Error(ErrorCode::ParseError, "zero denominator");
    }
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

// "p/q", or "p" when q = 1.
inline std::string to_string(const Rational& r)
{
    if (is_integer(r)) {
        return r.get_num().get_str();
    }
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline Rational parse_rational(std::string_view text)
{
    auto valid_integer = [](std::string_view s, bool allow_sign) {
        if (s.empty()) return false;
        std::size_t start = 0;
        if (allow_sign && (s[0] == '-' || s[0] == '+')) start = 1;
        if (start == s.size()) return false;
        for (std::size_t k = start; k < s.size(); ++k) {
            if (!std::isdigit(static_cast<unsigned char>(s[k]))) return false;
        }
        return true;
    };

    const auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!valid_integer(num, true) || !valid_integer(den, false)) {
        throw Error(ErrorCode::ParseError, "malformed rational '" + std::string(text) + "'");
    }
    std::string num_str(num);
    if (num_str[0] == '+') num_str.erase(0, 1);
    return make_rational(Integer(num_str), Integer(std::string(den)));
}

} // namespace acv
