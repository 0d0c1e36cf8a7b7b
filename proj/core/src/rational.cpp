#include "ipset/rational.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>

namespace ipset {

namespace {

bool valid_integer_token(std::string_view t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    }
    return true;
}

} // namespace

Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    std::string_view num_part = text.substr(0, slash);
    if (!valid_integer_token(num_part)) {
        throw ParseError("not a rational: '" + std::string(text) + "'");
    }
    if (num_part[0] == '+') num_part.remove_prefix(1); // mpz rejects a leading plus
    Integer num(std::string(num_part), 10);
    if (slash == std::string_view::npos) return Rational(num);

    std::string_view den_part = text.substr(slash + 1);
    if (!valid_integer_token(den_part) || den_part[0] == '-' || den_part[0] == '+') {
        throw ParseError("not a rational: '" + std::string(text) + "'");
    }
    Integer den(std::string(den_part), 10);
    if (den == 0) throw ParseError("zero denominator: '" + std::string(text) + "'");
    return make_rational(num, den);
}

std::string to_string(const Rational& q) {
    std::string s = q.get_num().get_str();
    if (q.get_den() != 1) {
        s += '/';
        s += q.get_den().get_str();
    }
    return s;
}

std::string format_decimal(double value, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", digits, value);
    return buf;
}

} // namespace ipset
