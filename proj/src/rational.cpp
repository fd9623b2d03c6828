#include "syzcert/rational.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace syzcert {

Rational make_rational(const Int& num, const Int& den) {
    if (den == 0) {
        throw std::domain_error("make_rational: zero denominator");
    }
    // cpp_rational division reduces and keeps the denominator positive.
    return Rational(num) / Rational(den);
}

Int factorial(unsigned n) {
    Int r = 1;
    for (unsigned i = 2; i <= n; ++i) {
        r *= i;
    }
    return r;
}

Int binomial_int(const Int& top, unsigned k) {
    Int num = 1;
    for (unsigned i = 0; i < k; ++i) {
        num *= top - i;
    }
    return num / factorial(k);
}

int sign(const Rational& q) {
    if (q > 0) return 1;
    if (q < 0) return -1;
    return 0;
}

bool is_integer(const Rational& q) {
    return denominator(q) == 1;
}

std::string rational_to_string(const Rational& q) {
    std::ostringstream os;
    os << q;
    return os.str();
}

std::optional<Rational> parse_rational(std::string_view text) {
    if (text.empty()) return std::nullopt;
    std::size_t pos = 0;
    if (text[pos] == '-') ++pos;
    std::size_t num_begin = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == num_begin) return std::nullopt;
    Int num(std::string(text.substr(0, pos)));
    if (pos == text.size()) return Rational(num);
    if (text[pos] != '/') return std::nullopt;
    ++pos;
    std::size_t den_begin = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos != text.size() || pos == den_begin) return std::nullopt;
    Int den(std::string(text.substr(den_begin)));
    if (den == 0) return std::nullopt;
    return Rational(num) / Rational(den);
}

}  // namespace syzcert
