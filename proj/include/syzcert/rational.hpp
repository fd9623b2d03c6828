#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace syzcert {

// Every quantity in the system is an exact integer or an exact rational in
// canonical form (reduced, positive denominator, zero stored as 0/1).
// cpp_int / cpp_rational maintain these invariants for us.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// num/den in canonical form. Throws std::domain_error if den == 0.
Rational make_rational(const Int& num, const Int& den);

Int factorial(unsigned n);

// C(top, k) for arbitrary integer top and k >= 0 (upper negation included),
// via the falling-factorial product. Exact.
Int binomial_int(const Int& top, unsigned k);

int sign(const Rational& q);

bool is_integer(const Rational& q);

// Text form "p/q", with "/q" omitted when the denominator is 1.
std::string rational_to_string(const Rational& q);

// Strict parse of the text form: optional '-', digits, optional "/digits"
// with a positive denominator. Returns nullopt on anything else.
std::optional<Rational> parse_rational(std::string_view text);

}  // namespace syzcert
