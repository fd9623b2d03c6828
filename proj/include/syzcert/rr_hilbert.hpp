#pragma once

#include "syzcert/polynomial.hpp"
#include "syzcert/rational.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace syzcert {

/// Todd-class data for a polarized variety of dimension n (2 <= n <= 5):
/// entries[i] = td_{n-i}(X) . H^i, so entries[n] = H^n and entries[0] = chi(O_X).
struct ToddVector {
    int n = 2;
    std::vector<Rational> entries;
};

// Validates dimension range, entry count, and H^n > 0; throws on violation.
ToddVector make_todd_vector(int n, std::vector<Rational> entries);

/// Intersection numbers entering the Todd identities, for 2 <= n <= 4.
/// c1c2H (= c_1 c_2 . H^{n-3}) is only consulted when n >= 3.
struct ChernData {
    int n = 2;
    Rational Hn;
    Rational c1H;
    Rational c1sqH;
    Rational c2H;
    Rational c1c2H;
    Rational chiO;
};

// Hilbert polynomial of a polarized abelian variety: (H^n / n!) t^n.
// Throws on n < 1 or Hn <= 0.
Polynomial abelian_poly(int n, const Rational& Hn);

// Hilbert polynomial from Todd data: coefficient of t^i is entries[i] / i!.
Polynomial todd_poly(const ToddVector& tv);

// Assembles a ToddVector from intersection numbers via
//   td_1 = c_1/2, td_2 = (c_1^2 + c_2)/12, td_3 = c_1 c_2 / 24, td_n = chi(O_X).
// The constant entry always comes from chiO. Dimension 5 is not expressible
// from these identities (td_4 . H is missing); supply a ToddVector directly.
// Throws for n outside 2..4 or Hn <= 0.
ToddVector chern_to_todd(const ChernData& cd);

// Consistency diagnostics for chern_to_todd inputs where two routes to the
// same Todd entry exist (e.g. n = 2: chi(O) vs (c_1^2 + c_2)/12). Warnings,
// never errors.
std::vector<std::string> chern_consistency_warnings(const ChernData& cd);

// Flags non-integer values of p at the integers 0..deg(p); a Hilbert
// polynomial takes integer values everywhere iff it does there.
std::vector<std::string> integrality_warnings(const Polynomial& p);

struct ParsedPolynomial {
    Polynomial poly;
    // Input carried trailing zero coefficients; normalized away.
    bool trimmed_trailing_zeros = false;
};

// Parses the one-line polynomial text form (a_0..a_n, space-separated
// rationals). Throws std::invalid_argument on empty or malformed input.
ParsedPolynomial parse_poly_text(std::string_view text);
ParsedPolynomial parse_poly_file(const std::string& path);

}  // namespace syzcert
