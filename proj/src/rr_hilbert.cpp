#include "syzcert/rr_hilbert.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace syzcert {

ToddVector make_todd_vector(int n, std::vector<Rational> entries) {
    if (n < 2 || n > 5) {
        throw std::invalid_argument("ToddVector: dimension must lie in 2..5");
    }
    if (entries.size() != static_cast<std::size_t>(n) + 1) {
        throw std::invalid_argument("ToddVector: expected n + 1 entries");
    }
    if (entries.back() <= 0) {
        throw std::invalid_argument("ToddVector: top self-intersection H^n must be positive");
    }
    return ToddVector{n, std::move(entries)};
}

Polynomial abelian_poly(int n, const Rational& Hn) {
    if (n < 1) throw std::invalid_argument("abelian_poly: n must be >= 1");
    if (Hn <= 0) throw std::invalid_argument("abelian_poly: H^n must be positive");
    return Polynomial::monomial(Hn / Rational(factorial(static_cast<unsigned>(n))), n);
}

Polynomial todd_poly(const ToddVector& tv) {
    std::vector<Rational> coeffs(tv.entries.size());
    for (std::size_t i = 0; i < tv.entries.size(); ++i) {
        coeffs[i] = tv.entries[i] / Rational(factorial(static_cast<unsigned>(i)));
    }
    return Polynomial(std::move(coeffs));
}

ToddVector chern_to_todd(const ChernData& cd) {
    if (cd.n < 2 || cd.n > 4) {
        throw std::invalid_argument(
            "chern_to_todd: dimension must lie in 2..4 (supply Todd entries directly for n = 5)");
    }
    std::vector<Rational> entries(static_cast<std::size_t>(cd.n) + 1, Rational(0));
    entries[static_cast<std::size_t>(cd.n)] = cd.Hn;
    entries[static_cast<std::size_t>(cd.n - 1)] = cd.c1H / 2;
    entries[static_cast<std::size_t>(cd.n - 2)] = (cd.c1sqH + cd.c2H) / 12;
    if (cd.n - 3 >= 1) {
        entries[static_cast<std::size_t>(cd.n - 3)] = cd.c1c2H / 24;
    }
    entries[0] = cd.chiO;  // td_n = chi(O_X) takes precedence at the constant entry
    return make_todd_vector(cd.n, std::move(entries));
}

std::vector<std::string> chern_consistency_warnings(const ChernData& cd) {
    std::vector<std::string> warnings;
    if (cd.n == 2 && (cd.c1sqH + cd.c2H) / 12 != cd.chiO) {
        warnings.push_back("(c1^2 + c2)/12 = " + rational_to_string((cd.c1sqH + cd.c2H) / 12) +
                           " does not equal chi(O) = " + rational_to_string(cd.chiO));
    }
    if (cd.n == 3 && cd.c1c2H / 24 != cd.chiO) {
        warnings.push_back("c1.c2/24 = " + rational_to_string(cd.c1c2H / 24) +
                           " does not equal chi(O) = " + rational_to_string(cd.chiO));
    }
    return warnings;
}

std::vector<std::string> integrality_warnings(const Polynomial& p) {
    std::vector<std::string> warnings;
    int upper = p.is_zero() ? 0 : p.degree();
    for (int m = 0; m <= upper; ++m) {
        Rational value = poly_eval_int(p, m);
        if (!is_integer(value)) {
            warnings.push_back("value at t = " + std::to_string(m) + " is non-integral (" +
                               rational_to_string(value) + ")");
        }
    }
    return warnings;
}

ParsedPolynomial parse_poly_text(std::string_view text) {
    std::istringstream is{std::string(text)};
    std::vector<Rational> coeffs;
    std::string token;
    while (is >> token) {
        auto q = parse_rational(token);
        if (!q) {
            throw std::invalid_argument("polynomial parse: malformed rational '" + token + "'");
        }
        coeffs.push_back(std::move(*q));
    }
    if (coeffs.empty()) {
        throw std::invalid_argument("polynomial parse: empty input");
    }
    std::size_t raw_len = coeffs.size();
    Polynomial poly(std::move(coeffs));
    bool trimmed = poly.coeffs().size() != raw_len && !(raw_len == 1 && poly.is_zero());
    return ParsedPolynomial{std::move(poly), trimmed};
}

ParsedPolynomial parse_poly_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("polynomial parse: cannot open '" + path + "'");
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_poly_text(buffer.str());
}

}  // namespace syzcert
