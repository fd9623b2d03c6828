#pragma once

#include "syzcert/rational.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace syzcert {

/// Dense univariate polynomial with exact rational coefficients, stored
/// low-to-high with the trailing coefficient nonzero (canonical length).
class Polynomial {
public:
    // degree() of the identically-zero polynomial; stands in for minus infinity.
    static constexpr int kZeroDegree = -1;

    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs);

    static Polynomial constant(Rational c);
    static Polynomial monomial(Rational c, int power);

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    // Coefficient of t^i; zero beyond the stored range.
    Rational coeff(int i) const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    Rational leading() const;

    Rational eval(const Rational& t) const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
    friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
    friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
    Polynomial& operator*=(const Rational& c);
    friend Polynomial operator*(Polynomial p, const Rational& c) { return p *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial p) { return p *= c; }
    Polynomial& operator/=(const Rational& c);

    bool operator==(const Polynomial& rhs) const = default;

    // Coefficients a_0..a_n space-separated in rational text form; "0" when zero.
    std::string to_string() const;

    // Inverse of to_string. Rejects malformed tokens and empty input; input with
    // trailing zero coefficients is accepted and trimmed to canonical form.
    static std::optional<Polynomial> parse(std::string_view text);

private:
    void trim();
    std::vector<Rational> coeffs_;
};

// The polynomial C(t + shift, n) expanded in t: degree n, leading coefficient
// 1/n!, integer values at integer arguments. Throws std::invalid_argument for n <= 0.
Polynomial binom_poly(long shift, int n);

// Exact value of p at an integer point.
Rational poly_eval_int(const Polynomial& p, const Int& t);

// j-th elementary symmetric polynomial of the values; sigma_0 = 1.
// Throws std::invalid_argument if j > values.size().
Rational elem_sym(const std::vector<Rational>& values, std::size_t j);

}  // namespace syzcert
