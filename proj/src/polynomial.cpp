#include "syzcert/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace syzcert {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) {
        coeffs_.pop_back();
    }
}

Polynomial Polynomial::constant(Rational c) {
    return Polynomial(std::vector<Rational>{std::move(c)});
}

Polynomial Polynomial::monomial(Rational c, int power) {
    if (power < 0) throw std::invalid_argument("monomial: negative power");
    std::vector<Rational> v(static_cast<std::size_t>(power) + 1, Rational(0));
    v.back() = std::move(c);
    return Polynomial(std::move(v));
}

Rational Polynomial::coeff(int i) const {
    if (i < 0 || static_cast<std::size_t>(i) >= coeffs_.size()) return Rational(0);
    return coeffs_[static_cast<std::size_t>(i)];
}

Rational Polynomial::leading() const {
    return coeffs_.empty() ? Rational(0) : coeffs_.back();
}

Rational Polynomial::eval(const Rational& t) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * t + *it;
    }
    return acc;
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return Polynomial();
    std::vector<Rational> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
        if (lhs.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
            out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
        }
    }
    return Polynomial(std::move(out));
}

Polynomial& Polynomial::operator*=(const Rational& c) {
    if (c == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& a : coeffs_) a *= c;
    return *this;
}

Polynomial& Polynomial::operator/=(const Rational& c) {
    if (c == 0) throw std::domain_error("Polynomial: division by zero");
    for (auto& a : coeffs_) a /= c;
    return *this;
}

std::string Polynomial::to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) os << ' ';
        os << coeffs_[i];
    }
    return os.str();
}

std::optional<Polynomial> Polynomial::parse(std::string_view text) {
    std::vector<Rational> coeffs;
    std::istringstream is{std::string(text)};
    std::string token;
    while (is >> token) {
        auto q = parse_rational(token);
        if (!q) return std::nullopt;
        coeffs.push_back(std::move(*q));
    }
    if (coeffs.empty()) return std::nullopt;
    return Polynomial(std::move(coeffs));
}

Polynomial binom_poly(long shift, int n) {
    if (n <= 0) throw std::invalid_argument("binom_poly: n must be positive");
    Polynomial p = Polynomial::constant(Rational(1));
    for (int i = 0; i < n; ++i) {
        // factor (t + shift - i)
        p = p * Polynomial(std::vector<Rational>{Rational(shift - i), Rational(1)});
    }
    p /= Rational(factorial(static_cast<unsigned>(n)));
    return p;
}

Rational poly_eval_int(const Polynomial& p, const Int& t) {
    return p.eval(Rational(t));
}

Rational elem_sym(const std::vector<Rational>& values, std::size_t j) {
    if (j > values.size()) {
        throw std::invalid_argument("elem_sym: j exceeds number of values");
    }
    // e[m] accumulates sigma_m over a growing prefix of the values.
    std::vector<Rational> e(j + 1, Rational(0));
    e[0] = 1;
    for (const auto& v : values) {
        for (std::size_t m = std::min(j, e.size() - 1); m >= 1; --m) {
            e[m] += v * e[m - 1];
        }
    }
    return e[j];
}

}  // namespace syzcert
