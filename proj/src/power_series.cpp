#include "syzcert/power_series.hpp"

#include <algorithm>
#include <stdexcept>

namespace syzcert {

PowerSeries::PowerSeries(std::vector<Rational> coeffs, std::size_t truncation_order)
    : coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != truncation_order + 1) {
        throw std::invalid_argument("PowerSeries: coefficient count must be order + 1");
    }
}

PowerSeries PowerSeries::zero(std::size_t order) {
    return PowerSeries(std::vector<Rational>(order + 1, Rational(0)), order);
}

PowerSeries PowerSeries::one(std::size_t order) {
    auto s = zero(order);
    s.coeffs_[0] = 1;
    return s;
}

PowerSeries PowerSeries::geometric(std::size_t order) {
    return PowerSeries(std::vector<Rational>(order + 1, Rational(1)), order);
}

PowerSeries PowerSeries::from_polynomial(const Polynomial& p, std::size_t order) {
    auto s = zero(order);
    for (std::size_t i = 0; i <= order && i < p.coeffs().size(); ++i) {
        s.coeffs_[i] = p.coeffs()[i];
    }
    return s;
}

const Rational& PowerSeries::coeff(std::size_t m) const {
    if (m >= coeffs_.size()) {
        throw std::out_of_range("PowerSeries::coeff: beyond truncation order");
    }
    return coeffs_[m];
}

PowerSeries operator+(const PowerSeries& lhs, const PowerSeries& rhs) {
    std::size_t order = std::min(lhs.truncation_order(), rhs.truncation_order());
    auto s = PowerSeries::zero(order);
    for (std::size_t i = 0; i <= order; ++i) {
        s.coeffs_[i] = lhs.coeffs_[i] + rhs.coeffs_[i];
    }
    return s;
}

PowerSeries operator*(const PowerSeries& lhs, const PowerSeries& rhs) {
    std::size_t order = std::min(lhs.truncation_order(), rhs.truncation_order());
    auto s = PowerSeries::zero(order);
    for (std::size_t i = 0; i <= order; ++i) {
        if (lhs.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; i + j <= order; ++j) {
            s.coeffs_[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
        }
    }
    return s;
}

PowerSeries series_quotient_expand(const std::vector<int>& numerator_degrees, int n,
                                   std::size_t order) {
    if (n <= 0) throw std::invalid_argument("series_quotient_expand: n must be positive");
    for (int d : numerator_degrees) {
        if (d <= 0) throw std::invalid_argument("series_quotient_expand: degrees must be positive");
    }
    // 1/(1-z)^{n+1} as the (n+1)-fold product of the geometric series.
    PowerSeries s = PowerSeries::one(order);
    PowerSeries geo = PowerSeries::geometric(order);
    for (int i = 0; i <= n; ++i) {
        s = s * geo;
    }
    for (int d : numerator_degrees) {
        // factor (1 - z^d)
        auto factor = PowerSeries::zero(order);
        auto coeffs = factor.coeffs();
        coeffs[0] = 1;
        if (static_cast<std::size_t>(d) <= order) {
            coeffs[static_cast<std::size_t>(d)] = -1;
        }
        s = s * PowerSeries(std::move(coeffs), order);
    }
    return s;
}

}  // namespace syzcert
