#pragma once

#include "syzcert/polynomial.hpp"
#include "syzcert/rational.hpp"

#include <vector>

namespace syzcert {

/// Formal power series truncated at a fixed order; coefficient list always has
/// length truncation_order + 1 and arithmetic never reads beyond it.
class PowerSeries {
public:
    PowerSeries(std::vector<Rational> coeffs, std::size_t truncation_order);

    static PowerSeries zero(std::size_t order);
    static PowerSeries one(std::size_t order);
    // 1/(1-z) = 1 + z + z^2 + ...
    static PowerSeries geometric(std::size_t order);
    static PowerSeries from_polynomial(const Polynomial& p, std::size_t order);

    std::size_t truncation_order() const { return coeffs_.size() - 1; }
    const Rational& coeff(std::size_t m) const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    // Results are truncated at the smaller of the two operand orders.
    friend PowerSeries operator+(const PowerSeries& lhs, const PowerSeries& rhs);
    friend PowerSeries operator*(const PowerSeries& lhs, const PowerSeries& rhs);

    bool operator==(const PowerSeries& rhs) const = default;

private:
    std::vector<Rational> coeffs_;
};

// Expansion of prod_i (1 - z^{d_i}) / (1 - z)^{n+1} up to the given order.
// Coefficient m is the Hilbert function of a complete intersection of the
// given degrees in projective n-space. Throws on d_i <= 0 or n <= 0.
PowerSeries series_quotient_expand(const std::vector<int>& numerator_degrees, int n,
                                   std::size_t order);

}  // namespace syzcert
