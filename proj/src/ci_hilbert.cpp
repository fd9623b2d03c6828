#include "syzcert/ci_hilbert.hpp"

#include "syzcert/power_series.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <stdexcept>

namespace syzcert {

namespace {

void validate_raw(int n, const std::vector<int>& degrees) {
    if (n < 1) throw std::invalid_argument("ci_hilbert: n must be >= 1");
    for (int d : degrees) {
        if (d < 1) throw std::invalid_argument("ci_hilbert: degrees must be >= 1");
    }
}

int sum_of(const std::vector<int>& degrees) {
    return std::accumulate(degrees.begin(), degrees.end(), 0);
}

// Sum of d_i over the bits set in mask.
int subset_sum(const std::vector<int>& degrees, unsigned mask) {
    int s = 0;
    for (std::size_t i = 0; i < degrees.size(); ++i) {
        if (mask & (1u << i)) s += degrees[i];
    }
    return s;
}

}  // namespace

MultiDegree::MultiDegree(int n, std::vector<int> degrees)
    : n_(n), degrees_(std::move(degrees)) {
    validate_raw(n_, degrees_);
    if (n_ <= static_cast<int>(degrees_.size())) {
        throw std::invalid_argument("MultiDegree: requires n > k");
    }
    std::sort(degrees_.begin(), degrees_.end());
}

int MultiDegree::degree_sum() const {
    return sum_of(degrees_);
}

Polynomial f_poly(int n, const std::vector<int>& degrees) {
    validate_raw(n, degrees);
    const std::size_t k = degrees.size();
    if (k >= 31) throw std::invalid_argument("f_poly: too many degrees");
    // C(t + n - s, n) depends only on the subset sum s; cache per distinct s.
    std::map<int, Polynomial> binom_by_sum;
    Polynomial acc;
    for (unsigned mask = 0; mask < (1u << k); ++mask) {
        int s = subset_sum(degrees, mask);
        auto it = binom_by_sum.find(s);
        if (it == binom_by_sum.end()) {
            it = binom_by_sum.emplace(s, binom_poly(n - s, n)).first;
        }
        if (std::popcount(mask) % 2 == 0) {
            acc += it->second;
        } else {
            acc -= it->second;
        }
    }
    return acc;
}

Polynomial f_poly(const MultiDegree& md) {
    return f_poly(md.n(), md.degrees());
}

namespace {

using MemoKey = std::pair<int, std::vector<int>>;

const Polynomial& f_poly_rec_impl(int n, std::vector<int> degrees,
                                  std::map<MemoKey, Polynomial>& memo) {
    std::sort(degrees.begin(), degrees.end());
    MemoKey key{n, degrees};
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    Polynomial result;
    const std::size_t k = degrees.size();
    if (k == 0) {
        result = binom_poly(n, n);
    } else if (n == 1) {
        // F_1 is d_1 for one degree and vanishes for two or more.
        if (k == 1) result = Polynomial::constant(Rational(degrees[0]));
    } else {
        const Polynomial& lower = f_poly_rec_impl(n - 1, degrees, memo);
        Polynomial acc =
            Polynomial(std::vector<Rational>{Rational(n - sum_of(degrees)), Rational(1)}) * lower;
        for (std::size_t i = 0; i < k; ++i) {
            std::vector<int> reduced = degrees;
            reduced.erase(reduced.begin() + static_cast<std::ptrdiff_t>(i));
            acc += Rational(degrees[i]) * f_poly_rec_impl(n - 1, std::move(reduced), memo);
        }
        acc /= Rational(n);
        result = std::move(acc);
    }
    return memo.emplace(std::move(key), std::move(result)).first->second;
}

}  // namespace

Polynomial f_poly_rec(int n, std::vector<int> degrees) {
    validate_raw(n, degrees);
    std::map<MemoKey, Polynomial> memo;
    return f_poly_rec_impl(n, std::move(degrees), memo);
}

Polynomial f_poly_rec(const MultiDegree& md) {
    return f_poly_rec(md.n(), md.degrees());
}

Rational s_coeff(int n, const std::vector<int>& degrees, int j) {
    validate_raw(n, degrees);
    if (j < 0 || j > n) throw std::invalid_argument("s_coeff: j must lie in 0..n");
    const std::size_t k = degrees.size();
    if (k >= 31) throw std::invalid_argument("s_coeff: too many degrees");
    // sigma_j(1 - s, ..., n - s) depends only on the subset sum s.
    std::map<int, Rational> sigma_by_sum;
    Rational acc = 0;
    for (unsigned mask = 0; mask < (1u << k); ++mask) {
        int s = subset_sum(degrees, mask);
        auto it = sigma_by_sum.find(s);
        if (it == sigma_by_sum.end()) {
            std::vector<Rational> values;
            values.reserve(static_cast<std::size_t>(n));
            for (int i = 1; i <= n; ++i) values.emplace_back(i - s);
            it = sigma_by_sum.emplace(s, elem_sym(values, static_cast<std::size_t>(j))).first;
        }
        if (std::popcount(mask) % 2 == 0) {
            acc += it->second;
        } else {
            acc -= it->second;
        }
    }
    return acc;
}

Rational s_coeff(const MultiDegree& md, int j) {
    return s_coeff(md.n(), md.degrees(), j);
}

CoefficientTable coefficient_table(const MultiDegree& md) {
    CoefficientTable table;
    table.n = md.n();
    table.degrees = md.degrees();
    table.s_values.reserve(static_cast<std::size_t>(md.n()) + 1);
    for (int j = 0; j <= md.n(); ++j) {
        table.s_values.push_back(s_coeff(md, j));
    }
    return table;
}

bool removal_identity_check(int n, const std::vector<int>& degrees) {
    validate_raw(n, degrees);
    const std::size_t k = degrees.size();
    if (n < 2 || k == 0) {
        throw std::invalid_argument("removal_identity_check: requires n >= 2 and k >= 1");
    }
    const int total = sum_of(degrees);
    Polynomial lhs;
    std::map<int, Polynomial> binom_by_sum;
    for (unsigned mask = 0; mask < (1u << k); ++mask) {
        int s = subset_sum(degrees, mask);
        auto it = binom_by_sum.find(s);
        if (it == binom_by_sum.end()) {
            it = binom_by_sum.emplace(s, binom_poly(n - 1 - s, n - 1)).first;
        }
        Rational weight(total - s);  // d_{complement of I}
        if (std::popcount(mask) % 2 == 1) weight = -weight;
        lhs += weight * it->second;
    }
    Polynomial rhs;
    for (std::size_t i = 0; i < k; ++i) {
        std::vector<int> reduced = degrees;
        reduced.erase(reduced.begin() + static_cast<std::ptrdiff_t>(i));
        rhs += Rational(degrees[i]) * f_poly(n - 1, reduced);
    }
    return lhs == rhs;
}

bool removal_identity_check(const MultiDegree& md) {
    return removal_identity_check(md.n(), md.degrees());
}

bool recurrence_identity_check(int n, const std::vector<int>& degrees) {
    validate_raw(n, degrees);
    const std::size_t k = degrees.size();
    if (n < 2 || k == 0) {
        throw std::invalid_argument("recurrence_identity_check: requires n >= 2 and k >= 1");
    }
    Polynomial lhs = Rational(n) * f_poly(n, degrees);
    Polynomial rhs =
        Polynomial(std::vector<Rational>{Rational(n - sum_of(degrees)), Rational(1)}) *
        f_poly(n - 1, degrees);
    for (std::size_t i = 0; i < k; ++i) {
        std::vector<int> reduced = degrees;
        reduced.erase(reduced.begin() + static_cast<std::ptrdiff_t>(i));
        rhs += Rational(degrees[i]) * f_poly(n - 1, reduced);
    }
    return lhs == rhs;
}

bool recurrence_identity_check(const MultiDegree& md) {
    return recurrence_identity_check(md.n(), md.degrees());
}

bool parity_check(int n, std::vector<int> degrees) {
    validate_raw(n, degrees);
    std::sort(degrees.begin(), degrees.end());
    const int k = static_cast<int>(degrees.size());
    if (sum_of(degrees) != n + 1) {
        throw std::invalid_argument("parity_check: requires sum of degrees = n + 1");
    }
    std::vector<int> reduced = degrees;
    reduced.pop_back();
    for (int j = 0; j <= n; ++j) {
        Rational sj = s_coeff(n, degrees, j);
        if ((k + j) % 2 == 1) {
            if (sj != 0) return false;
        } else {
            if (sj != Rational(2) * s_coeff(n, reduced, j)) return false;
        }
    }
    return true;
}

bool parity_check(const MultiDegree& md) {
    return parity_check(md.n(), md.degrees());
}

NonnegResult nonneg_check(int n, const std::vector<int>& degrees) {
    Polynomial p = f_poly(n, degrees);
    NonnegResult r;
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        if (p.coeffs()[i] < 0) {
            r.ok = false;
            r.witness_index = static_cast<int>(i);
            r.witness_value = p.coeffs()[i];
            return r;
        }
    }
    return r;
}

NonnegResult nonneg_check(const MultiDegree& md) {
    return nonneg_check(md.n(), md.degrees());
}

bool oracle_match(const MultiDegree& md, int t_max) {
    if (t_max < md.dim()) {
        throw std::invalid_argument("oracle_match: t_max too small to pin the polynomial");
    }
    Polynomial p = f_poly(md);
    PowerSeries series =
        series_quotient_expand(md.degrees(), md.n(), static_cast<std::size_t>(t_max));
    for (int m = 1; m <= t_max; ++m) {
        if (poly_eval_int(p, m) != series.coeff(static_cast<std::size_t>(m))) return false;
    }
    // Constant term: the I = full-set term of the inclusion-exclusion is
    // C(-1, n) = (-1)^n at the boundary sum d_i = n + 1, which the section
    // count cannot see. Elsewhere the two must agree exactly.
    Rational expected0 = series.coeff(0);
    if (md.degree_sum() == md.n() + 1) {
        expected0 += (md.dim() % 2 == 0) ? 1 : -1;
    }
    return poly_eval_int(p, 0) == expected0;
}

namespace {

void emit_degree_tuples(int n, int k, int min_degree, int budget, std::vector<int>& prefix,
                        std::vector<MultiDegree>& out) {
    if (static_cast<int>(prefix.size()) == k) {
        out.emplace_back(n, prefix);
        return;
    }
    int remaining = k - static_cast<int>(prefix.size());
    for (int d = min_degree; d * remaining <= budget; ++d) {
        prefix.push_back(d);
        emit_degree_tuples(n, k, d, budget - d, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<MultiDegree> enumerate_multidegrees(int n_max) {
    if (n_max < 1) throw std::invalid_argument("enumerate_multidegrees: n_max must be >= 1");
    std::vector<MultiDegree> out;
    for (int n = 1; n <= n_max; ++n) {
        for (int k = 0; k < n; ++k) {
            std::vector<int> prefix;
            emit_degree_tuples(n, k, 1, n + 1, prefix, out);
        }
    }
    return out;
}

}  // namespace syzcert
