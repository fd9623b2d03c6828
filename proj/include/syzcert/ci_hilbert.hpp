#pragma once

#include "syzcert/polynomial.hpp"
#include "syzcert/rational.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace syzcert {

/// Combinatorial data of a complete intersection: ambient projective dimension n
/// and the sorted hypersurface degrees d_1 <= ... <= d_k, with n > k >= 0.
class MultiDegree {
public:
    MultiDegree(int n, std::vector<int> degrees);

    int n() const { return n_; }
    int k() const { return static_cast<int>(degrees_.size()); }
    int dim() const { return n_ - k(); }
    const std::vector<int>& degrees() const { return degrees_; }
    int degree_sum() const;
    // True iff sum d_i <= n + 1 (anticanonical bundle nef).
    bool fano_cy() const { return degree_sum() <= n_ + 1; }

    bool operator==(const MultiDegree& rhs) const = default;

private:
    int n_ = 1;
    std::vector<int> degrees_;
};

// The Hilbert polynomial of a complete intersection via inclusion-exclusion
// over degree subsets:
//   sum over I of (-1)^|I| C(t + n - d_I, n).
// The raw overloads accept any n >= 1 and any number of degrees (no n > k
// constraint); the recurrence below needs that headroom.
Polynomial f_poly(int n, const std::vector<int>& degrees);
Polynomial f_poly(const MultiDegree& md);

// Same polynomial computed by the degree-lowering recurrence
//   n F_n = (t + n - sum d_i) F_{n-1}(d) + sum_i d_i F_{n-1}(d with d_i removed),
// memoized on (n, sorted degrees), with closed-form base cases n = 1 and k = 0.
Polynomial f_poly_rec(int n, std::vector<int> degrees);
Polynomial f_poly_rec(const MultiDegree& md);

// n! times the coefficient of t^{n-j} in f_poly, computed independently through
// elementary symmetric polynomials:
//   S_j = sum over I of (-1)^|I| sigma_j(1 - d_I, 2 - d_I, ..., n - d_I).
Rational s_coeff(int n, const std::vector<int>& degrees, int j);
Rational s_coeff(const MultiDegree& md, int j);

/// All S_j values for one multidegree; s_values[j] is n! times the
/// coefficient of t^{n-j} in f_poly.
struct CoefficientTable {
    int n = 0;
    std::vector<int> degrees;
    std::vector<Rational> s_values;
};
CoefficientTable coefficient_table(const MultiDegree& md);

// Identity check: sum over I of (-1)^|I| d_{complement of I} C(t+n-1-d_I, n-1)
// equals sum_i d_i F_{n-1}(degrees with d_i removed). Requires n >= 2, k >= 1.
// The raw overload also covers dimension-0 cases (k = n).
bool removal_identity_check(int n, const std::vector<int>& degrees);
bool removal_identity_check(const MultiDegree& md);

// Recurrence check: n F_n = (t + n - sum d_i) F_{n-1}(d) + sum_i d_i F_{n-1}(d \ d_i)
// as an exact identity between inclusion-exclusion outputs. Requires n >= 2, k >= 1.
bool recurrence_identity_check(int n, const std::vector<int>& degrees);
bool recurrence_identity_check(const MultiDegree& md);

// At the boundary sum d_i = n + 1: S_j = 0 when k + j is odd, and
// S_j = 2 S_j(degrees with the largest one removed) when k + j is even.
// Requires sum d_i = n + 1 (and hence k >= 1).
bool parity_check(int n, std::vector<int> degrees);
bool parity_check(const MultiDegree& md);

struct NonnegResult {
    bool ok = true;
    // First negative coefficient when !ok.
    int witness_index = -1;
    Rational witness_value;
};
// Coefficient non-negativity of f_poly. Accepts inputs outside the
// fano_cy hypothesis so sharpness counterexamples are expressible.
NonnegResult nonneg_check(const MultiDegree& md);
NonnegResult nonneg_check(int n, const std::vector<int>& degrees);

// Cross-checks f_poly against the Hilbert-series expansion at the integer
// points 0..t_max. The series counts sections, the polynomial computes the
// Euler characteristic; at m = 0 these differ by exactly (-1)^{n-k} when
// sum d_i = n + 1 (the top-degree structure-sheaf cohomology), and that exact
// offset is required. Every other point must match on the nose.
// Requires t_max >= n - k.
bool oracle_match(const MultiDegree& md, int t_max);

// Every MultiDegree with 1 <= n <= n_max, 0 <= k < n, non-decreasing degrees,
// and sum d_i <= n + 1, in lexicographic (n, k, degrees) order.
std::vector<MultiDegree> enumerate_multidegrees(int n_max);

}  // namespace syzcert
