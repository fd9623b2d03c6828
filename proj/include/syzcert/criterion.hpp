#pragma once

#include "syzcert/polynomial.hpp"
#include "syzcert/rational.hpp"

#include <string>
#include <vector>

namespace syzcert {

/// Outcome of the polynomial stability criterion for P_H(t) = sum a_i t^i.
/// `criterion` is the working form (P(1) > 0 and a_i >= 0 for all i >= 2);
/// `criterion_strong` additionally demands a_1 >= 0 and a_0 >= 0, i.e. all
/// coefficients non-negative.
struct CriterionReport {
    Rational p1;
    std::vector<int> neg_coeff_indices;  // indices >= 2 with negative coefficient
    bool a1_negative = false;
    bool a0_negative = false;
    bool criterion = false;
    bool criterion_strong = false;
};

// Requires deg p >= 2 and positive leading coefficient; throws otherwise.
CriterionReport check_criterion(const Polynomial& p);

// The section-doubling bound sum_{i>=2} a_i (2^i - 2) >= a_0 - 1, equivalently
// P(2) >= 2 P(1) - 1. Verifies the equivalence of the two forms on every call.
// Requires deg p >= 2.
bool doubling_bound_check(const Polynomial& p);

struct MonotoneRow {
    int k = 0;
    Rational value;  // (P(k) - 1) / k
};

struct MonotoneResult {
    // Individual precondition reports; the table and verdict are factual
    // regardless, the guarantee only applies when all four hold.
    bool degree_ok = false;
    bool high_coeffs_nonneg = false;
    bool p1_positive = false;
    bool doubling_ok = false;
    std::vector<MonotoneRow> table;
    // Non-decreasing overall, strictly increasing from every k >= 2.
    bool monotone = false;

    bool preconditions_ok() const {
        return degree_ok && high_coeffs_nonneg && p1_positive && doubling_ok;
    }
};

// Table of (P(k)-1)/k for k = 1..k_max and its monotonicity verdict.
MonotoneResult monotone_check(const Polynomial& p, int k_max);

// Sign of k - ell*r/(h0L - 1), the slope sign of the twisted wedge power of a
// syzygy bundle in ample-generator units. Requires 0 < r < h0L - 1.
int wedge_slope_sign(const Rational& h0L, int ell, int r, int k);

struct CertificateRow {
    int k = 0;
    Rational lhs;     // k (P(ell) - 1) / ell
    Rational rhs;     // P(k) - 1
    Rational margin;  // lhs - rhs
    bool strict = false;
};

enum class CertVerdict { PassStrict, PassWeakAtK1, Fail };

std::string verdict_to_string(CertVerdict v);

/// Margin table witnessing (P(ell)-1)/ell > (P(k)-1)/k for 1 <= k < ell, the
/// arithmetic content of the destabilizing-subsheaf exclusion for L = H^ell.
struct StabilityCertificate {
    int ell = 1;
    Rational h0;    // P(ell)
    Rational rank;  // P(ell) - 1
    int c1 = 0;     // -ell, in c_1(H) units
    std::vector<CertificateRow> rows;
    CertVerdict verdict = CertVerdict::PassStrict;
    // Set on the weak verdict: the equality case is excluded geometrically
    // (Bertini), which no polynomial computation can decide.
    std::string annotation;
    // Caller-supplied hypotheses, echoed verbatim, never verified.
    bool assume_picard_rank_one = false;
    bool assume_minus_k_nef = false;
};

// Requires check_criterion(p).criterion and ell >= 1; throws otherwise.
// ell = 1 yields an empty row set and a vacuous PASS_STRICT.
StabilityCertificate destabilizing_search(const Polynomial& p, int ell);

struct SyzygyData {
    Rational h0;    // P(ell)
    Rational rank;  // P(ell) - 1
    int c1_in_H_units = 0;
    Rational slope_numerator;  // -ell / (P(ell) - 1)
};

// Rank and slope data of the syzygy bundle of L = H^ell. Requires P(ell) >= 2.
SyzygyData syzygy_data(const Polynomial& p, int ell);

}  // namespace syzcert
