#include "syzcert/criterion.hpp"

#include <stdexcept>

namespace syzcert {

namespace {

void require_degree_two(const Polynomial& p, const char* who) {
    if (p.degree() < 2) {
        throw std::invalid_argument(std::string(who) + ": polynomial degree must be >= 2");
    }
}

}  // namespace

CriterionReport check_criterion(const Polynomial& p) {
    require_degree_two(p, "check_criterion");
    if (p.leading() <= 0) {
        throw std::invalid_argument("check_criterion: leading coefficient must be positive");
    }
    CriterionReport report;
    report.p1 = p.eval(Rational(1));
    for (int i = 2; i <= p.degree(); ++i) {
        if (p.coeff(i) < 0) report.neg_coeff_indices.push_back(i);
    }
    report.a1_negative = p.coeff(1) < 0;
    report.a0_negative = p.coeff(0) < 0;
    report.criterion = report.p1 > 0 && report.neg_coeff_indices.empty();
    report.criterion_strong = report.criterion && !report.a1_negative && !report.a0_negative;
    return report;
}

bool doubling_bound_check(const Polynomial& p) {
    require_degree_two(p, "doubling_bound_check");
    Rational lhs = 0;
    Rational two_pow = 4;
    for (int i = 2; i <= p.degree(); ++i) {
        lhs += p.coeff(i) * (two_pow - 2);
        two_pow *= 2;
    }
    Rational slack = lhs - (p.coeff(0) - 1);
    // Same quantity through evaluations; must agree identically.
    Rational slack_eval = p.eval(Rational(2)) - 2 * p.eval(Rational(1)) + 1;
    if (slack != slack_eval) {
        throw std::logic_error("doubling_bound_check: coefficient/evaluation forms disagree");
    }
    return slack >= 0;
}

MonotoneResult monotone_check(const Polynomial& p, int k_max) {
    if (k_max < 1) throw std::invalid_argument("monotone_check: k_max must be >= 1");
    MonotoneResult result;
    result.degree_ok = p.degree() >= 2;
    result.high_coeffs_nonneg = true;
    for (int i = 2; i <= p.degree(); ++i) {
        if (p.coeff(i) < 0) result.high_coeffs_nonneg = false;
    }
    result.p1_positive = p.eval(Rational(1)) > 0;
    result.doubling_ok = result.degree_ok && doubling_bound_check(p);

    result.table.reserve(static_cast<std::size_t>(k_max));
    for (int k = 1; k <= k_max; ++k) {
        result.table.push_back({k, (poly_eval_int(p, k) - 1) / Rational(k)});
    }
    result.monotone = true;
    for (std::size_t i = 1; i < result.table.size(); ++i) {
        const Rational& prev = result.table[i - 1].value;
        const Rational& cur = result.table[i].value;
        bool step_from_k1 = result.table[i - 1].k == 1;
        if (step_from_k1 ? cur < prev : cur <= prev) {
            result.monotone = false;
            break;
        }
    }
    return result;
}

int wedge_slope_sign(const Rational& h0L, int ell, int r, int k) {
    if (ell < 1) throw std::invalid_argument("wedge_slope_sign: ell must be >= 1");
    if (r <= 0 || Rational(r) >= h0L - 1) {
        throw std::invalid_argument("wedge_slope_sign: requires 0 < r < h0(L) - 1");
    }
    return sign(Rational(k) - Rational(ell) * r / (h0L - 1));
}

std::string verdict_to_string(CertVerdict v) {
    switch (v) {
        case CertVerdict::PassStrict: return "PASS_STRICT";
        case CertVerdict::PassWeakAtK1: return "PASS_WEAK_AT_K1";
        case CertVerdict::Fail: return "FAIL";
    }
    return "FAIL";
}

StabilityCertificate destabilizing_search(const Polynomial& p, int ell) {
    if (ell < 1) throw std::invalid_argument("destabilizing_search: ell must be >= 1");
    CriterionReport report = check_criterion(p);
    if (!report.criterion) {
        throw std::invalid_argument("destabilizing_search: polynomial fails the criterion");
    }
    StabilityCertificate cert;
    cert.ell = ell;
    cert.h0 = poly_eval_int(p, ell);
    cert.rank = cert.h0 - 1;
    cert.c1 = -ell;

    bool all_strict = true;
    bool weak_only_at_k1 = true;
    for (int k = 1; k < ell; ++k) {
        CertificateRow row;
        row.k = k;
        row.lhs = Rational(k) * cert.rank / Rational(ell);
        row.rhs = poly_eval_int(p, k) - 1;
        row.margin = row.lhs - row.rhs;
        row.strict = row.margin > 0;
        if (!row.strict) {
            all_strict = false;
            if (!(k == 1 && row.margin == 0)) weak_only_at_k1 = false;
        }
        cert.rows.push_back(std::move(row));
    }
    if (all_strict) {
        cert.verdict = CertVerdict::PassStrict;
    } else if (weak_only_at_k1) {
        cert.verdict = CertVerdict::PassWeakAtK1;
        cert.annotation =
            "equality at k=1: excluded geometrically for globally generated ample L "
            "(a general member of |L| would be reducible, against Bertini); "
            "not decidable from the polynomial alone";
    } else {
        cert.verdict = CertVerdict::Fail;
    }
    return cert;
}

SyzygyData syzygy_data(const Polynomial& p, int ell) {
    if (ell < 1) throw std::invalid_argument("syzygy_data: ell must be >= 1");
    Rational h0 = poly_eval_int(p, ell);
    if (h0 < 2) {
        throw std::invalid_argument("syzygy_data: P(ell) must be >= 2 for a positive rank");
    }
    SyzygyData data;
    data.h0 = h0;
    data.rank = h0 - 1;
    data.c1_in_H_units = -ell;
    data.slope_numerator = Rational(-ell) / data.rank;
    return data;
}

}  // namespace syzcert
