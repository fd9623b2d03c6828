#pragma once

#include "syzcert/ci_hilbert.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace syzcert {

struct VerifyOptions {
    int n_max = 1;
    int t_max = 20;   // oracle comparison range
    int ell_max = 0;  // when > 0, demand PASS_STRICT certificates for ell = 1..ell_max
    int workers = 1;
};

/// Per-multidegree outcome of the verification campaign. Checks whose
/// hypotheses do not apply to the case are left unset.
struct CaseResult {
    int n = 0;
    std::vector<int> degrees;
    int dim = 0;
    bool fano_cy = true;
    Polynomial poly;
    bool nonneg_ok = true;
    std::optional<bool> removal_ok;     // needs n >= 2, k >= 1
    std::optional<bool> recurrence_ok;  // needs n >= 2, k >= 1
    std::optional<bool> parity_ok;      // needs sum d_i = n + 1
    bool oracle_ok = true;
    bool engines_agree = true;  // f_poly == f_poly_rec and matches the S_j table
    std::optional<bool> certs_ok;       // needs ell_max > 0 and dim >= 2

    bool all_ok() const;
};

struct VerifyReport {
    VerifyOptions options;
    std::vector<CaseResult> rows;

    int failures() const;
    std::string summary() const;  // "cases=N failures=M"
    std::string to_tsv() const;
    std::string to_json() const;
};

// Runs every check over enumerate_multidegrees(n_max), fanned out over the
// requested worker count; row order is the enumeration order regardless of
// worker count.
VerifyReport run_verify(const VerifyOptions& options);

// Static block partition of [0, count) across workers; fn must be safe to
// call concurrently on distinct indices.
void parallel_for_index(std::size_t count, int workers,
                        const std::function<void(std::size_t)>& fn);

}  // namespace syzcert
