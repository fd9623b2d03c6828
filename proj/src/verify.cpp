#include "syzcert/verify.hpp"

#include "syzcert/criterion.hpp"
#include "syzcert/serialize.hpp"

#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace syzcert {

bool CaseResult::all_ok() const {
    return nonneg_ok && removal_ok.value_or(true) && recurrence_ok.value_or(true) &&
           parity_ok.value_or(true) && oracle_ok && engines_agree && certs_ok.value_or(true);
}

int VerifyReport::failures() const {
    int count = 0;
    for (const auto& row : rows) {
        if (!row.all_ok()) ++count;
    }
    return count;
}

std::string VerifyReport::summary() const {
    std::ostringstream os;
    os << "cases=" << rows.size() << " failures=" << failures();
    return os.str();
}

namespace {

std::string join_degrees(const std::vector<int>& degrees) {
    std::ostringstream os;
    for (std::size_t i = 0; i < degrees.size(); ++i) {
        if (i) os << ',';
        os << degrees[i];
    }
    return os.str();
}

std::string check_cell(const std::optional<bool>& value) {
    if (!value) return "-";
    return *value ? "1" : "0";
}

CaseResult run_case(const MultiDegree& md, int t_max, int ell_max) {
    CaseResult result;
    result.n = md.n();
    result.degrees = md.degrees();
    result.dim = md.dim();
    result.fano_cy = md.fano_cy();
    result.poly = f_poly(md);
    result.nonneg_ok = nonneg_check(md).ok;
    if (md.n() >= 2 && md.k() >= 1) {
        result.removal_ok = removal_identity_check(md);
        result.recurrence_ok = recurrence_identity_check(md);
    }
    if (md.degree_sum() == md.n() + 1) {
        result.parity_ok = parity_check(md);
    }
    result.oracle_ok = oracle_match(md, t_max);

    if (ell_max > 0 && md.dim() >= 2) {
        bool all_strict = true;
        for (int ell = 1; ell <= ell_max && all_strict; ++ell) {
            all_strict = destabilizing_search(result.poly, ell).verdict ==
                         CertVerdict::PassStrict;
        }
        result.certs_ok = all_strict;
    }

    result.engines_agree = f_poly_rec(md) == result.poly;
    if (result.engines_agree) {
        CoefficientTable table = coefficient_table(md);
        Rational n_factorial(factorial(static_cast<unsigned>(md.n())));
        for (int j = 0; j <= md.n(); ++j) {
            if (table.s_values[static_cast<std::size_t>(j)] !=
                n_factorial * result.poly.coeff(md.n() - j)) {
                result.engines_agree = false;
                break;
            }
        }
    }
    return result;
}

}  // namespace

void parallel_for_index(std::size_t count, int workers,
                        const std::function<void(std::size_t)>& fn) {
    if (workers < 1) throw std::invalid_argument("parallel_for_index: workers must be >= 1");
    std::size_t w = std::min<std::size_t>(static_cast<std::size_t>(workers), count);
    if (w <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(w);
    std::exception_ptr error;
    std::mutex error_mutex;
    for (std::size_t t = 0; t < w; ++t) {
        pool.emplace_back([&, t] {
            std::size_t begin = count * t / w;
            std::size_t end = count * (t + 1) / w;
            try {
                for (std::size_t i = begin; i < end; ++i) fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

VerifyReport run_verify(const VerifyOptions& options) {
    if (options.n_max < 1) throw std::invalid_argument("run_verify: n_max must be >= 1");
    if (options.t_max < options.n_max) {
        throw std::invalid_argument("run_verify: t_max must be >= n_max");
    }
    if (options.ell_max < 0) {
        throw std::invalid_argument("run_verify: ell_max must be >= 0");
    }
    VerifyReport report;
    report.options = options;
    std::vector<MultiDegree> cases = enumerate_multidegrees(options.n_max);
    report.rows.resize(cases.size());
    parallel_for_index(cases.size(), options.workers, [&](std::size_t i) {
        report.rows[i] = run_case(cases[i], options.t_max, options.ell_max);
    });
    return report;
}

std::string VerifyReport::to_tsv() const {
    std::ostringstream os;
    os << "n\tdegrees\tdim\tpoly\tnonneg\tremoval\trecurrence\tparity\toracle\tengines"
       << "\tcerts\n";
    for (const auto& row : rows) {
        os << row.n << '\t' << join_degrees(row.degrees) << '\t' << row.dim << '\t'
           << row.poly.to_string() << '\t' << (row.nonneg_ok ? 1 : 0) << '\t'
           << check_cell(row.removal_ok) << '\t' << check_cell(row.recurrence_ok) << '\t'
           << check_cell(row.parity_ok) << '\t' << (row.oracle_ok ? 1 : 0) << '\t'
           << (row.engines_agree ? 1 : 0) << '\t' << check_cell(row.certs_ok) << '\n';
    }
    return os.str();
}

std::string VerifyReport::to_json() const {
    return dump_json(verify_report_to_json(*this));
}

}  // namespace syzcert
