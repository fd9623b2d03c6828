#include "syzcert/serialize.hpp"

#include "syzcert/verify.hpp"

namespace syzcert {

std::string dump_json(const Json& j) {
    return j.dump(2) + "\n";
}

Json rational_to_json(const Rational& q) {
    return rational_to_string(q);
}

Json poly_to_json(const Polynomial& p) {
    return p.to_string();
}

Json criterion_report_to_json(const CriterionReport& report) {
    Json j;
    j["p1"] = rational_to_json(report.p1);
    j["neg_coeff_indices"] = report.neg_coeff_indices;
    j["a1_negative"] = report.a1_negative;
    j["a0_negative"] = report.a0_negative;
    j["criterion"] = report.criterion;
    j["criterion_strong"] = report.criterion_strong;
    return j;
}

Json monotone_result_to_json(const MonotoneResult& result) {
    Json j;
    j["preconditions"] = Json{{"degree", result.degree_ok},
                              {"high_coeffs_nonneg", result.high_coeffs_nonneg},
                              {"p1_positive", result.p1_positive},
                              {"doubling_bound", result.doubling_ok}};
    Json table = Json::array();
    for (const auto& row : result.table) {
        table.push_back(Json{{"k", row.k}, {"value", rational_to_json(row.value)}});
    }
    j["table"] = std::move(table);
    j["monotone"] = result.monotone;
    return j;
}

Json certificate_to_json(const StabilityCertificate& cert) {
    Json j;
    j["ell"] = cert.ell;
    j["h0"] = rational_to_json(cert.h0);
    j["rank"] = rational_to_json(cert.rank);
    j["c1"] = cert.c1;
    j["verdict"] = verdict_to_string(cert.verdict);
    if (!cert.annotation.empty()) {
        j["annotation"] = cert.annotation;
    }
    Json rows = Json::array();
    for (const auto& row : cert.rows) {
        rows.push_back(Json{{"k", row.k},
                            {"lhs", rational_to_json(row.lhs)},
                            {"rhs", rational_to_json(row.rhs)},
                            {"margin", rational_to_json(row.margin)},
                            {"strict", row.strict}});
    }
    j["rows"] = std::move(rows);
    j["hypotheses_assumed"] = Json{{"picard_rank_one", cert.assume_picard_rank_one},
                                   {"minus_K_nef", cert.assume_minus_k_nef}};
    return j;
}

Json syzygy_data_to_json(const SyzygyData& data) {
    Json j;
    j["h0"] = rational_to_json(data.h0);
    j["rank"] = rational_to_json(data.rank);
    j["c1"] = data.c1_in_H_units;
    j["slope_numerator"] = rational_to_json(data.slope_numerator);
    return j;
}

Json nonneg_to_json(const NonnegResult& result) {
    Json j;
    j["nonneg"] = result.ok;
    if (!result.ok) {
        j["witness"] = Json{{"index", result.witness_index},
                            {"coefficient", rational_to_json(result.witness_value)}};
    }
    return j;
}

Json ci_case_to_json(const MultiDegree& md) {
    Json j;
    j["n"] = md.n();
    j["degrees"] = md.degrees();
    j["dim"] = md.dim();
    j["fano_cy"] = md.fano_cy();
    return j;
}

Json root_table_to_json(const RootTable& rt) {
    Json j;
    j["type"] = std::string(1, lie_type_to_char(rt.datum.type));
    j["rank"] = rt.datum.rank;
    j["node"] = rt.datum.marked_node;
    Json roots = Json::array();
    for (const auto& root : rt.roots) {
        roots.push_back(Json{{"coeffs", root.simple_coeffs},
                             {"lambda", root.lambda_pairing},
                             {"rho", root.rho_pairing}});
    }
    j["positive_roots"] = std::move(roots);
    return j;
}

Json verify_report_to_json(const VerifyReport& report) {
    Json j;
    j["n_max"] = report.options.n_max;
    j["t_max"] = report.options.t_max;
    j["ell_max"] = report.options.ell_max;
    Json rows = Json::array();
    for (const auto& row : report.rows) {
        Json r;
        r["n"] = row.n;
        r["degrees"] = row.degrees;
        r["dim"] = row.dim;
        r["fano_cy"] = row.fano_cy;
        r["poly"] = poly_to_json(row.poly);
        r["nonneg"] = row.nonneg_ok;
        r["removal"] = row.removal_ok ? Json(*row.removal_ok) : Json(nullptr);
        r["recurrence"] = row.recurrence_ok ? Json(*row.recurrence_ok) : Json(nullptr);
        r["parity"] = row.parity_ok ? Json(*row.parity_ok) : Json(nullptr);
        r["oracle"] = row.oracle_ok;
        r["engines"] = row.engines_agree;
        r["certs"] = row.certs_ok ? Json(*row.certs_ok) : Json(nullptr);
        rows.push_back(std::move(r));
    }
    j["cases"] = std::move(rows);
    j["summary"] = Json{{"cases", report.rows.size()}, {"failures", report.failures()}};
    return j;
}

}  // namespace syzcert
