#pragma once

#include "syzcert/ci_hilbert.hpp"
#include "syzcert/criterion.hpp"
#include "syzcert/rr_hilbert.hpp"
#include "syzcert/weyl.hpp"

#include <json.hpp>

#include <string>

namespace syzcert {

struct VerifyReport;

// All reports use insertion-ordered JSON with rationals in "p/q" text form,
// so parse + dump round-trips byte-identically.
using Json = nlohmann::ordered_json;

std::string dump_json(const Json& j);

Json rational_to_json(const Rational& q);
Json poly_to_json(const Polynomial& p);

Json criterion_report_to_json(const CriterionReport& report);
Json monotone_result_to_json(const MonotoneResult& result);
Json certificate_to_json(const StabilityCertificate& cert);
Json syzygy_data_to_json(const SyzygyData& data);
Json nonneg_to_json(const NonnegResult& result);
Json ci_case_to_json(const MultiDegree& md);
Json root_table_to_json(const RootTable& rt);
Json verify_report_to_json(const VerifyReport& report);

}  // namespace syzcert
