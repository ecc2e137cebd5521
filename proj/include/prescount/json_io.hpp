#pragma once

// JSON wire forms.  Polynomials are dense comma-separated constant-first
// coefficient encodings ("1,1,0,0,1" = x^4+x+1 over F_2); cyclotomic
// coefficients are exact rational strings ("num/den"), never floats.

#include <json.hpp>

#include "prescount/counting.hpp"
#include "prescount/oracle.hpp"

namespace prescount {

nlohmann::json group_to_json(const GroupStructure& gs);
nlohmann::json zeta_to_json(const Prescription& p, const GroupStructure& gs, const ZetaData& z,
                            const CycloCtx& ctx);
nlohmann::json report_to_json(const OracleReport& rep);

}  // namespace prescount
