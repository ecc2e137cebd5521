#include "prescount/json_io.hpp"

namespace prescount {

using nlohmann::json;

json group_to_json(const GroupStructure& gs) {
    const Prescription& p = gs.prescription();
    json factors = json::array();
    for (std::size_t i = 0; i < gs.generators().size(); ++i) {
        factors.push_back({{"generator", poly_to_string(gs.generators()[i].rep)},
                           {"order", gs.orders()[i]}});
    }
    json out{{"order", gs.order()},
             {"factors", factors},
             {"type", p.kind == Kind::I ? "I" : "II"},
             {"ell", p.ell},
             {"R", gs.root_order()},
             {"field", p.field.to_spec()}};
    if (p.kind == Kind::I) out["t"] = p.t;
    return out;
}

namespace {

json cyclo_coeffs(const CycloNum& v) {
    json arr = json::array();
    for (const Rat& r : v.c) arr.push_back(r.get_str());
    return arr;
}

json ipoly_coeffs(const IPoly& f) {
    json arr = json::array();
    for (const Int& c : f.c) arr.push_back(c.get_str());
    return arr;
}

}  // namespace

json zeta_to_json(const Prescription& p, const GroupStructure& gs, const ZetaData& z,
                  const CycloCtx& ctx) {
    json numerators = json::array();
    for (const auto& [j, P] : z.numerators) {
        json coeffs = json::array();
        for (const CycloNum& c : P.c) coeffs.push_back(cyclo_coeffs(c));
        numerators.push_back({{"index", j}, {"coeffs", coeffs}});
    }
    return json{{"field", p.field.to_spec()},
                {"type", p.kind == Kind::I ? "I" : "II"},
                {"ell", p.ell},
                {"t", p.kind == Kind::I ? json(p.t) : json(nullptr)},
                {"tau", p.tau()},
                {"R", ctx.R()},
                {"orders", gs.orders()},
                {"trivial", {{"num", ipoly_coeffs(z.trivial_num)}, {"den", ipoly_coeffs(z.trivial_den)}}},
                {"numerators", numerators}};
}

json report_to_json(const OracleReport& rep) {
    json checks = json::array();
    for (const auto& c : rep.checks) {
        checks.push_back({{"kind", std::string(1, c.kind)},
                          {"n", c.n},
                          {"class_index", c.class_index},
                          {"expected", c.expected.get_str()},
                          {"computed", c.computed.get_str()},
                          {"pass", c.pass}});
    }
    json out{{"instance", rep.instance},
             {"pass", rep.pass},
             {"elapsed_seconds", rep.elapsed_seconds},
             {"checks", checks}};
    if (!rep.pass) out["first_mismatch"] = rep.first_mismatch;
    return out;
}

}  // namespace prescount
