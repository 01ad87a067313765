#include "slet/record.hpp"

#include "slet/errors.hpp"

namespace slet {

using nlohmann::json;

namespace oracle {

void to_json(json& j, const OracleResult& r) {
    j = json{{"k", r.k},
             {"energy", r.energy},
             {"energy_refined", r.energy_refined},
             {"energy_extrapolated", r.energy_extrapolated},
             {"box_shift", r.box_shift},
             {"converged", r.converged}};
}

void from_json(const json& j, OracleResult& r) {
    j.at("k").get_to(r.k);
    j.at("energy").get_to(r.energy);
    j.at("energy_refined").get_to(r.energy_refined);
    j.at("energy_extrapolated").get_to(r.energy_extrapolated);
    j.at("box_shift").get_to(r.box_shift);
    j.at("converged").get_to(r.converged);
}

}  // namespace oracle

namespace {

TermOrder term_order_from(const std::string& s) {
    if (s == "0") return TermOrder::E0_only;
    if (s == "2") return TermOrder::through_E2;
    if (s == "3") return TermOrder::through_E3;
    throw UsageError("unknown term order '" + s + "'");
}

}  // namespace

void to_json(json& j, const SolverSettings& s) {
    j = json{{"bracket_lo", s.bracket_lo},
             {"bracket_hi", s.bracket_hi},
             {"scan_points", s.scan_points},
             {"root_tol", s.root_tol},
             {"terms", std::string(term_order_name(s.term_order))}};
}

void from_json(const json& j, SolverSettings& s) {
    j.at("bracket_lo").get_to(s.bracket_lo);
    j.at("bracket_hi").get_to(s.bracket_hi);
    j.at("scan_points").get_to(s.scan_points);
    j.at("root_tol").get_to(s.root_tol);
    s.term_order = term_order_from(j.at("terms").get<std::string>());
}

void to_json(json& j, const Candidate& c) {
    j = json{{"r0", c.r0}, {"lbar", c.lbar}, {"E0", c.E0}, {"curvature", c.curvature}, {"is_minimum", c.is_minimum}};
}

void from_json(const json& j, Candidate& c) {
    j.at("r0").get_to(c.r0);
    j.at("lbar").get_to(c.lbar);
    j.at("E0").get_to(c.E0);
    j.at("curvature").get_to(c.curvature);
    j.at("is_minimum").get_to(c.is_minimum);
}

void to_json(json& j, const AnharmonicCoeffs& c) {
    j = json{{"eps", c.eps}, {"delta", c.dlt}, {"e", c.e}, {"d", c.d}};
}

void from_json(const json& j, AnharmonicCoeffs& c) {
    j.at("eps").get_to(c.eps);
    j.at("delta").get_to(c.dlt);
    j.at("e").get_to(c.e);
    j.at("d").get_to(c.d);
}

void to_json(json& j, const Breakdown& b) {
    j = json{{"r0", b.r0},
             {"w", b.w},
             {"beta", b.beta},
             {"lbar", b.lbar},
             {"Q", b.Q},
             {"E0", b.E0},
             {"E1", b.E1},
             {"E2_over_lbar2", b.E2_over_lbar2},
             {"E3_over_lbar3", b.E3_over_lbar3},
             {"E_total", b.E_total},
             {"alpha1", b.alpha1},
             {"alpha2", b.alpha2},
             {"coefficients", b.coeffs},
             {"residual", b.residual},
             {"candidates", b.candidates}};
}

void from_json(const json& j, Breakdown& b) {
    j.at("r0").get_to(b.r0);
    j.at("w").get_to(b.w);
    j.at("beta").get_to(b.beta);
    j.at("lbar").get_to(b.lbar);
    j.at("Q").get_to(b.Q);
    j.at("E0").get_to(b.E0);
    j.at("E1").get_to(b.E1);
    j.at("E2_over_lbar2").get_to(b.E2_over_lbar2);
    j.at("E3_over_lbar3").get_to(b.E3_over_lbar3);
    j.at("E_total").get_to(b.E_total);
    j.at("alpha1").get_to(b.alpha1);
    j.at("alpha2").get_to(b.alpha2);
    j.at("coefficients").get_to(b.coeffs);
    j.at("residual").get_to(b.residual);
    j.at("candidates").get_to(b.candidates);
}

void to_json(json& j, const ProblemEcho& p) {
    j = json{{"dim", p.dim},       {"l", p.l},           {"n_radial", p.n_radial},
             {"potential", p.potential}, {"params", p.params}, {"solver", p.solver}};
}

void from_json(const json& j, ProblemEcho& p) {
    j.at("dim").get_to(p.dim);
    j.at("l").get_to(p.l);
    j.at("n_radial").get_to(p.n_radial);
    j.at("potential").get_to(p.potential);
    j.at("params").get_to(p.params);
    j.at("solver").get_to(p.solver);
}

void to_json(json& j, const Discrepancy& d) {
    j = json{{"id", d.id},
             {"case", d.case_label},
             {"published", d.published},
             {"computed", d.computed},
             {"reference", d.reference ? json(*d.reference) : json(nullptr)},
             {"reference_source", d.reference_source},
             {"resolution", d.resolution}};
}

json payload_json(const RunRecord& r) {
    json j{{"command", r.command}, {"problem", r.problem}, {"result", r.result}};
    if (r.oracle) j["oracle"] = *r.oracle;
    return j;
}

json to_json(const RunRecord& r, bool with_header) {
    json j = payload_json(r);
    if (with_header) j["header"] = json{{"tool", "slet"}, {"version", r.version}, {"timestamp", r.timestamp}};
    return j;
}

RunRecord record_from_json(const json& j) {
    RunRecord r;
    j.at("command").get_to(r.command);
    j.at("problem").get_to(r.problem);
    j.at("result").get_to(r.result);
    if (j.contains("oracle")) r.oracle = j.at("oracle").get<oracle::OracleResult>();
    if (j.contains("header")) {
        j["header"].at("timestamp").get_to(r.timestamp);
        j["header"].at("version").get_to(r.version);
    }
    return r;
}

}  // namespace slet
