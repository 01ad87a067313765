#pragma once

#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "slet/diagnostics.hpp"
#include "slet/engine.hpp"
#include "slet/oracle.hpp"

namespace slet {

/// Serializable description of a problem (the potential is kept as text plus parameters).
struct ProblemEcho {
    std::string dim;  ///< "2" or "3"
    int l = 0;
    int n_radial = 0;
    std::string potential;
    ParamMap params;
    SolverSettings solver;

    friend bool operator==(const ProblemEcho&, const ProblemEcho&) = default;
};

/// One CLI run: what was asked, what came out, and provenance.
struct RunRecord {
    std::string command;
    ProblemEcho problem;
    Breakdown result;
    std::optional<oracle::OracleResult> oracle;
    std::string timestamp;
    std::string version;

    friend bool operator==(const RunRecord&, const RunRecord&) = default;
};

void to_json(nlohmann::json& j, const SolverSettings& s);
void from_json(const nlohmann::json& j, SolverSettings& s);
void to_json(nlohmann::json& j, const Candidate& c);
void from_json(const nlohmann::json& j, Candidate& c);
void to_json(nlohmann::json& j, const AnharmonicCoeffs& c);
void from_json(const nlohmann::json& j, AnharmonicCoeffs& c);
void to_json(nlohmann::json& j, const Breakdown& b);
void from_json(const nlohmann::json& j, Breakdown& b);
void to_json(nlohmann::json& j, const ProblemEcho& p);
void from_json(const nlohmann::json& j, ProblemEcho& p);
void to_json(nlohmann::json& j, const Discrepancy& d);
namespace oracle {
void to_json(nlohmann::json& j, const OracleResult& r);
void from_json(const nlohmann::json& j, OracleResult& r);
}  // namespace oracle

/// Record fields without the header (timestamp, version): the deterministic payload.
nlohmann::json payload_json(const RunRecord& r);

/// Payload plus a "header" member unless `with_header` is false.
nlohmann::json to_json(const RunRecord& r, bool with_header = true);
RunRecord record_from_json(const nlohmann::json& j);

}  // namespace slet
