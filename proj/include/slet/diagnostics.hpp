#pragma once

#include <optional>
#include <string>
#include <vector>

#include "slet/oracle.hpp"

namespace slet {

/// A place where a published closed form disagrees with what the general
/// machinery computes, together with an independent reference and the outcome.
struct Discrepancy {
    std::string id;
    std::string case_label;  ///< potential and quantum numbers of the counterexample
    double published = 0.0;  ///< value of the formula as printed
    double computed = 0.0;   ///< value from the general expansion
    std::optional<double> reference;
    std::string reference_source;
    std::string resolution;
};

/// Evaluates every known discrepancy. The zero-field donor entry runs the
/// finite-difference oracle with `config`.
std::vector<Discrepancy> discrepancy_report(const oracle::OracleConfig& config = {});

}  // namespace slet
