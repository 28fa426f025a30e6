#pragma once

// Text formats: rule-set files, distribution and configuration literals,
// JSON report serialization, PGM/CSV diagram export.

#include <string>

#include <json.hpp>

#include "nuca/conservation.hpp"
#include "nuca/core.hpp"
#include "nuca/injectivity.hpp"
#include "nuca/linear_dynamics.hpp"
#include "nuca/simulation.hpp"
#include "nuca/surjectivity.hpp"

namespace nuca {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Parse the line-oriented rule-set format:
///   alphabet <s>
///   radius <r>
///   rule <name> table <s^{2r+1} letters in index order>
///   rule <name> linear <2r+1 coefficients>
/// `radius` applies to the rule lines that follow it; `#` starts a comment.
RuleSetPtr parse_rule_set(const std::string& text);
RuleSetPtr load_rule_set(const std::string& path);

/// `uniform=<name>` or `left=(a b ...) mid=(...) right=(...) anchor=<i>`
/// (anchor defaults to 0, mid=() allowed).
Distribution parse_distribution(const RuleSetPtr& rs, const std::string& literal);

/// `zero`, `single:<letter>@<pos>`, or the left/mid/right/anchor grammar
/// with integer letters.
Configuration parse_configuration(const Alphabet& a, const std::string& literal);

nlohmann::json ep_word_json(const EpWord& w);
nlohmann::json rule_word_json(const RuleSet& rs, const RuleWord& psi);
nlohmann::json report_json(const RuleSet& rs, const SurjectivityReport& rep);
nlohmann::json report_json(const InjectivityReport& rep);
nlohmann::json report_json(const RuleSet& rs, const NcReport& rep);
nlohmann::json report_json(const RuleSet& rs, const DynamicsReport& rep);
nlohmann::json charge_series_json(const ChargeSeries& series);
nlohmann::json empirical_json(const EmpiricalSummary& sum);

/// PGM "P2": maxval s-1, letter 0 rendered white, s-1 black.
std::string space_time_pgm(const SpaceTimeDiagram& d, int alphabet_size);
std::string space_time_csv(const SpaceTimeDiagram& d);
std::string space_time_text(const SpaceTimeDiagram& d);

}  // namespace nuca
