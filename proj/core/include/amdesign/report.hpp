#pragma once

// JSON (schema "am-designs/1") and text renderings of analysis results.
// Every number is emitted as a decimal or "p/q" string.

#include "amdesign/am.hpp"
#include "amdesign/code.hpp"
#include "amdesign/criteria.hpp"
#include "amdesign/design.hpp"
#include "amdesign/harmonic.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <string_view>

namespace amdesign {

inline constexpr std::string_view kReportSchema = "am-designs/1";

void to_json(nlohmann::json& j, const WeightDistribution& w);
void from_json(const nlohmann::json& j, WeightDistribution& w);

void to_json(nlohmann::json& j, const DesignWitness& w);
void from_json(const nlohmann::json& j, DesignWitness& w);
void to_json(nlohmann::json& j, const DesignVerdict& v);
void from_json(const nlohmann::json& j, DesignVerdict& v);

void to_json(nlohmann::json& j, const WeightStrength& s);
void from_json(const nlohmann::json& j, WeightStrength& s);
void to_json(nlohmann::json& j, const StrengthTable& t);
void from_json(const nlohmann::json& j, StrengthTable& t);

void to_json(nlohmann::json& j, const AMReport& r);
void from_json(const nlohmann::json& j, AMReport& r);
void to_json(nlohmann::json& j, const TheoremVerdict& v);
void from_json(const nlohmann::json& j, TheoremVerdict& v);

void to_json(nlohmann::json& j, const HarmonicEnumerator& z);
void from_json(const nlohmann::json& j, HarmonicEnumerator& z);

void to_json(nlohmann::json& j, const CandidateOutcome& c);
void from_json(const nlohmann::json& j, CandidateOutcome& c);
void to_json(nlohmann::json& j, const CriterionReport& r);
void from_json(const nlohmann::json& j, CriterionReport& r);
void to_json(nlohmann::json& j, const IdentityCheck& c);
void from_json(const nlohmann::json& j, IdentityCheck& c);
void to_json(nlohmann::json& j, const DiophantineSolution& s);
void from_json(const nlohmann::json& j, DiophantineSolution& s);

bool operator==(const CriterionParams& a, const CriterionParams& b);
bool operator==(const CriterionReport& a, const CriterionReport& b);

/// {"schema": "am-designs/1", "command": command, "result": result}
nlohmann::json make_report(std::string_view command, nlohmann::json result);

/// Throws InvalidArgument on a missing or unknown schema tag.
const nlohmann::json& report_result(const nlohmann::json& report);

/// Indented "key: value" listing of the same tree.
std::string render_text(const nlohmann::json& report);

}  // namespace amdesign
