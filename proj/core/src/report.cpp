#include "amdesign/report.hpp"

#include "amdesign/error.hpp"

#include <algorithm>
#include <sstream>

namespace amdesign {

using nlohmann::json;

namespace {

template <class T>
std::string str(const T& v) {
    if constexpr (std::is_same_v<T, Rational> || std::is_same_v<T, BigInt>)
        return to_string(v);
    else
        return std::to_string(v);
}

std::uint64_t u64(const json& j) {
    if (j.is_number_unsigned()) return j.get<std::uint64_t>();
    const std::string s = j.get<std::string>();
    std::size_t pos = 0;
    const auto v = std::stoull(s, &pos);
    if (pos != s.size()) throw Error(ErrorKind::InvalidArgument, "not an unsigned integer: '" + s + "'");
    return v;
}

std::int64_t i64(const json& j) {
    if (j.is_number_integer()) return j.get<std::int64_t>();
    const std::string s = j.get<std::string>();
    std::size_t pos = 0;
    const auto v = std::stoll(s, &pos);
    if (pos != s.size()) throw Error(ErrorKind::InvalidArgument, "not an integer: '" + s + "'");
    return v;
}

std::size_t size(const json& j) { return static_cast<std::size_t>(u64(j)); }

json size_list(const std::vector<std::size_t>& v) {
    json a = json::array();
    for (auto x : v) a.push_back(str(x));
    return a;
}

std::vector<std::size_t> parse_size_list(const json& j) {
    std::vector<std::size_t> v;
    for (const auto& x : j) v.push_back(size(x));
    return v;
}

// Points are rendered 1-based.
json point_list(const std::vector<std::size_t>& v) {
    json a = json::array();
    for (auto x : v) a.push_back(str(x + 1));
    return a;
}

std::vector<std::size_t> parse_point_list(const json& j) {
    std::vector<std::size_t> v;
    for (const auto& x : j) v.push_back(size(x) - 1);
    return v;
}

json optional_rational(const std::optional<Rational>& r) { return r ? json(to_string(*r)) : json(nullptr); }

std::optional<Rational> parse_optional_rational(const json& j) {
    if (j.is_null()) return std::nullopt;
    return parse_rational(j.get<std::string>());
}

bool is_flat_array(const json& j) {
    return j.is_array() && std::all_of(j.begin(), j.end(), [](const json& e) { return e.is_primitive(); });
}

void render(std::ostream& os, const json& j, const std::string& indent) {
    if (j.is_object()) {
        for (const auto& [key, value] : j.items()) {
            if (value.is_structured() && !value.empty() && !is_flat_array(value)) {
                os << indent << key << ":\n";
                render(os, value, indent + "  ");
            } else {
                os << indent << key << ": ";
                render(os, value, "");
                os << "\n";
            }
        }
    } else if (j.is_array()) {
        if (is_flat_array(j)) {
            os << indent << "[";
            for (std::size_t i = 0; i < j.size(); ++i) {
                if (i != 0) os << ", ";
                render(os, j[i], "");
            }
            os << "]";
            if (!indent.empty()) os << "\n";
        } else {
            for (std::size_t i = 0; i < j.size(); ++i) {
                os << indent << "- [" << i << "]\n";
                render(os, j[i], indent + "  ");
            }
        }
    } else if (j.is_string()) {
        os << j.get<std::string>();
    } else if (j.is_null()) {
        os << "none";
    } else {
        os << j.dump();
    }
}

}  // namespace

void to_json(json& j, const WeightDistribution& w) {
    json counts = json::object();
    for (std::size_t u = 0; u <= w.length(); ++u)
        if (w.count(u) != 0) counts[str(u)] = str(w.count(u));
    j = json{{"n", str(w.length())}, {"total", str(w.total())}, {"counts", counts}};
}

void from_json(const json& j, WeightDistribution& w) {
    std::vector<std::uint64_t> counts(size(j.at("n")) + 1, 0);
    for (const auto& [key, value] : j.at("counts").items()) counts.at(std::stoull(key)) = u64(value);
    w = WeightDistribution(std::move(counts));
}

void to_json(json& j, const DesignWitness& w) {
    j = json{{"first", point_list(w.first)},
             {"first_count", str(w.first_count)},
             {"second", point_list(w.second)},
             {"second_count", str(w.second_count)}};
}

void from_json(const json& j, DesignWitness& w) {
    w.first = parse_point_list(j.at("first"));
    w.first_count = u64(j.at("first_count"));
    w.second = parse_point_list(j.at("second"));
    w.second_count = u64(j.at("second_count"));
}

void to_json(json& j, const DesignVerdict& v) {
    j = json{{"t", str(v.t)}, {"is_design", v.is_design}, {"lambda", optional_rational(v.lambda)}};
    j["witness"] = v.witness ? json(*v.witness) : json(nullptr);
}

void from_json(const json& j, DesignVerdict& v) {
    v.t = size(j.at("t"));
    v.is_design = j.at("is_design").get<bool>();
    v.lambda = parse_optional_rational(j.at("lambda"));
    v.witness.reset();
    if (!j.at("witness").is_null()) v.witness = j.at("witness").get<DesignWitness>();
}

void to_json(json& j, const WeightStrength& s) {
    j = json{{"weight", str(s.weight)}, {"blocks", str(s.blocks)}, {"strength", str(s.strength)}, {"capped", s.capped}};
}

void from_json(const json& j, WeightStrength& s) {
    s.weight = size(j.at("weight"));
    s.blocks = u64(j.at("blocks"));
    s.strength = size(j.at("strength"));
    s.capped = j.at("capped").get<bool>();
}

void to_json(json& j, const StrengthTable& t) {
    j = json{{"delta", str(t.delta)},   {"s", str(t.s)},         {"delta_capped", t.delta_capped},
             {"s_capped", t.s_capped}, {"probe", str(t.probe)}, {"per_weight", t.per_weight}};
}

void from_json(const json& j, StrengthTable& t) {
    t.delta = size(j.at("delta"));
    t.s = size(j.at("s"));
    t.delta_capped = j.at("delta_capped").get<bool>();
    t.s_capped = j.at("s_capped").get<bool>();
    t.probe = size(j.at("probe"));
    t.per_weight = j.at("per_weight").get<std::vector<WeightStrength>>();
}

void to_json(json& j, const AMReport& r) {
    json window = json::array();
    for (const auto& w : r.window) window.push_back({{"t", str(w.t)}, {"weights", str(w.weights)}});
    j = json{{"n", str(r.n)},
             {"d_dual", str(r.d_dual)},
             {"code_weights", size_list(r.code_weights)},
             {"dual_weights", size_list(r.dual_weights)},
             {"admissible_t", size_list(r.admissible_t)},
             {"t", r.t ? json(str(*r.t)) : json(nullptr)},
             {"design_guarantee", r.t.has_value()},
             {"window", window}};
}

void from_json(const json& j, AMReport& r) {
    r.n = size(j.at("n"));
    r.d_dual = size(j.at("d_dual"));
    r.code_weights = parse_size_list(j.at("code_weights"));
    r.dual_weights = parse_size_list(j.at("dual_weights"));
    r.admissible_t = parse_size_list(j.at("admissible_t"));
    r.t = j.at("t").is_null() ? std::nullopt : std::optional<std::size_t>(size(j.at("t")));
    r.window.clear();
    for (const auto& w : j.at("window")) r.window.push_back({size(w.at("t")), size(w.at("weights"))});
}

void to_json(json& j, const TheoremVerdict& v) {
    j = json{{"theorem", to_string(v.theorem)},
             {"applicable", v.applicable},
             {"branch", str(v.branch)},
             {"consistent", v.consistent},
             {"n", str(v.n)},
             {"k", str(v.k)},
             {"d", str(v.d)},
             {"d_dual", str(v.d_dual)},
             {"t", str(v.t)},
             {"detail", v.detail}};
}

void from_json(const json& j, TheoremVerdict& v) {
    v.theorem = parse_theorem_id(j.at("theorem").get<std::string>());
    v.applicable = j.at("applicable").get<bool>();
    v.branch = static_cast<int>(i64(j.at("branch")));
    v.consistent = j.at("consistent").get<bool>();
    v.n = size(j.at("n"));
    v.k = size(j.at("k"));
    v.d = size(j.at("d"));
    v.d_dual = size(j.at("d_dual"));
    v.t = size(j.at("t"));
    v.detail = j.at("detail").get<std::string>();
}

void to_json(json& j, const HarmonicEnumerator& z) {
    json coeffs = json::array();
    for (const auto& c : z.coeffs) coeffs.push_back(to_string(c));
    j = json{{"n", str(z.n)}, {"k", str(z.k)}, {"coeffs", coeffs}};
    if (2 * z.k <= z.n) j["reduced"] = z.reduced().to_string();
}

void from_json(const json& j, HarmonicEnumerator& z) {
    z.n = size(j.at("n"));
    z.k = size(j.at("k"));
    z.coeffs.clear();
    for (const auto& c : j.at("coeffs")) z.coeffs.emplace_back(c.get<std::string>());
}

void to_json(json& j, const CandidateOutcome& c) {
    j = json{{"weight", str(c.weight)},
             {"blocks", str(c.blocks)},
             {"is_design", c.is_design},
             {"complete", c.complete},
             {"lambda", optional_rational(c.lambda)}};
}

void from_json(const json& j, CandidateOutcome& c) {
    c.weight = size(j.at("weight"));
    c.blocks = u64(j.at("blocks"));
    c.is_design = j.at("is_design").get<bool>();
    c.complete = j.at("complete").get<bool>();
    c.lambda = parse_optional_rational(j.at("lambda"));
}

void to_json(json& j, const CriterionReport& r) {
    json alpha = json::array();
    json beta = json::array();
    for (auto a : r.alpha) alpha.push_back(str(a));
    for (auto b : r.beta) beta.push_back(str(b));
    json values = json::array();
    for (const auto& v : r.values) values.push_back(to_string(v));
    j = json{{"case", str(r.case_number)},
             {"n", str(r.params.n)},
             {"t", str(r.params.t)},
             {"q", str(r.params.q)},
             {"weights", size_list(r.params.weights)},
             {"alpha", alpha},
             {"beta", beta},
             {"degenerate", r.degenerate},
             {"values", values},
             {"roots", size_list(r.roots)},
             {"candidate_weights", size_list(r.candidate_weights)},
             {"actionable", size_list(r.actionable)},
             {"outcomes", r.outcomes},
             {"anomaly", r.anomaly},
             {"notes", r.notes}};
}

void from_json(const json& j, CriterionReport& r) {
    r.case_number = static_cast<int>(i64(j.at("case")));
    r.params.n = size(j.at("n"));
    r.params.t = size(j.at("t"));
    r.params.q = static_cast<unsigned>(u64(j.at("q")));
    r.params.weights = parse_size_list(j.at("weights"));
    r.alpha.clear();
    r.beta.clear();
    for (const auto& a : j.at("alpha")) r.alpha.push_back(i64(a));
    for (const auto& b : j.at("beta")) r.beta.push_back(i64(b));
    r.degenerate = j.at("degenerate").get<bool>();
    r.values.clear();
    for (const auto& v : j.at("values")) r.values.push_back(parse_rational(v.get<std::string>()));
    r.roots = parse_size_list(j.at("roots"));
    r.candidate_weights = parse_size_list(j.at("candidate_weights"));
    r.actionable = parse_size_list(j.at("actionable"));
    r.outcomes = j.at("outcomes").get<std::vector<CandidateOutcome>>();
    r.anomaly = j.at("anomaly").get<bool>();
    r.notes = j.at("notes").get<std::vector<std::string>>();
}

void to_json(json& j, const IdentityCheck& c) {
    j = json{{"variant", to_string(c.variant)},
             {"lhs", to_string(c.lhs)},
             {"rhs", to_string(c.rhs)},
             {"holds", c.holds},
             {"applicable", c.applicable},
             {"d_dual", str(c.d_dual)},
             {"required_d_dual", str(c.required_d_dual)}};
}

void from_json(const json& j, IdentityCheck& c) {
    const auto variant = j.at("variant").get<std::string>();
    if (variant == "two-weight")
        c.variant = IdentityVariant::TwoWeight;
    else if (variant == "three-weight")
        c.variant = IdentityVariant::ThreeWeight;
    else if (variant == "three-weight-full-length")
        c.variant = IdentityVariant::ThreeWeightFullLength;
    else
        throw Error(ErrorKind::InvalidArgument, "unknown identity variant '" + variant + "'");
    c.lhs = BigInt(j.at("lhs").get<std::string>());
    c.rhs = BigInt(j.at("rhs").get<std::string>());
    c.holds = j.at("holds").get<bool>();
    c.applicable = j.at("applicable").get<bool>();
    c.d_dual = size(j.at("d_dual"));
    c.required_d_dual = size(j.at("required_d_dual"));
}

void to_json(json& j, const DiophantineSolution& s) { j = json{{"n", str(s.n)}, {"k", str(s.k)}}; }

void from_json(const json& j, DiophantineSolution& s) {
    s.n = u64(j.at("n"));
    s.k = u64(j.at("k"));
}

bool operator==(const CriterionParams& a, const CriterionParams& b) {
    return a.n == b.n && a.t == b.t && a.weights == b.weights && a.q == b.q;
}

bool operator==(const CriterionReport& a, const CriterionReport& b) {
    return a.case_number == b.case_number && a.params == b.params && a.alpha == b.alpha && a.beta == b.beta &&
           a.degenerate == b.degenerate && a.values == b.values && a.roots == b.roots &&
           a.candidate_weights == b.candidate_weights && a.actionable == b.actionable && a.outcomes == b.outcomes &&
           a.anomaly == b.anomaly && a.notes == b.notes;
}

json make_report(std::string_view command, json result) {
    return json{{"schema", std::string(kReportSchema)}, {"command", std::string(command)}, {"result", std::move(result)}};
}

const json& report_result(const json& report) {
    if (!report.contains("schema") || report.at("schema") != kReportSchema)
        throw Error(ErrorKind::InvalidArgument, "report schema must be " + std::string(kReportSchema));
    return report.at("result");
}

std::string render_text(const json& report) {
    std::ostringstream os;
    render(os, report, "");
    return os.str();
}

}  // namespace amdesign
