#include "cli.hpp"

#include "CLI11.hpp"

#include "amdesign/am.hpp"
#include "amdesign/code.hpp"
#include "amdesign/criteria.hpp"
#include "amdesign/design.hpp"
#include "amdesign/error.hpp"
#include "amdesign/harmonic.hpp"
#include "amdesign/io.hpp"
#include "amdesign/report.hpp"

#include <iostream>
#include <optional>
#include <set>

namespace amdesign::cli {

namespace {

using nlohmann::json;

struct CommonOptions {
    std::string code_path;
    std::string fixture;
    std::uint64_t budget = kDefaultBudget;
    bool json = false;
};

const std::vector<std::string> kFixtures = {"golay11", "golay11dual", "golay12"};

LinearCode fixture_code(const std::string& name) {
    if (name == "golay11") return construct_golay();
    if (name == "golay11dual") {
        LinearCode d = dual(construct_golay());
        return LinearCode(d.generator(), "golay11dual");
    }
    if (name == "golay12") return construct_extended_golay();
    throw Error(ErrorKind::InvalidArgument, "unknown fixture '" + name + "'");
}

void add_common(CLI::App* cmd, CommonOptions& opts) {
    auto* code = cmd->add_option("--code", opts.code_path, "generator matrix file (CodeFile text or JSON)");
    auto* fixture = cmd->add_option("--fixture", opts.fixture, "built-in code")->check(CLI::IsMember(kFixtures));
    code->excludes(fixture);
    cmd->add_option("--budget", opts.budget, "maximum number of codewords to enumerate")
        ->capture_default_str();
    cmd->add_flag("--json", opts.json, "emit the JSON report");
}

LinearCode load(const CommonOptions& opts) {
    if (!opts.code_path.empty()) return load_code(opts.code_path);
    if (!opts.fixture.empty()) return fixture_code(opts.fixture);
    throw Error(ErrorKind::InvalidArgument, "one of --code or --fixture is required");
}

json code_header(const LinearCode& code) {
    return json{{"name", code.name()},
                {"q", std::to_string(code.modulus())},
                {"n", std::to_string(code.length())},
                {"k", std::to_string(code.dimension())}};
}

void emit(std::ostream& out, const CommonOptions& opts, std::string_view command, json result) {
    const json report = make_report(command, std::move(result));
    if (opts.json)
        out << report.dump(2) << "\n";
    else
        out << render_text(report);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Assmus-Mattson and support-design analysis for linear codes over small prime fields", "amdesign"};
    app.require_subcommand(1);

    CommonOptions opts;
    std::size_t probe = kDefaultProbe;
    std::size_t weight = 0;
    std::size_t strength = 0;
    bool use_dual = false;
    std::string theorem_id;
    std::size_t degree = 0;
    std::optional<std::size_t> harmonic_weight;
    std::optional<std::size_t> harmonic_t;
    std::uint64_t q = 3, ell = 2, n_max = 10'000;

    auto* analyze = app.add_subcommand("analyze", "weight distributions, d, d_dual, delta(C), s(C)");
    add_common(analyze, opts);
    analyze->add_option("--probe", probe, "largest design strength to test")->capture_default_str();

    auto* design = app.add_subcommand("design", "t-design verdict for one support design");
    add_common(design, opts);
    design->add_option("--weight", weight, "codeword weight")->required();
    design->add_option("--t", strength, "design strength")->required();
    design->add_flag("--dual", use_dual, "use the dual code's supports");

    auto* am = app.add_subcommand("am", "AM-condition scan");
    add_common(am, opts);

    auto* theorem = app.add_subcommand("theorem", "check a two/three-weight classification instance");
    add_common(theorem, opts);
    theorem->add_option("--id", theorem_id, "statement id")->required()->check(CLI::IsMember({"1.1", "1.2", "1.3"}));

    auto* harmonic = app.add_subcommand("harmonic", "harmonic weight enumerators over a Harm_k basis");
    add_common(harmonic, opts);
    harmonic->add_option("--k", degree, "harmonic degree")->required();
    harmonic->add_option("--weight", harmonic_weight, "weight for the harmonic design check");
    harmonic->add_option("--t", harmonic_t, "strength for the harmonic design check");

    auto* criterion = app.add_subcommand("criterion", "binomial-sum criterion scan for (t+1)-designs in the dual");
    add_common(criterion, opts);

    auto* identity = app.add_subcommand("identity", "weight-enumerator sphere-size identity");
    add_common(identity, opts);

    auto* diophantine = app.add_subcommand("diophantine", "scan sum_{i<=ell} C(n,i)(q-1)^i = q^k");
    diophantine->add_option("--q", q, "field size")->capture_default_str();
    diophantine->add_option("--ell", ell, "number of terms")->capture_default_str();
    diophantine->add_option("--nmax", n_max, "largest n scanned")->capture_default_str();
    diophantine->add_flag("--json", opts.json, "emit the JSON report");

    auto* fixtures = app.add_subcommand("fixtures", "print the built-in codes as CodeFile text");
    fixtures->add_option("--fixture", opts.fixture, "only this fixture")->check(CLI::IsMember(kFixtures));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    const EnumerationOptions enumeration{.budget = opts.budget, .threads = 0};
    try {
        if (*analyze) {
            const LinearCode code = load(opts);
            const LinearCode dual_code = dual(code);
            const auto wd = weight_distribution(code, enumeration);
            const auto dual_wd = weight_distribution(dual_code, enumeration);
            json r = code_header(code);
            r["d"] = std::to_string(wd.min_distance().value_or(0));
            r["d_dual"] = std::to_string(dual_wd.min_distance().value_or(0));
            r["weights"] = wd;
            r["dual_weights"] = dual_wd;
            r["strengths"] = delta_and_s(code, probe, enumeration);
            r["dual_strengths"] = delta_and_s(dual_code, probe, enumeration);
            emit(out, opts, "analyze", std::move(r));
        } else if (*design) {
            const LinearCode code = load(opts);
            const LinearCode source = use_dual ? dual(code) : code;
            const DesignVerdict verdict = is_t_design(support_design(source, weight, enumeration), strength);
            json r = code_header(code);
            r["dual"] = use_dual;
            r["weight"] = std::to_string(weight);
            r["verdict"] = verdict;
            emit(out, opts, "design", std::move(r));
        } else if (*am) {
            const LinearCode code = load(opts);
            json r = code_header(code);
            r["am"] = am_condition(code, enumeration);
            emit(out, opts, "am", std::move(r));
        } else if (*theorem) {
            const LinearCode code = load(opts);
            const TheoremVerdict verdict = verify_theorem_instance(code, parse_theorem_id(theorem_id), enumeration);
            json r = code_header(code);
            r["verdict"] = verdict;
            if (!verdict.consistent) {
                r["anomaly"] = "conclusion did not match any branch; full parameter dump follows";
                r["am"] = am_condition(code, enumeration);
                r["weights"] = weight_distribution(code, enumeration);
                r["dual_weights"] = weight_distribution(dual(code), enumeration);
            }
            emit(out, opts, "theorem", std::move(r));
            return verdict.consistent ? kExitOk : kExitAnomaly;
        } else if (*harmonic) {
            const LinearCode code = load(opts);
            const LinearCode dual_code = dual(code);
            const auto basis = harm_basis(code.length(), degree);
            json r = code_header(code);
            r["degree"] = std::to_string(degree);
            r["basis_size"] = std::to_string(basis.size());
            json functions = json::array();
            bool all_proportional = true;
            std::set<std::string> scalars;
            for (std::size_t i = 0; i < basis.size(); ++i) {
                const auto z = harmonic_enumerator(code, basis[i], enumeration);
                const auto z_dual = harmonic_enumerator(dual_code, basis[i], enumeration);
                const auto transformed = dual_transform(z, code.modulus());
                const bool proportional = are_proportional(transformed.coeffs, z_dual.coeffs);
                const auto scalar = proportionality_scalar(transformed.coeffs, z_dual.coeffs);
                all_proportional = all_proportional && proportional;
                if (scalar) scalars.insert(to_string(*scalar));
                functions.push_back(json{{"index", std::to_string(i)},
                                         {"code", z},
                                         {"dual", z_dual},
                                         {"proportional", proportional},
                                         {"scalar", scalar ? json(to_string(*scalar)) : json(nullptr)}});
            }
            r["functions"] = functions;
            r["all_proportional"] = all_proportional;
            r["scalars"] = std::vector<std::string>(scalars.begin(), scalars.end());
            bool agree = true;
            if (harmonic_weight || harmonic_t) {
                if (!harmonic_weight || !harmonic_t)
                    throw Error(ErrorKind::InvalidArgument, "--weight and --t must be given together");
                const SupportDesign d = support_design(code, *harmonic_weight, enumeration);
                const bool by_harmonic = harmonic_design_check(d, *harmonic_t);
                const bool by_counting = is_t_design(d, *harmonic_t).is_design;
                agree = by_harmonic == by_counting;
                r["design_check"] = json{{"weight", std::to_string(*harmonic_weight)},
                                         {"t", std::to_string(*harmonic_t)},
                                         {"harmonic", by_harmonic},
                                         {"counting", by_counting},
                                         {"agree", agree}};
            }
            emit(out, opts, "harmonic", std::move(r));
            return agree && all_proportional ? kExitOk : kExitAnomaly;
        } else if (*criterion) {
            const LinearCode code = load(opts);
            const CriterionReport report = scan_criterion(code, enumeration);
            json r = code_header(code);
            r["criterion"] = report;
            emit(out, opts, "criterion", std::move(r));
            return report.anomaly ? kExitAnomaly : kExitOk;
        } else if (*identity) {
            const LinearCode code = load(opts);
            json r = code_header(code);
            r["identity"] = check_enumerator_identity(code, enumeration);
            emit(out, opts, "identity", std::move(r));
        } else if (*diophantine) {
            json r{{"q", std::to_string(q)}, {"ell", std::to_string(ell)}, {"nmax", std::to_string(n_max)}};
            r["solutions"] = diophantine_scan(q, ell, n_max);
            emit(out, opts, "diophantine", std::move(r));
        } else if (*fixtures) {
            const std::vector<std::string> names = opts.fixture.empty() ? kFixtures : std::vector{opts.fixture};
            for (std::size_t i = 0; i < names.size(); ++i) {
                if (i != 0) out << "\n";
                out << format_code_file(fixture_code(names[i]));
            }
        }
    } catch (const Error& e) {
        err << "amdesign: " << to_string(e.kind()) << ": " << e.what();
        if (e.where()) err << " (line " << e.where()->line << ", column " << e.where()->column << ")";
        err << "\n";
        return kExitUsage;
    }
    return kExitOk;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args, out, err);
}

}  // namespace amdesign::cli
