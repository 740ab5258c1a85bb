#include "doctest.h"

#include "amdesign/am.hpp"
#include "amdesign/criteria.hpp"
#include "amdesign/design.hpp"
#include "amdesign/error.hpp"
#include "amdesign/harmonic.hpp"
#include "amdesign/io.hpp"
#include "amdesign/report.hpp"

#include <regex>
#include <set>

using namespace amdesign;
using nlohmann::json;

namespace {

Error error_of(std::string_view text) {
    try {
        parse_code(text);
    } catch (const Error& e) {
        return e;
    }
    FAIL("no error thrown for: " << text);
    return Error(ErrorKind::InvalidArgument, "unreachable");
}

// Every digit run that appears in a string value, as a multiset.
std::multiset<std::string> numbers_in(const std::string& s) {
    std::multiset<std::string> out;
    const std::regex number("-?[0-9]+(/[0-9]+)?");
    for (auto it = std::sregex_iterator(s.begin(), s.end(), number); it != std::sregex_iterator(); ++it)
        out.insert(it->str());
    return out;
}

void collect_strings(const json& j, std::string& acc) {
    if (j.is_string())
        acc += j.get<std::string>() + " ";
    else if (j.is_structured())
        for (const auto& v : j) collect_strings(v, acc);
}

}  // namespace

TEST_CASE("parse plain text matrices") {
    const auto rep = parse_code_file("3 4 1\n1111");
    CHECK(rep.length() == 4);
    CHECK(rep.dimension() == 1);
    CHECK(rep.modulus() == 3);

    const auto commented = parse_code("# header comment\n\n3 4 2\n1100\n\n# between\n0011\n");
    CHECK(commented.dimension() == 2);

    const auto crlf = parse_code("13 3 1\r\nAB1\r\n");
    CHECK(crlf.generator()(0, 0) == 10);
    CHECK(crlf.generator()(0, 1) == 11);
}

TEST_CASE("parse errors carry kinds and positions") {
    auto e = error_of("3 4 2\n1111\n2222");
    CHECK(e.kind() == ErrorKind::RankDeficient);
    CHECK(std::string(e.what()).find("rank 1") != std::string::npos);

    e = error_of("3 4\n1111");
    CHECK(e.kind() == ErrorKind::MalformedHeader);
    REQUIRE(e.where().has_value());
    CHECK(e.where()->line == 1);

    e = error_of("3 4 1\n1131");
    CHECK(e.kind() == ErrorKind::BadDigit);
    REQUIRE(e.where().has_value());
    CHECK(e.where()->line == 2);
    CHECK(e.where()->column == 3);

    e = error_of("3 4 1\n111");
    CHECK(e.kind() == ErrorKind::MalformedRow);

    e = error_of("3 4 2\n1111");
    CHECK(e.kind() == ErrorKind::MalformedRow);

    e = error_of("4 4 1\n1111");
    CHECK(e.kind() == ErrorKind::MalformedHeader);
}

TEST_CASE("JSON code input") {
    const auto c = parse_code(R"({"q": 3, "n": "4", "k": 1, "rows": ["1201"], "name": "tiny"})");
    CHECK(c.name() == "tiny");
    CHECK(c.generator()(0, 1) == 2);
    CHECK_THROWS_AS(parse_code(R"({"q": 3, "n": 4, "k": 2, "rows": ["1201"]})"), Error);
    CHECK_THROWS_AS(parse_code(R"({"q": 3)"), Error);
}

TEST_CASE("fixtures round-trip through the text format") {
    for (const auto& code : {construct_golay(), construct_extended_golay(), dual(construct_golay())}) {
        const auto back = parse_code_file(format_code_file(code));
        CHECK(back.generator() == code.generator());
        CHECK(weight_distribution(back) == weight_distribution(code));
    }
}

TEST_CASE("report JSON round-trips") {
    const auto g = construct_extended_golay();
    const auto d = dual(construct_golay());

    const auto wd = weight_distribution(g);
    CHECK(json(wd).get<WeightDistribution>() == wd);

    const auto verdict = is_t_design(support_design(g, 6), 6);
    CHECK(json(verdict).get<DesignVerdict>() == verdict);
    const auto ok = is_t_design(support_design(g, 6), 5);
    CHECK(json(ok).get<DesignVerdict>() == ok);

    const auto table = delta_and_s(g);
    CHECK(json(table).get<StrengthTable>() == table);

    const auto am = am_condition(g);
    CHECK(json(am).get<AMReport>() == am);

    const auto theorem = verify_theorem_instance(g, TheoremId::ThreeWeightFullLength);
    CHECK(json(theorem).get<TheoremVerdict>() == theorem);

    const auto z = harmonic_enumerator(construct_golay(), harm_basis(11, 2).front());
    CHECK(json(z).get<HarmonicEnumerator>() == z);

    const auto crit = scan_criterion(d);
    CHECK(json(crit).get<CriterionReport>() == crit);

    const auto id = check_enumerator_identity(d);
    CHECK(json(id).get<IdentityCheck>() == id);

    const auto sols = diophantine_scan(3, 2, 100);
    CHECK(json(sols).get<std::vector<DiophantineSolution>>() == sols);

    const json report = make_report("am", json(am));
    CHECK(report.at("schema") == "am-designs/1");
    CHECK(report_result(json::parse(report.dump())).get<AMReport>() == am);
    CHECK_THROWS_AS(report_result(json{{"schema", "other"}, {"result", 1}}), Error);
}

TEST_CASE("no floating point numbers in reports") {
    const json report = make_report("criterion", json(scan_criterion(dual(construct_golay()))));
    const std::string dumped = report.dump();
    std::function<void(const json&)> walk = [&](const json& j) {
        CHECK_FALSE(j.is_number_float());
        if (j.is_structured())
            for (const auto& v : j) walk(v);
    };
    walk(report);
}

TEST_CASE("text and JSON renderings carry the same numbers") {
    const std::vector<json> reports{
        make_report("am", json(am_condition(construct_extended_golay()))),
        make_report("criterion", json(scan_criterion(dual(construct_golay())))),
        make_report("design", json(is_t_design(support_design(construct_extended_golay(), 6), 6))),
    };
    for (const auto& r : reports) {
        std::string strings;
        collect_strings(r, strings);
        const std::string text = render_text(r);
        // array positions are rendered as "- [i]" markers
        const std::string values = std::regex_replace(text, std::regex("- \\[[0-9]+\\]"), "-");
        CHECK(numbers_in(values) == numbers_in(strings));
    }
}
