#include "amdesign/io.hpp"

#include "amdesign/error.hpp"

#include <nlohmann/json.hpp>

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace amdesign {

namespace {

struct Line {
    std::size_t number;
    std::string_view text;
};

std::vector<Line> content_lines(std::string_view text) {
    std::vector<Line> lines;
    std::size_t number = 0;
    while (!text.empty() || number == 0) {
        ++number;
        const auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        const auto first = line.find_first_not_of(" \t");
        if (first != std::string_view::npos && line[first] != '#') lines.push_back({number, line});
        if (text.empty()) break;
    }
    return lines;
}

int digit_value(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'A' && c <= 'C') return c - 'A' + 10;
    if (c >= 'a' && c <= 'c') return c - 'a' + 10;
    return -1;
}

char digit_char(unsigned v) { return v < 10 ? static_cast<char>('0' + v) : static_cast<char>('A' + v - 10); }

struct Header {
    unsigned q;
    std::size_t n;
    std::size_t k;
};

LinearCode build(const Header& h, const std::vector<std::string>& rows, const std::vector<std::size_t>& line_numbers,
                 std::string name) {
    try {
        require_supported_modulus(h.q);
    } catch (const Error& e) {
        throw Error(ErrorKind::MalformedHeader, e.what(), SourceLocation{line_numbers.empty() ? 1 : line_numbers[0], 1});
    }
    if (h.n == 0 || h.k == 0 || h.k > h.n)
        throw Error(ErrorKind::MalformedHeader, "header needs n >= k >= 1", SourceLocation{1, 1});
    if (rows.size() != h.k)
        throw Error(ErrorKind::MalformedRow,
                    "expected " + std::to_string(h.k) + " rows, found " + std::to_string(rows.size()));

    Matrix g(h.k, h.n, h.q);
    for (std::size_t r = 0; r < h.k; ++r) {
        const std::size_t line = r + 1 < line_numbers.size() ? line_numbers[r + 1] : 0;
        const std::string& row = rows[r];
        std::size_t col = 0;
        for (std::size_t i = 0; i < row.size(); ++i) {
            const char c = row[i];
            if (c == ' ' || c == '\t') continue;
            const int v = digit_value(c);
            if (v < 0 || static_cast<unsigned>(v) >= h.q)
                throw Error(ErrorKind::BadDigit,
                            std::string("bad digit '") + c + "' for q = " + std::to_string(h.q),
                            SourceLocation{line, i + 1});
            if (col >= h.n)
                throw Error(ErrorKind::MalformedRow, "row longer than n = " + std::to_string(h.n),
                            SourceLocation{line, i + 1});
            g.set(r, col++, static_cast<unsigned>(v));
        }
        if (col != h.n)
            throw Error(ErrorKind::MalformedRow,
                        "row has " + std::to_string(col) + " digits, expected " + std::to_string(h.n),
                        SourceLocation{line, row.size() + 1});
    }
    const auto r = rank(g);
    if (r != h.k)
        throw Error(ErrorKind::RankDeficient, "generator rows are dependent: rank " + std::to_string(r));
    return LinearCode(std::move(g), std::move(name));
}

std::size_t parse_count(std::string_view token, std::size_t line, std::size_t column) {
    std::size_t v = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc{} || ptr != token.data() + token.size())
        throw Error(ErrorKind::MalformedHeader, "expected a nonnegative integer, got '" + std::string(token) + "'",
                    SourceLocation{line, column});
    return v;
}

}  // namespace

LinearCode parse_code_file(std::string_view text, std::string name) {
    const auto lines = content_lines(text);
    if (lines.empty()) throw Error(ErrorKind::MalformedHeader, "missing header line \"q n k\"", SourceLocation{1, 1});

    const Line& head = lines.front();
    std::vector<std::pair<std::string_view, std::size_t>> tokens;
    for (std::size_t i = 0; i < head.text.size();) {
        while (i < head.text.size() && (head.text[i] == ' ' || head.text[i] == '\t')) ++i;
        const std::size_t start = i;
        while (i < head.text.size() && head.text[i] != ' ' && head.text[i] != '\t') ++i;
        if (i > start) tokens.emplace_back(head.text.substr(start, i - start), start + 1);
    }
    if (tokens.size() != 3)
        throw Error(ErrorKind::MalformedHeader, "header must be \"q n k\"", SourceLocation{head.number, 1});
    Header h{};
    h.q = static_cast<unsigned>(parse_count(tokens[0].first, head.number, tokens[0].second));
    h.n = parse_count(tokens[1].first, head.number, tokens[1].second);
    h.k = parse_count(tokens[2].first, head.number, tokens[2].second);

    std::vector<std::string> rows;
    std::vector<std::size_t> numbers{head.number};
    for (std::size_t i = 1; i < lines.size(); ++i) {
        if (rows.size() == h.k)
            throw Error(ErrorKind::MalformedRow, "more than k = " + std::to_string(h.k) + " rows",
                        SourceLocation{lines[i].number, 1});
        rows.emplace_back(lines[i].text);
        numbers.push_back(lines[i].number);
    }
    return build(h, rows, numbers, std::move(name));
}

LinearCode parse_code_json(std::string_view text, std::string name) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(ErrorKind::MalformedHeader, std::string("invalid JSON: ") + e.what());
    }
    auto number = [&](const char* key) -> std::size_t {
        if (!j.contains(key)) throw Error(ErrorKind::MalformedHeader, std::string("missing field \"") + key + "\"");
        const auto& v = j.at(key);
        if (v.is_number_unsigned()) return v.get<std::size_t>();
        if (v.is_string()) return parse_count(v.get<std::string>(), 1, 1);
        throw Error(ErrorKind::MalformedHeader, std::string("field \"") + key + "\" must be a nonnegative integer");
    };
    Header h{static_cast<unsigned>(number("q")), number("n"), number("k")};
    if (!j.contains("rows") || !j.at("rows").is_array())
        throw Error(ErrorKind::MalformedRow, "missing array field \"rows\"");
    std::vector<std::string> rows;
    std::vector<std::size_t> numbers{0};
    for (const auto& r : j.at("rows")) {
        if (!r.is_string()) throw Error(ErrorKind::MalformedRow, "rows must be digit strings");
        rows.push_back(r.get<std::string>());
        numbers.push_back(0);
    }
    if (name.empty() && j.contains("name") && j.at("name").is_string()) name = j.at("name").get<std::string>();
    return build(h, rows, numbers, std::move(name));
}

LinearCode parse_code(std::string_view text, std::string name) {
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string_view::npos && text[first] == '{') return parse_code_json(text, std::move(name));
    return parse_code_file(text, std::move(name));
}

LinearCode load_code(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_code(buffer.str(), path.stem().string());
}

std::string format_code_file(const LinearCode& code) {
    std::ostringstream os;
    if (!code.name().empty()) os << "# " << code.name() << "\n";
    os << code.modulus() << " " << code.length() << " " << code.dimension() << "\n";
    for (std::size_t r = 0; r < code.dimension(); ++r) {
        for (auto v : code.generator().row(r)) os << digit_char(v);
        os << "\n";
    }
    return os.str();
}

}  // namespace amdesign
