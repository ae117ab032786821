#include "knotdef/records.hpp"

#include <algorithm>
#include <atomic>
#include <istream>
#include <iterator>
#include <limits>
#include <sstream>
#include <thread>

#include "knotdef/error.hpp"

namespace knotdef {

namespace {

[[noreturn]] void parse_error(const std::string& msg) { throw Error(ErrorCode::ParseError, msg); }

BigInt bigint_from_json(const Json& j) {
    if (j.is_number_integer()) return j.is_number_unsigned() ? BigInt(j.get<unsigned long long>()) : BigInt(j.get<long long>());
    if (j.is_string()) {
        const auto& s = j.get_ref<const std::string&>();
        try {
            std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
            if (start == s.size() || !std::all_of(s.begin() + static_cast<long>(start), s.end(), ::isdigit))
                parse_error("not an integer: \"" + s + "\"");
            return BigInt(s[0] == '+' ? s.substr(1) : s);
        } catch (const std::runtime_error&) {
            parse_error("not an integer: \"" + s + "\"");
        }
    }
    parse_error("expected an integer, got " + j.dump());
}

IntMatrix matrix_from_json(const Json& j) {
    if (!j.is_array()) parse_error("seifert_matrix must be an array of rows");
    std::vector<std::vector<BigInt>> rows;
    for (const auto& row : j) {
        if (!row.is_array()) parse_error("seifert_matrix rows must be arrays");
        std::vector<BigInt> r;
        for (const auto& cell : row) r.push_back(bigint_from_json(cell));
        rows.push_back(std::move(r));
    }
    return IntMatrix::from_rows(rows);
}

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(b, e - b + 1));
}

// RFC 4180 style: comma separated, double quotes protect commas and doubled quotes.
std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> cells;
    std::string cur;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char ch = line[i];
        if (quoted) {
            if (ch == '"' && i + 1 < line.size() && line[i + 1] == '"') {
                cur += '"';
                ++i;
            } else if (ch == '"') {
                quoted = false;
            } else {
                cur += ch;
            }
        } else if (ch == '"') {
            quoted = true;
        } else if (ch == ',') {
            cells.push_back(trim(cur));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    if (quoted) parse_error("unterminated quote");
    cells.push_back(trim(cur));
    return cells;
}

IntMatrix matrix_from_cell(const std::string& cell) {
    std::vector<std::vector<BigInt>> rows;
    if (trim(cell).empty()) return IntMatrix::from_rows(rows);
    std::stringstream rows_in(cell);
    std::string row_text;
    while (std::getline(rows_in, row_text, ';')) {
        std::replace(row_text.begin(), row_text.end(), ',', ' ');
        std::istringstream cells(row_text);
        std::vector<BigInt> row;
        std::string tok;
        while (cells >> tok) row.push_back(bigint_from_json(Json(tok)));
        rows.push_back(std::move(row));
    }
    return IntMatrix::from_rows(rows);
}

bool bool_from_cell(const std::string& cell) {
    std::string s = cell;
    std::transform(s.begin(), s.end(), s.begin(), ::tolower);
    if (s.empty() || s == "false" || s == "0" || s == "no") return false;
    if (s == "true" || s == "1" || s == "yes") return true;
    parse_error("not a boolean: \"" + cell + "\"");
}

ParsedRecord attempt(std::size_t index, std::string fallback_name, const std::function<KnotRecord()>& build) {
    ParsedRecord p;
    p.index = index;
    p.name = std::move(fallback_name);
    try {
        p.record = build();
        p.name = p.record->name;
    } catch (const Error& e) {
        p.error = e.what();
    } catch (const nlohmann::json::exception& e) {
        p.error = std::string("ParseError: ") + e.what();
    }
    return p;
}

std::string record_label(const Json& j, std::size_t index) {
    if (j.is_object() && j.contains("name") && j["name"].is_string()) return j["name"].get<std::string>();
    return "record #" + std::to_string(index + 1);
}

std::vector<ParsedRecord> read_json_records(const std::string& text) {
    std::vector<ParsedRecord> out;
    const std::string body = trim(text);
    if (body.empty()) return out;
    if (body.front() == '[') {
        Json doc;
        try {
            doc = Json::parse(body);
        } catch (const nlohmann::json::exception& e) {
            out.push_back({0, "input", std::nullopt, std::string("ParseError: ") + e.what()});
            return out;
        }
        for (std::size_t i = 0; i < doc.size(); ++i)
            out.push_back(attempt(i, record_label(doc[i], i), [&] { return record_from_json(doc[i]); }));
        return out;
    }
    std::istringstream lines(text);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(lines, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        const std::size_t index = out.size();
        Json j;
        std::string label = "line " + std::to_string(line_no);
        try {
            j = Json::parse(line);
            if (j.is_object() && j.contains("name") && j["name"].is_string()) label = j["name"].get<std::string>();
        } catch (const nlohmann::json::exception& e) {
            out.push_back({index, label, std::nullopt, std::string("ParseError: ") + e.what()});
            continue;
        }
        out.push_back(attempt(index, label, [&] { return record_from_json(j); }));
    }
    return out;
}

std::vector<ParsedRecord> read_csv_records(const std::string& text) {
    std::vector<ParsedRecord> out;
    std::istringstream lines(text);
    std::string line;
    std::size_t line_no = 0;
    bool first = true;
    while (std::getline(lines, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        const std::string label = "line " + std::to_string(line_no);
        if (first) {
            first = false;
            std::string lowered = trim(line);
            std::transform(lowered.begin(), lowered.end(), lowered.begin(), ::tolower);
            if (lowered.rfind("name", 0) == 0) continue;
        }
        out.push_back(attempt(out.size(), label, [&] {
            const auto cells = split_csv_line(line);
            if (cells.size() < 2 || cells.size() > 3)
                parse_error("expected columns name,seifert_matrix[,minimal_genus_asserted]");
            KnotRecord r{cells[0], validate(matrix_from_cell(cells[1])), false, {}};
            if (cells.size() == 3) r.minimal_genus_asserted = bool_from_cell(cells[2]);
            return r;
        }));
    }
    return out;
}

}  // namespace

KnotRecord record_from_json(const Json& j) {
    if (!j.is_object()) parse_error("record must be a JSON object");
    if (!j.contains("name") || !j["name"].is_string()) parse_error("record needs a string \"name\"");
    const bool has_matrix = j.contains("seifert_matrix");
    const bool has_braid = j.contains("braid");
    if (has_matrix == has_braid) parse_error("record needs exactly one of \"seifert_matrix\" or \"braid\"");

    auto source = [&]() -> std::variant<SeifertMatrix, BraidWord> {
        if (has_matrix) return validate(matrix_from_json(j["seifert_matrix"]));
        std::optional<int> strands;
        if (j.contains("strands")) {
            if (!j["strands"].is_number_integer()) parse_error("\"strands\" must be an integer");
            strands = j["strands"].get<int>();
        }
        const Json& b = j["braid"];
        if (b.is_string()) {
            if (strands) return BraidWord(parse_braid(b.get<std::string>()).letters(), strands);
            return parse_braid(b.get<std::string>());
        }
        if (!b.is_array()) parse_error("\"braid\" must be an array of integers or a braid string");
        std::vector<int> letters;
        for (const auto& x : b) {
            if (!x.is_number_integer()) parse_error("braid letters must be integers");
            letters.push_back(x.get<int>());
        }
        return BraidWord(std::move(letters), strands);
    }();

    KnotRecord r{j["name"].get<std::string>(), std::move(source), false, {}};
    if (j.contains("minimal_genus_asserted")) {
        if (!j["minimal_genus_asserted"].is_boolean()) parse_error("\"minimal_genus_asserted\" must be a boolean");
        r.minimal_genus_asserted = j["minimal_genus_asserted"].get<bool>();
    }
    if (j.contains("periods")) {
        if (!j["periods"].is_array()) parse_error("\"periods\" must be an array");
        for (const auto& p : j["periods"]) {
            if (!p.is_number_integer() || p.get<long long>() < 2)
                throw Error(ErrorCode::BadPeriod, "periods must be integers >= 2");
            r.periods.push_back(p.get<int>());
        }
    }
    return r;
}

std::vector<ParsedRecord> read_records(std::istream& in, InputFormat format) {
    const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return format == InputFormat::Json ? read_json_records(text) : read_csv_records(text);
}

SeifertMatrix seifert_matrix_of(const KnotRecord& r) {
    if (const auto* s = std::get_if<SeifertMatrix>(&r.source)) return *s;
    return seifert_matrix_from_braid(std::get<BraidWord>(r.source));
}

Json to_json(const BigInt& v) {
    if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
        return Json(v.convert_to<long long>());
    return Json(v.str());
}

Json to_json(const IntMatrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.size(); ++i) {
        Json row = Json::array();
        for (std::size_t k = 0; k < m.size(); ++k) row.push_back(to_json(m(i, k)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Json to_json(const LaurentPoly& p) {
    Json pairs = Json::array();
    for (const auto& [e, c] : p.terms()) pairs.push_back(Json::array({e, to_json(c)}));
    return pairs;
}

Json to_json(const DefinitenessCertificate& c) {
    Json j;
    j["verdict"] = std::string(to_string(c.verdict));
    j["sign"] = std::string(to_string(c.sign));
    j["sigma"] = c.sigma;
    j["width"] = c.width;
    j["surface_genus"] = c.surface_genus;
    j["minimal_genus_established"] = c.minimal_genus_established;
    j["reason"] = std::string(to_string(c.reason));
    return j;
}

Json to_json(const TheoremReport& r) {
    Json j;
    j["name"] = r.name;
    j["period"] = r.period;
    j["passed"] = r.passed();
    j["quotient"] = {{"sigma", r.quotient_sigma},
                     {"alexander", to_json(r.quotient_alexander)},
                     {"width", r.quotient_width},
                     {"certificate", to_json(r.quotient_certificate)}};
    j["cover"] = {{"sigma", r.cover_sigma},
                  {"alexander", to_json(r.cover_alexander)},
                  {"width", r.cover_width},
                  {"certificate", to_json(r.cover_certificate)}};
    Json assertions = Json::array();
    for (const auto& a : r.assertions)
        assertions.push_back({{"name", a.name}, {"passed", a.passed}, {"detail", a.detail}});
    j["assertions"] = std::move(assertions);
    return j;
}

Json to_json(const ScalingReport& r) {
    Json j;
    j["period"] = r.period;
    j["base_linking"] = r.base_linking;
    j["lifted_linking"] = r.lifted_linking;
    j["expected"] = r.expected();
    j["lifted_components"] = Json::array({r.lifted_components_a, r.lifted_components_b});
    j["passed"] = r.passed();
    return j;
}

Json record_echo(const KnotRecord& r) {
    Json j;
    j["name"] = r.name;
    if (const auto* s = std::get_if<SeifertMatrix>(&r.source)) {
        j["seifert_matrix"] = to_json(s->matrix());
    } else {
        const auto& b = std::get<BraidWord>(r.source);
        j["braid"] = b.letters();
        j["strands"] = b.strands();
    }
    j["minimal_genus_asserted"] = r.minimal_genus_asserted;
    if (!r.periods.empty()) j["periods"] = r.periods;
    return j;
}

Json knot_report(const KnotRecord& r) {
    const SeifertMatrix s = seifert_matrix_of(r);
    const LaurentPoly delta = alexander_polynomial(s);
    const DefinitenessCertificate cert = certify_definite(s, r.minimal_genus_asserted);
    Json j;
    j["name"] = r.name;
    j["input"] = record_echo(r);
    j["seifert_matrix"] = to_json(s.matrix());
    j["sigma"] = cert.sigma;
    j["alexander"] = to_json(delta);
    j["width"] = cert.width;
    j["surface_genus"] = cert.surface_genus;
    j["certificate"] = to_json(cert);
    return j;
}

Json certificate_report(const KnotRecord& r) {
    Json j;
    j["name"] = r.name;
    j["input"] = record_echo(r);
    j["certificate"] = to_json(certify_definite(seifert_matrix_of(r), r.minimal_genus_asserted));
    return j;
}

Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational(bigint_from_json(j));
    if (!j.is_string()) parse_error("expected an integer or a \"p/q\" string, got " + j.dump());
    const std::string s = trim(j.get<std::string>());
    const auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(bigint_from_json(Json(s)));
    const BigInt num = bigint_from_json(Json(trim(s.substr(0, slash))));
    const BigInt den = bigint_from_json(Json(trim(s.substr(slash + 1))));
    if (den == 0) parse_error("zero denominator in \"" + s + "\"");
    return Rational(num, den);
}

CylindricalCurve curve_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j["vertices"].is_array())
        parse_error("curve must be an object with a \"vertices\" array");
    std::vector<CylPoint> pts;
    for (const auto& v : j["vertices"]) {
        if (!v.is_array() || v.size() != 3) parse_error("each vertex must be [r, theta_turns, z]");
        pts.push_back({rational_from_json(v[0]), rational_from_json(v[1]), rational_from_json(v[2])});
    }
    return CylindricalCurve(std::move(pts));
}

std::vector<CurvePair> curve_pairs_from_json(const Json& j) {
    const Json* list = &j;
    Json single;
    if (j.is_object() && j.contains("pairs")) {
        list = &j["pairs"];
    } else if (j.is_object()) {
        single = Json::array({j});
        list = &single;
    }
    if (!list->is_array()) parse_error("curves file must hold a list of pairs");
    std::vector<CurvePair> out;
    for (std::size_t i = 0; i < list->size(); ++i) {
        const Json& p = (*list)[i];
        if (!p.is_object() || !p.contains("a")) parse_error("curve pair needs an \"a\" curve");
        const std::string name = p.contains("name") && p["name"].is_string() ? p["name"].get<std::string>()
                                                                             : "pair #" + std::to_string(i + 1);
        const bool self = p.contains("self") && p["self"].is_boolean() && p["self"].get<bool>();
        if (self == p.contains("b")) parse_error(name + ": give exactly one of \"b\" or \"self\": true");
        CurvePair cp{name, curve_from_json(p["a"]), std::nullopt};
        if (!self) cp.b = curve_from_json(p["b"]);
        out.push_back(std::move(cp));
    }
    return out;
}

void run_indexed(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& fn) {
    jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
    if (jobs == 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++) fn(i);
        });
    }
    for (auto& th : pool) th.join();
}

}  // namespace knotdef
