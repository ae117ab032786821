#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>

#include <CLI11.hpp>

#include "knotdef/error.hpp"
#include "knotdef/records.hpp"

namespace {

using namespace knotdef;

constexpr int kExitOk = 0;
constexpr int kExitAssertion = 1;
constexpr int kExitInput = 2;

struct CommonOptions {
    std::string input;
    std::string braid;
    std::string out;
    std::string format = "json";
    bool assert_minimal = false;
    unsigned jobs = 1;
    std::vector<int> periods;
};

class Output {
public:
    explicit Output(const std::string& path) {
        if (!path.empty()) {
            file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
            if (!*file_) throw Error(ErrorCode::ParseError, "cannot open output file " + path);
        }
    }
    std::ostream& stream() { return file_ ? *file_ : std::cout; }
    void line(const Json& j) { stream() << j.dump() << '\n'; }

private:
    std::unique_ptr<std::ofstream> file_;
};

void report_rejected(const ParsedRecord& p) {
    std::cerr << "knotdef: rejected record \"" << p.name << "\": " << p.error << '\n';
}

/// Records from --braid or from the input file (stdin for "-").
std::vector<ParsedRecord> load_records(const CommonOptions& o) {
    if (!o.braid.empty()) {
        ParsedRecord p;
        p.name = o.braid;
        try {
            p.record = KnotRecord{o.braid, parse_braid(o.braid), false, {}};
        } catch (const Error& e) {
            p.error = e.what();
        }
        return {std::move(p)};
    }
    const InputFormat fmt = o.format == "csv" ? InputFormat::Csv : InputFormat::Json;
    if (o.input == "-") return read_records(std::cin, fmt);
    std::ifstream in(o.input, std::ios::binary);
    if (!in) throw Error(ErrorCode::ParseError, "cannot read " + o.input);
    return read_records(in, fmt);
}

/// Evaluates each accepted record with `fn`, possibly in parallel, and writes the lines in input order.
int emit_reports(const CommonOptions& o, std::vector<ParsedRecord>& records,
                 const std::function<std::vector<Json>(std::size_t, const KnotRecord&)>& fn, std::size_t* rejected_out = nullptr) {
    if (o.assert_minimal)
        for (auto& p : records)
            if (p.record) p.record->minimal_genus_asserted = true;

    std::vector<std::vector<Json>> lines(records.size());
    std::vector<std::string> failures(records.size());
    run_indexed(records.size(), o.jobs, [&](std::size_t i) {
        if (!records[i].record) return;
        try {
            lines[i] = fn(i, *records[i].record);
        } catch (const std::exception& e) {
            failures[i] = e.what();
        }
    });

    Output out(o.out);
    std::size_t rejected = 0;
    for (std::size_t i = 0; i < records.size(); ++i) {
        if (!records[i].record || !failures[i].empty()) {
            if (records[i].error.empty()) records[i].error = failures[i];
            report_rejected(records[i]);
            ++rejected;
            continue;
        }
        for (const auto& j : lines[i]) out.line(j);
    }
    out.stream().flush();
    if (rejected_out) *rejected_out = rejected;
    return rejected ? kExitInput : kExitOk;
}

void add_input_options(CLI::App* cmd, CommonOptions& o, bool allow_braid = true) {
    cmd->add_option("input", o.input, "Record file (JSON Lines, JSON array or CSV); - for stdin");
    if (allow_braid) cmd->add_option("--braid", o.braid, "Inline braid word, e.g. \"1 1 1\"");
    cmd->add_option("--out", o.out, "Write JSON Lines here instead of stdout");
    cmd->add_option("--format", o.format, "Input format")->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--jobs", o.jobs, "Concurrent record evaluations")->check(CLI::PositiveNumber);
    cmd->add_flag("--assert-minimal", o.assert_minimal, "Treat every surface as minimal genus");
}

void require_input(const CommonOptions& o) {
    if (o.input.empty() && o.braid.empty()) throw CLI::RequiredError("input file or --braid");
}

int run_lk_cover(const CommonOptions& o, const LinkingOptions& lk) {
    Json doc;
    {
        std::ifstream in(o.input, std::ios::binary);
        if (!in) throw Error(ErrorCode::ParseError, "cannot read " + o.input);
        doc = Json::parse(in);
    }
    const auto pairs = curve_pairs_from_json(doc);
    std::vector<std::pair<std::size_t, int>> jobs;
    for (std::size_t i = 0; i < pairs.size(); ++i)
        for (int p : o.periods) jobs.emplace_back(i, p);

    std::vector<Json> lines(jobs.size());
    std::vector<std::string> failures(jobs.size());
    std::vector<char> passed(jobs.size(), 0);
    run_indexed(jobs.size(), o.jobs, [&](std::size_t k) {
        const auto& [i, p] = jobs[k];
        const CurvePair& cp = pairs[i];
        try {
            const ScalingReport r =
                cp.b ? check_lk_scaling(cp.a, *cp.b, p, lk) : check_self_lk_scaling(cp.a, p, lk);
            Json j;
            j["name"] = cp.name;
            j["mode"] = cp.b ? "pair" : "self";
            const Json body = to_json(r);
            for (const auto& [key, value] : body.items()) j[key] = value;
            lines[k] = std::move(j);
            passed[k] = r.passed();
        } catch (const Error& e) {
            failures[k] = e.what();
        }
    });

    Output out(o.out);
    int code = kExitOk;
    for (std::size_t k = 0; k < jobs.size(); ++k) {
        if (!failures[k].empty()) {
            std::cerr << "knotdef: pair \"" << pairs[jobs[k].first].name << "\" (p=" << jobs[k].second
                      << "): " << failures[k] << '\n';
            code = kExitInput;
            continue;
        }
        out.line(lines[k]);
        if (!passed[k] && code == kExitOk) code = kExitAssertion;
    }
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Definiteness certificates and periodicity checks for knots"};
    app.set_version_flag("--version", std::string(KNOTDEF_VERSION));
    app.require_subcommand(1);

    CommonOptions o;
    LinkingOptions lk;

    auto* inv = app.add_subcommand("invariants", "Signature, Alexander polynomial, width and certificate per record");
    add_input_options(inv, o);
    auto* cert = app.add_subcommand("certify", "Definiteness certificate per record");
    add_input_options(cert, o);
    auto* per = app.add_subcommand("periodic", "Check the periodic model of each record for each period");
    add_input_options(per, o);
    per->add_option("--period", o.periods, "Period p >= 2; repeatable")->delimiter(',');
    auto* lkc = app.add_subcommand("lk-cover", "Linking numbers of curve pairs and of their lifts");
    lkc->add_option("input", o.input, "Curves JSON file")->required();
    lkc->add_option("--period", o.periods, "Period p >= 2; repeatable")->delimiter(',')->required();
    lkc->add_option("--out", o.out, "Write JSON Lines here instead of stdout");
    lkc->add_option("--jobs", o.jobs, "Concurrent evaluations")->check(CLI::PositiveNumber);
    lkc->add_option("--max-segments", lk.max_segments, "Refinement cap per edge")->check(CLI::PositiveNumber);
    auto* census = app.add_subcommand("census", "Batch invariants with a verdict summary on stderr");
    add_input_options(census, o, false);

    CLI11_PARSE(app, argc, argv);

    try {
        for (int p : o.periods)
            if (p < 2) throw Error(ErrorCode::BadPeriod, "period must be at least 2, got " + std::to_string(p));

        if (inv->parsed() || cert->parsed()) {
            require_input(o);
            auto records = load_records(o);
            const bool full = inv->parsed();
            return emit_reports(o, records, [full](std::size_t, const KnotRecord& r) {
                return std::vector<Json>{full ? knot_report(r) : certificate_report(r)};
            });
        }

        if (per->parsed()) {
            require_input(o);
            auto records = load_records(o);
            std::vector<char> ok(records.size(), 1);
            const int code = emit_reports(o, records, [&](std::size_t i, const KnotRecord& r) {
                const std::vector<int>& ps = o.periods.empty() ? r.periods : o.periods;
                if (ps.empty()) throw Error(ErrorCode::BadPeriod, "no --period given and the record has no periods");
                std::vector<Json> out;
                for (int p : ps) {
                    const auto report =
                        check_theorem(make_periodic_model(seifert_matrix_of(r), p, r.name), r.minimal_genus_asserted);
                    if (!report.passed()) ok[i] = 0;
                    out.push_back(to_json(report));
                }
                return out;
            });
            if (code != kExitOk) return code;
            return std::all_of(ok.begin(), ok.end(), [](char c) { return c != 0; }) ? kExitOk : kExitAssertion;
        }

        if (lkc->parsed()) return run_lk_cover(o, lk);

        if (census->parsed()) {
            require_input(o);
            const auto start = std::chrono::steady_clock::now();
            auto records = load_records(o);
            std::map<std::string, std::size_t> counts{{"Definite", 0}, {"NotDefinite", 0}, {"Unknown", 0}};
            std::vector<std::string> verdicts(records.size());
            std::size_t rejected = 0;
            const int code = emit_reports(
                o, records,
                [&](std::size_t i, const KnotRecord& r) {
                    Json j = knot_report(r);
                    verdicts[i] = j["certificate"]["verdict"].get<std::string>();
                    return std::vector<Json>{std::move(j)};
                },
                &rejected);
            for (std::size_t i = 0; i < records.size(); ++i)
                if (records[i].error.empty() && !verdicts[i].empty()) ++counts[verdicts[i]];
            const double secs =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            std::cerr << "knotdef " << KNOTDEF_VERSION << " census\n";
            std::cerr << "  records      " << records.size() << '\n';
            for (const auto& [verdict, n] : counts) std::cerr << "  " << verdict << std::string(13 - verdict.size(), ' ') << n << '\n';
            std::cerr << "  rejected     " << rejected << '\n';
            std::ostringstream t;
            t.setf(std::ios::fixed);
            t.precision(3);
            t << secs;
            std::cerr << "  elapsed      " << t.str() << " s\n";
            return code;
        }
    } catch (const CLI::Error& e) {
        return app.exit(e);
    } catch (const Error& e) {
        std::cerr << "knotdef: " << e.what() << '\n';
        return kExitInput;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "knotdef: ParseError: " << e.what() << '\n';
        return kExitInput;
    }
    return kExitOk;
}
