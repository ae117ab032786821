// Acceptance suite. Prints one PASS/FAIL line per criterion; exit status is the number of failures.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "fixtures.hpp"
#include "knotdef/braid.hpp"
#include "knotdef/error.hpp"
#include "knotdef/periodic.hpp"
#include "knotdef/records.hpp"
#include "oracles.hpp"

using namespace knotdef;

namespace {

std::vector<IntMatrix> g_touched;  // every Seifert matrix the suite evaluates

SeifertMatrix touch(const SeifertMatrix& s) {
    g_touched.push_back(s.matrix());
    return s;
}

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

std::string str(const LaurentPoly& p) { return p.to_string(); }

Outcome trefoil_end_to_end() {
    Outcome o;
    const SeifertMatrix s = touch(seifert_matrix_from_braid(parse_braid("1 1 1")));
    const auto c = certify_definite(s);
    const LaurentPoly expected = LaurentPoly::from_pairs({{-1, 1}, {0, -1}, {1, 1}});
    o.require(c.sigma == -2, "sigma = " + std::to_string(c.sigma));
    o.require(alexander_polynomial(s) == expected, "Alexander = " + str(alexander_polynomial(s)));
    o.require(c.width == 2, "width = " + std::to_string(c.width));
    o.require(c.surface_genus == 1, "genus = " + std::to_string(c.surface_genus));
    o.require(c.verdict == Verdict::Definite, "verdict = " + std::string(to_string(c.verdict)));
    if (o.ok) o.detail = "sigma=-2, Alexander=" + str(expected) + ", width=2, genus=1, Definite";
    return o;
}

Outcome figure_eight_end_to_end() {
    Outcome o;
    const SeifertMatrix s = touch(seifert_matrix_from_braid(parse_braid("1 -2 1 -2")));
    const auto c = certify_definite(s);
    o.require(c.sigma == 0, "sigma = " + std::to_string(c.sigma));
    o.require(c.width == 2, "width = " + std::to_string(c.width));
    o.require(c.verdict == Verdict::NotDefinite, "verdict = " + std::string(to_string(c.verdict)));
    o.require(c.reason == CertificateReason::WidthSigmaMismatch, "reason = " + std::string(to_string(c.reason)));
    if (o.ok) o.detail = "sigma=0, width=2, NotDefinite via WidthSigmaMismatch";
    return o;
}

Outcome periodic_suite() {
    Outcome o;
    const std::vector<std::pair<std::string, IntMatrix>> quotients{
        {"unknot", IntMatrix()},
        {"trefoil", fixture::trefoil()},
        {"trefoil#trefoil", direct_sum(fixture::trefoil(), fixture::trefoil())}};
    int checks = 0;
    for (const auto& [name, v] : quotients) {
        for (int p : {2, 3, 5}) {
            const PeriodicModel m = make_periodic_model(touch(validate(v)), p, name);
            touch(m.cover);
            const TheoremReport r = check_theorem(m);
            for (const auto& a : r.assertions) {
                ++checks;
                o.require(a.passed, name + " p=" + std::to_string(p) + " " + a.name + ": " + a.detail);
            }
            o.require(r.assertions.size() == 4, name + ": expected 4 assertions");
        }
    }
    if (o.ok) o.detail = std::to_string(checks) + " assertions over 3 quotients x p in {2,3,5}";
    return o;
}

Outcome lifted_linking_suite() {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    struct Case {
        std::string name;
        CylindricalCurve a, b;
    };
    const std::vector<Case> cases{
        {"split", fixture::axis_circle(), fixture::meridian_diamond(5, 0)},
        {"hopf-axis", fixture::axis_circle(), fixture::meridian_diamond(2, 0)},
        {"hopf-w0", fixture::meridian_diamond(2, 0), fixture::finger()},
        {"core-torus", fixture::axis_circle(), fixture::torus_curve(2, 3)}};
    std::ostringstream summary;
    for (const auto& c : cases) {
        for (int p : {2, 3}) {
            try {
                const ScalingReport r = check_lk_scaling(c.a, c.b, p);
                o.require(r.passed(), c.name + " p=" + std::to_string(p) + ": lifted " +
                                          std::to_string(r.lifted_linking) + " vs " + std::to_string(r.expected()));
                if (p == 2) summary << (summary.tellp() > 0 ? " " : "") << c.name << ":" << r.base_linking;
            } catch (const Error& e) {
                o.require(false, c.name + ": " + e.what());
            }
        }
    }
    o.require(linking_number(cases[1].a, cases[1].b).value != 0, "hopf-axis pair should link");
    o.require(linking_number(cases[2].a, cases[2].b).value != 0, "w=0 pair should link");
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    o.require(secs < 60.0, "runtime " + std::to_string(secs) + " s");
    if (o.ok) {
        std::ostringstream d;
        d.setf(std::ios::fixed);
        d.precision(2);
        d << "base lk " << summary.str() << "; p in {2,3}; " << secs << " s";
        o.detail = d.str();
    }
    return o;
}

Outcome signature_oracle() {
    Outcome o;
    std::mt19937_64 rng(500);
    std::uniform_int_distribution<int> dim(1, 8);
    int agree = 0;
    for (int trial = 0; trial < 500; ++trial) {
        const IntMatrix s = oracle::random_symmetric(rng, static_cast<std::size_t>(dim(rng)), 9);
        const Inertia a = inertia(s);
        const Inertia b = oracle::descartes_inertia(s);
        if (a == b) ++agree;
        else {
            std::ostringstream os;
            os << "trial " << trial << ": " << a << " vs " << b;
            o.require(false, os.str());
        }
    }
    if (o.ok) o.detail = std::to_string(agree) + "/500 agree";
    return o;
}

Outcome alexander_invariants() {
    Outcome o;
    std::mt19937_64 rng(20);
    int with_det = 0;
    for (int trial = 0; trial < 20; ++trial) {
        const BraidWord b = random_knot_braid(rng, 4, 10);
        const SeifertMatrix s = touch(seifert_matrix_from_braid(b));
        const LaurentPoly d = alexander_polynomial(s);
        const LaurentPoly burau = burau_alexander(b);
        o.require(d == burau, "braid #" + std::to_string(trial) + ": " + str(d) + " vs " + str(burau));
        o.require(d.evaluate(1) == 1, "Delta(1) != 1 for braid #" + std::to_string(trial));
        o.require(d.inverted() == d, "Delta not symmetric for braid #" + std::to_string(trial));
        const BigInt dv = det(s.matrix());
        if (dv != 0) {
            ++with_det;
            const LaurentPoly raw = alexander_raw(s);
            o.require(abs(raw.coefficient(0)) == abs(dv) &&
                          abs(raw.coefficient(static_cast<int>(s.size()))) == abs(dv),
                      "extreme coefficients differ from |det V| for braid #" + std::to_string(trial));
        }
    }
    if (o.ok) o.detail = "20 braids agree with Burau; " + std::to_string(with_det) + " with det V != 0";
    return o;
}

Outcome congruence_invariance() {
    Outcome o;
    std::mt19937_64 rng(100);
    for (const auto& [name, v] : {std::pair{"trefoil", fixture::trefoil()}, std::pair{"figure-eight", fixture::figure_eight()}}) {
        const auto c0 = certify_definite(touch(validate(v)));
        for (int trial = 0; trial < 100; ++trial) {
            const IntMatrix u = oracle::random_unimodular(rng, v.size(), 16);
            const auto c = certify_definite(touch(validate(congruent(v, u))));
            o.require(c.verdict == c0.verdict && c.sigma == c0.sigma && c.width == c0.width,
                      std::string(name) + " changed under basis change #" + std::to_string(trial));
        }
    }
    if (o.ok) o.detail = "200 basis changes, verdict/sigma/width unchanged";
    return o;
}

std::vector<std::string> census_lines(const std::string& path, unsigned jobs) {
    std::ifstream in(path);
    auto records = read_records(in, InputFormat::Json);
    std::vector<std::string> lines(records.size());
    run_indexed(records.size(), jobs, [&](std::size_t i) {
        if (records[i].record) lines[i] = knot_report(*records[i].record).dump();
    });
    for (const auto& r : records)
        if (r.record) touch(seifert_matrix_of(*r.record));
    return lines;
}

std::string run_command(const std::string& cmd) {
    std::string out;
    if (FILE* pipe = popen(cmd.c_str(), "r")) {
        char buf[4096];
        std::size_t n;
        while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
        pclose(pipe);
    }
    return out;
}

Outcome census_determinism(const std::string& data_dir, const std::string& cli) {
    Outcome o;
    const std::string path = data_dir + "/starter_set.jsonl";
    const auto first = census_lines(path, 1);
    const auto second = census_lines(path, 4);
    o.require(!first.empty(), "no records in " + path);
    o.require(first == second, "in-process runs differ");
    std::string how = "in-process";
    if (!cli.empty()) {
        const std::string cmd = "'" + cli + "' census '" + path + "' 2>/dev/null";
        const std::string a = run_command(cmd + " --jobs 1");
        const std::string b = run_command(cmd + " --jobs 4");
        o.require(!a.empty() && a == b, "CLI runs differ");
        std::string joined;
        for (const auto& l : first) joined += l + "\n";
        o.require(a == joined, "CLI output differs from library reports");
        how += " and CLI";
    }
    if (o.ok) o.detail = std::to_string(first.size()) + " records byte-identical (" + how + ")";
    return o;
}

Outcome form_class_consistency() {
    Outcome o;
    // Bundled starter records plus the stabilized examples.
    touch(validate(direct_sum(fixture::trefoil(), IntMatrix::from_rows({{0, 1}, {0, 0}}))));
    std::size_t definite = 0;
    for (const auto& v : g_touched) {
        const SeifertMatrix s = validate(v);
        const FormClass f = is_definite(symmetrize(s));
        const bool form_definite = f == FormClass::Positive || f == FormClass::Negative;
        const bool cert_definite = certify_definite(s).verdict == Verdict::Definite;
        if (cert_definite) ++definite;
        std::ostringstream os;
        os << "matrix " << v << ": form " << to_string(f);
        o.require(form_definite == cert_definite, os.str());
    }
    if (o.ok) o.detail = std::to_string(g_touched.size()) + " matrices, " + std::to_string(definite) + " definite";
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    const std::string data_dir = argc > 1 ? argv[1] : KNOTDEF_DATA_DIR;
    const std::string cli = argc > 2 ? argv[2] : "";

    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"trefoil end-to-end", trefoil_end_to_end},
        {"figure-eight end-to-end", figure_eight_end_to_end},
        {"periodic quotient suite", periodic_suite},
        {"lifted linking scaling", lifted_linking_suite},
        {"signature oracle", signature_oracle},
        {"Alexander invariants", alexander_invariants},
        {"congruence invariance", congruence_invariance},
        {"form class vs certificate", form_class_consistency},
        {"census determinism", [&] { return census_determinism(data_dir, cli); }},
    };

    // Criterion 8 inspects every matrix the others touched, so it is evaluated last.
    const std::vector<std::size_t> order{0, 1, 2, 3, 4, 5, 6, 8, 7};
    std::vector<Outcome> results(criteria.size());
    for (std::size_t i : order) {
        try {
            results[i] = criteria[i].second();
        } catch (const std::exception& e) {
            results[i] = {false, std::string("exception: ") + e.what()};
        }
    }
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        std::cout << (results[i].ok ? "PASS" : "FAIL") << " [" << i + 1 << "] " << criteria[i].first << ": "
                  << results[i].detail << '\n';
        if (!results[i].ok) ++failures;
    }
    std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria passed\n";
    return failures;
}
