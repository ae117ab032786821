#pragma once

// Batch ingestion and report serialization for the command-line tool.

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "knotdef/braid.hpp"
#include "knotdef/invariants.hpp"
#include "knotdef/periodic.hpp"

namespace knotdef {

using Json = nlohmann::ordered_json;

struct KnotRecord {
    std::string name;
    std::variant<SeifertMatrix, BraidWord> source;
    bool minimal_genus_asserted = false;
    /// Optional period hints for the periodic command.
    std::vector<int> periods;
};

/// One input slot: either a record or the reason it was rejected.
struct ParsedRecord {
    std::size_t index = 0;
    std::string name;
    std::optional<KnotRecord> record;
    std::string error;
};

enum class InputFormat { Json, Csv };

/// `{"name":..., "braid":[...], "strands":s}` or `{"name":..., "seifert_matrix":[[...]]}`,
/// plus optional "minimal_genus_asserted" and "periods". Throws Error(ParseError) or any
/// validation error of the source.
KnotRecord record_from_json(const Json& j);

/// JSON Lines (one object per non-blank line) or a single JSON array of objects; CSV with
/// columns name, seifert_matrix, minimal_genus_asserted where the matrix cell holds
/// semicolon-separated rows. Malformed records are returned with their error, not thrown.
std::vector<ParsedRecord> read_records(std::istream& in, InputFormat format);

SeifertMatrix seifert_matrix_of(const KnotRecord& r);

Json to_json(const BigInt& v);
Json to_json(const IntMatrix& m);
Json to_json(const LaurentPoly& p);
Json to_json(const DefinitenessCertificate& c);
Json to_json(const TheoremReport& r);
Json to_json(const ScalingReport& r);

/// Input echo that re-ingests to the same record.
Json record_echo(const KnotRecord& r);

/// Full invariants report. Contains no timing so repeated runs are byte-identical.
Json knot_report(const KnotRecord& r);

/// Only name, input echo and certificate.
Json certificate_report(const KnotRecord& r);

/// Rational from a JSON integer or a string "p/q" / "n".
Rational rational_from_json(const Json& j);
CylindricalCurve curve_from_json(const Json& j);

struct CurvePair {
    std::string name;
    CylindricalCurve a;
    std::optional<CylindricalCurve> b;  // absent: self-linking with the radial pushoff
};

/// `{"pairs":[{"name":..,"a":curve,"b":curve}, {"name":..,"a":curve,"self":true}]}`, a bare
/// array of such pairs, or a single pair object.
std::vector<CurvePair> curve_pairs_from_json(const Json& j);

/// Runs fn(0..count-1) on up to `jobs` threads. Results land in index order.
void run_indexed(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& fn);

}  // namespace knotdef
