#pragma once

// JSON and CSV formats used by the command-line tool.
//
// Series:  {"a": [[re, im], ...], "b": [[re, im], ...], "co_sign": 1}
//          a lists a_1..a_N (a_1 must be 1), b lists b_1..b_N; "b" and
//          "co_sign" are optional (defaults: g = 0, +1). A bare number is
//          accepted for a real coefficient.
// Weights: {"x": [{"n": 2, "re": 1, "im": 0}], "y": [{"n": 1, "w": 0.5}]}
//          {"X": [{"n": 1, "w": 0.5}], "Y": [{"n": 2, "w": 0.5}]}
//          n is the 1-based coefficient index.

#include <filesystem>
#include <string>

#include <json.hpp>

#include "qharm/bounds.hpp"
#include "qharm/classes.hpp"
#include "qharm/error.hpp"
#include "qharm/series.hpp"
#include "qharm/verify.hpp"

namespace qharm::io {

using Json = nlohmann::json;

/// Malformed input files: bad syntax, missing fields, wrong shapes.
class FormatError : public DomainError {
 public:
  using DomainError::DomainError;
};

Json read_json_file(const std::filesystem::path& path);

Json series_to_json(const HarmonicSeries& f);
HarmonicSeries series_from_json(const Json& j);

ExtremalWeights extremal_weights_from_json(const Json& j);
ConvexWeights convex_weights_from_json(const Json& j);

Json params_to_json(const ClassParams& p);
Json membership_to_json(const MembershipReport& r);
Json report_to_json(const VerificationReport& r);
Json grid_to_json(const GridSpec& g);

/// Serializes with every double printed to 17 significant digits;
/// non-finite numbers become null.
std::string dump(const Json& j, int indent = 2);

/// 17 significant digits, as used in CSV cells.
std::string format_number(double v);

/// Header and one row per bound, columns
/// q,m,alpha,b1,r,lower,upper,covering_radius (r blank for cover-only rows).
std::string bounds_csv_header();
std::string bounds_csv_row(const ClassParams& p, double b1, const double* r,
                           const DistortionBound* d, double cover);

std::string discrepancy_csv(std::span<const DiscrepancyRow> rows);

}  // namespace qharm::io
