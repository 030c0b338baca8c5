#pragma once

#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "eltip/dynamics.hpp"
#include "eltip/ising.hpp"
#include "eltip/landscape.hpp"

namespace eltip {

inline constexpr std::string_view instance_format_version = "eltip-instance/v1";
inline constexpr std::string_view report_format_version = "eltip-report/v1";
inline constexpr std::string_view ranking_format_version = "eltip-ranking/v1";

/// On-disk form of an instance: versioned JSON with sparse coupling and
/// field lists plus a free-form metadata object that round-trips verbatim.
struct InstanceDocument {
    std::string version{instance_format_version};
    int n = 1;
    std::vector<std::tuple<int, int, double>> couplings; // (i, j, value), i < j
    std::vector<std::pair<int, double>> fields;          // (i, value)
    std::string metadata_json;                           // serialized object, "" if absent

    IsingProblem to_problem() const;
    static InstanceDocument from_problem(const IsingProblem& problem);
};

/// Throws ParseError (with line/column) on malformed JSON and
/// ValidationError (naming the index) on semantic problems.
InstanceDocument parse_instance_document(std::string_view text);
IsingProblem parse_instance(std::string_view text);

/// Inverse of parsing; numbers are rendered shortest-round-trip so
/// parse_instance(serialize_instance(P)) == P exactly.
std::string serialize_instance_document(const InstanceDocument& document);
std::string serialize_instance(const IsingProblem& problem);

/// Header "T,<config strings spin-0-leftmost>,ground", then one row per
/// time; probabilities carry 9 significant digits.
std::string write_sweep_csv(const SweepResult& result);

/// gnuplot script plotting every state column of a sweep CSV on a log time
/// axis, probability on the y axis.
std::string write_gnuplot_script(const std::string& csv_path, int n);

/// Human-readable table followed by a single-line machine-readable JSON
/// document (the last line of the output).
std::string write_report(const LandscapeReport& report);
std::string write_report(const std::vector<std::pair<std::string, LandscapeReport>>& ranking);

/// The JSON line of write_report output.
std::string_view extract_json_block(std::string_view report_text);

LandscapeReport parse_report_json(std::string_view json_text);
std::vector<std::pair<std::string, LandscapeReport>> parse_ranking_json(std::string_view json_text);

/// Shortest decimal rendering that parses back to exactly the same double.
std::string format_double(double value);
/// Rendering with the given number of significant digits.
std::string format_double(double value, int significant_digits);

} // namespace eltip
