#include "eltip/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

#include <json.hpp>

#include "eltip/errors.hpp"

namespace eltip {

using nlohmann::json;

// ---------------------------------------------------------------------------
// Number rendering

std::string format_double(double value) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, ptr);
}

std::string format_double(double value, int significant_digits) {
    char buf[64];
    auto [ptr, ec] =
        std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::general, significant_digits);
    return std::string(buf, ptr);
}

// ---------------------------------------------------------------------------
// Instance documents

namespace {

[[noreturn]] void parse_error_at(std::string_view text, std::size_t byte, const std::string& what) {
    std::size_t line = 1, column = 1;
    const std::size_t stop = std::min(byte > 0 ? byte - 1 : 0, text.size());
    for (std::size_t i = 0; i < stop; ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    throw ParseError(what + " at line " + std::to_string(line) + ", column " +
                         std::to_string(column),
                     line, column);
}

json parse_json_or_throw(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        parse_error_at(text, e.byte, "malformed JSON");
    }
}

int require_int(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_integer()) {
        throw ValidationError(std::string("missing or non-integer \"") + key + "\"");
    }
    return j[key].get<int>();
}

double require_finite(const json& value, const std::string& where) {
    if (!value.is_number()) throw ValidationError(where + " is not a number");
    const double v = value.get<double>();
    if (!std::isfinite(v)) throw ValidationError(where + " is not finite");
    return v;
}

} // namespace

IsingProblem InstanceDocument::to_problem() const {
    std::map<SpinPair, double> map;
    for (const auto& [i, j, value] : couplings) {
        if (i < 0 || j >= n || i >= j) {
            throw ValidationError("coupling index pair (" + std::to_string(i) + ", " +
                                  std::to_string(j) + ") must satisfy 0 <= i < j <= " +
                                  std::to_string(n - 1));
        }
        if (!map.emplace(SpinPair{i, j}, value).second) {
            throw ValidationError("duplicate coupling pair (" + std::to_string(i) + ", " +
                                  std::to_string(j) + ")");
        }
    }
    std::vector<double> h(static_cast<std::size_t>(std::max(n, 1)), 0.0);
    std::vector<bool> seen(h.size(), false);
    for (const auto& [i, value] : fields) {
        if (i < 0 || i >= n) {
            throw ValidationError("field index " + std::to_string(i) + " out of range [0, " +
                                  std::to_string(n - 1) + "]");
        }
        if (seen[static_cast<std::size_t>(i)]) {
            throw ValidationError("duplicate field index " + std::to_string(i));
        }
        seen[static_cast<std::size_t>(i)] = true;
        h[static_cast<std::size_t>(i)] = value;
    }
    return IsingProblem(n, map, std::move(h));
}

InstanceDocument InstanceDocument::from_problem(const IsingProblem& problem) {
    InstanceDocument doc;
    doc.n = problem.spin_count();
    for (const auto& [pair, value] : problem.couplings()) {
        doc.couplings.emplace_back(pair.first, pair.second, value);
    }
    for (int i = 0; i < problem.spin_count(); ++i) {
        const double h = problem.fields()[static_cast<std::size_t>(i)];
        if (h != 0.0) doc.fields.emplace_back(i, h);
    }
    return doc;
}

InstanceDocument parse_instance_document(std::string_view text) {
    const json j = parse_json_or_throw(text);
    if (!j.is_object()) throw ValidationError("instance document must be a JSON object");
    if (!j.contains("format") || !j["format"].is_string()) {
        throw ValidationError("missing \"format\" tag");
    }
    InstanceDocument doc;
    doc.version = j["format"].get<std::string>();
    if (doc.version != instance_format_version) {
        throw ValidationError("unsupported instance format \"" + doc.version + "\" (expected " +
                              std::string(instance_format_version) + ")");
    }
    doc.n = require_int(j, "n");
    if (doc.n < 1) throw ValidationError("spin count must be >= 1");

    if (j.contains("couplings")) {
        if (!j["couplings"].is_array()) throw ValidationError("\"couplings\" must be an array");
        for (const json& entry : j["couplings"]) {
            if (!entry.is_array() || entry.size() != 3 || !entry[0].is_number_integer() ||
                !entry[1].is_number_integer()) {
                throw ValidationError("coupling entries must be [i, j, value]");
            }
            doc.couplings.emplace_back(entry[0].get<int>(), entry[1].get<int>(),
                                       require_finite(entry[2], "coupling value"));
        }
    }
    if (j.contains("fields")) {
        if (!j["fields"].is_array()) throw ValidationError("\"fields\" must be an array");
        for (const json& entry : j["fields"]) {
            if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number_integer()) {
                throw ValidationError("field entries must be [i, value]");
            }
            doc.fields.emplace_back(entry[0].get<int>(), require_finite(entry[1], "field value"));
        }
    }
    if (j.contains("metadata")) {
        if (!j["metadata"].is_object()) throw ValidationError("\"metadata\" must be an object");
        doc.metadata_json = j["metadata"].dump();
    }
    return doc;
}

IsingProblem parse_instance(std::string_view text) {
    const InstanceDocument doc = parse_instance_document(text);
    return doc.to_problem();
}

std::string serialize_instance_document(const InstanceDocument& document) {
    // emitted by hand to keep one coupling per line and a fixed key order
    std::string out = "{\n";
    out += "  \"format\": " + json(document.version).dump() + ",\n";
    out += "  \"n\": " + std::to_string(document.n) + ",\n";
    out += "  \"couplings\": [";
    for (std::size_t idx = 0; idx < document.couplings.size(); ++idx) {
        const auto& [i, j, value] = document.couplings[idx];
        out += (idx == 0) ? "\n" : ",\n";
        out += "    [" + std::to_string(i) + ", " + std::to_string(j) + ", " +
               format_double(value) + "]";
    }
    out += document.couplings.empty() ? "],\n" : "\n  ],\n";
    out += "  \"fields\": [";
    for (std::size_t idx = 0; idx < document.fields.size(); ++idx) {
        const auto& [i, value] = document.fields[idx];
        out += (idx == 0) ? "\n" : ",\n";
        out += "    [" + std::to_string(i) + ", " + format_double(value) + "]";
    }
    out += document.fields.empty() ? "]" : "\n  ]";
    if (!document.metadata_json.empty()) {
        out += ",\n  \"metadata\": " + json::parse(document.metadata_json).dump();
    }
    out += "\n}\n";
    return out;
}

std::string serialize_instance(const IsingProblem& problem) {
    return serialize_instance_document(InstanceDocument::from_problem(problem));
}

// ---------------------------------------------------------------------------
// Sweep CSV

std::string write_sweep_csv(const SweepResult& result) {
    const int n = result.spin_count;
    const std::size_t dim = std::size_t{1} << n;
    std::string out = "T";
    for (std::size_t z = 0; z < dim; ++z) {
        out += ',';
        out += SpinConfig::from_index(z, n).to_string();
    }
    out += ",ground\n";
    for (std::size_t row = 0; row < result.times.size(); ++row) {
        out += format_double(result.times[row]);
        for (std::size_t z = 0; z < dim; ++z) {
            out += ',';
            out += format_double(result.probabilities[row][z], 9);
        }
        out += ',';
        out += format_double(result.ground_probability[row], 9);
        out += '\n';
    }
    return out;
}

std::string write_gnuplot_script(const std::string& csv_path, int n) {
    const std::size_t dim = std::size_t{1} << n;
    std::ostringstream out;
    out << "set datafile separator ','\n"
        << "set logscale x\n"
        << "set xlabel 'annealing time T'\n"
        << "set ylabel 'final state probability'\n"
        << "set yrange [0:1.05]\n"
        << "set key outside\n"
        << "plot \\\n";
    for (std::size_t z = 0; z < dim; ++z) {
        out << "  '" << csv_path << "' using 1:" << (z + 2) << " with lines title columnheader, \\\n";
    }
    out << "  '" << csv_path << "' using 1:" << (dim + 2)
        << " with lines lw 2 lc 'black' title 'ground'\n";
    return out.str();
}

// ---------------------------------------------------------------------------
// Landscape reports

namespace {

json report_to_json(const LandscapeReport& report) {
    json j;
    j["n"] = report.spin_count;
    j["ground_energy"] = report.ground_energy;
    json grounds = json::array();
    for (const SpinConfig& g : report.ground_configs) grounds.push_back(g.to_string());
    j["ground_configs"] = std::move(grounds);
    json levels = json::array();
    for (const LevelReport& level : report.levels) {
        levels.push_back({{"energy", level.energy},
                          {"config", level.config.to_string()},
                          {"gap", level.gap_from_ground},
                          {"min_hamming", level.min_hamming_to_ground}});
    }
    j["levels"] = std::move(levels);
    j["difficulty_score"] = report.difficulty_score;
    return j;
}

LandscapeReport report_from_json(const json& j) {
    LandscapeReport report;
    report.spin_count = require_int(j, "n");
    report.ground_energy = require_finite(j.at("ground_energy"), "ground_energy");
    for (const json& g : j.at("ground_configs")) {
        report.ground_configs.push_back(SpinConfig::parse(g.get<std::string>()));
    }
    for (const json& level : j.at("levels")) {
        report.levels.push_back({require_finite(level.at("energy"), "level energy"),
                                 SpinConfig::parse(level.at("config").get<std::string>()),
                                 require_finite(level.at("gap"), "level gap"),
                                 level.at("min_hamming").get<int>()});
    }
    report.difficulty_score = require_finite(j.at("difficulty_score"), "difficulty_score");
    return report;
}

void append_level_table(std::ostringstream& out, const LandscapeReport& report) {
    out << "level  energy                 gap                    dH  config\n";
    for (std::size_t lvl = 0; lvl < report.levels.size(); ++lvl) {
        const LevelReport& level = report.levels[lvl];
        std::string energy = format_double(level.energy);
        std::string gap = format_double(level.gap_from_ground);
        energy.resize(std::max<std::size_t>(energy.size(), 21), ' ');
        gap.resize(std::max<std::size_t>(gap.size(), 21), ' ');
        std::string idx = std::to_string(lvl + 1);
        idx.resize(std::max<std::size_t>(idx.size(), 5), ' ');
        out << idx << "  " << energy << "  " << gap << "  " << level.min_hamming_to_ground
            << "   " << level.config.to_string() << "\n";
    }
}

} // namespace

std::string write_report(const LandscapeReport& report) {
    std::ostringstream out;
    out << "landscape report (n=" << report.spin_count << ", levels=" << report.levels.size()
        << ")\n";
    out << "ground energy: " << format_double(report.ground_energy) << "\n";
    out << "ground states:";
    for (const SpinConfig& g : report.ground_configs) out << ' ' << g.to_string();
    out << "\n";
    out << "difficulty score: " << format_double(report.difficulty_score) << " ["
        << difficulty_score_version << "]\n";
    append_level_table(out, report);
    json j = report_to_json(report);
    j["format"] = std::string(report_format_version);
    j["score_formula"] = std::string(difficulty_score_version);
    out << "\n" << j.dump() << "\n";
    return out.str();
}

std::string write_report(const std::vector<std::pair<std::string, LandscapeReport>>& ranking) {
    std::ostringstream out;
    out << "landscape ranking (" << ranking.size() << " landscapes)\n";
    out << "rank  label  score                  gap1                   dH1\n";
    for (std::size_t r = 0; r < ranking.size(); ++r) {
        const LandscapeReport& report = ranking[r].second;
        std::string rank = std::to_string(r + 1);
        rank.resize(std::max<std::size_t>(rank.size(), 4), ' ');
        std::string label = ranking[r].first;
        label.resize(std::max<std::size_t>(label.size(), 5), ' ');
        std::string score = format_double(report.difficulty_score);
        score.resize(std::max<std::size_t>(score.size(), 21), ' ');
        const bool excited = report.levels.size() > 1;
        std::string gap = excited ? format_double(report.levels[1].gap_from_ground) : "-";
        gap.resize(std::max<std::size_t>(gap.size(), 21), ' ');
        out << rank << "  " << label << "  " << score << "  " << gap << "  "
            << (excited ? std::to_string(report.levels[1].min_hamming_to_ground) : "-") << "\n";
    }
    for (const auto& [label, report] : ranking) {
        out << "\n[" << label << "]\n";
        out << "ground energy: " << format_double(report.ground_energy) << "\n";
        out << "difficulty score: " << format_double(report.difficulty_score) << "\n";
        append_level_table(out, report);
    }
    json entries = json::array();
    for (const auto& [label, report] : ranking) {
        json entry = report_to_json(report);
        entry["label"] = label;
        entries.push_back(std::move(entry));
    }
    json j;
    j["format"] = std::string(ranking_format_version);
    j["score_formula"] = std::string(difficulty_score_version);
    j["entries"] = std::move(entries);
    out << "\n" << j.dump() << "\n";
    return out.str();
}

std::string_view extract_json_block(std::string_view report_text) {
    while (!report_text.empty() && (report_text.back() == '\n' || report_text.back() == '\r')) {
        report_text.remove_suffix(1);
    }
    const std::size_t pos = report_text.find_last_of('\n');
    return pos == std::string_view::npos ? report_text : report_text.substr(pos + 1);
}

LandscapeReport parse_report_json(std::string_view json_text) {
    const json j = parse_json_or_throw(json_text);
    if (!j.contains("format") || j["format"].get<std::string>() != report_format_version) {
        throw ValidationError("not a " + std::string(report_format_version) + " document");
    }
    return report_from_json(j);
}

std::vector<std::pair<std::string, LandscapeReport>> parse_ranking_json(std::string_view json_text) {
    const json j = parse_json_or_throw(json_text);
    if (!j.contains("format") || j["format"].get<std::string>() != ranking_format_version) {
        throw ValidationError("not a " + std::string(ranking_format_version) + " document");
    }
    std::vector<std::pair<std::string, LandscapeReport>> out;
    for (const json& entry : j.at("entries")) {
        out.emplace_back(entry.at("label").get<std::string>(), report_from_json(entry));
    }
    return out;
}

} // namespace eltip
