#include "severi/format.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace severi {

namespace {

using nlohmann::json;

std::string csv_field(const std::string& value) {
    if (value.find_first_of(",\"\n") == std::string::npos) return value;
    std::string quoted = "\"";
    for (char c : value) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

std::string suite_name(VerifySuite suite) { return suite == VerifySuite::paper ? "paper" : "quick"; }

// Coefficients highest power first, as decimal or num/den strings.
std::vector<std::string> coefficient_strings(const RationalPoly& poly) {
    std::vector<std::string> out;
    for (int k = poly.degree(); k >= 0; --k) out.push_back(to_string(poly.coeff(k)));
    return out;
}

} // namespace

OutputFormat parse_format(const std::string& name) {
    if (name == "text") return OutputFormat::text;
    if (name == "json") return OutputFormat::json;
    if (name == "csv") return OutputFormat::csv;
    throw std::invalid_argument("unknown format \"" + name + "\" (expected text, json or csv)");
}

std::string format_compute(const ComputeResult& result, OutputFormat format) {
    switch (format) {
        case OutputFormat::text:
            return to_string(result.value) + "\n";
        case OutputFormat::json: {
            json j;
            j["delta"] = result.delta;
            j["d"] = result.d;
            j["pi"] = result.pi.str();
            j["value"] = to_string(result.value);
            return j.dump() + "\n";
        }
        case OutputFormat::csv:
            return "delta,d,pi,value\n" + std::to_string(result.delta) + "," + std::to_string(result.d) + "," +
                   csv_field(result.pi.str()) + "," + to_string(result.value) + "\n";
    }
    return {};
}

std::string format_polynomial(const PolynomialResult& result, OutputFormat format) {
    switch (format) {
        case OutputFormat::text:
            return result.poly.str("e") + "\n";
        case OutputFormat::json: {
            json j;
            j["delta"] = result.family.delta();
            j["tail"] = TangencyVector(result.family.tail()).str();
            j["e_min"] = result.e_min;
            j["samples"] = result.samples;
            j["degree"] = result.poly.degree();
            j["coefficients"] = coefficient_strings(result.poly);
            return j.dump() + "\n";
        }
        case OutputFormat::csv: {
            std::string out = "power,coefficient\n";
            for (int k = result.poly.degree(); k >= 0; --k)
                out += std::to_string(k) + "," + to_string(result.poly.coeff(k)) + "\n";
            return out;
        }
    }
    return {};
}

std::string format_table(const TableResult& result, OutputFormat format) {
    switch (format) {
        case OutputFormat::text: {
            // Column widths from the widest entry, one column per degree.
            std::vector<std::size_t> widths(static_cast<std::size_t>(result.d_max));
            for (int d = 1; d <= result.d_max; ++d) {
                std::size_t w = std::to_string(d).size();
                for (const auto& row : result.values)
                    w = std::max(w, to_string(row[static_cast<std::size_t>(d - 1)]).size());
                widths[static_cast<std::size_t>(d - 1)] = w;
            }
            std::ostringstream os;
            const std::string corner = "delta \\ d";
            os << corner;
            for (int d = 1; d <= result.d_max; ++d) {
                const std::string head = std::to_string(d);
                os << "  " << std::string(widths[static_cast<std::size_t>(d - 1)] - head.size(), ' ') << head;
            }
            os << "\n";
            for (int delta = 0; delta <= result.delta_max; ++delta) {
                const std::string label = std::to_string(delta);
                os << label << std::string(corner.size() - label.size(), ' ');
                for (int d = 1; d <= result.d_max; ++d) {
                    const std::string cell =
                        to_string(result.values[static_cast<std::size_t>(delta)][static_cast<std::size_t>(d - 1)]);
                    os << "  " << std::string(widths[static_cast<std::size_t>(d - 1)] - cell.size(), ' ') << cell;
                }
                os << "\n";
            }
            return os.str();
        }
        case OutputFormat::json: {
            json j;
            j["delta_max"] = result.delta_max;
            j["d_max"] = result.d_max;
            json rows = json::array();
            for (const auto& row : result.values) {
                json cells = json::array();
                for (const auto& value : row) cells.push_back(to_string(value));
                rows.push_back(std::move(cells));
            }
            j["values"] = std::move(rows);
            return j.dump() + "\n";
        }
        case OutputFormat::csv: {
            std::string out = "delta,d,pi,value\n";
            for (int delta = 0; delta <= result.delta_max; ++delta)
                for (int d = 1; d <= result.d_max; ++d)
                    out += std::to_string(delta) + "," + std::to_string(d) + ",[" + std::to_string(d) + "]," +
                           to_string(result.values[static_cast<std::size_t>(delta)][static_cast<std::size_t>(d - 1)]) +
                           "\n";
            return out;
        }
    }
    return {};
}

std::string format_verify(const VerificationReport& report, OutputFormat format) {
    switch (format) {
        case OutputFormat::text: {
            std::ostringstream os;
            os << "verification suite: " << suite_name(report.suite) << "\n";
            os << "checks:\n";
            for (const auto& entry : report.entries) {
                if (entry.advisory || entry.status == CheckStatus::info) continue;
                os << "  [" << to_string(entry.status) << "] " << entry.id << "\n";
                if (entry.status != CheckStatus::pass) {
                    os << "      expected: " << entry.expected << "\n";
                    os << "      actual:   " << entry.actual << "\n";
                    if (!entry.note.empty()) os << "      note:     " << entry.note << "\n";
                }
            }
            bool have_advisory = false;
            for (const auto& entry : report.entries) have_advisory |= entry.advisory;
            if (have_advisory) {
                os << "advisory (reported, never fails the suite):\n";
                for (const auto& entry : report.entries) {
                    if (!entry.advisory) continue;
                    os << "  [" << to_string(entry.status) << "] " << entry.id << "\n";
                    if (entry.status != CheckStatus::pass) {
                        os << "      quoted:   " << entry.expected << "\n";
                        os << "      computed: " << entry.actual << "\n";
                    }
                }
            }
            bool have_info = false;
            for (const auto& entry : report.entries) have_info |= entry.status == CheckStatus::info;
            if (have_info) {
                os << "info:\n";
                for (const auto& entry : report.entries) {
                    if (entry.status != CheckStatus::info) continue;
                    os << "  [info] " << entry.id << " = " << entry.actual << " (" << entry.note << ")\n";
                }
            }
            os << "totals: " << report.count(CheckStatus::pass) << " pass, " << report.count(CheckStatus::fail)
               << " fail, " << report.count(CheckStatus::advisory_mismatch) << " advisory-mismatch, "
               << report.count(CheckStatus::info) << " info\n";
            os << "engine: " << report.engine_stats.states << " states, " << report.engine_stats.hits
               << " memo hits, " << std::fixed << std::setprecision(2) << report.wall_seconds << " s\n";
            os << "result: " << (report.ok() ? "PASS" : "FAIL") << "\n";
            return os.str();
        }
        case OutputFormat::json: {
            // Canonical: no wall time, no hit counter (both vary run to run).
            json j;
            j["suite"] = suite_name(report.suite);
            j["ok"] = report.ok();
            j["states"] = report.engine_stats.states;
            json entries = json::array();
            for (const auto& entry : report.entries) {
                json e;
                e["id"] = entry.id;
                e["status"] = to_string(entry.status);
                e["expected"] = entry.expected;
                e["actual"] = entry.actual;
                e["note"] = entry.note;
                e["advisory"] = entry.advisory;
                entries.push_back(std::move(e));
            }
            j["entries"] = std::move(entries);
            json totals;
            totals["pass"] = report.count(CheckStatus::pass);
            totals["fail"] = report.count(CheckStatus::fail);
            totals["advisory_mismatch"] = report.count(CheckStatus::advisory_mismatch);
            totals["info"] = report.count(CheckStatus::info);
            j["totals"] = std::move(totals);
            return j.dump() + "\n";
        }
        case OutputFormat::csv: {
            std::string out = "id,status,expected,actual,note\n";
            for (const auto& entry : report.entries)
                out += csv_field(entry.id) + "," + to_string(entry.status) + "," + csv_field(entry.expected) + "," +
                       csv_field(entry.actual) + "," + csv_field(entry.note) + "\n";
            return out;
        }
    }
    return {};
}

namespace {

void trace_into(std::ostringstream& os, SeveriEngine& engine, const SeveriState& state, int level, int depth) {
    if (level >= depth || state.d < 2 || state.point_count() < 1) return;
    const Expansion expansion = expand_once(state);
    const std::string indent((static_cast<std::size_t>(level) + 1) * 2, ' ');
    for (const auto& term : expansion.terms) {
        os << indent << to_string(term.coefficient) << " x " << term.child.str() << " = "
           << to_string(engine.severi_number(term.child)) << "  ["
           << (term.kind == TermKind::fix_point ? "fix-point" : "degenerate") << "]\n";
        trace_into(os, engine, term.child, level + 1, depth);
    }
}

} // namespace

std::string format_trace(SeveriEngine& engine, const SeveriState& root, int depth) {
    if (depth < 1) throw std::invalid_argument("trace depth must be >= 1");
    root.validate();
    if (root.d < 2) throw std::invalid_argument("trace: a line (d=1) is a base case with no expansion");
    std::ostringstream os;
    os << root.str() << " = " << to_string(engine.severi_number(root)) << "\n";
    trace_into(os, engine, root, 0, depth);
    return os.str();
}

} // namespace severi
