#include "tripleint/report.hpp"

#include <cstdio>
#include <iomanip>

#include <json.hpp>

#include "tripleint/errors.hpp"

namespace tripleint {

ReportFormat parse_format(const std::string& name) {
    if (name == "json") return ReportFormat::json;
    if (name == "csv") return ReportFormat::csv;
    if (name == "text") return ReportFormat::text;
    throw ConfigError("unknown report format: " + name);
}

std::string render_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

namespace {

std::string render_error(const std::optional<double>& e) {
    return e ? render_double(*e) : "exact";
}

std::string params_flat(const VerificationReport& r) {
    std::string s;
    for (const auto& [k, v] : r.parameters) {
        if (!s.empty()) s += ";";
        s += k + "=" + v;
    }
    return s;
}

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

void emit_json(const std::vector<VerificationReport>& reports, std::ostream& out,
               bool timings) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : reports) {
        nlohmann::ordered_json j;
        j["identity_id"] = r.identity_id;
        nlohmann::ordered_json params = nlohmann::ordered_json::object();
        for (const auto& [k, v] : r.parameters) params[k] = v;
        j["parameters"] = params;
        j["lhs"] = r.lhs;
        j["rhs"] = r.rhs;
        j["abs_error"] = r.abs_error ? nlohmann::ordered_json(render_double(*r.abs_error))
                                     : nlohmann::ordered_json("exact");
        j["rel_error"] = r.rel_error ? nlohmann::ordered_json(render_double(*r.rel_error))
                                     : nlohmann::ordered_json("exact");
        if (r.tail_bound)
            j["tail_bound"] = render_double(*r.tail_bound);
        else
            j["tail_bound"] = nullptr;
        j["pass"] = r.pass;
        j["runtime_ms"] = timings ? r.runtime_ms : 0;
        arr.push_back(std::move(j));
    }
    out << arr.dump(2) << "\n";
}

void emit_csv(const std::vector<VerificationReport>& reports, std::ostream& out,
              bool timings) {
    out << "identity_id,parameters,lhs,rhs,abs_error,rel_error,tail_bound,pass,runtime_ms\n";
    for (const auto& r : reports) {
        out << csv_quote(r.identity_id) << "," << csv_quote(params_flat(r)) << ","
            << csv_quote(r.lhs) << "," << csv_quote(r.rhs) << ","
            << render_error(r.abs_error) << "," << render_error(r.rel_error) << ","
            << (r.tail_bound ? render_double(*r.tail_bound) : "") << ","
            << (r.pass ? "true" : "false") << "," << (timings ? r.runtime_ms : 0) << "\n";
    }
}

void emit_text(const std::vector<VerificationReport>& reports, std::ostream& out,
               bool timings) {
    std::size_t id_w = 10, par_w = 10;
    for (const auto& r : reports) {
        id_w = std::max(id_w, r.identity_id.size());
        par_w = std::max(par_w, params_flat(r).size());
    }
    for (const auto& r : reports) {
        out << (r.pass ? "PASS " : "FAIL ") << std::left << std::setw(static_cast<int>(id_w))
            << r.identity_id << "  " << std::setw(static_cast<int>(par_w)) << params_flat(r)
            << "  rel_error=" << render_error(r.rel_error);
        if (r.tail_bound) out << "  tail=" << render_double(*r.tail_bound);
        if (timings) out << "  " << r.runtime_ms << "ms";
        out << "\n";
    }
}

} // namespace

void emit_report(const std::vector<VerificationReport>& reports, ReportFormat format,
                 std::ostream& out, bool include_timings) {
    switch (format) {
        case ReportFormat::json: emit_json(reports, out, include_timings); break;
        case ReportFormat::csv: emit_csv(reports, out, include_timings); break;
        case ReportFormat::text: emit_text(reports, out, include_timings); break;
    }
    if (!out) throw std::runtime_error("report emission failed: output stream error");
}

} // namespace tripleint
