#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace lob {

enum class OutputFormat { Json, Csv, Human };

/// Summary of one relation's absolute residuals across a suite.
struct ResidualEntry {
    std::string suite;
    std::string relation;
    std::size_t count = 0;
    double max_abs = 0.0;
    double mean_abs = 0.0;
    double p99_abs = 0.0;
    double tolerance = 0.0;
    bool pass = true;
    bool conjecture = false;  ///< reported only; never affects the verdict
};

struct ResidualReport {
    std::string suite;
    std::uint64_t seed = 0;
    std::size_t samples = 0;
    double tolerance = 0.0;
    std::vector<ResidualEntry> entries;
    double elapsed_seconds = 0.0;  ///< human format only, so machine output stays reproducible

    bool passed() const {
        return std::all_of(entries.begin(), entries.end(), [](const ResidualEntry& e) { return e.conjecture || e.pass; });
    }
};

/// Collects |residual| values for one relation.
class ResidualStats {
public:
    void add(double residual) { values_.push_back(std::fabs(residual)); }

    std::size_t size() const noexcept { return values_.size(); }

    ResidualEntry finish(std::string suite, std::string relation, double tolerance, bool conjecture = false) const {
        ResidualEntry e;
        e.suite = std::move(suite);
        e.relation = std::move(relation);
        e.count = values_.size();
        e.tolerance = tolerance;
        e.conjecture = conjecture;
        if (!values_.empty()) {
            std::vector<double> v = values_;
            std::sort(v.begin(), v.end());
            double sum = 0.0;
            for (double x : v) sum += x;
            e.max_abs = v.back();
            e.mean_abs = sum / static_cast<double>(v.size());
            const std::size_t rank = static_cast<std::size_t>(std::ceil(0.99 * static_cast<double>(v.size())));
            e.p99_abs = v[std::max<std::size_t>(rank, 1) - 1];
        }
        // NaN never passes
        e.pass = e.max_abs < tolerance;
        return e;
    }

private:
    std::vector<double> values_;
};

/// %.17g: enough digits to round-trip any double.
inline std::string format_real(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

inline std::string json_escape(std::string_view s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out;
}

inline std::string to_json(const ResidualReport& r) {
    std::ostringstream o;
    o << "{\"schema\":1,\"suite\":\"" << json_escape(r.suite) << "\",\"seed\":" << r.seed
      << ",\"samples\":" << r.samples << ",\"tolerance\":" << format_real(r.tolerance)
      << ",\"passed\":" << (r.passed() ? "true" : "false") << ",\"relations\":[";
    for (std::size_t i = 0; i < r.entries.size(); ++i) {
        const auto& e = r.entries[i];
        o << (i ? "," : "") << "{\"suite\":\"" << json_escape(e.suite) << "\",\"relation\":\""
          << json_escape(e.relation) << "\",\"count\":" << e.count << ",\"max_abs\":" << format_real(e.max_abs)
          << ",\"mean_abs\":" << format_real(e.mean_abs) << ",\"p99_abs\":" << format_real(e.p99_abs)
          << ",\"tolerance\":" << format_real(e.tolerance) << ",\"pass\":" << (e.pass ? "true" : "false")
          << ",\"conjecture\":" << (e.conjecture ? "true" : "false") << "}";
    }
    o << "]}\n";
    return o.str();
}

inline std::string to_csv(const ResidualReport& r) {
    std::ostringstream o;
    o << "suite,relation,count,max_abs,mean_abs,p99_abs,tolerance,pass,conjecture\n";
    for (const auto& e : r.entries)
        o << e.suite << ',' << e.relation << ',' << e.count << ',' << format_real(e.max_abs) << ','
          << format_real(e.mean_abs) << ',' << format_real(e.p99_abs) << ',' << format_real(e.tolerance) << ','
          << (e.pass ? "true" : "false") << ',' << (e.conjecture ? "true" : "false") << '\n';
    return o.str();
}

inline std::string to_human(const ResidualReport& r) {
    std::ostringstream o;
    char line[256];
    std::snprintf(line, sizeof line, "suite %s  seed %llu  samples %zu  tolerance %.3g\n", r.suite.c_str(),
                  static_cast<unsigned long long>(r.seed), r.samples, r.tolerance);
    o << line;
    for (const auto& e : r.entries) {
        const char* verdict = e.conjecture ? "note" : (e.pass ? "PASS" : "FAIL");
        std::snprintf(line, sizeof line, "  %-4s %-12s %-34s n=%-6zu max %.3e  mean %.3e  p99 %.3e  tol %.1e\n",
                      verdict, e.suite.c_str(), e.relation.c_str(), e.count, e.max_abs, e.mean_abs, e.p99_abs,
                      e.tolerance);
        o << line;
    }
    std::snprintf(line, sizeof line, "%s in %.2f s\n", r.passed() ? "passed" : "FAILED", r.elapsed_seconds);
    o << line;
    return o.str();
}

inline std::string render(const ResidualReport& r, OutputFormat f) {
    switch (f) {
        case OutputFormat::Json: return to_json(r);
        case OutputFormat::Csv: return to_csv(r);
        case OutputFormat::Human: break;
    }
    return to_human(r);
}

}  // namespace lob
