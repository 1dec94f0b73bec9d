#pragma once

#include <array>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "lobachevsky/lobachevsky.hpp"

namespace lobcli {

using lob::format_real;
using lob::OutputFormat;

enum ExitCode : int { ok = 0, verification_failed = 1, usage_error = 2, infeasible_input = 3 };

enum class SolveMode { Sss, Sas, Asa, Aaa };

inline const char* to_string(SolveMode m) {
    switch (m) {
        case SolveMode::Sss: return "sss";
        case SolveMode::Sas: return "sas";
        case SolveMode::Asa: return "asa";
        case SolveMode::Aaa: return "aaa";
    }
    return "unknown";
}

inline double degrees(double rad) { return rad * 180.0 / lob::pi; }

inline void write_error(std::ostream& out, std::ostream& err, OutputFormat fmt, const lob::Error& e) {
    if (fmt == OutputFormat::Json)
        out << "{\"schema\":1,\"error\":\"" << to_string(e.kind()) << "\",\"message\":\"" << lob::json_escape(e.what())
            << "\"}\n";
    err << "error: " << e.what() << '\n';
}

inline std::vector<std::pair<std::string, double>> solve_residuals(const lob::TriangleData& t) {
    std::vector<std::pair<std::string, double>> out;
    auto push = [&](const auto& rs) {
        for (const auto& r : rs) out.emplace_back(std::string(lob::to_string(r.relation)), r.residual);
    };
    switch (t.geometry.kind()) {
        case lob::GeometryKind::Spherical: push(lob::spherical_residuals(t)); break;
        case lob::GeometryKind::Hyperbolic: push(lob::hyperbolic_residuals(t)); break;
        case lob::GeometryKind::Euclidean: push(lob::euclidean_residuals(t)); break;
    }
    return out;
}

/// Values are (a, b, c) for sss, (b, A, c) for sas, (B, a, C) for asa and
/// (A, B, C) for aaa; angles in radians.
inline int cmd_solve(const lob::Curvature& geometry, SolveMode mode, const std::array<double, 3>& v, OutputFormat fmt,
                     std::ostream& out, std::ostream& err) {
    lob::TriangleData t;
    std::vector<std::pair<std::string, double>> residuals;
    try {
        switch (mode) {
            case SolveMode::Sss: t = lob::solve_from_sss(geometry, lob::Length(v[0]), lob::Length(v[1]), lob::Length(v[2])); break;
            case SolveMode::Sas: t = lob::solve_from_sas(geometry, lob::Length(v[0]), lob::Angle(v[1]), lob::Length(v[2])); break;
            case SolveMode::Asa: t = lob::solve_from_asa(geometry, lob::Angle(v[0]), lob::Length(v[1]), lob::Angle(v[2])); break;
            case SolveMode::Aaa: t = lob::solve_from_aaa(geometry, lob::Angle(v[0]), lob::Angle(v[1]), lob::Angle(v[2])); break;
        }
        residuals = solve_residuals(t);
    } catch (const lob::Error& e) {
        write_error(out, err, fmt, e);
        return infeasible_input;
    }
    const double excess = lob::angle_excess(t);
    const std::array<std::pair<const char*, double>, 7> elems{
        {{"a", t.a}, {"b", t.b}, {"c", t.c}, {"angle_a", t.A}, {"angle_b", t.B}, {"angle_c", t.C}, {"angle_excess", excess}}};

    switch (fmt) {
        case OutputFormat::Json: {
            out << "{\"schema\":1,\"geometry\":\"" << lob::to_string(geometry.kind()) << "\",\"curvature_scale\":"
                << (geometry.is_euclidean() ? std::string("null") : format_real(geometry.scale())) << ",\"mode\":\""
                << to_string(mode) << '"';
            for (const auto& [k, x] : elems) out << ",\"" << k << "\":" << format_real(x);
            out << ",\"residuals\":{";
            for (std::size_t i = 0; i < residuals.size(); ++i)
                out << (i ? "," : "") << '"' << residuals[i].first << "\":" << format_real(residuals[i].second);
            out << "}}\n";
            break;
        }
        case OutputFormat::Csv: {
            out << "geometry,mode";
            for (const auto& e : elems) out << ',' << e.first;
            for (const auto& r : residuals) out << ',' << r.first;
            out << '\n' << lob::to_string(geometry.kind()) << ',' << to_string(mode);
            for (const auto& e : elems) out << ',' << format_real(e.second);
            for (const auto& r : residuals) out << ',' << format_real(r.second);
            out << '\n';
            break;
        }
        case OutputFormat::Human: {
            char line[160];
            out << lob::to_string(geometry.kind()) << " triangle (" << to_string(mode) << ")\n";
            for (int i = 0; i < 3; ++i) {
                std::snprintf(line, sizeof line, "  %-7s %.15g\n", elems[i].first, elems[i].second);
                out << line;
            }
            for (int i = 3; i < 7; ++i) {
                std::snprintf(line, sizeof line, "  %-12s %.15g rad  (%.10g deg)\n", elems[i].first, elems[i].second,
                              degrees(elems[i].second));
                out << line;
            }
            out << "residuals\n";
            for (const auto& [name, r] : residuals) {
                std::snprintf(line, sizeof line, "  %-18s %.3e\n", name.c_str(), r);
                out << line;
            }
            break;
        }
    }
    return ok;
}

/// Rows (p, Pi(p)) on a uniform grid from p_min to p_max inclusive.
inline int cmd_parallelism_curve(const lob::Curvature& geometry, double p_min, double p_max, int steps,
                                 OutputFormat fmt, std::ostream& out, std::ostream& err) {
    if (!(p_min >= 0.0 && p_min < p_max && std::isfinite(p_max)) || steps < 2) {
        err << "error: usage: need 0 <= p_min < p_max and steps >= 2\n";
        return usage_error;
    }
    std::vector<std::pair<double, double>> rows;
    try {
        for (int i = 0; i < steps; ++i) {
            // the last row lands exactly on p_max
            const double p = i == steps - 1 ? p_max : p_min + (p_max - p_min) * i / (steps - 1);
            rows.emplace_back(p, lob::parallelism_angle(lob::Length(p), geometry).value);
        }
    } catch (const lob::Error& e) {
        write_error(out, err, fmt, e);
        return infeasible_input;
    }
    switch (fmt) {
        case OutputFormat::Csv:
            out << "p,parallelism_angle\n";
            for (const auto& [p, a] : rows) out << format_real(p) << ',' << format_real(a) << '\n';
            break;
        case OutputFormat::Json:
            out << "{\"schema\":1,\"curvature_scale\":" << format_real(geometry.scale()) << ",\"rows\":[";
            for (std::size_t i = 0; i < rows.size(); ++i)
                out << (i ? "," : "") << "{\"p\":" << format_real(rows[i].first)
                    << ",\"parallelism_angle\":" << format_real(rows[i].second) << '}';
            out << "]}\n";
            break;
        case OutputFormat::Human: {
            char line[128];
            out << "         p    angle of parallelism (rad)        (deg)\n";
            for (const auto& [p, a] : rows) {
                std::snprintf(line, sizeof line, "%10.6g    %.17g    %.10g\n", p, a, degrees(a));
                out << line;
            }
            break;
        }
    }
    return ok;
}

inline int cmd_verify(lob::Suite suite, const lob::SuiteConfig& cfg, std::ostream& out, std::ostream& err) {
    lob::ResidualReport report;
    try {
        report = lob::run_suite(suite, cfg);
    } catch (const lob::Error& e) {
        write_error(out, err, cfg.format, e);
        return e.kind() == lob::ErrorKind::Precondition ? usage_error : verification_failed;
    }
    out << lob::render(report, cfg.format);
    return report.passed() ? ok : verification_failed;
}

}  // namespace lobcli
